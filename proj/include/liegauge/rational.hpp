#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "liegauge/error.hpp"

namespace liegauge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q", minus sign allowed on the numerator only.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational on canonical forms: "3", "-1/2", "0".
std::string rational_str(const Rational& r);

// Element of Q(i). Exact complex rationals; the coefficient field for
// everything trigonometric in this library.
struct GaussRational {
  Rational re{};
  Rational im{};

  GaussRational() = default;
  GaussRational(Rational re, Rational im = 0) : re(std::move(re)), im(std::move(im)) {}
  GaussRational(int v) : re(v) {}

  static GaussRational i() { return GaussRational(0, 1); }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational conj() const { return {re, -im}; }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }

  GaussRational inverse() const {
    if (is_zero()) throw NotInvertibleError("division by zero in Q(i)");
    Rational n = re * re + im * im;
    return {re / n, -im / n};
  }

  bool operator==(const GaussRational&) const = default;
};

}  // namespace liegauge
