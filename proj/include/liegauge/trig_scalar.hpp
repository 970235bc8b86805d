#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "liegauge/rational.hpp"

namespace liegauge {

// One monomial's exponents: cos^k * sin^e * sqrt2^a * sqrt3^b. Normal form
// keeps sin_pow <= 1 (sin^2 -> 1 - cos^2) and each radical flag <= 1
// (sqrt2^2 -> 2, sqrt3^2 -> 3, and sqrt2*sqrt3 stays as the sqrt6 monomial).
// Ordering puts pure-cos terms first so sums print as A(cos) + B(cos)*sin.
struct TrigKey {
  unsigned cos_pow = 0;
  unsigned sin_pow = 0;
  unsigned sqrt2_pow = 0;
  unsigned sqrt3_pow = 0;

  friend auto operator<=>(const TrigKey& a, const TrigKey& b) {
    return std::tie(a.sin_pow, a.cos_pow, a.sqrt2_pow, a.sqrt3_pow) <=>
           std::tie(b.sin_pow, b.cos_pow, b.sqrt2_pow, b.sqrt3_pow);
  }
  friend bool operator==(const TrigKey&, const TrigKey&) = default;
};

// Element of Q(i)[cos, sin] / (sin^2 + cos^2 - 1), extended by sqrt2 and
// sqrt3. Always held in normal form, so operator== is exact ring equality.
class TrigScalar {
 public:
  TrigScalar() = default;  // zero
  TrigScalar(int v) { add(TrigKey{}, GaussRational(v)); }
  explicit TrigScalar(GaussRational coeff) { add(TrigKey{}, std::move(coeff)); }

  static TrigScalar term(GaussRational coeff, unsigned cos_pow, unsigned sin_pow = 0,
                         unsigned sqrt2_pow = 0, unsigned sqrt3_pow = 0);
  static TrigScalar i() { return TrigScalar(GaussRational::i()); }
  // The four atoms are normal forms already, so they bypass term().
  static TrigScalar cos() { return atom({1, 0, 0, 0}); }
  static TrigScalar sin() { return atom({0, 1, 0, 0}); }
  static TrigScalar sqrt2() { return atom({0, 0, 1, 0}); }
  static TrigScalar sqrt3() { return atom({0, 0, 0, 1}); }

  bool is_zero() const { return terms_.empty(); }
  // True when the value does not depend on the angle.
  bool is_constant() const;
  const std::map<TrigKey, GaussRational>& terms() const { return terms_; }

  TrigScalar operator-() const;
  TrigScalar& operator+=(const TrigScalar& o);
  TrigScalar& operator-=(const TrigScalar& o);
  TrigScalar& operator*=(const TrigScalar& o);
  friend TrigScalar operator+(TrigScalar a, const TrigScalar& b) { return a += b; }
  friend TrigScalar operator-(TrigScalar a, const TrigScalar& b) { return a -= b; }
  friend TrigScalar operator*(const TrigScalar& a, const TrigScalar& b);

  bool operator==(const TrigScalar&) const = default;

  TrigScalar conj() const;
  TrigScalar pow(unsigned k) const;

  std::complex<double> eval(double theta) const;

  // Ring map sending cos -> cos_value, sin -> sin_value. Both images must be
  // angle-free and satisfy cos^2 + sin^2 = 1, otherwise DimensionError.
  TrigScalar specialize(const TrigScalar& cos_value, const TrigScalar& sin_value) const;

  // Exact inverse for units: a single angle-free term. Empty otherwise.
  std::optional<TrigScalar> unit_inverse() const;

  std::string str() const;
  static TrigScalar parse(std::string_view text);

 private:
  void add(const TrigKey& key, const GaussRational& coeff);
  static TrigScalar atom(const TrigKey& key) {
    TrigScalar s;
    s.add(key, GaussRational(1));
    return s;
  }
  // terms_ maps exponent tuples to nonzero coefficients; absence means zero.
  std::map<TrigKey, GaussRational> terms_;
};

}  // namespace liegauge
