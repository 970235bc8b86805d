#include "liegauge/trig_scalar.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace liegauge {

TrigScalar TrigScalar::term(GaussRational coeff, unsigned cos_pow, unsigned sin_pow,
                            unsigned sqrt2_pow, unsigned sqrt3_pow) {
  TrigScalar out;
  // Feed through multiplication so non-normal exponents reduce on entry.
  out.add(TrigKey{cos_pow, 0, 0, 0}, std::move(coeff));
  if (sin_pow) out *= sin().pow(sin_pow);
  if (sqrt2_pow) out *= sqrt2().pow(sqrt2_pow);
  if (sqrt3_pow) out *= sqrt3().pow(sqrt3_pow);
  return out;
}

void TrigScalar::add(const TrigKey& key, const GaussRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool TrigScalar::is_constant() const {
  for (const auto& [k, q] : terms_)
    if (k.cos_pow || k.sin_pow) return false;
  return true;
}

TrigScalar TrigScalar::operator-() const {
  TrigScalar out;
  for (const auto& [k, q] : terms_) out.terms_.emplace(k, -q);
  return out;
}

TrigScalar& TrigScalar::operator+=(const TrigScalar& o) {
  for (const auto& [k, q] : o.terms_) add(k, q);
  return *this;
}

TrigScalar& TrigScalar::operator-=(const TrigScalar& o) {
  for (const auto& [k, q] : o.terms_) add(k, -q);
  return *this;
}

TrigScalar operator*(const TrigScalar& a, const TrigScalar& b) {
  TrigScalar out;
  for (const auto& [ka, qa] : a.terms_) {
    for (const auto& [kb, qb] : b.terms_) {
      GaussRational q = qa * qb;
      TrigKey k;
      k.cos_pow = ka.cos_pow + kb.cos_pow;
      unsigned s2 = ka.sqrt2_pow + kb.sqrt2_pow;
      unsigned s3 = ka.sqrt3_pow + kb.sqrt3_pow;
      if (s2 == 2) { q *= GaussRational(2); s2 = 0; }
      if (s3 == 2) { q *= GaussRational(3); s3 = 0; }
      k.sqrt2_pow = s2;
      k.sqrt3_pow = s3;
      if (ka.sin_pow + kb.sin_pow == 2) {
        // sin^2 -> 1 - cos^2
        out.add(k, q);
        TrigKey khi = k;
        khi.cos_pow += 2;
        out.add(khi, -q);
      } else {
        k.sin_pow = ka.sin_pow + kb.sin_pow;
        out.add(k, q);
      }
    }
  }
  return out;
}

TrigScalar& TrigScalar::operator*=(const TrigScalar& o) { return *this = *this * o; }

TrigScalar TrigScalar::conj() const {
  TrigScalar out;
  for (const auto& [k, q] : terms_) out.terms_.emplace(k, q.conj());
  return out;
}

TrigScalar TrigScalar::pow(unsigned k) const {
  TrigScalar out(1);
  for (unsigned j = 0; j < k; ++j) out *= *this;
  return out;
}

std::complex<double> TrigScalar::eval(double theta) const {
  std::complex<double> acc{0.0, 0.0};
  double c = std::cos(theta);
  double s = std::sin(theta);
  for (const auto& [k, q] : terms_) {
    double mag = std::pow(c, static_cast<int>(k.cos_pow));
    if (k.sin_pow) mag *= s;
    if (k.sqrt2_pow) mag *= std::numbers::sqrt2;
    if (k.sqrt3_pow) mag *= std::numbers::sqrt3;
    acc += std::complex<double>(q.re.convert_to<double>(), q.im.convert_to<double>()) * mag;
  }
  return acc;
}

TrigScalar TrigScalar::specialize(const TrigScalar& cos_value, const TrigScalar& sin_value) const {
  if (!cos_value.is_constant() || !sin_value.is_constant())
    throw DimensionError("specialize: cos/sin images must be angle-free");
  if (!(cos_value * cos_value + sin_value * sin_value == TrigScalar(1)))
    throw DimensionError("specialize: images must satisfy cos^2 + sin^2 = 1");
  TrigScalar out;
  for (const auto& [k, q] : terms_) {
    out += TrigScalar(q) * term(1, 0, 0, k.sqrt2_pow, k.sqrt3_pow) *
           cos_value.pow(k.cos_pow) * sin_value.pow(k.sin_pow);
  }
  return out;
}

std::optional<TrigScalar> TrigScalar::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [k, q] = *terms_.begin();
  if (k.cos_pow || k.sin_pow) return std::nullopt;
  // (q * sqrt2^a * sqrt3^b)^-1 = q^-1 / (2^a 3^b) * sqrt2^a * sqrt3^b
  GaussRational inv = q.inverse();
  if (k.sqrt2_pow) inv *= GaussRational(Rational(1, 2));
  if (k.sqrt3_pow) inv *= GaussRational(Rational(1, 3));
  TrigScalar out;
  out.terms_.emplace(k, inv);
  return out;
}

namespace {

// Display form of a coefficient already made sign-positive by the caller.
std::string coeff_str(const GaussRational& q) {
  auto imag_part = [](const Rational& im) {
    if (im == 1) return std::string("i");
    return rational_str(im) + "i";
  };
  if (q.im == 0) return rational_str(q.re);
  if (q.re == 0) return imag_part(q.im);
  Rational im_abs = q.im < 0 ? Rational(-q.im) : q.im;
  return "(" + rational_str(q.re) + (q.im < 0 ? "-" : "+") + imag_part(im_abs) + ")";
}

}  // namespace

std::string TrigScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, q] : terms_) {
    bool neg = (q.re != 0) ? (q.re < 0) : (q.im < 0);
    GaussRational mag = neg ? -q : q;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string atoms;
    auto push = [&atoms](std::string a) {
      if (!atoms.empty()) atoms += "*";
      atoms += std::move(a);
    };
    if (k.cos_pow == 1) push("cos");
    else if (k.cos_pow > 1) push("cos^" + std::to_string(k.cos_pow));
    if (k.sin_pow) push("sin");
    if (k.sqrt2_pow) push("sqrt2");
    if (k.sqrt3_pow) push("sqrt3");
    if (atoms.empty()) {
      out += coeff_str(mag);
    } else if (mag.re == 1 && mag.im == 0) {
      out += atoms;
    } else {
      out += coeff_str(mag) + "*" + atoms;
    }
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }
};

bool at_digit(const Cursor& c) { return std::isdigit(static_cast<unsigned char>(c.peek())); }

Integer parse_digits(Cursor& c) {
  if (!at_digit(c)) c.fail("expected digits");
  std::size_t start = c.pos;
  while (at_digit(c)) ++c.pos;
  return Integer(std::string(c.text.substr(start, c.pos - start)));
}

Rational parse_number(Cursor& c) {
  Integer num = parse_digits(c);
  if (c.peek() == '/') {
    ++c.pos;
    Integer den = parse_digits(c);
    if (den == 0) c.fail("zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

bool at_imag_unit(const Cursor& c) {
  if (c.peek() != 'i') return false;
  char next = c.pos + 1 < c.text.size() ? c.text[c.pos + 1] : '\0';
  return !std::isalnum(static_cast<unsigned char>(next));
}

// The inside of a parenthesised coefficient: one or two signed parts, each a
// rational optionally tagged 'i' (the rational may be omitted before 'i').
GaussRational parse_paren_coeff(Cursor& c) {
  GaussRational acc;
  for (int part = 0; part < 2; ++part) {
    c.skip_ws();
    bool neg = false;
    if (c.consume('-')) neg = true;
    else if (part > 0) c.consume('+');
    c.skip_ws();
    Rational mag = 1;
    bool have_mag = false;
    if (at_digit(c)) {
      mag = parse_number(c);
      have_mag = true;
    }
    if (at_imag_unit(c)) {
      ++c.pos;
      acc += GaussRational(0, neg ? -mag : mag);
    } else if (have_mag) {
      acc += GaussRational(neg ? -mag : mag);
    } else {
      c.fail("expected number or 'i'");
    }
    c.skip_ws();
    if (c.peek() != '+' && c.peek() != '-') break;
  }
  if (!c.consume(')')) c.fail("expected ')'");
  return acc;
}

unsigned parse_exponent(Cursor& c) {
  std::size_t mark = c.pos;
  c.skip_ws();
  if (!c.consume('^')) {
    c.pos = mark;
    return 1;
  }
  c.skip_ws();
  Integer e = parse_digits(c);
  if (e < 0 || e > 64) c.fail("exponent out of range");
  return e.convert_to<unsigned>();
}

TrigScalar parse_factor(Cursor& c) {
  if (c.consume('(')) return TrigScalar(parse_paren_coeff(c));
  if (at_digit(c)) {
    Rational mag = parse_number(c);
    if (at_imag_unit(c)) {
      ++c.pos;
      return TrigScalar(GaussRational(0, mag));
    }
    return TrigScalar(GaussRational(mag));
  }
  if (at_imag_unit(c)) {
    ++c.pos;
    return TrigScalar::i();
  }
  if (c.consume_word("cos")) return TrigScalar::cos().pow(parse_exponent(c));
  if (c.consume_word("sqrt2")) return TrigScalar::sqrt2().pow(parse_exponent(c));
  if (c.consume_word("sqrt3")) return TrigScalar::sqrt3().pow(parse_exponent(c));
  if (c.consume_word("sin")) return TrigScalar::sin().pow(parse_exponent(c));
  c.fail("expected coefficient or atom");
}

TrigScalar parse_term(Cursor& c) {
  TrigScalar acc = parse_factor(c);
  while (true) {
    std::size_t mark = c.pos;
    c.skip_ws();
    if (!c.consume('*')) {
      c.pos = mark;
      return acc;
    }
    c.skip_ws();
    acc *= parse_factor(c);
  }
}

}  // namespace

TrigScalar TrigScalar::parse(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.eof()) c.fail("empty scalar");
  TrigScalar acc;
  bool neg = c.consume('-');
  if (!neg) c.consume('+');
  c.skip_ws();
  TrigScalar t = parse_term(c);
  acc += neg ? -t : t;
  while (true) {
    c.skip_ws();
    if (c.eof()) return acc;
    if (c.consume('-')) neg = true;
    else if (c.consume('+')) neg = false;
    else c.fail("expected '+' or '-'");
    c.skip_ws();
    t = parse_term(c);
    acc += neg ? -t : t;
  }
}

}  // namespace liegauge
