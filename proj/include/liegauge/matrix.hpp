#pragma once

#include <cstddef>
#include <vector>

#include "liegauge/trig_scalar.hpp"

namespace liegauge {

// Dense square matrix over the trig scalar ring.
class TrigMatrix {
 public:
  TrigMatrix() = default;
  explicit TrigMatrix(std::size_t n) : n_(n), cells_(n * n) {}
  static TrigMatrix identity(std::size_t n);
  static TrigMatrix from_rows(std::vector<std::vector<TrigScalar>> rows);

  std::size_t size() const { return n_; }
  TrigScalar& operator()(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
  const TrigScalar& operator()(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

  bool is_zero() const;

  TrigMatrix operator-() const;
  TrigMatrix& operator+=(const TrigMatrix& o);
  TrigMatrix& operator-=(const TrigMatrix& o);
  friend TrigMatrix operator+(TrigMatrix a, const TrigMatrix& b) { return a += b; }
  friend TrigMatrix operator-(TrigMatrix a, const TrigMatrix& b) { return a -= b; }
  friend TrigMatrix operator*(const TrigMatrix& a, const TrigMatrix& b);
  friend TrigMatrix operator*(const TrigScalar& s, const TrigMatrix& m);

  bool operator==(const TrigMatrix&) const = default;

  TrigMatrix transpose() const;
  TrigMatrix conj() const;
  TrigMatrix specialize(const TrigScalar& cos_value, const TrigScalar& sin_value) const;

 private:
  std::size_t n_ = 0;
  std::vector<TrigScalar> cells_;
};

TrigMatrix commutator(const TrigMatrix& a, const TrigMatrix& b);
TrigScalar trace(const TrigMatrix& m);

// Cofactor expansion: exponential in n but exact, and nothing here exceeds 9x9.
TrigScalar determinant(const TrigMatrix& m);

// Adjugate divided by det; requires det to be a unit of the ring
// (single angle-free term), else NotInvertibleError.
TrigMatrix inverse(const TrigMatrix& m);

bool is_symmetric(const TrigMatrix& m);

}  // namespace liegauge
