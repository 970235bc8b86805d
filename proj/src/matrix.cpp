#include "liegauge/matrix.hpp"

#include "liegauge/error.hpp"

namespace liegauge {

TrigMatrix TrigMatrix::identity(std::size_t n) {
  TrigMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = TrigScalar(1);
  return m;
}

TrigMatrix TrigMatrix::from_rows(std::vector<std::vector<TrigScalar>> rows) {
  TrigMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw DimensionError("matrix rows must form a square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = std::move(rows[r][c]);
  }
  return m;
}

bool TrigMatrix::is_zero() const {
  for (const auto& cell : cells_)
    if (!cell.is_zero()) return false;
  return true;
}

TrigMatrix TrigMatrix::operator-() const {
  TrigMatrix out(n_);
  for (std::size_t k = 0; k < cells_.size(); ++k) out.cells_[k] = -cells_[k];
  return out;
}

TrigMatrix& TrigMatrix::operator+=(const TrigMatrix& o) {
  if (n_ != o.n_) throw DimensionError("matrix size mismatch");
  for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += o.cells_[k];
  return *this;
}

TrigMatrix& TrigMatrix::operator-=(const TrigMatrix& o) {
  if (n_ != o.n_) throw DimensionError("matrix size mismatch");
  for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] -= o.cells_[k];
  return *this;
}

TrigMatrix operator*(const TrigMatrix& a, const TrigMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix size mismatch");
  TrigMatrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < a.n_; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

TrigMatrix operator*(const TrigScalar& s, const TrigMatrix& m) {
  TrigMatrix out(m.n_);
  for (std::size_t k = 0; k < m.cells_.size(); ++k) out.cells_[k] = s * m.cells_[k];
  return out;
}

TrigMatrix TrigMatrix::transpose() const {
  TrigMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

TrigMatrix TrigMatrix::conj() const {
  TrigMatrix out(n_);
  for (std::size_t k = 0; k < cells_.size(); ++k) out.cells_[k] = cells_[k].conj();
  return out;
}

TrigMatrix TrigMatrix::specialize(const TrigScalar& cos_value, const TrigScalar& sin_value) const {
  TrigMatrix out(n_);
  for (std::size_t k = 0; k < cells_.size(); ++k)
    out.cells_[k] = cells_[k].specialize(cos_value, sin_value);
  return out;
}

TrigMatrix commutator(const TrigMatrix& a, const TrigMatrix& b) {
  return a * b - b * a;
}

TrigScalar trace(const TrigMatrix& m) {
  TrigScalar acc;
  for (std::size_t k = 0; k < m.size(); ++k) acc += m(k, k);
  return acc;
}

namespace {

TrigScalar det_minor(const TrigMatrix& m, std::vector<std::size_t>& rows, std::size_t col0) {
  if (rows.size() == 1) return m(rows[0], col0);
  TrigScalar acc;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const TrigScalar& pivot = m(rows[k], col0);
    if (pivot.is_zero()) continue;
    std::size_t saved = rows[k];
    rows.erase(rows.begin() + k);
    TrigScalar sub = pivot * det_minor(m, rows, col0 + 1);
    rows.insert(rows.begin() + k, saved);
    if (k % 2) acc -= sub;
    else acc += sub;
  }
  return acc;
}

}  // namespace

TrigScalar determinant(const TrigMatrix& m) {
  if (m.size() == 0) return TrigScalar(1);
  std::vector<std::size_t> rows(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) rows[k] = k;
  return det_minor(m, rows, 0);
}

TrigMatrix inverse(const TrigMatrix& m) {
  TrigScalar det = determinant(m);
  auto det_inv = det.unit_inverse();
  if (!det_inv)
    throw NotInvertibleError("determinant '" + det.str() + "' is not a unit");
  std::size_t n = m.size();
  TrigMatrix out(n);
  if (n == 1) {
    out(0, 0) = *det_inv;
    return out;
  }
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      rows.clear();
      cols.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != r) rows.push_back(k);
        if (k != c) cols.push_back(k);
      }
      TrigMatrix sub(n - 1);
      for (std::size_t rr = 0; rr < n - 1; ++rr)
        for (std::size_t cc = 0; cc < n - 1; ++cc) sub(rr, cc) = m(rows[rr], cols[cc]);
      TrigScalar cof = determinant(sub);
      if ((r + c) % 2) cof = -cof;
      out(c, r) = cof * *det_inv;  // adjugate transposes
    }
  }
  return out;
}

bool is_symmetric(const TrigMatrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = r + 1; c < m.size(); ++c)
      if (!(m(r, c) == m(c, r))) return false;
  return true;
}

}  // namespace liegauge
