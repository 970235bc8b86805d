#include "liegauge/lie_algebra.hpp"

#include "liegauge/error.hpp"

namespace liegauge {

std::optional<std::size_t> StructureConstants::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] == label) return k;
  return std::nullopt;
}

void StructureConstants::set(std::size_t a, std::size_t b, std::size_t c,
                             const TrigScalar& value) {
  if (a >= dim() || b >= dim() || c >= dim())
    throw DimensionError("structure constant index out of range");
  if (a == b) {
    if (!value.is_zero()) throw DimensionError("f^c_{aa} must vanish");
    return;
  }
  Key key = a < b ? Key{a, b, c} : Key{b, a, c};
  TrigScalar stored = a < b ? value : -value;
  if (stored.is_zero()) entries_.erase(key);
  else entries_[key] = std::move(stored);
}

TrigScalar StructureConstants::get(std::size_t a, std::size_t b, std::size_t c) const {
  if (a >= dim() || b >= dim() || c >= dim())
    throw DimensionError("structure constant index out of range");
  if (a == b) return {};
  Key key = a < b ? Key{a, b, c} : Key{b, a, c};
  auto it = entries_.find(key);
  if (it == entries_.end()) return {};
  return a < b ? it->second : -it->second;
}

StructureConstants StructureConstants::specialize(const TrigScalar& cos_value,
                                                  const TrigScalar& sin_value) const {
  StructureConstants out(labels_);
  for (const auto& [key, value] : entries_) {
    auto [a, b, c] = key;
    out.set(a, b, c, value.specialize(cos_value, sin_value));
  }
  return out;
}

StructureConstants StructureConstants::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != dim()) throw DimensionError("label count mismatch");
  StructureConstants out = *this;
  out.labels_ = std::move(labels);
  return out;
}

Representation Representation::specialize(const TrigScalar& cos_value,
                                          const TrigScalar& sin_value) const {
  Representation out{labels, {}};
  out.matrices.reserve(matrices.size());
  for (const auto& m : matrices) out.matrices.push_back(m.specialize(cos_value, sin_value));
  return out;
}

BasisTransform BasisTransform::from_matrix(TrigMatrix m) {
  TrigMatrix inv = inverse(m);  // throws NotInvertibleError when singular
  return BasisTransform{std::move(m), std::move(inv)};
}

JacobiReport jacobi_check(const StructureConstants& sc) {
  JacobiReport report;
  std::size_t n = sc.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t l = 0; l < n; ++l) {
          TrigScalar acc;
          for (std::size_t m = 0; m < n; ++m) {
            acc += sc.get(a, b, m) * sc.get(m, c, l);
            acc += sc.get(b, c, m) * sc.get(m, a, l);
            acc += sc.get(c, a, m) * sc.get(m, b, l);
          }
          if (!acc.is_zero()) {
            report.pass = false;
            report.violations.push_back({a, b, c, l, std::move(acc)});
          }
        }
  return report;
}

KillingForm killing_form(const StructureConstants& sc) {
  std::size_t n = sc.dim();
  TrigMatrix g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      TrigScalar acc;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) acc += sc.get(a, d, c) * sc.get(b, c, d);
      g(a, b) = std::move(acc);
    }
  TrigScalar det = determinant(g);
  return {std::move(g), std::move(det)};
}

Representation adjoint_rep(const StructureConstants& sc) {
  std::size_t n = sc.dim();
  Representation rep{sc.labels(), {}};
  rep.matrices.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    TrigMatrix m(n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) m(b, c) = sc.get(a, c, b);
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

std::vector<TrigScalar> adjoint_action(const StructureConstants& sc, std::size_t a,
                                       const std::vector<TrigScalar>& v) {
  std::size_t n = sc.dim();
  if (a >= n || v.size() != n) throw DimensionError("adjoint_action index/vector mismatch");
  std::vector<TrigScalar> out(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) out[b] += sc.get(a, c, b) * v[c];
  return out;
}

RepReport rep_check(const StructureConstants& sc, const Representation& rep) {
  RepReport report;
  std::size_t n = sc.dim();
  if (rep.dim() != n) throw DimensionError("representation dimension mismatch");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      TrigMatrix residual = commutator(rep.matrices[a], rep.matrices[b]);
      for (std::size_t c = 0; c < n; ++c) {
        TrigScalar f = sc.get(a, b, c);
        if (!f.is_zero()) residual -= f * rep.matrices[c];
      }
      if (!residual.is_zero()) {
        report.pass = false;
        report.violations.push_back({a, b, std::move(residual)});
      }
    }
  return report;
}

StructureConstants transform_constants(const StructureConstants& sc, const BasisTransform& t) {
  std::size_t n = sc.dim();
  if (t.forward.size() != n) throw DimensionError("transform size mismatch");
  StructureConstants out(sc.labels());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        TrigScalar acc;
        for (const auto& [key, f] : sc.entries()) {
          auto [d, e, g] = key;
          // antisymmetric pair (d,e) and (e,d) in one pass
          acc += (t.forward(a, d) * t.forward(b, e) - t.forward(a, e) * t.forward(b, d)) * f *
                 t.backward(g, c);
        }
        out.set(a, b, c, acc);
      }
  return out;
}

Representation transform_rep(const Representation& rep, const BasisTransform& t) {
  std::size_t n = rep.dim();
  if (t.forward.size() != n) throw DimensionError("transform size mismatch");
  Representation out{rep.labels, {}};
  out.matrices.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    TrigMatrix m(rep.carrier_dim());
    for (std::size_t d = 0; d < n; ++d) {
      if (t.forward(a, d).is_zero()) continue;
      m += t.forward(a, d) * rep.matrices[d];
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

RepComparison reps_equal(const Representation& x, const Representation& y) {
  if (x.dim() != y.dim())
    return {false, "algebra dimensions differ (" + std::to_string(x.dim()) + " vs " +
                       std::to_string(y.dim()) + ")"};
  if (x.carrier_dim() != y.carrier_dim())
    return {false, "carrier dimensions differ (" + std::to_string(x.carrier_dim()) + " vs " +
                       std::to_string(y.carrier_dim()) + ")"};
  for (std::size_t a = 0; a < x.dim(); ++a)
    for (std::size_t r = 0; r < x.carrier_dim(); ++r)
      for (std::size_t c = 0; c < x.carrier_dim(); ++c)
        if (!(x.matrices[a](r, c) == y.matrices[a](r, c)))
          return {false, "generator " + std::to_string(a) + " entry (" + std::to_string(r) +
                             "," + std::to_string(c) + "): " + x.matrices[a](r, c).str() +
                             " vs " + y.matrices[a](r, c).str()};
  return {true, ""};
}

}  // namespace liegauge
