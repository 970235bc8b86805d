#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "liegauge/matrix.hpp"

namespace liegauge {

// Structure constants f^c_{ab} of an n-dimensional algebra, sparse and stored
// only for a < b; the a > b half is implied by antisymmetry, so the storage
// cannot even represent a symmetric part.
class StructureConstants {
 public:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;  // (a, b, c), a < b

  StructureConstants() = default;
  explicit StructureConstants(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  // Accepts any a != b and folds the sign into canonical a < b storage.
  void set(std::size_t a, std::size_t b, std::size_t c, const TrigScalar& value);
  TrigScalar get(std::size_t a, std::size_t b, std::size_t c) const;

  const std::map<Key, TrigScalar>& entries() const { return entries_; }

  StructureConstants specialize(const TrigScalar& cos_value, const TrigScalar& sin_value) const;
  StructureConstants with_labels(std::vector<std::string> labels) const;

  bool operator==(const StructureConstants&) const = default;

 private:
  std::vector<std::string> labels_;
  std::map<Key, TrigScalar> entries_;
};

// A matrix representation: matrices[a] is the image of basis element a.
// All matrices share one carrier dimension, which is unrelated to dim().
struct Representation {
  std::vector<std::string> labels;
  std::vector<TrigMatrix> matrices;

  std::size_t dim() const { return matrices.size(); }
  std::size_t carrier_dim() const { return matrices.empty() ? 0 : matrices[0].size(); }
  Representation specialize(const TrigScalar& cos_value, const TrigScalar& sin_value) const;
};

// Invertible change of basis X'_a = sum_d M_{ad} X_d, with the inverse
// computed eagerly so a singular matrix fails at construction.
struct BasisTransform {
  TrigMatrix forward;
  TrigMatrix backward;

  static BasisTransform from_matrix(TrigMatrix m);
};

struct JacobiViolation {
  std::size_t a, b, c, l;
  TrigScalar residual;
};

struct JacobiReport {
  bool pass = true;
  std::vector<JacobiViolation> violations;
};

// sum_l [ f^l_{ab} f^m_{lc} + f^l_{bc} f^m_{la} + f^l_{ca} f^m_{ab} ] = 0
JacobiReport jacobi_check(const StructureConstants& sc);

struct KillingForm {
  TrigMatrix matrix;
  TrigScalar det;
  bool semisimple() const { return !det.is_zero(); }
};

// g_{ab} = sum_{c,d} f^c_{ad} f^d_{bc}
KillingForm killing_form(const StructureConstants& sc);

// (rho_a)_{bc} = f^b_{ac}
Representation adjoint_rep(const StructureConstants& sc);

// Components of [X_a, v] for v expressed in the basis.
std::vector<TrigScalar> adjoint_action(const StructureConstants& sc, std::size_t a,
                                       const std::vector<TrigScalar>& v);

struct RepViolation {
  std::size_t a, b;
  TrigMatrix residual;  // [rho_a, rho_b] - sum_c f^c_{ab} rho_c
};

struct RepReport {
  bool pass = true;
  std::vector<RepViolation> violations;
};

RepReport rep_check(const StructureConstants& sc, const Representation& rep);

// f'^c_{ab} = sum_{d,e,g} M_{ad} M_{be} f^g_{de} (M^-1)_{gc}
StructureConstants transform_constants(const StructureConstants& sc, const BasisTransform& t);

// rho'_a = sum_d M_{ad} rho_d
Representation transform_rep(const Representation& rep, const BasisTransform& t);

struct RepComparison {
  bool equal = true;
  std::string reason;  // first difference, empty when equal
};

RepComparison reps_equal(const Representation& x, const Representation& y);

}  // namespace liegauge
