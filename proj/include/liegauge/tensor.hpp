#pragma once

#include <map>
#include <string>
#include <vector>

#include "liegauge/lie_algebra.hpp"

namespace liegauge {

// Abstract index ids. Positive ids are summed (each appears exactly twice in
// a term); the two reserved negative ids are the free indices mu and nu.
using IndexId = int;
inline constexpr IndexId kFreeMu = -1;
inline constexpr IndexId kFreeNu = -2;

struct Factor {
  std::string field;
  bool has_derivative = false;
  IndexId derivative_index = 0;  // meaningful iff has_derivative
  IndexId vector_index = 0;

  bool operator==(const Factor&) const = default;
};

// One contracted monomial: coeff * g^g_power * product of factors. The
// coupling g is bookkept as an integer power so the 1/(8g^2) normalization
// can subtract exactly; TrigScalar never carries g.
struct TensorTerm {
  TrigScalar coeff;
  int g_power = 0;
  std::vector<Factor> factors;
};

// Canonical representative: minimum over factor orderings and
// first-appearance dummy relabelings of the lexicographic factor key.
// Throws MalformedTermError on broken index structure. Idempotent.
TensorTerm canonicalize(TensorTerm t);

class TensorPoly {
 public:
  // Canonicalizes and merges; zero-coefficient results drop out.
  void add(TensorTerm t);

  TensorPoly& operator+=(const TensorPoly& o);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }

  bool empty() const { return terms_.size() == 0; }
  std::size_t size() const { return terms_.size(); }
  // Canonical deterministic order.
  std::vector<TensorTerm> terms() const;

  // coeff *= s, g_power += g_shift on every term; negative powers rejected.
  TensorPoly scaled(const TrigScalar& s, int g_shift = 0) const;
  TensorPoly specialized(const TrigScalar& cos_value, const TrigScalar& sin_value) const;

  bool operator==(const TensorPoly&) const = default;

 private:
  struct FactorKey {
    std::string field;
    IndexId deriv = 0;  // 0 when absent
    IndexId vec = 0;
    auto operator<=>(const FactorKey&) const = default;
  };
  struct TermKey {
    int g_power = 0;
    std::vector<FactorKey> factors;
    auto operator<=>(const TermKey&) const = default;
  };
  friend TensorTerm key_to_term(const TermKey&, const TrigScalar&);

  std::map<TermKey, TrigScalar> terms_;
};

// Pairwise contraction of the shared free indices of p and q (mu with mu, nu
// with nu), dummies kept disjoint. Errors if the two sides expose different
// free-index sets.
TensorPoly contract_product(const TensorPoly& p, const TensorPoly& q);

// Free indices mu <-> nu on every term, re-canonicalized.
TensorPoly swap_free_indices(const TensorPoly& p);

// True iff p negates under mu <-> nu.
bool antisymmetric_in_free_indices(const TensorPoly& p);

struct FieldStrengthSet {
  std::vector<std::string> labels;
  std::vector<TensorPoly> components;
};

// F^a_{mu nu} = g[d_mu A^a_nu - d_nu A^a_mu + g f^a_{bc} A^b_mu A^c_nu].
// Field labels come from sc, run through `names` when present there.
FieldStrengthSet field_strength(const StructureConstants& sc,
                                const std::map<std::string, std::string>& names = {});

struct Normalization {
  TrigScalar scale;
  int g_shift = 0;
};

// sum_{a,b} F^a_{mu nu} F^{b mu nu} t_{ab}, scaled. The trace matrix must be
// symmetric and match the component count.
TensorPoly lagrangian(const FieldStrengthSet& fs, const TrigMatrix& trace_matrix,
                      const Normalization& norm);

// Substitutes labels; the map must cover every label present.
TensorPoly rename_fields(const TensorPoly& p, const std::map<std::string, std::string>& map);

struct VertexGroup {
  std::string kind;                 // kinetic | cubic | quartic | other
  std::vector<std::string> fields;  // sorted multiset
  int derivative_count = 0;
  std::vector<TensorTerm> terms;
};

// Groups terms by field content: kinetic (2 fields, 2 derivatives), cubic
// (3 fields, 1 derivative), quartic (4 fields, none).
std::vector<VertexGroup> vertex_table(const TensorPoly& p);

struct PolyDiff {
  bool equal = true;
  std::vector<TensorTerm> only_left;
  std::vector<TensorTerm> only_right;
};

// Terms present in exactly one side; a coefficient mismatch shows up once on
// each side with the respective coefficients.
PolyDiff poly_equal(const TensorPoly& p, const TensorPoly& q);

std::string to_text(const TensorTerm& t);
std::string to_text(const TensorPoly& p);    // line per term
std::string to_latex(const TensorPoly& p);

}  // namespace liegauge
