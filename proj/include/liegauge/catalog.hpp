#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liegauge/lie_algebra.hpp"

namespace liegauge {

struct MixingCandidate {
  TrigScalar alpha, beta, gamma, delta;
};

struct MixingConstraint {
  std::string name;      // "alpha*beta+gamma*delta = 0" etc.
  TrigScalar residual;   // lhs - rhs, zero iff satisfied
  bool pass = false;
};

struct MixingReport {
  std::array<MixingConstraint, 4> constraints;
  bool pass = false;
};

MixingReport check_mixing_constraints(const MixingCandidate& m);

// One concrete member of a case family: the four coefficients, the angle at
// which family 1 reproduces it (families 2 and 3 only), and the specialized
// commutator table it generates.
struct CaseMember {
  MixingCandidate candidate;
  std::optional<std::string> theta;
  StructureConstants algebra;
};

struct CaseFamily {
  int id = 0;
  std::string description;
  std::vector<CaseMember> members;
};

// The three solution families of the mixing constraints: the one-parameter
// rotation, the sign pair, and the quarter-turn swap.
const std::vector<CaseFamily>& case_families();

struct Fixtures {
  StructureConstants su2xu1_constants;   // direct product, labels T1..T0
  StructureConstants su3_constants;      // Gell-Mann basis
  StructureConstants u1_constants;       // one generator, all brackets zero
  StructureConstants ga_constants;       // mixed algebra, labels X1,X2,X3,X0

  Representation su2xu1_fundamental;     // 3x3 T matrices
  Representation su2xu1_paper_adjoint;   // 4x4 X matrices
  Representation ga_adjoint;             // adjoint built from ga_constants
  Representation ga_transformed_adjoint; // X matrices pushed through the mixing transform
  Representation ga_fundamental_paper;   // 3x3 T' variant with suspect (1,0) entries
  Representation ga_fundamental_computed;// transform of su2xu1_fundamental

  BasisTransform glashow_transform;

  // Post-association labels for the mixed basis: X1,X2,X3,X0 -> W-,W+,Z,A.
  std::map<std::string, std::string> standard_names;
};

const Fixtures& fixtures();

// CLI-facing lookups; accept fixture keys plus short aliases with '-' or '_'
// ("ga", "su3", "ga-transformed-adjoint", ...). Null when unknown.
const StructureConstants* find_algebra_fixture(const std::string& name);
const Representation* find_rep_fixture(const std::string& name);
std::vector<std::string> algebra_fixture_names();
std::vector<std::string> rep_fixture_names();

}  // namespace liegauge
