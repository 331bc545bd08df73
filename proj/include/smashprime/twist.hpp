#pragma once

#include "smashprime/smash.hpp"

namespace smashprime {

/// A certified Drinfeld twist: J with its verified two-sided inverse Q.
struct DrinfeldTwist {
  TensorElement j;
  TensorElement q;

  /// The inverse twist Q, as a twist for the twisted Hopf algebra.
  DrinfeldTwist inverse() const { return DrinfeldTwist{q, j}; }
};

/// A certified triangular structure: R with its verified inverse.
struct TriangularStructure {
  TensorElement r;
  TensorElement r_inv;
};

struct TwistVerification {
  std::optional<DrinfeldTwist> twist;  // present iff report is empty
  CheckReport report;
};

/// Checks invertibility, the 2-cocycle identity in H^{(x)3} and both counit
/// normalizations; returns the certified twist or the list of failed axioms.
TwistVerification verify_twist(const HopfAlgebra& h, const TensorElement& j);

/// H^J: same multiplication, unit, counit; Delta^J = J Delta J^{-1};
/// S^J = U S U^{-1} with U = sum J1 S(J2), U^{-1} = sum S(Q1) Q2. The output
/// is re-verified as a Hopf algebra; failure raises an internal error.
HopfAlgebra twist_hopf(const HopfAlgebra& h, const DrinfeldTwist& t);

/// A^J: a ._J b = sum (Q1 a)(Q2 b), same underlying space and action; the
/// output is re-verified as a module algebra over H^J.
HModuleAlgebra twist_module_algebra(const HModuleAlgebra& ma, const DrinfeldTwist& t);

/// The identity a b = sum (J1 a) ._J (J2 b) on all basis pairs.
CheckReport verify_twist_relation(const HModuleAlgebra& ma, const DrinfeldTwist& t);

/// Q is a twist for H^J; (H^J)^{J^{-1}} = H and (A^J)^{J^{-1}} = A by exact
/// structure-constant equality (module-algebra part when ma is given).
CheckReport inverse_twist_check(const HopfAlgebra& h, const DrinfeldTwist& t,
                                const HModuleAlgebra* ma = nullptr);

struct TriangularVerification {
  std::optional<TriangularStructure> structure;
  CheckReport report;
};

/// The four axioms: (Delta (x) 1)(R) = R13 R23, (1 (x) Delta)(R) = R13 R12,
/// Delta^cop R = R Delta, R^{-1} = tau(R).
TriangularVerification verify_triangular(const HopfAlgebra& h, const TensorElement& r);

struct TransferReport {
  bool a_h_semiprime = false;       // A is H-semiprime
  bool aj_hj_semiprime = false;     // A^J is H^J-semiprime
  std::size_t smash_rad_dim = 0;    // dim rad(A # H)
  std::size_t smash_j_rad_dim = 0;  // dim rad(A^J # H^J)
  bool smash_semiprime = false;
  bool smash_j_semiprime = false;
  bool theorem_violation = false;   // any pairing inequality
};

/// Semiprimeness transfer across a twist: H-semiprimeness of A matches
/// H^J-semiprimeness of A^J, and the two smash products have radicals of
/// equal dimension.
TransferReport semiprime_transfer_check(const HModuleAlgebra& ma, const DrinfeldTwist& t);

struct TwistSearchResult {
  std::vector<DrinfeldTwist> twists;       // certified, in discovery order
  std::uint64_t leaves_examined = 0;       // coefficient matrices passing the counit sums
  std::uint64_t cocycle_survivors = 0;
  std::vector<Scalar> grid;
};

/// Exhaustive search for twists with coefficients from the grid, over the
/// span of the grouplike basis of a group algebra. Candidates are pruned by
/// the counit normalization first, then by the integer cocycle identity; the
/// survivors are certified from scratch by verify_twist. The trivial twist
/// 1 (x) 1 is examined first, then candidates in lexicographic grid order.
TwistSearchResult twist_search(const HopfAlgebra& h, std::vector<Scalar> grid, std::size_t limit);

std::vector<Scalar> default_twist_grid(FieldSpec f);

}  // namespace smashprime
