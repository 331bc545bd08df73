#pragma once

#include <optional>

#include "smashprime/algebra.hpp"

namespace smashprime {

/// Coalgebra by structure constants. comult[i] is the n^2-vector of
/// Delta(e_i) in the Kronecker index convention e_p (x) e_q -> p*n + q;
/// counit is the coefficient vector of epsilon.
struct Coalgebra {
  std::size_t dim = 0;
  std::vector<Vec> comult;
  Vec counit;
};

/// Algebra + coalgebra + antipode matrix (column j = S(e_j)).
struct HopfAlgebra {
  Algebra algebra;
  Coalgebra coalgebra;
  Matrix antipode;

  FieldSpec field() const { return algebra.field(); }
  std::size_t dim() const { return algebra.dim(); }
};

/// Element of the k-fold tensor power of an n-dimensional space; coeffs has
/// length n^k, indexed by the Kronecker convention.
struct TensorElement {
  std::size_t arity = 1;
  Vec coeffs;

  bool operator==(const TensorElement&) const = default;
};

std::size_t tensor_pow(std::size_t n, std::size_t k);

/// All bialgebra axioms: coassociativity, counit laws, multiplicativity of
/// Delta and epsilon, unit compatibility; empty report iff valid.
CheckReport verify_bialgebra(const Algebra& a, const Coalgebra& c);
CheckReport verify_bialgebra(const HopfAlgebra& h);

/// The antipode law with the stored matrix; empty iff S is an antipode.
CheckReport antipode_law_report(const HopfAlgebra& h);

/// Bialgebra axioms plus the antipode law.
CheckReport verify_hopf(const HopfAlgebra& h);

/// Unique solution S of sum S(h1) h2 = eps(h) 1 = sum h1 S(h2), or nullopt
/// when the stacked linear system is inconsistent.
std::optional<Matrix> compute_antipode(const Algebra& a, const Coalgebra& c);

/// Assembles a verified Hopf algebra. The antipode is computed from the
/// bialgebra data; when one is supplied it is checked against the computed
/// one. Throws on invalid data.
HopfAlgebra make_hopf(Algebra a, Coalgebra c, std::optional<Matrix> antipode = std::nullopt);

/// Solution space of h t = eps(h) t (left) or t h = eps(h) t (right).
Subspace integrals(const HopfAlgebra& h, Side side);

struct SeparabilityResult {
  bool separable = false;
  Vec integral;      // witness with eps(t) != 0, when separable
  Scalar eps_value;  // eps(t)
  Side side = Side::left;
};

/// Integral criterion: separable over the base field iff some left or right
/// integral has nonzero counit value. For finite-dimensional H over a field
/// this is the semisimplicity test.
SeparabilityResult is_separable_hopf(const HopfAlgebra& h);

/// Dual Hopf algebra: multiplication = transpose of Delta, comultiplication =
/// transpose of multiplication, unit = counit, counit = evaluation at 1,
/// antipode = transpose of S.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

bool is_cosemisimple(const HopfAlgebra& h);

// --- arithmetic in tensor powers of H ---

TensorElement tensor_unit(const HopfAlgebra& h, std::size_t arity);
TensorElement tensor_from_vec(std::size_t arity, Vec coeffs);

/// Componentwise product in the algebra H^{(x) k}.
TensorElement tensor_mul(const HopfAlgebra& h, const TensorElement& x, const TensorElement& y);

/// Two-sided inverse in H^{(x) k}, or nullopt when x is not invertible.
std::optional<TensorElement> tensor_invert(const HopfAlgebra& h, const TensorElement& x);

/// Delta applied to tensor leg `leg` (0-based), raising the arity by one.
TensorElement apply_comult_at(const HopfAlgebra& h, const TensorElement& x, std::size_t leg);

/// Unit of H inserted as new leg at `position` (0 = front, arity = back).
TensorElement insert_unit_at(const HopfAlgebra& h, const TensorElement& x, std::size_t position);

/// Counit contracted against tensor leg `leg`, lowering the arity by one.
TensorElement apply_counit_at(const HopfAlgebra& h, const TensorElement& x, std::size_t leg);

/// Legs swapped (arity 2 only): tau(x (x) y) = y (x) x.
TensorElement tensor_swap(const HopfAlgebra& h, const TensorElement& x);

/// The antipode matrix applied to one leg.
TensorElement apply_antipode_at(const HopfAlgebra& h, const TensorElement& x, std::size_t leg);

}  // namespace smashprime
