#pragma once

#include "smashprime/hopf.hpp"

namespace smashprime {

/// A left H-module algebra: an algebra A with action matrices rho[j] giving
/// the action of the j-th Hopf basis element, satisfying the module axioms
/// and the measuring axiom h(ab) = sum (h1 a)(h2 b), h 1 = eps(h) 1.
struct HModuleAlgebra {
  HopfAlgebra hopf;
  Algebra algebra;
  std::vector<Matrix> action;

  std::size_t hopf_dim() const { return hopf.dim(); }
  std::size_t alg_dim() const { return algebra.dim(); }
};

/// An ideal with a verified H-stability certificate.
struct StableIdeal {
  IdealBasis ideal;
  bool h_stable = false;
};

/// Module axioms, measuring axiom and unit action; empty report iff valid.
CheckReport verify_module_algebra(const HModuleAlgebra& ma);

/// Bilinear action of an element of H on an element of A.
Element act(const HModuleAlgebra& ma, const Element& h, const Element& a);

/// Action matrix of an arbitrary element of H.
Matrix action_matrix(const HModuleAlgebra& ma, const Vec& h);

/// A^H = {a : h a = eps(h) a for all h}; verified to be a unital subalgebra.
Subspace invariants(const HModuleAlgebra& ma);

/// Z(A)^H = Z(A) intersect A^H.
Subspace central_invariants(const HModuleAlgebra& ma);

/// The multiplication-and-action operators whose stable subspaces are the
/// H-stable ideals of the requested sidedness.
std::vector<Matrix> stability_operators(const HModuleAlgebra& ma, Sidedness sidedness);

/// Smallest H-stable ideal of the given sidedness containing seed; the
/// stability certificate is re-verified on the result.
StableIdeal h_stable_closure(const HModuleAlgebra& ma, const Subspace& seed, Sidedness sidedness);

struct HSemiprimeResult {
  bool h_semiprime = false;
  Subspace witness;  // largest nilpotent H-stable ideal when not H-semiprime
};

/// No nonzero nilpotent H-stable ideal. Computed as the largest subspace of
/// rad(A) stable under all multiplications and the H-action; every nilpotent
/// ideal lies in rad(A), so that fixed point is the largest nilpotent
/// H-stable ideal.
HSemiprimeResult is_h_semiprime(const HModuleAlgebra& ma);

struct Lemma31Report {
  bool annihilator_zero = false;   // (a) l.ann_A(I) = 0, exact
  bool essential_probed = false;   // (b) every probed cyclic submodule meets I
  Vec failing_probe;               // witness for a failed (b) probe
  bool theorem_violation = false;  // (a) and (b) disagree; must never happen
};

/// Exact annihilator test against probed essentiality for an H-stable ideal
/// of an H-semiprime module algebra. Probes are the standard basis vectors
/// followed by seeded random small-coefficient vectors.
Lemma31Report lemma31_check(const HModuleAlgebra& ma, const StableIdeal& ideal, std::size_t probes,
                            std::uint64_t seed);

struct RetractabilityReport {
  std::size_t samples_run = 0;
  std::size_t nonzero_ideals = 0;
  bool counterexample_found = false;
  Subspace counterexample;  // a nonzero H-stable left ideal with I^H = 0
};

/// Samples H-stable left ideals generated by random vectors and reports any
/// nonzero ideal without a nonzero H-invariant element. Single-generator
/// seeds by default; generators_per_ideal > 1 spans each seed by several
/// random vectors.
RetractabilityReport retractability_check(const HModuleAlgebra& ma, std::size_t samples,
                                          std::uint64_t seed, std::size_t generators_per_ideal = 1);

struct EndIsoReport {
  std::size_t end_dim = 0;        // dim of matrices commuting with all L_a, rho_h
  std::size_t invariants_dim = 0; // dim A^H
  bool dims_equal = false;
  bool right_mults_embed = false; // u -> R_u maps A^H injectively into End
};

/// dim End_{A#H}(A) = dim A^H, with the right-multiplication embedding check.
EndIsoReport end_iso_check(const HModuleAlgebra& ma);

}  // namespace smashprime
