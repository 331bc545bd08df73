#pragma once

#include "smashprime/module_algebra.hpp"

namespace smashprime {

/// A # H by structure constants on the basis a_i # h_j (index i*m + j),
/// with multiplication (a#h)(b#g) = sum a (h1 b) # h2 g.
struct SmashProduct {
  HModuleAlgebra base;
  Algebra algebra;
  Matrix embed_A;  // nm x n, a -> a # 1
  Matrix embed_H;  // nm x m, h -> 1 # h

  std::size_t dim() const { return algebra.dim(); }
  std::size_t a_dim() const { return base.alg_dim(); }
  std::size_t h_dim() const { return base.hopf_dim(); }
};

SmashProduct build_smash(const HModuleAlgebra& ma);

bool smash_is_semiprime(const SmashProduct& s);

/// The bimodule tensor square T (x)_A T for T = A#H, materialized on the
/// ambient space T (x) T. T is free as a left A-module on the 1#h_j, so the
/// quotient has the canonical basis (a_i#h_j) (x) (1#h_l); the relations
/// subspace spanned by {xa (x) y - x (x) ay} is the kernel of the canonical
/// projection onto those coordinates.
class BimoduleTensor {
public:
  explicit BimoduleTensor(const SmashProduct& s);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t quotient_dim() const { return qdim_; }

  const Matrix& projection() const { return proj_; }
  const Matrix& section() const { return sect_; }
  /// Kernel of the projection; computed on first use and cached.
  const Subspace& relations() const;

  Vec project(const Vec& ambient) const { return proj_.apply(ambient); }

  /// Outer bimodule action on quotient coordinates: u . w and w . u for a
  /// smash element u.
  Vec left_mult(const Vec& smash_u, const Vec& qcoords) const;
  Vec right_mult(const Vec& qcoords, const Vec& smash_u) const;

  /// Induced multiplication map down to A#H.
  Vec multiply_down(const Vec& qcoords) const;

private:
  const SmashProduct* s_;
  std::size_t ambient_ = 0, qdim_ = 0;
  Matrix proj_;   // qdim x ambient
  Matrix sect_;   // ambient x qdim
  mutable std::optional<Subspace> relations_;
};

/// omega in the tensor-square quotient witnessing separability of A#H over A.
struct SeparabilityIdempotent {
  Vec integral;   // right integral used (converted from a left one via S if needed)
  Scalar eps;     // eps(t), nonzero
  Vec ambient;    // representative in T (x) T
  Vec quotient;   // coordinates in the canonical quotient basis
};

/// omega = sum [1 # S(t1)] (x) [z # t2] with z = eps(t)^{-1} 1_A, for a right
/// integral t with eps(t) != 0; nullopt when every integral has eps = 0.
std::optional<SeparabilityIdempotent> separability_idempotent(const SmashProduct& s,
                                                              const BimoduleTensor& bt);

/// Checks (i) induced multiplication sends omega to 1#1, (ii) omega commutes
/// with a#1 for every basis a, (iii) omega commutes with 1#h for every basis
/// h. Empty report iff omega is a separability idempotent witness.
CheckReport verify_separability(const SmashProduct& s, const BimoduleTensor& bt, const Vec& omega_q);

struct MaschkeReport {
  bool a_semiprime = false;      // hypothesis: A semisimple
  bool integral_witness = false; // hypothesis: eps(t) != 0 for some integral
  Scalar eps;
  bool smash_semiprime = false;  // conclusion
  bool vacuous = false;          // some hypothesis fails
  bool theorem_violation = false;
};

/// Hypotheses and conclusion of the semisimple-artinian closure; a true
/// hypothesis with a false conclusion is flagged and must never occur.
MaschkeReport maschke_check(const SmashProduct& s);

struct Thm44Report {
  bool map_injective = false;      // a -> a#t has full rank
  bool map_linear = false;         // commutes with all A#H generators
  bool smash_semiprime = false;
  std::size_t ideals_checked = 0;
  bool violation_found = false;    // some nonzero H-stable left ideal with t.I = 0 or t.I not in I^H
  std::string violation_detail;
};

/// (c) => (d) mechanism: a -> a#t is injective and A#H-linear; when A#H is
/// semiprime, every sampled nonzero H-stable left ideal I has t.I != 0 and
/// t.I inside I^H.
Thm44Report thm44_cd_check(const SmashProduct& s, std::size_t samples, std::uint64_t seed);

}  // namespace smashprime
