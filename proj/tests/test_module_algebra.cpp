#include <doctest.h>

#include "smashprime/catalog.hpp"
#include "smashprime/module_algebra.hpp"
#include "support/builders.hpp"

using namespace smashprime;
using testsupport::qv;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("module algebra verification") {
  CHECK(verify_module_algebra(catalog_ma("triv1")).ok());
  CHECK(verify_module_algebra(catalog_ma("swap2")).ok());
  CHECK(verify_module_algebra(catalog_ma("sweedler-x")).ok());

  // corrupt rho_g(1_A) so the unit is no longer sent to eps(g) 1_A
  HModuleAlgebra bad = catalog_ma("swap2");
  bad.action[1].at(0, 0) = Scalar::from_int(Q, 2);
  CHECK_FALSE(verify_module_algebra(bad).ok());
}

TEST_CASE("action of elements") {
  HModuleAlgebra swap = catalog_ma("swap2");
  Element one_h{qv(Q, {1, 0})}, g{qv(Q, {0, 1})};
  Element a{qv(Q, {3, 5})};
  CHECK(act(swap, one_h, a).coeffs == a.coeffs);
  CHECK(act(swap, g, a).coeffs == qv(Q, {5, 3}));

  HModuleAlgebra reg = catalog_ma("regC2");
  // p_g . e_h = delta_{g,h} e_h
  CHECK(act(reg, Element{qv(Q, {0, 1})}, Element{qv(Q, {1, 1})}).coeffs == qv(Q, {0, 1}));
  CHECK(act(reg, Element{qv(Q, {1, 0})}, Element{qv(Q, {1, 1})}).coeffs == qv(Q, {1, 0}));
}

TEST_CASE("invariants") {
  CHECK(invariants(catalog_ma("triv1")) == Subspace::full(Q, 1));
  CHECK(invariants(catalog_ma("nil2")) == Subspace::full(Q, 2));  // trivial action
  Subspace inv = invariants(catalog_ma("swap2"));
  CHECK(inv == Subspace::span(Q, 2, {qv(Q, {1, 1})}));
  CHECK(invariants(catalog_ma("regC2")) == Subspace::span(Q, 2, {qv(Q, {1, 0})}));
}

TEST_CASE("invariants form a unital subalgebra on every catalog action") {
  for (const auto& entry : catalog_module_algebras()) {
    HModuleAlgebra ma = entry.build();
    Subspace inv = invariants(ma);
    CHECK(inv.contains(ma.algebra.unit()));
    for (std::size_t i = 0; i < inv.dim(); ++i)
      for (std::size_t j = 0; j < inv.dim(); ++j)
        CHECK(inv.contains(ma.algebra.mul(Element{inv.basis_row(i)}, Element{inv.basis_row(j)}).coeffs));
  }
}

TEST_CASE("central invariants") {
  HModuleAlgebra swap = catalog_ma("swap2");
  CHECK(central_invariants(swap) == invariants(swap));  // A commutative
  Subspace zi = central_invariants(catalog_ma("mat2triv"));
  CHECK(zi.dim() == 1);
  CHECK(zi.contains(catalog_ma("mat2triv").algebra.unit()));
}

TEST_CASE("h-stable closure") {
  HModuleAlgebra swap3 = catalog_ma("swap3");
  StableIdeal full = h_stable_closure(swap3, Subspace::full(Q, 3), Sidedness::two_sided);
  CHECK(full.ideal.space == Subspace::full(Q, 3));
  CHECK(full.h_stable);

  StableIdeal c1 = h_stable_closure(swap3, Subspace::span(Q, 3, {qv(Q, {1, 0, 0})}), Sidedness::two_sided);
  CHECK(c1.ideal.space == Subspace::span(Q, 3, {qv(Q, {1, 0, 0}), qv(Q, {0, 1, 0})}));

  StableIdeal c3 = h_stable_closure(swap3, Subspace::span(Q, 3, {qv(Q, {0, 0, 1})}), Sidedness::two_sided);
  CHECK(c3.ideal.space == Subspace::span(Q, 3, {qv(Q, {0, 0, 1})}));
}

TEST_CASE("H-semiprimeness") {
  CHECK(is_h_semiprime(catalog_ma("swap2")).h_semiprime);
  CHECK(is_h_semiprime(catalog_ma("s3nat")).h_semiprime);

  HSemiprimeResult nil = is_h_semiprime(catalog_ma("nil2"));
  CHECK_FALSE(nil.h_semiprime);
  CHECK(nil.witness == Subspace::span(Q, 2, {qv(Q, {0, 1})}));

  // the skew-primitive action moves x out of span{x}, so no nonzero H-stable
  // ideal survives inside the radical
  HSemiprimeResult sx = is_h_semiprime(catalog_ma("sweedler-x"));
  CHECK(sx.h_semiprime);
  CHECK(sx.witness.dim() == 0);

  // semiprime A is always H-semiprime
  for (const auto& entry : catalog_module_algebras()) {
    HModuleAlgebra ma = entry.build();
    if (is_semiprime_algebra(ma.algebra)) CHECK(is_h_semiprime(ma).h_semiprime);
  }
}

TEST_CASE("stability certificates hold under direct matrix application") {
  Rng rng(17);
  for (const auto& entry : catalog_module_algebras()) {
    HModuleAlgebra ma = entry.build();
    const std::size_t n = ma.alg_dim();
    const FieldSpec f = ma.algebra.field();
    for (int k = 0; k < 3; ++k) {
      StableIdeal ideal =
          h_stable_closure(ma, Subspace::span(f, n, {rng.nonzero_small_vec(f, n)}), Sidedness::two_sided);
      CHECK(ideal.h_stable);
      for (const auto& op : stability_operators(ma, Sidedness::two_sided))
        for (std::size_t b = 0; b < ideal.ideal.space.dim(); ++b)
          CHECK(ideal.ideal.space.contains(op.apply(ideal.ideal.space.basis_row(b))));
    }
  }
}

TEST_CASE("annihilator and probed essentiality on stable ideals") {
  HModuleAlgebra swap3 = catalog_ma("swap3");
  StableIdeal full{IdealBasis{Subspace::full(Q, 3), Sidedness::two_sided}, true};
  Lemma31Report a = lemma31_check(swap3, full, 50, 5);
  CHECK(a.annihilator_zero);
  CHECK(a.essential_probed);
  CHECK_FALSE(a.theorem_violation);

  StableIdeal i12{IdealBasis{Subspace::span(Q, 3, {qv(Q, {1, 0, 0}), qv(Q, {0, 1, 0})}), Sidedness::two_sided},
                  true};
  Lemma31Report b = lemma31_check(swap3, i12, 50, 5);
  CHECK_FALSE(b.annihilator_zero);
  CHECK_FALSE(b.essential_probed);
  CHECK_FALSE(b.theorem_violation);
  CHECK(b.failing_probe == qv(Q, {0, 0, 1}));

  HModuleAlgebra swap2 = catalog_ma("swap2");
  StableIdeal full2{IdealBasis{Subspace::full(Q, 2), Sidedness::two_sided}, true};
  Lemma31Report c = lemma31_check(swap2, full2, 50, 5);
  CHECK(c.annihilator_zero);
  CHECK(c.essential_probed);

  // the hypothesis is enforced
  StableIdeal nil_ideal{IdealBasis{Subspace::span(Q, 2, {qv(Q, {0, 1})}), Sidedness::two_sided}, true};
  CHECK_THROWS_AS(lemma31_check(catalog_ma("nil2"), nil_ideal, 10, 5), Error);
}

TEST_CASE("retractability probes") {
  RetractabilityReport swap = retractability_check(catalog_ma("swap2"), 10, 7);
  CHECK_FALSE(swap.counterexample_found);
  CHECK(swap.nonzero_ideals > 0);

  RetractabilityReport triv = retractability_check(catalog_ma("mat2triv"), 10, 7);
  CHECK_FALSE(triv.counterexample_found);

  RetractabilityReport f2 = retractability_check(catalog_ma("f2triv"), 10, 7);
  CHECK_FALSE(f2.counterexample_found);

  // multi-generator sampling behaves the same on the catalog
  RetractabilityReport multi = retractability_check(catalog_ma("s3nat"), 10, 7, 2);
  CHECK_FALSE(multi.counterexample_found);
  CHECK(multi.nonzero_ideals > 0);
  CHECK_THROWS_AS(retractability_check(catalog_ma("swap2"), 5, 7, 0), Error);
}

TEST_CASE("endomorphism-invariants dimension equality") {
  EndIsoReport t = end_iso_check(catalog_ma("triv1"));
  CHECK(t.end_dim == 1);
  CHECK(t.invariants_dim == 1);
  CHECK(t.dims_equal);
  CHECK(t.right_mults_embed);

  EndIsoReport s = end_iso_check(catalog_ma("swap2"));
  CHECK(s.end_dim == 1);
  CHECK(s.dims_equal);

  EndIsoReport r = end_iso_check(catalog_ma("regC2"));
  CHECK(r.end_dim == 1);
  CHECK(r.dims_equal);

  for (const auto& entry : catalog_module_algebras()) {
    EndIsoReport e = end_iso_check(entry.build());
    CHECK(e.dims_equal);
    CHECK(e.right_mults_embed);
  }
}
