#include <doctest.h>

#include "smashprime/algebra.hpp"
#include "smashprime/catalog.hpp"
#include "support/builders.hpp"
#include "support/oracle.hpp"

using namespace smashprime;
using testsupport::exhaustive_radical;
using testsupport::qm;
using testsupport::qv;
using testsupport::random_associative_algebra;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

Algebra product_algebra(FieldSpec f, std::size_t n) {
  std::vector<Vec> mult(n * n, zero_vec(f, n));
  for (std::size_t i = 0; i < n; ++i) mult[i * n + i][i] = Scalar::one(f);
  return Algebra(f, n, std::move(mult), Vec(n, Scalar::one(f)));
}

}  // namespace

TEST_CASE("verify_algebra accepts valid algebras and flags violations") {
  CHECK(verify_algebra(catalog_hopf("Q[C2]").algebra).ok());
  CHECK(verify_algebra(dual_numbers(Q)).ok());
  std::vector<Vec> unit_mult{qv(Q, {1})};
  CHECK(verify_algebra(Algebra(Q, 1, unit_mult, qv(Q, {1}))).ok());

  // e1 e1 = e2 with junk products for e2 breaks associativity
  std::vector<Vec> bad(9, zero_vec(Q, 3));
  for (std::size_t j = 0; j < 3; ++j) {
    bad[0 * 3 + j] = qv(Q, {j == 0, j == 1, j == 2});
    bad[j * 3 + 0] = qv(Q, {j == 0, j == 1, j == 2});
  }
  bad[1 * 3 + 1] = qv(Q, {0, 0, 1});
  bad[1 * 3 + 2] = qv(Q, {1, 1, 1});
  bad[2 * 3 + 1] = qv(Q, {0, 1, 0});
  bad[2 * 3 + 2] = qv(Q, {1, 0, 0});
  CheckReport rep = verify_algebra(Algebra(Q, 3, bad, qv(Q, {1, 0, 0})));
  CHECK_FALSE(rep.ok());
}

TEST_CASE("mul and regular representation") {
  Algebra c2 = catalog_hopf("Q[C2]").algebra;
  Element g = c2.basis_element(1);
  CHECK(c2.mul(c2.unit_element(), g).coeffs == g.coeffs);
  CHECK(c2.mul(g, g).coeffs == c2.unit());

  Algebra dn = dual_numbers(Q);
  CHECK(dn.mul(dn.basis_element(1), dn.basis_element(1)).coeffs == zero_vec(Q, 2));

  CHECK(c2.regular_representation(c2.unit_element(), Side::left) == Matrix::identity(Q, 2));
  CHECK(c2.regular_representation(g, Side::left) == qm(Q, {{0, 1}, {1, 0}}));

  // L is a homomorphism, R an anti-homomorphism, on random pairs
  for (const auto& entry : catalog_hopfs()) {
    Algebra a = entry.build().algebra;
    const FieldSpec f = a.field();
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
      Element x{rng.small_vec(f, a.dim())}, y{rng.small_vec(f, a.dim())};
      Element xy = a.mul(x, y);
      CHECK(a.regular_representation(xy, Side::left) ==
            a.regular_representation(x, Side::left) * a.regular_representation(y, Side::left));
      CHECK(a.regular_representation(xy, Side::right) ==
            a.regular_representation(y, Side::right) * a.regular_representation(x, Side::right));
    }
  }
}

TEST_CASE("jacobson radical examples") {
  Algebra qc2 = catalog_hopf("Q[C2]").algebra;
  CHECK(jacobson_radical(qc2).dim() == 0);
  CHECK(jacobson_radical(qc2) == exhaustive_radical(qc2));
  CHECK(is_semiprime_algebra(qc2));

  Algebra dn = dual_numbers(Q);
  Subspace rad = jacobson_radical(dn);
  CHECK(rad == Subspace::span(Q, 2, {qv(Q, {0, 1})}));
  CHECK_FALSE(is_semiprime_algebra(dn));

  Algebra f2c2 = catalog_hopf("F2[C2]").algebra;
  Subspace rad2 = jacobson_radical(f2c2);
  CHECK(rad2.dim() == 1);
  CHECK(rad2 == Subspace::span(F2, 2, {qv(F2, {1, 1})}));
  CHECK_FALSE(is_semiprime_algebra(f2c2));

  // span{1+g} is an ideal of F2[C2], hence its own largest stable subspace
  CHECK(largest_stable_subspace(rad2, f2c2.bimodule_operators()) == rad2);
}

TEST_CASE("radical characteristic regimes") {
  // F2 with dim 13: p <= dim and p^dim > 4096
  CHECK_THROWS_AS(jacobson_radical(product_algebra(F2, 13)), Error);
  CHECK_FALSE(radical_supported(product_algebra(F2, 13)));
  CHECK(radical_supported(product_algebra(F2, 12)));
  CHECK(jacobson_radical(product_algebra(F2, 12)).dim() == 0);

  // trace form and element enumeration agree when both apply (p > dim)
  FieldSpec f3 = FieldSpec::prime(3);
  Algebra p32 = product_algebra(f3, 2);
  CHECK(jacobson_radical(p32) == radical_by_element_enumeration(p32));
  Algebra gc2 = group_algebra(f3, GroupTable::cyclic(2)).algebra;
  CHECK(jacobson_radical(gc2) == radical_by_element_enumeration(gc2));

  // random integer structure constants reduced mod 5: dim <= 3 < 5, so the
  // trace form applies while 5^dim <= 125 keeps the enumeration in range
  FieldSpec f5 = FieldSpec::prime(5);
  Rng rng(13);
  for (int i = 0; i < 15; ++i) {
    Algebra aq = random_associative_algebra(rng, 1 + i % 3);
    const std::size_t n = aq.dim();
    std::vector<Vec> mult(n * n, zero_vec(f5, n));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t k = 0; k < n; ++k)
          mult[p * n + q][k] = Scalar::from_mpq(f5, aq.basis_product(p, q)[k].rat());
    Algebra a5(f5, n, std::move(mult), unit_vec(f5, n, 0));
    REQUIRE(verify_algebra(a5).ok());  // integer associativity survives reduction
    CHECK(jacobson_radical(a5) == radical_by_element_enumeration(a5));
  }
}

TEST_CASE("radical output is a nilpotent ideal and quotient is semiprime") {
  std::vector<Algebra> algebras;
  for (const auto& e : catalog_hopfs()) algebras.push_back(e.build().algebra);
  for (const auto& e : catalog_module_algebras()) algebras.push_back(e.build().algebra);
  algebras.push_back(dual_numbers(Q));
  for (const Algebra& a : algebras) {
    Subspace rad = jacobson_radical(a);
    CHECK(is_ideal(a, rad, Sidedness::two_sided));
    CHECK(is_nilpotent_subspace(a, rad));
    if (rad.dim() == a.dim()) continue;  // nothing left to quotient onto
    Algebra q = quotient_algebra(a, rad);
    CHECK(verify_algebra(q).ok());
    CHECK(jacobson_radical(q).dim() == 0);
  }
}

TEST_CASE("radical oracle equivalence on random rational algebras") {
  Rng rng(21);
  for (int i = 0; i < 25; ++i) {
    Algebra a = random_associative_algebra(rng, 1 + i % 3);
    CHECK(jacobson_radical(a) == exhaustive_radical(a));
  }
}

TEST_CASE("left annihilator examples") {
  Algebra q3 = product_algebra(Q, 3);
  CHECK(left_annihilator(q3, {Subspace::full(Q, 3), Sidedness::two_sided}) == Subspace::zero(Q, 3));
  Subspace i12 = Subspace::span(Q, 3, {qv(Q, {1, 0, 0}), qv(Q, {0, 1, 0})});
  CHECK(left_annihilator(q3, {i12, Sidedness::two_sided}) == Subspace::span(Q, 3, {qv(Q, {0, 0, 1})}));
  CHECK(left_annihilator(q3, {Subspace::zero(Q, 3), Sidedness::two_sided}) == Subspace::full(Q, 3));
}

TEST_CASE("center examples") {
  CHECK(center(product_algebra(Q, 3)) == Subspace::full(Q, 3));
  Algebra m2 = matrix_algebra(Q, 2);
  Subspace z = center(m2);
  CHECK(z.dim() == 1);
  CHECK(z.contains(m2.unit()));
  CHECK(center(catalog_hopf("Q[S3]").algebra).dim() == 3);
}

TEST_CASE("von Neumann regularity of commutative unital subalgebras") {
  Algebra c2 = catalog_hopf("Q[C2]").algebra;
  Subspace unit_line = Subspace::span(Q, 2, {c2.unit()});
  CHECK(von_neumann_regular_check(c2, unit_line));

  Algebra dn = dual_numbers(Q);
  CHECK_FALSE(von_neumann_regular_check(dn, Subspace::full(Q, 2)));

  Algebra q2 = product_algebra(Q, 2);
  CHECK(von_neumann_regular_check(q2, Subspace::full(Q, 2)));

  // precondition violations are input errors
  Algebra m2 = matrix_algebra(Q, 2);
  CHECK_THROWS_AS(von_neumann_regular_check(m2, Subspace::full(Q, 4)), Error);
}

TEST_CASE("closure fixed points") {
  for (const char* name : {"Q[C2]", "Q[S3]"}) {
    Algebra a = catalog_hopf(name).algebra;
    auto ops = a.bimodule_operators();
    Rng rng(31);
    Subspace seed = Subspace::span(Q, a.dim(), {rng.nonzero_small_vec(Q, a.dim())});
    Subspace closed = operator_closure(seed, ops);
    CHECK(closed.contains(seed));
    CHECK(operator_closure(closed, ops) == closed);
    Subspace stable = largest_stable_subspace(closed, ops);
    CHECK(stable == closed);
  }
}
