#pragma once

#include <functional>

#include "smashprime/module_algebra.hpp"

namespace smashprime {

/// Finite group by multiplication table; the axioms are verified on
/// construction.
struct GroupTable {
  std::string name;
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of g_i g_j
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::string> labels;

  static GroupTable cyclic(std::size_t n);
  static GroupTable klein_four();
  static GroupTable symmetric3();
};

void verify_group_table(const GroupTable& g);

/// Group algebra k[G]: grouplike basis, counit 1, antipode = inversion.
HopfAlgebra group_algebra(FieldSpec f, const GroupTable& g);

/// Dual group algebra k^G: orthogonal idempotents p_g with
/// Delta(p_g) = sum_{xy=g} p_x (x) p_y.
HopfAlgebra dual_group_algebra(FieldSpec f, const GroupTable& g);

/// Sweedler's 4-dimensional Hopf algebra over a field of characteristic != 2.
HopfAlgebra sweedler_h4(FieldSpec f);

/// A = k^set_size coordinatewise with k[G] permuting the coordinates through
/// the given action (action[g] maps set indices; must be a homomorphism).
HModuleAlgebra permutation_module_algebra(FieldSpec f, const GroupTable& g, std::size_t set_size,
                                          const std::vector<std::vector<std::size_t>>& action);

/// A = k[G] as an algebra under H = k^G with p_g . e_h = delta_{g,h} e_h.
HModuleAlgebra regular_module_algebra(FieldSpec f, const GroupTable& g);

/// k[x]/(x^2) over the given field (basis {1, x}).
Algebra dual_numbers(FieldSpec f);

/// n x n matrix algebra (basis E_ij in row-major order).
Algebra matrix_algebra(FieldSpec f, std::size_t n);

/// Trivial action h . a = eps(h) a.
HModuleAlgebra trivial_module_algebra(HopfAlgebra h, Algebra a);

/// Sweedler's H4 on k[x]/(x^2): g acts by x -> -x, the skew primitive by
/// x -> 1, 1 -> 0.
HModuleAlgebra sweedler_dual_numbers(FieldSpec f);

struct NegativeControl {
  std::string name;
  HModuleAlgebra ma;
  std::string expected_failure;  // tag driving the suites' expectations
};

/// The standard failing instances: (Q[x]/(x^2), trivial Q[C2]) with A and
/// A#H not semiprime, and (F2, trivial F2[C2]) with H not semisimple and
/// A#H not semiprime.
std::vector<NegativeControl> negative_controls();

/// Named catalog entries for the CLI and the suites.
struct CatalogHopf {
  std::string name;
  std::function<HopfAlgebra()> build;
};
struct CatalogMA {
  std::string name;
  std::function<HModuleAlgebra()> build;
};

const std::vector<CatalogHopf>& catalog_hopfs();
const std::vector<CatalogMA>& catalog_module_algebras();

HopfAlgebra catalog_hopf(const std::string& name);
HModuleAlgebra catalog_ma(const std::string& name);

/// The bundled group tables by name (C2, C3, C4, C2xC2, S3), for
/// field-parametric construction.
std::optional<GroupTable> group_table_by_name(const std::string& name);

}  // namespace smashprime
