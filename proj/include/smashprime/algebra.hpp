#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smashprime/linalg.hpp"
#include "smashprime/report.hpp"

namespace smashprime {

/// One basis element of an algebra or module, as a coefficient vector.
struct Element {
  Vec coeffs;
};

enum class Side { left, right };
enum class Sidedness { left, right, two_sided };

std::string to_string(Sidedness s);

/// Finite-dimensional associative unital algebra by structure constants:
/// e_i * e_j = sum_k mult[i][j][k] e_k.
class Algebra {
public:
  Algebra() = default;
  Algebra(FieldSpec f, std::size_t dim, std::vector<Vec> mult, Vec unit,
          std::vector<std::string> labels = {});

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structure-constant row: coefficients of e_i * e_j.
  const Vec& basis_product(std::size_t i, std::size_t j) const { return mult_[i * dim_ + j]; }

  Element element(Vec coeffs) const;
  Element unit_element() const { return Element{unit_}; }
  Element basis_element(std::size_t i) const { return Element{unit_vec(field_, dim_, i)}; }

  Element mul(const Element& x, const Element& y) const;
  Matrix regular_representation(const Element& x, Side side) const;
  Matrix left_mult_matrix(std::size_t basis_index) const;
  Matrix right_mult_matrix(std::size_t basis_index) const;

  /// All L_{e_i} followed by all R_{e_i}; the multiplication operators that
  /// cut out two-sided ideals as stable subspaces.
  std::vector<Matrix> bimodule_operators() const;

private:
  FieldSpec field_ = FieldSpec::rationals();
  std::size_t dim_ = 0;
  std::vector<Vec> mult_;  // (i * dim + j) -> product coefficients
  Vec unit_;
  std::vector<std::string> labels_;
};

/// Basis of an ideal together with its declared sidedness.
struct IdealBasis {
  Subspace space;
  Sidedness sidedness = Sidedness::two_sided;
};

/// Lists every violated associativity triple and unit law; empty iff valid.
CheckReport verify_algebra(const Algebra& a);

/// True when the subspace is closed under the declared one- or two-sided
/// multiplications.
bool is_ideal(const Algebra& a, const Subspace& s, Sidedness sidedness);

/// Span of all products u*v with u in x, v in y.
Subspace subspace_product(const Algebra& a, const Subspace& x, const Subspace& y);

/// True when some k-fold product of the subspace with itself vanishes, k <= dim.
bool is_nilpotent_subspace(const Algebra& a, const Subspace& s);

/// Largest nilpotent two-sided ideal. Over Q, and over F_p with p > dim, the
/// trace-form criterion rad = {x : trace(L_x L_y) = 0 for all y}; over F_p
/// with p <= dim and p^dim <= 4096 an exhaustive element search; otherwise
/// UnsupportedCharacteristic.
Subspace jacobson_radical(const Algebra& a);

bool radical_supported(const Algebra& a);

/// The exhaustive fallback on its own: enumerate every element of a small
/// finite algebra (p^dim <= 4096) and sum the nilpotent ideal closures.
/// Valid for any prime field in range, independent of the trace form.
Subspace radical_by_element_enumeration(const Algebra& a);

/// radical = 0; for finite-dimensional algebras this is semisimplicity.
bool is_semiprime_algebra(const Algebra& a);

/// {x : x*v = 0 for every v in the ideal}.
Subspace left_annihilator(const Algebra& a, const IdealBasis& i);

/// {x : L_x = R_x}.
Subspace center(const Algebra& a);

/// Quotient by a two-sided ideal, with basis the non-pivot coordinates of the
/// ideal's echelon basis.
Algebra quotient_algebra(const Algebra& a, const Subspace& ideal);

/// Subalgebra structure on a unital, multiplicatively closed subspace.
Algebra subalgebra_on(const Algebra& a, const Subspace& sub);

/// Von Neumann regularity of a commutative unital subalgebra: solvability of
/// x*y*x = x inside the subspace for a spanning set and for seeded random
/// elements; cross-checked against semiprimeness of the subalgebra.
bool von_neumann_regular_check(const Algebra& a, const Subspace& sub, std::size_t samples = 20,
                               std::uint64_t seed = 1);

}  // namespace smashprime
