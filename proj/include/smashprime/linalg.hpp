#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "smashprime/field.hpp"

namespace smashprime {

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldSpec f, std::size_t n);
Vec unit_vec(FieldSpec f, std::size_t n, std::size_t i);
std::string vec_str(const Vec& v);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);

/// Dense row-major matrix over an exact field.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_rows(FieldSpec f, const std::vector<Vec>& rows, std::size_t cols);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

private:
  FieldSpec field_ = FieldSpec::rationals();
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

/// Kronecker product; basis ordering e_i (x) e_j -> index i * cols(b) + j is
/// the system-wide convention for all tensor spaces.
Matrix kron(const Matrix& a, const Matrix& b);

/// Unique reduced row-echelon form. Leftmost nonzero pivot, rows processed
/// top-down, pivots normalized to 1, eliminated above and below.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One exact solution of m*x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// A subspace of F^n in canonical form: the basis rows are the nonzero rows
/// of a reduced row-echelon matrix, so equal subspaces compare equal.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(FieldSpec f, std::size_t ambient);
  static Subspace full(FieldSpec f, std::size_t ambient);
  /// Canonicalizes the row span of the given generators.
  static Subspace span(FieldSpec f, std::size_t ambient, const std::vector<Vec>& gens);

  FieldSpec field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  /// Residue of v after elimination against the basis (zero iff contained).
  Vec reduce(const Vec& v) const;

  /// Rows spanning the annihilator {f : f(v)=0 for all v in this}; the
  /// subspace is exactly the solution set of these linear conditions.
  Matrix coequations() const;

private:
  FieldSpec field_ = FieldSpec::rationals();
  std::size_t ambient_ = 0;
  Matrix basis_;  // rref, no zero rows
};

/// Right null space {v : m v = 0} in canonical form.
Subspace kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Smallest subspace containing seed and stable under every operator,
/// saturated to a fixed point.
Subspace operator_closure(const Subspace& seed, const std::vector<Matrix>& ops);

/// Largest subspace V of container with op(V) contained in V for every op,
/// computed by intersecting V with the operator preimages to a fixed point.
Subspace largest_stable_subspace(const Subspace& container, const std::vector<Matrix>& ops);

}  // namespace smashprime
