#include "smashprime/linalg.hpp"

#include <algorithm>

#include "smashprime/error.hpp"

namespace smashprime {

Vec zero_vec(FieldSpec f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

Vec unit_vec(FieldSpec f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw_input("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw_input("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw_input("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw_input("matrix product dimension mismatch");
  Matrix p(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o.at(k, c);
        if (!b.is_zero()) p.at(r, c) += a * b;
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw_input("matrix sum dimension mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] += o.e_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw_input("matrix difference dimension mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] -= o.e_[i];
  return s;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw_input("matrix apply dimension mismatch");
  Vec r = zero_vec(field_, rows_);
  for (std::size_t row = 0; row < rows_; ++row)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = at(row, c);
      if (!a.is_zero() && !v[c].is_zero()) r[row] += a * v[c];
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& c = a.at(i, j);
      if (c.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) {
          const Scalar& d = b.at(p, q);
          if (!d.is_zero()) k.at(i * b.rows() + p, j * b.cols() + q) = c * d;
        }
    }
  return k;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m.at(r, j).is_zero()) continue;
        m.at(i, j) -= f * m.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix rref(const Matrix& m) {
  Matrix r(m);
  rref_in_place(r);
  return r;
}

std::size_t rank(const Matrix& m) {
  Matrix r(m);
  return rref_in_place(r).size();
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw_input("solve: rhs length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

Subspace Subspace::zero(FieldSpec f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(FieldSpec f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(f, ambient);
  return s;
}

Subspace Subspace::span(FieldSpec f, std::size_t ambient, const std::vector<Vec>& gens) {
  Matrix m = Matrix::from_rows(f, gens, ambient);
  auto pivots = rref_in_place(m);
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, pivots.size(), ambient);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) s.basis_.at(r, c) = m.at(r, c);
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw_input("subspace reduce: ambient mismatch");
  Vec r(v);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // pivot column of row i = first nonzero entry (basis is rref)
    std::size_t pc = 0;
    while (pc < ambient_ && basis_.at(i, pc).is_zero()) ++pc;
    if (pc == ambient_ || r[pc].is_zero()) continue;
    const Scalar f = r[pc];
    for (std::size_t c = pc; c < ambient_; ++c)
      if (!basis_.at(i, c).is_zero()) r[c] -= f * basis_.at(i, c);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw_input("subspace containment: ambient mismatch");
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

Matrix Subspace::coequations() const {
  // kernel of basis (as a map on column vectors) gives the linear functionals
  // vanishing on the row span; by double annihilation their solution set is
  // exactly this subspace.
  Subspace ann = kernel(basis_);
  return ann.basis();
}

Subspace kernel(const Matrix& m) {
  Matrix r(m);
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[c] = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, c);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), gens);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw_input("subspace sum: ambient mismatch");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < u.dim(); ++i) gens.push_back(u.basis_row(i));
  for (std::size_t i = 0; i < v.dim(); ++i) gens.push_back(v.basis_row(i));
  return Subspace::span(u.field(), u.ambient_dim(), gens);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw_input("subspace intersect: ambient mismatch");
  // x in u cap v iff x satisfies the coequations of both.
  Matrix cu = u.coequations();
  Matrix cv = v.coequations();
  Matrix stacked(u.field(), cu.rows() + cv.rows(), u.ambient_dim());
  for (std::size_t r = 0; r < cu.rows(); ++r)
    for (std::size_t c = 0; c < u.ambient_dim(); ++c) stacked.at(r, c) = cu.at(r, c);
  for (std::size_t r = 0; r < cv.rows(); ++r)
    for (std::size_t c = 0; c < u.ambient_dim(); ++c) stacked.at(cu.rows() + r, c) = cv.at(r, c);
  return kernel(stacked);
}

Subspace operator_closure(const Subspace& seed, const std::vector<Matrix>& ops) {
  const std::size_t n = seed.ambient_dim();
  for (const auto& op : ops)
    if (op.rows() != n || op.cols() != n) throw_input("operator_closure: operator size mismatch");
  Subspace cur = seed;
  for (std::size_t iter = 0; iter <= n + 1; ++iter) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < cur.dim(); ++i) gens.push_back(cur.basis_row(i));
    const std::size_t base = gens.size();
    for (const auto& op : ops)
      for (std::size_t i = 0; i < base; ++i) {
        Vec w = op.apply(gens[i]);
        if (!cur.contains(w)) gens.push_back(std::move(w));
      }
    if (gens.size() == base) return cur;
    Subspace next = Subspace::span(seed.field(), n, gens);
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
  throw_internal("operator_closure failed to reach a fixed point");
}

Subspace largest_stable_subspace(const Subspace& container, const std::vector<Matrix>& ops) {
  const std::size_t n = container.ambient_dim();
  for (const auto& op : ops)
    if (op.rows() != n || op.cols() != n) throw_input("largest_stable_subspace: operator size mismatch");
  Subspace cur = container;
  for (std::size_t iter = 0; iter <= n + 1; ++iter) {
    Subspace next = cur;
    Matrix co = cur.coequations();
    for (const auto& op : ops) {
      // preimage op^{-1}(cur) = kernel of (coequations * op)
      next = subspace_intersect(next, kernel(co * op));
    }
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
  throw_internal("largest_stable_subspace failed to reach a fixed point");
}

}  // namespace smashprime
