#include "smashprime/algebra.hpp"

#include <cstdint>

#include "smashprime/rng.hpp"

namespace smashprime {

std::string to_string(Sidedness s) {
  switch (s) {
    case Sidedness::left: return "left";
    case Sidedness::right: return "right";
    case Sidedness::two_sided: return "two_sided";
  }
  throw_internal("bad sidedness");
}

Algebra::Algebra(FieldSpec f, std::size_t dim, std::vector<Vec> mult, Vec unit,
                 std::vector<std::string> labels)
    : field_(f), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)), labels_(std::move(labels)) {
  if (dim_ == 0) throw_input("algebra dimension must be positive");
  if (mult_.size() != dim_ * dim_) throw_input("multiplication tensor has wrong shape");
  for (const auto& row : mult_)
    if (row.size() != dim_) throw_input("multiplication tensor has wrong shape");
  if (unit_.size() != dim_) throw_input("unit vector has wrong length");
  if (!labels_.empty() && labels_.size() != dim_) throw_input("label count mismatch");
}

Element Algebra::element(Vec coeffs) const {
  if (coeffs.size() != dim_) throw_input("element length does not match algebra dimension");
  return Element{std::move(coeffs)};
}

Element Algebra::mul(const Element& x, const Element& y) const {
  if (x.coeffs.size() != dim_ || y.coeffs.size() != dim_)
    throw_input("mul: element length does not match algebra dimension");
  Vec r = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y.coeffs[j].is_zero()) continue;
      const Scalar c = x.coeffs[i] * y.coeffs[j];
      const Vec& p = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!p[k].is_zero()) r[k] += c * p[k];
    }
  }
  return Element{std::move(r)};
}

Matrix Algebra::regular_representation(const Element& x, Side side) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Element col = side == Side::left ? mul(x, basis_element(j)) : mul(basis_element(j), x);
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col.coeffs[k];
  }
  return m;
}

Matrix Algebra::left_mult_matrix(std::size_t i) const {
  return regular_representation(basis_element(i), Side::left);
}

Matrix Algebra::right_mult_matrix(std::size_t i) const {
  return regular_representation(basis_element(i), Side::right);
}

std::vector<Matrix> Algebra::bimodule_operators() const {
  std::vector<Matrix> ops;
  ops.reserve(2 * dim_);
  for (std::size_t i = 0; i < dim_; ++i) ops.push_back(left_mult_matrix(i));
  for (std::size_t i = 0; i < dim_; ++i) ops.push_back(right_mult_matrix(i));
  return ops;
}

CheckReport verify_algebra(const Algebra& a) {
  CheckReport rep;
  const std::size_t n = a.dim();
  // associativity on basis triples, iterating only nonzero structure constants
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& pij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = zero_vec(a.field(), n);
        for (std::size_t l = 0; l < n; ++l) {
          if (pij[l].is_zero()) continue;
          const Vec& plk = a.basis_product(l, k);
          for (std::size_t t = 0; t < n; ++t)
            if (!plk[t].is_zero()) lhs[t] += pij[l] * plk[t];
        }
        const Vec& pjk = a.basis_product(j, k);
        Vec rhs = zero_vec(a.field(), n);
        for (std::size_t l = 0; l < n; ++l) {
          if (pjk[l].is_zero()) continue;
          const Vec& pil = a.basis_product(i, l);
          for (std::size_t t = 0; t < n; ++t)
            if (!pil[t].is_zero()) rhs[t] += pjk[l] * pil[t];
        }
        if (lhs != rhs)
          rep.add("associativity", "e" + std::to_string(i) + "*e" + std::to_string(j) + "*e" + std::to_string(k),
                  vec_str(lhs), vec_str(rhs));
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    Element ei = a.basis_element(i);
    Element lu = a.mul(a.unit_element(), ei);
    if (lu.coeffs != ei.coeffs)
      rep.add("left_unit", "e" + std::to_string(i), vec_str(lu.coeffs), vec_str(ei.coeffs));
    Element ru = a.mul(ei, a.unit_element());
    if (ru.coeffs != ei.coeffs)
      rep.add("right_unit", "e" + std::to_string(i), vec_str(ru.coeffs), vec_str(ei.coeffs));
  }
  return rep;
}

bool is_ideal(const Algebra& a, const Subspace& s, Sidedness sidedness) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix l = a.left_mult_matrix(i);
    Matrix r = a.right_mult_matrix(i);
    for (std::size_t b = 0; b < s.dim(); ++b) {
      Vec v = s.basis_row(b);
      if (sidedness != Sidedness::right && !s.contains(l.apply(v))) return false;
      if (sidedness != Sidedness::left && !s.contains(r.apply(v))) return false;
    }
  }
  return true;
}

Subspace subspace_product(const Algebra& a, const Subspace& x, const Subspace& y) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j)
      gens.push_back(a.mul(Element{x.basis_row(i)}, Element{y.basis_row(j)}).coeffs);
  return Subspace::span(a.field(), a.dim(), gens);
}

bool is_nilpotent_subspace(const Algebra& a, const Subspace& s) {
  Subspace cur = s;
  for (std::size_t k = 0; k <= a.dim(); ++k) {
    if (cur.dim() == 0) return true;
    Subspace next = subspace_product(a, cur, s);
    if (next.dim() >= cur.dim()) return false;  // stalled, can never reach zero
    cur = next;
  }
  return cur.dim() == 0;
}

namespace {

constexpr std::uint64_t kFallbackBound = 4096;

bool enumeration_in_range(const Algebra& a) {
  if (a.field().kind != FieldSpec::Kind::prime) return false;
  const std::uint64_t p = a.field().p;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    total *= p;
    if (total > kFallbackBound) return false;
  }
  return true;
}

bool fallback_regime(const Algebra& a) {
  if (a.field().kind != FieldSpec::Kind::prime) return false;
  if (a.field().p > a.dim()) return false;
  return enumeration_in_range(a);
}

Subspace radical_by_trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) left.push_back(a.left_mult_matrix(i));
  Matrix gram(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar t = Scalar::zero(a.field());
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& x = left[i].at(k, l);
          if (x.is_zero()) continue;
          const Scalar& y = left[j].at(l, k);
          if (!y.is_zero()) t += x * y;
        }
      gram.at(i, j) = t;
    }
  return kernel(gram);
}

}  // namespace

// Exhaustive search over all field elements: the radical is exactly the span
// of those x whose two-sided ideal closure is nilpotent.
Subspace radical_by_element_enumeration(const Algebra& a) {
  if (!enumeration_in_range(a))
    throw_unsupported("element enumeration requires a prime field with p^dim <= " +
                      std::to_string(kFallbackBound));
  const std::size_t n = a.dim();
  const std::uint64_t p = a.field().p;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  const std::vector<Matrix> ops = a.bimodule_operators();
  Subspace acc = Subspace::zero(a.field(), n);
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec v = zero_vec(a.field(), n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = Scalar::from_int(a.field(), static_cast<long>(c % p));
      c /= p;
    }
    if (acc.contains(v)) continue;  // already known to lie in the radical
    Subspace ideal = operator_closure(Subspace::span(a.field(), n, {v}), ops);
    if (is_nilpotent_subspace(a, ideal)) acc = subspace_sum(acc, ideal);
  }
  return acc;
}

bool radical_supported(const Algebra& a) {
  if (a.field().kind == FieldSpec::Kind::rational) return true;
  if (a.field().p > a.dim()) return true;
  return fallback_regime(a);
}

Subspace jacobson_radical(const Algebra& a) {
  if (a.field().kind == FieldSpec::Kind::rational || a.field().p > a.dim())
    return radical_by_trace_form(a);
  if (fallback_regime(a)) return radical_by_element_enumeration(a);
  throw_unsupported("radical not supported: characteristic " + std::to_string(a.field().p) +
                    " <= dim " + std::to_string(a.dim()) + " and p^dim > " +
                    std::to_string(kFallbackBound));
}

bool is_semiprime_algebra(const Algebra& a) { return jacobson_radical(a).dim() == 0; }

Subspace left_annihilator(const Algebra& a, const IdealBasis& i) {
  if (i.space.ambient_dim() != a.dim()) throw_input("left_annihilator: ambient mismatch");
  const std::size_t n = a.dim();
  if (i.space.dim() == 0) return Subspace::full(a.field(), n);
  // x * v = R_v x; stack the right-multiplication conditions for a basis of i
  Matrix stacked(a.field(), n * i.space.dim(), n);
  for (std::size_t b = 0; b < i.space.dim(); ++b) {
    Matrix rv = a.regular_representation(Element{i.space.basis_row(b)}, Side::right);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked.at(b * n + r, c) = rv.at(r, c);
  }
  return kernel(stacked);
}

Subspace center(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix cond(a.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        cond.at(j * n + k, i) = a.basis_product(i, j)[k] - a.basis_product(j, i)[k];
  return kernel(cond);
}

namespace {

std::vector<std::size_t> pivot_columns(const Matrix& rref_basis) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rref_basis.rows(); ++r) {
    std::size_t c = 0;
    while (c < rref_basis.cols() && rref_basis.at(r, c).is_zero()) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

}  // namespace

Algebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal, Sidedness::two_sided)) throw_input("quotient by a non-ideal subspace");
  const std::size_t n = a.dim();
  auto pivots = pivot_columns(ideal.basis());
  std::vector<bool> is_piv(n, false);
  for (auto c : pivots) is_piv[c] = true;
  std::vector<std::size_t> comp;  // complement coordinates = quotient basis
  for (std::size_t c = 0; c < n; ++c)
    if (!is_piv[c]) comp.push_back(c);
  const std::size_t q = comp.size();
  if (q == 0) throw_input("quotient by the full algebra is not unital");
  auto project = [&](const Vec& v) {
    Vec red = ideal.reduce(v);
    Vec out;
    out.reserve(q);
    for (auto c : comp) out.push_back(red[c]);
    return out;
  };
  std::vector<Vec> mult(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      mult[i * q + j] = project(a.basis_product(comp[i], comp[j]));
  return Algebra(a.field(), q, std::move(mult), project(a.unit()));
}

Algebra subalgebra_on(const Algebra& a, const Subspace& sub) {
  const std::size_t d = sub.dim();
  if (d == 0) throw_input("subalgebra on the zero subspace");
  auto pivots = pivot_columns(sub.basis());
  auto coords = [&](const Vec& v) {
    if (!sub.contains(v)) throw_input("subalgebra_on: subspace is not multiplicatively closed");
    Vec out;
    out.reserve(d);
    for (auto c : pivots) out.push_back(v[c]);  // rref basis: coordinates sit at pivot columns
    return out;
  };
  std::vector<Vec> mult(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      mult[i * d + j] = coords(a.mul(Element{sub.basis_row(i)}, Element{sub.basis_row(j)}).coeffs);
  if (!sub.contains(a.unit())) throw_input("subalgebra_on: subspace does not contain the unit");
  return Algebra(a.field(), d, std::move(mult), coords(a.unit()));
}

bool von_neumann_regular_check(const Algebra& a, const Subspace& sub, std::size_t samples,
                               std::uint64_t seed) {
  // preconditions: unital, multiplicatively closed, commutative
  if (!sub.contains(a.unit())) throw_input("von_neumann_regular_check: subspace lacks the unit");
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (std::size_t j = 0; j < sub.dim(); ++j) {
      Vec p = a.mul(Element{sub.basis_row(i)}, Element{sub.basis_row(j)}).coeffs;
      if (!sub.contains(p)) throw_input("von_neumann_regular_check: subspace not closed under multiplication");
      Vec q = a.mul(Element{sub.basis_row(j)}, Element{sub.basis_row(i)}).coeffs;
      if (p != q) throw_input("von_neumann_regular_check: subspace is not commutative");
    }
  Algebra s = subalgebra_on(a, sub);
  const std::size_t d = s.dim();

  auto quasi_invertible = [&](const Vec& x) {
    // solve x*y*x = x for y; with x central in s this is L_{x^2} y = x
    Element xe{x};
    Matrix lx = s.regular_representation(xe, Side::left);
    Matrix t = lx * s.regular_representation(xe, Side::right);
    return solve(t, x).has_value();
  };

  bool sampled_ok = true;
  for (std::size_t i = 0; i < d && sampled_ok; ++i)
    sampled_ok = quasi_invertible(unit_vec(s.field(), d, i));
  Subspace rad = jacobson_radical(s);
  for (std::size_t i = 0; i < rad.dim() && sampled_ok; ++i)
    sampled_ok = quasi_invertible(rad.basis_row(i));
  Rng rng(seed);
  for (std::size_t k = 0; k < samples && sampled_ok; ++k)
    sampled_ok = quasi_invertible(rng.nonzero_small_vec(s.field(), d));

  const bool semiprime = rad.dim() == 0;
  if (sampled_ok != semiprime)
    throw_internal("von Neumann regularity probes disagree with the semiprimeness of the subalgebra");
  return sampled_ok;
}

}  // namespace smashprime
