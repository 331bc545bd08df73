#include "support/oracle.hpp"

#include <algorithm>

namespace smashprime::testsupport {

std::vector<mpq_class> charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw_input("charpoly: square matrix required");
  if (m.field().kind != FieldSpec::Kind::rational) throw_input("charpoly: rational field required");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: p(x) = x^n + a_{n-1} x^{n-1} + ... + a_0
  std::vector<mpq_class> coeffs(n + 1);
  coeffs[0] = 1;  // leading
  Matrix ak = m;
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += ak.at(i, i).rat();
    mpq_class a = -tr / static_cast<long>(k);
    coeffs[k] = a;
    if (k == n) break;
    Matrix shifted = ak;
    for (std::size_t i = 0; i < n; ++i)
      shifted.at(i, i) = Scalar::from_mpq(m.field(), shifted.at(i, i).rat() + a);
    ak = m * shifted;
  }
  return coeffs;
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& v) {
  mpz_class a = abs(v);
  std::vector<mpz_class> ds;
  for (mpz_class d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      ds.push_back(d);
      ds.push_back(a / d);
    }
  return ds;
}

}  // namespace

std::vector<mpq_class> rational_eigenvalues(const Matrix& m) {
  std::vector<mpq_class> p = charpoly(m);
  // clear denominators to an integer polynomial
  mpz_class lcm = 1;
  for (const auto& c : p) {
    mpz_class den = c.get_den(), g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> ip;
  for (const auto& c : p) {
    mpq_class v = c * lcm;
    ip.push_back(v.get_num());
  }
  std::vector<mpq_class> roots;
  // strip zero roots
  std::size_t deg = ip.size() - 1;
  while (deg > 0 && ip[deg] == 0) {
    if (std::find(roots.begin(), roots.end(), mpq_class(0)) == roots.end()) roots.push_back(0);
    ip.pop_back();
    --deg;
  }
  if (deg == 0) return roots;
  auto eval_zero = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (const auto& c : ip) acc = acc * x + mpq_class(c);
    return acc == 0;
  };
  for (const auto& num : divisors_of(ip[deg]))
    for (const auto& den : divisors_of(ip[0]))
      for (int sign = -1; sign <= 1; sign += 2) {
        mpq_class cand(sign * num, den);
        cand.canonicalize();
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (eval_zero(cand)) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Subspace exhaustive_radical(const Algebra& a) {
  if (a.field().kind != FieldSpec::Kind::rational) throw_input("exhaustive_radical: rational field required");
  const std::size_t n = a.dim();
  if (n > 3) throw_input("exhaustive_radical: supported up to dimension 3");
  const FieldSpec f = a.field();
  Subspace sum = Subspace::zero(f, n);

  // 1-dimensional ideals: common eigenvectors of all L_i and R_i
  struct Branch {
    Subspace space;
    Vec left_eigs;  // eigenvalue of L_i on this joint eigenspace
  };
  std::vector<Branch> branches{{Subspace::full(f, n), zero_vec(f, n)}};
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < n; ++i) {
      Matrix op = pass == 0 ? a.left_mult_matrix(i) : a.right_mult_matrix(i);
      std::vector<Branch> next;
      for (const auto& br : branches) {
        for (const auto& lam : rational_eigenvalues(op)) {
          Matrix shifted = op;
          for (std::size_t d = 0; d < n; ++d)
            shifted.at(d, d) = shifted.at(d, d) - Scalar::from_mpq(f, lam);
          Subspace eig = subspace_intersect(br.space, kernel(shifted));
          if (eig.dim() == 0) continue;
          Branch nb{eig, br.left_eigs};
          if (pass == 0) nb.left_eigs[i] = Scalar::from_mpq(f, lam);
          next.push_back(std::move(nb));
        }
      }
      branches = std::move(next);
    }
  for (const auto& br : branches) {
    // x in the joint eigenspace spans an ideal with x^2 = (sum_i x_i lambda_{L_i}) x;
    // the nilpotent ones form the kernel of that linear form within the branch
    Matrix cut(f, 1, n);
    for (std::size_t i = 0; i < n; ++i) cut.at(0, i) = br.left_eigs[i];
    Subspace nil = subspace_intersect(br.space, kernel(cut));
    if (nil.dim() > 0) sum = subspace_sum(sum, nil);
  }

  // codimension-1 candidate: the kernel of x -> trace(L_x)
  if (n >= 2) {
    Matrix tr(f, 1, n);
    for (std::size_t i = 0; i < n; ++i) {
      Matrix li = a.left_mult_matrix(i);
      Scalar t = Scalar::zero(f);
      for (std::size_t d = 0; d < n; ++d) t += li.at(d, d);
      tr.at(0, i) = t;
    }
    Subspace hyper = kernel(tr);
    if (hyper.dim() == n - 1 && is_ideal(a, hyper, Sidedness::two_sided) &&
        is_nilpotent_subspace(a, hyper))
      sum = subspace_sum(sum, hyper);
  }

  if (!is_ideal(a, sum, Sidedness::two_sided) || !is_nilpotent_subspace(a, sum))
    throw_internal("exhaustive_radical: collected sum is not a nilpotent ideal");
  return sum;
}

Algebra random_associative_algebra(Rng& rng, std::size_t dim) {
  if (dim == 0 || dim > 3) throw_input("random_associative_algebra: dim in 1..3");
  const FieldSpec f = FieldSpec::rationals();
  for (std::size_t attempt = 0; attempt < 200000; ++attempt) {
    std::vector<Vec> mult(dim * dim, zero_vec(f, dim));
    for (std::size_t j = 0; j < dim; ++j) {
      mult[0 * dim + j] = unit_vec(f, dim, j);
      mult[j * dim + 0] = unit_vec(f, dim, j);
    }
    for (std::size_t i = 1; i < dim; ++i)
      for (std::size_t j = 1; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          mult[i * dim + j][k] = Scalar::from_int(f, rng.range(-1, 1));
    Algebra cand(f, dim, std::move(mult), unit_vec(f, dim, 0));
    if (verify_algebra(cand).ok()) return cand;
  }
  throw_internal("random_associative_algebra: rejection sampling failed to terminate");
}

}  // namespace smashprime::testsupport
