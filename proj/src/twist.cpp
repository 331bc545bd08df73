#include "smashprime/twist.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace smashprime {

namespace {

Vec tensor_multiply_down(const HopfAlgebra& h, const TensorElement& x) {
  if (x.arity != 2) throw_input("tensor_multiply_down: arity 2 only");
  const std::size_t n = h.dim();
  Vec out = zero_vec(h.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& c = x.coeffs[i * n + j];
      if (c.is_zero()) continue;
      const Vec& p = h.algebra.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  return out;
}

TensorElement comult_row(const HopfAlgebra& h, std::size_t i) {
  return TensorElement{2, h.coalgebra.comult[i]};
}

}  // namespace

TwistVerification verify_twist(const HopfAlgebra& h, const TensorElement& j) {
  TwistVerification out;
  const std::size_t n = h.dim();
  if (j.arity != 2 || j.coeffs.size() != n * n) {
    out.report.add("shape", "J");
    return out;
  }
  auto q = tensor_invert(h, j);
  if (!q) {
    out.report.add("invertibility", "J", "no two-sided inverse", "");
    return out;
  }
  // counit normalization (eps (x) 1)(J) = 1 = (1 (x) eps)(J)
  Vec left = apply_counit_at(h, j, 0).coeffs;
  Vec right = apply_counit_at(h, j, 1).coeffs;
  if (left != h.algebra.unit())
    out.report.add("counit_left", "(eps(x)1)(J)", vec_str(left), vec_str(h.algebra.unit()));
  if (right != h.algebra.unit())
    out.report.add("counit_right", "(1(x)eps)(J)", vec_str(right), vec_str(h.algebra.unit()));
  // cocycle identity in H^{(x)3}
  TensorElement lhs = tensor_mul(h, insert_unit_at(h, j, 2), apply_comult_at(h, j, 0));
  TensorElement rhs = tensor_mul(h, insert_unit_at(h, j, 0), apply_comult_at(h, j, 1));
  if (!(lhs == rhs)) out.report.add("cocycle", "(J(x)1)(Delta(x)1)(J) = (1(x)J)(1(x)Delta)(J)");
  if (out.report.ok()) out.twist = DrinfeldTwist{j, std::move(*q)};
  return out;
}

HopfAlgebra twist_hopf(const HopfAlgebra& h, const DrinfeldTwist& t) {
  const std::size_t n = h.dim();
  Coalgebra co;
  co.dim = n;
  co.counit = h.coalgebra.counit;
  co.comult.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    co.comult.push_back(tensor_mul(h, tensor_mul(h, t.j, comult_row(h, i)), t.q).coeffs);

  Vec u = tensor_multiply_down(h, apply_antipode_at(h, t.j, 1));       // sum J1 S(J2)
  Vec u_inv = tensor_multiply_down(h, apply_antipode_at(h, t.q, 0));   // sum S(Q1) Q2
  if (h.algebra.mul(Element{u}, Element{u_inv}).coeffs != h.algebra.unit() ||
      h.algebra.mul(Element{u_inv}, Element{u}).coeffs != h.algebra.unit())
    throw_internal("twist_hopf: U and its formula inverse do not multiply to 1");

  Matrix lu = h.algebra.regular_representation(Element{u}, Side::left);
  Matrix ru_inv = h.algebra.regular_representation(Element{u_inv}, Side::right);
  Matrix s_j = lu * (ru_inv * h.antipode);  // h -> U S(h) U^{-1}

  HopfAlgebra out{h.algebra, std::move(co), std::move(s_j)};
  CheckReport rep = verify_hopf(out);
  if (!rep.ok()) throw_internal("twisted Hopf algebra fails verification: " + rep.summary());
  return out;
}

namespace {

// multiplication tensor of a ._J b = sum (Q1 a)(Q2 b)
std::vector<Vec> twisted_mult_tensor(const HModuleAlgebra& ma, const TensorElement& q_tensor) {
  const std::size_t n = ma.alg_dim();
  const std::size_t m = ma.hopf_dim();
  const FieldSpec f = ma.algebra.field();
  std::vector<Vec> mult(n * n, zero_vec(f, n));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      const Scalar& c = q_tensor.coeffs[p * m + q];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        Vec qa = ma.action[p].apply(unit_vec(f, n, i));
        for (std::size_t j = 0; j < n; ++j) {
          Vec qb = ma.action[q].apply(unit_vec(f, n, j));
          Vec prod = ma.algebra.mul(Element{qa}, Element{qb}).coeffs;
          Vec& out = mult[i * n + j];
          for (std::size_t k = 0; k < n; ++k)
            if (!prod[k].is_zero()) out[k] += c * prod[k];
        }
      }
    }
  return mult;
}

Vec bilinear(const std::vector<Vec>& mult, std::size_t n, const Vec& x, const Vec& y, FieldSpec f) {
  Vec out = zero_vec(f, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (x[s].is_zero()) continue;
    for (std::size_t t = 0; t < n; ++t) {
      if (y[t].is_zero()) continue;
      const Scalar c = x[s] * y[t];
      const Vec& p = mult[s * n + t];
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  }
  return out;
}

}  // namespace

HModuleAlgebra twist_module_algebra(const HModuleAlgebra& ma, const DrinfeldTwist& t) {
  Algebra twisted(ma.algebra.field(), ma.alg_dim(), twisted_mult_tensor(ma, t.q), ma.algebra.unit(),
                  ma.algebra.labels());
  HModuleAlgebra out{twist_hopf(ma.hopf, t), std::move(twisted), ma.action};
  CheckReport rep = verify_module_algebra(out);
  if (!rep.ok()) throw_internal("twisted module algebra fails verification: " + rep.summary());
  return out;
}

CheckReport verify_twist_relation(const HModuleAlgebra& ma, const DrinfeldTwist& t) {
  CheckReport rep;
  const std::size_t n = ma.alg_dim();
  const std::size_t m = ma.hopf_dim();
  const FieldSpec f = ma.algebra.field();
  std::vector<Vec> mult_j = twisted_mult_tensor(ma, t.q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = ma.algebra.basis_product(i, j);
      Vec rhs = zero_vec(f, n);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
          const Scalar& c = t.j.coeffs[p * m + q];
          if (c.is_zero()) continue;
          Vec ja = ma.action[p].apply(unit_vec(f, n, i));
          Vec jb = ma.action[q].apply(unit_vec(f, n, j));
          Vec prod = bilinear(mult_j, n, ja, jb, f);
          for (std::size_t k = 0; k < n; ++k)
            if (!prod[k].is_zero()) rhs[k] += c * prod[k];
        }
      if (lhs != rhs)
        rep.add("twist_relation", "a" + std::to_string(i) + "*a" + std::to_string(j), vec_str(lhs),
                vec_str(rhs));
    }
  return rep;
}

namespace {

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim() || !(a.field() == b.field())) return false;
  if (a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
  return true;
}

bool same_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
  return same_algebra(a.algebra, b.algebra) && a.coalgebra.comult == b.coalgebra.comult &&
         a.coalgebra.counit == b.coalgebra.counit && a.antipode == b.antipode;
}

}  // namespace

CheckReport inverse_twist_check(const HopfAlgebra& h, const DrinfeldTwist& t,
                                const HModuleAlgebra* ma) {
  CheckReport rep;
  HopfAlgebra hj = twist_hopf(h, t);
  TwistVerification qv = verify_twist(hj, t.q);
  if (!qv.twist) {
    rep.add("inverse_is_twist", "Q on H^J", qv.report.summary(), "");
    return rep;
  }
  HopfAlgebra back = twist_hopf(hj, t.inverse());
  if (!same_hopf(back, h)) rep.add("hopf_round_trip", "(H^J)^{J^-1}", "differs from H", "");
  if (ma != nullptr) {
    HModuleAlgebra maj = twist_module_algebra(*ma, t);
    HModuleAlgebra back_ma = twist_module_algebra(maj, t.inverse());
    if (!same_algebra(back_ma.algebra, ma->algebra))
      rep.add("module_round_trip", "(A^J)^{J^-1}", "differs from A", "");
    if (!(back_ma.action == ma->action))
      rep.add("module_round_trip_action", "(A^J)^{J^-1}", "action differs", "");
  }
  return rep;
}

TriangularVerification verify_triangular(const HopfAlgebra& h, const TensorElement& r) {
  TriangularVerification out;
  const std::size_t n = h.dim();
  if (r.arity != 2 || r.coeffs.size() != n * n) {
    out.report.add("shape", "R");
    return out;
  }
  auto rinv = tensor_invert(h, r);
  if (!rinv) {
    out.report.add("invertibility", "R", "no two-sided inverse", "");
    return out;
  }
  TensorElement r12 = insert_unit_at(h, r, 2);
  TensorElement r13 = insert_unit_at(h, r, 1);
  TensorElement r23 = insert_unit_at(h, r, 0);
  if (!(apply_comult_at(h, r, 0) == tensor_mul(h, r13, r23)))
    out.report.add("hexagon_1", "(Delta(x)1)(R) = R13 R23");
  if (!(apply_comult_at(h, r, 1) == tensor_mul(h, r13, r12)))
    out.report.add("hexagon_2", "(1(x)Delta)(R) = R13 R12");
  for (std::size_t i = 0; i < n; ++i) {
    TensorElement row = comult_row(h, i);
    TensorElement cop = tensor_swap(h, row);
    if (!(tensor_mul(h, cop, r) == tensor_mul(h, r, row))) {
      out.report.add("cop_conjugation", "Delta_cop(e" + std::to_string(i) + ") R = R Delta(e" + std::to_string(i) + ")");
      break;
    }
  }
  if (!(*rinv == tensor_swap(h, r))) out.report.add("inverse_is_tau", "R^{-1} = tau(R)");
  if (out.report.ok()) out.structure = TriangularStructure{r, std::move(*rinv)};
  return out;
}

TransferReport semiprime_transfer_check(const HModuleAlgebra& ma, const DrinfeldTwist& t) {
  TransferReport rep;
  rep.a_h_semiprime = is_h_semiprime(ma).h_semiprime;
  HModuleAlgebra maj = twist_module_algebra(ma, t);
  rep.aj_hj_semiprime = is_h_semiprime(maj).h_semiprime;
  rep.smash_rad_dim = jacobson_radical(build_smash(ma).algebra).dim();
  rep.smash_j_rad_dim = jacobson_radical(build_smash(maj).algebra).dim();
  rep.smash_semiprime = rep.smash_rad_dim == 0;
  rep.smash_j_semiprime = rep.smash_j_rad_dim == 0;
  rep.theorem_violation =
      rep.a_h_semiprime != rep.aj_hj_semiprime || rep.smash_rad_dim != rep.smash_j_rad_dim;
  return rep;
}

std::vector<Scalar> default_twist_grid(FieldSpec f) {
  std::vector<Scalar> g;
  auto push_unique = [&](const Scalar& s) {
    if (std::find(g.begin(), g.end(), s) == g.end()) g.push_back(s);
  };
  push_unique(Scalar::zero(f));
  push_unique(Scalar::one(f));
  push_unique(Scalar::from_int(f, -1));
  if (f.characteristic() != 2) {
    Scalar half = Scalar::from_int(f, 1) / Scalar::from_int(f, 2);
    push_unique(half);
    push_unique(-half);
  }
  return g;
}

TwistSearchResult twist_search(const HopfAlgebra& h, std::vector<Scalar> grid, std::size_t limit) {
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  TwistSearchResult result;
  result.grid = grid;
  if (grid.empty()) throw_input("twist_search: empty grid");
  if (n * n > 16) throw_unsupported("twist_search: supported up to dimension 4 (16 coefficients)");

  // basis must consist of grouplikes forming a group (group algebra)
  std::size_t id = n;
  for (std::size_t i = 0; i < n; ++i)
    if (h.algebra.unit() == unit_vec(f, n, i)) id = i;
  if (id == n) throw_unsupported("twist_search: unit is not a basis element");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    Vec gg = zero_vec(f, n * n);
    gg[i * n + i] = Scalar::one(f);
    if (h.coalgebra.comult[i] != gg || !h.coalgebra.counit[i].is_one())
      throw_unsupported("twist_search: basis element " + std::to_string(i) + " is not grouplike");
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& p = h.algebra.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) {
          if (!p[k].is_one() || table[i][j] != n)
            throw_unsupported("twist_search: basis products are not single group elements");
          table[i][j] = k;
        }
      if (table[i][j] == n) throw_unsupported("twist_search: zero basis product");
    }
  }
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] == id) inverse[i] = j;

  // scale the grid to integers by the lcm of denominators (rationals), or use
  // residues directly (prime fields)
  const bool rational = f.kind == FieldSpec::Kind::rational;
  long denom_lcm = 1;
  if (rational) {
    mpz_class l(1);
    for (const auto& s : grid) {
      mpz_class d = s.rat().get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    if (!l.fits_slong_p()) throw_input("twist_search: grid denominators too large");
    denom_lcm = l.get_si();
  }
  std::vector<long> scaled;
  for (const auto& s : grid) {
    if (rational) {
      mpq_class v = s.rat() * denom_lcm;
      if (v.get_den() != 1 || !v.get_num().fits_slong_p())
        throw_input("twist_search: grid value out of integer range after scaling");
      scaled.push_back(v.get_num().get_si());
    } else {
      scaled.push_back(static_cast<long>(s.residue()));
    }
  }
  long max_abs = 0;
  for (long v : scaled) max_abs = std::max(max_abs, std::labs(v));
  const long target = rational ? denom_lcm : 1;  // scaled value of the field's 1
  const long p_mod = rational ? 0 : static_cast<long>(f.p);
  auto norm = [&](long v) { return rational ? v : ((v % p_mod) + p_mod) % p_mod; };

  // integer cocycle check on a scaled coefficient matrix:
  // lhs[g1,g2,g3] = sum_a C[g1 a^-1][g2 a^-1] C[a][g3]
  // rhs[g1,g2,g3] = sum_b C[g2 b^-1][g3 b^-1] C[g1][b]
  auto cocycle_ok = [&](const std::vector<long>& c) {
    for (std::size_t g1 = 0; g1 < n; ++g1)
      for (std::size_t g2 = 0; g2 < n; ++g2)
        for (std::size_t g3 = 0; g3 < n; ++g3) {
          long lhs = 0, rhs = 0;
          for (std::size_t a = 0; a < n; ++a)
            lhs += c[table[g1][inverse[a]] * n + table[g2][inverse[a]]] * c[a * n + g3];
          for (std::size_t b = 0; b < n; ++b)
            rhs += c[table[g2][inverse[b]] * n + table[g3][inverse[b]]] * c[g1 * n + b];
          if (norm(lhs) != norm(rhs)) return false;
        }
    return true;
  };

  auto try_candidate = [&](const std::vector<long>& c) {
    ++result.cocycle_survivors;
    Vec coeffs = zero_vec(f, n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      if (rational)
        coeffs[i] = Scalar::from_mpq(f, mpq_class(c[i], denom_lcm));
      else
        coeffs[i] = Scalar::from_int(f, c[i]);
    }
    TwistVerification v = verify_twist(h, TensorElement{2, std::move(coeffs)});
    if (v.twist) result.twists.push_back(std::move(*v.twist));
  };

  // trivial candidate first (when its values lie on the grid)
  std::vector<long> trivial(n * n, 0);
  trivial[id * n + id] = target;
  const bool trivial_on_grid = std::find(scaled.begin(), scaled.end(), 0) != scaled.end() &&
                               std::find(scaled.begin(), scaled.end(), target) != scaled.end();
  if (trivial_on_grid) {
    ++result.leaves_examined;
    if (cocycle_ok(trivial)) try_candidate(trivial);
  }

  // row candidates by row sum: row g must sum to target * [g == id]
  std::vector<std::vector<std::vector<long>>> rows_by_kind(2);
  {
    const std::size_t total = tensor_pow(grid.size(), n);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<long> row(n);
      std::size_t c = code;
      long sum = 0;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = scaled[c % grid.size()];
        sum += row[i];
        c /= grid.size();
      }
      if (norm(sum) == 0) rows_by_kind[0].push_back(row);
      if (norm(sum) == norm(target)) rows_by_kind[1].push_back(row);
    }
  }

  std::vector<long> mat(n * n, 0);
  std::vector<long> colsum(n, 0);
  auto col_target = [&](std::size_t c) { return c == id ? target : 0; };
  auto reached_limit = [&] { return limit > 0 && result.twists.size() >= limit; };

  std::function<void(std::size_t)> dfs = [&](std::size_t row) {
    if (reached_limit()) return;
    if (row == n) {
      for (std::size_t c = 0; c < n; ++c)
        if (norm(colsum[c]) != norm(col_target(c))) return;
      ++result.leaves_examined;
      if (trivial_on_grid && mat == trivial) return;  // already examined
      if (cocycle_ok(mat)) try_candidate(mat);
      return;
    }
    const long rows_left = static_cast<long>(n - row - 1);
    for (const auto& r : rows_by_kind[row == id ? 1 : 0]) {
      for (std::size_t c = 0; c < n; ++c) colsum[c] += r[c];
      bool feasible = true;
      if (rational) {
        // the remaining rows move each column sum by at most rows_left*max_abs
        for (std::size_t c = 0; c < n; ++c)
          if (std::labs(col_target(c) - colsum[c]) > rows_left * max_abs) {
            feasible = false;
            break;
          }
      }
      if (feasible) {
        for (std::size_t c = 0; c < n; ++c) mat[row * n + c] = r[c];
        dfs(row + 1);
      }
      for (std::size_t c = 0; c < n; ++c) colsum[c] -= r[c];
      if (reached_limit()) return;
    }
  };
  dfs(0);
  return result;
}

}  // namespace smashprime
