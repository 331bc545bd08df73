#include "smashprime/hopf.hpp"

namespace smashprime {

std::size_t tensor_pow(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= n;
  return r;
}

namespace {

void check_coalgebra_shape(const Algebra& a, const Coalgebra& c) {
  if (c.dim != a.dim()) throw_input("coalgebra dimension mismatch");
  if (c.comult.size() != c.dim) throw_input("comultiplication has wrong shape");
  for (const auto& row : c.comult)
    if (row.size() != c.dim * c.dim) throw_input("comultiplication row has wrong length");
  if (c.counit.size() != c.dim) throw_input("counit has wrong length");
}

// sparse iteration over Delta(e_i) = sum c * e_p (x) e_q
template <typename F>
void for_comult_terms(const Coalgebra& c, std::size_t i, F&& f) {
  const std::size_t n = c.dim;
  const Vec& row = c.comult[i];
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& s = row[p * n + q];
      if (!s.is_zero()) f(p, q, s);
    }
}

}  // namespace

CheckReport verify_bialgebra(const Algebra& a, const Coalgebra& c) {
  CheckReport rep = verify_algebra(a);
  check_coalgebra_shape(a, c);
  const std::size_t n = a.dim();
  const FieldSpec f = a.field();

  // coassociativity: (Delta (x) 1) Delta = (1 (x) Delta) Delta on basis
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = zero_vec(f, n * n * n), rhs = zero_vec(f, n * n * n);
    for_comult_terms(c, i, [&](std::size_t p, std::size_t q, const Scalar& s) {
      for_comult_terms(c, p, [&](std::size_t u, std::size_t v, const Scalar& t) {
        lhs[(u * n + v) * n + q] += s * t;
      });
      for_comult_terms(c, q, [&](std::size_t u, std::size_t v, const Scalar& t) {
        rhs[(p * n + u) * n + v] += s * t;
      });
    });
    if (lhs != rhs) rep.add("coassociativity", "e" + std::to_string(i));
  }

  // counit laws
  for (std::size_t i = 0; i < n; ++i) {
    Vec lv = zero_vec(f, n), rv = zero_vec(f, n);
    for_comult_terms(c, i, [&](std::size_t p, std::size_t q, const Scalar& s) {
      lv[q] += c.counit[p] * s;
      rv[p] += c.counit[q] * s;
    });
    Vec ei = unit_vec(f, n, i);
    if (lv != ei) rep.add("counit_left", "e" + std::to_string(i), vec_str(lv), vec_str(ei));
    if (rv != ei) rep.add("counit_right", "e" + std::to_string(i), vec_str(rv), vec_str(ei));
  }

  // Delta multiplicative: Delta(e_i e_j) = Delta(e_i) Delta(e_j) in H (x) H
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = zero_vec(f, n * n);
      const Vec& prod = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (prod[k].is_zero()) continue;
        for_comult_terms(c, k, [&](std::size_t p, std::size_t q, const Scalar& s) {
          lhs[p * n + q] += prod[k] * s;
        });
      }
      Vec rhs = zero_vec(f, n * n);
      for_comult_terms(c, i, [&](std::size_t p, std::size_t q, const Scalar& s) {
        for_comult_terms(c, j, [&](std::size_t u, std::size_t v, const Scalar& t) {
          const Scalar coef = s * t;
          const Vec& pu = a.basis_product(p, u);
          const Vec& qv = a.basis_product(q, v);
          for (std::size_t x = 0; x < n; ++x) {
            if (pu[x].is_zero()) continue;
            for (std::size_t y = 0; y < n; ++y)
              if (!qv[y].is_zero()) rhs[x * n + y] += coef * pu[x] * qv[y];
          }
        });
      });
      if (lhs != rhs)
        rep.add("comult_multiplicative", "e" + std::to_string(i) + "*e" + std::to_string(j));
    }

  // epsilon multiplicative
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar lhs = Scalar::zero(f);
      const Vec& prod = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!prod[k].is_zero()) lhs += prod[k] * c.counit[k];
      Scalar rhs = c.counit[i] * c.counit[j];
      if (lhs != rhs)
        rep.add("counit_multiplicative", "e" + std::to_string(i) + "*e" + std::to_string(j), lhs.str(),
                rhs.str());
    }

  // unit compatibility: Delta(1) = 1 (x) 1, eps(1) = 1
  {
    Vec d1 = zero_vec(f, n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.unit()[i].is_zero()) continue;
      for_comult_terms(c, i, [&](std::size_t p, std::size_t q, const Scalar& s) {
        d1[p * n + q] += a.unit()[i] * s;
      });
    }
    Vec uu = zero_vec(f, n * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) uu[p * n + q] = a.unit()[p] * a.unit()[q];
    if (d1 != uu) rep.add("comult_unit", "1", vec_str(d1), vec_str(uu));
    Scalar e1 = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) e1 += a.unit()[i] * c.counit[i];
    if (!e1.is_one()) rep.add("counit_unit", "1", e1.str(), "1");
  }

  return rep;
}

CheckReport verify_bialgebra(const HopfAlgebra& h) { return verify_bialgebra(h.algebra, h.coalgebra); }

CheckReport antipode_law_report(const HopfAlgebra& h) {
  CheckReport rep;
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  if (h.antipode.rows() != n || h.antipode.cols() != n) {
    rep.add("antipode_shape", "S");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = zero_vec(f, n), rhs = zero_vec(f, n);
    for_comult_terms(h.coalgebra, i, [&](std::size_t p, std::size_t q, const Scalar& s) {
      // S(e_p) e_q and e_p S(e_q)
      for (std::size_t u = 0; u < n; ++u) {
        const Scalar& sp = h.antipode.at(u, p);
        if (!sp.is_zero()) {
          const Vec& uq = h.algebra.basis_product(u, q);
          for (std::size_t k = 0; k < n; ++k)
            if (!uq[k].is_zero()) lhs[k] += s * sp * uq[k];
        }
        const Scalar& sq = h.antipode.at(u, q);
        if (!sq.is_zero()) {
          const Vec& pu = h.algebra.basis_product(p, u);
          for (std::size_t k = 0; k < n; ++k)
            if (!pu[k].is_zero()) rhs[k] += s * sq * pu[k];
        }
      }
    });
    Vec target = scale(h.coalgebra.counit[i], h.algebra.unit());
    if (lhs != target)
      rep.add("antipode_left", "e" + std::to_string(i), vec_str(lhs), vec_str(target));
    if (rhs != target)
      rep.add("antipode_right", "e" + std::to_string(i), vec_str(rhs), vec_str(target));
  }
  return rep;
}

CheckReport verify_hopf(const HopfAlgebra& h) {
  CheckReport rep = verify_bialgebra(h);
  rep.merge(antipode_law_report(h));
  return rep;
}

std::optional<Matrix> compute_antipode(const Algebra& a, const Coalgebra& c) {
  check_coalgebra_shape(a, c);
  const std::size_t n = a.dim();
  const FieldSpec f = a.field();
  // unknowns s_{uv} (S(e_v) = sum_u s_{uv} e_u), indexed u*n + v
  Matrix sys(f, 2 * n * n, n * n);
  Vec rhs = zero_vec(f, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for_comult_terms(c, i, [&](std::size_t p, std::size_t q, const Scalar& s) {
      for (std::size_t u = 0; u < n; ++u) {
        const Vec& uq = a.basis_product(u, q);
        for (std::size_t k = 0; k < n; ++k)
          if (!uq[k].is_zero()) sys.at(i * n + k, u * n + p) += s * uq[k];
        const Vec& pu = a.basis_product(p, u);
        for (std::size_t k = 0; k < n; ++k)
          if (!pu[k].is_zero()) sys.at((n + i) * n + k, u * n + q) += s * pu[k];
      }
    });
    for (std::size_t k = 0; k < n; ++k) {
      Scalar t = c.counit[i] * a.unit()[k];
      rhs[i * n + k] = t;
      rhs[(n + i) * n + k] = t;
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Matrix s(f, n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) s.at(u, v) = (*sol)[u * n + v];
  return s;
}

HopfAlgebra make_hopf(Algebra a, Coalgebra c, std::optional<Matrix> antipode) {
  CheckReport bia = verify_bialgebra(a, c);
  if (!bia.ok()) throw_input("invalid bialgebra: " + bia.summary());
  auto s = compute_antipode(a, c);
  if (!s) throw_input("no antipode: the convolution system is inconsistent");
  if (antipode && !(*antipode == *s))
    throw_input("supplied antipode differs from the computed one");
  HopfAlgebra h{std::move(a), std::move(c), std::move(*s)};
  CheckReport law = antipode_law_report(h);
  if (!law.ok()) throw_internal("computed antipode fails the antipode law: " + law.summary());
  return h;
}

Subspace integrals(const HopfAlgebra& h, Side side) {
  const std::size_t n = h.dim();
  Matrix stacked(h.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m = side == Side::left ? h.algebra.left_mult_matrix(i) : h.algebra.right_mult_matrix(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) {
        Scalar v = m.at(r, col);
        if (r == col) v -= h.coalgebra.counit[i];
        stacked.at(i * n + r, col) = v;
      }
  }
  return kernel(stacked);
}

namespace {

Scalar counit_of(const HopfAlgebra& h, const Vec& v) {
  Scalar s = Scalar::zero(h.field());
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (!v[i].is_zero()) s += h.coalgebra.counit[i] * v[i];
  return s;
}

}  // namespace

SeparabilityResult is_separable_hopf(const HopfAlgebra& h) {
  for (Side side : {Side::right, Side::left}) {
    Subspace ints = integrals(h, side);
    for (std::size_t i = 0; i < ints.dim(); ++i) {
      Vec t = ints.basis_row(i);
      Scalar e = counit_of(h, t);
      if (!e.is_zero()) return {true, std::move(t), std::move(e), side};
    }
  }
  return {false, {}, Scalar::zero(h.field()), Side::left};
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  std::vector<Vec> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec p = zero_vec(f, n);
      for (std::size_t k = 0; k < n; ++k) p[k] = h.coalgebra.comult[k][i * n + j];
      mult[i * n + j] = std::move(p);
    }
  Algebra dual_alg(f, n, std::move(mult), h.coalgebra.counit);
  Coalgebra dual_co;
  dual_co.dim = n;
  dual_co.comult.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = zero_vec(f, n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) row[j * n + k] = h.algebra.basis_product(j, k)[i];
    dual_co.comult[i] = std::move(row);
  }
  dual_co.counit = h.algebra.unit();
  return make_hopf(std::move(dual_alg), std::move(dual_co), h.antipode.transpose());
}

bool is_cosemisimple(const HopfAlgebra& h) { return is_separable_hopf(dual_hopf(h)).separable; }

TensorElement tensor_unit(const HopfAlgebra& h, std::size_t arity) {
  const std::size_t n = h.dim();
  TensorElement t{arity, zero_vec(h.field(), tensor_pow(n, arity))};
  // dense fill is fine: unit coefficient products over all multi-indices
  for (std::size_t code = 0; code < t.coeffs.size(); ++code) {
    std::size_t c = code;
    Scalar v = Scalar::one(h.field());
    for (std::size_t leg = 0; leg < arity; ++leg) {
      std::size_t digit = c % n;
      c /= n;
      v *= h.algebra.unit()[digit];
      if (v.is_zero()) break;
    }
    t.coeffs[code] = v;
  }
  return t;
}

TensorElement tensor_from_vec(std::size_t arity, Vec coeffs) { return TensorElement{arity, std::move(coeffs)}; }

TensorElement tensor_mul(const HopfAlgebra& h, const TensorElement& x, const TensorElement& y) {
  if (x.arity != y.arity) throw_input("tensor_mul: arity mismatch");
  const std::size_t n = h.dim();
  const std::size_t k = x.arity;
  const std::size_t total = tensor_pow(n, k);
  if (x.coeffs.size() != total || y.coeffs.size() != total) throw_input("tensor_mul: length mismatch");
  TensorElement out{k, zero_vec(h.field(), total)};
  std::vector<std::size_t> di(k), dj(k);
  for (std::size_t I = 0; I < total; ++I) {
    if (x.coeffs[I].is_zero()) continue;
    std::size_t c = I;
    for (std::size_t leg = k; leg-- > 0;) {
      di[leg] = c % n;
      c /= n;
    }
    for (std::size_t J = 0; J < total; ++J) {
      if (y.coeffs[J].is_zero()) continue;
      c = J;
      for (std::size_t leg = k; leg-- > 0;) {
        dj[leg] = c % n;
        c /= n;
      }
      // expand the basis product leg by leg, keeping only nonzero partials
      std::vector<std::pair<std::size_t, Scalar>> partial{{0, x.coeffs[I] * y.coeffs[J]}};
      for (std::size_t leg = 0; leg < k && !partial.empty(); ++leg) {
        const Vec& prod = h.algebra.basis_product(di[leg], dj[leg]);
        std::vector<std::pair<std::size_t, Scalar>> next;
        for (const auto& [idx, coef] : partial)
          for (std::size_t t = 0; t < n; ++t)
            if (!prod[t].is_zero()) next.emplace_back(idx * n + t, coef * prod[t]);
        partial = std::move(next);
      }
      for (const auto& [idx, coef] : partial) out.coeffs[idx] += coef;
    }
  }
  return out;
}

std::optional<TensorElement> tensor_invert(const HopfAlgebra& h, const TensorElement& x) {
  const std::size_t total = x.coeffs.size();
  TensorElement unit = tensor_unit(h, x.arity);
  // left-multiplication matrix of x on H^{(x) k}
  Matrix lx(h.field(), total, total);
  for (std::size_t j = 0; j < total; ++j) {
    TensorElement ej{x.arity, zero_vec(h.field(), total)};
    ej.coeffs[j] = Scalar::one(h.field());
    TensorElement col = tensor_mul(h, x, ej);
    for (std::size_t r = 0; r < total; ++r) lx.at(r, j) = col.coeffs[r];
  }
  auto sol = solve(lx, unit.coeffs);
  if (!sol) return std::nullopt;
  TensorElement y{x.arity, std::move(*sol)};
  if (!(tensor_mul(h, y, x) == unit)) return std::nullopt;  // one-sided only
  return y;
}

TensorElement apply_comult_at(const HopfAlgebra& h, const TensorElement& x, std::size_t leg) {
  const std::size_t n = h.dim();
  const std::size_t k = x.arity;
  if (leg >= k) throw_input("apply_comult_at: bad leg");
  TensorElement out{k + 1, zero_vec(h.field(), tensor_pow(n, k + 1))};
  const std::size_t tail = tensor_pow(n, k - 1 - leg);  // strides right of the split leg
  for (std::size_t I = 0; I < x.coeffs.size(); ++I) {
    if (x.coeffs[I].is_zero()) continue;
    const std::size_t right = I % tail;
    const std::size_t mid = (I / tail) % n;
    const std::size_t left = I / (tail * n);
    for_comult_terms(h.coalgebra, mid, [&](std::size_t p, std::size_t q, const Scalar& s) {
      std::size_t idx = ((left * n + p) * n + q) * tail + right;
      out.coeffs[idx] += x.coeffs[I] * s;
    });
  }
  return out;
}

TensorElement insert_unit_at(const HopfAlgebra& h, const TensorElement& x, std::size_t position) {
  const std::size_t n = h.dim();
  const std::size_t k = x.arity;
  if (position > k) throw_input("insert_unit_at: bad position");
  TensorElement out{k + 1, zero_vec(h.field(), tensor_pow(n, k + 1))};
  const std::size_t tail = tensor_pow(n, k - position);
  for (std::size_t I = 0; I < x.coeffs.size(); ++I) {
    if (x.coeffs[I].is_zero()) continue;
    const std::size_t right = I % tail;
    const std::size_t left = I / tail;
    for (std::size_t u = 0; u < n; ++u)
      if (!h.algebra.unit()[u].is_zero())
        out.coeffs[(left * n + u) * tail + right] += x.coeffs[I] * h.algebra.unit()[u];
  }
  return out;
}

TensorElement apply_counit_at(const HopfAlgebra& h, const TensorElement& x, std::size_t leg) {
  const std::size_t n = h.dim();
  const std::size_t k = x.arity;
  if (k < 2 || leg >= k) throw_input("apply_counit_at: bad leg");
  TensorElement out{k - 1, zero_vec(h.field(), tensor_pow(n, k - 1))};
  const std::size_t tail = tensor_pow(n, k - 1 - leg);
  for (std::size_t I = 0; I < x.coeffs.size(); ++I) {
    if (x.coeffs[I].is_zero()) continue;
    const std::size_t right = I % tail;
    const std::size_t mid = (I / tail) % n;
    const std::size_t left = I / (tail * n);
    if (h.coalgebra.counit[mid].is_zero()) continue;
    out.coeffs[left * tail + right] += x.coeffs[I] * h.coalgebra.counit[mid];
  }
  return out;
}

TensorElement tensor_swap(const HopfAlgebra& h, const TensorElement& x) {
  if (x.arity != 2) throw_input("tensor_swap: arity 2 only");
  const std::size_t n = h.dim();
  TensorElement out{2, zero_vec(h.field(), n * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.coeffs[j * n + i] = x.coeffs[i * n + j];
  return out;
}

TensorElement apply_antipode_at(const HopfAlgebra& h, const TensorElement& x, std::size_t leg) {
  const std::size_t n = h.dim();
  const std::size_t k = x.arity;
  if (leg >= k) throw_input("apply_antipode_at: bad leg");
  TensorElement out{k, zero_vec(h.field(), x.coeffs.size())};
  const std::size_t tail = tensor_pow(n, k - 1 - leg);
  for (std::size_t I = 0; I < x.coeffs.size(); ++I) {
    if (x.coeffs[I].is_zero()) continue;
    const std::size_t right = I % tail;
    const std::size_t mid = (I / tail) % n;
    const std::size_t left = I / (tail * n);
    for (std::size_t u = 0; u < n; ++u) {
      const Scalar& s = h.antipode.at(u, mid);
      if (!s.is_zero()) out.coeffs[(left * n + u) * tail + right] += x.coeffs[I] * s;
    }
  }
  return out;
}

}  // namespace smashprime
