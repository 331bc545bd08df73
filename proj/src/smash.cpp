#include "smashprime/smash.hpp"

#include "smashprime/rng.hpp"

namespace smashprime {

namespace {

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

SmashProduct build_smash(const HModuleAlgebra& ma) {
  CheckReport valid = verify_module_algebra(ma);
  if (!valid.ok()) throw_input("build_smash: invalid module algebra: " + valid.summary());
  const std::size_t n = ma.alg_dim();
  const std::size_t m = ma.hopf_dim();
  const std::size_t d = n * m;
  const FieldSpec f = ma.algebra.field();

  std::vector<Vec> mult(d * d, zero_vec(f, d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Vec& out = mult[(i * m + j) * d + (k * m + l)];
          for_comult_terms(ma.hopf.coalgebra, j, [&](std::size_t p, std::size_t q, const Scalar& c) {
            Vec hb = ma.action[p].apply(unit_vec(f, n, k));            // h1 b
            Vec left = ma.algebra.mul(ma.algebra.basis_element(i), Element{hb}).coeffs;  // a (h1 b)
            const Vec& right = ma.hopf.algebra.basis_product(q, l);    // h2 g
            for (std::size_t s = 0; s < n; ++s) {
              if (left[s].is_zero()) continue;
              const Scalar cs = c * left[s];
              for (std::size_t t = 0; t < m; ++t)
                if (!right[t].is_zero()) out[s * m + t] += cs * right[t];
            }
          });
        }

  Vec unit = zero_vec(f, d);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < m; ++t) unit[s * m + t] = ma.algebra.unit()[s] * ma.hopf.algebra.unit()[t];

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::string la = ma.algebra.labels().empty() ? "a" + std::to_string(i) : ma.algebra.labels()[i];
      std::string lh = ma.hopf.algebra.labels().empty() ? "h" + std::to_string(j) : ma.hopf.algebra.labels()[j];
      labels.push_back(la + "#" + lh);
    }

  Algebra alg(f, d, std::move(mult), std::move(unit), std::move(labels));
  CheckReport rep = verify_algebra(alg);
  if (!rep.ok()) throw_internal("smash product fails the algebra axioms: " + rep.summary());

  Matrix embed_a(f, d, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < m; ++t) embed_a.at(i * m + t, i) = ma.hopf.algebra.unit()[t];
  Matrix embed_h(f, d, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t s = 0; s < n; ++s) embed_h.at(s * m + j, j) = ma.algebra.unit()[s];

  return SmashProduct{ma, std::move(alg), std::move(embed_a), std::move(embed_h)};
}

bool smash_is_semiprime(const SmashProduct& s) { return is_semiprime_algebra(s.algebra); }

BimoduleTensor::BimoduleTensor(const SmashProduct& s) : s_(&s) {
  const std::size_t d = s.dim();
  const std::size_t n = s.a_dim();
  const std::size_t m = s.h_dim();
  ambient_ = d * d;
  qdim_ = d * m;
  const FieldSpec f = s.algebra.field();

  // projection: x (x) (a_k # h_l) = x (a_k # 1) (x) (1 # h_l)
  proj_ = Matrix(f, qdim_, ambient_);
  for (std::size_t k = 0; k < n; ++k) {
    Vec ak = s.embed_A.apply(unit_vec(f, n, k));  // a_k # 1
    for (std::size_t x = 0; x < d; ++x) {
      Vec xk = s.algebra.mul(s.algebra.basis_element(x), Element{ak}).coeffs;
      for (std::size_t l = 0; l < m; ++l) {
        const std::size_t col = x * d + (k * m + l);
        for (std::size_t t = 0; t < d; ++t)
          if (!xk[t].is_zero()) proj_.at(t * m + l, col) = xk[t];
      }
    }
  }

  // section: (s, j) -> e_s (x) (1 # h_j)
  sect_ = Matrix(f, ambient_, qdim_);
  for (std::size_t es = 0; es < d; ++es)
    for (std::size_t j = 0; j < m; ++j) {
      Vec hj = s.embed_H.apply(unit_vec(f, m, j));
      for (std::size_t t = 0; t < d; ++t)
        if (!hj[t].is_zero()) sect_.at(es * d + t, es * m + j) = hj[t];
    }
}

const Subspace& BimoduleTensor::relations() const {
  if (!relations_) relations_ = kernel(proj_);
  return *relations_;
}

Vec BimoduleTensor::left_mult(const Vec& smash_u, const Vec& qcoords) const {
  const std::size_t d = s_->dim();
  const std::size_t m = s_->h_dim();
  Vec out = zero_vec(s_->algebra.field(), qdim_);
  Matrix lu = s_->algebra.regular_representation(Element{smash_u}, Side::left);
  for (std::size_t es = 0; es < d; ++es)
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar& c = qcoords[es * m + j];
      if (c.is_zero()) continue;
      for (std::size_t t = 0; t < d; ++t) {
        const Scalar& v = lu.at(t, es);
        if (!v.is_zero()) out[t * m + j] += c * v;
      }
    }
  return out;
}

Vec BimoduleTensor::right_mult(const Vec& qcoords, const Vec& smash_u) const {
  const std::size_t d = s_->dim();
  const std::size_t n = s_->a_dim();
  const std::size_t m = s_->h_dim();
  const FieldSpec f = s_->algebra.field();
  Vec out = zero_vec(f, qdim_);
  // (e_s (x) (1#h_j)) u  =  e_s (x) y_j with y_j = (1#h_j) u, then re-expand
  // y_j = sum_l (b_l # 1)(1 # h_l) and pull the b_l through the tensor sign.
  for (std::size_t j = 0; j < m; ++j) {
    Vec hj = s_->embed_H.apply(unit_vec(f, m, j));
    Vec yj = s_->algebra.mul(Element{hj}, Element{smash_u}).coeffs;
    // b_l has A-coordinates yj[(k,l)]
    for (std::size_t l = 0; l < m; ++l) {
      Vec bl = zero_vec(f, n);
      for (std::size_t k = 0; k < n; ++k) bl[k] = yj[k * m + l];
      if (is_zero_vec(bl)) continue;
      Vec bl_smash = s_->embed_A.apply(bl);
      Matrix rb = s_->algebra.regular_representation(Element{bl_smash}, Side::right);
      for (std::size_t es = 0; es < d; ++es) {
        const Scalar& c = qcoords[es * m + j];
        if (c.is_zero()) continue;
        for (std::size_t t = 0; t < d; ++t) {
          const Scalar& v = rb.at(t, es);
          if (!v.is_zero()) out[t * m + l] += c * v;
        }
      }
    }
  }
  return out;
}

Vec BimoduleTensor::multiply_down(const Vec& qcoords) const {
  const std::size_t d = s_->dim();
  const std::size_t m = s_->h_dim();
  const FieldSpec f = s_->algebra.field();
  Vec out = zero_vec(f, d);
  for (std::size_t es = 0; es < d; ++es)
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar& c = qcoords[es * m + j];
      if (c.is_zero()) continue;
      Vec prod = s_->algebra.mul(s_->algebra.basis_element(es), Element{s_->embed_H.apply(unit_vec(f, m, j))}).coeffs;
      for (std::size_t t = 0; t < d; ++t)
        if (!prod[t].is_zero()) out[t] += c * prod[t];
    }
  return out;
}

std::optional<SeparabilityIdempotent> separability_idempotent(const SmashProduct& s,
                                                              const BimoduleTensor& bt) {
  const HopfAlgebra& h = s.base.hopf;
  const FieldSpec f = h.field();
  const std::size_t n = s.a_dim();
  const std::size_t m = s.h_dim();
  const std::size_t d = s.dim();

  auto counit_of = [&](const Vec& v) {
    Scalar e = Scalar::zero(f);
    for (std::size_t i = 0; i < m; ++i)
      if (!v[i].is_zero()) e += h.coalgebra.counit[i] * v[i];
    return e;
  };

  // right integral with nonzero counit; a left one converts via t' = S(t)
  Vec t;
  Scalar eps = Scalar::zero(f);
  bool found = false;
  Subspace right_ints = integrals(h, Side::right);
  for (std::size_t i = 0; i < right_ints.dim() && !found; ++i) {
    Vec cand = right_ints.basis_row(i);
    Scalar e = counit_of(cand);
    if (!e.is_zero()) {
      t = cand;
      eps = e;
      found = true;
    }
  }
  if (!found) {
    Subspace left_ints = integrals(h, Side::left);
    for (std::size_t i = 0; i < left_ints.dim() && !found; ++i) {
      Vec cand = left_ints.basis_row(i);
      Scalar e = counit_of(cand);
      if (!e.is_zero()) {
        t = h.antipode.apply(cand);
        if (!right_ints.contains(t)) throw_internal("antipode of a left integral is not a right integral");
        eps = counit_of(t);
        found = true;
      }
    }
  }
  if (!found) return std::nullopt;

  const Scalar z = eps.inverse();
  // omega = sum over Delta(t): [1_A # S(t1)] (x) [z 1_A # t2]
  Vec ambient = zero_vec(f, d * d);
  for (std::size_t i = 0; i < m; ++i) {
    if (t[i].is_zero()) continue;
    for_comult_terms(h.coalgebra, i, [&](std::size_t p, std::size_t q, const Scalar& c) {
      const Scalar coef = t[i] * c;
      // left leg: 1_A # S(e_p)
      Vec left = zero_vec(f, d);
      for (std::size_t u = 0; u < m; ++u) {
        const Scalar& sp = h.antipode.at(u, p);
        if (sp.is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a)
          if (!s.base.algebra.unit()[a].is_zero()) left[a * m + u] += s.base.algebra.unit()[a] * sp;
      }
      // right leg: z 1_A # e_q
      Vec right = zero_vec(f, d);
      for (std::size_t a = 0; a < n; ++a)
        if (!s.base.algebra.unit()[a].is_zero()) right[a * m + q] = z * s.base.algebra.unit()[a];
      for (std::size_t x = 0; x < d; ++x) {
        if (left[x].is_zero()) continue;
        const Scalar cx = coef * left[x];
        for (std::size_t y = 0; y < d; ++y)
          if (!right[y].is_zero()) ambient[x * d + y] += cx * right[y];
      }
    });
  }
  Vec quotient = bt.project(ambient);
  return SeparabilityIdempotent{std::move(t), std::move(eps), std::move(ambient), std::move(quotient)};
}

CheckReport verify_separability(const SmashProduct& s, const BimoduleTensor& bt, const Vec& omega_q) {
  CheckReport rep;
  const FieldSpec f = s.algebra.field();
  const std::size_t n = s.a_dim();
  const std::size_t m = s.h_dim();
  Vec mu = bt.multiply_down(omega_q);
  if (mu != s.algebra.unit()) rep.add("multiplication", "mu(omega)", vec_str(mu), vec_str(s.algebra.unit()));
  for (std::size_t a = 0; a < n; ++a) {
    Vec u = s.embed_A.apply(unit_vec(f, n, a));
    Vec lhs = bt.left_mult(u, omega_q);
    Vec rhs = bt.right_mult(omega_q, u);
    if (lhs != rhs) rep.add("a_centralizing", "a" + std::to_string(a), vec_str(lhs), vec_str(rhs));
  }
  for (std::size_t j = 0; j < m; ++j) {
    Vec u = s.embed_H.apply(unit_vec(f, m, j));
    Vec lhs = bt.left_mult(u, omega_q);
    Vec rhs = bt.right_mult(omega_q, u);
    if (lhs != rhs) rep.add("h_centralizing", "h" + std::to_string(j), vec_str(lhs), vec_str(rhs));
  }
  return rep;
}

MaschkeReport maschke_check(const SmashProduct& s) {
  MaschkeReport rep;
  rep.a_semiprime = is_semiprime_algebra(s.base.algebra);
  SeparabilityResult sep = is_separable_hopf(s.base.hopf);
  rep.integral_witness = sep.separable;
  rep.eps = sep.eps_value;
  rep.smash_semiprime = smash_is_semiprime(s);
  rep.vacuous = !(rep.a_semiprime && rep.integral_witness);
  rep.theorem_violation = !rep.vacuous && !rep.smash_semiprime;
  return rep;
}

Thm44Report thm44_cd_check(const SmashProduct& s, std::size_t samples, std::uint64_t seed) {
  const HopfAlgebra& h = s.base.hopf;
  const FieldSpec f = h.field();
  const std::size_t n = s.a_dim();
  const std::size_t m = s.h_dim();
  const std::size_t d = s.dim();
  Subspace left_ints = integrals(h, Side::left);
  if (left_ints.dim() == 0) throw_input("thm44_cd_check: no nonzero integral");
  Vec t = left_ints.basis_row(0);

  Thm44Report rep;
  // Phi: a -> a # t
  Matrix phi(f, d, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) phi.at(i * m + j, i) = t[j];
  rep.map_injective = rank(phi) == n;

  rep.map_linear = true;
  for (std::size_t k = 0; k < n && rep.map_linear; ++k)
    for (std::size_t j = 0; j < m && rep.map_linear; ++j) {
      // action of a_k # h_j on A is L_{a_k} rho_j; on A#H it is left mult
      Matrix act = s.base.algebra.left_mult_matrix(k) * s.base.action[j];
      Matrix lsm = s.algebra.left_mult_matrix(k * m + j);
      if (!(lsm * phi == phi * act)) rep.map_linear = false;
    }

  rep.smash_semiprime = smash_is_semiprime(s);
  if (!rep.smash_semiprime) return rep;

  Subspace inv = invariants(s.base);
  Matrix t_act = action_matrix(s.base, t);
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    Vec x = k < n ? unit_vec(f, n, k) : rng.nonzero_small_vec(f, n);
    Subspace ideal = h_stable_closure(s.base, Subspace::span(f, n, {x}), Sidedness::left).ideal.space;
    if (ideal.dim() == 0) continue;
    ++rep.ideals_checked;
    std::vector<Vec> timg;
    for (std::size_t b = 0; b < ideal.dim(); ++b) timg.push_back(t_act.apply(ideal.basis_row(b)));
    Subspace ti = Subspace::span(f, n, timg);
    if (ti.dim() == 0) {
      rep.violation_found = true;
      rep.violation_detail = "t.I = 0 for the ideal generated by " + vec_str(x);
      return rep;
    }
    Subspace ih = subspace_intersect(ideal, inv);
    for (std::size_t b = 0; b < ti.dim(); ++b)
      if (!ih.contains(ti.basis_row(b))) {
        rep.violation_found = true;
        rep.violation_detail = "t.I not inside I^H for the ideal generated by " + vec_str(x);
        return rep;
      }
  }
  return rep;
}

}  // namespace smashprime
