#include "smashprime/module_algebra.hpp"

#include "smashprime/rng.hpp"

namespace smashprime {

namespace {

void check_shape(const HModuleAlgebra& ma) {
  if (ma.action.size() != ma.hopf_dim()) throw_input("action has wrong number of matrices");
  for (const auto& m : ma.action)
    if (m.rows() != ma.alg_dim() || m.cols() != ma.alg_dim())
      throw_input("action matrix has wrong shape");
}

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

CheckReport verify_module_algebra(const HModuleAlgebra& ma) {
  check_shape(ma);
  CheckReport rep;
  const std::size_t m = ma.hopf_dim();
  const std::size_t n = ma.alg_dim();
  const FieldSpec f = ma.algebra.field();

  // rho(1_H) = id
  {
    Matrix u(f, n, n);
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar& c = ma.hopf.algebra.unit()[j];
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) u.at(r, col) += c * ma.action[j].at(r, col);
    }
    if (!(u == Matrix::identity(f, n))) rep.add("unit_action", "1_H");
  }

  // rho(e_j e_l) = rho(e_j) rho(e_l) bilinearly
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < m; ++l) {
      const Vec& prod = ma.hopf.algebra.basis_product(j, l);
      Matrix lhs(f, n, n);
      for (std::size_t k = 0; k < m; ++k) {
        if (prod[k].is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) lhs.at(r, c) += prod[k] * ma.action[k].at(r, c);
      }
      if (!(lhs == ma.action[j] * ma.action[l]))
        rep.add("module_axiom", "h" + std::to_string(j) + "*h" + std::to_string(l));
    }

  // measuring: h(ab) = sum (h1 a)(h2 b) on all basis triples
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Vec lhs = ma.action[j].apply(ma.algebra.basis_product(p, q));
        Vec rhs = zero_vec(f, n);
        for_comult_terms(ma.hopf.coalgebra, j, [&](std::size_t u, std::size_t v, const Scalar& s) {
          Vec ua = ma.action[u].apply(unit_vec(f, n, p));
          Vec vb = ma.action[v].apply(unit_vec(f, n, q));
          Vec prod = ma.algebra.mul(Element{ua}, Element{vb}).coeffs;
          for (std::size_t k = 0; k < n; ++k)
            if (!prod[k].is_zero()) rhs[k] += s * prod[k];
        });
        if (lhs != rhs)
          rep.add("measuring", "h" + std::to_string(j) + "(a" + std::to_string(p) + "*a" + std::to_string(q) + ")",
                  vec_str(lhs), vec_str(rhs));
      }

  // h 1_A = eps(h) 1_A
  for (std::size_t j = 0; j < m; ++j) {
    Vec lhs = ma.action[j].apply(ma.algebra.unit());
    Vec rhs = scale(ma.hopf.coalgebra.counit[j], ma.algebra.unit());
    if (lhs != rhs) rep.add("unit_measuring", "h" + std::to_string(j), vec_str(lhs), vec_str(rhs));
  }

  return rep;
}

Matrix action_matrix(const HModuleAlgebra& ma, const Vec& h) {
  if (h.size() != ma.hopf_dim()) throw_input("action_matrix: element length mismatch");
  const std::size_t n = ma.alg_dim();
  Matrix r(ma.algebra.field(), n, n);
  for (std::size_t j = 0; j < ma.hopf_dim(); ++j) {
    if (h[j].is_zero()) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& v = ma.action[j].at(a, b);
        if (!v.is_zero()) r.at(a, b) += h[j] * v;
      }
  }
  return r;
}

Element act(const HModuleAlgebra& ma, const Element& h, const Element& a) {
  return Element{action_matrix(ma, h.coeffs).apply(a.coeffs)};
}

Subspace invariants(const HModuleAlgebra& ma) {
  const std::size_t m = ma.hopf_dim();
  const std::size_t n = ma.alg_dim();
  const FieldSpec f = ma.algebra.field();
  Matrix stacked(f, m * n, n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Scalar v = ma.action[j].at(r, c);
        if (r == c) v -= ma.hopf.coalgebra.counit[j];
        stacked.at(j * n + r, c) = v;
      }
  Subspace inv = kernel(stacked);
  // A^H is a unital subalgebra; failure here is a bug, not a data error
  if (!inv.contains(ma.algebra.unit())) throw_internal("invariants do not contain the unit");
  for (std::size_t i = 0; i < inv.dim(); ++i)
    for (std::size_t j = 0; j < inv.dim(); ++j)
      if (!inv.contains(ma.algebra.mul(Element{inv.basis_row(i)}, Element{inv.basis_row(j)}).coeffs))
        throw_internal("invariants are not closed under multiplication");
  return inv;
}

Subspace central_invariants(const HModuleAlgebra& ma) {
  return subspace_intersect(center(ma.algebra), invariants(ma));
}

std::vector<Matrix> stability_operators(const HModuleAlgebra& ma, Sidedness sidedness) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < ma.alg_dim(); ++i) {
    if (sidedness != Sidedness::right) ops.push_back(ma.algebra.left_mult_matrix(i));
    if (sidedness != Sidedness::left) ops.push_back(ma.algebra.right_mult_matrix(i));
  }
  for (const auto& rho : ma.action) ops.push_back(rho);
  return ops;
}

StableIdeal h_stable_closure(const HModuleAlgebra& ma, const Subspace& seed, Sidedness sidedness) {
  auto ops = stability_operators(ma, sidedness);
  Subspace closed = operator_closure(seed, ops);
  StableIdeal out{IdealBasis{closed, sidedness}, true};
  for (const auto& op : ops)
    for (std::size_t b = 0; b < closed.dim(); ++b)
      if (!closed.contains(op.apply(closed.basis_row(b)))) out.h_stable = false;
  if (!out.h_stable) throw_internal("h_stable_closure produced an unstable subspace");
  return out;
}

HSemiprimeResult is_h_semiprime(const HModuleAlgebra& ma) {
  Subspace rad = jacobson_radical(ma.algebra);
  Subspace w = largest_stable_subspace(rad, stability_operators(ma, Sidedness::two_sided));
  return {w.dim() == 0, std::move(w)};
}

Lemma31Report lemma31_check(const HModuleAlgebra& ma, const StableIdeal& ideal, std::size_t probes,
                            std::uint64_t seed) {
  if (!is_h_semiprime(ma).h_semiprime)
    throw_input("lemma31_check requires an H-semiprime module algebra");
  const std::size_t n = ma.alg_dim();
  const FieldSpec f = ma.algebra.field();
  Lemma31Report rep;
  rep.annihilator_zero = left_annihilator(ma.algebra, ideal.ideal).dim() == 0;

  rep.essential_probed = true;
  Rng rng(seed);
  for (std::size_t k = 0; k < probes; ++k) {
    Vec x = k < n ? unit_vec(f, n, k) : rng.nonzero_small_vec(f, n);
    Subspace cyclic = h_stable_closure(ma, Subspace::span(f, n, {x}), Sidedness::two_sided).ideal.space;
    if (subspace_intersect(cyclic, ideal.ideal.space).dim() == 0) {
      rep.essential_probed = false;
      rep.failing_probe = x;
      break;
    }
  }
  rep.theorem_violation = rep.annihilator_zero != rep.essential_probed;
  return rep;
}

RetractabilityReport retractability_check(const HModuleAlgebra& ma, std::size_t samples,
                                          std::uint64_t seed, std::size_t generators_per_ideal) {
  if (generators_per_ideal == 0) throw_input("retractability_check: need at least one generator");
  const std::size_t n = ma.alg_dim();
  const FieldSpec f = ma.algebra.field();
  Subspace inv = invariants(ma);
  RetractabilityReport rep;
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<Vec> gens;
    if (generators_per_ideal == 1 && k < n)
      gens.push_back(unit_vec(f, n, k));
    else
      for (std::size_t g = 0; g < generators_per_ideal; ++g) gens.push_back(rng.nonzero_small_vec(f, n));
    Subspace ideal = h_stable_closure(ma, Subspace::span(f, n, gens), Sidedness::left).ideal.space;
    ++rep.samples_run;
    if (ideal.dim() == 0) continue;
    ++rep.nonzero_ideals;
    if (subspace_intersect(ideal, inv).dim() == 0) {
      rep.counterexample_found = true;
      rep.counterexample = ideal;
      return rep;
    }
  }
  return rep;
}

EndIsoReport end_iso_check(const HModuleAlgebra& ma) {
  const std::size_t n = ma.alg_dim();
  const FieldSpec f = ma.algebra.field();
  // unknown endomorphism phi as an n x n matrix; commutation with each
  // generator op is the Sylvester condition phi*op - op*phi = 0
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(ma.algebra.left_mult_matrix(i));
  for (const auto& rho : ma.action) gens.push_back(rho);
  Matrix sys(f, gens.size() * n * n, n * n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Matrix& op = gens[g];
    // (phi*op - op*phi)[r][c] = sum_k phi[r][k] op[k][c] - op[r][k] phi[k][c]
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t eq = (g * n + r) * n + c;
        for (std::size_t k = 0; k < n; ++k) {
          sys.at(eq, r * n + k) += op.at(k, c);
          sys.at(eq, k * n + c) -= op.at(r, k);
        }
      }
  }
  Subspace endos = kernel(sys);
  Subspace inv = invariants(ma);
  EndIsoReport rep;
  rep.end_dim = endos.dim();
  rep.invariants_dim = inv.dim();
  rep.dims_equal = rep.end_dim == rep.invariants_dim;
  // right multiplications by invariants are endomorphisms and embed A^H
  std::vector<Vec> flattened;
  bool all_commute = true;
  for (std::size_t i = 0; i < inv.dim(); ++i) {
    Matrix ru = ma.algebra.regular_representation(Element{inv.basis_row(i)}, Side::right);
    Vec flat = zero_vec(f, n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) flat[r * n + c] = ru.at(r, c);
    if (!endos.contains(flat)) all_commute = false;
    flattened.push_back(std::move(flat));
  }
  rep.right_mults_embed =
      all_commute && Subspace::span(f, n * n, flattened).dim() == inv.dim();
  return rep;
}

}  // namespace smashprime
