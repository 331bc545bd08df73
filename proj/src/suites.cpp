#include "smashprime/suites.hpp"

#include "smashprime/catalog.hpp"
#include "smashprime/random_instances.hpp"

namespace smashprime {

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

Report prop23_suite() {
  Report rep;
  rep.command = "verify-paper";
  rep.instance = "separability-idempotent";
  std::size_t with_witness = 0, skipped = 0;
  for (const auto& entry : catalog_module_algebras()) {
    HModuleAlgebra ma = entry.build();
    SmashProduct s = build_smash(ma);
    BimoduleTensor bt(s);
    auto omega = separability_idempotent(s, bt);
    if (!omega) {
      ++skipped;  // every integral has eps = 0; the proposition does not apply
      continue;
    }
    ++with_witness;
    CheckReport v = verify_separability(s, bt, omega->quotient);
    for (const auto& viol : v.violations)
      rep.violations.push_back({viol.check, entry.name + ": " + viol.location, viol.lhs, viol.rhs});
  }
  rep.hypothesis("pairs_with_witness", std::to_string(with_witness));
  rep.hypothesis("pairs_without_witness", std::to_string(skipped));
  rep.conclusion = rep.violations.empty() ? "omega verified on every pair with a witness integral"
                                          : "separability idempotent checks failed";
  rep.finalize();
  return rep;
}

Report cor27_suite(std::uint64_t seed, std::size_t random_instances) {
  Report rep;
  rep.command = "verify-paper";
  rep.instance = "maschke-closure";
  rep.seed = seed;
  std::size_t applicable = 0, vacuous = 0;
  auto run_one = [&](const std::string& name, const HModuleAlgebra& ma) {
    MaschkeReport m = maschke_check(build_smash(ma));
    if (m.vacuous)
      ++vacuous;
    else
      ++applicable;
    if (m.theorem_violation)
      rep.violations.push_back({"maschke", name, "A semisimple and eps(t) != 0", "rad(A#H) != 0"});
  };
  for (const auto& entry : catalog_module_algebras()) run_one(entry.name, entry.build());
  Rng rng(seed);
  for (std::size_t k = 0; k < random_instances; ++k) {
    HModuleAlgebra ma = random_permutation_module_algebra(rng);
    run_one("random#" + std::to_string(k) + " " + describe_random_instance(ma), ma);
  }
  rep.hypothesis("applicable_instances", std::to_string(applicable));
  rep.hypothesis("vacuous_instances", std::to_string(vacuous));
  rep.conclusion = rep.violations.empty() ? "semisimplicity always transfers to the smash product"
                                          : "closure violated";
  rep.finalize();
  return rep;
}

Report cor36_suite() {
  Report rep;
  rep.command = "verify-paper";
  rep.instance = "commutative-semiprime-smash";
  std::size_t applicable = 0;
  for (const auto& entry : catalog_module_algebras()) {
    HModuleAlgebra ma = entry.build();
    // hypotheses: A commutative semiprime, H semisimple and cosemisimple.
    // A is always integral over A^H in finite dimension (Cayley-Hamilton for
    // left multiplication), so integrality carries no separate check.
    // The dual-group regular actions are included as named instances even
    // where A is noncommutative (their smash products are matrix algebras).
    bool commutative = center(ma.algebra).dim() == ma.alg_dim();
    bool named_regular = entry.name.rfind("reg", 0) == 0;
    if (!commutative && !named_regular) continue;
    if (!is_semiprime_algebra(ma.algebra)) continue;
    if (!is_separable_hopf(ma.hopf).separable || !is_cosemisimple(ma.hopf)) continue;
    ++applicable;
    std::size_t rad_dim = jacobson_radical(build_smash(ma).algebra).dim();
    if (rad_dim != 0)
      rep.violations.push_back({"smash_semiprime", entry.name, "rad dim " + std::to_string(rad_dim), "0"});
  }
  rep.hypothesis("applicable_instances", std::to_string(applicable));
  rep.conclusion = rep.violations.empty() ? "rad(A#H) = 0 on every applicable instance"
                                          : "a commutative semiprime instance has nonzero radical";
  rep.finalize();
  return rep;
}

Report lemma31_suite(std::uint64_t seed, std::size_t probes) {
  Report rep;
  rep.command = "verify-paper";
  rep.instance = "annihilator-essentiality";
  rep.seed = seed;
  std::size_t instances = 0, ideals = 0;
  Rng rng(seed);
  for (const auto& entry : catalog_module_algebras()) {
    HModuleAlgebra ma = entry.build();
    if (!is_h_semiprime(ma).h_semiprime) continue;
    ++instances;
    const std::size_t n = ma.alg_dim();
    const FieldSpec f = ma.algebra.field();
    std::vector<Subspace> sampled;
    sampled.push_back(Subspace::full(f, n));
    for (std::size_t k = 0; k < n; ++k)
      sampled.push_back(
          h_stable_closure(ma, Subspace::span(f, n, {unit_vec(f, n, k)}), Sidedness::two_sided).ideal.space);
    for (std::size_t k = 0; k < 3; ++k)
      sampled.push_back(h_stable_closure(ma, Subspace::span(f, n, {rng.nonzero_small_vec(f, n)}),
                                         Sidedness::two_sided)
                            .ideal.space);
    for (const auto& space : sampled) {
      if (space.dim() == 0) continue;
      ++ideals;
      StableIdeal ideal{IdealBasis{space, Sidedness::two_sided}, true};
      Lemma31Report l = lemma31_check(ma, ideal, probes, rng.child_seed(ideals));
      if (l.theorem_violation)
        rep.violations.push_back({"annihilator_essentiality", entry.name,
                                  "l.ann = 0: " + bool_str(l.annihilator_zero),
                                  "essential (probed): " + bool_str(l.essential_probed)});
    }
  }
  rep.hypothesis("h_semiprime_instances", std::to_string(instances));
  rep.hypothesis("ideals_checked", std::to_string(ideals));
  rep.hypothesis("probes", std::to_string(probes));
  rep.conclusion = rep.violations.empty() ? "exact annihilator test and probed essentiality agree"
                                          : "lemma 3.1 equivalence violated";
  rep.finalize();
  return rep;
}

Report thm44_suite(std::uint64_t seed, std::size_t samples) {
  Report rep;
  rep.command = "verify-paper";
  rep.instance = "integral-retraction";
  rep.seed = seed;
  std::size_t applicable = 0, ideals = 0;
  Rng rng(seed);
  std::size_t idx = 0;
  for (const auto& entry : catalog_module_algebras()) {
    HModuleAlgebra ma = entry.build();
    SmashProduct s = build_smash(ma);
    Thm44Report t = thm44_cd_check(s, samples, rng.child_seed(idx++));
    if (!t.map_injective)
      rep.violations.push_back({"map_injective", entry.name, "rank deficient", "injective"});
    if (!t.map_linear)
      rep.violations.push_back({"map_linear", entry.name, "a -> a#t not A#H-linear", ""});
    if (!t.smash_semiprime) continue;  // (c) fails; the implication is vacuous
    ++applicable;
    ideals += t.ideals_checked;
    if (t.violation_found) rep.violations.push_back({"integral_retraction", entry.name, t.violation_detail, ""});
  }
  rep.hypothesis("semiprime_smash_instances", std::to_string(applicable));
  rep.hypothesis("ideals_checked", std::to_string(ideals));
  rep.conclusion = rep.violations.empty()
                       ? "t.I != 0 and t.I inside I^H for every sampled nonzero H-stable left ideal"
                       : "the integral retraction mechanism failed";
  rep.finalize();
  return rep;
}

Report twist_suite(std::uint64_t seed) {
  Report rep;
  rep.command = "verify-paper";
  rep.instance = "drinfeld-twist-closure";
  rep.seed = seed;
  HopfAlgebra h = catalog_hopf("Q[C2xC2]");
  HModuleAlgebra ma = catalog_ma("v4perm");
  TwistSearchResult search = twist_search(h, default_twist_grid(h.field()), 2);
  bool has_trivial = false, has_nontrivial = false;
  TensorElement trivial{2, zero_vec(h.field(), h.dim() * h.dim())};
  {
    // 1 (x) 1 in coordinates
    for (std::size_t p = 0; p < h.dim(); ++p)
      for (std::size_t q = 0; q < h.dim(); ++q)
        trivial.coeffs[p * h.dim() + q] = h.algebra.unit()[p] * h.algebra.unit()[q];
  }
  for (const auto& t : search.twists) (t.j == trivial ? has_trivial : has_nontrivial) = true;
  rep.hypothesis("grid_points_passing_counit", std::to_string(search.leaves_examined));
  rep.hypothesis("cocycle_survivors", std::to_string(search.cocycle_survivors));
  rep.hypothesis("twists_certified", std::to_string(search.twists.size()));
  rep.hypothesis("trivial_twist_found", has_trivial);
  rep.hypothesis("nontrivial_twist_found", has_nontrivial);
  if (!has_trivial)
    rep.violations.push_back({"search", "Q[C2xC2]", "trivial twist not certified", ""});

  std::size_t idx = 0;
  for (const auto& t : search.twists) {
    const std::string name = "twist#" + std::to_string(idx++);
    try {
      // construction failures inside twist_hopf / twist_module_algebra are
      // theorem violations and surface as internal errors
      CheckReport rel = verify_twist_relation(ma, t);
      for (const auto& v : rel.violations)
        rep.violations.push_back({"twist_relation", name + " " + v.location, v.lhs, v.rhs});
      CheckReport inv = inverse_twist_check(h, t, &ma);
      for (const auto& v : inv.violations)
        rep.violations.push_back({v.check, name + " " + v.location, v.lhs, v.rhs});
      TransferReport tr = semiprime_transfer_check(ma, t);
      if (tr.theorem_violation)
        rep.violations.push_back({"semiprime_transfer", name,
                                  "H-semiprime " + bool_str(tr.a_h_semiprime) + ", rad dim " +
                                      std::to_string(tr.smash_rad_dim),
                                  "twisted: " + bool_str(tr.aj_hj_semiprime) + ", rad dim " +
                                      std::to_string(tr.smash_j_rad_dim)});
    } catch (const Error& e) {
      rep.violations.push_back({"twist_construction", name, e.what(), ""});
    }
  }
  rep.conclusion = rep.violations.empty() ? "twist closure verified on every certified twist"
                                          : "a twist-suite property failed";
  rep.finalize();
  return rep;
}

std::vector<Report> verify_paper(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Report> reports;
  reports.push_back(prop23_suite());
  reports.push_back(cor27_suite(rng.child_seed(1)));
  reports.push_back(lemma31_suite(rng.child_seed(2)));
  reports.push_back(cor36_suite());
  reports.push_back(thm44_suite(rng.child_seed(3)));
  reports.push_back(twist_suite(rng.child_seed(4)));
  for (auto& r : reports) {
    if (!r.seed) r.seed = seed;
    r.hypothesis("master_seed", std::to_string(seed));
  }
  return reports;
}

}  // namespace smashprime
