// Acceptance gate: one pass/fail line per criterion, all checks exact.
#include <chrono>
#include <cstdio>
#include <string>

#include "smashprime/catalog.hpp"
#include "smashprime/random_instances.hpp"
#include "smashprime/suites.hpp"
#include "support/oracle.hpp"

using namespace smashprime;
using testsupport::exhaustive_radical;
using testsupport::random_associative_algebra;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, bool pass, double seconds,
               const std::string& detail = {}) {
  std::printf("criterion %2d %s: %s (%.2fs)%s%s\n", number, pass ? "PASS" : "FAIL", label.c_str(),
              seconds, detail.empty() ? "" : " - ", detail.c_str());
  if (!pass) ++g_failures;
}

template <typename F>
void timed(int number, const std::string& label, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = body(pass);
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  criterion(number, label, pass, secs, detail);
}

constexpr std::uint64_t kSeed = 42;

}  // namespace

int main() {
  timed(1, "separability idempotent on every catalog pair with a witness integral", [](bool& pass) {
    Report r = prop23_suite();
    pass = r.status == Status::pass;
    std::string witness_count;
    for (const auto& [k, v] : r.hypotheses)
      if (k == "pairs_with_witness") witness_count = v;
    if (witness_count == "0") pass = false;
    return "pairs with witness: " + witness_count;
  });

  timed(2, "semisimplicity closure of the smash product, catalog + 50 seeded random module algebras", [](bool& pass) {
    Report r = cor27_suite(kSeed, 50);
    pass = r.status == Status::pass;
    return r.conclusion;
  });

  timed(3, "commutative semiprime smash products, incl. the dim-18 and dim-36 instances", [](bool& pass) {
    Report r = cor36_suite();
    pass = r.status == Status::pass;
    SmashProduct s18 = build_smash(catalog_ma("s3nat"));
    SmashProduct s36 = build_smash(catalog_ma("regS3"));
    bool named = s18.dim() == 18 && jacobson_radical(s18.algebra).dim() == 0 && s36.dim() == 36 &&
                 jacobson_radical(s36.algebra).dim() == 0;
    pass = pass && named;
    return std::string("dim-18 and dim-36 radicals zero: ") + (named ? "yes" : "no");
  });

  timed(4, "negative controls report non-semiprime with explicit witnesses", [](bool& pass) {
    bool ok = true;
    std::string detail;
    for (const auto& nc : negative_controls()) {
      SmashProduct s = build_smash(nc.ma);
      Subspace rad = jacobson_radical(s.algebra);
      ok = ok && rad.dim() > 0;
      if (nc.name == "nil2") {
        HSemiprimeResult hsp = is_h_semiprime(nc.ma);
        ok = ok && !hsp.h_semiprime && hsp.witness.dim() == 1;
      }
      if (nc.name == "f2triv") ok = ok && !is_separable_hopf(nc.ma.hopf).separable && rad.dim() == 1;
      detail += nc.name + " rad dim " + std::to_string(rad.dim()) + "; ";
    }
    pass = ok;
    return detail;
  });

  timed(5, "radical oracle equivalence on 100 seeded random rational algebras", [](bool& pass) {
    Rng rng(kSeed);
    std::size_t agree = 0;
    const std::size_t total = 100;
    for (std::size_t k = 0; k < total; ++k) {
      Algebra a = random_associative_algebra(rng, 1 + k % 3);
      if (jacobson_radical(a) == exhaustive_radical(a)) ++agree;
    }
    pass = agree == total;
    return std::to_string(agree) + "/" + std::to_string(total) + " agree";
  });

  timed(6, "annihilator/essentiality agreement on stable ideals (probes = 50)", [](bool& pass) {
    Report r = lemma31_suite(kSeed, 50);
    pass = r.status == Status::pass;
    return r.conclusion;
  });

  timed(7, "integral retraction mechanism on all semiprime smash products", [](bool& pass) {
    Report r = thm44_suite(kSeed, 12);
    pass = r.status == Status::pass;
    return r.conclusion;
  });

  timed(8, "twist suite: search, H^J/A^J verification, multiplication identity, round trips, transfer", [](bool& pass) {
    Report r = twist_suite(kSeed);
    bool trivial = false, nontrivial = false;
    for (const auto& [k, v] : r.hypotheses) {
      if (k == "trivial_twist_found") trivial = v == "true";
      if (k == "nontrivial_twist_found") nontrivial = v == "true";
    }
    pass = r.status == Status::pass && trivial && nontrivial;
    return "trivial found: " + std::string(trivial ? "yes" : "no") +
           ", nontrivial found: " + std::string(nontrivial ? "yes" : "no");
  });

  timed(9, "dim End_{A#H}(A) = dim A^H on every catalog module algebra", [](bool& pass) {
    pass = true;
    std::string detail;
    for (const auto& entry : catalog_module_algebras()) {
      EndIsoReport e = end_iso_check(entry.build());
      if (!e.dims_equal || !e.right_mults_embed) {
        pass = false;
        detail += entry.name + " dims " + std::to_string(e.end_dim) + " vs " +
                  std::to_string(e.invariants_dim) + "; ";
      }
    }
    return detail.empty() ? "all equal" : detail;
  });

  timed(10, "integrals: dim 1 both sides on every catalog Hopf, eps(t) = |G| for group algebras",
        [](bool& pass) {
          pass = true;
          std::string detail;
          const std::vector<std::pair<std::string, long>> group_orders = {
              {"Q[C2]", 2}, {"Q[C3]", 3}, {"Q[C4]", 4}, {"Q[C2xC2]", 4}, {"Q[S3]", 6}, {"F2[C2]", 2}};
          for (const auto& entry : catalog_hopfs()) {
            HopfAlgebra h = entry.build();
            Subspace li = integrals(h, Side::left), ri = integrals(h, Side::right);
            if (li.dim() != 1 || ri.dim() != 1) {
              pass = false;
              detail += entry.name + " integral dims " + std::to_string(li.dim()) + "/" +
                        std::to_string(ri.dim()) + "; ";
              continue;
            }
            for (const auto& [name, order] : group_orders) {
              if (name != entry.name) continue;
              Vec t = li.basis_row(0);
              Scalar eps = Scalar::zero(h.field());
              for (std::size_t i = 0; i < h.dim(); ++i) eps += h.coalgebra.counit[i] * t[i];
              if (eps != Scalar::from_int(h.field(), order)) {
                pass = false;
                detail += entry.name + " eps(t) = " + eps.str() + "; ";
              }
            }
          }
          return detail.empty() ? "all integrals one-dimensional with the expected counit values" : detail;
        });

  std::printf("%s (%d failure%s)\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", g_failures,
              g_failures == 1 ? "" : "s");
  return g_failures == 0 ? 0 : 1;
}
