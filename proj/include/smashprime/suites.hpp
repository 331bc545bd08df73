#pragma once

#include "smashprime/report.hpp"
#include "smashprime/twist.hpp"

namespace smashprime {

/// Theorem-anchored property suites over the catalog plus seeded random
/// instances. Each returns one Report; status fail means a theorem-backed
/// property was violated (a bug or a genuine counterexample, never noise).

Report prop23_suite();
Report cor27_suite(std::uint64_t seed, std::size_t random_instances = 50);
Report cor36_suite();
Report lemma31_suite(std::uint64_t seed, std::size_t probes = 50);
Report thm44_suite(std::uint64_t seed, std::size_t samples = 12);
Report twist_suite(std::uint64_t seed);

/// All suites in order; deterministic given the seed.
std::vector<Report> verify_paper(std::uint64_t seed);

}  // namespace smashprime
