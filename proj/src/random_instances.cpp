#include "smashprime/random_instances.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace smashprime {

namespace {

std::vector<std::vector<std::size_t>> permutations_of(std::size_t d) {
  std::vector<std::size_t> p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = i;
  std::vector<std::vector<std::size_t>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

// all homomorphisms G -> S_d, each as a vector of permutations indexed by
// group element; groups here are tiny, so plain enumeration is fine
std::vector<std::vector<std::vector<std::size_t>>> homomorphisms(const GroupTable& g, std::size_t d) {
  auto perms = permutations_of(d);
  const std::size_t s = perms.size();
  auto compose_idx = [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> c(d);
    for (std::size_t x = 0; x < d; ++x) c[x] = perms[a][perms[b][x]];
    for (std::size_t i = 0; i < s; ++i)
      if (perms[i] == c) return i;
    throw_internal("permutation composition lookup failed");
  };
  std::vector<std::vector<std::vector<std::size_t>>> homs;
  std::vector<std::size_t> assign(g.order, 0);
  const std::size_t total = tensor_pow(s, g.order);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < g.order; ++i) {
      assign[i] = c % s;
      c /= s;
    }
    bool ok = true;
    for (std::size_t i = 0; i < g.order && ok; ++i)
      for (std::size_t j = 0; j < g.order && ok; ++j)
        if (assign[g.table[i][j]] != compose_idx(assign[i], assign[j])) ok = false;
    if (!ok) continue;
    std::vector<std::vector<std::size_t>> action;
    for (std::size_t i = 0; i < g.order; ++i) action.push_back(perms[assign[i]]);
    homs.push_back(std::move(action));
  }
  return homs;
}

const std::vector<GroupTable>& small_groups() {
  static const std::vector<GroupTable> groups = {GroupTable::cyclic(2), GroupTable::cyclic(3),
                                                 GroupTable::cyclic(4), GroupTable::klein_four()};
  return groups;
}

}  // namespace

HModuleAlgebra random_permutation_module_algebra(Rng& rng) {
  const auto& groups = small_groups();
  const GroupTable& g = groups[rng.below(groups.size())];
  const std::size_t d = 1 + rng.below(3);
  static std::map<std::pair<std::string, std::size_t>, std::vector<std::vector<std::vector<std::size_t>>>>
      hom_cache;
  auto key = std::make_pair(g.name, d);
  auto it = hom_cache.find(key);
  if (it == hom_cache.end()) it = hom_cache.emplace(key, homomorphisms(g, d)).first;
  const auto& homs = it->second;
  const auto& action = homs[rng.below(homs.size())];
  return permutation_module_algebra(FieldSpec::rationals(), g, d, action);
}

std::string describe_random_instance(const HModuleAlgebra& ma) {
  return "Q^" + std::to_string(ma.alg_dim()) + " under Q[G], |G|=" + std::to_string(ma.hopf_dim());
}

}  // namespace smashprime
