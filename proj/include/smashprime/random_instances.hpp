#pragma once

#include "smashprime/catalog.hpp"
#include "smashprime/rng.hpp"

namespace smashprime {

/// Seed-deterministic random module algebra: A = Q^d coordinatewise
/// (d <= 3), H = Q[G] with |G| <= 4, and a uniformly chosen group
/// homomorphism G -> S_d permuting the coordinates. Always a valid module
/// algebra with A commutative semisimple.
HModuleAlgebra random_permutation_module_algebra(Rng& rng);

std::string describe_random_instance(const HModuleAlgebra& ma);

}  // namespace smashprime
