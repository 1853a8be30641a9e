#ifndef MONOHULL_RANDOM_HPP
#define MONOHULL_RANDOM_HPP

#include <random>

#include "monohull/core.hpp"
#include "monohull/optimize.hpp"

namespace monohull {

using Rng = std::mt19937_64;

// Uniform numerator over a uniform denominator in {1..max_den}; supported
// exactly on [lo, hi].
Rational random_rational(Rng& rng, long lo, long hi, int max_den);

// Random valid problem data; a_n is a positive fraction of b_n unless
// zero_an is set.
Instance random_instance(Rng& rng, int n, bool zero_an = false);

// Objective with every component uniform in [-max_abs, max_abs].
Objective random_objective(Rng& rng, const Instance& inst, long max_abs = 10);

}  // namespace monohull

#endif  // MONOHULL_RANDOM_HPP
