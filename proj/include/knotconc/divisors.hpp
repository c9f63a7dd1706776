#pragma once

#include <utility>
#include <vector>

#include "knotconc/polyarith.hpp"

namespace knotconc {

/// Prime factorization of |n| as ascending (prime, exponent) pairs. n != 0.
/// Trial division for small primes, Pollard-Brent rho beyond.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// All positive divisors of |n| in ascending order. n != 0.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace knotconc
