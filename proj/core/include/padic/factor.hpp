#ifndef PADIC_FACTOR_HPP
#define PADIC_FACTOR_HPP

#include <utility>
#include <vector>

#include "padic/rational.hpp"

namespace padic {

// Full prime factorization of n >= 1, sorted by prime. Trial division by
// 2, 3 and 6k+-1 up to 10^6, then Pollard rho with Brent cycling on what
// remains. Fine for desk-scale inputs; not a general-purpose sieve.
std::vector<std::pair<integer, unsigned>> factorize(integer n);

}  // namespace padic

#endif
