#include "padic/factor.hpp"

#include <map>

#include "padic/error.hpp"
#include "padic/place.hpp"

namespace padic {

namespace {

// Brent's variant of Pollard rho; n must be odd, composite, > 1.
integer pollard_brent(const integer& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0xb5297a4d);
  while (true) {
    integer y = rng.get_z_range(n - 1) + 1;
    integer c = rng.get_z_range(n - 1) + 1;
    integer m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (integer i = 0; i < r; ++i) y = (y * y + c) % n;
      integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        integer steps = r - k;
        if (steps > m) steps = m;
        for (integer i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(integer n, std::map<integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<integer, unsigned>> factorize(integer n) {
  if (n < 1)
    throw error(errc::precondition_violation, "factorize needs n >= 1");
  std::map<integer, unsigned> acc;
  for (long q : {2L, 3L}) {
    while (n % q == 0) {
      ++acc[integer(q)];
      n /= q;
    }
  }
  for (long q = 5; q <= 1000000 && integer(q) * q <= n; q += 6) {
    for (long cand : {q, q + 2}) {
      while (n % cand == 0) {
        ++acc[integer(cand)];
        n /= cand;
      }
    }
  }
  factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

}  // namespace padic
