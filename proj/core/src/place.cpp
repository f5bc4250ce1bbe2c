#include "padic/place.hpp"

#include "padic/error.hpp"

namespace padic {

namespace {

// n - 1 = d * 2^s with d odd; returns true if n passes the round for base a.
bool miller_rabin_round(const integer& n, const integer& d, unsigned long s,
                        const integer& a) {
  integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool is_prime_u64(const integer& n) {
  // small cases first so the witness bases are proper residues
  for (long q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (!miller_rabin_round(n, d, s, integer(a))) return false;
  return true;
}

}  // namespace

bool is_prime(const integer& n) {
  if (n < 2) return false;
  integer limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 2, 64);
  if (n < limit) return is_prime_u64(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

place::place(integer p) : p_(std::move(p)) {
  if (!is_prime(p_))
    throw error(errc::not_prime, to_string(p_) + " is not prime");
}

}  // namespace padic
