#include "padic/valuation.hpp"

#include <cstddef>
#include <vector>

#include "padic/error.hpp"
#include "padic/factor.hpp"

namespace padic {

ext_int vp(const integer& n, const place& p) {
  if (n == 0) return ext_int::infinity();
  integer reduced;
  mp_bitcnt_t count = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(),
                                 p.prime().get_mpz_t());
  return ext_int(integer(count));
}

ext_int vp(const rational& x, const place& p) {
  if (x == 0) return ext_int::infinity();
  return ext_int(vp(integer(x.get_num()), p).value() -
                 vp(integer(x.get_den()), p).value());
}

rational pow_rat(const place& p, long k) {
  integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.prime().get_mpz_t(),
             static_cast<unsigned long>(k >= 0 ? k : -k));
  if (k >= 0) return rational(pk);
  return rational(integer(1), pk);  // already canonical
}

rational abs_p(const rational& x, const place& p) {
  if (x == 0) return rational(0);
  return pow_rat(p, -vp(x, p).value().get_si());
}

rational dist_p(const rational& x, const rational& y, const place& p) {
  return abs_p(x - y, p);
}

namespace {

ext_int base_valuation(const rational& x, const integer& g,
                       bool require_terminating) {
  if (g < 2)
    throw error(errc::precondition_violation, "base must be at least 2");
  if (x == 0) return ext_int::infinity();
  auto primes = factorize(g);
  if (require_terminating) {
    integer den = x.get_den();
    for (const auto& [q, e] : primes) {
      integer stripped;
      mpz_remove(stripped.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
      den = stripped;
    }
    if (den != 1)
      throw error(errc::non_terminating_expansion,
                  "denominator " + to_string(integer(x.get_den())) +
                      " has a prime factor outside base " + to_string(g));
  }
  bool first = true;
  integer best;
  for (const auto& [q, e] : primes) {
    integer v = vp(x, place(q)).value();
    integer exp(e), fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_mpz_t(), exp.get_mpz_t());
    if (first || fl < best) {
      best = fl;
      first = false;
    }
  }
  return ext_int(best);
}

}  // namespace

ext_int vg(const rational& x, const integer& g) {
  return base_valuation(x, g, true);
}

ext_int vg_order(const rational& x, const integer& g) {
  return base_valuation(x, g, false);
}

integer legendre_factorial(const integer& n, const place& p) {
  if (n < 0)
    throw error(errc::precondition_violation, "factorial needs n >= 0");
  integer total = 0;
  for (integer pk = p.prime(); pk <= n; pk *= p.prime()) total += n / pk;
  return total;
}

integer digit_sum(integer n, const place& p) {
  if (n < 0)
    throw error(errc::precondition_violation, "digit sum needs n >= 0");
  integer total = 0;
  while (n > 0) {
    total += n % p.prime();
    n /= p.prime();
  }
  return total;
}

ext_int lte_valuation(const integer& a, const integer& b, const integer& n,
                      const place& p, lte_sign sign) {
  auto fail = [](const char* what) {
    throw error(errc::precondition_violation, what);
  };
  if (n < 1) fail("exponent n must be >= 1");
  const integer& q = p.prime();
  if (q == 2) {
    if (sign == lte_sign::plus)
      fail("no p = 2 statement covers a^n + b^n");
    if (a % 2 == 0 || b % 2 == 0) fail("p = 2 needs a and b odd");
    if (n % 2 != 0) fail("p = 2 needs n even");
    if ((a - b) % 4 == 0) return vp(integer(a - b), p) + vp(n, p);
    if ((a + b) % 4 == 0) return vp(integer(a + b), p) + vp(n, p);
    throw error(errc::precondition_violation,
                "p = 2 needs 4 | a-b or 4 | a+b");
  }
  if (a % q == 0 || b % q == 0) fail("p must divide neither a nor b");
  if (sign == lte_sign::minus) {
    if ((a - b) % q != 0) fail("minus case needs p | a-b");
    return vp(integer(a - b), p) + vp(n, p);
  }
  if (n % 2 == 0) fail("plus case needs n odd");
  if ((a + b) % q != 0) fail("plus case needs p | a+b");
  return vp(integer(a + b), p) + vp(n, p);
}

long harmonic_v2(unsigned long n) {
  if (n < 1)
    throw error(errc::precondition_violation, "harmonic number needs n >= 1");
  rational h(1);
  for (unsigned long k = 2; k <= n; ++k) h += rational(integer(1), integer(k));
  return vp(h, place(2)).value().get_si();
}

rational weak_approximation(
    const std::vector<approx_constraint>& constraints) {
  if (constraints.empty())
    throw error(errc::empty_input, "no constraints given");
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (std::size_t j = i + 1; j < constraints.size(); ++j)
      if (constraints[i].p == constraints[j].p)
        throw error(errc::precondition_violation,
                    "constraint primes must be pairwise distinct");

  // Clear denominators: with D the lcm of all target denominators and
  // y = z/D, the i-th constraint becomes z = D*x_i (mod p_i^(m_i + vp(D))),
  // and exponents that drop to <= 0 hold for every z.
  integer D = 1;
  for (const auto& c : constraints)
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.x.get_den().get_mpz_t());

  integer r = 0, mod = 1;
  for (const auto& c : constraints) {
    integer exponent = c.m + vp(D, c.p).value();
    if (exponent <= 0) continue;
    integer pk;
    mpz_pow_ui(pk.get_mpz_t(), c.p.prime().get_mpz_t(), exponent.get_ui());
    rational scaled = c.x * rational(D);
    integer target = scaled.get_num();  // scaled is an integer by choice of D
    integer inv;
    mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), pk.get_mpz_t());
    integer t = (target - r) % pk * inv % pk;
    r += mod * t;
    mod *= pk;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  }
  rational y(r, D);
  y.canonicalize();
  return y;
}

bool two_squares_solvable(const integer& n) {
  if (n < 0) return false;
  if (n == 0) return true;
  for (const auto& [q, e] : factorize(n))
    if (q % 4 == 3 && e % 2 == 1) return false;
  return true;
}

bool three_squares_solvable(const integer& n) {
  if (n < 0) return false;
  if (n == 0) return true;
  integer m = n;
  while (m % 4 == 0) m /= 4;
  return m % 8 != 7;
}

bool congruence_solvable_mod_pk(square_form form, const integer& n,
                                const place& p, unsigned k) {
  integer m;
  mpz_pow_ui(m.get_mpz_t(), p.prime().get_mpz_t(), k);
  const long cap = 1000000;
  integer tuples = form == square_form::two_squares ? m : m * m;
  if (tuples > cap)
    throw error(errc::budget_exceeded,
                "scan of " + to_string(tuples) + " residue tuples exceeds " +
                    std::to_string(cap));
  long mm = m.get_si();
  integer t;
  mpz_mod(t.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  long target = t.get_si();
  std::vector<char> is_square(mm, 0);
  for (long x = 0; x < mm; ++x) is_square[x * x % mm] = 1;
  if (form == square_form::two_squares) {
    for (long x = 0; x < mm; ++x)
      if (is_square[((target - x * x) % mm + mm) % mm]) return true;
    return false;
  }
  for (long x = 0; x < mm; ++x)
    for (long y = 0; y < mm; ++y)
      if (is_square[((target - x * x - y * y) % mm + mm) % mm]) return true;
  return false;
}

}  // namespace padic
