#ifndef PADIC_VALUATION_HPP
#define PADIC_VALUATION_HPP

#include <vector>

#include "padic/extint.hpp"
#include "padic/place.hpp"
#include "padic/rational.hpp"

namespace padic {

// p-adic valuation: the exponent of p in x, with vp(0) = +inf.
// vp(a/b) = vp(a) - vp(b); multiplicative over products.
ext_int vp(const integer& n, const place& p);
ext_int vp(const rational& x, const place& p);

// |x|_p = p^(-vp(x)) as an exact rational; |0|_p = 0.
rational abs_p(const rational& x, const place& p);

// d_p(x, y) = |x - y|_p.
rational dist_p(const rational& x, const rational& y, const place& p);

// p^k as an exact rational, k of either sign.
rational pow_rat(const place& p, long k);

// Base-g valuation for any g >= 2, prime or not. For g = prod q_i^{e_i}
// this is min_i floor(v_{q_i}(x) / e_i): the number of trailing zeros of
// the base-g expansion of an integer, or minus the number of digits after
// the radix point for a base-g "decimal".
//
// vg demands that the expansion of x terminates on the right, i.e. every
// prime of the reduced denominator divides g; otherwise it throws
// error(non_terminating_expansion). vg_order is the total variant, defined
// for every nonzero x: it is the order of x in the product ring
// Z_g = prod_i Z_{q_i} and is what left-infinite digit expansions need
// (e.g. 1/3 in base 2 has order 0 even though no finite expansion exists).
ext_int vg(const rational& x, const integer& g);
ext_int vg_order(const rational& x, const integer& g);

// v_p(n!) by the floor-sum formula sum_{i>=1} floor(n/p^i).
integer legendre_factorial(const integer& n, const place& p);

// Sum of the base-p digits of n >= 0. The identity
// v_p(n!) = (n - digit_sum(n, p)) / (p - 1) ties the two together.
integer digit_sum(integer n, const place& p);

enum class lte_sign { minus, plus };

// Lifting-the-exponent valuation of a^n -+ b^n. Hypotheses enforced:
//   minus, p odd:  p divides neither a nor b, p | a-b
//                  ->  vp(a-b) + vp(n)
//   plus,  p odd:  p divides neither a nor b, p | a+b, n odd
//                  ->  vp(a+b) + vp(n)
//   minus, p = 2:  a, b odd, n even, 4 | a-b or 4 | a+b
//                  ->  v2(a-+b) + v2(n) for whichever of the two holds
//                  (for odd a, b exactly one of the two holds, since
//                  (a-b) + (a+b) = 2a = 2 mod 4; the condition selects
//                  the formula rather than gating the call)
// Everything else throws error(precondition_violation) naming the failed
// hypothesis; in particular p = 2 with sign plus has no covering theorem.
// Returns ext_int because a = b (or a = -b in the plus case) is admissible
// and then a^n -+ b^n = 0 with valuation +inf; the identity still holds.
ext_int lte_valuation(const integer& a, const integer& b, const integer& n,
                      const place& p, lte_sign sign);

// v_2 of the harmonic number H_n = 1 + 1/2 + ... + 1/n, by exact rational
// summation. Equals -floor(log2 n) for every n >= 2, which is negative, so
// H_n is never an integer.
long harmonic_v2(unsigned long n);

// One simultaneous-approximation constraint: vp(x* - x, p) >= m.
struct approx_constraint {
  place p;
  rational x;
  integer m;
};

// Produces one rational x* satisfying every constraint at once (the primes
// must be pairwise distinct). Clears denominators and runs a Chinese
// remainder computation on the resulting integer congruences; constraints
// whose adjusted exponent drops to <= 0 hold automatically.
rational weak_approximation(const std::vector<approx_constraint>& constraints);

// n = x^2 + y^2 is solvable iff every prime p = 3 (mod 4) divides n to an
// even power. n = 0 counts as solvable (0 + 0).
bool two_squares_solvable(const integer& n);

// n = x^2 + y^2 + z^2 is solvable iff n is not of the form 4^r(8m + 7).
bool three_squares_solvable(const integer& n);

enum class square_form { two_squares, three_squares };

// Brute-force solvability of the chosen form modulo p^k: enumerates residue
// tuples with early exit against a precomputed square table. Budget: the
// scan touches m^(s-1) tuples for m = p^k and s squares in the form, capped
// at 10^6 (so m <= 10^6 for two squares, m <= 10^3 for three); beyond that
// it throws error(budget_exceeded).
bool congruence_solvable_mod_pk(square_form form, const integer& n,
                                const place& p, unsigned k);

}  // namespace padic

#endif
