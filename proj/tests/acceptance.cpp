// Batch acceptance run: twelve end-to-end checks, one PASS/FAIL line each.
// Exits nonzero if any check fails. Wall-clock limits and RNG seeds are
// pinned here so reruns are reproducible.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "padic/geometry.hpp"
#include "padic/laurent.hpp"
#include "padic/newton.hpp"
#include "padic/padic_number.hpp"
#include "padic/valuation.hpp"

using namespace padic;
using steady = std::chrono::steady_clock;

namespace {

int failures = 0;

struct check_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw check_failure(what);
}

template <typename F>
void criterion(int n, const char* label, F&& body) {
  try {
    body();
    std::printf("[PASS] criterion %d: %s\n", n, label);
  } catch (const std::exception& e) {
    ++failures;
    std::printf("[FAIL] criterion %d: %s -- %s\n", n, label, e.what());
  }
  std::fflush(stdout);
}

double seconds_since(steady::time_point t0) {
  return std::chrono::duration<double>(steady::now() - t0).count();
}

rational rand_rat(std::mt19937& rng, int lo, int hi, int dmax) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, dmax);
  rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::map<rational, long> segment_multiset(const newton_polygon& np) {
  std::map<rational, long> m;
  for (const auto& s : np.segments) m[s.slope] += s.length;
  return m;
}

void crit1() {
  auto t0 = steady::now();
  place two(2);
  require(vp(integer(2400), two) == ext_int(5), "vp(2400, 2) != 5");
  require(vg(rational(2400), integer(10)) == ext_int(2),
          "vg(2400, 10) != 2");
  require(vg(rational(13, 8), integer(10)) == ext_int(-3),
          "vg(13/8, 10) != -3");
  require(vp(rational(13, 8), two) == ext_int(-3), "vp(13/8, 2) != -3");
  require(dist_p(rational(3100), rational(28), two) == rational(1, 1024),
          "dist_2(3100, 28) != 1/1024");
  double dt = seconds_since(t0);
  require(dt < 0.001, "took " + std::to_string(dt) + "s, limit 0.001s");
}

void crit2() {
  integer two(2), ten(10);
  auto third = padic_number::from_rational(rational(1, 3), two, 8);
  require(display(third, 8) == "...10101011",
          "expand(1/3, 2, 8) is " + display(third, 8));
  auto minus_one = padic_number::from_rational(rational(-1), ten, 8);
  require(display(minus_one, 8) == "...99999999",
          "expand(-1, 10, 8) is " + display(minus_one, 8));
  auto square = mul(minus_one, minus_one);
  auto one = padic_number::from_rational(rational(1), ten, 8);
  require(eq_to_precision(square, one),
          "(...99999999)^2 != 1 to precision 8");
  require(square.precision() == ext_int(8), "square lost precision");
}

void crit3() {
  auto t0 = steady::now();
  for (long q : {2, 3, 5, 7}) {
    place p(q);
    integer brute = 0;  // running sum of vp(k) = vp(n!) at n = k
    for (long n = 1; n <= 5000; ++n) {
      brute += vp(integer(n), p).value();
      integer by_sum = legendre_factorial(integer(n), p);
      integer by_digits = (integer(n) - digit_sum(integer(n), p)) / (q - 1);
      require(by_sum == brute, "floor sum != brute force at n = " +
                                   std::to_string(n) + ", p = " +
                                   std::to_string(q));
      require(by_digits == brute, "digit sum formula off at n = " +
                                      std::to_string(n) + ", p = " +
                                      std::to_string(q));
    }
  }
  double dt = seconds_since(t0);
  require(dt < 10.0, "took " + std::to_string(dt) + "s, limit 10s");
}

void crit4() {
  auto t0 = steady::now();
  long checked = 0;
  auto direct = [](long a, long b, long n, const place& p,
                   lte_sign sign) {
    integer an, bn;
    mpz_pow_ui(an.get_mpz_t(), integer(a).get_mpz_t(),
               static_cast<unsigned long>(n));
    mpz_pow_ui(bn.get_mpz_t(), integer(b).get_mpz_t(),
               static_cast<unsigned long>(n));
    return vp(sign == lte_sign::minus ? integer(an - bn) : integer(an + bn),
              p);
  };
  for (long q : {3, 5, 7, 11, 13}) {
    place p(q);
    for (long a = -30; a <= 30; ++a) {
      if (a % q == 0) continue;
      for (long b = -30; b <= 30; ++b) {
        if (b % q == 0) continue;
        for (long n = 1; n <= 12; ++n) {
          if ((a - b) % q == 0) {
            require(lte_valuation(integer(a), integer(b), integer(n), p,
                                  lte_sign::minus) ==
                        direct(a, b, n, p, lte_sign::minus),
                    "minus case off at a=" + std::to_string(a) +
                        " b=" + std::to_string(b) + " n=" +
                        std::to_string(n) + " p=" + std::to_string(q));
            ++checked;
          }
          if ((a + b) % q == 0 && n % 2 == 1) {
            require(lte_valuation(integer(a), integer(b), integer(n), p,
                                  lte_sign::plus) ==
                        direct(a, b, n, p, lte_sign::plus),
                    "plus case off at a=" + std::to_string(a) +
                        " b=" + std::to_string(b) + " n=" +
                        std::to_string(n) + " p=" + std::to_string(q));
            ++checked;
          }
        }
      }
    }
  }
  place two(2);
  for (long a = -29; a <= 29; a += 2)
    for (long b = -29; b <= 29; b += 2)
      for (long n = 2; n <= 12; n += 2)
        if ((a - b) % 4 == 0 || (a + b) % 4 == 0) {
          require(lte_valuation(integer(a), integer(b), integer(n), two,
                                lte_sign::minus) ==
                      direct(a, b, n, two, lte_sign::minus),
                  "p = 2 case off at a=" + std::to_string(a) + " b=" +
                      std::to_string(b) + " n=" + std::to_string(n));
          ++checked;
        }
  require(checked > 10000, "grid unexpectedly sparse");
  double dt = seconds_since(t0);
  require(dt < 30.0, "took " + std::to_string(dt) + "s, limit 30s");
}

void crit5() {
  for (unsigned long n = 2; n <= 512; ++n) {
    long fl = 0;
    while ((2UL << fl) <= n) ++fl;  // fl = floor(log2 n)
    require(harmonic_v2(n) == -fl,
            "v2(H_n) != -floor(log2 n) at n = " + std::to_string(n));
  }
}

void crit6() {
  for (long n = 1; n <= 20; ++n) {
    std::vector<rational> coeffs(static_cast<std::size_t>(n + 1), rational(0));
    coeffs[0] = rational(-2);
    coeffs[static_cast<std::size_t>(n)] = rational(1);
    require(dumas_irreducible(poly_q(coeffs), place(2)) ==
                dumas_verdict::irreducible,
            "X^" + std::to_string(n) + " - 2 not flagged irreducible");
  }
  for (long q : {2, 3, 5}) {
    poly_q cyc({rational(1), rational(1), rational(1)});
    require(dumas_irreducible(cyc, place(q)) == dumas_verdict::inconclusive,
            "1 + X + X^2 must be inconclusive at p = " + std::to_string(q));
    auto purity = is_pure(cyc, place(q));
    require(purity.pure && *purity.slope == 0,
            "1 + X + X^2 should be pure of slope 0");
  }
  std::mt19937 rng(0xe15e6u);
  const long prime_pool[] = {2, 3, 5, 7, 11};
  std::uniform_int_distribution<int> pick_p(0, 4), pick_d(2, 8),
      pick_r(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    long q = prime_pool[pick_p(rng)];
    place p(q);
    int d = pick_d(rng);
    std::vector<integer> coeffs(static_cast<std::size_t>(d + 1));
    long u = 0;
    while (u % q == 0) u = pick_r(rng);
    coeffs[0] = integer(q) * u;
    for (int i = 1; i < d; ++i)
      coeffs[static_cast<std::size_t>(i)] = integer(q) * pick_r(rng);
    coeffs[static_cast<std::size_t>(d)] = 1;
    require(eisenstein_check(coeffs, p).passes, "fuzz generator broken");
    std::vector<rational> as_rat(coeffs.begin(), coeffs.end());
    require(dumas_irreducible(poly_q(as_rat), p) ==
                dumas_verdict::irreducible,
            "Eisenstein at " + std::to_string(q) +
                " must imply an irreducible verdict (trial " +
                std::to_string(trial) + ")");
  }
}

poly_q random_poly(std::mt19937& rng, int max_deg, long q) {
  std::uniform_int_distribution<int> pick_d(0, max_deg), pick_c(-20, 20),
      pick_e(0, 3);
  int d = pick_d(rng);
  std::vector<rational> coeffs(static_cast<std::size_t>(d + 1), rational(0));
  auto coeff = [&](bool allow_zero) {
    int c = pick_c(rng);
    while (!allow_zero && c == 0) c = pick_c(rng);
    if (c == 0) return rational(0);  // interior zeros are never plotted
    integer pe;
    mpz_pow_ui(pe.get_mpz_t(), integer(q).get_mpz_t(),
               static_cast<unsigned long>(pick_e(rng)));
    return rational(integer(c) * pe);
  };
  coeffs[0] = coeff(false);
  coeffs[static_cast<std::size_t>(d)] = coeff(false);
  for (int i = 1; i < d; ++i)
    coeffs[static_cast<std::size_t>(i)] = coeff(true);
  return poly_q(coeffs);
}

void crit7() {
  std::mt19937 rng(0xabcd01u);
  const long primes[] = {2, 3, 5};
  for (int trial = 0; trial < 500; ++trial) {
    long q = primes[trial % 3];
    place p(q);
    poly_q a = random_poly(rng, 4, q), b = random_poly(rng, 4, q);
    auto merged = segment_multiset(polygon_of(a, p));
    for (const auto& [slope, len] : segment_multiset(polygon_of(b, p)))
      merged[slope] += len;
    require(segment_multiset(polygon_of(mul(a, b), p)) == merged,
            "product polygon is not the merge of the factors (trial " +
                std::to_string(trial) + ", p = " + std::to_string(q) + ")");
  }
}

void crit8() {
  std::mt19937 rng(0xabcd02u);
  const long primes[] = {2, 3, 5};
  std::uniform_int_distribution<int> pick_k(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    place p(primes[trial % 3]);
    int k = pick_k(rng);
    poly_q prod({rational(1)});
    std::map<rational, long> expected;
    for (int j = 0; j < k; ++j) {
      rational r(0);
      while (r == 0) r = rand_rat(rng, -12, 12, 8);
      prod = mul(prod, poly_q({-r, rational(1)}));
      expected[rational(vp(r, p).value())] += 1;
    }
    auto got = root_valuations(prod, p);
    std::map<rational, long> got_map;
    for (const auto& [v, m] : got) got_map[v] += m;
    require(got_map == expected,
            "root valuations disagree with the constructed roots (trial " +
                std::to_string(trial) + ")");
    rational last(0);
    bool first = true;
    for (const auto& [v, m] : got) {
      require(m >= 1, "empty multiplicity");
      require(first || v > last, "valuations not sorted ascending");
      last = v;
      first = false;
    }
  }
}

void crit9() {
  auto t0 = steady::now();
  std::mt19937 rng(0xabcd03u);
  std::uniform_int_distribution<int> pick_k(-3, 5), pick_t(-20, 20);
  for (long q : {2, 3, 5}) {
    place p(q);
    for (int trial = 0; trial < 10000; ++trial) {
      rational x = rand_rat(rng, -60, 60, 12), y = x, z = x;
      while (y == x) y = rand_rat(rng, -60, 60, 12);
      while (z == x || z == y) z = rand_rat(rng, -60, 60, 12);
      auto w = isoceles_witness(x, y, z, p);
      require(w.two_largest_equal && w.sides[1] == w.sides[2] &&
                  w.sides[0] <= w.sides[1],
              "triangle not isoceles-with-short-base at p = " +
                  std::to_string(q));
    }
    for (int trial = 0; trial < 10000; ++trial) {
      ball b1{p, rand_rat(rng, -60, 60, 12), pick_k(rng)};
      ball b2{p, rand_rat(rng, -60, 60, 12), pick_k(rng)};
      auto rel = ball_relation(b1, b2);
      ball r1 = recenter(b1, b1.center + pick_t(rng) * pow_rat(p, b1.k));
      ball r2 = recenter(b2, b2.center + pick_t(rng) * pow_rat(p, b2.k));
      require(ball_relation(r1, r2) == rel,
              "relation changed under recentering");
      if (rel == ball_rel::disjoint)
        require(ball_distance(r1, r2) == ball_distance(b1, b2),
                "distance changed under recentering");
    }
  }
  double dt = seconds_since(t0);
  require(dt < 10.0, "took " + std::to_string(dt) + "s, limit 10s");
}

void crit10() {
  std::mt19937 rng(0xabcd04u);
  std::vector<long> pool = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> pick_n(2, 4), pick_m(-2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(pool.begin(), pool.end(), rng);
    int n = pick_n(rng);
    std::vector<approx_constraint> cs;
    for (int i = 0; i < n; ++i)
      cs.push_back({place(pool[static_cast<std::size_t>(i)]),
                    rand_rat(rng, -50, 50, 20), integer(pick_m(rng))});
    rational witness = weak_approximation(cs);
    for (const auto& c : cs)
      require(vp(witness - c.x, c.p) >= ext_int(c.m),
              "witness misses a constraint (trial " + std::to_string(trial) +
                  ")");
  }
}

void crit11() {
  const long limit = 2000;
  std::vector<char> two(limit + 1, 0), three(limit + 1, 0);
  for (long x = 0; x * x <= limit; ++x)
    for (long y = x; x * x + y * y <= limit; ++y) {
      two[static_cast<std::size_t>(x * x + y * y)] = 1;
      for (long z = y; x * x + y * y + z * z <= limit; ++z)
        three[static_cast<std::size_t>(x * x + y * y + z * z)] = 1;
    }
  place p2(2);
  for (long n = 0; n <= limit; ++n) {
    require(two_squares_solvable(integer(n)) ==
                static_cast<bool>(two[static_cast<std::size_t>(n)]),
            "two-squares verdict wrong at n = " + std::to_string(n));
    require(three_squares_solvable(integer(n)) ==
                static_cast<bool>(three[static_cast<std::size_t>(n)]),
            "three-squares verdict wrong at n = " + std::to_string(n));
    bool mod8 = congruence_solvable_mod_pk(square_form::three_squares,
                                           integer(n), p2, 3);
    require(mod8 == (n % 8 != 7),
            "mod-8 screen wrong at n = " + std::to_string(n));
    if (!mod8)
      require(!three_squares_solvable(integer(n)),
              "local obstruction must forbid a global solution");
  }
}

void crit12() {
  place p5(5);
  auto one_minus_t =
      laurent_series::from_coeffs(p5, 0, {1, 4, 0, 0, 0, 0});  // 1 - T mod 5
  auto geom = inv(one_minus_t);
  require(geom.kind() == laurent_kind::approx && geom.val() == 0,
          "1/(1-T) has the wrong shape");
  require(geom.coeffs() == std::vector<integer>(6, integer(1)),
          "1/(1-T) must be all ones for six terms");
  require(eq_to_precision(mul(one_minus_t, geom),
                          laurent_series::from_coeffs(p5, 0, {1})),
          "series times its inverse is not 1");

  // X^2 - T: polygon over F_5((T)), one segment of slope -1/2 and length 2,
  // so any root has T-adic valuation 1/2 and the extension is totally
  // ramified with e = 2.
  std::vector<laurent_series> coeffs = {
      laurent_series::from_coeffs(p5, 1, {4}),  // -T
      laurent_series::exact_zero(p5),
      laurent_series::from_coeffs(p5, 0, {1}),
  };
  auto np = polygon_of_laurent(coeffs);
  require(np.segments.size() == 1, "X^2 - T should have a pure polygon");
  require(np.segments[0].slope == rational(-1, 2) &&
              np.segments[0].length == 2,
          "X^2 - T segment should be slope -1/2, length 2");
  rational root_val = -np.segments[0].slope;
  require(root_val == rational(1, 2), "root valuation must be 1/2");
  require(root_val.get_den() == 2 && np.segments[0].length == 2,
          "ramification index must be 2");
}

}  // namespace

int main() {
  criterion(1, "valuations, base-g valuations, 2-adic distance", crit1);
  criterion(2, "digit expansions and complement arithmetic", crit2);
  criterion(3, "factorial valuation: floor sum, digit sum, brute force",
            crit3);
  criterion(4, "lifting-the-exponent grid against direct valuations", crit4);
  criterion(5, "2-adic valuation of harmonic numbers", crit5);
  criterion(6, "irreducibility: X^n - 2, 1 + X + X^2, Eisenstein fuzz",
            crit6);
  criterion(7, "polygon merge law on products", crit7);
  criterion(8, "root valuations of split polynomials", crit8);
  criterion(9, "isoceles triangles and recentering-invariant balls", crit9);
  criterion(10, "simultaneous approximation witnesses", crit10);
  criterion(11, "sum-of-squares verdicts against exhaustive search", crit11);
  criterion(12, "Laurent inverse and a ramified quadratic", crit12);
  if (failures) {
    std::printf("%d of 12 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
