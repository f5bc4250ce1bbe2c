#include "doctest.h"

#include <random>
#include <vector>

#include "padic/laurent.hpp"

using namespace padic;

namespace {

std::vector<integer> cv(std::initializer_list<long> v) {
  return std::vector<integer>(v.begin(), v.end());
}

laurent_series series(long p, long val, std::initializer_list<long> coeffs) {
  return laurent_series::from_coeffs(place(p), val, cv(coeffs));
}

laurent_series random_series(std::mt19937_64& rng, long p, long maxn) {
  std::uniform_int_distribution<long> val(-4, 4);
  std::uniform_int_distribution<long> coeff(0, p - 1);
  std::uniform_int_distribution<long> len(1, maxn);
  std::vector<integer> cs;
  long n = len(rng);
  cs.push_back(1 + coeff(rng) % (p - 1));  // leading coefficient nonzero
  for (long i = 1; i < n; ++i) cs.push_back(coeff(rng));
  return laurent_series::from_coeffs(place(p), val(rng), std::move(cs));
}

}  // namespace

TEST_CASE("val_T") {
  CHECK(val_T(series(3, 3, {1, 1})) == ext_int(3));
  CHECK(val_T(laurent_series::exact_zero(place(3))) == ext_int::infinity());
  CHECK(val_T(series(3, -2, {1, 0, 1})) == ext_int(-2));
  CHECK(val_T(laurent_series::zero_to_precision(place(3), 4)) == ext_int(4));
}

TEST_CASE("from_coeffs canonicalizes") {
  auto s = laurent_series::from_coeffs(place(5), 0, cv({0, 0, 3, 1}));
  CHECK(s.val() == 2);
  CHECK(s.coeffs() == cv({3, 1}));
  CHECK(s.precision() == ext_int(4));
  // coefficients reduce mod p, including negatives
  auto t = laurent_series::from_coeffs(place(5), 1, cv({7, -1}));
  CHECK(t.val() == 1);
  CHECK(t.coeffs() == cv({2, 4}));
  auto z = laurent_series::from_coeffs(place(5), 2, cv({0, 5, 10}));
  CHECK(z.kind() == laurent_kind::zero_to_precision);
  CHECK(z.zero_precision() == 5);
}

TEST_CASE("geometric series inverse over F_5") {
  // 1 - T known to six coefficients
  auto one_minus_t = series(5, 0, {1, 4, 0, 0, 0, 0});
  auto g = inv(one_minus_t);
  REQUIRE(g.kind() == laurent_kind::approx);
  CHECK(g.val() == 0);
  CHECK(g.coeffs() == cv({1, 1, 1, 1, 1, 1}));
  CHECK(residue(g) == 1);
  auto prod = mul(one_minus_t, g);
  CHECK(eq_to_precision(prod, series(5, 0, {1})));
}

TEST_CASE("inverse over F_3 by direct recurrence") {
  // (2 + T) * (2 + 2T + 2T^2) = 4 + 6T + 6T^2 + 2T^3 = 1 mod (3, T^3)
  auto s = series(3, 0, {2, 1, 0});
  auto si = inv(s);
  CHECK(si.coeffs() == cv({2, 2, 2}));
  auto check = mul(s, si);
  REQUIRE(check.kind() == laurent_kind::approx);
  CHECK(check.val() == 0);
  CHECK(check.coeffs() == cv({1, 0, 0}));
}

TEST_CASE("monomials cancel exactly") {
  auto a = series(7, 2, {1});
  auto b = series(7, -2, {1});
  auto prod = mul(a, b);
  REQUIRE(prod.kind() == laurent_kind::approx);
  CHECK(prod.val() == 0);
  CHECK(prod.coeffs() == cv({1}));
}

TEST_CASE("arithmetic respects precision propagation") {
  auto s = series(3, 0, {1, 2});      // precision T^2
  auto t = series(3, 1, {1, 1, 1});   // precision T^4
  auto sum = add(s, t);
  REQUIRE(sum.kind() == laurent_kind::approx);
  CHECK(sum.val() == 0);
  CHECK(sum.coeffs() == cv({1, 0}));  // 2 + 1 = 0 mod 3
  CHECK(sum.precision() == ext_int(2));
  auto prod = mul(s, t);
  CHECK(prod.val() == 1);
  // min(val_s + prec_t, val_t + prec_s) = min(0+4, 1+2) = 3
  CHECK(prod.precision() == ext_int(3));

  auto cancelled = sub(s, s);
  CHECK(cancelled.kind() == laurent_kind::zero_to_precision);
  CHECK(cancelled.zero_precision() == 2);
}

TEST_CASE("division errors") {
  auto s = series(3, 0, {1, 2});
  CHECK_THROWS_AS(div(s, laurent_series::exact_zero(place(3))), error);
  CHECK_THROWS_AS(div(s, laurent_series::zero_to_precision(place(3), 2)),
                  error);
  CHECK_THROWS_AS(add(s, series(5, 0, {1})), error);
  try {
    add(s, series(5, 0, {1}));
  } catch (const error& e) {
    CHECK(e.code() == errc::field_mismatch);
  }
}

TEST_CASE("residue") {
  CHECK(residue(series(3, 0, {2, 1})) == 2);
  CHECK(residue(series(3, 2, {1, 1})) == 0);  // strictly positive valuation
  CHECK(residue(laurent_series::exact_zero(place(3))) == 0);
  CHECK(residue(laurent_series::zero_to_precision(place(3), 1)) == 0);
  CHECK_THROWS_AS(residue(series(3, -1, {1})), error);
  CHECK_THROWS_AS(residue(laurent_series::zero_to_precision(place(3), 0)),
                  error);
  try {
    residue(series(3, -1, {1}));
  } catch (const error& e) {
    CHECK(e.code() == errc::not_integral);
  }
}

TEST_CASE("residue is a ring homomorphism onto F_p") {
  std::mt19937_64 rng(41);
  for (long p : {3, 5, 7}) {
    for (int i = 0; i < 60; ++i) {
      auto s = random_series(rng, p, 6);
      auto t = random_series(rng, p, 6);
      if (s.val() < 0 || t.val() < 0) continue;
      CHECK(residue(add(s, t)) == (residue(s) + residue(t)) % p);
      CHECK(residue(mul(s, t)) == (residue(s) * residue(t)) % p);
    }
  }
}

TEST_CASE("valuation is additive and ultrametric on random series") {
  std::mt19937_64 rng(42);
  for (long p : {2, 5}) {
    for (int i = 0; i < 80; ++i) {
      auto s = random_series(rng, p, 5);
      auto t = random_series(rng, p, 5);
      CHECK(val_T(mul(s, t)) == val_T(s) + val_T(t));
      auto sum = add(s, t);
      CHECK(val_T(sum) >= min(val_T(s), val_T(t)));
      if (val_T(s) != val_T(t)) CHECK(val_T(sum) == min(val_T(s), val_T(t)));
    }
  }
}

TEST_CASE("field law to precision") {
  std::mt19937_64 rng(43);
  for (long p : {2, 3, 13}) {
    for (int i = 0; i < 60; ++i) {
      auto s = random_series(rng, p, 7);
      auto prod = mul(s, inv(s));
      CHECK(eq_to_precision(prod, series(p, 0, {1})));
    }
  }
}

TEST_CASE("display") {
  CHECK(display(series(5, 0, {1, 1, 1})) == "T^0*(1 + 1*T + 1*T^2 + ...)");
  CHECK(display(series(3, -2, {1, 0, 2})) == "T^-2*(1 + 0*T + 2*T^2 + ...)");
  CHECK(display(laurent_series::exact_zero(place(3))) == "0");
  CHECK(display(laurent_series::zero_to_precision(place(3), 4)) ==
        "0 + O(T^4)");
}

TEST_CASE("polygon over the Laurent field") {
  // X^2 - T: coefficients (-T, 0, 1), points (0,1) and (2,0)
  std::vector<laurent_series> xx_minus_t{
      series(3, 1, {2}), laurent_series::exact_zero(place(3)),
      series(3, 0, {1})};
  auto np = polygon_of_laurent(xx_minus_t);
  REQUIRE(np.segments.size() == 1);
  CHECK(np.segments[0].slope == rational(-1, 2));
  CHECK(np.segments[0].length == 2);

  // X^2 - T^2: double root valuation 1
  std::vector<laurent_series> xx_minus_t2{
      series(3, 2, {2}), laurent_series::exact_zero(place(3)),
      series(3, 0, {1})};
  auto np2 = polygon_of_laurent(xx_minus_t2);
  REQUIRE(np2.segments.size() == 1);
  CHECK(np2.segments[0].slope == rational(-1));
  CHECK(np2.segments[0].length == 2);

  // 1 + X
  std::vector<laurent_series> one_plus_x{series(3, 0, {1}),
                                         series(3, 0, {1})};
  auto np3 = polygon_of_laurent(one_plus_x);
  REQUIRE(np3.segments.size() == 1);
  CHECK(np3.segments[0].slope == rational(0));

  // a coefficient with only a precision bound has no usable valuation
  std::vector<laurent_series> vague{
      laurent_series::zero_to_precision(place(3), 2), series(3, 0, {1})};
  CHECK_THROWS_AS(polygon_of_laurent(vague), error);
}

TEST_CASE("uniformizer extraction: X^d - T*u is totally ramified") {
  std::mt19937_64 rng(44);
  for (long p : {2, 3, 5}) {
    for (long d = 2; d <= 6; ++d) {
      std::uniform_int_distribution<long> u(1, p - 1);
      std::vector<laurent_series> cs;
      cs.push_back(series(p, 1, {u(rng)}));  // constant term T * unit
      for (long i = 1; i < d; ++i)
        cs.push_back(laurent_series::exact_zero(place(p)));
      cs.push_back(series(p, 0, {1}));
      auto np = polygon_of_laurent(cs);
      REQUIRE(np.segments.size() == 1);
      rational root_val = -np.segments[0].slope;
      CHECK(root_val == rational(1, d));
      CHECK(root_val.get_den() == d);  // ramification index d
    }
  }
}
