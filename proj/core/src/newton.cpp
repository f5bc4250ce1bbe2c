#include "padic/newton.hpp"

#include <algorithm>

#include "padic/error.hpp"
#include "padic/factor.hpp"
#include "padic/valuation.hpp"

namespace padic {

namespace {

// twice the signed area of (o, a, b); positive when the walk turns left
rational cross(const valued_point& o, const valued_point& a,
               const valued_point& b) {
  return rational(a.index - o.index) * (b.value - o.value) -
         (a.value - o.value) * rational(b.index - o.index);
}

}  // namespace

newton_polygon build_polygon(const std::vector<valued_point>& points) {
  if (points.empty())
    throw error(errc::empty_input, "no points to build a polygon from");
  std::vector<valued_point> hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  newton_polygon np;
  np.vertices = std::move(hull);
  for (std::size_t i = 1; i < np.vertices.size(); ++i) {
    const auto& a = np.vertices[i - 1];
    const auto& b = np.vertices[i];
    rational slope = (b.value - a.value) / rational(b.index - a.index);
    np.segments.push_back({slope, b.index - a.index});
  }
  return np;
}

poly_q::poly_q(std::vector<rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty())
    throw error(errc::empty_input,
                "the zero polynomial has no degree and no polygon");
}

poly_q mul(const poly_q& a, const poly_q& b) {
  std::vector<rational> out(a.coeffs().size() + b.coeffs().size() - 1,
                            rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] += a[i] * b[j];
  return poly_q(std::move(out));
}

newton_polygon polygon_of(const poly_q& poly, const place& p) {
  if (poly[0] == 0)
    throw error(errc::zero_constant_term,
                "constant term is zero; strip X^k off first");
  std::vector<valued_point> points;
  for (long i = 0; i <= poly.degree(); ++i) {
    const rational& c = poly[static_cast<std::size_t>(i)];
    if (c != 0) points.push_back({i, rational(vp(c, p).value())});
  }
  return build_polygon(points);
}

std::pair<long, poly_q> strip_zero_roots(const poly_q& poly) {
  std::size_t k = 0;
  while (poly[k] == 0) ++k;  // terminates: the leading coefficient is nonzero
  std::vector<rational> rest(poly.coeffs().begin() + k, poly.coeffs().end());
  return {static_cast<long>(k), poly_q(std::move(rest))};
}

purity is_pure(const poly_q& poly, const place& p) {
  auto np = polygon_of(poly, p);
  if (np.segments.size() != 1) return {false, std::nullopt};
  return {true, np.segments[0].slope};
}

std::vector<std::pair<long, rational>> slope_factorization_profile(
    const poly_q& poly, const place& p) {
  std::vector<std::pair<long, rational>> out;
  for (const auto& s : polygon_of(poly, p).segments)
    out.emplace_back(s.length, s.slope);
  return out;
}

std::vector<std::pair<rational, long>> root_valuations(const poly_q& poly,
                                                       const place& p) {
  std::vector<std::pair<rational, long>> out;
  for (const auto& s : polygon_of(poly, p).segments)
    out.emplace_back(-s.slope, s.length);
  std::sort(out.begin(), out.end());
  return out;
}

dumas_verdict dumas_irreducible(const poly_q& poly, const place& p) {
  auto np = polygon_of(poly, p);
  if (np.segments.size() != 1) return dumas_verdict::inconclusive;
  const rational& slope = np.segments[0].slope;
  if (slope.get_den() == poly.degree()) return dumas_verdict::irreducible;
  return dumas_verdict::inconclusive;
}

eisenstein_result eisenstein_check(const std::vector<integer>& coeffs,
                                   const place& p) {
  if (coeffs.size() < 2)
    throw error(errc::precondition_violation,
                "need a polynomial of degree at least 1");
  if (coeffs.back() == 0)
    throw error(errc::precondition_violation,
                "leading coefficient must be nonzero");
  const integer& q = p.prime();
  bool passes = coeffs.back() % q != 0 && coeffs[0] % (q * q) != 0;
  for (std::size_t i = 0; i + 1 < coeffs.size() && passes; ++i)
    if (coeffs[i] % q != 0) passes = false;
  integer content = 0;
  for (const auto& c : coeffs)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  return {passes, content == 1};
}

std::optional<place> find_eisenstein_prime(const std::vector<integer>& coeffs,
                                           const integer& bound) {
  if (coeffs.empty() || coeffs[0] == 0)
    return std::nullopt;  // p | a_0 and p^2 does not divide 0
  for (const auto& [q, e] : factorize(abs(coeffs[0]))) {
    if (q > bound) break;
    place p(q);
    if (eisenstein_check(coeffs, p).passes) return p;
  }
  return std::nullopt;
}

extension_data eisenstein_extension_data(const poly_q& poly, const place& p) {
  if (poly.degree() < 1)
    throw error(errc::not_eisenstein, "degree must be at least 1");
  std::vector<integer> coeffs;
  for (const auto& c : poly.coeffs()) {
    if (c.get_den() != 1)
      throw error(errc::not_eisenstein, "coefficients must be integers");
    coeffs.push_back(c.get_num());
  }
  if (coeffs.back() != 1)
    throw error(errc::not_eisenstein, "polynomial must be monic");
  if (!eisenstein_check(coeffs, p).passes)
    throw error(errc::not_eisenstein,
                "divisibility conditions fail at p = " + to_string(p.prime()));
  long d = poly.degree();
  rational v(integer(1), integer(d));
  return {d, v};
}

}  // namespace padic
