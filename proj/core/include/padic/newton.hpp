#ifndef PADIC_NEWTON_HPP
#define PADIC_NEWTON_HPP

#include <optional>
#include <utility>
#include <vector>

#include "padic/place.hpp"
#include "padic/rational.hpp"

namespace padic {

// One plotted point (i, v(a_i)). Zero coefficients (v = +inf) are simply
// not plotted, so the value here is always finite.
struct valued_point {
  long index;
  rational value;
};

struct polygon_segment {
  rational slope;
  long length;  // horizontal extent, >= 1
};

// Lower boundary of the convex hull of a set of valued points: vertices in
// index order, and one segment per consecutive vertex pair. Slopes increase
// strictly left to right; collinear interior points are absorbed, never
// vertices. The segment lengths of a polynomial's polygon sum to its degree.
struct newton_polygon {
  std::vector<valued_point> vertices;
  std::vector<polygon_segment> segments;
};

// Monotone-chain lower hull. Input indices must be strictly increasing;
// throws error(empty_input) on an empty set. A single point yields a
// polygon with one vertex and no segments.
newton_polygon build_polygon(const std::vector<valued_point>& points);

// Polynomial over Q, coefficients ascending (index = degree). The zero
// polynomial is rejected; trailing zero coefficients are trimmed so the
// leading coefficient is never 0.
class poly_q {
 public:
  explicit poly_q(std::vector<rational> coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<rational>& coeffs() const { return coeffs_; }
  const rational& operator[](std::size_t i) const { return coeffs_[i]; }

 private:
  std::vector<rational> coeffs_;
};

// Exact convolution product; plumbing for building test corpora and for
// checking the merge law on polygon segments.
poly_q mul(const poly_q& a, const poly_q& b);

// The polygon of P at p: plot (i, vp(a_i)) for each nonzero coefficient and
// take the lower hull. Requires a_0 != 0; a zero constant term means X
// divides P, and the caller must strip it explicitly first (never silently):
// strip_zero_roots returns (k, P / X^k).
newton_polygon polygon_of(const poly_q& poly, const place& p);
std::pair<long, poly_q> strip_zero_roots(const poly_q& poly);

struct purity {
  bool pure;  // exactly one segment
  std::optional<rational> slope;
};
purity is_pure(const poly_q& poly, const place& p);

// One entry per segment: (degree of the corresponding local factor, its
// slope). The factors themselves are not computed; this is the degree and
// slope ledger of the slope factorization.
std::vector<std::pair<long, rational>> slope_factorization_profile(
    const poly_q& poly, const place& p);

// Valuations of the roots of P in an algebraic closure of Q_p, counted with
// multiplicity, normalized so v(p) = +1: each segment of slope m and length
// l contributes the valuation -m with multiplicity l. Sorted ascending.
std::vector<std::pair<rational, long>> root_valuations(const poly_q& poly,
                                                       const place& p);

// Irreducibility over Q_p[X] when the polygon is pure with slope h/n in
// lowest terms and denominator exactly n = deg P. The converse is false
// (1 + X + X^2 is irreducible yet pure of slope 0 at every p), so the other
// verdict is inconclusive, never "reducible".
enum class dumas_verdict { irreducible, inconclusive };
dumas_verdict dumas_irreducible(const poly_q& poly, const place& p);

// The three Eisenstein divisibility conditions on integer coefficients:
// p | a_i for all i < n, p does not divide a_n, p^2 does not divide a_0.
// passes gives irreducibility over Q[X]; over Z[X] one additionally needs
// the coefficients collectively coprime, reported as `primitive`.
struct eisenstein_result {
  bool passes;
  bool primitive;
};
eisenstein_result eisenstein_check(const std::vector<integer>& coeffs,
                                   const place& p);

// Smallest prime p <= bound for which eisenstein_check passes.
std::optional<place> find_eisenstein_prime(const std::vector<integer>& coeffs,
                                           const integer& bound);

// For a monic integer Eisenstein polynomial of degree d, the extension
// Q_p[X]/(P) is totally ramified of degree d and any root is a uniformizer:
// e = d and the root valuation is 1/d. Throws error(not_eisenstein) if the
// input is not monic integer Eisenstein at p.
struct extension_data {
  long e;
  rational uniformizer_valuation;
};
extension_data eisenstein_extension_data(const poly_q& poly, const place& p);

}  // namespace padic

#endif
