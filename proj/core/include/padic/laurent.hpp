#ifndef PADIC_LAURENT_HPP
#define PADIC_LAURENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "padic/extint.hpp"
#include "padic/newton.hpp"
#include "padic/place.hpp"
#include "padic/rational.hpp"

namespace padic {

// Truncated Laurent series over F_p, the equal-characteristic twin of
// padic_number:
//
//   value = sum_{i<N} coeffs[i] * T^(val+i) + O(T^(val+N))
//
// with coefficients reduced mod p and coeffs[0] != 0. Same three kinds and
// the same precision-propagation contract as padic_number; the arithmetic
// differs in having no carries (coefficientwise mod p).
enum class laurent_kind { exact_zero, approx, zero_to_precision };

class laurent_series {
 public:
  static laurent_series exact_zero(place p);
  static laurent_series zero_to_precision(place p, long k);

  // Builds from raw parts: reduces coefficients mod p, strips leading
  // zeros, collapses to zero_to_precision when everything vanishes.
  static laurent_series from_coeffs(place p, long val,
                                    std::vector<integer> coeffs);

  const place& field() const { return p_; }
  laurent_kind kind() const { return kind_; }
  bool is_zeroish() const { return kind_ != laurent_kind::approx; }

  long val() const;                          // approx only
  const std::vector<integer>& coeffs() const;  // approx only
  long zero_precision() const;               // zero_to_precision only
  ext_int precision() const;

 private:
  laurent_series(place p, laurent_kind kind, long val_or_k,
                 std::vector<integer> coeffs);

  place p_;
  laurent_kind kind_;
  long val_;
  std::vector<integer> coeffs_;
};

// T-adic valuation: val for approx, +inf for exact zero. A
// zero_to_precision series only has the lower bound k; val_T reports that
// bound (the series is O(T^k), nothing below T^k exists).
ext_int val_T(const laurent_series& s);

laurent_series add(const laurent_series& s, const laurent_series& t);
laurent_series sub(const laurent_series& s, const laurent_series& t);
laurent_series neg(const laurent_series& s);
laurent_series mul(const laurent_series& s, const laurent_series& t);

// Power-series inversion by linear lifting of the coefficient recurrence;
// mul(s, inv(s)) = 1 to the propagated precision. Same error contract as
// the p-adic inverse except the base is always the prime field (only
// field_mismatch, division_by_zero, insufficient_precision).
laurent_series inv(const laurent_series& s);
laurent_series div(const laurent_series& s, const laurent_series& t);

// Image in the residue field F_p[[T]]/(T) = F_p: the constant coefficient.
// Requires val_T >= 0 (throws not_integral); a zero_to_precision series
// with k <= 0 has an unknown constant term (insufficient_precision).
integer residue(const laurent_series& s);

// "T^v*(c0 + c1*T + ... )" with known coefficients listed and a trailing
// "..." marking the truncation; "0 + O(T^k)" and "0" for the zero kinds.
std::string display(const laurent_series& s);

bool eq_to_precision(const laurent_series& s, const laurent_series& t);

// Newton polygon of a polynomial in X whose coefficients are Laurent
// series, plotted with v = val_T. Every nonzero coefficient must have an
// exactly known valuation: approx is fine, exact zero is skipped, and
// zero_to_precision throws insufficient_precision (its valuation is only
// bounded, not known).
newton_polygon polygon_of_laurent(const std::vector<laurent_series>& coeffs);

}  // namespace padic

#endif
