#ifndef PADIC_PADIC_NUMBER_HPP
#define PADIC_PADIC_NUMBER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "padic/extint.hpp"
#include "padic/rational.hpp"

namespace padic {

// A truncated left-infinite digit expansion in base g >= 2:
//
//   value = sum_{i<N} digits[i] * g^(val+i) + O(g^(val+N))
//
// with digits in [0, g) and digits[0] != 0, so val is canonical. Three kinds:
//   exact_zero         the number 0, known exactly;
//   approx             at least one known nonzero digit;
//   zero_to_precision  0 + O(g^k): every digit below g^k cancelled, nothing
//                      is known beyond that. Cancellation never fabricates
//                      digits; subtracting a number from itself lands here.
//
// The absolute precision of a value is the exponent below which its digits
// are known: val+N for approx, k for zero_to_precision, +inf for exact_zero.
// Negative rationals carry no sign field; they are complement expansions
// (in base 10, ...99999999 is -1).
enum class padic_kind { exact_zero, approx, zero_to_precision };

class padic_number {
 public:
  static padic_number exact_zero(integer g);
  static padic_number zero_to_precision(integer g, long k);

  // The unique expansion of x with N known digits starting at the g-adic
  // order of x. Total for every rational: after the g^val factor is pulled
  // out the remaining denominator is always coprime to g (the
  // denominator_not_coprime error is kept as an internal invariant guard
  // and is unreachable through this door).
  static padic_number from_rational(const rational& x, const integer& g,
                                    std::size_t n_digits);

  // Builds from raw parts and canonicalizes (strips leading zero digits,
  // reduces digit values mod g, collapses to zero_to_precision when all
  // digits vanish). Precision is val + digits.size() as given.
  static padic_number from_parts(integer g, long val,
                                 std::vector<integer> digits);

  const integer& base() const { return g_; }
  padic_kind kind() const { return kind_; }
  bool is_zeroish() const { return kind_ != padic_kind::approx; }

  // Approx only; throws error(out_of_range) otherwise.
  long val() const;
  const std::vector<integer>& digits() const;

  // k for zero_to_precision; approx and exact_zero have no k.
  long zero_precision() const;

  // val+N, k, or +inf depending on kind.
  ext_int precision() const;

 private:
  padic_number(integer g, padic_kind kind, long val_or_k,
               std::vector<integer> digits);

  integer g_;
  padic_kind kind_;
  long val_;  // valuation offset for approx, k for zero_to_precision
  std::vector<integer> digits_;

  friend padic_number add(const padic_number&, const padic_number&);
  friend padic_number neg(const padic_number&);
  friend padic_number mul(const padic_number&, const padic_number&);
  friend padic_number inv(const padic_number&);
};

// Ring arithmetic for any base; precision propagates as
//   add/sub: O(g^min(prec_x, prec_y))
//   mul:     O(g^min(val_x + prec_y, val_y + prec_x))
// and results are re-canonicalized (with a composite base a product's low
// digit can vanish: 2*5 in base 10 is O(10^1) at one digit each).
padic_number add(const padic_number& x, const padic_number& y);
padic_number sub(const padic_number& x, const padic_number& y);
padic_number neg(const padic_number& x);
padic_number mul(const padic_number& x, const padic_number& y);

// Field arithmetic, prime base only (throws error(composite_base)
// otherwise): Z_10 has zero divisors. Digit-by-digit linear lifting of
// y * x = 1; inv(x) has val = -val(x) and as many digits as x. Dividing by
// exact zero throws division_by_zero; by a zero_to_precision value,
// insufficient_precision.
padic_number inv(const padic_number& x);
padic_number div(const padic_number& x, const padic_number& y);

// sum_{i<j} digits[i] * g^(val+i) as an exact rational (approx only,
// 0 <= j <= N).
rational partial_sum(const padic_number& x, std::size_t j);

// Exactly `window` digit characters for positions b .. b+window-1 where
// b = min(val, 0), most significant first, prefixed "..." and with a radix
// point between positions 0 and -1 when both are shown. Positions below val
// are true zeros of the expansion; positions at or above the stored
// precision are rendered '0' as plain left-padding. Bases up to 36 use one
// alphanumeric character per digit; larger bases render each digit as [d].
// zero_to_precision renders "0 + O(g^k)", exact zero renders "0".
std::string display(const padic_number& x, std::size_t window);

// True iff x - y vanishes to the smaller of the two precisions.
bool eq_to_precision(const padic_number& x, const padic_number& y);

}  // namespace padic

#endif
