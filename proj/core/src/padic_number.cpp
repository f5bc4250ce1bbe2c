#include "padic/padic_number.hpp"

#include <algorithm>
#include <utility>

#include "padic/error.hpp"
#include "padic/place.hpp"
#include "padic/valuation.hpp"

namespace padic {

namespace {

void check_base(const integer& g) {
  if (g < 2)
    throw error(errc::precondition_violation, "base must be at least 2");
}

void check_same_base(const padic_number& x, const padic_number& y) {
  if (x.base() != y.base())
    throw error(errc::base_mismatch, "operands have bases " +
                                         to_string(x.base()) + " and " +
                                         to_string(y.base()));
}

integer pow_int(const integer& g, long e) {
  integer r;
  mpz_pow_ui(r.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

integer weight(const std::vector<integer>& digits, const integer& g) {
  integer w = 0;
  for (std::size_t i = digits.size(); i-- > 0;) w = w * g + digits[i];
  return w;
}

std::vector<integer> extract_digits(integer w, const integer& g,
                                    std::size_t n) {
  std::vector<integer> digits(n);
  for (std::size_t i = 0; i < n; ++i) {
    digits[i] = w % g;
    w /= g;
  }
  return digits;
}

}  // namespace

padic_number::padic_number(integer g, padic_kind kind, long val_or_k,
                           std::vector<integer> digits)
    : g_(std::move(g)),
      kind_(kind),
      val_(val_or_k),
      digits_(std::move(digits)) {}

padic_number padic_number::exact_zero(integer g) {
  check_base(g);
  return padic_number(std::move(g), padic_kind::exact_zero, 0, {});
}

padic_number padic_number::zero_to_precision(integer g, long k) {
  check_base(g);
  return padic_number(std::move(g), padic_kind::zero_to_precision, k, {});
}

namespace {

// The shared canonicalization door: reduces the weight into [0, g^L) and
// lets from_parts strip leading zeros and collapse all-zero windows. The
// absolute precision start+L is preserved no matter what.
padic_number make_canonical(const integer& g, long start, integer w, long L) {
  if (L <= 0) return padic_number::zero_to_precision(g, start + L);
  integer gl = pow_int(g, L);
  mpz_mod(w.get_mpz_t(), w.get_mpz_t(), gl.get_mpz_t());
  return padic_number::from_parts(
      g, start, extract_digits(std::move(w), g, static_cast<std::size_t>(L)));
}

}  // namespace

padic_number padic_number::from_parts(integer g, long val,
                                      std::vector<integer> digits) {
  check_base(g);
  long n = static_cast<long>(digits.size());
  if (n == 0) return zero_to_precision(std::move(g), val);
  integer w = weight(digits, g);
  integer gn = pow_int(g, n);
  mpz_mod(w.get_mpz_t(), w.get_mpz_t(), gn.get_mpz_t());
  if (w == 0) return zero_to_precision(std::move(g), val + n);
  long shift = 0;
  while (w % g == 0) {
    w /= g;
    ++shift;
  }
  return padic_number(g, padic_kind::approx, val + shift,
                      extract_digits(w, g, static_cast<std::size_t>(n - shift)));
}

padic_number padic_number::from_rational(const rational& x, const integer& g,
                                         std::size_t n_digits) {
  check_base(g);
  if (x == 0) return exact_zero(g);
  long v = vg_order(x, g).value().get_si();
  if (n_digits == 0) return zero_to_precision(g, v);
  rational y = x;
  if (v >= 0)
    y /= rational(pow_int(g, v));
  else
    y *= rational(pow_int(g, -v));
  integer num = y.get_num(), den = y.get_den();
  integer common;
  mpz_gcd(common.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  if (common != 1)
    throw error(errc::denominator_not_coprime,
                "residual denominator " + to_string(den) +
                    " shares a factor with base " + to_string(g));
  integer gn = pow_int(g, static_cast<long>(n_digits));
  integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), gn.get_mpz_t());
  integer w = num * den_inv;
  mpz_mod(w.get_mpz_t(), w.get_mpz_t(), gn.get_mpz_t());
  // w = y mod g^N; its low digit is nonzero because pulling out g^v leaves
  // some prime of g at exponent below its multiplicity in g
  return padic_number(g, padic_kind::approx, v, extract_digits(w, g, n_digits));
}

long padic_number::val() const {
  if (kind_ != padic_kind::approx)
    throw error(errc::out_of_range, "only approx values have a valuation");
  return val_;
}

const std::vector<integer>& padic_number::digits() const {
  if (kind_ != padic_kind::approx)
    throw error(errc::out_of_range, "only approx values carry digits");
  return digits_;
}

long padic_number::zero_precision() const {
  if (kind_ != padic_kind::zero_to_precision)
    throw error(errc::out_of_range,
                "only zero_to_precision values carry a bound");
  return val_;
}

ext_int padic_number::precision() const {
  switch (kind_) {
    case padic_kind::exact_zero:
      return ext_int::infinity();
    case padic_kind::zero_to_precision:
      return ext_int(val_);
    case padic_kind::approx:
      return ext_int(val_ + static_cast<long>(digits_.size()));
  }
  return ext_int(0);  // unreachable
}

namespace {

// A non-exact operand seen as a window of known digits: weight w holds the
// digits upward from g^start, and everything below g^prec is known.
// zero_to_precision(k) is the empty window at start = prec = k.
struct digit_window {
  long start;
  long prec;
  integer w;
};

digit_window window_of(const padic_number& x) {
  if (x.kind() == padic_kind::zero_to_precision)
    return {x.zero_precision(), x.zero_precision(), integer(0)};
  long n = static_cast<long>(x.digits().size());
  return {x.val(), x.val() + n, weight(x.digits(), x.base())};
}

}  // namespace

padic_number add(const padic_number& x, const padic_number& y) {
  check_same_base(x, y);
  if (x.kind_ == padic_kind::exact_zero) return y;
  if (y.kind_ == padic_kind::exact_zero) return x;
  digit_window a = window_of(x), b = window_of(y);
  long prec = std::min(a.prec, b.prec);
  long start = std::min(a.start, b.start);
  integer w = a.w * pow_int(x.base(), a.start - start) +
              b.w * pow_int(x.base(), b.start - start);
  return make_canonical(x.base(), start, std::move(w), prec - start);
}

padic_number neg(const padic_number& x) {
  if (x.kind_ != padic_kind::approx) return x;
  long n = static_cast<long>(x.digits_.size());
  integer w = pow_int(x.g_, n) - weight(x.digits_, x.g_);
  return make_canonical(x.g_, x.val_, std::move(w), n);
}

padic_number sub(const padic_number& x, const padic_number& y) {
  return add(x, neg(y));
}

padic_number mul(const padic_number& x, const padic_number& y) {
  check_same_base(x, y);
  if (x.kind_ == padic_kind::exact_zero || y.kind_ == padic_kind::exact_zero)
    return padic_number::exact_zero(x.base());
  digit_window a = window_of(x), b = window_of(y);
  long prec = std::min(a.start + b.prec, b.start + a.prec);
  long start = a.start + b.start;
  return make_canonical(x.base(), start, a.w * b.w, prec - start);
}

padic_number inv(const padic_number& x) {
  if (!is_prime(x.base()))
    throw error(errc::composite_base,
                "inversion needs a prime base, got " + to_string(x.base()));
  if (x.kind_ == padic_kind::exact_zero)
    throw error(errc::division_by_zero, "cannot invert exact zero");
  if (x.kind_ == padic_kind::zero_to_precision)
    throw error(errc::insufficient_precision,
                "no known nonzero digit to invert");
  const integer& g = x.g_;
  std::size_t n = x.digits_.size();
  integer w = weight(x.digits_, g);
  // linear lifting: y is correct mod g^k; one new digit per round
  integer d0_inv;
  mpz_invert(d0_inv.get_mpz_t(), x.digits_[0].get_mpz_t(), g.get_mpz_t());
  integer y = d0_inv, gk = g;
  for (std::size_t k = 1; k < n; ++k) {
    integer r = (1 - w * y) / gk;  // exact by the invariant
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t());
    integer c = r * d0_inv;
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    y += c * gk;
    gk *= g;
  }
  return make_canonical(g, -x.val_, std::move(y), static_cast<long>(n));
}

padic_number div(const padic_number& x, const padic_number& y) {
  check_same_base(x, y);
  return mul(x, inv(y));
}

rational partial_sum(const padic_number& x, std::size_t j) {
  if (x.kind() != padic_kind::approx)
    throw error(errc::out_of_range, "partial sums need known digits");
  if (j > x.digits().size())
    throw error(errc::out_of_range,
                "asked for " + std::to_string(j) + " digits of " +
                    std::to_string(x.digits().size()));
  integer s = weight({x.digits().begin(), x.digits().begin() + j}, x.base());
  long v = x.val();
  if (v >= 0) return rational(s * pow_int(x.base(), v));
  rational r(s, pow_int(x.base(), -v));
  r.canonicalize();
  return r;
}

namespace {

std::string digit_text(const integer& d, const integer& g) {
  if (g <= 36) {
    long v = d.get_si();
    return std::string(1, v < 10 ? static_cast<char>('0' + v)
                                 : static_cast<char>('a' + v - 10));
  }
  return "[" + to_string(d) + "]";
}

}  // namespace

std::string display(const padic_number& x, std::size_t window) {
  if (x.kind() == padic_kind::exact_zero) return "0";
  if (x.kind() == padic_kind::zero_to_precision)
    return "0 + O(" + to_string(x.base()) + "^" +
           std::to_string(x.zero_precision()) + ")";
  long lo = std::min(x.val(), 0L);
  long hi = lo + static_cast<long>(window);  // one past the top position
  long prec = x.val() + static_cast<long>(x.digits().size());
  std::string out = "...";
  for (long pos = hi - 1; pos >= lo; --pos) {
    if (pos < x.val() || pos >= prec)
      out += digit_text(integer(0), x.base());
    else
      out += digit_text(x.digits()[static_cast<std::size_t>(pos - x.val())],
                        x.base());
    if (pos == 0 && lo < 0) out += '.';
  }
  return out;
}

bool eq_to_precision(const padic_number& x, const padic_number& y) {
  check_same_base(x, y);
  return sub(x, y).kind() != padic_kind::approx;
}

}  // namespace padic
