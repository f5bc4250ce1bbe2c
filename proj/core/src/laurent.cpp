#include "padic/laurent.hpp"

#include <algorithm>
#include <utility>

#include "padic/error.hpp"

namespace padic {

namespace {

void check_same_field(const laurent_series& s, const laurent_series& t) {
  if (s.field() != t.field())
    throw error(errc::field_mismatch,
                "operands live over F_" + to_string(s.field().prime()) +
                    " and F_" + to_string(t.field().prime()));
}

integer reduce(const integer& c, const integer& p) {
  integer r;
  mpz_mod(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace

laurent_series::laurent_series(place p, laurent_kind kind, long val_or_k,
                               std::vector<integer> coeffs)
    : p_(std::move(p)),
      kind_(kind),
      val_(val_or_k),
      coeffs_(std::move(coeffs)) {}

laurent_series laurent_series::exact_zero(place p) {
  return laurent_series(std::move(p), laurent_kind::exact_zero, 0, {});
}

laurent_series laurent_series::zero_to_precision(place p, long k) {
  return laurent_series(std::move(p), laurent_kind::zero_to_precision, k, {});
}

laurent_series laurent_series::from_coeffs(place p, long val,
                                           std::vector<integer> coeffs) {
  const integer& q = p.prime();
  for (auto& c : coeffs) c = reduce(c, q);
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead == coeffs.size())
    return zero_to_precision(std::move(p),
                             val + static_cast<long>(coeffs.size()));
  coeffs.erase(coeffs.begin(), coeffs.begin() + lead);
  return laurent_series(std::move(p), laurent_kind::approx,
                        val + static_cast<long>(lead), std::move(coeffs));
}

long laurent_series::val() const {
  if (kind_ != laurent_kind::approx)
    throw error(errc::out_of_range, "only approx series have a valuation");
  return val_;
}

const std::vector<integer>& laurent_series::coeffs() const {
  if (kind_ != laurent_kind::approx)
    throw error(errc::out_of_range, "only approx series carry coefficients");
  return coeffs_;
}

long laurent_series::zero_precision() const {
  if (kind_ != laurent_kind::zero_to_precision)
    throw error(errc::out_of_range,
                "only zero_to_precision series carry a bound");
  return val_;
}

ext_int laurent_series::precision() const {
  switch (kind_) {
    case laurent_kind::exact_zero:
      return ext_int::infinity();
    case laurent_kind::zero_to_precision:
      return ext_int(val_);
    case laurent_kind::approx:
      return ext_int(val_ + static_cast<long>(coeffs_.size()));
  }
  return ext_int(0);  // unreachable
}

ext_int val_T(const laurent_series& s) {
  switch (s.kind()) {
    case laurent_kind::exact_zero:
      return ext_int::infinity();
    case laurent_kind::zero_to_precision:
      return ext_int(s.zero_precision());
    case laurent_kind::approx:
      return ext_int(s.val());
  }
  return ext_int(0);  // unreachable
}

namespace {

struct coeff_window {
  long start;
  long prec;
  const std::vector<integer>* coeffs;  // null for an empty window
};

coeff_window window_of(const laurent_series& s) {
  if (s.kind() == laurent_kind::zero_to_precision)
    return {s.zero_precision(), s.zero_precision(), nullptr};
  long n = static_cast<long>(s.coeffs().size());
  return {s.val(), s.val() + n, &s.coeffs()};
}

integer coeff_at(const coeff_window& w, long pos) {
  if (!w.coeffs || pos < w.start || pos >= w.prec) return 0;
  return (*w.coeffs)[static_cast<std::size_t>(pos - w.start)];
}

}  // namespace

laurent_series add(const laurent_series& s, const laurent_series& t) {
  check_same_field(s, t);
  if (s.kind() == laurent_kind::exact_zero) return t;
  if (t.kind() == laurent_kind::exact_zero) return s;
  coeff_window a = window_of(s), b = window_of(t);
  long prec = std::min(a.prec, b.prec);
  long start = std::min(a.start, b.start);
  std::vector<integer> out;
  for (long pos = start; pos < prec; ++pos)
    out.push_back(coeff_at(a, pos) + coeff_at(b, pos));
  return laurent_series::from_coeffs(s.field(), start, std::move(out));
}

laurent_series neg(const laurent_series& s) {
  if (s.kind() != laurent_kind::approx) return s;
  std::vector<integer> out;
  for (const auto& c : s.coeffs()) out.push_back(-c);
  return laurent_series::from_coeffs(s.field(), s.val(), std::move(out));
}

laurent_series sub(const laurent_series& s, const laurent_series& t) {
  return add(s, neg(t));
}

laurent_series mul(const laurent_series& s, const laurent_series& t) {
  check_same_field(s, t);
  if (s.kind() == laurent_kind::exact_zero ||
      t.kind() == laurent_kind::exact_zero)
    return laurent_series::exact_zero(s.field());
  coeff_window a = window_of(s), b = window_of(t);
  long prec = std::min(a.start + b.prec, b.start + a.prec);
  long start = a.start + b.start;
  long len = prec - start;
  if (len <= 0) return laurent_series::zero_to_precision(s.field(), prec);
  std::vector<integer> out(static_cast<std::size_t>(len), integer(0));
  long na = a.prec - a.start, nb = b.prec - b.start;
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb && i + j < len; ++j)
      out[static_cast<std::size_t>(i + j)] +=
          (*a.coeffs)[static_cast<std::size_t>(i)] *
          (*b.coeffs)[static_cast<std::size_t>(j)];
  return laurent_series::from_coeffs(s.field(), start, std::move(out));
}

laurent_series inv(const laurent_series& s) {
  if (s.kind() == laurent_kind::exact_zero)
    throw error(errc::division_by_zero, "cannot invert exact zero");
  if (s.kind() == laurent_kind::zero_to_precision)
    throw error(errc::insufficient_precision,
                "no known nonzero coefficient to invert");
  const integer& p = s.field().prime();
  const auto& c = s.coeffs();
  std::size_t n = c.size();
  integer c0_inv;
  mpz_invert(c0_inv.get_mpz_t(), c[0].get_mpz_t(), p.get_mpz_t());
  // b_k = -c0^{-1} * sum_{j=1..k} c_j b_{k-j}, the convolution recurrence
  std::vector<integer> b(n);
  b[0] = c0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    integer acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += c[j] * b[k - j];
    b[k] = reduce(-acc * c0_inv, p);
  }
  return laurent_series::from_coeffs(s.field(), -s.val(), std::move(b));
}

laurent_series div(const laurent_series& s, const laurent_series& t) {
  check_same_field(s, t);
  return mul(s, inv(t));
}

integer residue(const laurent_series& s) {
  switch (s.kind()) {
    case laurent_kind::exact_zero:
      return 0;
    case laurent_kind::zero_to_precision:
      if (s.zero_precision() <= 0)
        throw error(errc::insufficient_precision,
                    "constant term hidden below the precision bound");
      return 0;
    case laurent_kind::approx:
      break;
  }
  if (s.val() < 0)
    throw error(errc::not_integral,
                "series has a pole: val = " + std::to_string(s.val()));
  if (s.val() > 0) return 0;
  return s.coeffs()[0];
}

std::string display(const laurent_series& s) {
  if (s.kind() == laurent_kind::exact_zero) return "0";
  if (s.kind() == laurent_kind::zero_to_precision)
    return "0 + O(T^" + std::to_string(s.zero_precision()) + ")";
  std::string out = "T^" + std::to_string(s.val()) + "*(";
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    out += to_string(s.coeffs()[i]);
    if (i == 1) out += "*T";
    if (i >= 2) out += "*T^" + std::to_string(i);
    out += " + ";
  }
  return out + "...)";
}

bool eq_to_precision(const laurent_series& s, const laurent_series& t) {
  check_same_field(s, t);
  return sub(s, t).kind() != laurent_kind::approx;
}

newton_polygon polygon_of_laurent(const std::vector<laurent_series>& coeffs) {
  if (coeffs.empty())
    throw error(errc::empty_input, "no coefficients given");
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    check_same_field(coeffs[0], coeffs[i]);
  if (coeffs[0].kind() == laurent_kind::exact_zero)
    throw error(errc::zero_constant_term,
                "constant term is zero; strip X^k off first");
  std::vector<valued_point> points;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    switch (coeffs[i].kind()) {
      case laurent_kind::exact_zero:
        break;
      case laurent_kind::zero_to_precision:
        throw error(errc::insufficient_precision,
                    "coefficient " + std::to_string(i) +
                        " has only a bound, not a valuation");
      case laurent_kind::approx:
        points.push_back(
            {static_cast<long>(i), rational(integer(coeffs[i].val()))});
        break;
    }
  }
  return build_polygon(points);
}

}  // namespace padic
