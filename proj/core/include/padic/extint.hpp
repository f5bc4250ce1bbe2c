#ifndef PADIC_EXTINT_HPP
#define PADIC_EXTINT_HPP

#include <string>
#include <utility>

#include "padic/error.hpp"
#include "padic/rational.hpp"

namespace padic {

// Z extended with +infinity, the codomain of every valuation: v(0) = +inf.
// +inf absorbs addition and compares above every finite value. There is no
// -inf; valuations never need one.
class ext_int {
 public:
  ext_int() : finite_(true), v_(0) {}
  ext_int(long v) : finite_(true), v_(v) {}
  ext_int(integer v) : finite_(true), v_(std::move(v)) {}

  static ext_int infinity() {
    ext_int e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }

  const integer& value() const {
    if (!finite_) throw error(errc::out_of_range, "+inf has no finite value");
    return v_;
  }

  friend ext_int operator+(const ext_int& a, const ext_int& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ext_int(a.v_ + b.v_);
  }

  friend bool operator==(const ext_int& a, const ext_int& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const ext_int& a, const ext_int& b) {
    return !(a == b);
  }
  friend bool operator<(const ext_int& a, const ext_int& b) {
    if (!a.finite_) return false;          // +inf < x never
    if (!b.finite_) return true;           // finite < +inf
    return a.v_ < b.v_;
  }
  friend bool operator>(const ext_int& a, const ext_int& b) { return b < a; }
  friend bool operator<=(const ext_int& a, const ext_int& b) {
    return !(b < a);
  }
  friend bool operator>=(const ext_int& a, const ext_int& b) {
    return !(a < b);
  }

  std::string str() const {
    return finite_ ? v_.get_str() : std::string("+inf");
  }

 private:
  bool finite_;
  integer v_;
};

inline ext_int min(const ext_int& a, const ext_int& b) { return a < b ? a : b; }

}  // namespace padic

#endif
