#ifndef PADIC_PLACE_HPP
#define PADIC_PLACE_HPP

#include "padic/rational.hpp"

namespace padic {

// Deterministic below 2^64 (Miller-Rabin over the fixed witness set
// 2,3,5,7,11,13,17,19,23,29,31,37, proven sufficient there). Larger inputs
// fall back to GMP's Baillie-PSW plus 64 Miller-Rabin rounds; no candidate
// anywhere near that size ever shows up in this codebase's workloads, but
// the fallback keeps the constructor total.
bool is_prime(const integer& n);

// A finite place of Q: a prime p, validated at construction.
class place {
 public:
  explicit place(integer p);  // throws error(not_prime) otherwise
  explicit place(long p) : place(integer(p)) {}

  const integer& prime() const { return p_; }

  friend bool operator==(const place& a, const place& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const place& a, const place& b) { return !(a == b); }

 private:
  integer p_;
};

}  // namespace padic

#endif
