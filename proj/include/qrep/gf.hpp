// Arithmetic in the prime field GF(p) for small p.
//
// Elements are stored reduced, as uint8_t in [0, p).  The Field object carries
// p together with a precomputed inverse table; it is cheap to copy and compare.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qrep {

using fel = std::uint8_t; // one reduced field element

class Field {
public:
  explicit Field(unsigned p) : p_(p) {
    if (p < 2 || p > 251 || !is_prime(p))
      throw std::invalid_argument("field characteristic must be a prime <= 251");
    inv_.assign(p, 0);
    for (unsigned a = 1; a < p; ++a) {
      for (unsigned b = 1; b < p; ++b) {
        if (a * b % p == 1) {
          inv_[a] = static_cast<fel>(b);
          break;
        }
      }
    }
  }

  unsigned p() const { return p_; }

  fel add(fel a, fel b) const {
    unsigned s = unsigned(a) + b;
    return static_cast<fel>(s >= p_ ? s - p_ : s);
  }
  fel sub(fel a, fel b) const {
    return static_cast<fel>(a >= b ? a - b : a + p_ - b);
  }
  fel mul(fel a, fel b) const { return static_cast<fel>(unsigned(a) * b % p_); }
  fel neg(fel a) const { return a == 0 ? 0 : static_cast<fel>(p_ - a); }
  fel inv(fel a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
  }
  // Reduce an arbitrary signed integer into [0, p).
  fel reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<fel>(r);
  }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
  static bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  unsigned p_;
  std::vector<fel> inv_;
};

} // namespace qrep
