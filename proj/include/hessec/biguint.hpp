#pragma once

#include <cstdint>
#include <vector>

namespace hessec {

// Minimal little-endian multiword unsigned integer.  Only what exponentiation
// by |F_{p^k}| - style exponents needs: build p^k, subtract small, halve, and
// iterate bits.  Not a general bignum.
struct BigUint {
  std::vector<uint64_t> w;  // little-endian, no trailing zero words

  static BigUint from_u64(uint64_t v) {
    BigUint b;
    if (v) b.w.push_back(v);
    return b;
  }

  // base^exp for word-sized base.
  static BigUint pow_u64(uint64_t base, uint32_t exp) {
    BigUint r = from_u64(1);
    for (uint32_t i = 0; i < exp; ++i) r.mul_u64(base);
    return r;
  }

  bool is_zero() const { return w.empty(); }

  void trim() {
    while (!w.empty() && w.back() == 0) w.pop_back();
  }

  void mul_u64(uint64_t m) {
    unsigned __int128 carry = 0;
    for (auto& word : w) {
      unsigned __int128 t = (unsigned __int128)word * m + carry;
      word = (uint64_t)t;
      carry = t >> 64;
    }
    if (carry) w.push_back((uint64_t)carry);
    trim();
  }

  // Requires *this >= v.
  void sub_u64(uint64_t v) {
    uint64_t borrow = v;
    for (size_t i = 0; i < w.size() && borrow; ++i) {
      uint64_t before = w[i];
      w[i] -= borrow;
      borrow = before < borrow ? 1 : 0;
    }
    trim();
  }

  void shr1() {
    for (size_t i = 0; i < w.size(); ++i) {
      uint64_t hi = (i + 1 < w.size()) ? (w[i + 1] & 1) : 0;
      w[i] = (w[i] >> 1) | (hi << 63);
    }
    trim();
  }

  size_t bits() const {
    if (w.empty()) return 0;
    return 64 * w.size() - __builtin_clzll(w.back());
  }

  bool bit(size_t i) const {
    size_t word = i / 64;
    if (word >= w.size()) return false;
    return (w[word] >> (i % 64)) & 1;
  }
};

}  // namespace hessec
