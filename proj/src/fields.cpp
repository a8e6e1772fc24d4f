#include "hessec/fields.hpp"

#include <algorithm>

namespace hessec {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int s) {
  a %= n;
  if (a == 0) return true;
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

uint64_t splitmix_step(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

bool is_probable_prime(uint64_t n, int rounds) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These 12 bases are a deterministic test for all 64-bit inputs.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!miller_rabin_witness(n, a, d, s)) return false;
  // Additional rounds with bases derived deterministically from n.
  uint64_t state = n ^ 0x5851f42d4c957f2dull;
  for (int i = 12; i < rounds; ++i) {
    uint64_t a = 2 + splitmix_step(state) % (n - 3);
    if (!miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

PrimeField make_prime_field(uint64_t p) {
  if (!is_probable_prime(p))
    fail(Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (p == 2 || p == 3)
    fail(Err::BadCharacteristic, "characteristic 2 and 3 are excluded");
  if (p <= (1ull << 31))
    fail(Err::TooSmall, "p = " + std::to_string(p) + " must exceed 2^31");
  if (p >= (1ull << 63))
    fail(Err::BadInput, "p must fit below 2^63 for word arithmetic");
  return PrimeField::unchecked(p);
}

uint64_t derive_prime(uint64_t seed) {
  uint64_t state = seed ^ 0xa0761d6478bd642full;
  uint64_t candidate = splitmix_step(state);
  candidate = (candidate & ((1ull << 62) - 1)) | (1ull << 61) | 1ull;  // odd, 62-bit
  while (!is_probable_prime(candidate)) candidate += 2;
  return candidate;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) fail(Err::DivisionByZero, "inverse of zero in extension field");
  const PrimeField& F = d_->b;
  const uint32_t k = d_->k;
  if (k == 1) return Elem{F.inv(a[0])};

  // Extended Euclid over F_p[x] on (modulus, a): r0 = mod, r1 = a.
  std::vector<uint64_t> r0 = d_->mod;
  r0.push_back(F.one());  // monic x^k term
  std::vector<uint64_t> r1 = a;
  auto trim = [&](std::vector<uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(r1);
  std::vector<uint64_t> t0(1, 0), t1(1, F.one());  // t_i tracks coefficient of a
  trim(t0);

  while (true) {
    if (r1.empty()) fail(Err::DivisionByZero, "zero divisor in extension inverse");
    if (r1.size() == 1) break;  // nonzero constant gcd
    // r0 = q*r1 + rem
    uint64_t lc_inv = F.inv(r1.back());
    size_t dr1 = r1.size() - 1;
    std::vector<uint64_t> rem = r0;
    std::vector<uint64_t> q(rem.size() > dr1 ? rem.size() - dr1 : 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      if (rem.back() == 0) {
        rem.pop_back();
        continue;
      }
      uint64_t c = F.mul(rem.back(), lc_inv);
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = F.sub(rem[shift + i], F.mul(c, r1[i]));
      trim(rem);
    }
    // t_new = t0 - q * t1
    std::vector<uint64_t> tq(q.size() + (t1.empty() ? 0 : t1.size() - 1) + 1, 0);
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i])
        for (size_t j = 0; j < t1.size(); ++j)
          if (t1[j]) tq[i + j] = F.add(tq[i + j], F.mul(q[i], t1[j]));
    trim(tq);
    std::vector<uint64_t> tn(std::max(t0.size(), tq.size()), 0);
    for (size_t i = 0; i < tn.size(); ++i) {
      uint64_t x = i < t0.size() ? t0[i] : 0;
      uint64_t y = i < tq.size() ? tq[i] : 0;
      tn[i] = F.sub(x, y);
    }
    trim(tn);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }

  uint64_t c_inv = F.inv(r1[0]);
  Elem out(k, 0);
  for (size_t i = 0; i < t1.size() && i < k; ++i) out[i] = F.mul(t1[i], c_inv);
  return out;
}

ExtField wrap_base(const PrimeField& F) { return ExtField(F, {0}); }

std::string canonical_to_string(const std::vector<uint64_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace hessec
