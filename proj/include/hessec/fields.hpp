#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hessec/biguint.hpp"
#include "hessec/errors.hpp"
#include "hessec/rng.hpp"

namespace hessec {

// ---------------------------------------------------------------------------
// Prime field F_p for an odd machine-word prime.  Elements are stored in
// Montgomery form (x * 2^64 mod p) so the hot loops never divide; conversion
// happens only at the I/O boundary (from_u64 / to_u64).  Valid for p < 2^63.
// ---------------------------------------------------------------------------
struct PrimeField {
  using Elem = uint64_t;  // Montgomery representation

  uint64_t p = 0;
  uint64_t ninv = 0;   // -p^{-1} mod 2^64
  uint64_t r2 = 0;     // 2^128 mod p
  uint64_t one_m = 0;  // 2^64 mod p (Montgomery image of 1)

  // Builds the context without the public-policy checks; used internally and
  // by the small-field test mode (brute-force oracles over p < 100).
  static PrimeField unchecked(uint64_t prime) {
    PrimeField f;
    f.p = prime;
    uint64_t x = prime;  // Newton iteration for p^{-1} mod 2^64 (p odd)
    for (int i = 0; i < 6; ++i) x *= 2 - prime * x;
    f.ninv = ~x + 1;
    f.one_m = (~uint64_t(0) % prime) + 1;
    if (f.one_m == prime) f.one_m = 0;
    f.r2 = (uint64_t)((unsigned __int128)f.one_m * f.one_m % prime);
    return f;
  }

  Elem redc(unsigned __int128 t) const {
    uint64_t m = (uint64_t)t * ninv;
    uint64_t r = (uint64_t)((t + (unsigned __int128)m * p) >> 64);
    return r >= p ? r - p : r;
  }

  Elem zero() const { return 0; }
  Elem one() const { return one_m; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    uint64_t r = a + b;  // p < 2^63 so no wraparound
    return r >= p ? r - p : r;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a ? p - a : 0; }
  Elem mul(Elem a, Elem b) const { return redc((unsigned __int128)a * b); }

  Elem from_u64(uint64_t v) const { return mul(v % p, r2); }
  Elem from_i64(int64_t v) const {
    int64_t m = v % (int64_t)p;
    if (m < 0) m += (int64_t)p;
    return from_u64((uint64_t)m);
  }
  uint64_t to_u64(Elem a) const { return redc(a); }

  Elem pow_u64(Elem a, uint64_t e) const {
    Elem r = one();
    Elem b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Elem inv(Elem a) const {
    if (a == 0) fail(Err::DivisionByZero, "inverse of zero in prime field");
    return pow_u64(a, p - 2);
  }

  Elem frobenius(Elem a) const { return a; }  // x -> x^p is the identity on F_p

  // Identity embedding of the prime field into itself; mirrors ExtField so
  // generic code can lift prime-field coefficients into either context.
  Elem embed_base(Elem a) const { return a; }

  uint64_t characteristic() const { return p; }
  uint32_t degree() const { return 1; }

  bool same(const PrimeField& o) const { return p == o.p; }

  Elem rand_elem(Rng& rng) const { return from_u64(rng.below(p)); }
  Elem rand_nonzero(Rng& rng) const { return from_u64(1 + rng.below(p - 1)); }

  // Canonical residue vector; shared shape with ExtField for generic code.
  std::vector<uint64_t> canonical(Elem a) const { return {to_u64(a)}; }
};

// Deterministic Miller-Rabin: the 12 bases that decide 64-bit inputs plus
// extra pseudo-random rounds derived from the candidate (>= 40 total).
bool is_probable_prime(uint64_t n, int rounds = 40);

// Public constructor enforcing the field policy: p prime, p not in {2,3},
// p > 2^31, p < 2^63.
PrimeField make_prime_field(uint64_t p);

// First prime >= a 62-bit odd candidate derived deterministically from seed.
uint64_t derive_prime(uint64_t seed);

// ---------------------------------------------------------------------------
// Extension field F_{p^k} = F_p[alpha] with a monic irreducible modulus of
// degree k.  Elements are dense coefficient vectors (Montgomery coefficients,
// ascending powers of alpha, fixed length k).  There are never towers: every
// algebraic quantity lives in one explicit F_{p^k} over the prime field.
// ---------------------------------------------------------------------------
class ExtField {
 public:
  using Elem = std::vector<uint64_t>;

  ExtField() = default;

  // modulus_low: coefficients c_0..c_{k-1} (Montgomery form) of the monic
  // modulus x^k + c_{k-1} x^{k-1} + ... + c_0.  Irreducibility is the
  // caller's responsibility (make_extension / factor fields guarantee it).
  ExtField(const PrimeField& base, std::vector<uint64_t> modulus_low) {
    auto d = std::make_shared<Data>();
    d->b = base;
    d->mod = std::move(modulus_low);
    d->k = (uint32_t)d->mod.size();
    if (d->k == 0) fail(Err::BadInput, "extension modulus must have degree >= 1");
    d_ = std::move(d);
    if (degree() > 1) {
      auto frob = pow_u64(gen(), base.p);
      const_cast<Data*>(d_.get())->frob_gen = frob;
    }
  }

  const PrimeField& base() const { return d_->b; }
  uint32_t degree() const { return d_->k; }
  uint64_t characteristic() const { return d_->b.p; }
  const std::vector<uint64_t>& modulus_low() const { return d_->mod; }

  bool same(const ExtField& o) const {
    if (d_ == o.d_) return true;
    return d_->b.same(o.d_->b) && d_->mod == o.d_->mod;
  }

  Elem zero() const { return Elem(d_->k, 0); }
  Elem one() const {
    Elem e(d_->k, 0);
    e[0] = d_->b.one();
    return e;
  }
  // alpha itself (the class of x); equals -c_0 when k == 1.
  Elem gen() const {
    if (d_->k == 1) return Elem{d_->b.neg(d_->mod[0])};
    Elem e(d_->k, 0);
    e[1] = d_->b.one();
    return e;
  }

  bool is_zero(const Elem& a) const {
    for (auto c : a)
      if (c) return false;
    return true;
  }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem embed_base(PrimeField::Elem c) const {
    Elem e(d_->k, 0);
    e[0] = c;
    return e;
  }
  Elem from_u64(uint64_t v) const { return embed_base(d_->b.from_u64(v)); }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(d_->k);
    for (uint32_t i = 0; i < d_->k; ++i) r[i] = d_->b.add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(d_->k);
    for (uint32_t i = 0; i < d_->k; ++i) r[i] = d_->b.sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(d_->k);
    for (uint32_t i = 0; i < d_->k; ++i) r[i] = d_->b.neg(a[i]);
    return r;
  }
  Elem scale(PrimeField::Elem c, const Elem& a) const {
    Elem r(d_->k);
    for (uint32_t i = 0; i < d_->k; ++i) r[i] = d_->b.mul(c, a[i]);
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    const PrimeField& F = d_->b;
    const uint32_t k = d_->k;
    if (k == 1) return Elem{F.mul(a[0], b[0])};
    std::vector<uint64_t> buf(2 * k - 1, 0);
    for (uint32_t i = 0; i < k; ++i) {
      if (!a[i]) continue;
      for (uint32_t j = 0; j < k; ++j)
        if (b[j]) buf[i + j] = F.add(buf[i + j], F.mul(a[i], b[j]));
    }
    reduce(buf);
    buf.resize(k);
    return buf;
  }

  Elem sqr(const Elem& a) const { return mul(a, a); }

  Elem pow_u64(const Elem& a, uint64_t e) const {
    Elem r = one();
    Elem b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Elem pow_big(const Elem& a, const BigUint& e) const {
    Elem r = one();
    if (e.is_zero()) return r;
    for (size_t i = e.bits(); i-- > 0;) {
      r = mul(r, r);
      if (e.bit(i)) r = mul(r, a);
    }
    return r;
  }

  // Inverse by extended Euclid on coefficient vectors over F_p.
  Elem inv(const Elem& a) const;

  // x -> x^p, evaluated via the precomputed image of the generator.
  Elem frobenius(const Elem& a) const {
    if (d_->k == 1) return a;
    Elem r(d_->k, 0);
    for (uint32_t i = d_->k; i-- > 0;) {
      r = mul(r, d_->frob_gen);
      r[0] = d_->b.add(r[0], a[i]);
    }
    return r;
  }

  Elem rand_elem(Rng& rng) const {
    Elem r(d_->k);
    for (auto& c : r) c = d_->b.from_u64(rng.below(d_->b.p));
    return r;
  }

  std::vector<uint64_t> canonical(const Elem& a) const {
    std::vector<uint64_t> r(d_->k);
    for (uint32_t i = 0; i < d_->k; ++i) r[i] = d_->b.to_u64(a[i]);
    return r;
  }

 private:
  struct Data {
    PrimeField b;
    uint32_t k = 0;
    std::vector<uint64_t> mod;  // Montgomery coefficients c_0..c_{k-1}
    Elem frob_gen;              // alpha^p (only for k > 1)
  };

  // Reduce a length-(2k-1) convolution in place by the monic modulus.
  void reduce(std::vector<uint64_t>& buf) const {
    const PrimeField& F = d_->b;
    const uint32_t k = d_->k;
    for (uint32_t i = (uint32_t)buf.size(); i-- > k;) {
      uint64_t c = buf[i];
      if (!c) continue;
      buf[i] = 0;
      for (uint32_t j = 0; j < k; ++j)
        if (d_->mod[j]) buf[i - k + j] = F.sub(buf[i - k + j], F.mul(c, d_->mod[j]));
    }
  }

  std::shared_ptr<const Data> d_;
};

// Wraps F_p as the degree-1 extension F_p[x]/(x).
ExtField wrap_base(const PrimeField& F);

// Decimal rendering of canonical coefficient vectors, for reports and tests.
std::string canonical_to_string(const std::vector<uint64_t>& v);

}  // namespace hessec
