#include "hessec/upoly.hpp"

#include <map>

namespace hessec {

bool upoly_is_irreducible(const FpPoly& f0) {
  if (f0.deg() < 1) return false;
  if (f0.deg() == 1) return true;
  const PrimeField& F = f0.f;
  FpPoly f = upoly_monic(f0);
  int n = f.deg();

  // distinct prime divisors of n
  std::vector<int> primes;
  int m = n;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);

  // checkpoints i = n/r where gcd(x^{p^i} - x, f) must be trivial
  std::map<int, bool> checkpoint;
  for (int r : primes) checkpoint[n / r] = true;

  FpPoly step = upoly_powmod_u64(upoly_x(F), F.characteristic(), f);
  FpPoly h = upoly_x(F);
  for (int i = 1; i <= n; ++i) {
    h = upoly_compose_mod(h, step, f);
    if (i == n) {
      if (!upoly_eq(h, upoly_rem(upoly_x(F), f))) return false;
    } else if (checkpoint.count(i)) {
      FpPoly g = upoly_gcd(upoly_sub(h, upoly_x(F)), f);
      if (g.deg() != 0) return false;
    }
  }
  return true;
}

ExtField make_extension(const PrimeField& F, uint32_t k) {
  if (k == 0) fail(Err::BadInput, "extension degree must be positive");
  if (k > 64) fail(Err::ExtensionTooLarge, "extension degree cap exceeded");
  if (k == 1) return wrap_base(F);
  uint64_t base = std::min<uint64_t>(F.p, 1024);
  for (uint64_t idx = 0; idx < 100000000ull; ++idx) {
    std::vector<PrimeField::Elem> c(k + 1, F.zero());
    uint64_t rest = idx;
    for (uint32_t i = 0; i < k && rest; ++i) {
      c[i] = F.from_u64(rest % base);
      rest /= base;
    }
    if (rest) break;  // enumeration exhausted the digit budget
    c[k] = F.one();
    FpPoly cand = upoly(F, c);
    if (upoly_is_irreducible(cand)) {
      std::vector<uint64_t> low(cand.c.begin(), cand.c.end() - 1);
      return ExtField(F, low);
    }
  }
  fail(Err::GenericityExhausted, "no irreducible modulus found in enumeration budget");
}

std::vector<AlgValue> all_roots(const FpPoly& f0, Rng rng, uint32_t max_ext) {
  const PrimeField& F = f0.f;
  if (f0.zero()) fail(Err::ZeroInput, "roots of the zero polynomial");
  if (!upoly_is_squarefree(f0)) fail(Err::NotSquarefree, "root isolation needs squarefree input");
  std::vector<AlgValue> out;
  if (f0.deg() < 1) return out;
  FpPoly f = upoly_monic(f0);

  for (auto& [m, gm] : upoly_ddf(f)) {
    if ((uint32_t)m > max_ext) fail(Err::ExtensionTooLarge, "irreducible factor degree exceeds cap");
    Rng child = rng.child("edf", (uint64_t)m);
    std::vector<FpPoly> factors = upoly_edf(gm, m, child);
    std::sort(factors.begin(), factors.end(), [](const FpPoly& a, const FpPoly& b) {
      return upoly_canonical_key(a) < upoly_canonical_key(b);
    });
    for (auto& q : factors) {
      if (m == 1) {
        ExtField K = wrap_base(F);
        out.push_back({K, K.embed_base(F.neg(q.c[0]))});
      } else {
        std::vector<uint64_t> low(q.c.begin(), q.c.end() - 1);
        ExtField K(F, low);
        ExtField::Elem r = K.gen();
        for (int j = 0; j < m; ++j) {
          out.push_back({K, r});
          if (j + 1 < m) r = K.frobenius(r);
        }
      }
    }
  }
  return out;
}

FpPoly minimal_polynomial(const ExtField& K, const ExtField::Elem& a) {
  const PrimeField& F = K.base();
  uint32_t k = K.degree();
  struct Row {
    ExtField::Elem vec;
    std::vector<PrimeField::Elem> expr;  // in terms of powers of a
    uint32_t pivot;
  };
  std::vector<Row> rows;
  ExtField::Elem pw = K.one();
  for (uint32_t j = 0; j <= k; ++j) {
    ExtField::Elem v = pw;
    std::vector<PrimeField::Elem> expr(k + 1, F.zero());
    expr[j] = F.one();
    for (const Row& row : rows) {
      PrimeField::Elem c = v[row.pivot];
      if (F.is_zero(c)) continue;
      for (uint32_t i = 0; i < k; ++i) v[i] = F.sub(v[i], F.mul(c, row.vec[i]));
      for (uint32_t i = 0; i <= k; ++i) expr[i] = F.sub(expr[i], F.mul(c, row.expr[i]));
    }
    bool zero = true;
    uint32_t pivot = 0;
    for (uint32_t i = 0; i < k; ++i)
      if (!F.is_zero(v[i])) {
        zero = false;
        pivot = i;
        break;
      }
    if (zero) {
      // a^j = -sum_{i<j} expr[i] a^i (expr[j] stayed 1); minpoly = sum expr[i] x^i
      std::vector<PrimeField::Elem> coeffs(expr.begin(), expr.begin() + j + 1);
      return upoly(F, coeffs);
    }
    PrimeField::Elem s = F.inv(v[pivot]);
    for (uint32_t i = 0; i < k; ++i) v[i] = F.mul(v[i], s);
    for (uint32_t i = 0; i <= k; ++i) expr[i] = F.mul(expr[i], s);
    rows.push_back({std::move(v), std::move(expr), pivot});
    pw = K.mul(pw, a);
  }
  fail(Err::BadInput, "power sequence failed to close");  // unreachable
}

}  // namespace hessec
