#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hessec/fields.hpp"

namespace hessec {

// Dense univariate polynomial over a field context F (PrimeField or
// ExtField).  Coefficients ascend: c[i] multiplies x^i.  The vector is always
// trimmed, so the zero polynomial has an empty vector and degree -1.
template <class F>
struct UPoly {
  F f;
  std::vector<typename F::Elem> c;

  int deg() const { return (int)c.size() - 1; }
  bool zero() const { return c.empty(); }
  const typename F::Elem& lc() const { return c.back(); }
};

template <class F>
UPoly<F> upoly(const F& f, std::vector<typename F::Elem> coeffs) {
  while (!coeffs.empty() && f.is_zero(coeffs.back())) coeffs.pop_back();
  return UPoly<F>{f, std::move(coeffs)};
}

template <class F>
UPoly<F> upoly_zero(const F& f) {
  return UPoly<F>{f, {}};
}

template <class F>
UPoly<F> upoly_const(const F& f, typename F::Elem v) {
  return upoly(f, std::vector<typename F::Elem>{v});
}

template <class F>
UPoly<F> upoly_x(const F& f) {
  return upoly(f, std::vector<typename F::Elem>{f.zero(), f.one()});
}

template <class F>
bool upoly_eq(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!a.f.eq(a.c[i], b.c[i])) return false;
  return true;
}

template <class F>
UPoly<F> upoly_add(const UPoly<F>& a, const UPoly<F>& b) {
  std::vector<typename F::Elem> r(std::max(a.c.size(), b.c.size()), a.f.zero());
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.c.size()) r[i] = a.c[i];
    if (i < b.c.size()) r[i] = a.f.add(r[i], b.c[i]);
  }
  return upoly(a.f, std::move(r));
}

template <class F>
UPoly<F> upoly_sub(const UPoly<F>& a, const UPoly<F>& b) {
  std::vector<typename F::Elem> r(std::max(a.c.size(), b.c.size()), a.f.zero());
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.c.size()) r[i] = a.c[i];
    if (i < b.c.size()) r[i] = a.f.sub(r[i], b.c[i]);
  }
  return upoly(a.f, std::move(r));
}

template <class F>
UPoly<F> upoly_neg(const UPoly<F>& a) {
  auto r = a.c;
  for (auto& x : r) x = a.f.neg(x);
  return UPoly<F>{a.f, std::move(r)};
}

template <class F>
UPoly<F> upoly_scale(const UPoly<F>& a, const typename F::Elem& s) {
  if (a.f.is_zero(s)) return upoly_zero(a.f);
  auto r = a.c;
  for (auto& x : r) x = a.f.mul(x, s);
  return upoly(a.f, std::move(r));
}

template <class F>
UPoly<F> upoly_mul(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.zero() || b.zero()) return upoly_zero(a.f);
  std::vector<typename F::Elem> r(a.c.size() + b.c.size() - 1, a.f.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.f.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (!a.f.is_zero(b.c[j])) r[i + j] = a.f.add(r[i + j], a.f.mul(a.c[i], b.c[j]));
  }
  return upoly(a.f, std::move(r));
}

// Multiply by x^n.
template <class F>
UPoly<F> upoly_shift(const UPoly<F>& a, size_t n) {
  if (a.zero()) return a;
  std::vector<typename F::Elem> r(a.c.size() + n, a.f.zero());
  std::copy(a.c.begin(), a.c.end(), r.begin() + n);
  return UPoly<F>{a.f, std::move(r)};
}

template <class F>
struct UPolyDivRem {
  UPoly<F> q, r;
};

template <class F>
UPolyDivRem<F> upoly_divrem(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  const F& f = a.f;
  if (a.deg() < b.deg()) return {upoly_zero(f), a};
  auto lb_inv = f.inv(b.lc());
  std::vector<typename F::Elem> rem = a.c;
  std::vector<typename F::Elem> q(a.c.size() - b.c.size() + 1, f.zero());
  for (size_t i = rem.size(); i-- > 0;) {
    if (i + 1 < b.c.size()) break;
    if (f.is_zero(rem[i])) continue;
    auto coef = f.mul(rem[i], lb_inv);
    size_t shift = i + 1 - b.c.size();
    q[shift] = coef;
    for (size_t j = 0; j < b.c.size(); ++j)
      rem[shift + j] = f.sub(rem[shift + j], f.mul(coef, b.c[j]));
  }
  return {upoly(f, std::move(q)), upoly(f, std::move(rem))};
}

template <class F>
UPoly<F> upoly_rem(const UPoly<F>& a, const UPoly<F>& b) {
  return upoly_divrem(a, b).r;
}

template <class F>
UPoly<F> upoly_monic(const UPoly<F>& a) {
  if (a.zero()) return a;
  return upoly_scale(a, a.f.inv(a.lc()));
}

template <class F>
UPoly<F> upoly_derivative(const UPoly<F>& a) {
  if (a.deg() < 1) return upoly_zero(a.f);
  std::vector<typename F::Elem> r(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.f.mul(a.f.from_u64(i), a.c[i]);
  return upoly(a.f, std::move(r));
}

template <class F>
typename F::Elem upoly_eval(const UPoly<F>& a, const typename F::Elem& x) {
  auto r = a.f.zero();
  for (size_t i = a.c.size(); i-- > 0;) r = a.f.add(a.f.mul(r, x), a.c[i]);
  return r;
}

// Monic gcd; gcd(0, 0) = 0 by convention.
template <class F>
UPoly<F> upoly_gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.zero()) {
    auto r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_monic(a);
}

template <class F>
struct UPolyExtGcd {
  UPoly<F> g, u, v;  // u*a + v*b = g (g monic unless zero)
};

template <class F>
UPolyExtGcd<F> upoly_ext_gcd(const UPoly<F>& a, const UPoly<F>& b) {
  const F& f = a.f;
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> u0 = upoly_const(f, f.one()), u1 = upoly_zero(f);
  UPoly<F> v0 = upoly_zero(f), v1 = upoly_const(f, f.one());
  while (!r1.zero()) {
    auto qr = upoly_divrem(r0, r1);
    UPoly<F> u2 = upoly_sub(u0, upoly_mul(qr.q, u1));
    UPoly<F> v2 = upoly_sub(v0, upoly_mul(qr.q, v1));
    r0 = std::move(r1);
    r1 = std::move(qr.r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.zero()) return {r0, u0, v0};
  auto s = f.inv(r0.lc());
  return {upoly_scale(r0, s), upoly_scale(u0, s), upoly_scale(v0, s)};
}

// Sylvester resultant via the Euclidean remainder chain with leading
// coefficient and sign bookkeeping.  Res(f, g) = lc(f)^{deg g} * prod g(root).
template <class F>
typename F::Elem upoly_resultant(UPoly<F> a, UPoly<F> b) {
  const F& f = a.f;
  if (a.zero() || b.zero()) fail(Err::ZeroInput, "resultant of zero polynomial");
  auto res = f.one();
  bool neg = false;
  while (true) {
    if (b.deg() == 0) {
      res = f.mul(res, f.pow_u64(b.c[0], (uint64_t)a.deg()));
      break;
    }
    if (a.deg() < b.deg()) {
      if ((a.deg() & 1) && (b.deg() & 1)) neg = !neg;
      std::swap(a, b);
      continue;
    }
    auto r = upoly_rem(a, b);
    if (r.zero()) return f.zero();  // common factor
    res = f.mul(res, f.pow_u64(b.lc(), (uint64_t)(a.deg() - r.deg())));
    if ((a.deg() & 1) && (b.deg() & 1)) neg = !neg;
    a = std::move(b);
    b = std::move(r);
  }
  return neg ? f.neg(res) : res;
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
template <class F>
typename F::Elem upoly_discriminant(const UPoly<F>& a) {
  if (a.zero()) fail(Err::ZeroInput, "discriminant of zero polynomial");
  int n = a.deg();
  if (n < 1) fail(Err::ConstantInput, "discriminant needs degree >= 1");
  auto d = upoly_derivative(a);
  if (d.zero()) fail(Err::CharacteristicHazard, "derivative vanished");
  auto r = upoly_resultant(a, d);
  r = a.f.mul(r, a.f.inv(a.lc()));
  if ((uint64_t)n * (n - 1) / 2 % 2) r = a.f.neg(r);
  return r;
}

template <class F>
UPoly<F> upoly_squarefree_part(const UPoly<F>& a) {
  if (a.zero()) fail(Err::ZeroInput, "squarefree part of zero polynomial");
  if (a.f.characteristic() <= (uint64_t)std::max(a.deg(), 0))
    fail(Err::CharacteristicHazard, "characteristic does not exceed degree");
  if (a.deg() == 0) return upoly_const(a.f, a.f.one());
  auto g = upoly_gcd(a, upoly_derivative(a));
  return upoly_monic(upoly_divrem(a, g).q);
}

template <class F>
bool upoly_is_squarefree(const UPoly<F>& a) {
  if (a.zero() || a.deg() == 0) return !a.zero();
  return upoly_gcd(a, upoly_derivative(a)).deg() == 0;
}

// Newton interpolation through distinct abscissas.
template <class F>
UPoly<F> upoly_interpolate(const F& f, const std::vector<typename F::Elem>& xs,
                           const std::vector<typename F::Elem>& ys) {
  size_t n = xs.size();
  if (n == 0 || ys.size() != n) fail(Err::BadInput, "interpolation needs matching nonempty samples");
  std::vector<typename F::Elem> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n; i-- > j;) {
      auto den = f.sub(xs[i], xs[i - j]);
      if (f.is_zero(den)) fail(Err::DuplicateAbscissa, "repeated interpolation abscissa");
      dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), f.inv(den));
    }
  UPoly<F> p = upoly_zero(f);
  for (size_t i = n; i-- > 0;) {
    // p = p * (x - xs[i]) + dd[i]
    UPoly<F> lin = upoly(f, std::vector<typename F::Elem>{f.neg(xs[i]), f.one()});
    p = upoly_add(upoly_mul(p, lin), upoly_const(f, dd[i]));
  }
  return p;
}

// --- modular arithmetic in F[x]/(m) -----------------------------------------

template <class F>
UPoly<F> upoly_mulmod(const UPoly<F>& a, const UPoly<F>& b, const UPoly<F>& m) {
  return upoly_rem(upoly_mul(a, b), m);
}

template <class F>
UPoly<F> upoly_powmod_u64(UPoly<F> a, uint64_t e, const UPoly<F>& m) {
  UPoly<F> r = upoly_const(a.f, a.f.one());
  a = upoly_rem(a, m);
  while (e) {
    if (e & 1) r = upoly_mulmod(r, a, m);
    a = upoly_mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

template <class F>
UPoly<F> upoly_powmod_big(UPoly<F> a, const BigUint& e, const UPoly<F>& m) {
  UPoly<F> r = upoly_const(a.f, a.f.one());
  if (e.is_zero()) return r;
  a = upoly_rem(a, m);
  for (size_t i = e.bits(); i-- > 0;) {
    r = upoly_mulmod(r, r, m);
    if (e.bit(i)) r = upoly_mulmod(r, a, m);
  }
  return r;
}

// g(h) mod m by Horner.
template <class F>
UPoly<F> upoly_compose_mod(const UPoly<F>& g, const UPoly<F>& h, const UPoly<F>& m) {
  UPoly<F> r = upoly_zero(g.f);
  for (size_t i = g.c.size(); i-- > 0;) {
    r = upoly_mulmod(r, h, m);
    r = upoly_add(r, upoly_const(g.f, g.c[i]));
  }
  return r;
}

// x^(p^iters) mod m.  Over an extension the coefficients of intermediate
// results must themselves be twisted by Frobenius before composing, which is
// what distinguishes this from a plain power.
template <class F>
UPoly<F> upoly_frobenius_power_x(const UPoly<F>& m, uint32_t iters) {
  const F& f = m.f;
  UPoly<F> p1 = upoly_powmod_u64(upoly_x(f), f.characteristic(), m);
  UPoly<F> pi = p1;
  for (uint32_t i = 1; i < iters; ++i) {
    UPoly<F> twisted = pi;
    for (auto& c : twisted.c) c = f.frobenius(c);
    pi = upoly_compose_mod(twisted, p1, m);
  }
  return pi;
}

// x^{|F|} mod m where |F| = p^degree.
template <class F>
UPoly<F> upoly_x_pow_field_order(const UPoly<F>& m) {
  return upoly_frobenius_power_x(m, m.f.degree());
}

// x^{|F|^i} mod m, stepping i times; compose with the step polynomial since
// coefficients of intermediate results are |F|-power fixed.
template <class F>
UPoly<F> upoly_x_pow_field_order_iter(const UPoly<F>& m, const UPoly<F>& step, uint32_t iters) {
  UPoly<F> h = upoly_x(m.f);
  for (uint32_t i = 0; i < iters; ++i) h = upoly_compose_mod(h, step, m);
  return h;
}

// --- roots and factoring ----------------------------------------------------

namespace detail {

// Splits a product of distinct monic linear factors into its roots
// (Cantor-Zassenhaus with target degree 1).
template <class F>
void split_linear(const UPoly<F>& g, const BigUint& half_order, Rng& rng,
                  std::vector<typename F::Elem>& out) {
  const F& f = g.f;
  if (g.deg() <= 0) return;
  if (g.deg() == 1) {
    out.push_back(f.neg(f.mul(g.c[0], f.inv(g.c[1]))));
    return;
  }
  for (;;) {
    UPoly<F> r = upoly(f, std::vector<typename F::Elem>{f.rand_elem(rng), f.one()});
    UPoly<F> h = upoly_powmod_big(r, half_order, g);
    h = upoly_sub(h, upoly_const(f, f.one()));
    UPoly<F> d = upoly_gcd(h, g);
    if (d.deg() > 0 && d.deg() < g.deg()) {
      split_linear(d, half_order, rng, out);
      split_linear(upoly_monic(upoly_divrem(g, d).q), half_order, rng, out);
      return;
    }
  }
}

}  // namespace detail

// All roots of f lying in F itself, with multiplicities, sorted canonically.
template <class F>
std::vector<std::pair<typename F::Elem, int>> roots_in_field(const UPoly<F>& f0) {
  const F& f = f0.f;
  if (f0.zero()) fail(Err::ZeroInput, "roots of the zero polynomial");
  std::vector<std::pair<typename F::Elem, int>> out;
  if (f0.deg() == 0) return out;
  UPoly<F> s = upoly_squarefree_part(f0);
  UPoly<F> lin;
  if (s.deg() == 1) {
    lin = s;
  } else {
    UPoly<F> w = upoly_x_pow_field_order(s);
    w = upoly_sub(w, upoly_x(f));
    lin = upoly_gcd(w, s);
  }
  if (lin.deg() <= 0) return out;
  std::vector<typename F::Elem> roots;
  if (lin.deg() == 1) {
    roots.push_back(f.neg(f.mul(lin.c[0], f.inv(lin.c[1]))));
  } else {
    BigUint half = BigUint::pow_u64(f.characteristic(), f.degree());
    half.sub_u64(1);
    half.shr1();
    Rng rng(0x9d2c5680cafef00dull ^ f.characteristic() ^ (uint64_t(f.degree()) << 32));
    detail::split_linear(lin, half, rng, roots);
  }
  for (auto& r : roots) {
    int mult = 0;
    UPoly<F> cur = f0;
    UPoly<F> factor = upoly(f, std::vector<typename F::Elem>{f.neg(r), f.one()});
    for (;;) {
      auto qr = upoly_divrem(cur, factor);
      if (!qr.r.zero()) break;
      ++mult;
      cur = qr.q;
      if (cur.deg() < 1) break;
    }
    out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return f.canonical(a.first) < f.canonical(b.first);
  });
  return out;
}

// Distinct-degree factorization of a monic squarefree polynomial: list of
// (degree m, product of all irreducible factors of degree m).
template <class F>
std::vector<std::pair<int, UPoly<F>>> upoly_ddf(const UPoly<F>& f0) {
  const F& f = f0.f;
  std::vector<std::pair<int, UPoly<F>>> out;
  UPoly<F> v = upoly_monic(f0);
  if (v.deg() < 1) return out;
  UPoly<F> step = upoly_x_pow_field_order(v);
  UPoly<F> h = upoly_x(f);
  for (int i = 1; 2 * i <= v.deg(); ++i) {
    h = upoly_compose_mod(h, step, v);
    UPoly<F> g = upoly_gcd(upoly_sub(h, upoly_x(f)), v);
    if (g.deg() > 0) {
      out.push_back({i, g});
      v = upoly_monic(upoly_divrem(v, g).q);
      if (v.deg() == 0) break;
      h = upoly_rem(h, v);
    }
  }
  if (v.deg() > 0) out.push_back({v.deg(), v});
  return out;
}

// Equal-degree factorization: f is a product of distinct irreducibles of
// degree m.  Deterministic given the rng stream; output sorted canonically.
template <class F>
std::vector<UPoly<F>> upoly_edf(const UPoly<F>& f0, int m, Rng& rng) {
  const F& f = f0.f;
  std::vector<UPoly<F>> out;
  std::vector<UPoly<F>> stack{upoly_monic(f0)};
  BigUint half = BigUint::pow_u64(f.characteristic(), f.degree() * (uint32_t)m);
  half.sub_u64(1);
  half.shr1();
  while (!stack.empty()) {
    UPoly<F> g = std::move(stack.back());
    stack.pop_back();
    if (g.deg() == m) {
      out.push_back(std::move(g));
      continue;
    }
    for (;;) {
      std::vector<typename F::Elem> rc((size_t)g.deg(), f.zero());
      for (auto& c : rc) c = f.rand_elem(rng);
      UPoly<F> r = upoly(f, std::move(rc));
      if (r.zero()) continue;
      UPoly<F> h = upoly_powmod_big(r, half, g);
      h = upoly_sub(h, upoly_const(f, f.one()));
      UPoly<F> d = upoly_gcd(h, g);
      if (d.deg() > 0 && d.deg() < g.deg()) {
        stack.push_back(d);
        stack.push_back(upoly_monic(upoly_divrem(g, d).q));
        break;
      }
    }
  }
  return out;
}

// Factor degree profile (degree, count) of a squarefree polynomial.
template <class F>
std::vector<std::pair<int, int>> splitting_plan(const UPoly<F>& f0) {
  if (f0.zero()) fail(Err::ZeroInput, "splitting plan of zero polynomial");
  if (!upoly_is_squarefree(f0)) fail(Err::NotSquarefree, "splitting plan needs squarefree input");
  std::vector<std::pair<int, int>> out;
  for (auto& [m, g] : upoly_ddf(f0)) out.push_back({m, g.deg() / m});
  return out;
}

// --- prime-field specifics ---------------------------------------------------

using FpPoly = UPoly<PrimeField>;

inline std::vector<uint64_t> upoly_canonical_key(const FpPoly& a) {
  std::vector<uint64_t> key;
  key.push_back((uint64_t)(a.deg() + 1));
  for (auto c : a.c) key.push_back(a.f.to_u64(c));
  return key;
}

// Rabin irreducibility test over F_p.
bool upoly_is_irreducible(const FpPoly& f);

// Deterministic lowest-in-enumeration monic irreducible modulus of degree k.
ExtField make_extension(const PrimeField& F, uint32_t k);

// A value in one explicit extension of the prime field.
struct AlgValue {
  ExtField K;
  ExtField::Elem v;
};

// All roots of a squarefree prime-field polynomial across extensions.  Each
// degree-m irreducible factor q contributes its m conjugate roots, living in
// the extension F_p[x]/(q).  Sorted canonically (factor key, then root).
std::vector<AlgValue> all_roots(const FpPoly& f, Rng rng, uint32_t max_ext = 64);

// Monic minimal polynomial over F_p of an extension element (linear algebra
// on its powers).
FpPoly minimal_polynomial(const ExtField& K, const ExtField::Elem& a);

}  // namespace hessec
