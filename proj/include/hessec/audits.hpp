#pragma once

#include <sstream>
#include <string>

#include "hessec/errors.hpp"
#include "hessec/verdict.hpp"

namespace hessec {

// Closed-form counts attached to a degree-d pencil.  Everything downstream
// (flex enumeration, nodal fibers, hyperflex census, Hesse curve clauses) is
// checked against this one record.
struct ExpectedCounts {
  long long d = 0;
  long long deg_hesse = 0;  // 6(d-1)
  long long genus = 0;      // 3(4d^2 - 13d + 8) + 1
  long long flexes = 0;     // 3d(d-2)
  long long nodes = 0;      // 3(d-1)^2
  long long hyperflex = 0;  // 6(d-3)(3d-2)
  long long base = 0;       // d^2
};

// The class a*A + b*B on the pencil body, where A is the fiber class of the
// parameter line and B the hyperplane pullback.  The intersection pairing is
// the symmetric bilinear form with matrix [[0, d], [d, 1]].
struct DivisorClass {
  long long a = 0;
  long long b = 0;
};

namespace detail {

// The audit contract must not depend on word size, so every step is checked;
// an overflow aborts the audit instead of wrapping.
inline long long chk_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) fail(Err::BadInput, "audit arithmetic overflow");
  return r;
}
inline long long chk_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r)) fail(Err::BadInput, "audit arithmetic overflow");
  return r;
}
inline long long chk_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) fail(Err::BadInput, "audit arithmetic overflow");
  return r;
}

}  // namespace detail

inline ExpectedCounts expected_counts(long long d) {
  using detail::chk_add;
  using detail::chk_mul;
  using detail::chk_sub;
  if (d < 3) fail(Err::DegreeTooSmall, "expected counts need degree at least 3");
  ExpectedCounts c;
  c.d = d;
  c.deg_hesse = chk_mul(6, chk_sub(d, 1));
  c.genus = chk_add(
      chk_mul(3, chk_add(chk_sub(chk_mul(4, chk_mul(d, d)), chk_mul(13, d)), 8)), 1);
  c.flexes = chk_mul(chk_mul(3, d), chk_sub(d, 2));
  c.nodes = chk_mul(3, chk_mul(chk_sub(d, 1), chk_sub(d, 1)));
  c.hyperflex = chk_mul(chk_mul(6, chk_sub(d, 3)), chk_sub(chk_mul(3, d), 2));
  c.base = chk_mul(d, d);
  return c;
}

// u.v under [[0, d], [d, 1]]: d(u_a v_b + u_b v_a) + u_b v_b.
inline long long pairing(const DivisorClass& u, const DivisorClass& v, long long d) {
  using detail::chk_add;
  using detail::chk_mul;
  if (d < 3) fail(Err::DegreeTooSmall, "the pairing lives on a degree >= 3 pencil body");
  return chk_add(chk_mul(d, chk_add(chk_mul(u.a, v.b), chk_mul(u.b, v.a))),
                 chk_mul(u.b, v.b));
}

// Internal consistency of the count table itself: everything nonnegative,
// no hyperflexes at d = 3, and the contact identity flexes*1 + base*3 =
// deg_hesse * d that clause (iii) realizes pointwise.
inline ClauseResult counts_audit(long long d) {
  using detail::chk_add;
  using detail::chk_mul;
  ExpectedCounts c = expected_counts(d);
  std::ostringstream ev;
  for (long long v : {c.deg_hesse, c.genus, c.flexes, c.nodes, c.hyperflex, c.base})
    if (v < 0) {
      ev << "negative count at d = " << d;
      return {Verdict::FAIL, ev.str()};
    }
  if (d == 3 && c.hyperflex != 0) return {Verdict::FAIL, "nonzero hyperflex count at d = 3"};
  long long contact = chk_add(c.flexes, chk_mul(3, c.base));
  long long bezout = chk_mul(c.deg_hesse, d);
  ev << c.flexes << " + 3*" << c.base << " = " << contact << "; deg H * d = " << bezout;
  if (contact != bezout) return {Verdict::FAIL, ev.str()};
  return {Verdict::PASS, ev.str()};
}

// On the pencil body: (I, I + K) minus twice the nodal-fiber count equals
// 2(genus - 1), with I = 3A + 3(d-2)B and K = -A + (d-3)B.
inline ClauseResult adjunction_audit(long long d) {
  using detail::chk_add;
  using detail::chk_mul;
  using detail::chk_sub;
  ExpectedCounts c = expected_counts(d);
  DivisorClass I{3, chk_mul(3, chk_sub(d, 2))};
  DivisorClass K{-1, chk_sub(d, 3)};
  DivisorClass IK{chk_add(I.a, K.a), chk_add(I.b, K.b)};
  long long self = pairing(I, IK, d);
  long long lhs = chk_sub(self, chk_mul(2, c.nodes));
  long long closed =
      chk_mul(6, chk_add(chk_sub(chk_mul(4, chk_mul(d, d)), chk_mul(13, d)), 8));
  long long rhs = chk_mul(2, chk_sub(c.genus, 1));
  std::ostringstream ev;
  ev << "(I, I+K) = " << self << "; " << self << " - 2*" << c.nodes << " = " << lhs
     << "; closed form gives " << closed << "; 2(g-1) = " << rhs;
  if (lhs != closed || lhs != rhs) return {Verdict::FAIL, ev.str()};
  return {Verdict::PASS, ev.str()};
}

// The covering relation of the incidence curve over the parameter line:
// 2(g-1) = -6d(d-2) + hyperflex + 12(d-1)^2.
inline ClauseResult hurwitz_audit(long long d) {
  using detail::chk_add;
  using detail::chk_mul;
  using detail::chk_sub;
  ExpectedCounts c = expected_counts(d);
  long long lhs = chk_mul(2, chk_sub(c.genus, 1));
  long long sheets = chk_mul(chk_mul(-6, d), chk_sub(d, 2));
  long long branch = chk_mul(12, chk_mul(chk_sub(d, 1), chk_sub(d, 1)));
  long long rhs = chk_add(chk_add(sheets, c.hyperflex), branch);
  std::ostringstream ev;
  ev << "2(g-1) = " << lhs << " = " << sheets << " + " << c.hyperflex << " + " << branch;
  if (lhs != rhs) return {Verdict::FAIL, ev.str()};
  return {Verdict::PASS, ev.str()};
}

// Genus of the plane model by delta invariants: p_a(6(d-1)) minus 3 per
// base point and 1 per node reproduces the genus formula.
inline ClauseResult delta_audit(long long d) {
  using detail::chk_mul;
  using detail::chk_sub;
  ExpectedCounts c = expected_counts(d);
  long long D = c.deg_hesse;
  long long pa = chk_mul(chk_sub(D, 1), chk_sub(D, 2)) / 2;
  long long delta_base = chk_mul(3, c.base);
  long long lhs = chk_sub(chk_sub(pa, delta_base), c.nodes);
  std::ostringstream ev;
  ev << "p_a(" << D << ") = " << pa << "; " << pa << " - " << delta_base << " - " << c.nodes
     << " = " << lhs << "; genus formula gives " << c.genus;
  if (lhs != c.genus) return {Verdict::FAIL, ev.str()};
  return {Verdict::PASS, ev.str()};
}

}  // namespace hessec
