#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "hessec/audits.hpp"

using namespace hessec;

namespace {

template <class Fn>
Err thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Err::BadInput;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("the count table matches the desk-checked rows") {
  ExpectedCounts c3 = expected_counts(3);
  CHECK(c3.deg_hesse == 12);
  CHECK(c3.genus == 16);
  CHECK(c3.flexes == 9);
  CHECK(c3.nodes == 12);
  CHECK(c3.hyperflex == 0);
  CHECK(c3.base == 9);

  ExpectedCounts c4 = expected_counts(4);
  CHECK(c4.deg_hesse == 18);
  CHECK(c4.genus == 61);
  CHECK(c4.flexes == 24);
  CHECK(c4.nodes == 27);
  CHECK(c4.hyperflex == 60);
  CHECK(c4.base == 16);

  ExpectedCounts c5 = expected_counts(5);
  CHECK(c5.deg_hesse == 24);
  CHECK(c5.flexes == 45);
  CHECK(c5.nodes == 48);
  CHECK(c5.hyperflex == 156);
  CHECK(c5.base == 25);

  for (long long d = 3; d <= 50; ++d) {
    ExpectedCounts c = expected_counts(d);
    CHECK(c.deg_hesse >= 12);
    CHECK(c.genus >= 16);
    CHECK(c.flexes >= 9);
    CHECK(c.nodes >= 12);
    CHECK(c.hyperflex >= 0);
    CHECK(c.base >= 9);
  }
  CHECK(expected_counts(3).hyperflex == 0);
}

TEST_CASE("low degrees are refused everywhere") {
  CHECK(thrown_code([] { expected_counts(2); }) == Err::DegreeTooSmall);
  CHECK(thrown_code([] { expected_counts(0); }) == Err::DegreeTooSmall);
  CHECK(thrown_code([] { expected_counts(-5); }) == Err::DegreeTooSmall);
  CHECK(thrown_code([] { pairing({1, 0}, {0, 1}, 2); }) == Err::DegreeTooSmall);
  CHECK(thrown_code([] { counts_audit(2); }) == Err::DegreeTooSmall);
  CHECK(thrown_code([] { adjunction_audit(2); }) == Err::DegreeTooSmall);
  CHECK(thrown_code([] { hurwitz_audit(2); }) == Err::DegreeTooSmall);
  CHECK(thrown_code([] { delta_audit(2); }) == Err::DegreeTooSmall);
}

TEST_CASE("the intersection pairing has the prescribed matrix") {
  DivisorClass A{1, 0};
  DivisorClass B{0, 1};
  for (long long d = 3; d <= 12; ++d) {
    CHECK(pairing(A, A, d) == 0);
    CHECK(pairing(A, B, d) == d);
    CHECK(pairing(B, A, d) == d);
    CHECK(pairing(B, B, d) == 1);
  }
  // bilinearity and symmetry on a few concrete classes
  DivisorClass u{2, -5};
  DivisorClass v{-3, 7};
  DivisorClass w{u.a + v.a, u.b + v.b};
  for (long long d = 3; d <= 12; ++d) {
    CHECK(pairing(u, v, d) == pairing(v, u, d));
    CHECK(pairing(w, w, d) ==
          pairing(u, u, d) + 2 * pairing(u, v, d) + pairing(v, v, d));
  }
}

TEST_CASE("all four audits pass for every degree up to fifty") {
  for (long long d = 3; d <= 50; ++d) {
    CAPTURE(d);
    CHECK(counts_audit(d).verdict == Verdict::PASS);
    CHECK(adjunction_audit(d).verdict == Verdict::PASS);
    CHECK(hurwitz_audit(d).verdict == Verdict::PASS);
    CHECK(delta_audit(d).verdict == Verdict::PASS);
  }
  // headroom: the checked arithmetic holds far past the CLI's degree cap
  CHECK(counts_audit(1000).verdict == Verdict::PASS);
  CHECK(adjunction_audit(1000).verdict == Verdict::PASS);
  CHECK(hurwitz_audit(1000).verdict == Verdict::PASS);
  CHECK(delta_audit(1000).verdict == Verdict::PASS);
}

TEST_CASE("audit evidence carries the worked numbers") {
  CHECK(contains(adjunction_audit(3).evidence, "54 - 2*12 = 30"));
  CHECK(contains(adjunction_audit(4).evidence, "174 - 2*27 = 120"));
  CHECK(contains(hurwitz_audit(3).evidence, "30 = -18 + 0 + 48"));
  CHECK(contains(hurwitz_audit(4).evidence, "120 = -48 + 60 + 108"));
  CHECK(contains(delta_audit(3).evidence, "p_a(12) = 55"));
  CHECK(contains(delta_audit(3).evidence, "55 - 27 - 12 = 16"));
  CHECK(contains(delta_audit(4).evidence, "p_a(18) = 136"));
  CHECK(contains(delta_audit(4).evidence, "136 - 48 - 27 = 61"));
  CHECK(contains(counts_audit(3).evidence, "9 + 3*9 = 36"));
  CHECK(contains(counts_audit(4).evidence, "24 + 3*16 = 72"));
}

TEST_CASE("the covering relation solved for the branch term recovers the census count") {
  // 2(g-1) + 6d(d-2) - 12(d-1)^2 must reproduce 6(d-3)(3d-2) identically
  for (long long d = 3; d <= 50; ++d) {
    ExpectedCounts c = expected_counts(d);
    long long m = 2 * (c.genus - 1) + 6 * d * (d - 2) - 12 * (d - 1) * (d - 1);
    CHECK(m == 6 * (d - 3) * (3 * d - 2));
    CHECK(m == c.hyperflex);
  }
}
