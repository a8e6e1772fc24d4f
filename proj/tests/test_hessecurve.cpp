#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "hessec/hessecurve.hpp"

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

Pencil manual_pencil(const PrimeField& F, const Form& F0, const Form& F1, uint64_t seed) {
  Pencil P;
  P.d = F0.d;
  P.F = F;
  P.F0 = F0;
  P.F1 = F1;
  P.frame = mat3_identity(F);
  P.seed = seed;
  return P;
}

// the closed form agrees with a directly computed 4x4 parameter resultant at
// random sample points, up to one fixed nonzero scalar
void check_resultant_samples(const Pencil& P, const HesseCurve& hc, uint64_t seed) {
  const PrimeField& F = P.F;
  auto hp = hessian_pencil(P.F0, P.F1);
  Rng rng(seed);
  std::vector<std::pair<PrimeField::Elem, PrimeField::Elem>> pairs;
  int nonzero = 0;
  for (int s = 0; s < 20; ++s) {
    auto x = F.rand_elem(rng), y = F.rand_elem(rng), z = F.rand_elem(rng);
    auto A = form_eval(P.F0, F, x, y, z);
    auto B = form_eval(P.F1, F, x, y, z);
    std::vector<PrimeField::Elem> H3;
    for (int k = 0; k < 4; ++k) H3.push_back(form_eval(hp[k], F, x, y, z));
    auto syl = sylvester_det(F, {A, B}, H3);
    auto val = form_eval(hc.H, F, x, y, z);
    if (!F.is_zero(syl) && !F.is_zero(val)) ++nonzero;
    pairs.push_back({syl, val});
  }
  CHECK(nonzero >= 15);
  for (size_t i = 1; i < pairs.size(); ++i)
    CHECK(F.eq(F.mul(pairs[0].first, pairs[i].second), F.mul(pairs[i].first, pairs[0].second)));
}

}  // namespace

TEST_CASE("the classical cubic pencil has the known dodecic Hesse form") {
  PrimeField F = make_prime_field(derive_prime(101));
  Form F0 = parse_form(F, "x^3+y^3+z^3");
  Form F1 = parse_form(F, "x*y*z");
  Pencil P = manual_pencil(F, F0, F1, 7);

  HesseCurve hc = hesse_curve(P);
  CHECK(hc.d == 3);
  CHECK(hc.H.d == 12);
  CHECK(hc.squarefree);

  // 8xyz(27 x^3 y^3 z^3 - (x^3+y^3+z^3)^3), here on the nose
  Form xyz3 = form_pow(F1, 3);
  Form oracle = form_scale(
      form_mul(F1, form_sub(form_scale(xyz3, F.from_u64(27)), form_pow(F0, 3))), F.from_u64(8));
  CHECK(form_eq(hc.H, oracle));

  check_resultant_samples(P, hc, 2024);
}

TEST_CASE("validated pencils produce full-degree squarefree Hesse forms") {
  for (uint64_t seed : {11u, 21u}) {
    PrimeField F = make_prime_field(derive_prime(3000 + seed));
    Pencil P = random_pencil(3, seed, F);
    HesseCurve hc = hesse_curve(P);
    CHECK(hc.H.d == 12);
    CHECK(!hc.H.zero());
    CHECK(hc.squarefree);
    check_resultant_samples(P, hc, seed);
  }
  PrimeField F = make_prime_field(derive_prime(52));
  Pencil P = random_pencil(4, 5, F);
  HesseCurve hc = hesse_curve(P);
  CHECK(hc.H.d == 18);
  CHECK(hc.squarefree);
  check_resultant_samples(P, hc, 5);
}

TEST_CASE("degenerate pencils are refused") {
  PrimeField F = make_prime_field(derive_prime(101));

  // identically vanishing Hessian pencil
  Pencil flat = manual_pencil(F, parse_form(F, "x^3"), parse_form(F, "y^3"), 1);
  CHECK(thrown_code([&] { hesse_curve(flat); }) == Err::DegenerateHesseCurve);

  // proportional generators collapse the resultant to zero
  Form fermat = parse_form(F, "x^3+y^3+z^3");
  Pencil prop = manual_pencil(F, fermat, form_scale(fermat, F.from_u64(2)), 1);
  CHECK(thrown_code([&] { hesse_curve(prop); }) == Err::DegenerateHesseCurve);

  // a repeated line: H = -216 x^7 y z (y^3 + z^3)
  Pencil rep = manual_pencil(F, fermat, parse_form(F, "x^3"), 1);
  CHECK(thrown_code([&] { hesse_curve(rep); }) == Err::DegenerateHesseCurve);

  Pencil tiny = manual_pencil(F, parse_form(F, "x^2"), parse_form(F, "y^2"), 1);
  CHECK(thrown_code([&] { hesse_curve(tiny); }) == Err::DegreeTooSmall);
}

TEST_CASE("genus bookkeeping closes for every degree") {
  PrimeField F = make_prime_field(derive_prime(101));
  for (int d = 3; d <= 50; ++d) {
    const int D = 6 * (d - 1);
    HesseCurve hc{form_from_terms(F, D, {{D, 0, 0, 1}}), d, true};
    ClauseResult r = verify_clause_i(hc);
    CHECK(r.verdict == Verdict::PASS);
  }

  // the two desk-checked rows
  HesseCurve h3{form_from_terms(F, 12, {{12, 0, 0, 1}}), 3, true};
  ClauseResult r3 = verify_clause_i(h3);
  CHECK(r3.verdict == Verdict::PASS);
  CHECK(r3.evidence.find("p_a(12) = 55") != std::string::npos);
  CHECK(r3.evidence.find("= 16") != std::string::npos);

  HesseCurve h4{form_from_terms(F, 18, {{18, 0, 0, 1}}), 4, true};
  ClauseResult r4 = verify_clause_i(h4);
  CHECK(r4.verdict == Verdict::PASS);
  CHECK(r4.evidence.find("p_a(18) = 136") != std::string::npos);
  CHECK(r4.evidence.find("= 61") != std::string::npos);

  // degree drop is reported with the numbers
  HesseCurve bad{form_from_terms(F, 10, {{10, 0, 0, 1}}), 3, true};
  ClauseResult rb = verify_clause_i(bad);
  CHECK(rb.verdict == Verdict::FAIL);
  CHECK(rb.evidence.find("deg H = 10") != std::string::npos);
}

TEST_CASE("the cubic theorem report verifies all three clauses") {
  PrimeField F = make_prime_field(derive_prime(3011));
  Pencil P = random_pencil(3, 11, F);
  HesseCurve hc = hesse_curve(P);

  // clause (ii) alone, with its inventory evidence
  ClauseResult c2 = verify_clause_ii(hc, P);
  CHECK(c2.verdict == Verdict::PASS);
  CHECK(c2.evidence.find("9/9") != std::string::npos);
  CHECK(c2.evidence.find("12/12") != std::string::npos);
  CHECK(c2.evidence.find("50 random curve points") != std::string::npos);

  TheoremReport rep = verify_theorem(hc, P, 3);
  CHECK(rep.d == 3);
  CHECK(rep.clause_i.verdict == Verdict::PASS);
  CHECK(rep.clause_ii.verdict == Verdict::PASS);
  CHECK(rep.clause_iii.verdict == Verdict::PASS);
  for (auto& c : rep.counts) CHECK(c.expected == c.found);
  REQUIRE(rep.fibers.size() == 3);
  for (auto& dec : rep.fibers) {
    CHECK(dec.total == 36);
    int flexes = 0, bases = 0;
    for (auto& c : dec.contacts) {
      if (c.base) {
        CHECK(c.order == 3);
        ++bases;
      } else {
        CHECK(c.order == 1);
        ++flexes;
      }
    }
    CHECK(flexes == 9);
    CHECK(bases == 9);
  }

  // every contact of the first sampled fiber lies on H exactly
  for (auto& c : rep.fibers[0].contacts) CHECK(c.pt.K.is_zero(point_eval(hc.H, c.pt)));

  // the member at infinity decomposes the same way
  FiberDecomposition inf = fiber_intersection(hc, P, Param::inf());
  CHECK(inf.total == 36);

  // an unvalidated pencil is rejected by the inventory clause
  Pencil raw = manual_pencil(F, P.F0, P.F1, 3);
  CHECK(thrown_code([&] { verify_clause_ii(hc, raw); }) == Err::BadInput);
  CHECK(thrown_code([&] { fiber_intersection(hc, raw, Param::finite(F.one())); }) ==
        Err::BadInput);
}

TEST_CASE("Hesse forms transform covariantly under frame changes") {
  PrimeField F = make_prime_field(derive_prime(3021));
  Pencil P = random_pencil(3, 21, F);
  HesseCurve hc = hesse_curve(P);

  Mat3 M;
  uint64_t ent[3][3] = {{2, 1, 7}, {0, 1, 3}, {5, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.m[i][j] = F.from_u64(ent[i][j]);
  REQUIRE(!F.is_zero(mat3_det(F, M)));
  Pencil Q = manual_pencil(F, compose_linear(P.F0, M), compose_linear(P.F1, M), 77);
  HesseCurve hq = hesse_curve(Q);

  // pulling the member Hessians through M multiplies them by det(M)^2
  auto det = mat3_det(F, M);
  Form expected = form_scale(compose_linear(hc.H, M), F.mul(det, det));
  CHECK(form_eq(hq.H, expected));
}

TEST_CASE("the quartic theorem report verifies all three clauses") {
  PrimeField F = make_prime_field(derive_prime(72));
  Pencil P = random_pencil(4, 29, F);
  HesseCurve hc = hesse_curve(P);
  CHECK(hc.H.d == 18);

  TheoremReport rep = verify_theorem(hc, P, 3);
  CHECK(rep.clause_i.verdict == Verdict::PASS);
  CHECK(rep.clause_i.evidence.find("= 61") != std::string::npos);
  CHECK(rep.clause_ii.verdict == Verdict::PASS);
  CHECK(rep.clause_ii.evidence.find("16/16") != std::string::npos);
  CHECK(rep.clause_ii.evidence.find("27/27") != std::string::npos);
  CHECK(rep.clause_iii.verdict == Verdict::PASS);
  for (auto& c : rep.counts) CHECK(c.expected == c.found);
  REQUIRE(rep.fibers.size() == 3);
  for (auto& dec : rep.fibers) {
    CHECK(dec.total == 72);
    int flexes = 0, bases = 0;
    for (auto& c : dec.contacts) (c.base ? bases : flexes) += 1;
    CHECK(flexes == 24);
    CHECK(bases == 16);
  }
}

TEST_CASE("hyperflex members touch the Hesse curve, generic flexes cross it") {
  PrimeField F = make_prime_field(derive_prime(72));
  Pencil P = random_pencil(4, 29, F);
  HesseCurve hc = hesse_curve(P);

  Census c = hyperflex_census(P, "hesse_tangency_cache_d4.txt");
  REQUIRE(c.complete);
  REQUIRE(c.records.size() == 60);
  for (auto& rec : c.records) {
    CHECK(member_contact_at(hc, P, rec.t, rec.pt) == 2);
    ClauseResult v = verify_clause_iii_tangency(hc, P, rec);
    CHECK(v.verdict == Verdict::PASS);
  }

  // 20 ordinary flexes of a generic member meet H transversally
  FlexSet fx;
  PrimeField::Elem tv = F.zero();
  for (uint64_t cand = 3;; ++cand) {
    try {
      tv = F.from_u64(cand);
      fx = flexes_of_member(P, Param::finite(tv));
      break;
    } catch (const Error& e) {
      if (e.code() != Err::MemberSingular && e.code() != Err::FlexCountMismatch) throw;
      REQUIRE(cand < 40);
    }
  }
  int checked = 0;
  for (auto& mf : fx.points) {
    if (checked >= 20) break;
    if (mf.pt.K.is_zero(mf.pt.z)) continue;  // contact order queries are affine
    AlgValue t0{mf.pt.K, mf.pt.K.embed_base(tv)};
    CHECK(member_contact_at(hc, P, t0, mf.pt) == 1);
    ClauseResult v = verify_clause_iii_tangency(hc, P, HyperflexRecord{t0, mf.pt, mf.tangent_mult});
    CHECK(v.verdict == Verdict::FAIL);  // an honest flex is not a hyperflex
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("tangency is skipped for cubic pencils and guarded elsewhere") {
  PrimeField F = make_prime_field(derive_prime(3011));
  Pencil P = random_pencil(3, 11, F);
  HesseCurve hc = hesse_curve(P);

  ExtField K = wrap_base(F);
  HyperflexRecord dummy{AlgValue{K, K.zero()}, AlgPoint{K, K.one(), K.zero(), K.zero()}, 4};
  ClauseResult skipped = verify_clause_iii_tangency(hc, P, dummy);
  CHECK(skipped.verdict == Verdict::SKIPPED);

  // a base point lies on H but H is singular there
  const AlgPoint& bp = P.base.front();
  AlgValue t0{bp.K, bp.K.embed_base(F.from_u64(5))};
  CHECK(thrown_code([&] { member_contact_at(hc, P, t0, bp); }) == Err::SingularPoint);

  // a random off-curve point is rejected
  AlgPoint off = affine_point(K, K.embed_base(F.from_u64(123)), K.embed_base(F.from_u64(456)));
  AlgValue t1{K, K.embed_base(F.from_u64(5))};
  if (!K.is_zero(point_eval(hc.H, off)))
    CHECK(thrown_code([&] { member_contact_at(hc, P, t1, off); }) == Err::BadInput);
}
