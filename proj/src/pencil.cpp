#include "hessec/pencil.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace hessec {

namespace {

// gcd that tolerates one zero input (gcd(0,0) stays the caller's hazard)
template <class F>
UPoly<F> gcd0(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.zero()) return upoly_monic(b);
  if (b.zero()) return upoly_monic(a);
  return upoly_gcd(a, b);
}

UPoly<ExtField> upoly_embed_ext(const ExtField& K, const FpPoly& a) {
  std::vector<ExtField::Elem> c;
  c.reserve(a.c.size());
  for (auto& v : a.c) c.push_back(K.embed_base(v));
  return upoly(K, std::move(c));
}

void check_pencil_shape(const Pencil& P) {
  if (P.F0.zero() || P.F1.zero()) fail(Err::ZeroInput, "pencil generator is the zero form");
  if (!P.F0.f.same(P.F) || !P.F1.f.same(P.F))
    fail(Err::FieldMismatch, "pencil generators live over different fields");
  if (P.F0.d != P.d || P.F1.d != P.d)
    fail(Err::DegreeMismatch, "generator degree disagrees with the pencil degree");
}

bool forms_proportional(const Form& A, const Form& B) {
  const PrimeField& F = A.f;
  if (A.zero() || B.zero()) return true;
  auto& [m0, v0] = *A.t.begin();
  auto it = B.t.find(m0);
  if (it == B.t.end()) return false;
  return form_eq(B, form_scale(A, F.mul(it->second, F.inv(v0))));
}

// Declared-span y-resultant of the member f_t = b0 + t b1 against its V- or
// U-derivative, assembled as a bivariate in (U = t, V = chart abscissa) by
// interpolation over a t-grid.  The Sylvester shape (d, d-1) is held fixed
// across the grid, so every sample is the value of one polynomial family.
BiPoly<PrimeField> member_elim_family(const BiPoly<PrimeField>& b0, const BiPoly<PrimeField>& b1,
                                      int d, bool deriv_u_rows) {
  const PrimeField& F = b0.f;
  const int tb = 2 * d - 1;              // d-1 rows linear in t plus d rows linear in t
  const int xb = 2 * d * (d - 1);        // abscissa degree of the determinant
  const int total = tb + 1 + 8;          // fit plus consistency margin
  if (F.p <= uint64_t(total) + 1) fail(Err::TooSmall, "field too small for the parameter grid");
  std::vector<PrimeField::Elem> ts(total);
  std::vector<FpPoly> vals;
  vals.reserve(total);
  int nx = -1;
  for (int i = 0; i < total; ++i) {
    auto tau = F.from_u64((uint64_t)i);
    auto ft = bipoly_add(b0, bipoly_scale(b1, tau));
    auto dft = deriv_u_rows ? bipoly_deriv_u(ft) : bipoly_deriv_v(ft);
    ts[i] = tau;
    vals.push_back(resultant_v(ft, dft, d, d - 1, xb));
    nx = std::max(nx, vals.back().deg());
  }
  BiPoly<PrimeField> G{F, {}};
  if (nx < 0) return G;
  std::vector<PrimeField::Elem> ys(total);
  for (int j = 0; j <= nx; ++j) {
    for (int i = 0; i < total; ++i)
      ys[i] = j <= vals[i].deg() ? vals[i].c[j] : F.zero();
    FpPoly co = upoly_interpolate(F, ts, ys);
    if (co.deg() > tb)
      fail(Err::DegreeBoundViolated, "member eliminant exceeded its parameter degree bound");
    G.co.push_back(std::move(co));
  }
  return bipoly_trim(std::move(G));
}

// Fixed-shape resultant of G(t,.) against its abscissa derivative,
// interpolated over t.  Vanishes at every t whose member eliminant has a
// multiple root (in particular at every singular parameter).
FpPoly family_disc(const BiPoly<PrimeField>& G, int tdeg) {
  const PrimeField& F = G.f;
  const int N = G.degv();
  const int tb = (2 * N - 1) * tdeg;
  const int total = tb + 1 + 8;
  if (F.p <= uint64_t(total) + 1) fail(Err::TooSmall, "field too small for the parameter grid");
  std::vector<PrimeField::Elem> ts(total), ys(total);
  for (int i = 0; i < total; ++i) {
    auto tau = F.from_u64((uint64_t)i);
    FpPoly Pt = bipoly_at_u(G, tau);
    std::vector<PrimeField::Elem> A(N + 1, F.zero()), B(N, F.zero());
    for (int j = 0; j <= Pt.deg(); ++j) A[j] = Pt.c[j];
    for (int j = 0; j < N; ++j) B[j] = F.mul(F.from_u64((uint64_t)j + 1), A[j + 1]);
    ts[i] = tau;
    ys[i] = sylvester_det(F, A, B);
  }
  FpPoly D = upoly_interpolate(F, ts, ys);
  if (D.deg() > tb)
    fail(Err::DegreeBoundViolated, "double discriminant exceeded its parameter degree bound");
  return D;
}

// No singular point of f_t0 on the line z = 0: the three partials, restricted
// to z = 0, share no projective root.
bool member_infinity_smooth(const Pencil& P, const ExtField& K, const ExtField::Elem& t0) {
  UPoly<ExtField> g = upoly_zero(K);
  bool corner_zero = true;
  for (int var = 0; var < 3; ++var) {
    Form p0 = form_partial(P.F0, var), p1 = form_partial(P.F1, var);
    auto w = upoly_add(upoly_embed_ext(K, form_z0_upoly(p0, true)),
                       upoly_scale(upoly_embed_ext(K, form_z0_upoly(p1, true)), t0));
    if (!w.zero()) g = g.zero() ? upoly_monic(w) : upoly_gcd(g, w);
    auto corner = K.add(K.embed_base(form_coeff(p0, P.d - 1, 0, 0)),
                        K.mul(t0, K.embed_base(form_coeff(p1, P.d - 1, 0, 0))));
    if (!K.is_zero(corner)) corner_zero = false;
  }
  if (g.zero() || g.deg() >= 1) return false;  // common root at some (x : 1 : 0)
  return !corner_zero;                         // (1 : 0 : 0)
}

bool retryable(Err c) {
  switch (c) {
    case Err::DegeneratePencil:
    case Err::NonReducedBaseLocus:
    case Err::WrongSingularCount:
    case Err::NonNodalFiber:
    case Err::MemberSingular:
    case Err::DegreeBoundViolated:
    case Err::NotSquarefree:
    case Err::DuplicateAbscissa:
    case Err::CharacteristicHazard:
    case Err::ExtensionTooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace

namespace detail {

std::pair<BiPoly<PrimeField>, BiPoly<PrimeField>> pencil_charts(const Pencil& P, bool swap_xy) {
  return {bipoly_z1(P.F0, swap_xy), bipoly_z1(P.F1, swap_xy)};
}

BiPoly<ExtField> member_chart_ext(const Pencil& P, const ExtField& K, const ExtField::Elem& t0,
                                  bool swap_xy) {
  auto e0 = bipoly_embed(bipoly_z1(P.F0, swap_xy), K);
  auto e1 = bipoly_embed(bipoly_z1(P.F1, swap_xy), K);
  return bipoly_add(e0, bipoly_scale(e1, t0));
}

bool form_smooth_cert(const Form& g) {
  const PrimeField& F = g.f;
  if (g.zero()) return false;
  const int d = g.d;
  if (d < 1) return false;
  if (d == 1) return true;
  // affine chart: the abscissa eliminants of (g, g_y) and (g, g_x) must not
  // share a root; a constant gcd certifies an empty affine singular locus
  BiPoly<PrimeField> b = bipoly_z1(g);
  if (b.co.empty() || b.degv() < 1) return false;
  BiPoly<PrimeField> bx = bipoly_deriv_u(b), by = bipoly_deriv_v(b);
  FpPoly r1 = bipoly_resultant_v_exact(b, by, b.degv(), by.degv());
  if (r1.zero()) return false;
  if (bx.co.empty()) {
    if (r1.deg() >= 1) return false;
  } else {
    FpPoly r2 = bipoly_resultant_v_exact(b, bx, b.degv(), bx.degv());
    if (r2.zero() || upoly_gcd(r1, r2).deg() >= 1) return false;
  }
  // line z = 0: the three partials may not share a root there
  FpPoly ginf = upoly_zero(F);
  bool corner_zero = true;
  for (int var = 0; var < 3; ++var) {
    Form pg = form_partial(g, var);
    FpPoly w = form_z0_upoly(pg, true);
    if (!w.zero()) ginf = ginf.zero() ? upoly_monic(w) : upoly_gcd(ginf, w);
    if (!F.is_zero(form_coeff(pg, d - 1, 0, 0))) corner_zero = false;
  }
  if (ginf.zero() || ginf.deg() >= 1 || corner_zero) return false;
  return true;
}

}  // namespace detail

Form member(const Pencil& P, Param t) {
  check_pencil_shape(P);
  if (t.infinite) return P.F1;
  return form_add(P.F0, form_scale(P.F1, t.v));
}

std::vector<AlgPoint> intersection_points(const PrimeField& F, const Form& A, const Form& B) {
  if (A.zero() || B.zero()) fail(Err::ZeroInput, "intersecting with the zero form");
  if (!A.f.same(F) || !B.f.same(F)) fail(Err::FieldMismatch, "curve field mismatch");
  Rng rng(0x626173657074ull ^ F.p);

  std::vector<AlgPoint> out;

  // line z = 0: common roots of the two restricted binary forms
  FpPoly a0 = form_z0_upoly(A, true), a1 = form_z0_upoly(B, true);
  if (a0.zero() && a1.zero())
    fail(Err::DegeneratePencil, "both curves contain the line z = 0");
  FpPoly ginf = gcd0(a0, a1);
  if (ginf.deg() >= 1)
    for (auto& rt : all_roots(upoly_squarefree_part(ginf), rng.child("inf")))
      out.push_back(make_point(rt.K, rt.v, rt.K.one(), rt.K.zero()));
  if (F.is_zero(form_coeff(A, A.d, 0, 0)) && F.is_zero(form_coeff(B, B.d, 0, 0))) {
    ExtField K = wrap_base(F);
    out.push_back(make_point(K, K.one(), K.zero(), K.zero()));
  }

  // affine chart: eliminate y exactly, then resolve each abscissa
  BiPoly<PrimeField> b0 = bipoly_z1(A), b1 = bipoly_z1(B);
  if (!b0.co.empty() && !b1.co.empty()) {
    FpPoly r = bipoly_resultant_v_exact(b0, b1, b0.degv(), b1.degv());
    if (r.zero()) fail(Err::DegeneratePencil, "the curves share a component");
    if (r.deg() >= 1) {
      for (auto& rt : all_roots(upoly_squarefree_part(r), rng.child("affine"))) {
        const ExtField& K = rt.K;
        auto q0 = bipoly_at_u_ext(b0, K, rt.v);
        auto q1 = bipoly_at_u_ext(b1, K, rt.v);
        if (q0.zero() && q1.zero())
          fail(Err::DegeneratePencil, "the curves share a vertical line");
        auto g = gcd0(q0, q1);
        if (g.deg() == 0) continue;  // leading coefficients conspired; no point here
        if (g.deg() == 1) {
          out.push_back(affine_point(K, rt.v, K.neg(g.c[0])));
        } else if (K.degree() == 1) {
          // several points over one rational abscissa: factor the fibre anew
          std::vector<PrimeField::Elem> cc;
          for (auto& e : g.c) cc.push_back(e[0]);
          auto x0 = rt.v[0];
          for (auto& yr :
               all_roots(upoly_squarefree_part(upoly(F, cc)), rng.child("fibre", out.size())))
            out.push_back(affine_point(yr.K, yr.K.embed_base(x0), yr.v));
        } else {
          // a thick fibre over an irrational abscissa: only K-rational
          // ordinates are reachable without towers
          auto rts = roots_in_field(g);
          int covered = 0;
          for (auto& [y0, m] : rts) covered += m;
          if (covered != g.deg())
            fail(Err::NonReducedBaseLocus,
                 "a multiple base abscissa cannot be resolved inside one extension");
          for (auto& [y0, m] : rts) out.push_back(affine_point(K, rt.v, y0));
        }
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const AlgPoint& a, const AlgPoint& b) { return point_key(a) < point_key(b); });
  return out;
}

std::vector<AlgPoint> base_points(const PrimeField& F, const Form& F0, const Form& F1) {
  if (F0.zero() || F1.zero()) fail(Err::ZeroInput, "pencil generator is the zero form");
  if (!F0.f.same(F) || !F1.f.same(F)) fail(Err::FieldMismatch, "generator field mismatch");
  if (F0.d != F1.d) fail(Err::DegreeMismatch, "generators of different degree span no pencil");
  return intersection_points(F, F0, F1);
}

std::vector<SingularFiber> singular_parameters(const Pencil& P) {
  check_pencil_shape(P);
  const PrimeField& F = P.F;
  const int d = P.d;
  if (d < 2) fail(Err::DegreeTooSmall, "members of degree at least 2 required");
  if (F.is_zero(form_coeff(P.F0, 0, d, 0)) && F.is_zero(form_coeff(P.F1, 0, d, 0)))
    fail(Err::DegeneratePencil, "no member attains full degree in y; the chart degenerates");
  if (F.is_zero(form_coeff(P.F0, d, 0, 0)) && F.is_zero(form_coeff(P.F1, d, 0, 0)))
    fail(Err::DegeneratePencil, "no member attains full degree in x; the chart degenerates");

  auto [b0, b1] = detail::pencil_charts(P, false);
  auto [s0, s1] = detail::pencil_charts(P, true);

  BiPoly<PrimeField> Gy = member_elim_family(b0, b1, d, false);  // Res_y(f_t, df/dy)
  BiPoly<PrimeField> Gm = member_elim_family(b0, b1, d, true);   // Res_y(f_t, df/dx)
  BiPoly<PrimeField> Gx = member_elim_family(s0, s1, d, false);  // Res_x(f_t, df/dx)
  if (Gy.co.empty() || Gx.co.empty() || Gy.degv() < 1 || Gx.degv() < 1)
    fail(Err::DegeneratePencil, "the member eliminant degenerates in a chart");

  FpPoly D = family_disc(Gy, 2 * d - 1);
  FpPoly E = family_disc(Gx, 2 * d - 1);
  if (D.zero() || E.zero())
    fail(Err::DegeneratePencil, "the double discriminant vanishes identically");

  const int expect = 3 * (d - 1) * (d - 1);
  FpPoly S = upoly_gcd(D, E);
  if (S.deg() < 1)
    fail(Err::WrongSingularCount, "no candidate singular parameters survive both charts");
  FpPoly S0 = upoly_squarefree_part(S);

  // spurious discriminant factors can be huge; true parameters generate
  // factors no larger than the fibre count (and extensions are capped)
  const int cap = std::min(64, expect);
  FpPoly keep = upoly_const(F, F.one());
  for (auto& [m, piece] : upoly_ddf(S0))
    if (m <= cap) keep = upoly_mul(keep, piece);
  if (keep.deg() < 1)
    fail(Err::WrongSingularCount, "no resolvable candidate singular parameters");

  std::vector<SingularFiber> out;
  for (auto& rt : all_roots(keep, Rng(P.seed).child("fibers"))) {
    const ExtField& K = rt.K;
    const auto& t0 = rt.v;
    // unique singular abscissa: both eliminants of the member vanish on the
    // abscissas of its singular points, so a degree-1 gcd pins them all
    auto A = bipoly_at_u_ext(Gy, K, t0);
    auto B = bipoly_at_u_ext(Gm, K, t0);
    if (A.zero() || B.zero()) continue;
    auto s = upoly_gcd(A, B);
    if (s.deg() < 1) continue;
    s = upoly_squarefree_part(s);  // the node contributes its abscissa with multiplicity
    if (s.deg() != 1) continue;    // no certifiable abscissa (or several): drop the candidate
    auto x0 = K.neg(s.c[0]);

    // unique ordinate over that abscissa
    auto fhat = detail::member_chart_ext(P, K, t0, false);
    auto qf = bipoly_at_u(fhat, x0);
    auto qfx = bipoly_at_u(bipoly_deriv_u(fhat), x0);
    auto qfy = bipoly_at_u(bipoly_deriv_v(fhat), x0);
    if (qf.zero()) continue;
    auto g3 = qf;
    if (!qfx.zero()) g3 = upoly_gcd(g3, qfx);
    if (!qfy.zero()) g3 = upoly_gcd(g3, qfy);
    if (g3.deg() < 1) continue;
    g3 = upoly_squarefree_part(g3);
    if (g3.deg() != 1) continue;
    auto y0 = K.neg(g3.c[0]);

    // direct verification, then the local certificate
    const auto one = K.one();
    bool on = K.is_zero(member_eval(P.F0, P.F1, K, t0, x0, y0, one));
    for (int var = 0; var < 2 && on; ++var)
      on = K.is_zero(
          member_eval(form_partial(P.F0, var), form_partial(P.F1, var), K, t0, x0, y0, one));
    if (!on) continue;
    LocalStructure ls = member_local_structure(P.F0, P.F1, K, t0, x0, y0);
    if (ls.mult != 2 || !ls.ordinary)
      fail(Err::NonNodalFiber, "a singular member carries a worse singularity than a node");
    if (!member_infinity_smooth(P, K, t0))
      fail(Err::NonNodalFiber, "a singular member degenerates on the line z = 0");
    out.push_back(SingularFiber{AlgValue{K, t0}, affine_point(K, x0, y0), ls});
  }
  if ((int)out.size() != expect)
    fail(Err::WrongSingularCount, "certified " + std::to_string(out.size()) +
                                      " nodal members where " + std::to_string(expect) +
                                      " were expected");
  return out;
}

void validate_lefschetz(Pencil& P) {
  if (P.d < 3) fail(Err::DegreeTooSmall, "pencil members must have degree at least 3");
  check_pencil_shape(P);
  const PrimeField& F = P.F;
  const int d = P.d;
  P.certs = {};
  P.base.clear();
  P.fibers.clear();

  if (forms_proportional(P.F0, P.F1))
    fail(Err::DegeneratePencil, "proportional generators: the base locus is a curve");

  // frame quality: both charts must keep full degree on every member
  if (F.is_zero(form_coeff(P.F0, 0, d, 0)) || F.is_zero(form_coeff(P.F1, 0, d, 0)) ||
      F.is_zero(form_coeff(P.F0, d, 0, 0)) || F.is_zero(form_coeff(P.F1, d, 0, 0)))
    fail(Err::DegeneratePencil, "a generator misses x^d or y^d; the affine charts degenerate");

  // no base point may escape to z = 0
  FpPoly a0 = form_z0_upoly(P.F0, true), a1 = form_z0_upoly(P.F1, true);
  if (upoly_gcd(a0, a1).deg() >= 1)
    fail(Err::NonReducedBaseLocus, "the generators meet on the line z = 0");

  if (!detail::form_smooth_cert(P.F1))
    fail(Err::MemberSingular, "the member at t = infinity fails its smoothness certificate");
  P.certs.frame_ok = true;

  // reduced base locus: squarefree eliminant of full degree d^2 and a single
  // transverse point over each abscissa
  BiPoly<PrimeField> b0 = bipoly_z1(P.F0), b1 = bipoly_z1(P.F1);
  FpPoly r = bipoly_resultant_v_exact(b0, b1, d, d);
  if (r.zero()) fail(Err::DegeneratePencil, "the generators share a component");
  if (r.deg() != d * d)
    fail(Err::NonReducedBaseLocus, "the base eliminant drops degree");
  if (!upoly_is_squarefree(r))
    fail(Err::NonReducedBaseLocus, "the base eliminant is not squarefree");
  std::vector<AlgPoint> base;
  for (auto& rt : all_roots(r, Rng(P.seed).child("base"))) {
    const ExtField& K = rt.K;
    auto q0 = bipoly_at_u_ext(b0, K, rt.v);
    auto q1 = bipoly_at_u_ext(b1, K, rt.v);
    if (q0.zero() || q1.zero()) fail(Err::NonReducedBaseLocus, "degenerate base fibre");
    auto g = upoly_gcd(q0, q1);
    if (g.deg() != 1) fail(Err::NonReducedBaseLocus, "a base point fails transversality");
    auto y0 = K.neg(g.c[0]);
    const auto one = K.one();
    if (!K.is_zero(form_eval(P.F0, K, rt.v, y0, one)) ||
        !K.is_zero(form_eval(P.F1, K, rt.v, y0, one)))
      fail(Err::NonReducedBaseLocus, "a resolved base point misses a generator");
    base.push_back(affine_point(K, rt.v, y0));
  }
  if ((int)base.size() != d * d)
    fail(Err::NonReducedBaseLocus, "base locus does not consist of d^2 points");
  P.base = std::move(base);
  P.certs.base_ok = true;

  P.fibers = singular_parameters(P);
  P.certs.fibers_ok = true;
}

Pencil random_pencil(int d, uint64_t seed, const PrimeField& F) {
  if (d < 3) fail(Err::DegreeTooSmall, "pencil members must have degree at least 3");
  Rng root(seed);
  const int attempts = 20;
  for (int a = 0; a < attempts; ++a) {
    Rng draw = root.child("draw", (uint64_t)a);
    Form A = form_random(F, d, draw);
    Form B = form_random(F, d, draw);
    Mat3 M;
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M.m[i][j] = F.rand_elem(draw);
    } while (F.is_zero(mat3_det(F, M)));
    Pencil P;
    P.d = d;
    P.F = F;
    P.F0 = compose_linear(A, M);
    P.F1 = compose_linear(B, M);
    P.frame = M;
    P.seed = seed;
    bool remixed = false;
    for (;;) {
      try {
        validate_lefschetz(P);
        P.certs.redraws = a;
        P.certs.remixed = remixed;
        return P;
      } catch (const Error& e) {
        if (e.code() == Err::MemberSingular && !remixed) {
          // slide the parameter: a fresh basis of the same pencil whose
          // infinity member is a generic member of the old one
          PrimeField::Elem ca, cb, cc, ce;
          do {
            ca = F.rand_elem(draw);
            cb = F.rand_elem(draw);
            cc = F.rand_nonzero(draw);
            ce = F.rand_elem(draw);
          } while (F.is_zero(F.sub(F.mul(ca, ce), F.mul(cb, cc))));
          Form nf0 = form_add(form_scale(P.F0, ce), form_scale(P.F1, cb));
          Form nf1 = form_add(form_scale(P.F0, cc), form_scale(P.F1, ca));
          P.F0 = std::move(nf0);
          P.F1 = std::move(nf1);
          remixed = true;
          continue;
        }
        if (retryable(e.code())) break;
        throw;
      }
    }
  }
  fail(Err::GenericityExhausted,
       "no pencil passed validation in " + std::to_string(attempts) + " attempts");
}

}  // namespace hessec
