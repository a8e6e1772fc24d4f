#include "hessec/flexes.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace hessec {

namespace {

UPoly<ExtField> embed_up(const ExtField& K, const FpPoly& a) {
  std::vector<ExtField::Elem> c;
  c.reserve(a.c.size());
  for (auto& v : a.c) c.push_back(K.embed_base(v));
  return upoly(K, std::move(c));
}

// det Hess(F0 + t F1) at a rational parameter, as an honest form
Form hessian_member_form(const std::array<Form, 4>& hp, const PrimeField& F,
                         const PrimeField::Elem& t0) {
  Form h = hp[0];
  auto tp = F.one();
  for (int k = 1; k < 4; ++k) {
    tp = F.mul(tp, t0);
    if (!hp[k].zero()) h = form_add(h, form_scale(hp[k], tp));
  }
  return h;
}

// z = 1 chart of the member Hessian over an extension parameter
BiPoly<ExtField> hessian_chart_ext(const std::array<Form, 4>& hp, const ExtField& K,
                                   const ExtField::Elem& t0) {
  BiPoly<ExtField> out{K, {}};
  auto tp = K.one();
  for (int k = 0; k < 4; ++k) {
    if (k) tp = K.mul(tp, t0);
    if (hp[k].zero()) continue;
    out = bipoly_add(out, bipoly_scale(bipoly_embed(bipoly_z1(hp[k]), K), tp));
  }
  return out;
}

// resolve the unique common ordinate over one abscissa: the radical of the
// fibre gcd must be linear (tangency can thicken the gcd, never widen it)
template <class F>
bool unique_ordinate(const UPoly<F>& qf, const UPoly<F>& qh, typename F::Elem& y0) {
  if (qf.zero() || qh.zero()) return false;
  auto s = upoly_gcd(qf, qh);
  if (s.deg() < 1) return false;
  if (s.deg() > 1) s = upoly_squarefree_part(s);
  if (s.deg() != 1) return false;
  y0 = qf.f.neg(upoly_monic(s).c[0]);
  return true;
}

}  // namespace

int tangent_multiplicity_at(const Form& g, const AlgPoint& P) {
  if (g.zero()) fail(Err::ZeroInput, "tangent multiplicity on the zero form");
  const PrimeField& F = g.f;
  const ExtField& K = P.K;
  if (!K.base().same(F)) fail(Err::FieldMismatch, "point and curve fields disagree");
  if (!K.is_zero(P.z)) return tangent_multiplicity(g, K, P.x, P.y);
  // move the point off z = 0 by swapping z with a unit coordinate
  Mat3 M;
  for (auto& row : M.m)
    for (auto& e : row) e = F.zero();
  if (!K.is_zero(P.y)) {  // (x0 : 1 : 0) becomes (x0, 0) in the chart g(x, z, y)
    M.m[0][0] = F.one();
    M.m[1][2] = F.one();
    M.m[2][1] = F.one();
    return tangent_multiplicity(compose_linear(g, M), K, P.x, K.zero());
  }
  // (1 : 0 : 0) becomes (0, 0) in the chart g(z, y, x)
  M.m[0][2] = F.one();
  M.m[1][1] = F.one();
  M.m[2][0] = F.one();
  return tangent_multiplicity(compose_linear(g, M), K, K.zero(), K.zero());
}

std::vector<MemberFlex> flexes_of_form(const Form& g) {
  if (g.zero()) fail(Err::ZeroInput, "flexes of the zero form");
  const PrimeField& F = g.f;
  const int d = g.d;
  if (d < 3) fail(Err::DegreeTooSmall, "inflection theory needs degree at least 3");
  if (!detail::form_smooth_cert(g))
    fail(Err::MemberSingular, "the member fails its smoothness certificate");
  Form h = hessian_det(g);
  if (h.zero()) fail(Err::FlexCountMismatch, "the Hessian determinant vanishes identically");

  std::vector<AlgPoint> pts;
  try {
    pts = intersection_points(F, g, h);
  } catch (const Error& e) {
    if (e.code() == Err::NonReducedBaseLocus)
      fail(Err::FlexCountMismatch, "a thick flex fibre resists resolution in one extension");
    throw;
  }

  std::vector<MemberFlex> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    int m = tangent_multiplicity_at(g, p);
    if (m < 3) fail(Err::FlexCountMismatch, "the Hessian vanished at a non-inflection point");
    out.push_back({p, m});
  }
  const int expect = 3 * d * (d - 2);
  if ((int)out.size() != expect)
    fail(Err::FlexCountMismatch, "certified " + std::to_string(out.size()) + " flexes where " +
                                     std::to_string(expect) + " were expected");
  return out;
}

FlexSet flexes_of_member(const Pencil& P, Param t) {
  FlexSet out;
  out.t = t;
  out.points = flexes_of_form(member(P, t));
  return out;
}

NodalFlexes nodal_member_flexes(const Pencil& P, const SingularFiber& sf) {
  const PrimeField& F = P.F;
  const int d = P.d;
  if (d < 3) fail(Err::DegreeTooSmall, "inflection theory needs degree at least 3");
  if (P.F0.zero() || P.F1.zero() || P.F0.d != d || P.F1.d != d)
    fail(Err::BadInput, "malformed pencil");
  const ExtField& K = sf.t.K;
  const ExtField::Elem& t0 = sf.t.v;
  if (K.is_zero(sf.node.z)) fail(Err::BadInput, "the node is expected in the affine chart");
  const int hd = 3 * (d - 2);
  const int n = 3 * d * (d - 2);
  auto hp = hessian_pencil(P.F0, P.F1);

  auto fhat = detail::member_chart_ext(P, K, t0, false);
  auto hhat = hessian_chart_ext(hp, K, t0);
  if (fhat.degv() != d || hhat.degv() != hd)
    fail(Err::UnexpectedFlexDeficit, "a chart loses degree on the nodal member");

  // the member must meet its Hessian nowhere on z = 0, or Bezout bookkeeping
  // in the affine chart cannot close
  {
    auto ginf = upoly_add(embed_up(K, form_z0_upoly(P.F0, true)),
                          upoly_scale(embed_up(K, form_z0_upoly(P.F1, true)), t0));
    auto hinf = upoly_zero(K);
    auto cf = K.zero(), ch = K.zero();
    cf = K.add(K.embed_base(form_coeff(P.F0, d, 0, 0)),
               K.mul(t0, K.embed_base(form_coeff(P.F1, d, 0, 0))));
    auto tp = K.one();
    for (int k = 0; k < 4; ++k) {
      if (k) tp = K.mul(tp, t0);
      if (hp[k].zero()) continue;
      hinf = upoly_add(hinf, upoly_scale(embed_up(K, form_z0_upoly(hp[k], true)), tp));
      ch = K.add(ch, K.mul(tp, K.embed_base(form_coeff(hp[k], hd, 0, 0))));
    }
    if (ginf.zero() || hinf.zero() || upoly_gcd(ginf, hinf).deg() >= 1)
      fail(Err::UnexpectedFlexDeficit, "the nodal member meets its Hessian on z = 0");
    if (K.is_zero(cf) && K.is_zero(ch))
      fail(Err::UnexpectedFlexDeficit, "the nodal member meets its Hessian at (1 : 0 : 0)");
  }

  // Bezout-exact flex eliminant over the node's field
  auto PK = resultant_v(fhat, hhat, d, hd, d * hd);
  if (PK.deg() != n)
    fail(Err::UnexpectedFlexDeficit, "the flex eliminant misses its Bezout degree");

  // the node absorbs intersection order exactly 6...
  auto lin = upoly(K, {K.neg(sf.node.x), K.one()});
  UPoly<ExtField> Q = PK;
  int ord = 0;
  while (true) {
    auto qr = upoly_divrem(Q, lin);
    if (!qr.r.zero()) break;
    Q = std::move(qr.q);
    ++ord;
  }
  if (ord != 6)
    fail(Err::UnexpectedFlexDeficit, "the member meets its Hessian with order " +
                                         std::to_string(ord) + " at the node, not 6");
  // ...and what remains is 3d(d-2) - 6 transverse contacts at distinct abscissas
  if (!upoly_is_squarefree(Q))
    fail(Err::UnexpectedFlexDeficit, "the smooth flexes of the nodal member collide");

  NodalFlexes out;
  out.count = n - 6;
  out.node_order = ord;

  auto enumerate_in_K = [&]() {
    for (auto& [x0, mu] : roots_in_field(Q)) {
      (void)mu;
      ExtField::Elem y0;
      if (!unique_ordinate(bipoly_at_u(fhat, x0), bipoly_at_u(hhat, x0), y0))
        fail(Err::UnexpectedFlexDeficit, "a flex fibre fails to resolve to one point");
      int m = member_tangent_multiplicity(P.F0, P.F1, K, t0, x0, y0);
      if (m < 3) fail(Err::UnexpectedFlexDeficit, "a certified abscissa is not an inflection");
      out.points.push_back({affine_point(K, x0, y0), m});
    }
    out.complete = (int)out.points.size() == out.count;
  };

  if (K.degree() == 1) {
    // rational member: honest forms, full enumeration over explicit extensions
    try {
      const auto& t0p = t0[0];
      Form g = form_add(P.F0, form_scale(P.F1, t0p));
      Form h = hessian_member_form(hp, F, t0p);
      auto b0 = bipoly_z1(g), b1 = bipoly_z1(h);
      std::vector<PrimeField::Elem> qc;
      qc.reserve(Q.c.size());
      for (auto& e : Q.c) qc.push_back(e[0]);
      for (auto& rt : all_roots(upoly(F, std::move(qc)), Rng(P.seed).child("nodalflex"))) {
        const ExtField& L = rt.K;
        ExtField::Elem y0;
        if (!unique_ordinate(bipoly_at_u_ext(b0, L, rt.v), bipoly_at_u_ext(b1, L, rt.v), y0))
          fail(Err::UnexpectedFlexDeficit, "a flex fibre fails to resolve to one point");
        int m = tangent_multiplicity(g, L, rt.v, y0);
        if (m < 3) fail(Err::UnexpectedFlexDeficit, "a certified abscissa is not an inflection");
        out.points.push_back({affine_point(L, rt.v, y0), m});
      }
      out.complete = true;
    } catch (const Error& e) {
      if (e.code() != Err::ExtensionTooLarge) throw;
      out.points.clear();
      enumerate_in_K();  // keep at least the rational flexes
    }
  } else {
    enumerate_in_K();
  }

  std::sort(out.points.begin(), out.points.end(), [](const MemberFlex& a, const MemberFlex& b) {
    return point_key(a.pt) < point_key(b.pt);
  });
  return out;
}

Census hyperflex_census(const Pencil& P, const std::string& cache_path) {
  const PrimeField& F = P.F;
  const int d = P.d;
  if (d < 3) fail(Err::DegreeTooSmall, "inflection theory needs degree at least 3");
  if (P.F0.zero() || P.F1.zero() || P.F0.d != d || P.F1.d != d)
    fail(Err::BadInput, "malformed pencil");
  const int hd = 3 * (d - 2);
  const int expect = 6 * (d - 3) * (3 * d - 2);
  auto hp = hessian_pencil(P.F0, P.F1);

  // the family charts must keep their leading y-coefficients for the fixed
  // Sylvester shape to stay honest across the parameter line
  bool hlc = false;
  for (int k = 0; k < 4; ++k)
    if (!F.is_zero(form_coeff(hp[k], 0, hd, 0))) hlc = true;
  if ((F.is_zero(form_coeff(P.F0, 0, d, 0)) && F.is_zero(form_coeff(P.F1, 0, d, 0))) || !hlc)
    fail(Err::DegeneratePencil, "a family chart loses its leading y-coefficient");

  BiPoly<PrimeField> b0 = bipoly_z1(P.F0), b1 = bipoly_z1(P.F1);
  std::array<BiPoly<PrimeField>, 4> hc;
  for (int k = 0; k < 4; ++k) hc[k] = bipoly_z1(hp[k]);

  // flex eliminant of the family: Res_y(f_t, h_t) as a bivariate in (t, x),
  // interpolated over a rational t-grid with the Sylvester shape held fixed
  const int tbP = 6 * d - 6;  // hd rows linear in t plus d rows cubic in t
  const int xbP = d * hd;
  const int totP = tbP + 1 + 8;
  if (F.p <= uint64_t(totP) + 1) fail(Err::TooSmall, "field too small for the parameter grid");
  std::vector<PrimeField::Elem> ts(totP);
  std::vector<FpPoly> vals;
  vals.reserve(totP);
  int nx = -1;
  for (int i = 0; i < totP; ++i) {
    auto tau = F.from_u64((uint64_t)i);
    auto ft = bipoly_add(b0, bipoly_scale(b1, tau));
    BiPoly<PrimeField> ht{F, {}};
    auto tp = F.one();
    for (int k = 0; k < 4; ++k) {
      if (k) tp = F.mul(tp, tau);
      if (!hc[k].co.empty()) ht = bipoly_add(ht, bipoly_scale(hc[k], tp));
    }
    ts[i] = tau;
    vals.push_back(resultant_v(ft, ht, d, hd, xbP));
    nx = std::max(nx, vals.back().deg());
  }
  if (nx < 1) fail(Err::DegeneratePencil, "the family flex eliminant degenerates");
  BiPoly<PrimeField> PP{F, {}};
  {
    std::vector<PrimeField::Elem> ys(totP);
    for (int j = 0; j <= nx; ++j) {
      for (int i = 0; i < totP; ++i) ys[i] = j <= vals[i].deg() ? vals[i].c[j] : F.zero();
      FpPoly co = upoly_interpolate(F, ts, ys);
      if (co.deg() > tbP)
        fail(Err::DegreeBoundViolated, "flex eliminant exceeded its parameter degree bound");
      PP.co.push_back(std::move(co));
    }
    PP = bipoly_trim(std::move(PP));
  }
  const int N = PP.degv();
  if (N < 1) fail(Err::DegeneratePencil, "the family flex eliminant degenerates");

  // discriminant of the eliminant in x as one polynomial in t, sampled on a
  // grid that can stream into (and resume from) a cache file
  const int tbD = (2 * N - 1) * tbP;
  const uint64_t totD = (uint64_t)tbD + 1 + 8;
  if (F.p <= totD + 1) fail(Err::TooSmall, "field too small for the parameter grid");
  std::vector<char> have(totD, 0);
  std::vector<PrimeField::Elem> dval(totD, F.zero());
  const std::string header = "# hessec-disc p=" + std::to_string(F.p) +
                             " d=" + std::to_string(d) + " seed=" + std::to_string(P.seed) +
                             " bound=" + std::to_string(tbD);
  bool fresh = true;
  if (!cache_path.empty()) {
    std::ifstream in(cache_path);
    std::string line;
    if (in && std::getline(in, line) && line == header) {
      fresh = false;
      uint64_t idx = 0, v = 0;
      while (std::getline(in, line)) {
        std::istringstream ls(line);
        if ((ls >> idx >> v) && idx < totD && v < F.p) {
          dval[idx] = F.from_u64(v);
          have[idx] = 1;
        }
      }
    }
  }
  std::ofstream app;
  if (!cache_path.empty()) {
    app.open(cache_path, fresh ? std::ios::trunc : std::ios::app);
    if (fresh && app.is_open()) app << header << '\n';
  }
  for (uint64_t i = 0; i < totD; ++i) {
    if (have[i]) continue;
    FpPoly Pt = bipoly_at_u(PP, F.from_u64(i));
    std::vector<PrimeField::Elem> A(N + 1, F.zero()), B(N, F.zero());
    for (int j = 0; j <= Pt.deg(); ++j) A[j] = Pt.c[j];
    for (int j = 0; j < N; ++j) B[j] = F.mul(F.from_u64((uint64_t)j + 1), A[j + 1]);
    dval[i] = sylvester_det(F, std::move(A), std::move(B));
    have[i] = 1;
    if (app.is_open()) {
      app << i << '\t' << F.to_u64(dval[i]) << '\n';
      app.flush();
    }
  }
  std::vector<PrimeField::Elem> gxs(totD);
  for (uint64_t i = 0; i < totD; ++i) gxs[i] = F.from_u64(i);
  FpPoly Dflex = upoly_interpolate(F, gxs, dval);
  if (Dflex.deg() > tbD)
    fail(Err::DegreeBoundViolated, "flex discriminant exceeded its parameter degree bound");
  if (Dflex.zero()) fail(Err::CensusCountMismatch, "the flex discriminant vanishes identically");

  // the certified singular parameters are discriminant roots by construction;
  // strip them completely before hunting for hyperflexes
  {
    std::set<std::vector<uint64_t>> seen;
    FpPoly sing = upoly_const(F, F.one());
    for (auto& fb : P.fibers) {
      FpPoly mp = minimal_polynomial(fb.t.K, fb.t.v);
      if (seen.insert(upoly_canonical_key(mp)).second) sing = upoly_mul(sing, mp);
    }
    if (sing.deg() >= 1) {
      FpPoly g = upoly_gcd(Dflex, sing);
      while (g.deg() >= 1) {
        Dflex = upoly_divrem(Dflex, g).q;
        if (Dflex.deg() < 1) break;
        g = upoly_gcd(Dflex, sing);
      }
    }
  }

  Census out;
  if (Dflex.deg() < 1) {
    if (expect != 0)
      fail(Err::CensusCountMismatch, "no hyperflex candidates where " + std::to_string(expect) +
                                         " members were expected");
    return out;
  }

  // candidate parameters; factors beyond the extension cap can only matter
  // when they are small enough to consist of census parameters at all
  FpPoly keep = upoly_const(F, F.one());
  for (auto& [m, piece] : upoly_ddf(upoly_squarefree_part(Dflex))) {
    if (m <= 64)
      keep = upoly_mul(keep, piece);
    else if (m <= expect)
      out.complete = false;
  }

  std::vector<AlgValue> cands;
  if (keep.deg() >= 1) cands = all_roots(keep, Rng(P.seed).child("census"));
  for (auto& rt : cands) {
    const ExtField& K = rt.K;
    const ExtField::Elem& t0 = rt.v;
    // a hyperflex member shows one multiple-contact abscissa; anything else
    // (transverse members, lc degenerations, flex collisions) is discarded
    auto Pt = bipoly_at_u_ext(PP, K, t0);
    if (Pt.deg() < 1) continue;
    auto s = upoly_gcd(Pt, upoly_derivative(Pt));
    if (s.deg() < 1) continue;
    if (s.deg() > 1) s = upoly_squarefree_part(s);
    if (s.deg() != 1) continue;
    auto xs = K.neg(upoly_monic(s).c[0]);
    auto fhat = detail::member_chart_ext(P, K, t0, false);
    auto hhat = hessian_chart_ext(hp, K, t0);
    ExtField::Elem ys;
    if (!unique_ordinate(bipoly_at_u(fhat, xs), bipoly_at_u(hhat, xs), ys)) continue;
    if (!member_smooth_at(P.F0, P.F1, K, t0, xs, ys, K.one())) continue;
    int m = 0;
    try {
      m = member_tangent_multiplicity(P.F0, P.F1, K, t0, xs, ys);
    } catch (const Error&) {
      continue;  // singular or degenerate contact: not a hyperflex member
    }
    if (m < 4) continue;
    out.records.push_back({AlgValue{K, t0}, affine_point(K, xs, ys), m});
  }
  if (out.complete && (int)out.records.size() != expect)
    fail(Err::CensusCountMismatch, "certified " + std::to_string(out.records.size()) +
                                       " hyperflex members where " + std::to_string(expect) +
                                       " were expected");
  return out;
}

std::vector<BasePointFlexes> base_point_flexes(const Pencil& P) {
  if (P.F0.zero() || P.F1.zero()) fail(Err::ZeroInput, "malformed pencil");
  auto hp = hessian_pencil(P.F0, P.F1);
  std::vector<BasePointFlexes> out;
  out.reserve(P.base.size());
  for (size_t i = 0; i < P.base.size(); ++i) {
    const AlgPoint& pt = P.base[i];
    const ExtField& K = pt.K;
    BasePointFlexes rec;
    rec.index = i;
    std::vector<ExtField::Elem> cc;
    for (int k = 0; k < 4; ++k) cc.push_back(point_eval(hp[k], pt));
    auto c = upoly(K, std::move(cc));
    if (c.zero()) {  // every member inflects here; nothing discrete to report
      rec.complete = false;
      out.push_back(rec);
      continue;
    }
    if (c.deg() < 3) {  // the t = infinity member has vanishing Hessian here
      try {
        rec.infinity_flex = tangent_multiplicity_at(P.F1, pt) >= 3;
      } catch (const Error&) {
        rec.infinity_flex = false;
      }
    }
    if (c.deg() >= 1) {
      if (K.is_zero(pt.z)) {
        rec.complete = false;  // outside the affine tangent chart
      } else {
        int covered = 0;
        for (auto& [t0, mu] : roots_in_field(c)) {
          covered += mu;
          int m = 0;
          try {
            m = member_tangent_multiplicity(P.F0, P.F1, K, t0, pt.x, pt.y);
          } catch (const Error&) {
            continue;
          }
          if (m >= 3) rec.params.push_back(t0);
        }
        rec.complete = covered == c.deg();
      }
    }
    out.push_back(rec);
  }
  return out;
}

}  // namespace hessec
