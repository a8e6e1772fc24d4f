#include "hessec/hessecurve.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace hessec {

namespace {

// apply a matrix to a point's coordinate triple over its extension
AlgPoint apply_mat(const Mat3& M, const AlgPoint& P) {
  const ExtField& K = P.K;
  ExtField::Elem w[3];
  const ExtField::Elem* v[3] = {&P.x, &P.y, &P.z};
  for (int i = 0; i < 3; ++i) {
    w[i] = K.zero();
    for (int j = 0; j < 3; ++j) w[i] = K.add(w[i], K.mul(K.embed_base(M.m[i][j]), *v[j]));
  }
  return make_point(K, w[0], w[1], w[2]);
}

bool all_zero(const ExtField& K, const std::array<ExtField::Elem, 3>& v) {
  return K.is_zero(v[0]) && K.is_zero(v[1]) && K.is_zero(v[2]);
}

// cross product vanishes exactly when the two tangent lines coincide
bool gradients_parallel(const ExtField& K, const std::array<ExtField::Elem, 3>& a,
                        const std::array<ExtField::Elem, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    if (!K.is_zero(K.sub(K.mul(a[j], b[k]), K.mul(a[k], b[j])))) return false;
  }
  return true;
}

}  // namespace

HesseCurve hesse_curve(const Pencil& P) {
  const PrimeField& F = P.F;
  if (P.d < 3) fail(Err::DegreeTooSmall, "Hesse curves need members of degree at least 3");
  if (P.F0.zero() || P.F1.zero()) fail(Err::ZeroInput, "pencil generator is the zero form");
  if (!P.F0.f.same(F) || !P.F1.f.same(F)) fail(Err::FieldMismatch, "pencil fields disagree");
  if (P.F0.d != P.d || P.F1.d != P.d) fail(Err::DegreeMismatch, "pencil generators off degree");

  // Res_t(F0 + t F1, h0 + h1 t + h2 t^2 + h3 t^3) for a linear first argument
  // is the cubic evaluated at t = -F0/F1, cleared of denominators.
  auto hp = hessian_pencil(P.F0, P.F1);
  const int D = 6 * (P.d - 1);
  Form H = form_zero(F, D);
  std::array<Form, 4> p0, p1;  // powers of -F0 and of F1
  p0[0] = p1[0] = form_pow(form_zero(F, 0), 0);
  Form mF0 = form_neg(P.F0);
  for (int k = 1; k < 4; ++k) {
    p0[k] = form_mul(p0[k - 1], mF0);
    p1[k] = form_mul(p1[k - 1], P.F1);
  }
  for (int k = 0; k < 4; ++k) {
    if (hp[k].zero()) continue;
    H = form_add(H, form_mul(hp[k], form_mul(p0[k], p1[3 - k])));
  }
  if (H.zero())
    fail(Err::DegenerateHesseCurve, "the closed form collapses to zero");

  // Squarefree certificate: a repeated factor of H forces a repeated factor
  // in every line restriction of full degree, so one good line is a witness;
  // five random lines make an accidental bad line (through a singular point,
  // or tangent) vanishingly unlikely to spoil an honest H.
  Rng rng = Rng(P.seed).child("hessesf");
  for (int line = 0; line < 5; ++line) {
    std::array<PrimeField::Elem, 3> A{F.rand_elem(rng), F.rand_elem(rng), F.rand_elem(rng)};
    std::array<PrimeField::Elem, 3> B{F.rand_elem(rng), F.rand_elem(rng), F.rand_elem(rng)};
    auto r = restrict_line(H, F, A, B);
    if (r.deg() != D)
      fail(Err::DegenerateHesseCurve, "a line restriction drops degree (line " +
                                          std::to_string(line) + ")");
    if (!upoly_is_squarefree(r))
      fail(Err::DegenerateHesseCurve, "a line restriction betrays a repeated factor (line " +
                                          std::to_string(line) + ")");
  }
  return {H, P.d, true};
}

ClauseResult verify_clause_i(const HesseCurve& hc) {
  const long long d = hc.d;
  const long long D = 6 * (d - 1);
  std::ostringstream ev;
  if (hc.H.zero() || hc.H.d != (int)D) {
    ev << "deg H = " << (hc.H.zero() ? 0 : hc.H.d) << " but 6(d-1) = " << D;
    return {Verdict::FAIL, ev.str()};
  }
  const long long pa = (D - 1) * (D - 2) / 2;
  const long long delta_base = 3 * d * d;            // delta = 3 per ordinary triple point
  const long long delta_nodes = 3 * (d - 1) * (d - 1);  // delta = 1 per node
  const long long genus = pa - delta_base - delta_nodes;
  const long long formula = 3 * (4 * d * d - 13 * d + 8) + 1;
  ev << "deg H = " << D << " = 6(d-1); p_a(" << D << ") = " << pa << "; " << pa << " - "
     << delta_base << " - " << delta_nodes << " = " << genus << "; genus formula gives "
     << formula;
  if (genus != formula) return {Verdict::FAIL, ev.str()};
  return {Verdict::PASS, ev.str()};
}

ClauseResult verify_clause_ii(const HesseCurve& hc, const Pencil& P) {
  const PrimeField& F = P.F;
  if (hc.d != P.d || hc.H.zero()) fail(Err::BadInput, "Hesse curve does not match the pencil");
  if (!P.certs.base_ok || !P.certs.fibers_ok)
    fail(Err::BadInput, "the singularity inventory needs a validated pencil");
  const Form& H = hc.H;
  const long long d = P.d;

  for (size_t i = 0; i < P.base.size(); ++i) {
    const AlgPoint& bp = P.base[i];
    if (bp.K.is_zero(bp.z))
      return {Verdict::FAIL, "base point " + std::to_string(i) + " escaped to z = 0"};
    LocalStructure ls = local_structure(H, bp.K, bp.x, bp.y);
    if (ls.mult != 3 || !ls.ordinary) {
      std::ostringstream ev;
      ev << "base point " << i << ": multiplicity " << ls.mult << ", "
         << (ls.ordinary ? "ordinary" : "non-ordinary") << " (want an ordinary triple point)";
      return {Verdict::FAIL, ev.str()};
    }
  }

  for (size_t i = 0; i < P.fibers.size(); ++i) {
    const AlgPoint& nd = P.fibers[i].node;
    if (nd.K.is_zero(nd.z))
      return {Verdict::FAIL, "fiber node " + std::to_string(i) + " escaped to z = 0"};
    LocalStructure ls = local_structure(H, nd.K, nd.x, nd.y);
    if (ls.mult != 2 || !ls.ordinary) {
      std::ostringstream ev;
      ev << "fiber node " << i << ": multiplicity " << ls.mult << ", "
         << (ls.ordinary ? "ordinary" : "non-ordinary") << " (want an ordinary node)";
      return {Verdict::FAIL, ev.str()};
    }
  }

  // Away from the inventory, 50 random points of H must be smooth.  Sample
  // vertical lines and keep the rational intersections.
  std::set<std::pair<uint64_t, uint64_t>> inventory;
  auto note_rational = [&](const AlgPoint& q) {
    if (q.K.degree() == 1 && !q.K.is_zero(q.z))
      inventory.emplace(q.K.canonical(q.x)[0], q.K.canonical(q.y)[0]);
  };
  for (auto& bp : P.base) note_rational(bp);
  for (auto& sf : P.fibers) note_rational(sf.node);

  auto chart = bipoly_z1(H);
  Rng rng = Rng(P.seed).child("hessesample");
  int samples = 0, attempts = 0;
  while (samples < 50 && attempts < 500) {
    ++attempts;
    auto x0 = F.rand_elem(rng);
    auto fy = bipoly_at_u(chart, x0);
    if (fy.zero()) continue;
    for (auto& [y0, mult] : roots_in_field(fy)) {
      if (samples >= 50) break;
      (void)mult;
      if (inventory.count({F.to_u64(x0), F.to_u64(y0)})) continue;
      LocalStructure ls = local_structure(H, F, x0, y0);
      if (ls.mult != 1) {
        std::ostringstream ev;
        ev << "random curve point (" << F.to_u64(x0) << ", " << F.to_u64(y0)
           << ") has multiplicity " << ls.mult << " outside the inventory";
        return {Verdict::FAIL, ev.str()};
      }
      ++samples;
    }
  }
  if (samples < 50)
    return {Verdict::FAIL, "smooth-point sampling starved: " + std::to_string(samples) + "/50"};

  std::ostringstream ev;
  ev << P.base.size() << "/" << d * d << " base points are ordinary triple points; "
     << P.fibers.size() << "/" << 3 * (d - 1) * (d - 1) << " fiber nodes are ordinary; "
     << samples << " random curve points are smooth";
  return {Verdict::PASS, ev.str()};
}

FiberDecomposition fiber_intersection(const HesseCurve& hc, const Pencil& P, Param t) {
  const PrimeField& F = P.F;
  const int d = P.d, DH = 6 * (d - 1);
  if (hc.d != d || hc.H.zero()) fail(Err::BadInput, "Hesse curve does not match the pencil");
  if (!P.certs.base_ok) fail(Err::BadInput, "fiber decomposition needs a validated pencil");
  const Form& H = hc.H;
  Form g = member(P, t);

  FlexSet fx = flexes_of_member(P, t);  // certifies smoothness and the generic flex count

  std::array<Form, 3> dH, dg;
  for (int i = 0; i < 3; ++i) {
    dH[i] = form_partial(H, i);
    dg[i] = form_partial(g, i);
  }

  // Each flex is a transversal contact: both curves smooth there with
  // distinct tangents, so the local intersection order is exactly 1.
  for (auto& mf : fx.points) {
    const AlgPoint& pt = mf.pt;
    const ExtField& K = pt.K;
    if (!K.is_zero(point_eval(H, pt)))
      fail(Err::DecompositionMismatch, "a flex of the member misses the Hesse curve");
    std::array<ExtField::Elem, 3> gh, gg;
    for (int i = 0; i < 3; ++i) {
      gh[i] = point_eval(dH[i], pt);
      gg[i] = point_eval(dg[i], pt);
    }
    if (all_zero(K, gg))
      fail(Err::DecompositionMismatch, "the member is singular at one of its flexes");
    if (all_zero(K, gh))
      fail(Err::DecompositionMismatch, "the Hesse curve is singular at a flex");
    if (gradients_parallel(K, gh, gg))
      fail(Err::DecompositionMismatch, "the Hesse curve is tangent to the member at a flex");
  }

  // Each base point is an order-3 contact: H has multiplicity 3 there and the
  // member is smooth with tangent outside the tangent cone.
  for (auto& bp : P.base) {
    const ExtField& K = bp.K;
    if (K.is_zero(bp.z)) fail(Err::BadInput, "base point at z = 0 in a validated pencil");
    if (!K.is_zero(point_eval(g, bp)))
      fail(Err::DecompositionMismatch, "a base point misses the member");
    auto gx = point_eval(dg[0], bp), gy = point_eval(dg[1], bp), gz = point_eval(dg[2], bp);
    if (K.is_zero(gx) && K.is_zero(gy) && K.is_zero(gz))
      fail(Err::DecompositionMismatch, "the member is singular at a base point");
    auto layers = expand_local(H, K, bp.x, bp.y);
    LocalStructure ls = local_structure_from_layers(K, layers);
    if (ls.mult != 3)
      fail(Err::DecompositionMismatch, "the Hesse curve has multiplicity " +
                                           std::to_string(ls.mult) + " at a base point, not 3");
    if (tangent_order_from_layers(K, layers, gy, K.neg(gx)) != 3)
      fail(Err::DecompositionMismatch,
           "the member tangent enters the Hesse tangent cone at a base point");
  }

  // Abscissa bookkeeping: in a frame whose chart keeps every contact affine,
  // Res_y of the two charts must factor exactly as the product of the minimal
  // polynomials of the contact abscissae, each raised to the certified local
  // order (conjugates share one factor).  This proves no further contact
  // exists anywhere, including on z = 0.
  Rng rng = Rng(P.seed).child("fibercert");
  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat3 M = mat3_identity(F);
    if (attempt) {
      for (auto& row : M.m)
        for (auto& e : row) e = F.rand_elem(rng);
      if (F.is_zero(mat3_det(F, M))) continue;
    }
    Form Hf = attempt ? compose_linear(H, M) : H;
    Form gf = attempt ? compose_linear(g, M) : g;

    // constant leading y-coefficients and no common point on z = 0
    if (F.is_zero(form_coeff(Hf, 0, DH, 0)) || F.is_zero(form_coeff(gf, 0, d, 0))) continue;
    FpPoly hinf = form_z0_upoly(Hf, true), ginf = form_z0_upoly(gf, true);
    if (hinf.zero() || ginf.zero()) continue;
    if (upoly_gcd(hinf, ginf).deg() > 0) continue;
    if (F.is_zero(form_coeff(Hf, DH, 0, 0)) && F.is_zero(form_coeff(gf, d, 0, 0))) continue;

    // group the expected contacts by the minimal polynomial of their abscissa
    Mat3 Minv = attempt ? mat3_inv(F, M) : M;
    struct Group {
      FpPoly mu;
      long long weight = 0;
    };
    std::map<std::vector<uint64_t>, Group> groups;
    bool frame_ok = true;
    auto add_contact = [&](const AlgPoint& pt, int order) {
      AlgPoint q = attempt ? apply_mat(Minv, pt) : pt;
      if (q.K.is_zero(q.z)) {
        frame_ok = false;
        return;
      }
      FpPoly mu = minimal_polynomial(q.K, q.x);
      auto key = upoly_canonical_key(mu);
      auto it = groups.find(key);
      if (it == groups.end())
        groups.emplace(std::move(key), Group{std::move(mu), (long long)order});
      else
        it->second.weight += order;
    };
    for (auto& mf : fx.points) {
      add_contact(mf.pt, 1);
      if (!frame_ok) break;
    }
    if (frame_ok)
      for (auto& bp : P.base) {
        add_contact(bp, 3);
        if (!frame_ok) break;
      }
    if (!frame_ok) continue;

    FpPoly R = resultant_v(bipoly_z1(Hf), bipoly_z1(gf), DH, d, DH * d);
    if (R.zero()) fail(Err::DecompositionMismatch, "the member divides the Hesse curve");
    if (R.deg() != DH * d)
      fail(Err::DecompositionMismatch, "the contact eliminant has degree " +
                                           std::to_string(R.deg()) + ", not " +
                                           std::to_string(DH * d));
    FpPoly Q = R;
    for (auto& [key, grp] : groups) {
      (void)key;
      const int k = grp.mu.deg();
      if (grp.weight % k)
        fail(Err::DecompositionMismatch, "contact orders spread unevenly over conjugates");
      const long long m = grp.weight / k;
      for (long long i = 0; i < m; ++i) {
        auto dv = upoly_divrem(Q, grp.mu);
        if (!dv.r.zero())
          fail(Err::DecompositionMismatch,
               "the contact eliminant lacks an expected abscissa factor");
        Q = dv.q;
      }
    }
    if (Q.deg() != 0)
      fail(Err::DecompositionMismatch, "unexpected extra contact abscissae of total degree " +
                                           std::to_string(Q.deg()));

    FiberDecomposition out;
    out.t = t;
    out.contacts.reserve(fx.points.size() + P.base.size());
    for (auto& mf : fx.points) out.contacts.push_back({mf.pt, 1, false});
    for (auto& bp : P.base) out.contacts.push_back({bp, 3, true});
    std::sort(out.contacts.begin(), out.contacts.end(),
              [](const FiberContact& a, const FiberContact& b) {
                return point_key(a.pt) < point_key(b.pt);
              });
    for (auto& c : out.contacts) out.total += c.order;
    if (out.total != (long long)DH * d)
      fail(Err::DecompositionMismatch, "contact total " + std::to_string(out.total) +
                                           " misses the Bezout number " +
                                           std::to_string(DH * d));
    return out;
  }
  fail(Err::GenericityExhausted, "no frame kept the contact bookkeeping affine");
}

int member_contact_at(const HesseCurve& hc, const Pencil& P, const AlgValue& t0,
                      const AlgPoint& pt) {
  const ExtField& K = pt.K;
  if (!t0.K.same(K)) fail(Err::FieldMismatch, "parameter and point extensions disagree");
  if (!K.base().same(P.F) || hc.d != P.d || hc.H.zero())
    fail(Err::BadInput, "contact query does not match the pencil");
  if (K.is_zero(pt.z)) fail(Err::BadInput, "contact order needs an affine point");
  if (!K.is_zero(point_eval(hc.H, pt))) fail(Err::BadInput, "the point misses the Hesse curve");
  if (!K.is_zero(member_eval(P.F0, P.F1, K, t0.v, pt.x, pt.y, pt.z)))
    fail(Err::BadInput, "the point misses the member");
  std::array<ExtField::Elem, 3> gh, gg;
  for (int i = 0; i < 3; ++i) {
    gh[i] = point_eval(form_partial(hc.H, i), pt);
    gg[i] = member_eval(form_partial(P.F0, i), form_partial(P.F1, i), K, t0.v, pt.x, pt.y, pt.z);
  }
  if (all_zero(K, gh)) fail(Err::SingularPoint, "the Hesse curve is singular at the point");
  if (all_zero(K, gg)) fail(Err::SingularPoint, "the member is singular at the point");
  return gradients_parallel(K, gh, gg) ? 2 : 1;
}

ClauseResult verify_clause_iii_tangency(const HesseCurve& hc, const Pencil& P,
                                        const HyperflexRecord& rec) {
  if (P.d < 4) return {Verdict::SKIPPED, "degree-3 members carry no hyperflexes"};
  try {
    int order = member_contact_at(hc, P, rec.t, rec.pt);
    if (order >= 2)
      return {Verdict::PASS, "smooth tangential contact of order >= 2 at a flex of tangent "
                             "multiplicity " +
                                 std::to_string(rec.tangent_mult)};
    return {Verdict::FAIL, "transversal contact at a claimed hyperflex"};
  } catch (const Error& e) {
    return {Verdict::FAIL, std::string("contact preconditions failed: ") + e.what()};
  }
}

TheoremReport verify_theorem(const HesseCurve& hc, const Pencil& P, int sample_fibers) {
  if (sample_fibers < 1) fail(Err::BadInput, "sample at least one fiber");
  TheoremReport rep;
  rep.d = P.d;
  const long long d = P.d;

  rep.clause_ii = verify_clause_ii(hc, P);
  rep.clause_i = rep.clause_ii.verdict == Verdict::PASS
                     ? verify_clause_i(hc)
                     : ClauseResult{Verdict::SKIPPED,
                                    "genus bookkeeping needs the verified singularity inventory"};

  rep.counts.push_back(
      {"base points (ordinary triple points)", d * d, (long long)P.base.size()});
  rep.counts.push_back(
      {"fiber nodes (ordinary nodes)", 3 * (d - 1) * (d - 1), (long long)P.fibers.size()});

  Rng rng = Rng(P.seed).child("fibersample");
  int done = 0, attempts = 0;
  std::string fail_ev;
  while (done < sample_fibers && attempts < 4 * sample_fibers + 8) {
    ++attempts;
    Param t = Param::finite(P.F.rand_elem(rng));
    try {
      rep.fibers.push_back(fiber_intersection(hc, P, t));
      ++done;
    } catch (const Error& e) {
      if (e.code() == Err::MemberSingular || e.code() == Err::FlexCountMismatch)
        continue;  // t landed on one of the finitely many non-generic members
      if (e.code() == Err::DecompositionMismatch) {
        fail_ev = e.what();
        break;
      }
      throw;
    }
  }
  if (!fail_ev.empty())
    rep.clause_iii = {Verdict::FAIL, fail_ev};
  else if (done < sample_fibers)
    rep.clause_iii = {Verdict::FAIL, "only " + std::to_string(done) + " of " +
                                         std::to_string(sample_fibers) +
                                         " sampled members were generic"};
  else {
    std::ostringstream ev;
    ev << done << " fiber decompositions verified: " << 3 * d * (d - 2)
       << " flexes x 1 + " << d * d << " base points x 3 = " << 6 * (d - 1) * d;
    rep.clause_iii = {Verdict::PASS, ev.str()};
  }

  if (done) {
    long long flex_found = 0;
    for (auto& c : rep.fibers[0].contacts)
      if (!c.base) ++flex_found;
    rep.counts.push_back({"flexes on the sampled member", 3 * d * (d - 2), flex_found});
    rep.counts.push_back(
        {"contact total on the sampled fiber", 6 * (d - 1) * d, rep.fibers[0].total});
  }
  return rep;
}

}  // namespace hessec
