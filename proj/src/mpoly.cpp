#include "hessec/mpoly.hpp"

namespace hessec {

namespace {

Form det3_forms(const Form cols[3][3]) {
  // cols[i][j]: row i, column j
  auto minor2 = [](const Form& a, const Form& b, const Form& c, const Form& d) {
    return form_sub(form_mul(a, d), form_mul(b, c));
  };
  Form t1 = form_mul(cols[0][0], minor2(cols[1][1], cols[1][2], cols[2][1], cols[2][2]));
  Form t2 = form_mul(cols[0][1], minor2(cols[1][0], cols[1][2], cols[2][0], cols[2][2]));
  Form t3 = form_mul(cols[0][2], minor2(cols[1][0], cols[1][1], cols[2][0], cols[2][1]));
  return form_add(form_sub(t1, t2), t3);
}

}  // namespace

Form hessian_det(const Form& g) {
  if (g.d < 2) fail(Err::DegreeTooSmall, "Hessian needs degree >= 2");
  Form H[3][3];
  for (int i = 0; i < 3; ++i) {
    Form gi = form_partial(g, i);
    for (int j = 0; j < 3; ++j) H[i][j] = form_partial(gi, j);
  }
  return det3_forms(H);
}

std::array<Form, 4> hessian_pencil(const Form& A, const Form& B) {
  if (A.d != B.d) fail(Err::DegreeMismatch, "pencil members must share a degree");
  if (A.d < 2) fail(Err::DegreeTooSmall, "Hessian needs degree >= 2");
  Form HA[3][3], HB[3][3];
  for (int i = 0; i < 3; ++i) {
    Form ai = form_partial(A, i), bi = form_partial(B, i);
    for (int j = 0; j < 3; ++j) {
      HA[i][j] = form_partial(ai, j);
      HB[i][j] = form_partial(bi, j);
    }
  }
  int dd = 3 * (A.d - 2);
  std::array<Form, 4> h{form_zero(A.f, dd), form_zero(A.f, dd), form_zero(A.f, dd),
                        form_zero(A.f, dd)};
  for (int mask = 0; mask < 8; ++mask) {
    Form M[3][3];
    int k = 0;
    for (int j = 0; j < 3; ++j) {
      bool useB = (mask >> j) & 1;
      if (useB) ++k;
      for (int i = 0; i < 3; ++i) M[i][j] = useB ? HB[i][j] : HA[i][j];
    }
    h[k] = form_add(h[k], det3_forms(M));
  }
  return h;
}

FpPoly form_z0_upoly(const Form& g, bool x_side) {
  std::vector<PrimeField::Elem> c(g.d + 1, g.f.zero());
  for (auto& [m, v] : g.t) {
    if (m.c != 0) continue;
    int idx = x_side ? m.a : m.b;
    c[idx] = g.f.add(c[idx], v);
  }
  return upoly(g.f, std::move(c));
}

BiPoly<PrimeField> bipoly_z1(const Form& g, bool swap_xy) {
  std::vector<std::vector<PrimeField::Elem>> acc(g.d + 1,
                                                 std::vector<PrimeField::Elem>(g.d + 1, g.f.zero()));
  for (auto& [m, v] : g.t) {
    int vi = swap_xy ? m.a : m.b;  // V exponent
    int ui = swap_xy ? m.b : m.a;  // U exponent
    acc[vi][ui] = g.f.add(acc[vi][ui], v);
  }
  BiPoly<PrimeField> r{g.f, {}};
  for (auto& row : acc) r.co.push_back(upoly(g.f, row));
  return bipoly_trim(std::move(r));
}

BiPoly<ExtField> bipoly_embed(const BiPoly<PrimeField>& a, const ExtField& K) {
  BiPoly<ExtField> r{K, {}};
  for (auto& p : a.co) {
    std::vector<ExtField::Elem> c;
    for (auto pc : p.c) c.push_back(K.embed_base(pc));
    r.co.push_back(upoly(K, std::move(c)));
  }
  return bipoly_trim(std::move(r));
}

template <class F>
UPoly<F> resultant_v(const BiPoly<F>& A, const BiPoly<F>& B, int na, int nb, int deg_u_bound) {
  const F& f = A.f;
  if (na < 0 || nb < 0 || deg_u_bound < 0) fail(Err::BadInput, "bad resultant spans");
  if (A.degv() > na || B.degv() > nb)
    fail(Err::BadInput, "declared span below actual degree");
  uint64_t p = f.characteristic();
  uint64_t need = (uint64_t)deg_u_bound + 1;
  if (p <= need) fail(Err::BadInput, "field too small for the sample grid");
  uint64_t extra = std::min<uint64_t>(10, p - need);

  auto det_at = [&](uint64_t i) {
    auto u = f.from_u64(i);
    std::vector<typename F::Elem> Av(na + 1, f.zero()), Bv(nb + 1, f.zero());
    for (int j = 0; j <= na && j < (int)A.co.size(); ++j) Av[j] = upoly_eval(A.co[j], u);
    for (int j = 0; j <= nb && j < (int)B.co.size(); ++j) Bv[j] = upoly_eval(B.co[j], u);
    return sylvester_det(f, std::move(Av), std::move(Bv));
  };

  std::vector<typename F::Elem> xs, ys;
  for (uint64_t i = 0; i < need; ++i) {
    xs.push_back(f.from_u64(i));
    ys.push_back(det_at(i));
  }
  UPoly<F> R = upoly_interpolate(f, xs, ys);
  for (uint64_t i = need; i < need + extra; ++i) {
    if (!f.eq(upoly_eval(R, f.from_u64(i)), det_at(i)))
      fail(Err::DegreeBoundViolated, "resultant exceeds the declared degree bound");
  }
  return R;
}

template UPoly<PrimeField> resultant_v<PrimeField>(const BiPoly<PrimeField>&,
                                                   const BiPoly<PrimeField>&, int, int, int);
template UPoly<ExtField> resultant_v<ExtField>(const BiPoly<ExtField>&, const BiPoly<ExtField>&,
                                               int, int, int);

}  // namespace hessec
