#pragma once

#include <array>
#include <map>
#include <string>

#include "hessec/upoly.hpp"

namespace hessec {

// ---------------------------------------------------------------------------
// Homogeneous trivariate forms over the prime field, sparse in the monomial
// basis.  Ordering is graded lexicographic with x > y > z (the map ascends, so
// printing iterates in reverse).
// ---------------------------------------------------------------------------
struct Mono {
  uint16_t a = 0, b = 0, c = 0;  // exponents of x, y, z
  int deg() const { return a + b + c; }
  bool operator<(const Mono& o) const {
    int da = deg(), db = o.deg();
    if (da != db) return da < db;
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
  bool operator==(const Mono& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct Form {
  PrimeField f;
  int d = 0;  // declared total degree; every stored term matches it
  std::map<Mono, PrimeField::Elem> t;

  bool zero() const { return t.empty(); }
};

inline Form form_zero(const PrimeField& f, int d) { return Form{f, d, {}}; }

inline void form_add_term(Form& g, Mono m, PrimeField::Elem v) {
  if (m.deg() != g.d) fail(Err::DegreeMismatch, "term degree differs from form degree");
  if (g.f.is_zero(v)) return;
  auto it = g.t.find(m);
  if (it == g.t.end()) {
    g.t.emplace(m, v);
  } else {
    it->second = g.f.add(it->second, v);
    if (g.f.is_zero(it->second)) g.t.erase(it);
  }
}

struct TermSpec {
  int a, b, c;
  int64_t coeff;
};

inline Form form_from_terms(const PrimeField& f, int d, const std::vector<TermSpec>& terms) {
  Form g = form_zero(f, d);
  for (auto& ts : terms)
    form_add_term(g, Mono{(uint16_t)ts.a, (uint16_t)ts.b, (uint16_t)ts.c}, f.from_i64(ts.coeff));
  return g;
}

inline bool form_eq(const Form& a, const Form& b) {
  if (a.d != b.d || a.t.size() != b.t.size()) return false;
  auto ia = a.t.begin();
  for (auto& [m, v] : b.t) {
    if (!(ia->first == m) || !a.f.eq(ia->second, v)) return false;
    ++ia;
  }
  return true;
}

inline PrimeField::Elem form_coeff(const Form& g, int a, int b, int c) {
  auto it = g.t.find(Mono{(uint16_t)a, (uint16_t)b, (uint16_t)c});
  return it == g.t.end() ? g.f.zero() : it->second;
}

inline Form form_add(const Form& a, const Form& b) {
  if (a.d != b.d) fail(Err::DegreeMismatch, "adding forms of different degree");
  Form r = a;
  for (auto& [m, v] : b.t) form_add_term(r, m, v);
  return r;
}

inline Form form_neg(const Form& a) {
  Form r = a;
  for (auto& [m, v] : r.t) v = a.f.neg(v);
  return r;
}

inline Form form_sub(const Form& a, const Form& b) { return form_add(a, form_neg(b)); }

inline Form form_scale(const Form& a, PrimeField::Elem s) {
  if (a.f.is_zero(s)) return form_zero(a.f, a.d);
  Form r = a;
  for (auto& [m, v] : r.t) v = a.f.mul(v, s);
  return r;
}

inline Form form_mul(const Form& a, const Form& b) {
  Form r = form_zero(a.f, a.d + b.d);
  for (auto& [ma, va] : a.t)
    for (auto& [mb, vb] : b.t)
      form_add_term(r, Mono{(uint16_t)(ma.a + mb.a), (uint16_t)(ma.b + mb.b), (uint16_t)(ma.c + mb.c)},
                    a.f.mul(va, vb));
  return r;
}

inline Form form_pow(const Form& a, int e) {
  Form r = form_zero(a.f, 0);
  form_add_term(r, Mono{0, 0, 0}, a.f.one());
  for (int i = 0; i < e; ++i) r = form_mul(r, a);
  return r;
}

// Partial derivative; var: 0 = x, 1 = y, 2 = z.
inline Form form_partial(const Form& g, int var) {
  if (g.d == 0) return form_zero(g.f, 0);
  Form r = form_zero(g.f, g.d - 1);
  for (auto& [m, v] : g.t) {
    uint16_t e = var == 0 ? m.a : var == 1 ? m.b : m.c;
    if (!e) continue;
    Mono n = m;
    if (var == 0) --n.a;
    else if (var == 1) --n.b;
    else --n.c;
    form_add_term(r, n, g.f.mul(v, g.f.from_u64(e)));
  }
  return r;
}

// Evaluation over any field context K that embeds the prime field.
template <class K>
typename K::Elem form_eval(const Form& g, const K& k, const typename K::Elem& x,
                           const typename K::Elem& y, const typename K::Elem& z) {
  std::vector<typename K::Elem> px{k.one()}, py{k.one()}, pz{k.one()};
  for (int i = 1; i <= g.d; ++i) {
    px.push_back(k.mul(px.back(), x));
    py.push_back(k.mul(py.back(), y));
    pz.push_back(k.mul(pz.back(), z));
  }
  auto acc = k.zero();
  for (auto& [m, v] : g.t) {
    auto term = k.mul(px[m.a], k.mul(py[m.b], pz[m.c]));
    acc = k.add(acc, k.mul(k.embed_base(v), term));
  }
  return acc;
}

// Uniform random form of degree d over all C(d+2,2) monomials.
inline Form form_random(const PrimeField& f, int d, Rng& rng) {
  Form g = form_zero(f, d);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      form_add_term(g, Mono{(uint16_t)a, (uint16_t)b, (uint16_t)(d - a - b)}, f.rand_elem(rng));
  return g;
}

// --- coordinate changes ------------------------------------------------------

struct Mat3 {
  PrimeField::Elem m[3][3];
};

inline Mat3 mat3_identity(const PrimeField& f) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = i == j ? f.one() : f.zero();
  return r;
}

inline PrimeField::Elem mat3_det(const PrimeField& f, const Mat3& A) {
  auto t1 = f.mul(A.m[0][0], f.sub(f.mul(A.m[1][1], A.m[2][2]), f.mul(A.m[1][2], A.m[2][1])));
  auto t2 = f.mul(A.m[0][1], f.sub(f.mul(A.m[1][0], A.m[2][2]), f.mul(A.m[1][2], A.m[2][0])));
  auto t3 = f.mul(A.m[0][2], f.sub(f.mul(A.m[1][0], A.m[2][1]), f.mul(A.m[1][1], A.m[2][0])));
  return f.add(f.sub(t1, t2), t3);
}

inline Mat3 mat3_inv(const PrimeField& f, const Mat3& A) {
  auto det = mat3_det(f, A);
  if (f.is_zero(det)) fail(Err::DivisionByZero, "inverting a singular matrix");
  auto s = f.inv(det);
  Mat3 R;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int j1 = (j + 1) % 3, j2 = (j + 2) % 3, i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      auto cof = f.sub(f.mul(A.m[j1][i1], A.m[j2][i2]), f.mul(A.m[j1][i2], A.m[j2][i1]));
      R.m[i][j] = f.mul(cof, s);
    }
  return R;
}

inline Mat3 mat3_mul(const PrimeField& f, const Mat3& A, const Mat3& B) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto s = f.zero();
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(A.m[i][k], B.m[k][j]));
      r.m[i][j] = s;
    }
  return r;
}

// (F o M)(v) = F(M v): substitute each variable by the matching row form.
inline Form compose_linear(const Form& g, const Mat3& M) {
  const PrimeField& f = g.f;
  std::array<Form, 3> lin;
  for (int i = 0; i < 3; ++i) {
    lin[i] = form_zero(f, 1);
    form_add_term(lin[i], Mono{1, 0, 0}, M.m[i][0]);
    form_add_term(lin[i], Mono{0, 1, 0}, M.m[i][1]);
    form_add_term(lin[i], Mono{0, 0, 1}, M.m[i][2]);
  }
  std::array<std::vector<Form>, 3> pows;
  for (int i = 0; i < 3; ++i) {
    pows[i].push_back(form_pow(lin[i], 0));
    for (int e = 1; e <= g.d; ++e) pows[i].push_back(form_mul(pows[i].back(), lin[i]));
  }
  Form r = form_zero(f, g.d);
  for (auto& [m, v] : g.t)
    r = form_add(r, form_scale(form_mul(form_mul(pows[0][m.a], pows[1][m.b]), pows[2][m.c]), v));
  return r;
}

// --- Hessians ----------------------------------------------------------------

// det of the 3x3 matrix of second partials; degree 3(d-2).
Form hessian_det(const Form& g);

// Coefficients h_0..h_3 of det Hess(A + tB) as a cubic in t, via the eight
// column-subset determinants of the matrix pencil Hess(A) + t Hess(B).
std::array<Form, 4> hessian_pencil(const Form& A, const Form& B);

// --- charts and restrictions ---------------------------------------------------

// The z = 0 slice as a univariate polynomial: x_side ? F(x,1,0) : F(1,y,0).
FpPoly form_z0_upoly(const Form& g, bool x_side);

// Restriction to the parametrized line P + s Q; univariate of degree <= d.
template <class K>
UPoly<K> restrict_line(const Form& g, const K& k, const std::array<typename K::Elem, 3>& P,
                       const std::array<typename K::Elem, 3>& Q) {
  // coefficients of s^j by expanding each variable as P_i + s Q_i;
  // tab[i][e][j] = coefficient of s^j in (P_i + s Q_i)^e
  const int d = g.d;
  std::array<std::vector<std::vector<typename K::Elem>>, 3> tab;
  for (int i = 0; i < 3; ++i) {
    tab[i].resize(d + 1);
    tab[i][0] = {k.one()};
    for (int e = 1; e <= d; ++e) {
      auto& prev = tab[i][e - 1];
      std::vector<typename K::Elem> cur(prev.size() + 1, k.zero());
      for (size_t j = 0; j < prev.size(); ++j) {
        cur[j] = k.add(cur[j], k.mul(prev[j], P[i]));
        cur[j + 1] = k.add(cur[j + 1], k.mul(prev[j], Q[i]));
      }
      tab[i][e] = std::move(cur);
    }
  }
  std::vector<typename K::Elem> out(d + 1, k.zero());
  for (auto& [m, v] : g.t) {
    // convolve the three power tables
    std::vector<typename K::Elem> conv = tab[0][m.a];
    for (int which = 1; which < 3; ++which) {
      auto& other = which == 1 ? tab[1][m.b] : tab[2][m.c];
      std::vector<typename K::Elem> nxt(conv.size() + other.size() - 1, k.zero());
      for (size_t i = 0; i < conv.size(); ++i)
        for (size_t j = 0; j < other.size(); ++j)
          nxt[i + j] = k.add(nxt[i + j], k.mul(conv[i], other[j]));
      conv = std::move(nxt);
    }
    auto cv = k.embed_base(v);
    for (size_t j = 0; j < conv.size(); ++j) out[j] = k.add(out[j], k.mul(cv, conv[j]));
  }
  return upoly(k, std::move(out));
}

// --- local analysis at an affine point (chart z = 1) ---------------------------

// Dense layers of f(x0+u, y0+v, 1): mat[i][j] multiplies u^i v^j.
template <class K>
std::vector<std::vector<typename K::Elem>> expand_local(const Form& g, const K& k,
                                                        const typename K::Elem& x0,
                                                        const typename K::Elem& y0) {
  const int d = g.d;
  std::vector<std::vector<typename K::Elem>> mat(d + 1,
                                                 std::vector<typename K::Elem>(d + 1, k.zero()));
  // Pascal triangle over K (degrees are far below the characteristic)
  std::vector<std::vector<typename K::Elem>> C(d + 1);
  for (int n = 0; n <= d; ++n) {
    C[n].assign(n + 1, k.one());
    for (int r = 1; r < n; ++r) C[n][r] = k.add(C[n - 1][r - 1], C[n - 1][r]);
  }
  std::vector<typename K::Elem> px{k.one()}, py{k.one()};
  for (int i = 1; i <= d; ++i) {
    px.push_back(k.mul(px.back(), x0));
    py.push_back(k.mul(py.back(), y0));
  }
  for (auto& [m, v] : g.t) {
    auto cv = k.embed_base(v);
    for (int i = 0; i <= m.a; ++i) {
      auto ci = k.mul(cv, k.mul(C[m.a][i], px[m.a - i]));
      for (int j = 0; j <= m.b; ++j)
        mat[i][j] = k.add(mat[i][j], k.mul(ci, k.mul(C[m.b][j], py[m.b - j])));
    }
  }
  return mat;
}

struct LocalStructure {
  int mult = 0;        // least total degree with a nonzero layer
  bool ordinary = false;  // tangent cone squarefree (trivially true for mult <= 1)
};

// Multiplicity and tangent-cone analysis on precomputed expansion layers.
template <class K>
LocalStructure local_structure_from_layers(const K& k,
                                           const std::vector<std::vector<typename K::Elem>>& mat) {
  const int d = (int)mat.size() - 1;
  for (int m = 0; m <= d; ++m) {
    bool nonzero = false;
    for (int i = 0; i <= m; ++i)
      if (!k.is_zero(mat[i][m - i])) {
        nonzero = true;
        break;
      }
    if (!nonzero) continue;
    LocalStructure ls;
    ls.mult = m;
    if (m <= 1) {
      ls.ordinary = true;
      return ls;
    }
    // tangent cone sum_i beta_i u^i v^{m-i}; squarefree iff the dehomogenized
    // q(u) = sum beta_i u^i is squarefree and v divides at most once
    std::vector<typename K::Elem> beta(m + 1);
    for (int i = 0; i <= m; ++i) beta[i] = mat[i][m - i];
    UPoly<K> q = upoly(k, beta);
    int vmult = m - q.deg();
    ls.ordinary = vmult <= 1 && upoly_is_squarefree(q);
    return ls;
  }
  fail(Err::ZeroInput, "form vanishes identically near the point");
}

template <class K>
LocalStructure local_structure(const Form& g, const K& k, const typename K::Elem& x0,
                               const typename K::Elem& y0) {
  return local_structure_from_layers(k, expand_local(g, k, x0, y0));
}

template <class K>
bool is_smooth_at(const Form& g, const K& k, const typename K::Elem& x0,
                  const typename K::Elem& y0, const typename K::Elem& z0) {
  for (int var = 0; var < 3; ++var) {
    Form pg = form_partial(g, var);
    if (!k.is_zero(form_eval(pg, k, x0, y0, z0))) return true;
  }
  return false;
}

// Order of vanishing along the direction (a, b) from the expansion origin:
// the pullback s -> f(x0 + s*a, y0 + s*b) read off the layers.
template <class K>
int tangent_order_from_layers(const K& k, const std::vector<std::vector<typename K::Elem>>& mat,
                              const typename K::Elem& a, const typename K::Elem& b) {
  const int d = (int)mat.size() - 1;
  std::vector<typename K::Elem> pa{k.one()}, pb{k.one()};
  for (int i = 1; i <= d; ++i) {
    pa.push_back(k.mul(pa.back(), a));
    pb.push_back(k.mul(pb.back(), b));
  }
  std::vector<typename K::Elem> u(d + 1, k.zero());
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j)
      if (!k.is_zero(mat[i][j])) u[i + j] = k.add(u[i + j], k.mul(mat[i][j], k.mul(pa[i], pb[j])));
  for (int ord = 0; ord <= d; ++ord)
    if (!k.is_zero(u[ord])) return ord;
  fail(Err::LineInsideCurve, "tangent line lies inside the curve");
}

// Intersection multiplicity of the tangent line at a smooth affine point of
// the curve g = 0: the vanishing order of g restricted to its tangent.
// 2 = ordinary smooth point, 3 = inflection, >= 4 = higher inflection.
template <class K>
int tangent_multiplicity(const Form& g, const K& k, const typename K::Elem& x0,
                         const typename K::Elem& y0) {
  auto one = k.one();
  auto gx = form_eval(form_partial(g, 0), k, x0, y0, one);
  auto gy = form_eval(form_partial(g, 1), k, x0, y0, one);
  auto gz = form_eval(form_partial(g, 2), k, x0, y0, one);
  if (k.is_zero(gx) && k.is_zero(gy) && k.is_zero(gz))
    fail(Err::SingularPoint, "tangent multiplicity at a singular point");
  if (!k.is_zero(form_eval(g, k, x0, y0, one)))
    fail(Err::BadInput, "tangent multiplicity at a point off the curve");
  if (k.is_zero(gx) && k.is_zero(gy))
    fail(Err::SingularPoint, "affine smooth point cannot have vanishing affine gradient");
  return tangent_order_from_layers(k, expand_local(g, k, x0, y0), gy, k.neg(gx));
}

// --- pencil members with an extension-field parameter --------------------------
//
// A member A + t*B with t in F_{p^k} never materializes as a Form (Forms keep
// prime coefficients); every local computation is linear in the form, so it
// is evaluated on A and B separately and combined.

inline ExtField::Elem member_eval(const Form& A, const Form& B, const ExtField& K,
                                  const ExtField::Elem& t, const ExtField::Elem& x,
                                  const ExtField::Elem& y, const ExtField::Elem& z) {
  return K.add(form_eval(A, K, x, y, z), K.mul(t, form_eval(B, K, x, y, z)));
}

inline std::vector<std::vector<ExtField::Elem>> member_layers(const Form& A, const Form& B,
                                                              const ExtField& K,
                                                              const ExtField::Elem& t,
                                                              const ExtField::Elem& x0,
                                                              const ExtField::Elem& y0) {
  auto la = expand_local(A, K, x0, y0);
  auto lb = expand_local(B, K, x0, y0);
  for (size_t i = 0; i < la.size(); ++i)
    for (size_t j = 0; j < la[i].size(); ++j) la[i][j] = K.add(la[i][j], K.mul(t, lb[i][j]));
  return la;
}

inline LocalStructure member_local_structure(const Form& A, const Form& B, const ExtField& K,
                                             const ExtField::Elem& t, const ExtField::Elem& x0,
                                             const ExtField::Elem& y0) {
  return local_structure_from_layers(K, member_layers(A, B, K, t, x0, y0));
}

inline bool member_smooth_at(const Form& A, const Form& B, const ExtField& K,
                             const ExtField::Elem& t, const ExtField::Elem& x,
                             const ExtField::Elem& y, const ExtField::Elem& z) {
  for (int var = 0; var < 3; ++var)
    if (!K.is_zero(member_eval(form_partial(A, var), form_partial(B, var), K, t, x, y, z)))
      return true;
  return false;
}

inline int member_tangent_multiplicity(const Form& A, const Form& B, const ExtField& K,
                                       const ExtField::Elem& t, const ExtField::Elem& x0,
                                       const ExtField::Elem& y0) {
  auto one = K.one();
  auto gx = member_eval(form_partial(A, 0), form_partial(B, 0), K, t, x0, y0, one);
  auto gy = member_eval(form_partial(A, 1), form_partial(B, 1), K, t, x0, y0, one);
  auto gz = member_eval(form_partial(A, 2), form_partial(B, 2), K, t, x0, y0, one);
  if (K.is_zero(gx) && K.is_zero(gy) && K.is_zero(gz))
    fail(Err::SingularPoint, "tangent multiplicity at a singular point");
  if (!K.is_zero(member_eval(A, B, K, t, x0, y0, one)))
    fail(Err::BadInput, "tangent multiplicity at a point off the curve");
  if (K.is_zero(gx) && K.is_zero(gy))
    fail(Err::SingularPoint, "affine smooth point cannot have vanishing affine gradient");
  return tangent_order_from_layers(K, member_layers(A, B, K, t, x0, y0), gy, K.neg(gx));
}

// --- parsing and printing ------------------------------------------------------

// Grammar: sum of terms over x, y, z with nonnegative integer coefficients and
// exponents, operators + - * ^.  Throws SyntaxError / NotHomogeneous /
// DegreeMismatch (the latter only when expect_deg >= 0).
Form parse_form(const PrimeField& f, const std::string& src, int expect_deg = -1);

// Canonical rendering: graded lex descending with x > y > z, '*' between
// factors, '^' for exponents >= 2, unit coefficients omitted.
std::string print_form(const Form& g);

// ---------------------------------------------------------------------------
// Bivariate polynomials over a field context: co[j] is the coefficient of
// V^j, itself a univariate polynomial in U.  Which variables U and V name is
// the caller's bookkeeping (x/y charts, t/x elimination, ...).
// ---------------------------------------------------------------------------
template <class F>
struct BiPoly {
  F f;
  std::vector<UPoly<F>> co;

  int degv() const { return (int)co.size() - 1; }
  int degu() const {
    int m = -1;
    for (auto& p : co) m = std::max(m, p.deg());
    return m;
  }
};

template <class F>
BiPoly<F> bipoly_trim(BiPoly<F> b) {
  while (!b.co.empty() && b.co.back().zero()) b.co.pop_back();
  return b;
}

template <class F>
BiPoly<F> bipoly_add(const BiPoly<F>& a, const BiPoly<F>& b) {
  BiPoly<F> r{a.f, {}};
  size_t n = std::max(a.co.size(), b.co.size());
  for (size_t j = 0; j < n; ++j) {
    UPoly<F> s = upoly_zero(a.f);
    if (j < a.co.size()) s = a.co[j];
    if (j < b.co.size()) s = upoly_add(s, b.co[j]);
    r.co.push_back(std::move(s));
  }
  return bipoly_trim(std::move(r));
}

template <class F>
BiPoly<F> bipoly_scale(const BiPoly<F>& a, const typename F::Elem& s) {
  BiPoly<F> r{a.f, {}};
  for (auto& p : a.co) r.co.push_back(upoly_scale(p, s));
  return bipoly_trim(std::move(r));
}

// d/dV
template <class F>
BiPoly<F> bipoly_deriv_v(const BiPoly<F>& a) {
  BiPoly<F> r{a.f, {}};
  for (size_t j = 1; j < a.co.size(); ++j)
    r.co.push_back(upoly_scale(a.co[j], a.f.from_u64(j)));
  return bipoly_trim(std::move(r));
}

// d/dU
template <class F>
BiPoly<F> bipoly_deriv_u(const BiPoly<F>& a) {
  BiPoly<F> r{a.f, {}};
  for (auto& p : a.co) r.co.push_back(upoly_derivative(p));
  return bipoly_trim(std::move(r));
}

template <class F>
UPoly<F> bipoly_at_u(const BiPoly<F>& a, const typename F::Elem& u0) {
  std::vector<typename F::Elem> c;
  for (auto& p : a.co) c.push_back(upoly_eval(p, u0));
  return upoly(a.f, std::move(c));
}

template <class F>
UPoly<F> bipoly_at_v(const BiPoly<F>& a, const typename F::Elem& v0) {
  UPoly<F> acc = upoly_zero(a.f);
  for (size_t j = a.co.size(); j-- > 0;) {
    acc = upoly_scale(acc, v0);
    acc = upoly_add(acc, a.co[j]);
  }
  return acc;
}

// Lift a prime-field bivariate into an extension coefficientwise.
BiPoly<ExtField> bipoly_embed(const BiPoly<PrimeField>& a, const ExtField& K);

// Evaluate U at an extension element without materializing the embedded
// bivariate: co[j](u0) over K becomes the V^j coefficient.
inline UPoly<ExtField> bipoly_at_u_ext(const BiPoly<PrimeField>& a, const ExtField& K,
                                       const ExtField::Elem& u0) {
  std::vector<ExtField::Elem> c;
  c.reserve(a.co.size());
  for (auto& p : a.co) {
    auto acc = K.zero();
    for (size_t i = p.c.size(); i-- > 0;) acc = K.add(K.mul(acc, u0), K.embed_base(p.c[i]));
    c.push_back(std::move(acc));
  }
  return upoly(K, std::move(c));
}

// Affine chart z = 1 of a form: U = x, V = y (or swapped).
BiPoly<PrimeField> bipoly_z1(const Form& g, bool swap_xy = false);

// Determinant of the Sylvester matrix built from DECLARED coefficient spans
// (A spans degree na = A.size()-1, B spans nb = B.size()-1) even when the top
// entries vanish — the fixed shape keeps the result polynomial in any
// parameters of A and B, which is what sample-and-interpolate needs.
template <class F>
typename F::Elem sylvester_det(const F& f, std::vector<typename F::Elem> A,
                               std::vector<typename F::Elem> B) {
  int na = (int)A.size() - 1, nb = (int)B.size() - 1;
  if (na < 0 || nb < 0) fail(Err::ZeroInput, "empty coefficient span");
  int n = na + nb;
  if (n == 0) return f.one();
  // rows: nb shifted copies of A (descending), then na shifted copies of B
  std::vector<std::vector<typename F::Elem>> M(n, std::vector<typename F::Elem>(n, f.zero()));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j <= na; ++j) M[i][i + j] = A[na - j];
  for (int i = 0; i < na; ++i)
    for (int j = 0; j <= nb; ++j) M[nb + i][i + j] = B[nb - j];
  // Gaussian elimination
  auto det = f.one();
  bool negate = false;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!f.is_zero(M[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != col) {
      std::swap(M[piv], M[col]);
      negate = !negate;
    }
    det = f.mul(det, M[col][col]);
    auto pinv = f.inv(M[col][col]);
    for (int r = col + 1; r < n; ++r) {
      if (f.is_zero(M[r][col])) continue;
      auto q = f.mul(M[r][col], pinv);
      for (int c2 = col; c2 < n; ++c2) M[r][c2] = f.sub(M[r][c2], f.mul(q, M[col][c2]));
    }
  }
  return negate ? f.neg(det) : det;
}

// Resultant in V of two bivariates, as a polynomial in U of degree at most
// deg_u_bound: fixed-size Sylvester determinants at deg_u_bound+1 sample
// points, interpolated, then validated at extra samples (DegreeBoundViolated
// when the samples refuse to fit the bound).  na/nb are the declared V-spans.
template <class F>
UPoly<F> resultant_v(const BiPoly<F>& A, const BiPoly<F>& B, int na, int nb, int deg_u_bound);

// Same fixed-shape Sylvester determinant, but computed exactly by
// fraction-free (Bareiss) elimination on polynomial entries.  No sample grid,
// so it works over arbitrarily small fields; meant for small spans (base
// points, smoothness certificates), where entry growth stays harmless.
template <class F>
UPoly<F> bipoly_resultant_v_exact(const BiPoly<F>& A, const BiPoly<F>& B, int na, int nb) {
  const F& f = A.f;
  if (na < 0 || nb < 0) fail(Err::BadInput, "bad resultant spans");
  if (A.degv() > na || B.degv() > nb) fail(Err::BadInput, "declared span below actual degree");
  int n = na + nb;
  if (n == 0) return upoly_const(f, f.one());
  auto at = [&](const BiPoly<F>& P, int j) {
    return j < (int)P.co.size() ? P.co[j] : upoly_zero(f);
  };
  std::vector<std::vector<UPoly<F>>> M(n, std::vector<UPoly<F>>(n, upoly_zero(f)));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j <= na; ++j) M[i][i + j] = at(A, na - j);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j <= nb; ++j) M[nb + i][i + j] = at(B, nb - j);
  bool negate = false;
  UPoly<F> prev = upoly_const(f, f.one());
  for (int col = 0; col + 1 < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!M[r][col].zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return upoly_zero(f);
    if (piv != col) {
      std::swap(M[piv], M[col]);
      negate = !negate;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int c2 = col + 1; c2 < n; ++c2) {
        auto t = upoly_sub(upoly_mul(M[r][c2], M[col][col]), upoly_mul(M[r][col], M[col][c2]));
        auto dv = upoly_divrem(t, prev);
        if (!dv.r.zero()) fail(Err::BadInput, "fraction-free elimination lost exactness");
        M[r][c2] = std::move(dv.q);
      }
      M[r][col] = upoly_zero(f);
    }
    prev = M[col][col];
  }
  return negate ? upoly_neg(M[n - 1][n - 1]) : M[n - 1][n - 1];
}

// Resultant in V with the a-priori bound from the bidegrees:
// deg_U <= degv(A)*degu(B) + degv(B)*degu(A).  Spans are the actual V-degrees.
template <class F>
UPoly<F> eliminate_y(const BiPoly<F>& A, const BiPoly<F>& B) {
  if (A.co.empty() || B.co.empty()) fail(Err::ZeroInput, "eliminating from a zero polynomial");
  int na = A.degv(), nb = B.degv();
  if (na + nb == 0) fail(Err::BadInput, "neither argument involves the eliminated variable");
  int bound = na * std::max(B.degu(), 0) + nb * std::max(A.degu(), 0);
  return resultant_v(A, B, na, nb, bound);
}

}  // namespace hessec
