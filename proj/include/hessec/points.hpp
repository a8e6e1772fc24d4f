#pragma once

#include <vector>

#include "hessec/fields.hpp"
#include "hessec/mpoly.hpp"
#include "hessec/upoly.hpp"

namespace hessec {

// A projective plane point with coordinates in one explicit extension of the
// prime field, normalized so the last nonzero coordinate (z, then y, then x)
// equals 1.
struct AlgPoint {
  ExtField K;
  ExtField::Elem x, y, z;
};

inline AlgPoint make_point(const ExtField& K, const ExtField::Elem& x, const ExtField::Elem& y,
                           const ExtField::Elem& z) {
  if (!K.is_zero(z)) {
    auto s = K.inv(z);
    return {K, K.mul(x, s), K.mul(y, s), K.one()};
  }
  if (!K.is_zero(y)) {
    auto s = K.inv(y);
    return {K, K.mul(x, s), K.one(), K.zero()};
  }
  if (!K.is_zero(x)) return {K, K.one(), K.zero(), K.zero()};
  fail(Err::BadInput, "projective point needs a nonzero coordinate");
}

inline AlgPoint affine_point(const ExtField& K, const ExtField::Elem& x,
                             const ExtField::Elem& y) {
  return {K, x, y, K.one()};
}

inline AlgPoint frobenius_point(const AlgPoint& P) {
  return {P.K, P.K.frobenius(P.x), P.K.frobenius(P.y), P.K.frobenius(P.z)};
}

inline bool point_at_infinity(const AlgPoint& P) { return P.K.is_zero(P.z); }

// Equality inside one field context (same modulus); normalization makes the
// coordinate triples directly comparable.
inline bool point_eq(const AlgPoint& P, const AlgPoint& Q) {
  return P.K.same(Q.K) && P.K.eq(P.x, Q.x) && P.K.eq(P.y, Q.y) && P.K.eq(P.z, Q.z);
}

// Field-independent identity key: extension degree, modulus residues, then
// the normalized coordinates.  Lexicographic order on keys is the canonical
// point order used in reports and cross-run comparisons.
inline std::vector<uint64_t> point_key(const AlgPoint& P) {
  std::vector<uint64_t> key{P.K.degree()};
  const PrimeField& b = P.K.base();
  for (auto c : P.K.modulus_low()) key.push_back(b.to_u64(c));
  for (auto* e : {&P.x, &P.y, &P.z})
    for (auto r : P.K.canonical(*e)) key.push_back(r);
  return key;
}

inline ExtField::Elem point_eval(const Form& g, const AlgPoint& P) {
  return form_eval(g, P.K, P.x, P.y, P.z);
}

}  // namespace hessec
