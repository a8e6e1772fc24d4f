#pragma once

#include <string>
#include <vector>

#include "hessec/flexes.hpp"
#include "hessec/mpoly.hpp"
#include "hessec/pencil.hpp"
#include "hessec/points.hpp"
#include "hessec/verdict.hpp"

namespace hessec {

// The Hesse curve of a pencil: the plane locus swept by the inflection points
// of the members.  It is the parameter resultant Res_t(F0 + t F1, sum h_k
// t^k) of the member against its own Hessian determinant, which collapses to
// the closed form H = sum_{k=0..3} h_k (-F0)^k F1^{3-k} because the member is
// linear in t.
struct HesseCurve {
  Form H;                   // homogeneous of degree exactly 6(d-1)
  int d = 0;                // member degree of the source pencil
  bool squarefree = false;  // certificate from random line restrictions
};

// One certified contact of the Hesse curve with a smooth member: a flex
// (local intersection order 1) or a base point (order 3).
struct FiberContact {
  AlgPoint pt;
  int order = 0;
  bool base = false;
};

// H . F_t as a multiset of contacts; total is the full Bezout number
// 6(d-1)*d = 3d(d-2)*1 + d^2*3, so nothing is left over anywhere, including
// on the line at infinity.
struct FiberDecomposition {
  Param t;
  std::vector<FiberContact> contacts;  // canonical point order
  long long total = 0;
};

struct TheoremReport {
  int d = 0;
  ClauseResult clause_i, clause_ii, clause_iii;
  std::vector<CountCheck> counts;
  std::vector<FiberDecomposition> fibers;  // the sampled decompositions
};

// Closed-form construction with two certificates: the form is nonzero of the
// full degree 6(d-1), and squarefree (five random line restrictions, each of
// full degree and squarefree; one honest witness already implies the form has
// no repeated factor).  The closed form exists for any pencil, validated or
// not, so this accepts both; the verification clauses below need a validated
// pencil.  DegenerateHesseCurve when the form collapses or a repeated factor
// is detected.
HesseCurve hesse_curve(const Pencil& P);

// Degree and genus bookkeeping: deg H = 6(d-1) directly, and the
// delta-invariant identity p_a(6(d-1)) - 3*d^2 - 3(d-1)^2 =
// 3(4d^2-13d+8)+1 with p_a(D) = (D-1)(D-2)/2.  The delta charges (3 per
// ordinary triple point, 1 per node) cite the singularity inventory of
// verify_clause_ii, so establish that first.  FAIL carries the mismatching
// integers.
ClauseResult verify_clause_i(const HesseCurve& hc);

// Singularity inventory of H: multiplicity exactly 3 with squarefree tangent
// cone at each of the d^2 base points, an ordinary node at each of the
// 3(d-1)^2 singular-fiber nodes, and multiplicity 1 at 50 random points of H
// away from the inventory.  FAIL names the offending point.
ClauseResult verify_clause_ii(const HesseCurve& hc, const Pencil& P);

// Certified decomposition of H . F_t for a smooth member with a generic flex
// count: every flex contributes local order exactly 1 (transversal contact),
// every base point exactly 3 (the member's tangent avoids the degree-3
// tangent cone of H), and the abscissa factorization of the elimination
// resultant shows these contacts exhaust the Bezout total 6(d-1)*d.
// DecompositionMismatch on any deviation; MemberSingular / FlexCountMismatch
// propagate from the flex enumeration when t is one of the finitely many
// non-generic parameters.
FiberDecomposition fiber_intersection(const HesseCurve& hc, const Pencil& P, Param t);

// Local contact order of H with the member F_{t0} at an affine point where
// both curves pass and are smooth: 1 when the tangent lines differ
// (transversal), 2 meaning ">= 2" when they coincide.  Throws BadInput /
// SingularPoint when the preconditions fail.
int member_contact_at(const HesseCurve& hc, const Pencil& P, const AlgValue& t0,
                      const AlgPoint& pt);

// Tangency verdict at a certified hyperflex record: both curves smooth at the
// point with equal tangent lines (contact order >= 2).  SKIPPED for d = 3,
// where no member carries a hyperflex.
ClauseResult verify_clause_iii_tangency(const HesseCurve& hc, const Pencil& P,
                                        const HyperflexRecord& rec);

// Full report on a validated pencil: clause (ii) inventory first, then the
// clause (i) bookkeeping it feeds, then clause (iii) decompositions on
// sample_fibers random smooth members.
TheoremReport verify_theorem(const HesseCurve& hc, const Pencil& P, int sample_fibers = 3);

}  // namespace hessec
