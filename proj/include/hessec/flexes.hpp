#pragma once

#include <array>
#include <string>
#include <vector>

#include "hessec/pencil.hpp"

namespace hessec {

// --- inflection theory of pencil members ----------------------------------------
//
// The Hessian determinant of the generic member expands as a cubic in the
// parameter (hessian_pencil in mpoly.hpp); its coefficient forms drive every
// operation here.  Flexes are always certified through the tangent line, a
// computation independent of the Hessian, so the two mechanisms cross-check
// each other.

// A certified inflection point: the member is smooth at pt and meets its
// tangent line there with the recorded multiplicity (3 = ordinary flex,
// >= 4 = hyperflex).
struct MemberFlex {
  AlgPoint pt;
  int tangent_mult = 0;
};

// The full flex set of one member, sorted canonically by point key.
struct FlexSet {
  Param t;
  std::vector<MemberFlex> points;
};

// Flexes of a one-node member.  The count 3d(d-2) - 6 and the intersection
// order 6 of the member with its Hessian at the node are always certified
// over the node's field; the point list is complete only when every flex is
// reachable (always over a rational parameter, otherwise only K-rational
// flexes materialize and `complete` says whether that covered everything).
struct NodalFlexes {
  int count = 0;       // distinct smooth flexes, certified arithmetically
  int node_order = 0;  // intersection multiplicity of member and Hessian at the node
  std::vector<MemberFlex> points;
  bool complete = false;
};

// One member of the pencil carrying a hyperflex: tangent contact >= 4 at a
// smooth point.
struct HyperflexRecord {
  AlgValue t;
  AlgPoint pt;
  int tangent_mult = 0;
};

// All hyperflex-carrying members of the pencil.  `complete` is false when an
// irreducible factor of the certified candidate polynomial was too large to
// split (extension cap), in which case `records` is a verified subset only.
struct Census {
  std::vector<HyperflexRecord> records;
  bool complete = true;
};

// Members inflecting at one base point: for base point `index`, the pencil
// parameters t with a flex there.  `infinity_flex` reports the t = infinity
// member separately.  `complete` is false when some parameters live outside
// the base point's field.
struct BasePointFlexes {
  size_t index = 0;
  std::vector<ExtField::Elem> params;
  bool infinity_flex = false;
  bool complete = true;
};

// Hessian coefficient forms of the pencil: det Hess(F0 + t F1) =
// h[0] + h[1] t + h[2] t^2 + h[3] t^3, each h[k] of degree 3(d-2).
inline std::array<Form, 4> hessian_pencil(const Pencil& P) {
  return hessian_pencil(P.F0, P.F1);
}

// Tangent-line contact order of the curve g = 0 at any smooth projective
// point, moving to a chart where the point is affine first.
int tangent_multiplicity_at(const Form& g, const AlgPoint& P);

// All flexes of one smooth curve of degree >= 3: the common zeros of g and
// det Hess(g), each certified through its tangent line (contact >= 3), in
// every chart including z = 0.  MemberSingular when g fails its smoothness
// certificate; FlexCountMismatch when the certified count is not 3d(d-2)
// (a hyperflex elsewhere keeps the count, a degenerate configuration the
// enumeration cannot resolve does not).
std::vector<MemberFlex> flexes_of_form(const Form& g);

// Flex set of the member F_t; MemberSingular at a singular parameter.
FlexSet flexes_of_member(const Pencil& P, Param t);

// Flexes of a certified one-node member, away from the node.  Certifies
// (over the node's field) that the member meets its Hessian with order
// exactly 6 at the node and transversally at 3d(d-2) - 6 further distinct
// points; enumerates those that are reachable.  UnexpectedFlexDeficit when
// the count or the node order is off.
NodalFlexes nodal_member_flexes(const Pencil& P, const SingularFiber& sf);

// Locate every member with a hyperflex.  The candidate parameters are the
// roots of the discriminant (in x) of Res_y(f_t, h_t) after the singular
// parameters are divided out; each surviving root is certified by locating
// the hyperflex point on that member and checking tangent contact >= 4,
// spurious roots are discarded by the same certification.  When the census
// is complete the record count must be 6(d-3)(3d-2), else
// CensusCountMismatch (the pencil is then not generic for this census;
// reseed).  The discriminant samples stream into `cache_path` when given
// (one "t<TAB>value" line per sample under a parameter header), and a
// matching cache resumes an interrupted run.
Census hyperflex_census(const Pencil& P, const std::string& cache_path = "");

// For each base point, the members inflecting there: the Hessian cubic
// h0(P) + h1(P) t + h2(P) t^2 + h3(P) t^3 pinned to the point.  Informational
// (no generic count is asserted); each reported parameter is tangent-certified.
std::vector<BasePointFlexes> base_point_flexes(const Pencil& P);

}  // namespace hessec
