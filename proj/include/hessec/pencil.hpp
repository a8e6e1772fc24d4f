#pragma once

#include <cstdint>
#include <vector>

#include "hessec/fields.hpp"
#include "hessec/mpoly.hpp"
#include "hessec/points.hpp"
#include "hessec/rng.hpp"
#include "hessec/upoly.hpp"

namespace hessec {

// Member parameter: an element of F_p, or the point at infinity of the
// parameter line (whose member is F1).
struct Param {
  bool infinite = false;
  PrimeField::Elem v = 0;

  static Param finite(PrimeField::Elem e) { return {false, e}; }
  static Param inf() { return {true, 0}; }
};

// A certified singular member: parameter, its unique node (rational over the
// parameter's field), and the node's local structure (multiplicity 2,
// ordinary).
struct SingularFiber {
  AlgValue t;
  AlgPoint node;
  LocalStructure local;
};

struct PencilCerts {
  bool frame_ok = false;   // nothing at z = 0, charts usable, t = infinity member smooth
  bool base_ok = false;    // d^2 distinct transverse base points
  bool fibers_ok = false;  // exactly 3(d-1)^2 fibers, one ordinary node each
  int redraws = 0;         // failed frames consumed before validation passed
  bool remixed = false;    // basis was shifted because the first t = infinity member was singular
};

struct Pencil {
  int d = 0;
  PrimeField F;
  Form F0, F1;     // working coordinates (frame already applied)
  Mat3 frame;      // the coordinate change in force
  uint64_t seed = 0;
  PencilCerts certs;
  std::vector<AlgPoint> base;         // filled by validate_lefschetz
  std::vector<SingularFiber> fibers;  // filled by validate_lefschetz
};

// F0 + t*F1, or F1 at t = infinity.
Form member(const Pencil& P, Param t);

// Every common point of A = B = 0, including any on z = 0.  The degrees may
// differ.  Enumerates through multiplicities, so it also resolves non-reduced
// intersections as long as each multiple abscissa stays in the prime field;
// works over small fields.  DegeneratePencil when the curves share a
// component, NonReducedBaseLocus when a multiple abscissa cannot be resolved
// inside one explicit extension.
std::vector<AlgPoint> intersection_points(const PrimeField& F, const Form& A, const Form& B);

// Every common point of F0 = F1 = 0 (a validated pencil has none on z = 0):
// intersection_points restricted to equal-degree generators.
std::vector<AlgPoint> base_points(const PrimeField& F, const Form& F0, const Form& F1);

// Certified singular parameters with their nodes, sorted canonically.
// Candidates come from the double discriminant of the generic member,
// computed in both elimination charts; each candidate is certified (or
// discarded) independently.  WrongSingularCount when the certified fibers do
// not number exactly 3(d-1)^2, NonNodalFiber when a singular member is not a
// one-node curve.
std::vector<SingularFiber> singular_parameters(const Pencil& P);

// Full validation: structural checks, frame quality, reduced base locus of
// size d^2, nodal fiber inventory of size 3(d-1)^2.  Fills the caches and
// certificate flags; throws on the first failure (DegeneratePencil,
// MemberSingular, NonReducedBaseLocus, WrongSingularCount, NonNodalFiber, ...).
void validate_lefschetz(Pencil& P);

// Draw coefficients and a coordinate frame from the seed, validate, redraw
// on genericity failures (at most 20 attempts, then GenericityExhausted).
// Deterministic in (d, seed, F).
Pencil random_pencil(int d, uint64_t seed, const PrimeField& F);

namespace detail {

// Constant-gcd certificate that a projective plane curve is smooth; a false
// return means "possibly singular" (sufficient for redraw policies).
bool form_smooth_cert(const Form& g);

// The z = 1 charts of both generators, U = x / V = y (swapped when asked).
std::pair<BiPoly<PrimeField>, BiPoly<PrimeField>> pencil_charts(const Pencil& P, bool swap_xy);

// f_t0 over K as a bivariate in the standard chart: chart(F0) + t0*chart(F1).
BiPoly<ExtField> member_chart_ext(const Pencil& P, const ExtField& K, const ExtField::Elem& t0,
                                  bool swap_xy);

}  // namespace detail

}  // namespace hessec
