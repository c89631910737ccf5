#ifndef PFOL_GEOM_AFFINE_HPP
#define PFOL_GEOM_AFFINE_HPP

#include <optional>

#include "factor/factor.hpp"
#include "poly/mpoly.hpp"

namespace pfol {

// Derivation a*d/dx + b*d/dy on the affine plane, saturated (gcd(a,b) = 1).
class VectorField {
public:
  // saturates; reports the removed common factor on request
  static VectorField make(MPoly a, MPoly b, MPoly* removed = nullptr);
  // no saturation; for derivations that are not foliation generators
  static VectorField raw(MPoly a, MPoly b);

  const MPoly& a() const { return a_; }
  const MPoly& b() const { return b_; }
  const FieldPtr& field() const { return a_.field(); }
  const VarsPtr& vars() const { return a_.vars(); }

private:
  VectorField(MPoly a, MPoly b) : a_(std::move(a)), b_(std::move(b)) {}
  MPoly a_, b_;
};

// 1-form c_dx*dx + c_dy*dy, saturated.
class AffineForm {
public:
  static AffineForm make(MPoly c_dx, MPoly c_dy, MPoly* removed = nullptr);

  const MPoly& cdx() const { return cdx_; }
  const MPoly& cdy() const { return cdy_; }
  const FieldPtr& field() const { return cdx_.field(); }
  const VarsPtr& vars() const { return cdx_.vars(); }

private:
  AffineForm(MPoly cx, MPoly cy) : cdx_(std::move(cx)), cdy_(std::move(cy)) {}
  MPoly cdx_, cdy_;
};

// duality with i_v(omega) = 0: v = (a, b) <-> omega = b dx - a dy
AffineForm dual_form(const VectorField& v);
VectorField dual_field(const AffineForm& w);

// v(f) = a df/dx + b df/dy
MPoly apply(const VectorField& v, const MPoly& f);

// images of the two coordinates under the p-th power of the derivation;
// not saturated (v^p may share factors with v)
struct PPower {
  MPoly vx, vy;
};
PPower p_power(const VectorField& v);

bool is_p_closed(const VectorField& v);

enum class FactorMode { SquarefreeOnly, Full };

struct AffineDivisor {
  MPoly section;    // i_{v^p}(dual_form(v)), defined up to a unit
  Divisor divisor;  // SquarefreeOnly: squarefree decomposition; Full: irreducible
};
AffineDivisor p_divisor_affine(const VectorField& v, FactorMode mode = FactorMode::SquarefreeOnly,
                               uint64_t seed = 1);

bool is_invariant(const VectorField& v, const MPoly& f);

struct SingularityReport {
  enum Kind { Smooth, Degenerate, NonDegenerate } kind;
  std::optional<Fq> alpha;  // eigenvalue ratio, possibly in an extension
  bool p_reduced = false;
};
SingularityReport classify_singularity(const VectorField& v, const Fq& x0, const Fq& y0,
                                       uint64_t seed = 1);

// translate so that (x0, y0) becomes the origin
VectorField translate(const VectorField& v, const Fq& x0, const Fq& y0);

// Blowup charts at the origin. First chart: (x, y) = (x, x t); second:
// (x, y) = (s y, y). The maximal power of the exceptional coordinate is
// divided out and reported.
struct BlowupPoly {
  MPoly strict;  // in the chart ring
  long exceptional_order;
};
struct BlowupForm {
  AffineForm strict;
  long exceptional_order;
};
struct BlowupField {
  VectorField strict;
  long exceptional_order;
};
enum class BlowupChart { First, Second };

BlowupPoly blowup_chart(const MPoly& f, BlowupChart chart, VarsPtr chart_ring);
BlowupForm blowup_chart(const AffineForm& w, BlowupChart chart, VarsPtr chart_ring);
BlowupField blowup_chart(const VectorField& v, BlowupChart chart, VarsPtr chart_ring);

struct BlowupDivisorReport {
  enum Case { PReducedCenter, NonSingularCenter } center_case;
  long exceptional_multiplicity;  // multiplicity of E in the blown-up p-divisor
};
// center must be the origin: either a p-reduced singularity, or a smooth
// point off the p-divisor
BlowupDivisorReport transform_p_divisor_under_blowup(const VectorField& v, uint64_t seed = 1);

}  // namespace pfol

#endif
