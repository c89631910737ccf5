#ifndef PFOL_GEOM_PLANE_HPP
#define PFOL_GEOM_PLANE_HPP

#include <array>

#include "geom/affine.hpp"

namespace pfol {

// Projective 1-form A dx + B dy + C dz on the plane, A, B, C homogeneous of
// degree d+1 with x A + y B + z C = 0, coprime coefficients.
class PlaneForm {
public:
  static PlaneForm make(MPoly A, MPoly B, MPoly C);

  const MPoly& A() const { return A_; }
  const MPoly& B() const { return B_; }
  const MPoly& C() const { return C_; }
  int degree() const { return d_; }
  const FieldPtr& field() const { return A_.field(); }
  const VarsPtr& vars() const { return A_.vars(); }

private:
  PlaneForm(MPoly A, MPoly B, MPoly C, int d)
      : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), d_(d) {}
  MPoly A_, B_, C_;
  int d_;
};

// homogeneous vector field L dx + M dy + N dz of degree d with zero divergence
struct PlaneField {
  MPoly L, M, N;
};

// exterior-derivative correspondence; requires p not dividing d+2
PlaneField field_from_form(const PlaneForm& w);
// (A, B, C) = i_v i_R (dx^dy^dz) without saturation; every radial-compatible
// coefficient triple arises this way
std::array<MPoly, 3> radial_contraction(const MPoly& L, const MPoly& M, const MPoly& N);
// contraction of (L,M,N) and the radial field against the volume form,
// saturated; the removed common factor is reported
struct FormFromField {
  PlaneForm form;
  MPoly saturation;
};
FormFromField form_from_field(const MPoly& L, const MPoly& M, const MPoly& N);

struct PlaneDivisor {
  MPoly section;  // homogeneous of degree p(d-1)+d+2
  Divisor divisor;
  bool degree_check;
  long expected_degree;
};
PlaneDivisor p_divisor_p2(const PlaneForm& w, FactorMode mode = FactorMode::Full,
                          uint64_t seed = 1);

bool is_invariant_proj(const PlaneForm& w, const MPoly& F);

// a divisor component with multiplicity not divisible by p, verified
// invariant; nullopt when every multiplicity is divisible by p
std::optional<MPoly> find_invariant_curve(const PlaneForm& w, uint64_t seed = 1);

// pullback along [x:y:z] -> [x^e:y^e:z^e], saturated
PlaneForm power_pullback(const PlaneForm& w, long e);

struct PullbackReducedReport {
  bool preconditions_hold;  // input reduced, var does not divide it, gcd(l,p)=1
  bool reduced;             // substituted polynomial is squarefree
};
PullbackReducedReport pullback_preserves_squarefree_test(const MPoly& F, long l,
                                                         const std::string& var);

// restriction of the form to an affine chart (0: x=1 with coords (y,z),
// 1: y=1 with coords (x,z), 2: z=1 with coords (x,y)), saturated
AffineForm restrict_to_chart(const PlaneForm& w, unsigned chart, VarsPtr chart_ring);

// compactify an affine 1-form on the chart z=1 to the plane
PlaneForm plane_from_affine(const AffineForm& w, VarsPtr plane_ring);

// integer-coefficient projective 1-form for reduction pipelines
struct ZPlaneForm {
  VarsPtr vars;
  std::vector<std::pair<Mono, long long>> A, B, C;
};

struct Certificate {
  uint64_t p;
  int degree;
  bool valid_reduction;
  bool p_closed;
  bool degree_check;
  std::optional<Divisor> delta;
  bool delta_irreducible;               // single component of multiplicity one
  std::vector<std::string> irreducible_over;  // fields over which this was certified
  bool nondicritical_asserted;
  std::string conclusion;
};
// reduce mod p, compute and factor the p-divisor, probe irreducibility over
// extensions up to the given bound
Certificate reduce_and_certify(const ZPlaneForm& w, uint64_t p, bool assert_nondicritical,
                               unsigned extension_bound = 2, uint64_t seed = 1);

}  // namespace pfol

#endif
