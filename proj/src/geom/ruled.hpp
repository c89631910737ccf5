#ifndef PFOL_GEOM_RULED_HPP
#define PFOL_GEOM_RULED_HPP

#include "geom/affine.hpp"

namespace pfol {

// Numerical class a*F + b*M_d in the fiber/section basis of the ruled
// surface with ruling parameter d: F^2 = 0, F.M_d = 1, M_d^2 = d.
struct NumClass {
  long a = 0;
  long b = 0;
  int d = 0;

  bool operator==(const NumClass& o) const { return a == o.a && b == o.b && d == o.d; }
  NumClass operator+(const NumClass& o) const;
  NumClass scaled(long n) const { return {a * n, b * n, d}; }
};

long intersect(const NumClass& c1, const NumClass& c2);

struct SigmaValidation {
  bool ok = true;
  std::string violation;
};

// Foliation on the d-th ruled surface in the four homogeneous coordinates
// (x0, x1, y0, y1): Omega = A0 dx0 + A1 dx1 + B0 dy0 + B1 dy1 with
//   x0 A0 + x1 A1 - d y1 B1 = 0,   y0 B0 + y1 B1 = 0,
// coefficients bihomogeneous and jointly coprime. The pair (d1, d2) gives
// the canonical class d1*F + d2*M_d.
class SigmaForm {
public:
  static SigmaForm make(int d, MPoly A0, MPoly A1, MPoly B0, MPoly B1);

  int d() const { return d_; }
  long d1() const { return d1_; }
  long d2() const { return d2_; }
  NumClass canonical_class() const { return {d1_, d2_, d_}; }
  NumClass normal_class() const { return {d1_ - d_ + 2, d2_ + 2, d_}; }
  const MPoly& A0() const { return A0_; }
  const MPoly& A1() const { return A1_; }
  const MPoly& B0() const { return B0_; }
  const MPoly& B1() const { return B1_; }
  const FieldPtr& field() const { return A0_.field(); }
  const VarsPtr& vars() const { return A0_.vars(); }

private:
  SigmaForm(int d, long d1, long d2, MPoly A0, MPoly A1, MPoly B0, MPoly B1)
      : d_(d), d1_(d1), d2_(d2), A0_(std::move(A0)), A1_(std::move(A1)), B0_(std::move(B0)),
        B1_(std::move(B1)) {}
  int d_;
  long d1_, d2_;
  MPoly A0_, A1_, B0_, B1_;
};

// all invariants, reported rather than thrown
SigmaValidation validate_sigma(int d, const MPoly& A0, const MPoly& A1, const MPoly& B0,
                               const MPoly& B1);

// U_ij = {x_i != 0} & {y_j != 0}; restriction sets the two coordinates to 1
enum class SigmaChart { U00, U01, U10, U11 };

AffineForm chart_restrict(const SigmaForm& s, SigmaChart chart);
// ring of a chart: (free x variable, free y variable)
VarsPtr sigma_chart_ring(const SigmaForm& s, SigmaChart chart);

struct SigmaDivisor {
  Divisor divisor;  // bihomogeneous components in the 4-variable ring
  NumClass cls;
  NumClass expected;  // p*K + N
  bool class_check;
};
SigmaDivisor p_divisor_sigma(const SigmaForm& s, FactorMode mode = FactorMode::Full,
                             uint64_t seed = 1);

struct Biproj {
  MPoly poly;  // bihomogeneous in (x0, x1, y0, y1), d = 0
  long b1, b2;
  bool top_form_hypothesis;  // both pure top powers present in the leading form
};
Biproj biprojectivize(const MPoly& f, VarsPtr ring4);

// pullback along ([x0:x1],[y0:y1]) -> ([x0^l:x1^l],[y0:y1]) on d = 0
SigmaForm power_pullback_sigma(const SigmaForm& s, long l);

// blowup at {x0=0}.{y1=0} followed by contraction of the old fiber; the
// center must be a p-reduced singularity on the two coordinate curves
struct ElemReport {
  SigmaForm out;
  long saturation_order;  // power of x0 divided from the pullback
  bool k_preserved;       // canonical class unchanged (the l(Q) = 1 case)
};
ElemReport elementary_transform(const SigmaForm& s, uint64_t seed = 1);

bool is_invariant_sigma(const SigmaForm& s, const MPoly& curve);

bool proportional(const AffineForm& a, const AffineForm& b);

}  // namespace pfol

#endif
