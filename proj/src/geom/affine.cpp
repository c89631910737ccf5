#include "geom/affine.hpp"

namespace pfol {

VectorField VectorField::make(MPoly a, MPoly b, MPoly* removed) {
  a.require_ring(b);
  if (a.nvars() != 2) fail(Err::ValidationError, "vector field needs a 2-variable ring");
  if (a.is_zero() && b.is_zero()) fail(Err::ValidationError, "zero vector field");
  MPoly g = gcd(a, b);
  if (removed) *removed = g;
  if (!g.is_constant()) {
    a = a.exact_div(g);
    b = b.exact_div(g);
  }
  return VectorField(std::move(a), std::move(b));
}

VectorField VectorField::raw(MPoly a, MPoly b) {
  a.require_ring(b);
  return VectorField(std::move(a), std::move(b));
}

AffineForm AffineForm::make(MPoly cx, MPoly cy, MPoly* removed) {
  cx.require_ring(cy);
  if (cx.nvars() != 2) fail(Err::ValidationError, "affine form needs a 2-variable ring");
  if (cx.is_zero() && cy.is_zero()) fail(Err::ValidationError, "zero 1-form");
  MPoly g = gcd(cx, cy);
  if (removed) *removed = g;
  if (!g.is_constant()) {
    cx = cx.exact_div(g);
    cy = cy.exact_div(g);
  }
  return AffineForm(std::move(cx), std::move(cy));
}

AffineForm dual_form(const VectorField& v) { return AffineForm::make(v.b(), -v.a()); }

VectorField dual_field(const AffineForm& w) { return VectorField::make(w.cdy(), -w.cdx()); }

MPoly apply(const VectorField& v, const MPoly& f) {
  return v.a() * f.derivative(0) + v.b() * f.derivative(1);
}

PPower p_power(const VectorField& v) {
  uint64_t p = v.field()->p();
  MPoly ix = MPoly::variable(v.field(), v.vars(), 0);
  MPoly iy = MPoly::variable(v.field(), v.vars(), 1);
  for (uint64_t i = 0; i < p; ++i) {
    ix = apply(v, ix);
    iy = apply(v, iy);
  }
  return {std::move(ix), std::move(iy)};
}

bool is_p_closed(const VectorField& v) {
  PPower w = p_power(v);
  return (v.a() * w.vy - v.b() * w.vx).is_zero();
}

AffineDivisor p_divisor_affine(const VectorField& v, FactorMode mode, uint64_t seed) {
  PPower w = p_power(v);
  // i_{v^p} of omega = b dx - a dy
  MPoly section = v.b() * w.vx - v.a() * w.vy;
  if (section.is_zero()) fail(Err::PClosed, "foliation is p-closed; the p-divisor is undefined");
  Divisor div = mode == FactorMode::Full ? factor_bivariate(section, seed)
                                         : squarefree_decompose(section);
  return {std::move(section), std::move(div)};
}

bool is_invariant(const VectorField& v, const MPoly& f) {
  if (f.is_constant()) fail(Err::ValidationError, "invariance is for nonconstant curves");
  return f.divides(apply(v, f));
}

VectorField translate(const VectorField& v, const Fq& x0, const Fq& y0) {
  FieldPtr F = v.field();
  VarsPtr V = v.vars();
  MPoly x = MPoly::variable(F, V, 0) + MPoly::constant(F, V, x0);
  MPoly y = MPoly::variable(F, V, 1) + MPoly::constant(F, V, y0);
  return VectorField::raw(v.a().substitute({x, y}), v.b().substitute({x, y}));
}

SingularityReport classify_singularity(const VectorField& v, const Fq& x0, const Fq& y0,
                                       uint64_t seed) {
  FieldPtr F = v.field();
  std::vector<Fq> pt{x0, y0};
  if (!v.a().eval(pt).is_zero() || !v.b().eval(pt).is_zero())
    return {SingularityReport::Smooth, std::nullopt, false};
  // 2x2 linear part at the point
  Fq j00 = v.a().derivative(0).eval(pt), j01 = v.a().derivative(1).eval(pt);
  Fq j10 = v.b().derivative(0).eval(pt), j11 = v.b().derivative(1).eval(pt);
  Fq det = j00 * j11 - j01 * j10;
  if (det.is_zero()) return {SingularityReport::Degenerate, std::nullopt, false};
  Fq tr = j00 + j11;
  // eigenvalues: roots of z^2 - tr z + det, both nonzero
  UPoly chi(F, {det, -tr, Fq(F, 1)});
  std::vector<Fq> roots = uroots(chi, seed);
  if (roots.empty()) {
    FieldEmbedding emb = FieldEmbedding::make(F, 2, seed);
    UPoly chi2 = emb.embed(chi);
    roots = uroots(chi2, seed);
  }
  if (roots.size() != 2) fail(Err::Internal, "quadratic did not split over the degree-2 extension");
  Fq r1 = roots[0] * roots[1].inv();
  Fq r2 = roots[1] * roots[0].inv();
  // ratio and its inverse are prime-field members together; report the
  // lexicographically smaller representative
  Fq alpha = r1.less(r2) ? r1 : r2;
  bool pr = !alpha.in_prime_field();
  return {SingularityReport::NonDegenerate, alpha, pr};
}

// ---------------------------------------------------------------------------
// blowup charts
// ---------------------------------------------------------------------------

namespace {

struct ChartMap {
  MPoly sub0, sub1;  // images of the source variables in the chart ring
  unsigned exc;      // index of the exceptional coordinate in the chart ring
};

ChartMap chart_map(FieldPtr F, VarsPtr cv, BlowupChart chart) {
  MPoly u = MPoly::variable(F, cv, 0);
  MPoly w = MPoly::variable(F, cv, 1);
  if (chart == BlowupChart::First) return {u, u * w, 0};  // (x, y) = (x, x t)
  return {u * w, w, 1};                                   // (x, y) = (s y, y)
}

long strip_power(MPoly& f, unsigned var, FieldPtr F, VarsPtr V) {
  if (f.is_zero()) return 0;
  unsigned e = 0xffff;
  for (auto& t : f.terms()) e = std::min(e, mono_get(t.m, var));
  if (e > 0) f = f.exact_div(MPoly::variable(F, V, var, e));
  return (long)e;
}

}  // namespace

BlowupPoly blowup_chart(const MPoly& f, BlowupChart chart, VarsPtr cv) {
  FieldPtr F = f.field();
  ChartMap m = chart_map(F, cv, chart);
  MPoly g = f.substitute({m.sub0, m.sub1});
  long e = strip_power(g, m.exc, F, cv);
  return {std::move(g), e};
}

namespace {

long min_power(const MPoly& f, unsigned var) {
  if (f.is_zero()) return -1;
  long e = 0xffff;
  for (auto& t : f.terms()) e = std::min(e, (long)mono_get(t.m, var));
  return e;
}

// divide the pair by the maximal common power of the exceptional coordinate
long strip_common(MPoly& n1, MPoly& n2, unsigned exc, FieldPtr F, VarsPtr cv) {
  long e1 = min_power(n1, exc), e2 = min_power(n2, exc);
  long e = e1 < 0 ? e2 : (e2 < 0 ? e1 : std::min(e1, e2));
  if (e > 0) {
    MPoly d = MPoly::variable(F, cv, exc, (unsigned)e);
    if (!n1.is_zero()) n1 = n1.exact_div(d);
    if (!n2.is_zero()) n2 = n2.exact_div(d);
  }
  return std::max(e, 0L);
}

}  // namespace

BlowupForm blowup_chart(const AffineForm& w, BlowupChart chart, VarsPtr cv) {
  FieldPtr F = w.field();
  ChartMap m = chart_map(F, cv, chart);
  MPoly c1 = w.cdx().substitute({m.sub0, m.sub1});
  MPoly c2 = w.cdy().substitute({m.sub0, m.sub1});
  MPoly u = MPoly::variable(F, cv, 0);
  MPoly t = MPoly::variable(F, cv, 1);
  MPoly n1, n2;
  if (chart == BlowupChart::First) {
    // dx -> dx, dy -> t dx + x dt
    n1 = c1 + t * c2;
    n2 = u * c2;
  } else {
    // dx -> y ds + s dy, dy -> dy
    n1 = t * c1;
    n2 = c2 + u * c1;
  }
  long e = strip_common(n1, n2, m.exc, F, cv);
  return {AffineForm::make(std::move(n1), std::move(n2)), e};
}

BlowupField blowup_chart(const VectorField& v, BlowupChart chart, VarsPtr cv) {
  FieldPtr F = v.field();
  ChartMap m = chart_map(F, cv, chart);
  MPoly a = v.a().substitute({m.sub0, m.sub1});
  MPoly b = v.b().substitute({m.sub0, m.sub1});
  MPoly u = MPoly::variable(F, cv, 0);
  MPoly t = MPoly::variable(F, cv, 1);
  // pole along E cleared by multiplying through with the exceptional coordinate
  MPoly n1, n2;
  if (chart == BlowupChart::First) {
    // x' = x a, t' = b - t a  (the derivation x * pullback)
    n1 = u * a;
    n2 = b - t * a;
  } else {
    // s' = a - s b, y' = y b
    n1 = a - u * b;
    n2 = t * b;
  }
  long e = strip_common(n1, n2, m.exc, F, cv);
  return {VectorField::raw(std::move(n1), std::move(n2)), e};
}

BlowupDivisorReport transform_p_divisor_under_blowup(const VectorField& v, uint64_t seed) {
  FieldPtr F = v.field();
  Fq zero(F, 0);
  SingularityReport rep = classify_singularity(v, zero, zero, seed);
  BlowupDivisorReport::Case which;
  if (rep.kind == SingularityReport::NonDegenerate && rep.p_reduced) {
    which = BlowupDivisorReport::PReducedCenter;
  } else if (rep.kind == SingularityReport::Smooth) {
    MPoly section = p_divisor_affine(v).section;
    if (section.eval({zero, zero}).is_zero())
      fail(Err::UnsupportedCenter, "smooth center lies on the p-divisor");
    which = BlowupDivisorReport::NonSingularCenter;
  } else {
    fail(Err::UnsupportedCenter,
         "center must be a p-reduced singularity or a smooth point off the p-divisor");
  }
  std::string exc_name = v.vars()->name(0) == "t" ? "s" : "t";
  if (v.vars()->name(1) == exc_name) exc_name += "1";
  VarsPtr cv = Vars::make({v.vars()->name(0), exc_name});
  BlowupField bf = blowup_chart(v, BlowupChart::First, cv);
  MPoly removed(F, cv);
  VectorField strict = VectorField::make(bf.strict.a(), bf.strict.b(), &removed);
  MPoly section = p_divisor_affine(strict, FactorMode::SquarefreeOnly, seed).section;
  long mult = 0;
  if (!section.is_zero()) {
    unsigned e = 0xffff;
    for (auto& t : section.terms()) e = std::min(e, mono_get(t.m, 0));
    mult = (long)e;
  }
  return {which, mult};
}

}  // namespace pfol
