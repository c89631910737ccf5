#include "geom/ruled.hpp"

#include <algorithm>

namespace pfol {

NumClass NumClass::operator+(const NumClass& o) const {
  if (d != o.d) fail(Err::WrongSurface, "numerical classes on different ruled surfaces");
  return {a + o.a, b + o.b, d};
}

long intersect(const NumClass& c1, const NumClass& c2) {
  if (c1.d != c2.d) fail(Err::WrongSurface, "numerical classes on different ruled surfaces");
  return c1.a * c2.b + c1.b * c2.a + (long)c1.d * c1.b * c2.b;
}

namespace {

// expected coefficient bidegrees relative to (d1, d2):
//   A0, A1 : (d1 - d + 1, d2 + 2)
//   B0     : (d1 - d + 2, d2 + 1)
//   B1     : (d1 + 2,     d2 + 1)
std::optional<std::pair<long, long>> infer_d1d2(int d, const MPoly& A0, const MPoly& A1,
                                                const MPoly& B0, const MPoly& B1) {
  if (!A0.is_zero()) {
    auto bd = A0.bidegree(d);
    if (!bd) return std::nullopt;
    return std::make_pair(bd->first + d - 1, bd->second - 2);
  }
  if (!A1.is_zero()) {
    auto bd = A1.bidegree(d);
    if (!bd) return std::nullopt;
    return std::make_pair(bd->first + d - 1, bd->second - 2);
  }
  if (!B0.is_zero()) {
    auto bd = B0.bidegree(d);
    if (!bd) return std::nullopt;
    return std::make_pair(bd->first + d - 2, bd->second - 1);
  }
  if (!B1.is_zero()) {
    auto bd = B1.bidegree(d);
    if (!bd) return std::nullopt;
    return std::make_pair(bd->first - 2, bd->second - 1);
  }
  return std::nullopt;
}

}  // namespace

SigmaValidation validate_sigma(int d, const MPoly& A0, const MPoly& A1, const MPoly& B0,
                               const MPoly& B1) {
  if (A0.nvars() != 4) return {false, "a ruled-surface form needs a 4-variable ring"};
  if (A0.is_zero() && A1.is_zero() && B0.is_zero() && B1.is_zero())
    return {false, "zero 1-form"};
  auto dd = infer_d1d2(d, A0, A1, B0, B1);
  if (!dd) return {false, "coefficients are not bihomogeneous"};
  auto [d1, d2] = *dd;
  auto check = [&](const MPoly& f, long e1, long e2, const char* name) -> std::string {
    if (f.is_zero()) return "";
    if (!f.grade_check(Grading::bidegree(d, e1, e2)).ok)
      return std::string(name) + " has the wrong bidegree";
    return "";
  };
  for (auto& msg : {check(A0, d1 - d + 1, d2 + 2, "A0"), check(A1, d1 - d + 1, d2 + 2, "A1"),
                    check(B0, d1 - d + 2, d2 + 1, "B0"), check(B1, d1 + 2, d2 + 1, "B1")}) {
    if (!msg.empty()) return {false, msg};
  }
  FieldPtr F = A0.field();
  VarsPtr V = A0.vars();
  MPoly x0 = MPoly::variable(F, V, 0), x1 = MPoly::variable(F, V, 1);
  MPoly y0 = MPoly::variable(F, V, 2), y1 = MPoly::variable(F, V, 3);
  MPoly rel1 = x0 * A0 + x1 * A1 - (y1 * B1).scaled(Fq(F, d));
  if (!rel1.is_zero()) return {false, "relation x0*A0 + x1*A1 - d*y1*B1 = 0 fails"};
  MPoly rel2 = y0 * B0 + y1 * B1;
  if (!rel2.is_zero()) return {false, "relation y0*B0 + y1*B1 = 0 fails"};
  MPoly g = gcd(gcd(A0, A1), gcd(B0, B1));
  if (!g.is_constant()) return {false, "coefficients share a factor; the form is not saturated"};
  return {true, ""};
}

SigmaForm SigmaForm::make(int d, MPoly A0, MPoly A1, MPoly B0, MPoly B1) {
  SigmaValidation v = validate_sigma(d, A0, A1, B0, B1);
  if (!v.ok) fail(Err::ValidationError, v.violation);
  auto dd = infer_d1d2(d, A0, A1, B0, B1);
  return SigmaForm(d, dd->first, dd->second, std::move(A0), std::move(A1), std::move(B0),
                   std::move(B1));
}

VarsPtr sigma_chart_ring(const SigmaForm& s, SigmaChart chart) {
  VarsPtr V = s.vars();
  unsigned i = (chart == SigmaChart::U10 || chart == SigmaChart::U11) ? 1 : 0;
  unsigned j = (chart == SigmaChart::U01 || chart == SigmaChart::U11) ? 1 : 0;
  return Vars::make({V->name(1 - i), V->name(2 + (1 - j))});
}

namespace {

// set variable u1 < u2 to 1, keeping the other two
MPoly restrict2(const MPoly& f, unsigned u1, unsigned u2, VarsPtr ring2) {
  VarsPtr V = f.vars();
  std::vector<std::string> mid;
  for (unsigned i = 0; i < 4; ++i)
    if (i != u2) mid.push_back(V->name(i));
  VarsPtr ring3 = Vars::make(mid);
  return set_var_one(set_var_one(f, u2, ring3), u1, ring2);
}

struct ChartIdx {
  unsigned xi, yj;        // unit variables (indices in the 4-var ring)
  unsigned xfree, yfree;  // free variables
};

ChartIdx chart_idx(SigmaChart chart) {
  unsigned i = (chart == SigmaChart::U10 || chart == SigmaChart::U11) ? 1 : 0;
  unsigned j = (chart == SigmaChart::U01 || chart == SigmaChart::U11) ? 1 : 0;
  return {i, 2 + j, 1 - i, 2 + (1 - j)};
}

MPoly restrict_to(const SigmaForm& s, const MPoly& f, SigmaChart chart, VarsPtr ring2) {
  ChartIdx c = chart_idx(chart);
  (void)s;
  return restrict2(f, c.xi, c.yj, ring2);
}

}  // namespace

AffineForm chart_restrict(const SigmaForm& s, SigmaChart chart) {
  VarsPtr R = sigma_chart_ring(s, chart);
  ChartIdx c = chart_idx(chart);
  const MPoly& ax = c.xfree == 0 ? s.A0() : s.A1();
  const MPoly& by = c.yfree == 2 ? s.B0() : s.B1();
  return AffineForm::make(restrict2(ax, c.xi, c.yj, R), restrict2(by, c.xi, c.yj, R));
}

namespace {

// minimal bihomogenization of a chart-U11 polynomial g(x0, y0)
MPoly bihomogenize_u11(const MPoly& g, int d, VarsPtr V4) {
  long B = std::max<long>(g.degree_in(1), 0);
  long A = 0;
  for (auto& t : g.terms())
    A = std::max(A, (long)mono_get(t.m, 0) + (long)d * (long)mono_get(t.m, 1));
  std::vector<Term> ts;
  for (auto& t : g.terms()) {
    long i = mono_get(t.m, 0), j = mono_get(t.m, 1);
    Mono m = 0;
    m = mono_set(m, 0, (unsigned)i);
    m = mono_set(m, 1, (unsigned)(A - i - d * j));
    m = mono_set(m, 2, (unsigned)j);
    m = mono_set(m, 3, (unsigned)(B - j));
    ts.push_back({m, t.c});
  }
  return MPoly::from_terms(g.field(), V4, std::move(ts));
}

long ord_of_var(const MPoly& f, unsigned var) {
  long e = 0xffff;
  for (auto& t : f.terms()) e = std::min(e, (long)mono_get(t.m, var));
  return f.is_zero() ? 0 : e;
}

}  // namespace

SigmaDivisor p_divisor_sigma(const SigmaForm& s, FactorMode mode, uint64_t seed) {
  FieldPtr F = s.field();
  VarsPtr V = s.vars();
  uint64_t p = F->p();

  const SigmaChart charts[4] = {SigmaChart::U00, SigmaChart::U01, SigmaChart::U10, SigmaChart::U11};
  MPoly sections[4];
  VarsPtr rings[4];
  for (int c = 0; c < 4; ++c) {
    rings[c] = sigma_chart_ring(s, charts[c]);
    VectorField v = dual_field(chart_restrict(s, charts[c]));
    PPower w = p_power(v);
    sections[c] = v.b() * w.vx - v.a() * w.vy;
    if (sections[c].is_zero())
      fail(Err::PClosed, "foliation is p-closed; the p-divisor is undefined");
  }
  const MPoly& sec11 = sections[3];

  Divisor global;
  global.field = F;
  global.vars = V;
  global.unit = Fq(F, 1);
  Divisor d11 = mode == FactorMode::Full ? factor_bivariate(sec11, seed)
                                         : squarefree_decompose(sec11);
  for (auto& c : d11.comps)
    global.comps.push_back({bihomogenize_u11(c.poly, s.d(), V), c.mult, c.irreducible});
  // {x1 = 0} is invisible on U11; read it from U01 where x1 is the first
  // chart variable. {y1 = 0} likewise from U10.
  long m_x1 = ord_of_var(sections[1], 0);
  long m_y1 = ord_of_var(sections[2], 1);
  if (m_x1 > 0) global.comps.push_back({MPoly::variable(F, V, 1), m_x1, true});
  if (m_y1 > 0) global.comps.push_back({MPoly::variable(F, V, 3), m_y1, true});
  global.sort_canonical();

  // coherence: on every chart the restricted global divisor must reproduce
  // that chart's section up to a unit
  for (int c = 0; c < 4; ++c) {
    MPoly prod = MPoly::constant(F, rings[c], 1);
    for (auto& comp : global.comps) {
      MPoly r = restrict_to(s, comp.poly, charts[c], rings[c]);
      if (r.is_zero()) fail(Err::Internal, "component restricts to zero");
      if (r.is_constant()) continue;
      prod *= r.pow((uint64_t)comp.mult);
    }
    if (!prod.same_divisor(sections[c]))
      fail(Err::Internal, "chart sections disagree with the assembled divisor");
  }

  NumClass cls{0, 0, s.d()};
  for (auto& comp : global.comps) {
    auto bd = comp.poly.bidegree(s.d());
    if (!bd) fail(Err::Internal, "divisor component is not bihomogeneous");
    cls.a += comp.mult * bd->first;
    cls.b += comp.mult * bd->second;
  }
  NumClass expected = s.canonical_class().scaled((long)p) + s.normal_class();
  return {std::move(global), cls, expected, cls == expected};
}

Biproj biprojectivize(const MPoly& f, VarsPtr ring4) {
  if (f.nvars() != 2) fail(Err::ValidationError, "biprojectivization expects a 2-variable input");
  if (f.is_constant()) fail(Err::ValidationError, "biprojectivization expects a nonconstant input");
  long dx = std::max<long>(f.degree_in(0), 0), dy = std::max<long>(f.degree_in(1), 0);
  std::vector<Term> ts;
  for (auto& t : f.terms()) {
    long i = mono_get(t.m, 0), j = mono_get(t.m, 1);
    Mono m = 0;
    m = mono_set(m, 0, (unsigned)i);
    m = mono_set(m, 1, (unsigned)(dx - i));
    m = mono_set(m, 2, (unsigned)j);
    m = mono_set(m, 3, (unsigned)(dy - j));
    ts.push_back({m, t.c});
  }
  long D = f.degree();
  bool hyp = false, hypx = false, hypy = false;
  for (auto& t : f.terms()) {
    if ((long)mono_get(t.m, 0) == D && mono_get(t.m, 1) == 0) hypx = true;
    if ((long)mono_get(t.m, 1) == D && mono_get(t.m, 0) == 0) hypy = true;
  }
  hyp = hypx && hypy;
  return {MPoly::from_terms(f.field(), ring4, std::move(ts)), dx, dy, hyp};
}

SigmaForm power_pullback_sigma(const SigmaForm& s, long l) {
  if (s.d() != 0) fail(Err::WrongSurface, "power pullback is defined on the product of two lines");
  FieldPtr F = s.field();
  VarsPtr V = s.vars();
  uint64_t p = F->p();
  if (l < 1 || (l % (long)p) == 0)
    fail(Err::ExponentDividesP, "pullback exponent must be positive and prime to p");
  if (l == 1) return s;
  std::vector<MPoly> sub{MPoly::variable(F, V, 0, (unsigned)l), MPoly::variable(F, V, 1, (unsigned)l),
                         MPoly::variable(F, V, 2), MPoly::variable(F, V, 3)};
  Fq le(F, l);
  MPoly A0 = s.A0().substitute(sub).scaled(le) * MPoly::variable(F, V, 0, (unsigned)(l - 1));
  MPoly A1 = s.A1().substitute(sub).scaled(le) * MPoly::variable(F, V, 1, (unsigned)(l - 1));
  MPoly B0 = s.B0().substitute(sub);
  MPoly B1 = s.B1().substitute(sub);
  MPoly g = gcd(gcd(A0, A1), gcd(B0, B1));
  if (!g.is_constant()) {
    A0 = A0.exact_div(g);
    A1 = A1.exact_div(g);
    B0 = B0.exact_div(g);
    B1 = B1.exact_div(g);
  }
  return SigmaForm::make(0, std::move(A0), std::move(A1), std::move(B0), std::move(B1));
}

ElemReport elementary_transform(const SigmaForm& s, uint64_t seed) {
  FieldPtr F = s.field();
  VarsPtr V = s.vars();
  MPoly x0 = MPoly::variable(F, V, 0), y1 = MPoly::variable(F, V, 3);
  if (!is_invariant_sigma(s, x0) || !is_invariant_sigma(s, y1))
    fail(Err::CenterNotOnCurves, "the fiber x0 = 0 and the section y1 = 0 must be invariant");
  VectorField v10 = dual_field(chart_restrict(s, SigmaChart::U10));
  Fq zero(F, 0);
  SingularityReport rep = classify_singularity(v10, zero, zero, seed);
  if (rep.kind != SingularityReport::NonDegenerate || !rep.p_reduced)
    fail(Err::CenterNotPReduced, "the center must be a p-reduced singularity");

  // y1 -> x0*y1 realizes blowup at the center followed by contraction of the
  // old fiber; the relations transform into the d+1 relations exactly
  std::vector<MPoly> sub{MPoly::variable(F, V, 0), MPoly::variable(F, V, 1),
                         MPoly::variable(F, V, 2), x0 * y1};
  MPoly b1s = s.B1().substitute(sub);
  MPoly A0 = s.A0().substitute(sub) + y1 * b1s;
  MPoly A1 = s.A1().substitute(sub);
  MPoly B0 = s.B0().substitute(sub);
  MPoly B1 = x0 * b1s;
  MPoly g = gcd(gcd(A0, A1), gcd(B0, B1));
  long sat = 0;
  if (!g.is_constant()) {
    if (g.nterms() != 1 || mono_get(g.lm(), 1) || mono_get(g.lm(), 2) || mono_get(g.lm(), 3))
      fail(Err::Internal, "pullback saturation is not a power of the exceptional coordinate");
    sat = mono_get(g.lm(), 0);
    A0 = A0.exact_div(g);
    A1 = A1.exact_div(g);
    B0 = B0.exact_div(g);
    B1 = B1.exact_div(g);
  }
  SigmaForm out = SigmaForm::make(s.d() + 1, std::move(A0), std::move(A1), std::move(B0),
                                  std::move(B1));
  bool kp = out.d1() == s.d1() && out.d2() == s.d2();
  return {std::move(out), sat, kp};
}

bool is_invariant_sigma(const SigmaForm& s, const MPoly& curve) {
  if (curve.is_constant()) fail(Err::ValidationError, "invariance is for nonconstant curves");
  if (!curve.bidegree(s.d())) fail(Err::ValidationError, "curve equation must be bihomogeneous");
  const SigmaChart charts[4] = {SigmaChart::U11, SigmaChart::U10, SigmaChart::U01, SigmaChart::U00};
  std::optional<bool> verdict;
  for (auto chart : charts) {
    VarsPtr R = sigma_chart_ring(s, chart);
    MPoly rc = restrict_to(s, curve, chart, R);
    if (rc.is_constant()) continue;
    VectorField v = dual_field(chart_restrict(s, chart));
    bool inv = is_invariant(v, rc);
    if (verdict && *verdict != inv) fail(Err::Internal, "charts disagree about invariance");
    verdict = inv;
  }
  if (!verdict) fail(Err::Internal, "curve is invisible on every chart");
  return *verdict;
}

bool proportional(const AffineForm& a, const AffineForm& b) {
  return (a.cdx() * b.cdy() - a.cdy() * b.cdx()).is_zero();
}

}  // namespace pfol
