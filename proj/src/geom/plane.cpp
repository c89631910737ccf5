#include "geom/plane.hpp"

#include <algorithm>

namespace pfol {

PlaneForm PlaneForm::make(MPoly A, MPoly B, MPoly C) {
  A.require_ring(B);
  A.require_ring(C);
  if (A.nvars() != 3) fail(Err::ValidationError, "plane form needs a 3-variable ring");
  if (A.is_zero() && B.is_zero() && C.is_zero()) fail(Err::ValidationError, "zero 1-form");
  long deg = std::max({A.degree(), B.degree(), C.degree()});
  for (const MPoly* f : {&A, &B, &C}) {
    if (!f->is_zero() && (f->degree() != deg || !f->grade_check(Grading::total(deg)).ok))
      fail(Err::ValidationError, "coefficients must be homogeneous of a common degree");
  }
  if (deg < 1) fail(Err::ValidationError, "coefficient degree must be at least 1");
  FieldPtr F = A.field();
  VarsPtr V = A.vars();
  MPoly euler = MPoly::variable(F, V, 0) * A + MPoly::variable(F, V, 1) * B +
                MPoly::variable(F, V, 2) * C;
  if (!euler.is_zero()) fail(Err::ValidationError, "radial contraction does not vanish");
  if (!gcd(gcd(A, B), C).is_constant())
    fail(Err::ValidationError, "coefficients share a factor; the singular locus is not finite");
  return PlaneForm(std::move(A), std::move(B), std::move(C), (int)deg - 1);
}

PlaneField field_from_form(const PlaneForm& w) {
  FieldPtr F = w.field();
  uint64_t p = F->p();
  long d = w.degree();
  if ((uint64_t)((d + 2) % (long)p) == 0)
    fail(Err::CharDividesDegree, "characteristic divides d+2; no exterior-derivative field");
  Fq scale = Fq(F, d + 2).inv();
  MPoly L = (w.C().derivative(1) - w.B().derivative(2)).scaled(scale);
  MPoly M = (w.A().derivative(2) - w.C().derivative(0)).scaled(scale);
  MPoly N = (w.B().derivative(0) - w.A().derivative(1)).scaled(scale);
  MPoly contraction = L * w.A() + M * w.B() + N * w.C();
  MPoly div = L.derivative(0) + M.derivative(1) + N.derivative(2);
  if (!contraction.is_zero() || !div.is_zero())
    fail(Err::Internal, "exterior-derivative field fails its defining identities");
  return {std::move(L), std::move(M), std::move(N)};
}

std::array<MPoly, 3> radial_contraction(const MPoly& L, const MPoly& M, const MPoly& N) {
  FieldPtr F = L.field();
  VarsPtr V = L.vars();
  MPoly x = MPoly::variable(F, V, 0), y = MPoly::variable(F, V, 1), z = MPoly::variable(F, V, 2);
  return {M * z - N * y, N * x - L * z, L * y - M * x};
}

FormFromField form_from_field(const MPoly& L, const MPoly& M, const MPoly& N) {
  auto [A, B, C] = radial_contraction(L, M, N);
  if (A.is_zero() && B.is_zero() && C.is_zero())
    fail(Err::RadialField, "field is proportional to the radial field");
  MPoly g = gcd(gcd(A, B), C);
  if (!g.is_constant()) {
    A = A.exact_div(g);
    B = B.exact_div(g);
    C = C.exact_div(g);
  }
  return {PlaneForm::make(std::move(A), std::move(B), std::move(C)), g};
}

namespace {

MPoly apply3(const PlaneField& v, const MPoly& f) {
  return v.L * f.derivative(0) + v.M * f.derivative(1) + v.N * f.derivative(2);
}

AffineForm chart_form(const PlaneForm& w, unsigned chart, VarsPtr ring2) {
  // dropping dx_chart; the two remaining coefficients restrict
  const MPoly* c1 = nullptr;
  const MPoly* c2 = nullptr;
  switch (chart) {
    case 0: c1 = &w.B(); c2 = &w.C(); break;
    case 1: c1 = &w.A(); c2 = &w.C(); break;
    case 2: c1 = &w.A(); c2 = &w.B(); break;
    default: fail(Err::ValidationError, "chart index must be 0, 1 or 2");
  }
  return AffineForm::make(set_var_one(*c1, chart, ring2), set_var_one(*c2, chart, ring2));
}

// p-divisor assembled from the charts z = 1 and x = 1; the only route when
// p divides d+2
PlaneDivisor p_divisor_chartwise(const PlaneForm& w, FactorMode mode, uint64_t seed) {
  FieldPtr F = w.field();
  VarsPtr V = w.vars();
  uint64_t p = F->p();
  long expected = (long)p * (w.degree() - 1) + w.degree() + 2;

  VarsPtr Rz = Vars::make({V->name(0), V->name(1)});
  VarsPtr Rx = Vars::make({V->name(1), V->name(2)});
  AffineForm wz = chart_form(w, 2, Rz);
  AffineForm wx = chart_form(w, 0, Rx);
  VectorField vz = dual_field(wz);
  VectorField vx = dual_field(wx);

  PPower pz = p_power(vz);
  MPoly sec_z = vz.b() * pz.vx - vz.a() * pz.vy;
  if (sec_z.is_zero()) fail(Err::PClosed, "foliation is p-closed; the p-divisor is undefined");
  PPower px = p_power(vx);
  MPoly sec_x = vx.b() * px.vx - vx.a() * px.vy;
  if (sec_x.is_zero()) fail(Err::Internal, "p-closedness disagrees between charts");

  // multiplicity of the line z = 0, read in the chart x = 1 (z is variable 1 there)
  long mz = 0;
  {
    unsigned e = 0xffff;
    for (auto& t : sec_x.terms()) e = std::min(e, mono_get(t.m, 1));
    mz = (long)e;
  }
  MPoly section = homogenize(sec_z, V, 2, sec_z.degree());
  if (mz > 0) section *= MPoly::variable(F, V, 2, (unsigned)mz);

  // cross-check: restricting the assembled section to x = 1 recovers the
  // other chart's section up to a unit
  MPoly check = set_var_one(section, 0, Rx);
  if (!check.same_divisor(sec_x)) fail(Err::Internal, "chart sections are inconsistent");

  Divisor div = mode == FactorMode::Full ? factor_in_chart(section, 0, seed)
                                         : squarefree_decompose(section);
  bool ok = section.degree() == expected;
  return {std::move(section), std::move(div), ok, expected};
}

}  // namespace

PlaneDivisor p_divisor_p2(const PlaneForm& w, FactorMode mode, uint64_t seed) {
  FieldPtr F = w.field();
  uint64_t p = F->p();
  long expected = (long)p * (w.degree() - 1) + w.degree() + 2;
  if ((w.degree() + 2) % (long)p == 0) return p_divisor_chartwise(w, mode, seed);
  PlaneField v = field_from_form(w);
  MPoly ix = MPoly::variable(F, w.vars(), 0);
  MPoly iy = MPoly::variable(F, w.vars(), 1);
  MPoly iz = MPoly::variable(F, w.vars(), 2);
  for (uint64_t i = 0; i < p; ++i) {
    ix = apply3(v, ix);
    iy = apply3(v, iy);
    iz = apply3(v, iz);
  }
  MPoly section = w.A() * ix + w.B() * iy + w.C() * iz;
  if (section.is_zero()) fail(Err::PClosed, "foliation is p-closed; the p-divisor is undefined");
  Divisor div = mode == FactorMode::Full ? factor_in_chart(section, 0, seed)
                                         : squarefree_decompose(section);
  bool ok = section.degree() == expected;
  return {std::move(section), std::move(div), ok, expected};
}

bool is_invariant_proj(const PlaneForm& w, const MPoly& F) {
  if (F.is_constant()) fail(Err::ValidationError, "invariance is for nonconstant curves");
  if (!F.grade_check(Grading::total(F.degree())).ok)
    fail(Err::ValidationError, "curve equation must be homogeneous");
  MPoly fx = F.derivative(0), fy = F.derivative(1), fz = F.derivative(2);
  MPoly w_xy = w.A() * fy - w.B() * fx;
  MPoly w_xz = w.A() * fz - w.C() * fx;
  MPoly w_yz = w.B() * fz - w.C() * fy;
  return F.divides(w_xy) && F.divides(w_xz) && F.divides(w_yz);
}

std::optional<MPoly> find_invariant_curve(const PlaneForm& w, uint64_t seed) {
  uint64_t p = w.field()->p();
  if ((w.degree() + 2) % (long)p == 0)
    fail(Err::CharDividesDegree, "requires p not dividing d+2");
  PlaneDivisor pd = p_divisor_p2(w, FactorMode::Full, seed);
  for (auto& c : pd.divisor.comps) {
    if (c.mult % (long)p == 0) continue;
    if (!is_invariant_proj(w, c.poly))
      fail(Err::Internal, "component of multiplicity prime to p is not invariant");
    return c.poly;
  }
  return std::nullopt;
}

PlaneForm power_pullback(const PlaneForm& w, long e) {
  FieldPtr F = w.field();
  VarsPtr V = w.vars();
  uint64_t p = F->p();
  if (e < 1 || (uint64_t)(e % (long)p) == 0)
    fail(Err::ExponentDividesP, "pullback exponent must be positive and prime to p");
  if (e == 1) return w;
  std::vector<MPoly> pw{MPoly::variable(F, V, 0, (unsigned)e), MPoly::variable(F, V, 1, (unsigned)e),
                        MPoly::variable(F, V, 2, (unsigned)e)};
  MPoly A = w.A().substitute(pw) * MPoly::variable(F, V, 0, (unsigned)(e - 1));
  MPoly B = w.B().substitute(pw) * MPoly::variable(F, V, 1, (unsigned)(e - 1));
  MPoly C = w.C().substitute(pw) * MPoly::variable(F, V, 2, (unsigned)(e - 1));
  MPoly g = gcd(gcd(A, B), C);
  if (!g.is_constant()) {
    A = A.exact_div(g);
    B = B.exact_div(g);
    C = C.exact_div(g);
  }
  return PlaneForm::make(std::move(A), std::move(B), std::move(C));
}

PullbackReducedReport pullback_preserves_squarefree_test(const MPoly& F, long l,
                                                         const std::string& var) {
  int vi = F.vars()->index(var);
  if (vi < 0) fail(Err::UnknownVariable, "unknown variable " + var);
  uint64_t p = F.field()->p();
  bool pre = l >= 1 && (l % (long)p) != 0 && !F.is_zero() && is_reduced(F) &&
             !MPoly::variable(F.field(), F.vars(), (unsigned)vi).divides(F);
  std::vector<MPoly> images;
  for (unsigned i = 0; i < F.nvars(); ++i)
    images.push_back(MPoly::variable(F.field(), F.vars(), i, i == (unsigned)vi ? (unsigned)l : 1));
  MPoly sub = F.substitute(images);
  return {pre, is_reduced(sub)};
}

AffineForm restrict_to_chart(const PlaneForm& w, unsigned chart, VarsPtr ring2) {
  return chart_form(w, chart, ring2);
}

PlaneForm plane_from_affine(const AffineForm& w, VarsPtr V3) {
  FieldPtr F = w.field();
  long e = std::max(w.cdx().degree(), w.cdy().degree());
  MPoly A = homogenize(w.cdx(), V3, 2, e + 1);
  MPoly B = homogenize(w.cdy(), V3, 2, e + 1);
  MPoly S = MPoly::variable(F, V3, 0) * A + MPoly::variable(F, V3, 1) * B;
  MPoly C = (-S).exact_div(MPoly::variable(F, V3, 2));
  MPoly g = gcd(gcd(A, B), C);
  if (!g.is_constant()) {
    A = A.exact_div(g);
    B = B.exact_div(g);
    C = C.exact_div(g);
  }
  return PlaneForm::make(std::move(A), std::move(B), std::move(C));
}

Certificate reduce_and_certify(const ZPlaneForm& w, uint64_t p, bool assert_nondicritical,
                               unsigned extension_bound, uint64_t seed) {
  Certificate cert{};
  cert.p = p;
  cert.nondicritical_asserted = assert_nondicritical;
  cert.valid_reduction = false;
  cert.p_closed = false;
  cert.delta_irreducible = false;
  cert.conclusion = "no conclusion";
  FieldPtr F = Field::prime(p);
  VarsPtr V = w.vars;
  if (V->size() != 3) fail(Err::ValidationError, "integer form must have three variables");

  // Euler relation over the integers
  {
    std::vector<std::pair<Mono, long long>> acc;
    auto push = [&](Mono m, long long c, unsigned var) {
      acc.push_back({mono_set(m, var, mono_get(m, var) + 1), c});
    };
    for (auto& [m, c] : w.A) push(m, c, 0);
    for (auto& [m, c] : w.B) push(m, c, 1);
    for (auto& [m, c] : w.C) push(m, c, 2);
    std::sort(acc.begin(), acc.end());
    long long run = 0;
    Mono cur = acc.empty() ? 0 : acc[0].first;
    for (auto& [m, c] : acc) {
      if (m != cur) {
        if (run != 0) fail(Err::ValidationError, "integer coefficients violate the radial relation");
        cur = m;
        run = 0;
      }
      run += c;
    }
    if (run != 0) fail(Err::ValidationError, "integer coefficients violate the radial relation");
  }

  auto reduce = [&](const std::vector<std::pair<Mono, long long>>& zs) {
    std::vector<Term> ts;
    for (auto& [m, c] : zs) ts.push_back({m, Fq(F, c)});
    return MPoly::from_terms(F, V, std::move(ts));
  };
  MPoly A = reduce(w.A), B = reduce(w.B), C = reduce(w.C);
  if (A.is_zero() && B.is_zero() && C.is_zero())
    fail(Err::BadReduction, "form vanishes mod p");
  if (!gcd(gcd(A, B), C).is_constant())
    fail(Err::BadReduction, "coefficients acquire a common factor mod p");
  PlaneForm form = [&] {
    try {
      return PlaneForm::make(A, B, C);
    } catch (const Error& e) {
      fail(Err::BadReduction, std::string("reduction is not a valid foliation: ") + e.what());
    }
  }();
  cert.valid_reduction = true;
  cert.degree = form.degree();
  if ((form.degree() + 2) % (long)p == 0)
    fail(Err::CharDividesDegree, "p divides d+2; certification pipeline requires p independent of d+2");

  PlaneDivisor pd = [&]() -> PlaneDivisor {
    try {
      return p_divisor_p2(form, FactorMode::Full, seed);
    } catch (const Error& e) {
      if (e.code() == Err::PClosed) {
        cert.p_closed = true;
        return PlaneDivisor{MPoly(F, V), Divisor{F, V, {}, Fq(F, 1)}, true, 0};
      }
      throw;
    }
  }();
  if (cert.p_closed) {
    cert.conclusion = "reduction is p-closed; no certificate";
    return cert;
  }
  cert.degree_check = pd.degree_check;
  cert.delta = pd.divisor;
  bool irr = pd.divisor.comps.size() == 1 && pd.divisor.comps[0].mult == 1 &&
             pd.divisor.comps[0].irreducible;
  cert.irreducible_over.push_back("F_" + std::to_string(p));
  if (irr) {
    for (unsigned m = 2; m <= extension_bound && irr; ++m) {
      if (irreducible_over_extensions(pd.divisor.comps[0].poly, m, seed))
        cert.irreducible_over.push_back("F_" + std::to_string(p) + "^" + std::to_string(m));
      else
        irr = false;
    }
  }
  cert.delta_irreducible = irr;
  if (irr) {
    cert.conclusion = assert_nondicritical
                          ? "no algebraic solutions, conditional on absolute irreducibility of the "
                            "p-divisor beyond the tested fields"
                          : "p-divisor irreducible over the tested fields; conclusion requires the "
                            "non-dicriticality assertion";
  } else {
    cert.conclusion = "no conclusion: p-divisor is not irreducible over the tested fields";
  }
  return cert;
}

}  // namespace pfol
