// Bivariate factorization over F_{p^k}: shear to a form monic in y, factor a
// good specialization, Hensel-lift x-adically, recombine by subset search.
// Small fields may lack a usable shear or specialization point; in that case
// the input is factored over an extension F_{q^m} and Frobenius orbits of the
// factors are multiplied back down to the base field.

#include <algorithm>

#include "factor/factor.hpp"

namespace pfol {

namespace {

// ---- truncated power series in x over Fq -----------------------------------

using Ser = std::vector<Fq>;  // low..high, trimmed

void ser_trim(Ser& s) {
  while (!s.empty() && s.back().is_zero()) s.pop_back();
}

Ser ser_add(const Ser& a, const Ser& b) {
  Ser r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    Fq v = i < a.size() ? a[i] : Fq();
    if (i < b.size()) v = v.bound() ? v + b[i] : b[i];
    r[i] = v;
  }
  ser_trim(r);
  return r;
}

Ser ser_sub(const Ser& a, const Ser& b, FieldPtr F) {
  Ser r(std::max(a.size(), b.size()), Fq(F));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ser_trim(r);
  return r;
}

Ser ser_mul(const Ser& a, const Ser& b, size_t B, FieldPtr F) {
  if (a.empty() || b.empty()) return {};
  Ser r(std::min(a.size() + b.size() - 1, B), Fq(F));
  for (size_t i = 0; i < a.size() && i < B; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && i + j < B; ++j) r[i + j] += a[i] * b[j];
  }
  ser_trim(r);
  return r;
}

// ---- polynomials in y with series coefficients ------------------------------

using YP = std::vector<Ser>;  // index = y-degree

void yp_trim(YP& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

long yp_deg(const YP& a) { return (long)a.size() - 1; }

YP yp_sub(const YP& a, const YP& b, FieldPtr F) {
  YP r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    Ser x = i < a.size() ? a[i] : Ser{};
    Ser y = i < b.size() ? b[i] : Ser{};
    r[i] = ser_sub(x, y, F);
  }
  yp_trim(r);
  return r;
}

YP yp_add(const YP& a, const YP& b) {
  YP r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    Ser x = i < a.size() ? a[i] : Ser{};
    Ser y = i < b.size() ? b[i] : Ser{};
    r[i] = ser_add(x, y);
  }
  yp_trim(r);
  return r;
}

YP yp_mul(const YP& a, const YP& b, size_t B, FieldPtr F) {
  if (a.empty() || b.empty()) return {};
  YP r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].empty()) continue;
      r[i + j] = ser_add(r[i + j], ser_mul(a[i], b[j], B, F));
    }
  }
  yp_trim(r);
  return r;
}

bool yp_monic(const YP& a) {
  return !a.empty() && a.back().size() == 1 && a.back()[0].is_one();
}

// division by a monic divisor, all arithmetic truncated at x^B
std::pair<YP, YP> yp_divmod(YP a, const YP& b, size_t B, FieldPtr F) {
  if (!yp_monic(b)) fail(Err::Internal, "series division requires a monic divisor");
  long db = yp_deg(b);
  YP q;
  yp_trim(a);
  while (yp_deg(a) >= db) {
    long sh = yp_deg(a) - db;
    Ser c = a.back();
    if ((long)q.size() <= sh) q.resize((size_t)sh + 1);
    q[(size_t)sh] = ser_add(q[(size_t)sh], c);
    for (long i = 0; i <= db; ++i)
      a[(size_t)(sh + i)] = ser_sub(a[(size_t)(sh + i)], ser_mul(c, b[(size_t)i], B, F), F);
    yp_trim(a);
  }
  yp_trim(q);
  return {q, a};
}

YP yp_from_mpoly(const MPoly& f, size_t B, FieldPtr F) {
  YP r((size_t)std::max<long>(f.degree_in(1) + 1, 0));
  for (auto& t : f.terms()) {
    unsigned i = mono_get(t.m, 0), j = mono_get(t.m, 1);
    if (i >= B) fail(Err::Internal, "series precision too small");
    Ser& s = r[j];
    if (s.size() <= i) s.resize(i + 1, Fq(F));
    s[i] = t.c;
  }
  for (auto& s : r) ser_trim(s);
  yp_trim(r);
  return r;
}

MPoly yp_to_mpoly(const YP& a, FieldPtr F, VarsPtr V) {
  std::vector<Term> ts;
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t i = 0; i < a[j].size(); ++i)
      if (!a[j][i].is_zero())
        ts.push_back({mono_set(mono_set(0, 0, (unsigned)i), 1, (unsigned)j), a[j][i]});
  return MPoly::from_terms(F, V, std::move(ts));
}

YP yp_from_upoly(const UPoly& u, FieldPtr F) {
  YP r((size_t)std::max<long>(u.deg() + 1, 0));
  for (long i = 0; i <= u.deg(); ++i)
    if (!u[(size_t)i].is_zero()) r[(size_t)i] = Ser{u[(size_t)i]};
  return r;
}

// ---- Hensel lifting ---------------------------------------------------------

struct PairLift {
  YP g, h, s, t;
};

// one quadratic step: (g,h,s,t) valid mod x^l -> valid mod x^l2, l2 <= 2l
void hensel_step(const YP& f, PairLift& P, size_t l2, FieldPtr F) {
  YP e = yp_sub(f, yp_mul(P.g, P.h, l2, F), F);
  auto [q, r] = yp_divmod(yp_mul(P.t, e, l2, F), P.g, l2, F);
  YP dg = r;
  YP dh = yp_add(yp_mul(P.s, e, l2, F), yp_mul(q, P.h, l2, F));
  P.g = yp_add(P.g, dg);
  P.h = yp_add(P.h, dh);
  YP one{Ser{Fq(F, 1)}};
  YP b = yp_sub(yp_add(yp_mul(P.s, P.g, l2, F), yp_mul(P.t, P.h, l2, F)), one, F);
  auto [c, d] = yp_divmod(yp_mul(P.s, b, l2, F), P.h, l2, F);
  P.s = yp_sub(P.s, d, F);
  P.t = yp_sub(P.t, yp_add(yp_mul(P.t, b, l2, F), yp_mul(c, P.g, l2, F)), F);
}

// Bezout cofactors for coprime univariate g, h: s*g + t*h = 1
std::pair<UPoly, UPoly> bezout(const UPoly& g, const UPoly& h) {
  FieldPtr F = g.field();
  UPoly r0 = g, r1 = h;
  UPoly s0 = UPoly::constant(F, Fq(F, 1)), s1(F);
  UPoly t0(F), t1 = UPoly::constant(F, Fq(F, 1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    UPoly ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  if (r0.deg() != 0) fail(Err::Internal, "bezout of non-coprime polynomials");
  Fq inv = r0[0].inv();
  return {s0.scaled(inv), t0.scaled(inv)};
}

// lift the coprime monic factorization prod(factors) of f mod x to mod x^B
void lift_tree(const YP& f, const std::vector<UPoly>& factors, size_t lo, size_t hi, size_t B,
               FieldPtr F, std::vector<YP>& out) {
  if (hi - lo == 1) {
    out[lo] = f;
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  UPoly g0 = UPoly::constant(F, Fq(F, 1)), h0 = g0;
  for (size_t i = lo; i < mid; ++i) g0 = g0 * factors[i];
  for (size_t i = mid; i < hi; ++i) h0 = h0 * factors[i];
  auto [s0, t0] = bezout(g0, h0);
  PairLift P{yp_from_upoly(g0, F), yp_from_upoly(h0, F), yp_from_upoly(s0, F), yp_from_upoly(t0, F)};
  size_t l = 1;
  while (l < B) {
    size_t l2 = std::min(2 * l, B);
    hensel_step(f, P, l2, F);
    l = l2;
  }
  lift_tree(P.g, factors, lo, mid, B, F, out);
  lift_tree(P.h, factors, mid, hi, B, F, out);
}

// ---- recombination ----------------------------------------------------------

// true factors of a monic-in-y polynomial of total degree == y-degree have
// total degree equal to their own y-degree; reject candidates violating it
bool degree_pattern_ok(const YP& cand) {
  long dy = yp_deg(cand);
  for (long j = 0; j <= dy; ++j)
    if ((long)cand[(size_t)j].size() - 1 > dy - j) return false;
  return true;
}

std::vector<MPoly> recombine(const MPoly& sheared, const std::vector<YP>& lifted, size_t B,
                             FieldPtr F, VarsPtr V) {
  std::vector<MPoly> found;
  std::vector<YP> rem = lifted;
  MPoly current = sheared;
  size_t s = 1;
  while (2 * s <= rem.size()) {
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    bool extracted = false;
    for (;;) {
      YP cand{Ser{Fq(F, 1)}};
      for (size_t i : idx) cand = yp_mul(cand, rem[i], B, F);
      if (degree_pattern_ok(cand)) {
        MPoly cm = yp_to_mpoly(cand, F, V);
        if (cm.divides(current)) {
          found.push_back(cm);
          current = current.exact_div(cm);
          std::vector<YP> next;
          for (size_t i = 0; i < rem.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(rem[i]);
          rem = std::move(next);
          extracted = true;
          break;
        }
      }
      // next subset of size s
      long pos = (long)s - 1;
      while (pos >= 0 && idx[(size_t)pos] == rem.size() - s + (size_t)pos) --pos;
      if (pos < 0) break;
      ++idx[(size_t)pos];
      for (size_t i = (size_t)pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!extracted) ++s;
  }
  if (!current.is_constant()) found.push_back(current);
  return found;
}

// ---- main driver ------------------------------------------------------------

struct ShearChoice {
  FieldEmbedding emb;
  MPoly sheared;  // g(x + t*y + a, y), monic in y
  Fq t, a;
};

// substitute x -> x + t*y + a in a 2-variable polynomial
MPoly shear_translate(const MPoly& g, const Fq& t, const Fq& a) {
  FieldPtr F = g.field();
  VarsPtr V = g.vars();
  MPoly x = MPoly::variable(F, V, 0), y = MPoly::variable(F, V, 1);
  MPoly img = x + y.scaled(t) + MPoly::constant(F, V, a);
  return g.substitute({img, y});
}

UPoly specialize_x(const MPoly& g, const Fq& a) {
  FieldPtr F = g.field();
  std::vector<Fq> c((size_t)std::max<long>(g.degree_in(1) + 1, 1), Fq(F));
  for (auto& t : g.terms()) {
    unsigned i = mono_get(t.m, 0), j = mono_get(t.m, 1);
    c[j] += t.c * a.pow_u(i);
  }
  return UPoly(F, std::move(c));
}

bool squarefree_univariate(const UPoly& h) {
  UPoly d = h.derivative();
  if (d.is_zero()) return h.deg() == 0;
  return ugcd(h, d).deg() == 0;
}

std::optional<ShearChoice> find_shear(const MPoly& g, unsigned m, uint64_t seed) {
  FieldEmbedding emb = m == 1 ? FieldEmbedding::identity(g.field()) : FieldEmbedding::make(g.field(), m, seed);
  FieldPtr K = emb.to();
  MPoly gm = emb.embed(g);
  long D = gm.degree();
  uint64_t cap = (uint64_t)(4 * D * D + 16);
  uint64_t order;
  try {
    order = K->order();
  } catch (const Error&) {
    order = UINT64_MAX;
  }
  cap = std::min(cap, order);
  MPoly dyg(gm.field(), gm.vars());
  for (uint64_t ti = 0; ti < cap; ++ti) {
    Fq t = Fq::from_index(K, ti);
    MPoly sheared = shear_translate(gm, t, Fq(K, 0));
    if (sheared.degree_in(1) != D) continue;  // leading y-coefficient vanished
    // leading y-coefficient must be constant
    bool lc_const = true;
    for (auto& tm : sheared.terms())
      if ((long)mono_get(tm.m, 1) == D && mono_get(tm.m, 0) != 0) lc_const = false;
    if (!lc_const) continue;
    MPoly dy = sheared.derivative(1);
    if (dy.is_zero() || !gcd(sheared, dy).is_constant()) continue;
    for (uint64_t ai = 0; ai < cap; ++ai) {
      Fq a = Fq::from_index(K, ai);
      UPoly h = specialize_x(sheared, a);
      if (h.deg() != D) fail(Err::Internal, "monic shear lost degree");
      if (!squarefree_univariate(h)) continue;
      ShearChoice sc;
      sc.emb = emb;
      sc.t = t;
      sc.a = a;
      sc.sheared = a.is_zero() ? sheared : shear_translate(sheared, Fq(K, 0), a);
      return sc;
    }
  }
  return std::nullopt;
}

// irreducible factors over the base field of a squarefree primitive-in-both-
// directions bivariate polynomial with positive degree in both variables
std::vector<MPoly> factor_core(const MPoly& g, uint64_t seed) {
  FieldPtr base = g.field();
  VarsPtr V = g.vars();
  long D = g.degree();
  if (D == 1 || g.degree_in(0) == 1 || g.degree_in(1) == 1) return {g.monic()};

  std::optional<ShearChoice> sc;
  for (unsigned m = 1; m <= 4 && !sc; ++m) sc = find_shear(g, m, seed + m);
  if (!sc) fail(Err::Internal, "no usable shear found up to extension degree 4");

  FieldPtr K = sc->emb.to();
  // normalize the (constant) coefficient of y^D to 1
  MPoly work = sc->sheared;
  work = work.scaled(work.coeff(mono_set(0, 1, (unsigned)D)).inv());
  UPoly h0 = specialize_x(work, Fq(K, 0)).monic();
  auto ufs = ufactor(h0, seed);
  std::vector<UPoly> factors;
  for (auto& [u, mult] : ufs) {
    if (mult != 1) fail(Err::Internal, "specialization was not squarefree");
    factors.push_back(u);
  }

  std::vector<MPoly> irr_ext;
  if (factors.size() == 1) {
    irr_ext.push_back(work);
  } else {
    if (factors.size() > 12)
      fail(Err::RecombinationOverflow,
           "more than 12 modular factors; recombination refused");
    size_t B = (size_t)D + 1;
    YP fyp = yp_from_mpoly(work, B, K);
    std::vector<YP> lifted(factors.size());
    lift_tree(fyp, factors, 0, factors.size(), B, K, lifted);
    irr_ext = recombine(work, lifted, B, K, V);
  }

  // undo translation and shear
  Fq mt = -sc->t, ma = -sc->a;
  for (auto& f : irr_ext) f = shear_translate(f, mt, ma).monic();

  if (sc->emb.trivial()) return irr_ext;

  // Frobenius-orbit products descend to the base field
  unsigned kbase = base->k();
  auto conj = [&](const MPoly& f) {
    std::vector<Term> ts;
    for (auto& t : f.terms()) {
      Fq c = t.c;
      for (unsigned i = 0; i < kbase; ++i) c = c.frobenius();
      ts.push_back({t.m, c});
    }
    return MPoly::from_terms(K, V, std::move(ts));
  };
  std::vector<bool> used(irr_ext.size(), false);
  std::vector<MPoly> out;
  for (size_t i = 0; i < irr_ext.size(); ++i) {
    if (used[i]) continue;
    MPoly prod = MPoly::constant(K, V, 1);
    MPoly cur = irr_ext[i];
    for (;;) {
      // locate cur in the list and consume it
      bool hit = false;
      for (size_t j = 0; j < irr_ext.size(); ++j) {
        if (!used[j] && irr_ext[j] == cur) {
          used[j] = true;
          hit = true;
          break;
        }
      }
      if (!hit) fail(Err::Internal, "frobenius conjugate missing from factor list");
      prod *= cur;
      cur = conj(cur).monic();
      if (cur == irr_ext[i]) break;
    }
    auto down = sc->emb.section(prod);
    if (!down) fail(Err::Internal, "orbit product does not descend to the base field");
    out.push_back(down->monic());
  }
  return out;
}

// factor a polynomial living in a single variable of a 2-variable ring
void push_univariate_factors(const MPoly& u1, unsigned var, std::vector<DivComponent>& out,
                             long mult, uint64_t seed) {
  FieldPtr F = u1.field();
  VarsPtr V = u1.vars();
  UPoly u(F, [&] {
    std::vector<Fq> c((size_t)u1.degree_in(var) + 1, Fq(F));
    for (auto& t : u1.terms()) c[mono_get(t.m, var)] += t.c;
    return c;
  }());
  for (auto& [h, m] : ufactor(u, seed)) {
    std::vector<Term> ts;
    for (long i = 0; i <= h.deg(); ++i)
      if (!h[(size_t)i].is_zero()) ts.push_back({mono_set(0, var, (unsigned)i), h[(size_t)i]});
    out.push_back({MPoly::from_terms(F, V, std::move(ts)), m * mult, true});
  }
}

// splits off factors involving only one of the two variables
void split_univariate_content(MPoly& g, std::vector<DivComponent>& out, long mult, uint64_t seed) {
  FieldPtr F = g.field();
  VarsPtr V = g.vars();
  for (unsigned var : {0u, 1u}) {
    unsigned other = 1 - var;
    if (g.degree_in(other) <= 0) continue;
    // content of g viewed in `other`: a polynomial in var alone
    std::vector<MPoly> cs((size_t)g.degree_in(other) + 1, MPoly(F, V));
    for (auto& t : g.terms()) {
      unsigned e = mono_get(t.m, other);
      cs[e] += MPoly::from_terms(F, V, {{mono_set(t.m, other, 0), t.c}});
    }
    MPoly cont = gcd_many(cs);
    if (cont.is_constant()) continue;
    g = g.exact_div(cont);
    push_univariate_factors(cont, var, out, mult, seed);
  }
  if (!g.is_constant()) {
    for (unsigned var : {0u, 1u}) {
      if (g.degree_in(1 - var) == 0 && g.degree_in(var) > 0) {
        push_univariate_factors(g, var, out, mult, seed);
        g = MPoly::constant(F, V, g.lc());
        break;
      }
    }
  }
}

}  // namespace

Divisor factor_bivariate(const MPoly& f, uint64_t seed) {
  if (!f.bound() || f.is_zero()) fail(Err::ZeroPolynomial, "factorization of zero");
  if (f.nvars() != 2) fail(Err::ValidationError, "factor_bivariate expects two variables");
  Divisor d;
  d.field = f.field();
  d.vars = f.vars();
  d.unit = f.lc();
  if (f.is_constant()) return d;
  Divisor sq = squarefree_decompose(f);
  for (auto& comp : sq.comps) {
    MPoly g = comp.poly;
    split_univariate_content(g, d.comps, comp.mult, seed);
    if (g.is_constant()) continue;
    for (auto& irr : factor_core(g, seed)) d.comps.push_back({irr, comp.mult, true});
  }
  d.sort_canonical();
  if (!(d.product() == f)) fail(Err::Internal, "factorization failed to reassemble");
  return d;
}

Divisor factor_in_chart(const MPoly& f, int dparam, uint64_t seed) {
  if (!f.bound() || f.is_zero()) fail(Err::ZeroPolynomial, "factorization of zero");
  unsigned n = f.nvars();
  if (n != 3 && n != 4) fail(Err::ValidationError, "factor_in_chart expects 3 or 4 variables");
  if (n == 3) {
    if (!f.grade_check(Grading::total(f.degree())).ok)
      fail(Err::ValidationError, "polynomial is not homogeneous");
  } else {
    if (!f.bidegree(dparam)) fail(Err::ValidationError, "polynomial is not bihomogeneous");
  }
  FieldPtr F = f.field();
  VarsPtr V = f.vars();
  Divisor d;
  d.field = F;
  d.vars = V;
  d.unit = f.lc();
  MPoly w = f.monic();
  for (unsigned i = 0; i < n; ++i) {
    unsigned e = 0xffff;
    for (auto& t : w.terms()) e = std::min(e, mono_get(t.m, i));
    if (e == 0 || w.is_constant()) continue;
    w = w.exact_div(MPoly::variable(F, V, i, e));
    d.comps.push_back({MPoly::variable(F, V, i), (long)e, true});
  }
  if (!w.is_constant()) {
    if (n == 3) {
      VarsPtr V2 = Vars::make({V->name(0), V->name(1)});
      MPoly wa = set_var_one(w, 2, V2);
      for (auto& c : factor_bivariate(wa, seed).comps)
        d.comps.push_back({homogenize(c.poly, V, 2, c.poly.degree()), c.mult, c.irreducible});
    } else {
      VarsPtr V2 = Vars::make({V->name(0), V->name(2)});
      VarsPtr V3 = Vars::make({V->name(0), V->name(2), V->name(3)});
      MPoly wa = set_var_one(set_var_one(w, 1, V3), 2, V2);
      for (auto& c : factor_bivariate(wa, seed).comps) {
        // minimal bihomogenization for the chart x1 = y1 = 1 with ruling dparam
        long B = c.poly.degree_in(1);
        long A = 0;
        for (auto& t : c.poly.terms())
          A = std::max(A, (long)mono_get(t.m, 0) + (long)dparam * (long)mono_get(t.m, 1));
        std::vector<Term> ts;
        for (auto& t : c.poly.terms()) {
          long i = mono_get(t.m, 0), j = mono_get(t.m, 1);
          Mono m = 0;
          m = mono_set(m, 0, (unsigned)i);
          m = mono_set(m, 1, (unsigned)(A - i - dparam * j));
          m = mono_set(m, 2, (unsigned)j);
          m = mono_set(m, 3, (unsigned)(B - j));
          ts.push_back({m, t.c});
        }
        d.comps.push_back({MPoly::from_terms(F, V, std::move(ts)), c.mult, c.irreducible});
      }
    }
  }
  d.sort_canonical();
  if (!(d.product() == f)) fail(Err::Internal, "chart factorization failed to reassemble");
  return d;
}

bool irreducible_over_extensions(const MPoly& f, unsigned max_m, uint64_t seed) {
  for (unsigned m = 2; m <= max_m; ++m) {
    FieldEmbedding emb = FieldEmbedding::make(f.field(), m, seed + m);
    Divisor dv = factor_auto(emb.embed(f), 0, seed);
    long n = 0;
    for (auto& c : dv.comps) n += c.mult;
    if (n > 1) return false;
  }
  return true;
}

}  // namespace pfol
