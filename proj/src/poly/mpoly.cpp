#include "poly/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace pfol {

VarsPtr Vars::make(std::vector<std::string> names) {
  if (names.empty() || names.size() > kMax)
    fail(Err::ValidationError, "variable list must have 1.." + std::to_string(kMax) + " entries");
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) fail(Err::ValidationError, "duplicate variable " + names[i]);
  return VarsPtr(new Vars(std::move(names)));
}

int Vars::index(const std::string& n) const {
  for (unsigned i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return (int)i;
  return -1;
}

void MPoly::require_ring(const MPoly& o) const {
  if (!f_ || !o.f_) fail(Err::SpecMismatch, "unbound polynomial");
  if (f_ != o.f_ && !f_->same(*o.f_)) fail(Err::SpecMismatch, "polynomials over different fields");
  if (v_ != o.v_ && !v_->same(*o.v_)) fail(Err::SpecMismatch, "polynomials in different rings");
}

MPoly MPoly::constant(FieldPtr f, VarsPtr v, const Fq& c) {
  MPoly r(std::move(f), std::move(v));
  if (!c.is_zero()) r.t_.push_back({mono_one(), c});
  return r;
}

MPoly MPoly::variable(FieldPtr f, VarsPtr v, unsigned i, unsigned e) {
  if (i >= v->size()) fail(Err::UnknownVariable, "variable index out of range");
  MPoly r(f, v);
  if (e > 0xffff) fail(Err::ValidationError, "exponent too large");
  r.t_.push_back({mono_set(mono_one(), i, e), Fq(f, 1)});
  return r;
}

MPoly MPoly::from_terms(FieldPtr f, VarsPtr v, std::vector<Term> ts) {
  unsigned n = v->size();
  std::sort(ts.begin(), ts.end(), [n](const Term& a, const Term& b) { return mono_less(b.m, a.m, n); });
  MPoly r(std::move(f), std::move(v));
  for (auto& t : ts) {
    if (!r.t_.empty() && r.t_.back().m == t.m)
      r.t_.back().c += t.c;
    else
      r.t_.push_back(std::move(t));
    if (!r.t_.empty() && r.t_.back().c.is_zero()) r.t_.pop_back();
  }
  return r;
}

long MPoly::degree() const {
  long d = -1;
  for (auto& t : t_) d = std::max(d, (long)mono_deg(t.m, nvars()));
  return d;
}

long MPoly::degree_in(unsigned var) const {
  long d = -1;
  for (auto& t : t_) d = std::max(d, (long)mono_get(t.m, var));
  return d;
}

const Fq& MPoly::lc() const {
  if (t_.empty()) fail(Err::ZeroPolynomial, "leading coefficient of zero");
  return t_[0].c;
}

Mono MPoly::lm() const {
  if (t_.empty()) fail(Err::ZeroPolynomial, "leading monomial of zero");
  return t_[0].m;
}

Fq MPoly::coeff(Mono m) const {
  for (auto& t : t_)
    if (t.m == m) return t.c;
  return Fq(f_);
}

Fq MPoly::constant_term() const {
  if (!t_.empty() && t_.back().m == 0) return t_.back().c;
  return Fq(f_);
}

MPoly MPoly::operator-() const {
  MPoly r(f_, v_);
  r.t_.reserve(t_.size());
  for (auto& t : t_) r.t_.push_back({t.m, -t.c});
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  require_ring(o);
  MPoly r(f_, v_);
  r.t_.reserve(t_.size() + o.t_.size());
  unsigned n = nvars();
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].m == o.t_[j].m) {
      Fq c = t_[i].c + o.t_[j].c;
      if (!c.is_zero()) r.t_.push_back({t_[i].m, std::move(c)});
      ++i, ++j;
    } else if (mono_less(o.t_[j].m, t_[i].m, n)) {
      r.t_.push_back(t_[i++]);
    } else {
      r.t_.push_back(o.t_[j++]);
    }
  }
  while (i < t_.size()) r.t_.push_back(t_[i++]);
  while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  require_ring(o);
  MPoly r(f_, v_);
  if (t_.empty() || o.t_.empty()) return r;
  unsigned n = nvars();
  if (t_.size() == 1) return o.mul_term(t_[0].m, t_[0].c);
  if (o.t_.size() == 1) return mul_term(o.t_[0].m, o.t_[0].c);
  size_t budget = t_.size() * o.t_.size();
  if (budget <= 48) {
    // accumulate into a small vector, then normalize
    std::vector<Term> acc;
    acc.reserve(budget);
    for (auto& a : t_)
      for (auto& b : o.t_) acc.push_back({mono_mul(a.m, b.m), a.c * b.c});
    return from_terms(f_, v_, std::move(acc));
  }
  std::unordered_map<Mono, Fq> acc;
  acc.reserve(budget);
  for (auto& a : t_)
    for (auto& b : o.t_) {
      Mono m = mono_mul(a.m, b.m);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, a.c * b.c);
      else
        it->second += a.c * b.c;
    }
  r.t_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.t_.push_back({m, std::move(c)});
  std::sort(r.t_.begin(), r.t_.end(),
            [n](const Term& a, const Term& b) { return mono_less(b.m, a.m, n); });
  return r;
}

MPoly MPoly::scaled(const Fq& c) const {
  MPoly r(f_, v_);
  if (c.is_zero()) return r;
  r.t_.reserve(t_.size());
  for (auto& t : t_) r.t_.push_back({t.m, t.c * c});
  return r;
}

MPoly MPoly::mul_term(Mono m, const Fq& c) const {
  MPoly r(f_, v_);
  if (c.is_zero()) return r;
  r.t_.reserve(t_.size());
  for (auto& t : t_) r.t_.push_back({mono_mul(t.m, m), t.c * c});
  return r;
}

MPoly MPoly::pow(uint64_t e) const {
  MPoly r = constant(f_, v_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1) r *= base;
    if (e >>= 1) base *= base;
  }
  return r;
}

MPoly MPoly::exact_div(const MPoly& g) const {
  require_ring(g);
  if (g.is_zero()) fail(Err::DivisionByZero, "division by the zero polynomial");
  MPoly rem = *this;
  MPoly q(f_, v_);
  Fq ilc = g.lc().inv();
  unsigned n = nvars();
  std::vector<Term> qt;
  while (!rem.is_zero()) {
    if (!mono_divides(g.lm(), rem.lm()))
      fail(Err::NotDivisible, "polynomial division is not exact");
    Mono m = mono_div(rem.lm(), g.lm());
    Fq c = rem.lc() * ilc;
    qt.push_back({m, c});
    rem = rem - g.mul_term(m, c);
  }
  q = MPoly::from_terms(f_, v_, std::move(qt));
  (void)n;
  return q;
}

bool MPoly::divides(const MPoly& g) const {
  if (is_zero()) return g.is_zero();
  try {
    (void)g.exact_div(*this);
    return true;
  } catch (const Error& e) {
    if (e.code() == Err::NotDivisible) return false;
    throw;
  }
}

MPoly MPoly::derivative(unsigned var) const {
  if (var >= nvars()) fail(Err::UnknownVariable, "derivative variable out of range");
  MPoly r(f_, v_);
  r.t_.reserve(t_.size());
  for (auto& t : t_) {
    unsigned e = mono_get(t.m, var);
    if (!e) continue;
    Fq c = t.c * Fq(f_, (int64_t)e);
    if (c.is_zero()) continue;  // char-p rule
    r.t_.push_back({mono_set(t.m, var, e - 1), std::move(c)});
  }
  return r;
}

MPoly MPoly::derivative(const std::string& var) const {
  int i = v_->index(var);
  if (i < 0) fail(Err::UnknownVariable, "unknown variable " + var);
  return derivative((unsigned)i);
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != nvars()) fail(Err::UnknownVariable, "one image per variable required");
  for (auto& im : images) images[0].require_ring(im);
  FieldPtr tf = images[0].field();
  VarsPtr tv = images[0].vars();
  if (tf != f_ && !tf->same(*f_)) fail(Err::SpecMismatch, "substitution across fields");
  // cache images^e per variable
  std::vector<std::vector<MPoly>> pows(nvars());
  for (unsigned i = 0; i < nvars(); ++i) pows[i].push_back(constant(tf, tv, 1));
  MPoly acc(tf, tv);
  for (auto& t : t_) {
    MPoly term = constant(tf, tv, t.c);
    for (unsigned i = 0; i < nvars(); ++i) {
      unsigned e = mono_get(t.m, i);
      if (!e) continue;
      while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * images[i]);
      term *= pows[i][e];
    }
    acc += term;
  }
  return acc;
}

Fq MPoly::eval(const std::vector<Fq>& point) const {
  if (point.size() != nvars()) fail(Err::UnknownVariable, "one value per variable required");
  Fq acc(f_);
  for (auto& t : t_) {
    Fq term = t.c;
    for (unsigned i = 0; i < nvars(); ++i) {
      unsigned e = mono_get(t.m, i);
      if (e) term *= point[i].pow_u(e);
    }
    acc += term;
  }
  return acc;
}

std::optional<MPoly> MPoly::p_th_root() const {
  uint64_t p = f_->p();
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    Mono m = 0;
    for (unsigned i = 0; i < nvars(); ++i) {
      unsigned e = mono_get(t.m, i);
      if (e % p) return std::nullopt;
      m = mono_set(m, i, (unsigned)(e / p));
    }
    // root of c: apply frobenius k-1 times (frobenius has order k)
    Fq c = t.c;
    for (unsigned i = 1; i < f_->k(); ++i) c = c.frobenius();
    out.push_back({m, std::move(c)});
  }
  return from_terms(f_, v_, std::move(out));
}

std::pair<long, long> MPoly::term_bidegree(Mono m, int d) const {
  // variables ordered (x0, x1, y0, y1)
  long a0 = mono_get(m, 0), a1 = mono_get(m, 1);
  long b0 = nvars() > 2 ? mono_get(m, 2) : 0;
  long b1 = nvars() > 3 ? mono_get(m, 3) : 0;
  return {a0 + a1 - (long)d * b1, b0 + b1};
}

GradeReport MPoly::grade_check(const Grading& g) const {
  for (auto& t : t_) {
    if (g.kind == Grading::Total) {
      if ((long)mono_deg(t.m, nvars()) != g.value) return {false, t.m};
    } else {
      auto [d1, d2] = term_bidegree(t.m, g.d);
      if (d1 != g.v1 || d2 != g.v2) return {false, t.m};
    }
  }
  return {true, 0};
}

std::optional<std::pair<long, long>> MPoly::bidegree(int d) const {
  if (t_.empty()) return std::nullopt;
  auto bd = term_bidegree(t_[0].m, d);
  for (auto& t : t_)
    if (term_bidegree(t.m, d) != bd) return std::nullopt;
  return bd;
}

MPoly MPoly::monic() const {
  if (t_.empty()) return *this;
  return scaled(lc().inv());
}

bool MPoly::operator==(const MPoly& o) const {
  require_ring(o);
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

bool MPoly::same_divisor(const MPoly& o) const {
  require_ring(o);
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  if (t_.size() != o.t_.size()) return false;
  Fq u = o.lc() * lc().inv();
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c * u != o.t_[i].c) return false;
  return true;
}

bool MPoly::canonical_less(const MPoly& o) const {
  long da = degree(), db = o.degree();
  if (da != db) return da < db;
  if (t_.size() != o.t_.size()) return t_.size() < o.t_.size();
  for (size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].m != o.t_[i].m) return mono_less(t_[i].m, o.t_[i].m, nvars());
    if (t_[i].c != o.t_[i].c) return t_[i].c.less(o.t_[i].c);
  }
  return false;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : t_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = t.c.str();
    bool cext = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos;
    bool has_vars = t.m != 0;
    if (!has_vars) {
      os << (cext ? "(" + cs + ")" : cs);
      continue;
    }
    bool printed = false;
    if (!t.c.is_one()) {
      os << (cext ? "(" + cs + ")" : cs);
      printed = true;
    }
    for (unsigned i = 0; i < nvars(); ++i) {
      unsigned e = mono_get(t.m, i);
      if (!e) continue;
      if (printed) os << "*";
      os << v_->name(i);
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd by content/primitive-part subresultant PRS over the trailing variable
// ---------------------------------------------------------------------------

namespace {

// view of f as a univariate polynomial in variable `var` with MPoly coefficients
std::vector<MPoly> coeffs_in(const MPoly& f, unsigned var) {
  long d = f.degree_in(var);
  std::vector<MPoly> out((size_t)std::max<long>(d + 1, 1), MPoly(f.field(), f.vars()));
  for (auto& t : f.terms()) {
    unsigned e = mono_get(t.m, var);
    Mono m = mono_set(t.m, var, 0);
    out[e] += MPoly::from_terms(f.field(), f.vars(), {{m, t.c}});
  }
  return out;
}

MPoly assemble_in(const std::vector<MPoly>& cs, unsigned var, FieldPtr f, VarsPtr v) {
  MPoly acc(f, v);
  for (size_t e = 0; e < cs.size(); ++e) {
    if (cs[e].is_zero()) continue;
    acc += cs[e] * MPoly::variable(f, v, var, (unsigned)e);
  }
  return acc;
}

long udeg(const std::vector<MPoly>& cs) {
  for (size_t i = cs.size(); i-- > 0;)
    if (!cs[i].is_zero()) return (long)i;
  return -1;
}

// pseudo-remainder of A by B in (R[..])[var]: lc(B)^(degA-degB+1) A = Q B + R
std::vector<MPoly> prem(std::vector<MPoly> A, const std::vector<MPoly>& B, FieldPtr f, VarsPtr v) {
  long da = udeg(A), db = udeg(B);
  const MPoly& lb = B[(size_t)db];
  while (da >= db && da >= 0) {
    MPoly la = A[(size_t)da];
    for (long i = 0; i <= da; ++i) A[(size_t)i] = A[(size_t)i] * lb;
    for (long i = 0; i <= db; ++i) A[(size_t)(da - db + i)] -= la * B[(size_t)i];
    A[(size_t)da] = MPoly(f, v);
    long nda = -1;
    for (long i = da; i-- > 0;)
      if (!A[(size_t)i].is_zero()) {
        nda = i;
        break;
      }
    da = nda;
  }
  A.resize((size_t)std::max<long>(da + 1, 1), MPoly(f, v));
  return A;
}

int top_effective_var(const MPoly& f, const MPoly& g) {
  for (unsigned i = f.nvars(); i-- > 0;) {
    if (f.degree_in(i) > 0 || g.degree_in(i) > 0) return (int)i;
  }
  return -1;
}

}  // namespace

MPoly gcd(const MPoly& f, const MPoly& g) {
  f.require_ring(g);
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return MPoly::constant(f.field(), f.vars(), 1);
  int var = top_effective_var(f, g);
  if (var < 0) return MPoly::constant(f.field(), f.vars(), 1);

  auto fc = coeffs_in(f, (unsigned)var);
  auto gc = coeffs_in(g, (unsigned)var);
  if (udeg(fc) == 0 || udeg(gc) == 0) {
    // one argument does not involve var after all: gcd with the other's content
    MPoly cf = gcd_many(fc);
    MPoly cg = gcd_many(gc);
    return gcd(cf, cg);
  }

  MPoly contf = gcd_many(fc);
  MPoly contg = gcd_many(gc);
  MPoly cont = gcd(contf, contg);
  for (auto& c : fc) c = c.exact_div(contf);
  for (auto& c : gc) c = c.exact_div(contg);

  auto A = std::move(fc);
  auto B = std::move(gc);
  if (udeg(A) < udeg(B)) std::swap(A, B);

  FieldPtr F = f.field();
  VarsPtr V = f.vars();
  MPoly gg = MPoly::constant(F, V, 1);
  MPoly h = MPoly::constant(F, V, 1);
  for (;;) {
    long delta = udeg(A) - udeg(B);
    auto R = prem(A, B, F, V);
    if (udeg(R) < 0) break;
    if (udeg(R) == 0) {
      // gcd in var is trivial
      return cont.monic();
    }
    A = std::move(B);
    MPoly divisor = gg * h.pow((uint64_t)delta);
    B = std::move(R);
    for (auto& c : B) c = c.exact_div(divisor);
    gg = A[(size_t)udeg(A)];
    if (delta >= 1) {
      MPoly num = gg.pow((uint64_t)delta);
      h = (delta == 1) ? num : num.exact_div(h.pow((uint64_t)(delta - 1)));
    }
  }
  // primitive part of B times the content gcd
  MPoly contB = gcd_many(B);
  for (auto& c : B) c = c.exact_div(contB);
  MPoly res = assemble_in(B, (unsigned)var, F, V) * cont;
  return res.monic();
}

MPoly gcd_many(const std::vector<MPoly>& fs) {
  MPoly acc;
  bool first = true;
  for (auto& f : fs) {
    if (first) {
      acc = f;
      first = false;
    } else {
      acc = gcd(acc, f);
    }
    if (!acc.is_zero() && acc.is_constant()) return acc.monic();
  }
  return acc.monic();
}

MPoly set_var_one(const MPoly& f, unsigned var, VarsPtr target) {
  if (target->size() != f.nvars() - 1) fail(Err::UnknownVariable, "target ring must drop one variable");
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (auto& t : f.terms()) {
    Mono m = 0;
    unsigned j = 0;
    for (unsigned i = 0; i < f.nvars(); ++i) {
      if (i == var) continue;
      m = mono_set(m, j++, mono_get(t.m, i));
    }
    out.push_back({m, t.c});
  }
  return MPoly::from_terms(f.field(), target, std::move(out));
}

MPoly homogenize(const MPoly& f, VarsPtr target, unsigned new_var, long degree) {
  if (target->size() != f.nvars() + 1) fail(Err::UnknownVariable, "target ring must add one variable");
  long need = std::max(degree, f.degree());
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (auto& t : f.terms()) {
    Mono m = 0;
    unsigned j = 0;
    long d = mono_deg(t.m, f.nvars());
    for (unsigned i = 0; i < f.nvars(); ++i) {
      if (j == new_var) ++j;
      m = mono_set(m, j++, mono_get(t.m, i));
    }
    m = mono_set(m, new_var, (unsigned)(need - d));
    out.push_back({m, t.c});
  }
  return MPoly::from_terms(f.field(), target, std::move(out));
}

MPoly rename_ring(const MPoly& f, VarsPtr target) {
  std::vector<int> map(f.nvars(), -1);
  for (unsigned i = 0; i < f.nvars(); ++i) {
    map[i] = target->index(f.vars()->name(i));
    if (map[i] < 0) fail(Err::UnknownVariable, "variable " + f.vars()->name(i) + " not in target ring");
  }
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (auto& t : f.terms()) {
    Mono m = 0;
    for (unsigned i = 0; i < f.nvars(); ++i) m = mono_set(m, (unsigned)map[i], mono_get(t.m, i));
    out.push_back({m, t.c});
  }
  return MPoly::from_terms(f.field(), target, std::move(out));
}

}  // namespace pfol
