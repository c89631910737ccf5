#include "factor/factor.hpp"

#include <algorithm>

namespace pfol {

bool Divisor::reduced() const {
  return std::all_of(comps.begin(), comps.end(), [](const DivComponent& c) { return c.mult == 1; });
}

long Divisor::total_degree() const {
  long d = 0;
  for (auto& c : comps) d += c.mult * c.poly.degree();
  return d;
}

std::optional<MPoly> Divisor::p_factor_witness() const {
  long p = (long)field->p();
  for (auto& c : comps)
    if (c.mult >= p) return c.poly;
  return std::nullopt;
}

MPoly Divisor::product() const {
  MPoly acc = MPoly::constant(field, vars, unit.bound() ? unit : Fq(field, 1));
  for (auto& c : comps) acc *= c.poly.pow((uint64_t)c.mult);
  return acc;
}

void Divisor::sort_canonical() {
  std::sort(comps.begin(), comps.end(), [](const DivComponent& a, const DivComponent& b) {
    return a.poly.canonical_less(b.poly);
  });
}

long Divisor::mult_of(const MPoly& g) const {
  for (auto& c : comps)
    if (c.poly.same_divisor(g)) return c.mult;
  return 0;
}

namespace {

void sq_decompose_rec(const MPoly& f, long scale, std::vector<DivComponent>& out) {
  // f monic, nonconstant
  unsigned n = f.nvars();
  std::vector<MPoly> parts;
  bool all_zero = true;
  for (unsigned i = 0; i < n; ++i) {
    MPoly d = f.derivative(i);
    if (!d.is_zero()) all_zero = false;
    parts.push_back(std::move(d));
  }
  if (all_zero) {
    auto root = f.p_th_root();
    if (!root) fail(Err::Internal, "vanishing partials without a p-th root");
    sq_decompose_rec(root->monic(), scale * (long)f.field()->p(), out);
    return;
  }
  MPoly c = f;
  for (auto& d : parts)
    if (!d.is_zero()) c = gcd(c, d);
  MPoly w = f.exact_div(c);
  long i = 1;
  while (!w.is_constant()) {
    MPoly y = gcd(w, c);
    MPoly z = w.exact_div(y);
    if (!z.is_constant()) out.push_back({z.monic(), i * scale, false});
    w = std::move(y);
    c = c.exact_div(w);
    ++i;
  }
  if (!c.is_constant()) {
    auto root = c.p_th_root();
    if (!root) fail(Err::Internal, "residual factor is not a p-th power");
    sq_decompose_rec(root->monic(), scale * (long)f.field()->p(), out);
  }
}

}  // namespace

Divisor squarefree_decompose(const MPoly& f) {
  if (!f.bound() || f.is_zero()) fail(Err::ZeroPolynomial, "squarefree decomposition of zero");
  Divisor d;
  d.field = f.field();
  d.vars = f.vars();
  d.unit = f.lc();
  if (f.is_constant()) return d;
  sq_decompose_rec(f.monic(), 1, d.comps);
  d.sort_canonical();
  return d;
}

bool is_reduced(const MPoly& f) { return squarefree_decompose(f).reduced(); }

std::optional<MPoly> has_p_factor(const MPoly& f) {
  return squarefree_decompose(f).p_factor_witness();
}

// ---------------------------------------------------------------------------
// univariate factorization: squarefree -> distinct degree -> equal degree
// ---------------------------------------------------------------------------

namespace {

void u_sq_rec(const UPoly& f, long scale, std::vector<std::pair<UPoly, long>>& out) {
  FieldPtr F = f.field();
  uint64_t p = F->p();
  UPoly d = f.derivative();
  if (d.is_zero()) {
    // f = g(x^p); take the p-th root
    std::vector<Fq> rc((size_t)(f.deg() / (long)p) + 1, Fq(F));
    for (long i = 0; i * (long)p <= f.deg(); ++i) {
      Fq c = f.coeff((size_t)(i * (long)p));
      for (unsigned j = 1; j < F->k(); ++j) c = c.frobenius();
      rc[(size_t)i] = c;
    }
    u_sq_rec(UPoly(F, std::move(rc)).monic(), scale * (long)p, out);
    return;
  }
  UPoly c = ugcd(f, d);
  UPoly w = f.divmod(c).first;
  long i = 1;
  while (w.deg() > 0) {
    UPoly y = ugcd(w, c);
    UPoly z = w.divmod(y).first;
    if (z.deg() > 0) out.push_back({z.monic(), i * scale});
    w = std::move(y);
    c = c.divmod(w).first;
    ++i;
  }
  if (c.deg() > 0) u_sq_rec(c.monic(), scale, out);  // c = h^p; recurse via derivative-zero branch
}

// equal-degree splitting of h (product of irreducibles of degree d), q odd
void edf(const UPoly& h, long d, Rng& rng, std::vector<UPoly>& out) {
  if (h.deg() == d) {
    out.push_back(h.monic());
    return;
  }
  FieldPtr F = h.field();
  uint64_t q = F->order();
  for (;;) {
    std::vector<Fq> rc((size_t)h.deg(), Fq(F));
    for (auto& c : rc) c = Fq::random(F, rng);
    UPoly a(F, std::move(rc));
    if (a.deg() < 1) continue;
    // a^((q^d - 1) / 2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
    UPoly cur = a.mod(h);
    UPoly acc = cur;
    for (long i = 1; i < d; ++i) {
      cur = upowmod(cur, q, h);
      acc = (acc * cur).mod(h);
    }
    UPoly w = upowmod(acc, (q - 1) / 2, h);
    UPoly g = ugcd(w - UPoly::constant(F, Fq(F, 1)), h);
    if (g.deg() > 0 && g.deg() < h.deg()) {
      edf(g, d, rng, out);
      edf(h.divmod(g).first, d, rng, out);
      return;
    }
  }
}

void ddf(UPoly g, Rng& rng, long mult, std::vector<std::pair<UPoly, long>>& out) {
  FieldPtr F = g.field();
  uint64_t q = F->order();
  UPoly x = UPoly::x(F);
  UPoly frob = upowmod(x, q, g);  // x^(q^d) mod g, maintained across d
  for (long d = 1; 2 * d <= g.deg(); ++d) {
    if (d > 1) frob = upowmod(frob, q, g);
    UPoly split = ugcd(frob - x, g);
    if (split.deg() > 0) {
      std::vector<UPoly> irr;
      edf(split, d, rng, irr);
      for (auto& h : irr) out.push_back({h, mult});
      g = g.divmod(split).first;
      frob = frob.mod(g);
    }
  }
  if (g.deg() > 0) out.push_back({g.monic(), mult});
}

}  // namespace

std::vector<std::pair<UPoly, long>> ufactor(const UPoly& f, uint64_t seed) {
  if (f.is_zero()) fail(Err::ZeroPolynomial, "factorization of zero");
  std::vector<std::pair<UPoly, long>> out;
  if (f.deg() == 0) return out;
  std::vector<std::pair<UPoly, long>> sq;
  u_sq_rec(f.monic(), 1, sq);
  Rng rng(seed, 0xfac7);
  for (auto& [g, m] : sq) ddf(g, rng, m, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    for (long i = a.first.deg(); i >= 0; --i) {
      const Fq &x = a.first[(size_t)i], &y = b.first[(size_t)i];
      if (!(x == y)) return x.less(y);
    }
    return false;
  });
  return out;
}

std::vector<Fq> uroots(const UPoly& f, uint64_t seed) {
  std::vector<Fq> roots;
  for (auto& [g, m] : ufactor(f, seed)) {
    if (g.deg() != 1) continue;
    Fq r = -g[0] * g[1].inv();
    for (long i = 0; i < m; ++i) roots.push_back(r);
  }
  return roots;
}

Divisor factor_univariate(const MPoly& f, uint64_t seed) {
  if (f.is_zero()) fail(Err::ZeroPolynomial, "factorization of zero");
  if (f.nvars() != 1) fail(Err::ValidationError, "factor_univariate expects one variable");
  Divisor d;
  d.field = f.field();
  d.vars = f.vars();
  d.unit = f.lc();
  if (f.is_constant()) return d;
  UPoly u(f.field(), [&] {
    std::vector<Fq> c((size_t)f.degree() + 1, Fq(f.field()));
    for (auto& t : f.terms()) c[mono_get(t.m, 0)] = t.c;
    return c;
  }());
  for (auto& [g, m] : ufactor(u, seed)) {
    std::vector<Term> ts;
    for (long i = 0; i <= g.deg(); ++i)
      if (!g[(size_t)i].is_zero()) ts.push_back({mono_set(0, 0, (unsigned)i), g[(size_t)i]});
    d.comps.push_back({MPoly::from_terms(f.field(), f.vars(), std::move(ts)), m, true});
  }
  d.sort_canonical();
  return d;
}

// ---------------------------------------------------------------------------
// field embeddings
// ---------------------------------------------------------------------------

FieldEmbedding FieldEmbedding::identity(FieldPtr f) {
  FieldEmbedding e;
  e.from_ = f;
  e.to_ = f;
  return e;
}

FieldEmbedding FieldEmbedding::make(FieldPtr from, unsigned m, uint64_t seed) {
  if (m <= 1) return identity(from);
  FieldEmbedding e;
  e.from_ = from;
  unsigned K = from->k() * m;
  e.to_ = Field::extension_auto(from->p(), K, seed, from->k() > 1 ? from->gen_name() : "t");
  if (from->k() == 1) return e;  // prime subfield embeds canonically
  // image of the generator: a root of the base modulus in the top field
  UPoly mod(e.to_);
  {
    std::vector<Fq> c;
    for (uint64_t ci : from->modulus()) c.push_back(Fq(e.to_, (int64_t)ci));
    mod = UPoly(e.to_, std::move(c));
  }
  auto roots = uroots(mod, seed);
  if (roots.empty()) fail(Err::Internal, "base modulus has no root in the extension");
  Fq rho = roots[0];
  for (auto& r : roots)
    if (r.less(rho)) rho = r;
  e.gen_pow_.push_back(Fq(e.to_, 1));
  for (unsigned i = 1; i < from->k(); ++i) e.gen_pow_.push_back(e.gen_pow_.back() * rho);
  return e;
}

Fq FieldEmbedding::embed(const Fq& a) const {
  if (trivial()) return a;
  if (from_->k() == 1) return Fq(to_, (int64_t)a.residue());
  Fq acc(to_);
  for (unsigned i = 0; i < from_->k(); ++i)
    acc += gen_pow_[i] * Fq(to_, (int64_t)a.coord(i));
  return acc;
}

std::optional<Fq> FieldEmbedding::section(const Fq& b) const {
  if (trivial()) return b;
  unsigned k = from_->k();
  unsigned K = to_->k();
  uint64_t p = from_->p();
  if (k == 1) {
    for (unsigned i = 1; i < K; ++i)
      if (b.coord(i)) return std::nullopt;
    return Fq(from_, (int64_t)b.coord(0));
  }
  // solve sum a_i * gen_pow[i] = b over F_p by Gaussian elimination
  std::vector<std::vector<uint64_t>> M(K, std::vector<uint64_t>(k + 1, 0));
  for (unsigned j = 0; j < k; ++j)
    for (unsigned i = 0; i < K; ++i) M[i][j] = gen_pow_[j].coord(i);
  for (unsigned i = 0; i < K; ++i) M[i][k] = b.coord(i);
  unsigned row = 0;
  std::vector<int> pivot_of_col(k, -1);
  for (unsigned col = 0; col < k && row < K; ++col) {
    unsigned sel = row;
    while (sel < K && M[sel][col] == 0) ++sel;
    if (sel == K) continue;
    std::swap(M[sel], M[row]);
    uint64_t inv = from_->sinv(M[row][col]);
    for (auto& x : M[row]) x = x * inv % p;
    for (unsigned i = 0; i < K; ++i) {
      if (i == row || M[i][col] == 0) continue;
      uint64_t c = M[i][col];
      for (unsigned j = 0; j <= k; ++j) M[i][j] = (M[i][j] + (p - c) * M[row][j]) % p;
    }
    pivot_of_col[col] = (int)row;
    ++row;
  }
  std::vector<uint64_t> a(k, 0);
  for (unsigned col = 0; col < k; ++col) {
    if (pivot_of_col[col] < 0) return std::nullopt;
    a[col] = M[(size_t)pivot_of_col[col]][k];
  }
  // consistency: rows without pivots must have zero rhs
  for (unsigned i = row; i < K; ++i)
    if (M[i][k]) return std::nullopt;
  Fq cand = Fq::from_coords(from_, a);
  if (!(embed(cand) == b)) return std::nullopt;
  return cand;
}

MPoly FieldEmbedding::embed(const MPoly& f) const {
  if (trivial()) return f;
  std::vector<Term> ts;
  ts.reserve(f.nterms());
  for (auto& t : f.terms()) ts.push_back({t.m, embed(t.c)});
  return MPoly::from_terms(to_, f.vars(), std::move(ts));
}

std::optional<MPoly> FieldEmbedding::section(const MPoly& f) const {
  if (trivial()) return f;
  std::vector<Term> ts;
  ts.reserve(f.nterms());
  for (auto& t : f.terms()) {
    auto c = section(t.c);
    if (!c) return std::nullopt;
    ts.push_back({t.m, *c});
  }
  return MPoly::from_terms(from_, f.vars(), std::move(ts));
}

UPoly FieldEmbedding::embed(const UPoly& f) const {
  if (trivial()) return f;
  std::vector<Fq> c;
  c.reserve((size_t)f.deg() + 1);
  for (auto& x : f.coeffs()) c.push_back(embed(x));
  return UPoly(to_, std::move(c));
}

Divisor factor_auto(const MPoly& f, int d, uint64_t seed) {
  switch (f.nvars()) {
    case 1: return factor_univariate(f, seed);
    case 2: return factor_bivariate(f, seed);
    case 3:
    case 4: return factor_in_chart(f, d, seed);
    default: fail(Err::ValidationError, "unsupported number of variables");
  }
}

}  // namespace pfol
