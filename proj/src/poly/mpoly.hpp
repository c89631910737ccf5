#ifndef PFOL_POLY_MPOLY_HPP
#define PFOL_POLY_MPOLY_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gf/field.hpp"

namespace pfol {

class Vars;
using VarsPtr = std::shared_ptr<const Vars>;

// Ordered list of variable names. Operations between polynomials require the
// same list; there are no implicit embeddings between rings.
class Vars {
public:
  static constexpr unsigned kMax = 4;

  static VarsPtr make(std::vector<std::string> names);

  unsigned size() const { return (unsigned)names_.size(); }
  const std::string& name(unsigned i) const { return names_[i]; }
  int index(const std::string& n) const;
  bool same(const Vars& o) const { return names_ == o.names_; }
  const std::vector<std::string>& names() const { return names_; }

private:
  explicit Vars(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

// Exponent vector packed into 64 bits, 16 bits per variable, variable 0 in
// the top lane so that integer comparison is lexicographic.
using Mono = uint64_t;

inline Mono mono_one() { return 0; }
inline unsigned mono_get(Mono m, unsigned i) { return (unsigned)(m >> (48 - 16 * i)) & 0xffff; }
inline Mono mono_set(Mono m, unsigned i, unsigned e) {
  unsigned sh = 48 - 16 * i;
  return (m & ~(0xffffULL << sh)) | ((uint64_t)e << sh);
}
inline unsigned mono_deg(Mono m, unsigned n) {
  unsigned d = 0;
  for (unsigned i = 0; i < n; ++i) d += mono_get(m, i);
  return d;
}
inline Mono mono_mul(Mono a, Mono b) { return a + b; }
inline bool mono_divides(Mono a, Mono b) {  // a | b
  for (unsigned i = 0; i < Vars::kMax; ++i)
    if (mono_get(a, i) > mono_get(b, i)) return false;
  return true;
}
inline Mono mono_div(Mono b, Mono a) { return b - a; }
// graded lexicographic, true when a < b
inline bool mono_less(Mono a, Mono b, unsigned n) {
  unsigned da = mono_deg(a, n), db = mono_deg(b, n);
  if (da != db) return da < db;
  return a < b;
}

struct Term {
  Mono m;
  Fq c;
};

struct Grading {
  enum Kind { Total, Bidegree } kind = Total;
  int d = 0;        // ruling parameter for the bidegree weights
  long value = 0;   // expected total degree
  long v1 = 0, v2 = 0;  // expected bidegree
  static Grading total(long deg) { return {Total, 0, deg, 0, 0}; }
  static Grading bidegree(int d, long a, long b) { return {Bidegree, d, 0, a, b}; }
};

struct GradeReport {
  bool ok = true;
  Mono violating = 0;  // a term of the wrong degree, when !ok
};

// Sparse multivariate polynomial over F_{p^k}. Terms are kept in canonical
// graded-lex descending order with no zero coefficients.
class MPoly {
public:
  MPoly() = default;
  MPoly(FieldPtr f, VarsPtr v) : f_(std::move(f)), v_(std::move(v)) {}

  static MPoly constant(FieldPtr f, VarsPtr v, const Fq& c);
  static MPoly constant(FieldPtr f, VarsPtr v, int64_t c) { return constant(f, v, Fq(f, c)); }
  static MPoly variable(FieldPtr f, VarsPtr v, unsigned i, unsigned e = 1);
  static MPoly from_terms(FieldPtr f, VarsPtr v, std::vector<Term> unsorted);

  const FieldPtr& field() const { return f_; }
  const VarsPtr& vars() const { return v_; }
  unsigned nvars() const { return v_->size(); }
  bool bound() const { return f_ != nullptr; }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m == 0); }
  size_t nterms() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  long degree() const;                // total degree, -1 for 0
  long degree_in(unsigned var) const;  // -1 for 0
  const Fq& lc() const;               // leading coefficient (graded-lex)
  Mono lm() const;                    // leading monomial
  Fq coeff(Mono m) const;             // 0 if absent
  Fq constant_term() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Fq& c) const;
  MPoly mul_term(Mono m, const Fq& c) const;
  MPoly pow(uint64_t e) const;

  // quotient when the division is exact; throws NotDivisible otherwise
  MPoly exact_div(const MPoly& g) const;
  bool divides(const MPoly& g) const;  // *this | g

  MPoly derivative(unsigned var) const;
  MPoly derivative(const std::string& var) const;

  // simultaneous substitution; images live in a common target ring and there
  // must be one image per variable of *this
  MPoly substitute(const std::vector<MPoly>& images) const;
  Fq eval(const std::vector<Fq>& point) const;

  // p-th root when every exponent is divisible by p and coefficients admit
  // roots (they always do over a finite field); nullopt otherwise
  std::optional<MPoly> p_th_root() const;

  GradeReport grade_check(const Grading& g) const;
  // actual (bi)degree of the first term under the grading weights
  std::pair<long, long> term_bidegree(Mono m, int d) const;
  std::optional<std::pair<long, long>> bidegree(int d) const;  // uniform bidegree or nullopt

  MPoly monic() const;  // scaled so lc == 1
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  // proportional by a nonzero scalar
  bool same_divisor(const MPoly& o) const;
  // deterministic total order on canonical forms (for sorting divisor components)
  bool canonical_less(const MPoly& o) const;

  std::string str() const;

  void require_ring(const MPoly& o) const;

private:
  FieldPtr f_;
  VarsPtr v_;
  std::vector<Term> t_;
};

MPoly gcd(const MPoly& f, const MPoly& g);
MPoly gcd_many(const std::vector<MPoly>& fs);

// substitute one variable by 1, dropping it from the ring
MPoly set_var_one(const MPoly& f, unsigned var, VarsPtr target);
// homogenize with respect to a fresh variable inserted at position new_var in
// the target ring; result is homogeneous of max(degree, f.degree())
MPoly homogenize(const MPoly& f, VarsPtr target, unsigned new_var, long degree);
// move f into a ring whose variable list contains f's variables (by name)
MPoly rename_ring(const MPoly& f, VarsPtr target);

}  // namespace pfol

#endif
