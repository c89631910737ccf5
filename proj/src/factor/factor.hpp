#ifndef PFOL_FACTOR_FACTOR_HPP
#define PFOL_FACTOR_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "poly/mpoly.hpp"
#include "poly/upoly.hpp"

namespace pfol {

struct DivComponent {
  MPoly poly;  // monic, squarefree; irreducible when flagged
  long mult = 1;
  bool irreducible = false;
};

// Effective divisor presented as pairwise-coprime components with
// multiplicities, plus the scalar unit so that unit * prod comp^mult
// reassembles the defining polynomial exactly.
struct Divisor {
  FieldPtr field;
  VarsPtr vars;
  std::vector<DivComponent> comps;
  Fq unit;

  bool reduced() const;
  long total_degree() const;  // sum mult * deg(comp)
  std::optional<MPoly> p_factor_witness() const;  // component with mult >= p
  MPoly product() const;
  void sort_canonical();
  // multiplicity of a given divisor (0 if absent), compared up to unit
  long mult_of(const MPoly& g) const;
};

// Squarefree decomposition in characteristic p: the usual gcd chain with the
// partials, recursing through p-th roots when every partial vanishes.
Divisor squarefree_decompose(const MPoly& f);
bool is_reduced(const MPoly& f);
// witness component of multiplicity >= p, if any
std::optional<MPoly> has_p_factor(const MPoly& f);

// Complete factorization into monic irreducibles over the coefficient field.
std::vector<std::pair<UPoly, long>> ufactor(const UPoly& f, uint64_t seed = 1);
std::vector<Fq> uroots(const UPoly& f, uint64_t seed = 1);

Divisor factor_univariate(const MPoly& f, uint64_t seed = 1);
// two-variable ring; specialization + Hensel lifting + subset recombination
Divisor factor_bivariate(const MPoly& f, uint64_t seed = 1);
// homogeneous (3 vars) or bihomogeneous (4 vars, ruling parameter d):
// strips coordinate hyperplanes, factors in a standard chart, homogenizes back
Divisor factor_in_chart(const MPoly& f, int d = 0, uint64_t seed = 1);
// dispatch on the number of variables (1, 2, or homogeneous 3/4)
Divisor factor_auto(const MPoly& f, int d = 0, uint64_t seed = 1);

// F_{p^k} -> F_{p^(k*m)} with a section on the image.
class FieldEmbedding {
public:
  FieldEmbedding() = default;
  static FieldEmbedding identity(FieldPtr f);
  static FieldEmbedding make(FieldPtr from, unsigned m, uint64_t seed = 1);

  const FieldPtr& from() const { return from_; }
  const FieldPtr& to() const { return to_; }
  bool trivial() const { return from_ == to_; }

  Fq embed(const Fq& a) const;
  std::optional<Fq> section(const Fq& b) const;
  MPoly embed(const MPoly& f) const;
  std::optional<MPoly> section(const MPoly& f) const;
  UPoly embed(const UPoly& f) const;

private:
  FieldPtr from_, to_;
  std::vector<Fq> gen_pow_;  // 1, rho, ..., rho^(k-1) in `to`
};

// true when f (certified irreducible over its field F_q) stays irreducible
// over F_{q^m} for every m in 2..max_m
bool irreducible_over_extensions(const MPoly& f, unsigned max_m, uint64_t seed = 1);

}  // namespace pfol

#endif
