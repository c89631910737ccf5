#ifndef PFOL_POLY_UPOLY_HPP
#define PFOL_POLY_UPOLY_HPP

#include <vector>

#include "gf/field.hpp"

namespace pfol {

// Dense univariate polynomial over F_{p^k}, low coefficients first, trimmed.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(FieldPtr f) : f_(std::move(f)) {}
  UPoly(FieldPtr f, std::vector<Fq> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }
  static UPoly constant(FieldPtr f, const Fq& c);
  static UPoly x(FieldPtr f);

  const FieldPtr& field() const { return f_; }
  long deg() const { return (long)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const Fq& operator[](size_t i) const { return c_[i]; }
  Fq coeff(size_t i) const { return i < c_.size() ? c_[i] : Fq(f_); }
  const Fq& lc() const { return c_.back(); }
  const std::vector<Fq>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Fq& s) const;
  UPoly shifted(size_t e) const;  // * x^e
  UPoly monic() const;
  UPoly derivative() const;
  Fq eval(const Fq& v) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // divisor must be nonzero; returns {quotient, remainder}
  std::pair<UPoly, UPoly> divmod(const UPoly& g) const;
  UPoly mod(const UPoly& g) const { return divmod(g).second; }

  std::string str(const std::string& var) const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  FieldPtr f_;
  std::vector<Fq> c_;
};

UPoly ugcd(UPoly a, UPoly b);                                  // monic gcd
UPoly upowmod(const UPoly& base, uint64_t e, const UPoly& f);  // base^e mod f
bool uirreducible(const UPoly& f);                             // over f.field()

}  // namespace pfol

#endif
