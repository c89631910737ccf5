#include "poly/upoly.hpp"

#include <sstream>

namespace pfol {

UPoly UPoly::constant(FieldPtr f, const Fq& c) {
  UPoly r(f);
  if (!c.is_zero()) r.c_.push_back(c);
  return r;
}

UPoly UPoly::x(FieldPtr f) {
  UPoly r(f);
  r.c_ = {Fq(f), Fq(f, 1)};
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Fq(f_));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
  UPoly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Fq(f_));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] -= o.c_[i];
  }
  r.trim();
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  UPoly r(f_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Fq(f_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

UPoly UPoly::scaled(const Fq& s) const {
  UPoly r(f_);
  if (s.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (auto& c : c_) r.c_.push_back(c * s);
  return r;
}

UPoly UPoly::shifted(size_t e) const {
  if (c_.empty()) return *this;
  UPoly r(f_);
  r.c_.assign(c_.size() + e, Fq(f_));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + e] = c_[i];
  return r;
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(lc().inv());
}

UPoly UPoly::derivative() const {
  UPoly r(f_);
  if (c_.size() < 2) return r;
  r.c_.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Fq(f_, (int64_t)i));
  r.trim();
  return r;
}

Fq UPoly::eval(const Fq& v) const {
  Fq acc(f_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& g) const {
  if (g.is_zero()) fail(Err::DivisionByZero, "univariate division by zero");
  UPoly q(f_), r = *this;
  if (r.deg() < g.deg()) return {q, r};
  q.c_.assign((size_t)(r.deg() - g.deg() + 1), Fq(f_));
  Fq ilc = g.lc().inv();
  while (r.deg() >= g.deg() && !r.is_zero()) {
    size_t shift = (size_t)(r.deg() - g.deg());
    Fq coeff = r.lc() * ilc;
    q.c_[shift] = coeff;
    for (size_t i = 0; i < g.c_.size(); ++i) r.c_[shift + i] -= coeff * g.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

std::string UPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c_[i].str();
    bool wrap = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos;
    if (i == 0) {
      os << (wrap ? "(" + cs + ")" : cs);
      continue;
    }
    if (!c_[i].is_one()) os << (wrap ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly upowmod(const UPoly& base, uint64_t e, const UPoly& f) {
  UPoly r = UPoly::constant(base.field(), Fq(base.field(), 1));
  UPoly b = base.mod(f);
  while (e) {
    if (e & 1) r = (r * b).mod(f);
    b = (b * b).mod(f);
    e >>= 1;
  }
  return r;
}

bool uirreducible(const UPoly& f) {
  long n = f.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  FieldPtr F = f.field();
  uint64_t q = F->order();
  UPoly fm = f.monic();
  UPoly x = UPoly::x(F);
  // frob[i] = x^(q^i) mod f
  std::vector<UPoly> frob((size_t)n + 1);
  frob[0] = x.mod(fm);
  for (long i = 1; i <= n; ++i) frob[(size_t)i] = upowmod(frob[(size_t)i - 1], q, fm);
  if (!(frob[(size_t)n] == x.mod(fm))) return false;
  for (long r = 2; r <= n; ++r) {
    if (n % r) continue;
    bool r_prime = true;
    for (long d = 2; d * d <= r; ++d)
      if (r % d == 0) r_prime = false;
    if (!r_prime) continue;
    UPoly g = ugcd(frob[(size_t)(n / r)] - x, fm);
    if (g.deg() != 0) return false;
  }
  return true;
}

}  // namespace pfol
