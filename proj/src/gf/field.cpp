#include "gf/field.hpp"

#include <algorithm>
#include <sstream>

namespace pfol {

const char* err_name(Err code) {
  switch (code) {
    case Err::NotPrime: return "NotPrime";
    case Err::SpecMismatch: return "SpecMismatch";
    case Err::UnknownVariable: return "UnknownVariable";
    case Err::ValidationError: return "ValidationError";
    case Err::SyntaxError: return "SyntaxError";
    case Err::ConfigError: return "ConfigError";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::NotDivisible: return "NotDivisible";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::RecombinationOverflow: return "RecombinationOverflow";
    case Err::PClosed: return "PClosed";
    case Err::CharDividesDegree: return "CharacteristicDividesDegreePlusTwo";
    case Err::RadialField: return "RadialField";
    case Err::ExponentDividesP: return "ExponentDividesP";
    case Err::WrongSurface: return "WrongSurface";
    case Err::CenterNotPReduced: return "CenterNotPReduced";
    case Err::CenterNotOnCurves: return "CenterNotOnCurves";
    case Err::UnsupportedCenter: return "UnsupportedCenter";
    case Err::BadReduction: return "BadReduction";
    case Err::FieldTooLarge: return "FieldTooLarge";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = (__uint128_t)r * a % m;
    a = (__uint128_t)a * a % m;
    e >>= 1;
  }
  return r;
}

// ---- dense univariate arithmetic mod p, used only to validate moduli ----

using UVec = std::vector<uint64_t>;  // coefficients, low to high, trimmed

void utrim(UVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UVec umulmod(const UVec& a, const UVec& b, const UVec& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UVec c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  size_t k = f.size() - 1;  // f monic of degree k
  for (size_t i = c.size(); i-- > k;) {
    uint64_t t = c[i];
    if (!t) continue;
    c[i] = 0;
    for (size_t j = 0; j < k; ++j) c[i - k + j] = (c[i - k + j] + (p - f[j]) * t) % p;
  }
  c.resize(k);
  utrim(c);
  return c;
}

UVec upowmod(UVec base, uint64_t e, const UVec& f, uint64_t p) {
  UVec r{1};
  while (e) {
    if (e & 1) r = umulmod(r, base, f, p);
    base = umulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

UVec ugcd(UVec a, UVec b, uint64_t p) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    // a mod b, b monic-normalized on the fly
    uint64_t lb = b.back();
    uint64_t ilb = powmod_u64(lb, p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
      uint64_t q = a.back() * ilb % p;
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + (p - q * b[j] % p)) % p;
      utrim(a);
    }
    std::swap(a, b);
  }
  return a;
}

bool irreducible_mod_p(const UVec& f, uint64_t p) {
  size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  // x^(p^k) == x mod f, and gcd(x^(p^(k/q)) - x, f) = 1 for prime q | k
  UVec x{0, 1};
  std::vector<UVec> frob(k + 1);  // frob[i] = x^(p^i) mod f
  frob[0] = x;
  for (size_t i = 1; i <= k; ++i) frob[i] = upowmod(frob[i - 1], p, f, p);
  UVec top = frob[k];
  if (top != x) return false;
  for (size_t q = 2; q <= k; ++q) {
    if (k % q != 0) continue;
    bool q_prime = true;
    for (size_t d = 2; d * d <= q; ++d)
      if (q % d == 0) q_prime = false;
    if (!q_prime) continue;
    UVec diff = frob[k / q];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    utrim(diff);
    UVec g = ugcd(diff, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = (__uint128_t)x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldPtr Field::prime(uint64_t p) {
  if (p <= 2) fail(Err::ValidationError, "characteristic must be an odd prime > 2");
  if (p >= (1ULL << 31)) fail(Err::FieldTooLarge, "prime exceeds the supported 2^31 bound");
  if (!is_prime_u64(p)) fail(Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
  return FieldPtr(new Field(p, 1, {0, 1}, ""));
}

FieldPtr Field::extension(uint64_t p, std::vector<uint64_t> modulus, std::string gen) {
  FieldPtr base = prime(p);  // validates p
  for (auto& c : modulus) c %= p;
  utrim(modulus);
  if (modulus.size() < 3) fail(Err::ValidationError, "extension modulus must have degree >= 2");
  if (modulus.back() != 1) {
    uint64_t inv = powmod_u64(modulus.back(), p - 2, p);
    for (auto& c : modulus) c = c * inv % p;
  }
  if (!irreducible_mod_p(modulus, p))
    fail(Err::ValidationError, "extension modulus is reducible over F_p");
  unsigned k = (unsigned)modulus.size() - 1;
  return FieldPtr(new Field(p, k, std::move(modulus), std::move(gen)));
}

FieldPtr Field::extension_auto(uint64_t p, unsigned k, uint64_t seed, std::string gen) {
  if (k == 1) return prime(p);
  Rng rng(seed, 0x8f1dULL * k);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<uint64_t> f(k + 1, 0);
    f[k] = 1;
    for (unsigned i = 0; i < k; ++i) f[i] = rng.below(p);
    if (irreducible_mod_p(f, p)) return extension(p, std::move(f), std::move(gen));
  }
  fail(Err::Internal, "could not find an irreducible modulus");
}

uint64_t Field::order() const {
  uint64_t r = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (r > (1ULL << 62) / p_) fail(Err::FieldTooLarge, "field order exceeds 2^62");
    r *= p_;
  }
  return r;
}

uint64_t Field::sinv(uint64_t a) const {
  a %= p_;
  if (a == 0) fail(Err::DivisionByZero, "inverse of zero residue");
  return powmod_u64(a, p_ - 2, p_);
}

// ---- Fq ----

Fq Fq::from_coords(FieldPtr f, std::vector<uint64_t> coords) {
  Fq r(f);
  unsigned k = f->k();
  coords.resize(k, 0);
  for (auto& c : coords) c %= f->p();
  if (k == 1)
    r.a_ = coords[0];
  else
    r.c_ = std::move(coords);
  return r;
}

Fq Fq::gen(FieldPtr f) {
  if (f->k() == 1) fail(Err::ValidationError, "prime field has no extension generator");
  std::vector<uint64_t> c(f->k(), 0);
  c[1] = 1;
  return from_coords(std::move(f), std::move(c));
}

Fq Fq::from_index(FieldPtr f, uint64_t idx) {
  std::vector<uint64_t> c(f->k());
  for (unsigned i = 0; i < f->k(); ++i) {
    c[i] = idx % f->p();
    idx /= f->p();
  }
  return from_coords(std::move(f), std::move(c));
}

uint64_t Fq::index() const {
  uint64_t r = 0;
  for (unsigned i = f_->k(); i-- > 0;) r = r * f_->p() + coord(i);
  return r;
}

Fq Fq::random(FieldPtr f, Rng& rng) {
  std::vector<uint64_t> c(f->k());
  for (auto& x : c) x = rng.below(f->p());
  return from_coords(std::move(f), std::move(c));
}

void Fq::set_int(int64_t n) {
  int64_t p = (int64_t)f_->p();
  int64_t r = n % p;
  if (r < 0) r += p;
  if (f_->k() == 1)
    a_ = (uint64_t)r;
  else
    c_[0] = (uint64_t)r;
}

void Fq::require_same(const Fq& o) const {
  if (!f_ || !o.f_) fail(Err::SpecMismatch, "unbound field element");
  if (f_ != o.f_ && !f_->same(*o.f_)) fail(Err::SpecMismatch, "elements of different fields");
}

bool Fq::is_zero() const {
  if (f_->k() == 1) return a_ == 0;
  return std::all_of(c_.begin(), c_.end(), [](uint64_t x) { return x == 0; });
}

bool Fq::is_one() const {
  if (f_->k() == 1) return a_ == 1;
  if (c_[0] != 1) return false;
  for (unsigned i = 1; i < f_->k(); ++i)
    if (c_[i]) return false;
  return true;
}

Fq Fq::operator-() const {
  Fq r(f_);
  if (f_->k() == 1)
    r.a_ = (f_->p() - a_) % f_->p();
  else
    for (unsigned i = 0; i < f_->k(); ++i) r.c_[i] = (f_->p() - c_[i]) % f_->p();
  return r;
}

Fq Fq::operator+(const Fq& o) const {
  require_same(o);
  Fq r(f_);
  if (f_->k() == 1)
    r.a_ = f_->sadd(a_, o.a_);
  else
    for (unsigned i = 0; i < f_->k(); ++i) r.c_[i] = f_->sadd(c_[i], o.c_[i]);
  return r;
}

Fq Fq::operator-(const Fq& o) const {
  require_same(o);
  Fq r(f_);
  if (f_->k() == 1)
    r.a_ = f_->ssub(a_, o.a_);
  else
    for (unsigned i = 0; i < f_->k(); ++i) r.c_[i] = f_->ssub(c_[i], o.c_[i]);
  return r;
}

Fq Fq::operator*(const Fq& o) const {
  require_same(o);
  Fq r(f_);
  unsigned k = f_->k();
  if (k == 1) {
    r.a_ = f_->smul(a_, o.a_);
    return r;
  }
  uint64_t p = f_->p();
  const auto& m = f_->modulus();
  std::vector<uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (!c_[i]) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
  }
  for (unsigned i = 2 * k - 1; i-- > k;) {
    uint64_t t = prod[i];
    if (!t) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - m[j]) * t) % p;
  }
  prod.resize(k);
  r.c_ = std::move(prod);
  return r;
}

Fq Fq::inv() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  unsigned k = f_->k();
  if (k == 1) {
    Fq r(f_);
    r.a_ = f_->sinv(a_);
    return r;
  }
  // extended Euclid in F_p[t] against the modulus
  uint64_t p = f_->p();
  UVec r0(f_->modulus());
  UVec r1(c_);
  utrim(r1);
  UVec s0{}, s1{1};
  while (!r1.empty()) {
    uint64_t lt = r1.back();
    uint64_t ilt = powmod_u64(lt, p - 2, p);
    UVec q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    UVec rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      uint64_t qc = rem.back() * ilt % p;
      size_t shift = rem.size() - r1.size();
      q[shift] = qc;
      for (size_t j = 0; j < r1.size(); ++j)
        rem[shift + j] = (rem[shift + j] + (p - qc * r1[j] % p)) % p;
      utrim(rem);
    }
    // s = s0 - q*s1
    UVec qs(q.size() + (s1.empty() ? 0 : s1.size() - 1) + 1, 0);
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p;
    UVec s = s0;
    if (s.size() < qs.size()) s.resize(qs.size(), 0);
    for (size_t i = 0; i < qs.size(); ++i) s[i] = (s[i] + p - qs[i]) % p;
    utrim(s);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 = gcd (a nonzero constant since the modulus is irreducible)
  uint64_t scale = powmod_u64(r0[0], p - 2, p);
  std::vector<uint64_t> out(k, 0);
  for (size_t i = 0; i < s0.size() && i < k; ++i) out[i] = s0[i] * scale % p;
  return from_coords(f_, std::move(out));
}

Fq Fq::pow_u(uint64_t e) const {
  Fq base = *this;
  Fq r(f_, 1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Fq Fq::pow(int64_t e) const {
  if (e >= 0) return pow_u((uint64_t)e);
  return inv().pow_u((uint64_t)(-e));
}

Fq Fq::frobenius() const {
  if (f_->k() == 1) return *this;
  return pow_u(f_->p());
}

bool Fq::in_prime_field() const {
  if (f_->k() == 1) return true;
  return frobenius() == *this;
}

bool Fq::operator==(const Fq& o) const {
  require_same(o);
  if (f_->k() == 1) return a_ == o.a_;
  return c_ == o.c_;
}

bool Fq::less(const Fq& o) const {
  require_same(o);
  for (unsigned i = f_->k(); i-- > 0;) {
    if (coord(i) != o.coord(i)) return coord(i) < o.coord(i);
  }
  return false;
}

std::string Fq::str() const {
  if (f_->k() == 1) return std::to_string(a_);
  std::ostringstream os;
  bool first = true;
  const std::string& t = f_->gen_name();
  for (unsigned i = f_->k(); i-- > 0;) {
    uint64_t c = coord(i);
    if (!c) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0)
      os << c;
    else {
      if (c != 1) os << c << "*";
      os << t;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace pfol
