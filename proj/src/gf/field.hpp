#ifndef PFOL_GF_FIELD_HPP
#define PFOL_GF_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "common.hpp"

namespace pfol {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Description of F_{p^k}: an odd prime p < 2^31 and, for k > 1, a monic
// irreducible modulus over F_p whose residue class ring realizes the
// extension. Elements are coordinate vectors in the power basis of the
// generator. Immutable; shared by every object computed over the field.
class Field {
public:
  static FieldPtr prime(uint64_t p);
  // modulus = c[0] + c[1]*t + ... + c[k]*t^k with c[k] != 0 (normalized monic);
  // irreducibility over F_p is checked here.
  static FieldPtr extension(uint64_t p, std::vector<uint64_t> modulus, std::string gen = "t");
  // random search for an irreducible modulus of degree k, deterministic in seed
  static FieldPtr extension_auto(uint64_t p, unsigned k, uint64_t seed = 1, std::string gen = "t");

  uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  const std::vector<uint64_t>& modulus() const { return mod_; }
  const std::string& gen_name() const { return gen_; }

  bool same(const Field& o) const { return p_ == p_ && p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_; }

  // p^k, used for exhaustive enumeration and Cantor-Zassenhaus exponents
  uint64_t order() const;

  // scalar arithmetic mod p
  uint64_t sadd(uint64_t a, uint64_t b) const { return (a + b) % p_; }
  uint64_t ssub(uint64_t a, uint64_t b) const { return (a + p_ - b) % p_; }
  uint64_t smul(uint64_t a, uint64_t b) const { return a * b % p_; }
  uint64_t sinv(uint64_t a) const;

private:
  Field(uint64_t p, unsigned k, std::vector<uint64_t> mod, std::string gen)
      : p_(p), k_(k), mod_(std::move(mod)), gen_(std::move(gen)) {}

  uint64_t p_;
  unsigned k_;
  std::vector<uint64_t> mod_;  // size k+1, monic; {0, 1} identity for k == 1
  std::string gen_;
};

bool is_prime_u64(uint64_t n);

// Element of F_{p^k}. k == 1 keeps a bare residue; extensions carry the
// k coordinates. Canonical form: least non-negative residues.
class Fq {
public:
  Fq() = default;  // unbound zero; any arithmetic use is an error
  explicit Fq(FieldPtr f) : f_(std::move(f)) { init_zero(); }
  Fq(FieldPtr f, int64_t n) : f_(std::move(f)) {
    init_zero();
    set_int(n);
  }

  static Fq from_coords(FieldPtr f, std::vector<uint64_t> coords);
  static Fq gen(FieldPtr f);                       // the generator t, k > 1
  static Fq from_index(FieldPtr f, uint64_t idx);  // base-p digits; enumeration
  static Fq random(FieldPtr f, Rng& rng);

  const FieldPtr& field() const { return f_; }
  bool bound() const { return f_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  uint64_t coord(unsigned i) const { return f_->k() == 1 ? (i == 0 ? a_ : 0) : c_[i]; }
  uint64_t residue() const { return a_; }  // k == 1 only
  uint64_t index() const;                  // inverse of from_index

  Fq operator-() const;
  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  Fq inv() const;
  Fq pow(int64_t e) const;
  Fq pow_u(uint64_t e) const;
  Fq frobenius() const;  // a^p
  bool in_prime_field() const;

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }
  // lexicographic on coordinates; total order inside one field
  bool less(const Fq& o) const;

  std::string str() const;  // "3" / "2*t+1"

private:
  void init_zero() {
    if (f_->k() > 1) c_.assign(f_->k(), 0);
  }
  void set_int(int64_t n);
  void require_same(const Fq& o) const;

  FieldPtr f_;
  uint64_t a_ = 0;            // k == 1 value
  std::vector<uint64_t> c_;   // k > 1 coordinates
};

}  // namespace pfol

#endif
