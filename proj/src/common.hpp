#ifndef PFOL_COMMON_HPP
#define PFOL_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfol {

// Error taxonomy. The numeric class (validation vs precondition) drives the
// C API status codes and the CLI exit codes.
enum class Err {
  // validation-class
  NotPrime,
  SpecMismatch,
  UnknownVariable,
  ValidationError,
  SyntaxError,
  ConfigError,
  // precondition-class
  DivisionByZero,
  NotDivisible,
  ZeroPolynomial,
  RecombinationOverflow,
  PClosed,
  CharDividesDegree,
  RadialField,
  ExponentDividesP,
  WrongSurface,
  CenterNotPReduced,
  CenterNotOnCurves,
  UnsupportedCenter,
  BadReduction,
  FieldTooLarge,
  // everything else
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

  bool is_validation() const {
    switch (code_) {
      case Err::NotPrime:
      case Err::SpecMismatch:
      case Err::UnknownVariable:
      case Err::ValidationError:
      case Err::SyntaxError:
      case Err::ConfigError:
        return true;
      default:
        return false;
    }
  }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

const char* err_name(Err code);

// Counter-based splittable RNG: every (seed, stream) pair yields an
// independent deterministic stream, so parallel census workers reproduce
// bit-exactly regardless of scheduling.
class Rng {
public:
  explicit Rng(uint64_t seed) : s_(seed + 0x9e3779b97f4a7c15ULL) {}
  Rng(uint64_t seed, uint64_t stream) : Rng(mix(seed) ^ mix(~stream * 0xbf58476d1ce4e5b9ULL)) {}

  uint64_t next() {
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n) without modulo bias
  uint64_t below(uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
    return z ^ (z >> 33);
  }
  uint64_t s_;
};

}  // namespace pfol

#endif
