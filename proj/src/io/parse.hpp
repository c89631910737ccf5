#ifndef PFOL_IO_PARSE_HPP
#define PFOL_IO_PARSE_HPP

#include <array>
#include <string>
#include <variant>

#include "poly/mpoly.hpp"

namespace pfol {

class VectorField;
class AffineForm;
class PlaneForm;
class SigmaForm;

// polynomial expression: integer literals, declared variables, the field
// generator name, + - * ^ and parentheses
MPoly parse_poly(const std::string& text, FieldPtr f, VarsPtr v);

// integer-coefficient expression over the given variables (for reduction
// pipelines); coefficients as int64
struct ZTerm {
  Mono m;
  long long c;
};
std::vector<ZTerm> parse_zpoly(const std::string& text, VarsPtr v);
// "A dx + B dy + C dz" with integer coefficients
std::array<std::vector<ZTerm>, 3> parse_zform_payload(const std::string& text, VarsPtr v);

struct ParsedObject;  // defined in parse.cpp against the geometry headers

// Typed top-level input, e.g.
//   poly vars=x,y p=5: x^2+y
//   field A2 p=5 ext=2 mod=t^2+2: x d/dx + t*y d/dy
//   form A2 p=5: y dx - x dy
//   form P2 p=5: y*z^2 dx - z*(4*y*z+2*x*z+2*y^2) dy + (x*y*z+4*y^2*z+2*y^3) dz
//   form P1xP1 p=5 ext=2 mod=t^2+2: ... dx0 + ... dx1 + ... dy0 + ... dy1
//   form Sigma d=1 p=5: ...
struct Input {
  enum Kind { Poly, Field2, Form2, FormP2, FormSigma } kind;
  FieldPtr field;
  int sigma_d = 0;
  // exactly one of these is populated, matching kind
  std::shared_ptr<MPoly> poly;
  std::shared_ptr<VectorField> vfield;
  std::shared_ptr<AffineForm> aform;
  std::shared_ptr<PlaneForm> pform;
  std::shared_ptr<SigmaForm> sform;
};

Input parse_input(const std::string& text);

}  // namespace pfol

#endif
