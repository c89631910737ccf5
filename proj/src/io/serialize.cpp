#include "io/serialize.hpp"

#include <sstream>

namespace pfol {

std::string field_header(const FieldPtr& f) {
  std::ostringstream os;
  os << "p=" << f->p();
  if (f->k() > 1) {
    os << " ext=" << f->k() << " mod=";
    const auto& m = f->modulus();
    bool first = true;
    for (size_t i = m.size(); i-- > 0;) {
      if (!m[i]) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) {
        os << m[i];
      } else {
        if (m[i] != 1) os << m[i] << "*";
        os << f->gen_name();
        if (i > 1) os << "^" << i;
      }
    }
  }
  return os.str();
}

namespace {

std::string wrap(const MPoly& f) {
  std::string s = f.str();
  if (f.nterms() > 1 || s.find('+') != std::string::npos) return "(" + s + ")";
  return s;
}

}  // namespace

std::string object_text(const VectorField& v) {
  std::ostringstream os;
  os << "field A2 " << field_header(v.field()) << ": " << wrap(v.a()) << " d/dx + " << wrap(v.b())
     << " d/dy";
  return os.str();
}

std::string object_text(const AffineForm& w) {
  std::ostringstream os;
  os << "form A2 " << field_header(w.field()) << ": " << wrap(w.cdx()) << " dx + " << wrap(w.cdy())
     << " dy";
  return os.str();
}

std::string object_text(const PlaneForm& w) {
  std::ostringstream os;
  os << "form P2 " << field_header(w.field()) << ": " << wrap(w.A()) << " dx + " << wrap(w.B())
     << " dy + " << wrap(w.C()) << " dz";
  return os.str();
}

std::string object_text(const SigmaForm& s) {
  std::ostringstream os;
  if (s.d() == 0)
    os << "form P1xP1 " << field_header(s.field());
  else
    os << "form Sigma d=" << s.d() << " " << field_header(s.field());
  os << ": " << wrap(s.A0()) << " dx0 + " << wrap(s.A1()) << " dx1 + " << wrap(s.B0()) << " dy0 + "
     << wrap(s.B1()) << " dy1";
  return os.str();
}

nlohmann::json divisor_json(const Divisor& d) {
  nlohmann::json comps = nlohmann::json::array();
  for (auto& c : d.comps) {
    comps.push_back({{"poly", c.poly.str()}, {"mult", c.mult}, {"irreducible", c.irreducible}});
  }
  return {{"components", comps}, {"unit", d.unit.bound() ? d.unit.str() : "1"}};
}

nlohmann::json singularity_json(const SingularityReport& r) {
  nlohmann::json j;
  switch (r.kind) {
    case SingularityReport::Smooth: j["kind"] = "smooth"; break;
    case SingularityReport::Degenerate: j["kind"] = "degenerate"; break;
    case SingularityReport::NonDegenerate: j["kind"] = "non_degenerate"; break;
  }
  if (r.alpha) {
    j["eigenvalue_ratio"] = r.alpha->str();
    j["eigenvalue_field"] = field_header(r.alpha->field());
  }
  j["p_reduced"] = r.p_reduced;
  return j;
}

nlohmann::json certificate_json(const Certificate& c) {
  nlohmann::json j;
  j["p"] = c.p;
  j["degree"] = c.degree;
  j["valid_reduction"] = c.valid_reduction;
  j["p_closed"] = c.p_closed;
  if (c.delta) {
    j["delta"] = divisor_json(*c.delta);
    j["degree_check"] = c.degree_check;
  }
  j["delta_irreducible"] = c.delta_irreducible;
  j["irreducible_over"] = c.irreducible_over;
  j["nondicritical_asserted"] = c.nondicritical_asserted;
  j["conclusion"] = c.conclusion;
  return j;
}

nlohmann::json result_doc(const std::string& command, nlohmann::json result) {
  return {{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
}

nlohmann::json error_doc(const Error& e) {
  return {{"schema", kSchema}, {"error", {{"code", err_name(e.code())}, {"message", e.what()}}}};
}

}  // namespace pfol
