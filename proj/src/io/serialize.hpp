#ifndef PFOL_IO_SERIALIZE_HPP
#define PFOL_IO_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "factor/factor.hpp"
#include "geom/plane.hpp"
#include "geom/ruled.hpp"

namespace pfol {

inline constexpr const char* kSchema = "pfol/1";

// header fragment "p=5" / "p=3 ext=2 mod=t^2+1"
std::string field_header(const FieldPtr& f);

// input-format text that reparses to an equal object
std::string object_text(const VectorField& v);
std::string object_text(const AffineForm& w);
std::string object_text(const PlaneForm& w);
std::string object_text(const SigmaForm& s);

nlohmann::json divisor_json(const Divisor& d);
nlohmann::json singularity_json(const SingularityReport& r);
nlohmann::json certificate_json(const Certificate& c);

// top-level result / error documents
nlohmann::json result_doc(const std::string& command, nlohmann::json result);
nlohmann::json error_doc(const Error& e);

}  // namespace pfol

#endif
