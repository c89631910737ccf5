#ifndef PFOL_CENSUS_CENSUS_HPP
#define PFOL_CENSUS_CENSUS_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "geom/plane.hpp"
#include "geom/ruled.hpp"

namespace pfol {

enum class Surface { A2, P2, P1xP1, Sigma };

Surface surface_from_string(const std::string& s);
std::string surface_to_string(Surface s);

struct CensusConfig {
  uint64_t p = 5;
  unsigned k = 1;
  Surface surface = Surface::P2;
  int degree = 1;  // foliation degree on the plane; coefficient bound on A2
  int d = 0;       // ruling parameter
  long d1 = 0, d2 = 0;
  long samples = 1;
  uint64_t seed = 0;
  int threads = 0;                // 0: PFOL_THREADS, then hardware
  bool allow_any_degree = false;  // lift the plane degree gate
  bool certify_prime = true;      // full factorization for the prime flag
};

struct CensusRecord {
  long id = 0;
  std::string input;           // reparsable object text
  std::string classification;  // p_closed | reduced | non_reduced | has_p_factor
  long delta_degree = -1;
  std::optional<std::pair<long, long>> delta_class;
  std::optional<bool> prime_flag;
  long rejections = 0;
  double ms = 0;
};

struct CensusSummary {
  long p_closed = 0, reduced = 0, non_reduced = 0, has_p_factor = 0;
  long total_rejections = 0;
  double fraction_reduced = 0, ci_lo = 0, ci_hi = 0;
  std::string warning;
};

struct CensusResult {
  CensusConfig config;
  std::vector<CensusRecord> records;
  CensusSummary summary;
};

CensusResult run_census(const CensusConfig& cfg);

// classify one parsed object exactly as the census worker does; lets any
// record be reproduced from its stored input text
CensusRecord reclassify(const std::string& input_text, int sigma_d_hint, bool certify_prime,
                        uint64_t seed);

nlohmann::json census_json(const CensusResult& r, bool include_timing);
std::string census_csv(const CensusResult& r);

// random draws from the declared coefficient spaces (shared with tests)
MPoly random_poly_bounded(FieldPtr F, VarsPtr V, long maxdeg, Rng& rng);
MPoly random_homogeneous(FieldPtr F, VarsPtr V, long deg, Rng& rng);
MPoly random_bihomogeneous(FieldPtr F, VarsPtr V, int d, long e1, long e2, Rng& rng);
// rejection-sampled valid objects; rejection count accumulated
VectorField sample_affine_field(FieldPtr F, VarsPtr V, long maxdeg, Rng& rng, long* rejections);
PlaneForm sample_plane_form(FieldPtr F, VarsPtr V, int degree, Rng& rng, long* rejections);
SigmaForm sample_sigma_form(FieldPtr F, VarsPtr V, int d, long d1, long d2, Rng& rng,
                            long* rejections);

}  // namespace pfol

#endif
