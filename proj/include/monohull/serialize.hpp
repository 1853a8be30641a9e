#ifndef MONOHULL_SERIALIZE_HPP
#define MONOHULL_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "monohull/hull.hpp"
#include "monohull/optimize.hpp"
#include "monohull/volume.hpp"

namespace monohull {

// All structured output goes through ordered documents so that
// parse -> dump round-trips byte-identically.
using Json = nlohmann::ordered_json;

// Line-oriented system format: one row per line,
//   family[index] coef_y coef_x1 ... coef_xn rhs
// with rationals as "p/q" (index suffix only for per-variable families).
std::string system_to_text(const InequalitySystem& sys);

// Terminal-friendly rendering, e.g. "-y + 1/2 x2 + 6 x3 >= 1".
std::string inequality_to_pretty(const LinearInequality& row);
std::string system_to_pretty(const InequalitySystem& sys);

Json instance_to_json(const Instance& inst);
Json system_to_json(const InequalitySystem& sys);
Json vertex_to_json(const Vertex& v);
Json vertices_to_json(const std::vector<Vertex>& verts);
Json classification_to_json(const IndexSets& sets);
Json candidates_to_json(const CandidateValues& cand);
Json primal_result_to_json(const PrimalResult& result);
Json certificate_to_json(const DualCertificate& cert);
Json verification_to_json(const VerificationReport& report);
Json decomposition_to_json(const VolumeDecomposition& d);
Json volume_report_to_json(const VolumeReport& report);

// Canonical dump: two-space indent plus trailing newline.
std::string dump_document(const Json& doc);

}  // namespace monohull

#endif  // MONOHULL_SERIALIZE_HPP
