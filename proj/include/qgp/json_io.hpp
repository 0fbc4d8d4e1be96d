#ifndef QGP_JSON_IO_HPP
#define QGP_JSON_IO_HPP

#include <json.hpp>

#include "qgp/model.hpp"
#include "qgp/rep.hpp"

namespace qgp {

// Canonical JSON encodings. Emission uses a fixed key order and lowercase
// keys so that emit(parse(x)) returns canonical files byte for byte.
using Json = nlohmann::ordered_json;

Json ring_to_json(const RingSpec& r);
RingSpec ring_from_json(const Json& j);

Json elem_to_json(const RingSpec& r, RingElem e);
/// Enforces the canonical range; out-of-range values are parse errors.
RingElem elem_from_json(const RingSpec& r, const Json& j);

Json matrix_to_json(const RingSpec& r, const Matrix& m);
Matrix matrix_from_json(const RingSpec& r, const Json& j, int expected_cols);

Json module_to_json(const FPModule& m);
FPModule module_from_json(const RingSpec& r, const Json& j);

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json rep_to_json(const Rep& m);
Rep rep_from_json(const Json& j);

Json rep_map_to_json(const RepMap& f);
/// Accepts inline reps or file paths (resolved against base_dir) for the
/// source and target fields.
RepMap rep_map_from_json(const Json& j, const std::string& base_dir);

Json object_flags_to_json(const ObjectFlags& f);
Json morphism_flags_to_json(const MorphismFlags& f);
Json invariants_to_json(const RingSpec& r, const std::vector<RingElem>& inv);

Json load_json_file(const std::string& path);

} // namespace qgp

#endif
