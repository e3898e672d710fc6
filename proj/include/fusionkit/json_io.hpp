#pragma once

// JSON formats for presentations, permutation groups and extension specs.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/cohomology.hpp"
#include "fusionkit/pcgroup.hpp"
#include "fusionkit/perm.hpp"

namespace fusionkit::io {

using Json = nlohmann::json;

/// Reads a whole file as JSON. Throws Io or Parse.
Json read_json_file(const std::string& path);

/// {"generators": [...], "powers": {"g": "word"}, "commutators": {"[gj,gi]": "word"}}
pc::PcPresentation presentation_from_json(const Json& j);
Json presentation_to_json(const pc::PcPresentation& p);

/// {"degree": n, "generators": [[1-based images]], "name": "..."}
perm::PermGroup group_from_json(const Json& j);
Json group_to_json(const perm::PermGroup& g);
perm::PermGroup load_group_file(const std::string& path);

/// {"dim": n, "quotient_generators": [[rows]], "action": [[rows]] (optional,
///  natural action when absent), "cocycle": [[[rows_a], [rows_b], e], ...],
///  "x": e, "v_basis": [e, ...], "g_generators": [[rows], ...]}
/// Matrices are lists of row bitmasks over the quotient's own dimension.
struct ExtensionSpec {
  std::shared_ptr<const mod::MatGroupF2> gamma;
  coh::ExtensionGroup extension;
  mod::Vec x = 0;
  std::vector<mod::Vec> v_basis;
  std::vector<std::uint32_t> g_gens;
};
ExtensionSpec extension_from_json(const Json& j);

}  // namespace fusionkit::io
