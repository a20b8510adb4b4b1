#pragma once

// JSON forms shared by the search hit files and `qfe --json`.

#include <json.hpp>

#include "qfe/contiguous.hpp"
#include "qfe/euler.hpp"
#include "qfe/solver.hpp"

namespace qfe {

using Json = nlohmann::ordered_json;

Json to_json(const SeriesParams& p);
SeriesParams params_from_json(const Json& j);

Json to_json(const IndexBox& b);
IndexBox box_from_json(const Json& j);

Json keep_to_json(const std::vector<IndexPair>& keep);
std::vector<IndexPair> keep_from_json(const Json& j);

/// Both forms: relations as text, solved equations as lhs/rhs with
/// numerator and denominator strings (plus text for reading).
Json to_json(const ExtractedSystem& s);
ExtractedSystem system_from_json(const Json& j);

Json to_json(const VerifyReport& r);
Json to_json(const UniquenessReport& r);
/// Carries the full exponent list, so the reverse is exact.
Json to_json(const ProductForm& f);
ProductForm product_form_from_json(const Json& j);
Json to_json(const ProductHit& h);
ProductHit product_hit_from_json(const Json& j);

/// "(a,b);(c,d)" as in --keep.
std::vector<IndexPair> parse_keep(std::string_view text);
std::string keep_to_string(const std::vector<IndexPair>& keep);

}  // namespace qfe
