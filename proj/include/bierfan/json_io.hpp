#pragma once

#include <json.hpp>

#include "bierfan/bier.hpp"
#include "bierfan/classify.hpp"
#include "bierfan/fan.hpp"
#include "bierfan/toric.hpp"

namespace bierfan {

using nlohmann::json;

// Complexes serialize as {"facets": [[labels]...], "m": m} with 1-based
// labels and facets sorted lexicographically; golden files are byte-exact
// against this ordering. Bier complexes add "primed_offset" (= m) and use
// ground size 2m.
json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const json& j);

json bier_to_json(const BierComplex& B);
BierComplex bier_from_json(const json& j);

// {"m": m, "max_cones": [{"I": .., "J": .., "generators": [[..]..]}, ..]}
// with cones sorted by tag.
json fan_to_json(const Fan& F);

json toric_report_to_json(const ToricReport& r);

json completeness_to_json(const CompletenessReport& r, bool include_witness);

json classification_to_json(const ClassificationReport& r);

// Canonical dump used by all outputs: compact, sorted keys, one trailing
// newline. Identical inputs serialize to identical bytes.
std::string dump_canonical(const json& j);

// Comma-separated rationals, each "a" or "a/b" with an optional sign.
RationalPoint parse_point(const std::string& text);

}  // namespace bierfan
