#pragma once

// JSON and CSV forms of trees, arrays, labelings and reports. Big numbers are
// always written as decimal strings; array components and child slots are 1-based.

#include "hooklab/filtration.hpp"
#include "hooklab/staircase.hpp"
#include "hooklab/verification.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace hooklab {

using Json = nlohmann::ordered_json;

/// Parses text, rethrowing syntax errors as ParseError with the byte offset.
Json parse_json(std::string_view text);

Json to_json(const KAryTree& tree);                    // {"k", "code"}
KAryTree tree_from_json(const Json& json);

Json to_json(const StaircaseArray& array);             // {"k", "C"}
StaircaseArray array_from_json(const Json& json);

Json to_json(const StaircaseLabeledTree& labeled);     // {"k", "code", "labels": {"0": [...], ...}}
StaircaseLabeledTree labeled_tree_from_json(const Json& json);

Json to_json(const VerificationReport& report);
Json to_json(const FiltrationReport& report);
Json to_json(const ShapeCensus& census);

std::string csv_header(const VerificationReport&);
std::string csv_row(const VerificationReport& report);  // formula,n,k,terms,verdict

}  // namespace hooklab
