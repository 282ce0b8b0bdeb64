#include "hooklab/json_io.hpp"

#include "hooklab/errors.hpp"

namespace hooklab {

namespace {

const Json& field(const Json& json, const char* name) {
  if (!json.is_object()) throw DomainError("expected a JSON object");
  const auto it = json.find(name);
  if (it == json.end()) throw DomainError(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& json, const char* name) {
  const auto& value = field(json, name);
  if (!value.is_number_integer()) throw DomainError(std::string("field \"") + name + "\" must be an integer");
  return value.get<int>();
}

std::vector<int> int_vector(const Json& json, const std::string& what) {
  if (!json.is_array()) throw DomainError(what + " must be an array");
  std::vector<int> out;
  out.reserve(json.size());
  for (const auto& v : json) {
    if (!v.is_number_integer()) throw DomainError(what + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Json rational_json(const Rational& value) {
  return Json{{"numerator", boost::multiprecision::numerator(value).str()},
              {"denominator", boost::multiprecision::denominator(value).str()}};
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

Json to_json(const KAryTree& tree) { return Json{{"k", tree.arity()}, {"code", encode(tree)}}; }

KAryTree tree_from_json(const Json& json) {
  const auto& code = field(json, "code");
  if (!code.is_string()) throw DomainError("field \"code\" must be a string");
  return decode(code.get<std::string>(), int_field(json, "k"));
}

Json to_json(const StaircaseArray& array) {
  Json rows = Json::array();
  for (const auto& row : array.rows()) rows.push_back(row);
  return Json{{"k", array.k()}, {"C", std::move(rows)}};
}

StaircaseArray array_from_json(const Json& json) {
  const int k = int_field(json, "k");
  const auto& c = field(json, "C");
  if (!c.is_array()) throw DomainError("field \"C\" must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < c.size(); ++i) rows.push_back(int_vector(c[i], "C_" + std::to_string(i)));
  return StaircaseArray::from_rows(k, rows);
}

Json to_json(const StaircaseLabeledTree& labeled) {
  Json labels = Json::object();
  for (std::size_t v = 0; v < labeled.labels.size(); ++v) labels[std::to_string(v)] = labeled.labels[v];
  return Json{{"k", labeled.tree.arity()}, {"code", encode(labeled.tree)}, {"labels", std::move(labels)}};
}

StaircaseLabeledTree labeled_tree_from_json(const Json& json) {
  StaircaseLabeledTree out{tree_from_json(json), {}};
  const auto& labels = field(json, "labels");
  if (!labels.is_object()) throw DomainError("field \"labels\" must map preorder ids to vectors");
  if (labels.size() != out.tree.size())
    throw DomainError("tree has " + std::to_string(out.tree.size()) + " vertices but " + std::to_string(labels.size()) +
                      " labels");
  out.labels.resize(out.tree.size());
  for (std::size_t v = 0; v < out.tree.size(); ++v) {
    const auto key = std::to_string(v);
    const auto it = labels.find(key);
    if (it == labels.end()) throw DomainError("missing label for vertex " + key);
    out.labels[v] = int_vector(*it, "label of vertex " + key);
  }
  return out;
}

Json to_json(const VerificationReport& report) {
  return Json{{"formula", report.formula},
              {"n", report.n},
              {"k", report.k},
              {"computed", rational_json(report.computed)},
              {"expected", rational_json(report.expected)},
              {"terms", report.terms.str()},
              {"verdict", report.verdict}};
}

Json to_json(const FiltrationReport& report) {
  Json sizes = Json::array();
  for (const auto& s : report.level_sizes) sizes.push_back(s.str());
  return Json{{"n", report.n},
              {"level_sizes", std::move(sizes)},
              {"terminal_complete_count", report.terminal_complete_count.str()},
              {"halving_ok", report.halving_ok},
              {"terminal_matches_complete", report.terminal_matches_complete},
              {"terminal_exact", report.terminal_exact},
              {"parity_agrees", report.parity_agrees}};
}

Json to_json(const ShapeCensus& census) {
  Json shapes = Json::array();
  for (const auto& [code, predicted] : census.predicted) {
    const auto it = census.observed.find(code);
    shapes.push_back(Json{{"code", code},
                          {"count", it == census.observed.end() ? std::string("0") : it->second.str()},
                          {"predicted", predicted.str()}});
  }
  for (const auto& [code, count] : census.observed)
    if (!census.predicted.count(code)) shapes.push_back(Json{{"code", code}, {"count", count.str()}, {"predicted", "0"}});
  return Json{{"n", census.n},
              {"k", census.k},
              {"shapes", std::move(shapes)},
              {"total", census.total.str()},
              {"expected_total", staircase_count(census.n, census.k).str()},
              {"shapes_match", census.shapes_match()},
              {"total_matches", census.total_matches()}};
}

std::string csv_header(const VerificationReport&) { return "formula,n,k,terms,verdict"; }

std::string csv_row(const VerificationReport& report) {
  return report.formula + "," + std::to_string(report.n) + "," + std::to_string(report.k) + "," + report.terms.str() +
         "," + (report.verdict ? "true" : "false");
}

}  // namespace hooklab
