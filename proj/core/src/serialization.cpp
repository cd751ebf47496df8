#include "qf/serialization.hpp"

#include <json.hpp>

#include "qf/errors.hpp"

namespace qf {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SyntaxError(0, "malformed JSON");
  return j;
}

json coeffs_to_json(const std::map<std::string, LaurentPoly>& coeffs) {
  json out = json::object();
  for (const auto& [name, p] : coeffs) out[name] = p.str();
  return out;
}

std::map<std::string, LaurentPoly> coeffs_from_json(const json& j) {
  if (!j.is_object()) throw SyntaxError(0, "\"coeffs\" must be an object");
  std::map<std::string, LaurentPoly> out;
  for (const auto& [name, v] : j.items()) {
    if (!v.is_string()) throw SyntaxError(0, "coefficient of '" + name + "' must be a string");
    out.emplace(name, LaurentPoly::parse(v.get<std::string>()));
  }
  return out;
}

void check_ring(const json& j, const ContextPtr& ctx) {
  if (!j.contains("ring")) return;  // optional; the context already knows
  if (!j["ring"].is_string()) throw SyntaxError(0, "\"ring\" must be a string");
  RingSpec declared = RingSpec::parse(j["ring"].get<std::string>());
  if (declared != ctx->ring())
    raise(Errc::ContextMismatch, "serialized ring '" + declared.str() +
                                     "' does not match the context ring '" +
                                     ctx->ring().str() + "'");
}

}  // namespace

std::string element_to_json(const FreeElement& p) {
  json j;
  j["gen"] = p.gen();
  j["coeffs"] = coeffs_to_json(p.coeffs());
  j["ring"] = p.context()->ring().str();
  return j.dump();
}

FreeElement element_from_json(const std::string& text, const ContextPtr& ctx) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("gen") || !j["gen"].is_string())
    throw SyntaxError(0, "element JSON needs a \"gen\" string");
  check_ring(j, ctx);
  std::map<std::string, LaurentPoly> coeffs;
  if (j.contains("coeffs")) coeffs = coeffs_from_json(j["coeffs"]);
  return FreeElement(ctx, j["gen"].get<std::string>(), std::move(coeffs));
}

std::string vector_to_json(const Displacement& a) {
  json j;
  j["coeffs"] = coeffs_to_json(a.coords());
  j["ring"] = a.context()->ring().str();
  return j.dump();
}

Displacement vector_from_json(const std::string& text, const ContextPtr& ctx) {
  json j = parse_json(text);
  if (!j.is_object()) throw SyntaxError(0, "vector JSON must be an object");
  check_ring(j, ctx);
  std::map<std::string, LaurentPoly> coeffs;
  if (j.contains("coeffs")) coeffs = coeffs_from_json(j["coeffs"]);
  return Displacement(ctx, std::move(coeffs));
}

std::string table_to_json(const FiniteBinaryTable& Q) {
  json rows = json::array();
  for (int x = 0; x < Q.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < Q.size(); ++y) row.push_back(Q.at(x, y));
    rows.push_back(std::move(row));
  }
  json j;
  j["n"] = Q.size();
  j["table"] = std::move(rows);
  return j.dump();
}

FiniteBinaryTable table_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("table"))
    throw SyntaxError(0, "table JSON needs \"n\" and \"table\"");
  int n = j["n"].get<int>();
  std::vector<int> entries;
  if (!j["table"].is_array()) throw SyntaxError(0, "\"table\" must be an array of rows");
  for (const auto& row : j["table"]) {
    if (!row.is_array()) throw SyntaxError(0, "table rows must be arrays");
    for (const auto& v : row) entries.push_back(v.get<int>());
  }
  return FiniteBinaryTable(n, std::move(entries));
}

}  // namespace qf
