#pragma once

#include <string>

#include "qf/finite_table.hpp"
#include "qf/free_quandle.hpp"

namespace qf {

/// {"gen": ..., "coeffs": {symbol: poly string}, "ring": "laurent" |
/// "mod <poly>" | "zmod <n>"}. The generator set travels separately (order
/// matters and the JSON object cannot carry it).
std::string element_to_json(const FreeElement& p);
FreeElement element_from_json(const std::string& text, const ContextPtr& ctx);

/// Module vectors use the same coeffs encoding without the "gen" field.
std::string vector_to_json(const Displacement& a);
Displacement vector_from_json(const std::string& text, const ContextPtr& ctx);

/// {"n": ..., "table": [[...], ...]}, mirroring the text format.
std::string table_to_json(const FiniteBinaryTable& Q);
FiniteBinaryTable table_from_json(const std::string& text);

}  // namespace qf
