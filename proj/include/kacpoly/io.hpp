#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kacpoly/asymptotics.hpp"
#include "kacpoly/distribution.hpp"
#include "kacpoly/param.hpp"
#include "kacpoly/poly.hpp"
#include "kacpoly/quiver.hpp"

namespace kacpoly {

using Json = nlohmann::ordered_json;

/// Quiver document:
///
///   {"vertices": ["1", "2"],
///    "arrows": [{"name": "alpha", "from": "1", "to": "2", "mult": 1}]}
///
/// "mult" defaults to 1; any other key is rejected. Syntax errors carry the
/// line and column of the offending byte.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::filesystem::path& path);
Json quiver_to_json(const Quiver& q);

/// "2,3" in vertex declaration order.
DimVector parse_dim(const Quiver& q, std::string_view text);
/// Comma-separated multiplicities in arrow order; "inf" marks kInfinite.
MultVector parse_mult(const Quiver& q, std::string_view text);
std::vector<std::string> parse_names(std::string_view text);

/// {"valuation": v, "coefficients": [...]} with decimal strings from q^v
/// upward. The zero polynomial is {"valuation": 0, "coefficients": []}.
Json poly_record(const Poly& p);
Poly poly_from_record(const Json& j);

Json affine_to_json(const AffineExponent& e);
Json decomposition_to_json(const Decomposition& dec);
std::string decomposition_text(const Decomposition& dec);

Json integers_to_json(const std::vector<Integer>& v);
std::string integers_text(const std::vector<Integer>& v);

Json valuation_record_json(const ValuationRecord& r);
Json graph_to_json(const CoeffGraph& g);

} // namespace kacpoly
