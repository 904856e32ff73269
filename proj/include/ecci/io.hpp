#ifndef ECCI_IO_HPP
#define ECCI_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "ecci/digraph.hpp"
#include "ecci/extremal.hpp"
#include "ecci/indices.hpp"
#include "ecci/metrics.hpp"

namespace ecci {

inline constexpr const char* kSchemaVersion = "1";

/// Format: optional '#' comment lines, header "n m", then m lines "u v".
Digraph parse_edge_list(const std::string& text);

/// Canonical text form: header then arcs sorted by (u, v). parse∘serialize = id.
std::string serialize_edge_list(const Digraph& d);

nlohmann::json xi_json(std::uint64_t xi_doubled);
nlohmann::json to_json(const EccProfile& p);
nlohmann::json to_json(const IndexReport& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const ExtremalReport& r);

/// {schema_version, kind, payload} envelope. Keys serialize sorted.
nlohmann::json wrap_report(const std::string& kind, nlohmann::json payload);

}  // namespace ecci

#endif
