#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dtopo/graph.hpp"
#include "json.hpp"

namespace dtopo {

/// Malformed serialized input. The message carries the input position when known.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// {"vertices":[...],"edges":[[u,v],...]}, everything sorted.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Compact canonical text of graph_to_json. Equal graphs give equal bytes.
std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);

/// Undirected DOT: one line per vertex, then one `--` line per edge.
std::string to_dot(const Graph& g);
/// Reads the subset of DOT produced by to_dot.
Graph parse_dot(std::string_view text);

/// Lowercase hex SHA-256 of serialize_graph(g).
std::string digest(const Graph& g);

/// Parses JSON text, mapping parse errors to FormatError with the byte offset.
nlohmann::json parse_json(std::string_view text);

}  // namespace dtopo
