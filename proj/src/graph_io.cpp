#include "dtopo/graph_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace dtopo {

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw FormatError("graph JSON must be an object with a \"vertices\" array");
  const auto& vs = j.at("vertices");
  if (!vs.is_array()) throw FormatError("\"vertices\" must be an array");
  std::vector<VertexLabel> labels;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) throw FormatError("vertices[" + std::to_string(i) + "] is not a string");
    labels.push_back(vs[i].get<std::string>());
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const auto& es = j.at("edges");
    if (!es.is_array()) throw FormatError("\"edges\" must be an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw FormatError("edges[" + std::to_string(i) + "] must be a pair of strings");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  try {
    return Graph(std::move(labels), edges);
  } catch (const GraphError& e) {
    throw FormatError(std::string("invalid graph: ") + e.what());
  }
}

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Graph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class DotReader {
 public:
  explicit DotReader(std::string_view text) : text_(text) {}

  Graph read() {
    expect_word("graph");
    skip_space();
    if (peek() != '{') read_id();  // optional graph name
    expect('{');
    std::vector<VertexLabel> labels;
    std::vector<Edge> edges;
    while (true) {
      skip_space();
      if (peek() == '}') {
        ++pos_;
        break;
      }
      std::string a = read_id();
      skip_space();
      if (text_.substr(pos_, 2) == "--") {
        pos_ += 2;
        std::string b = read_id();
        edges.emplace_back(std::move(a), std::move(b));
      } else {
        labels.push_back(std::move(a));
      }
      skip_space();
      if (peek() == ';') ++pos_;
    }
    skip_space();
    if (pos_ != text_.size()) fail("trailing content after closing brace");
    // Edge endpoints imply vertices even when not listed on their own line.
    for (const auto& [a, b] : edges) {
      labels.push_back(a);
      labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    try {
      return Graph(std::move(labels), edges);
    } catch (const GraphError& e) {
      fail(e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError("DOT parse error at byte " + std::to_string(pos_) + ": " + msg);
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) fail("expected \"" + std::string(w) + "\"");
    pos_ += w.size();
  }
  std::string read_id() {
    skip_space();
    std::string out;
    if (peek() == '"') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated string");
        char c = text_[pos_++];
        if (c == '"') break;
        if (c == '\\') {
          if (pos_ >= text_.size()) fail("unterminated escape");
          c = text_[pos_++];
        }
        out += c;
      }
      return out;
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      out += text_[pos_++];
    if (out.empty()) fail("expected identifier");
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& v : g.vertices()) os << "  " << quote(v) << ";\n";
  for (const auto& [a, b] : g.edges()) os << "  " << quote(a) << " -- " << quote(b) << ";\n";
  os << "}\n";
  return os.str();
}

Graph parse_dot(std::string_view text) { return DotReader(text).read(); }

std::string digest(const Graph& g) {
  const std::string bytes = serialize_graph(g);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

}  // namespace dtopo
