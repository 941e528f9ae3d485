#include "liegra/io.hpp"

#include <cctype>
#include <sstream>

namespace liegra {

namespace {

class Cursor {
public:
  explicit Cursor(const std::string& s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect(const std::string& word) {
    for (char c : word) expect(c);
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  int integer() {
    const std::size_t start = pos_;
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return static_cast<int>(v);
  }

  std::string symbol() {
    const std::size_t start = pos_;
    while (!done() && peek() != ',' && peek() != ';') ++pos_;
    if (pos_ == start) fail("expected symbol");
    return s_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string edge_list(const std::vector<Edge>& edges) {
  std::string out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k != 0) out += ',';
    out += std::to_string(edges[k].src + 1) + ">" + std::to_string(edges[k].dst + 1);
  }
  return out;
}

std::string with_decoration(std::string s, const std::vector<std::string>& decoration) {
  if (decoration.empty()) return s;
  s += ";d=";
  for (std::size_t k = 0; k < decoration.size(); ++k) {
    if (k != 0) s += ',';
    s += decoration[k];
  }
  return s;
}

}  // namespace

DirectedGraph GraphText::graph() const {
  DirectedGraph g(n);
  for (const Edge& e : edges) g.add_edge(e.src, e.dst);
  return g;
}

MultiGraph GraphText::multigraph() const {
  MultiGraph g(n);
  for (const Edge& e : edges) g.add_edge(e.src, e.dst);
  return g;
}

GraphText parse_graph(const std::string& text) {
  Cursor c(text);
  GraphText out;
  c.expect("n=");
  const std::size_t n_pos = c.pos();
  out.n = c.integer();
  if (out.n < 1 || out.n > kMaxVertices) {
    throw ParseError("vertex count must be in 1.." + std::to_string(kMaxVertices), n_pos);
  }
  bool seen_e = false;
  bool seen_d = false;
  while (c.accept(';')) {
    if (c.accept('e')) {
      if (seen_e || seen_d) c.fail("unexpected edge section");
      seen_e = true;
      c.expect('=');
      do {
        const std::size_t at = c.pos();
        const int i = c.integer();
        c.expect('>');
        const int j = c.integer();
        if (i < 1 || i > out.n || j < 1 || j > out.n) throw ParseError("vertex index out of range", at);
        out.edges.push_back({i - 1, j - 1});
      } while (c.accept(','));
    } else if (c.accept('d')) {
      if (seen_d) c.fail("duplicate decoration section");
      seen_d = true;
      c.expect('=');
      do {
        out.decoration.push_back(c.symbol());
      } while (c.accept(','));
      if (static_cast<int>(out.decoration.size()) != out.n) c.fail("decoration count does not match n");
    } else {
      c.fail("expected 'e=' or 'd='");
    }
  }
  if (!c.done()) c.fail("trailing characters");
  return out;
}

std::string format_graph(const DirectedGraph& g, const std::vector<std::string>& decoration) {
  std::string s = "n=" + std::to_string(g.size());
  const auto edges = g.edges();
  if (!edges.empty()) s += ";e=" + edge_list(edges);
  return with_decoration(std::move(s), decoration);
}

std::string format_graph(const MultiGraph& g) {
  std::string s = "n=" + std::to_string(g.size());
  const auto edges = g.edges();
  if (!edges.empty()) s += ";e=" + edge_list(edges);
  return s;
}

nlohmann::json to_json(const DirectedGraph& g, const std::vector<std::string>& decoration) {
  nlohmann::json j;
  j["n"] = g.size();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.src + 1, e.dst + 1});
  if (!decoration.empty()) j["decoration"] = decoration;
  return j;
}

nlohmann::json to_json(const MultiGraph& g) {
  nlohmann::json j;
  j["n"] = g.size();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.src + 1, e.dst + 1});
  return j;
}

GraphText graph_from_json(const nlohmann::json& j) {
  GraphText out;
  out.n = j.at("n").get<int>();
  if (out.n < 1 || out.n > kMaxVertices) throw Error("json graph: vertex count out of range");
  for (const auto& e : j.at("edges")) {
    const int i = e.at(0).get<int>();
    const int k = e.at(1).get<int>();
    if (i < 1 || i > out.n || k < 1 || k > out.n) throw Error("json graph: vertex index out of range");
    out.edges.push_back({i - 1, k - 1});
  }
  if (j.contains("decoration")) out.decoration = j["decoration"].get<std::vector<std::string>>();
  return out;
}

std::string to_dot(const LeveledGraph& lg, const std::vector<std::string>& decoration) {
  std::ostringstream os;
  os << "digraph G {\n  rankdir=TB;\n";
  for (int v = 0; v < lg.graph.size(); ++v) {
    os << "  v" << v + 1 << " [label=\"" << (decoration.empty() ? std::to_string(v + 1) : decoration[v])
       << "\"];\n";
  }
  for (int l = lg.k; l >= 1; --l) {
    os << "  { rank=same;";
    for (int v = 0; v < lg.graph.size(); ++v) {
      if (lg.level[v] == l) os << " v" << v + 1 << ";";
    }
    os << " }\n";
  }
  for (const Edge& e : lg.graph.edges()) os << "  v" << e.src + 1 << " -> v" << e.dst + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const DirectedGraph& g, const std::vector<std::string>& decoration) {
  return to_dot(natural_leveling(g), decoration);
}

}  // namespace liegra
