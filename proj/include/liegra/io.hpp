#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "liegra/graph.hpp"

namespace liegra {

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

/// Graph as written in text: 0-based edges (repeats kept) plus optional decoration.
struct GraphText {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> decoration;

  DirectedGraph graph() const;
  MultiGraph multigraph() const;
};

/// `n=<INT>[;e=<i>><j>,...][;d=<sym>,...]` with 1-based indices.
GraphText parse_graph(const std::string& text);

std::string format_graph(const DirectedGraph& g, const std::vector<std::string>& decoration = {});
std::string format_graph(const MultiGraph& g);

nlohmann::json to_json(const DirectedGraph& g, const std::vector<std::string>& decoration = {});
nlohmann::json to_json(const MultiGraph& g);
GraphText graph_from_json(const nlohmann::json& j);

/// DOT with one `rank=same` group per level.
std::string to_dot(const LeveledGraph& lg, const std::vector<std::string>& decoration = {});
std::string to_dot(const DirectedGraph& g, const std::vector<std::string>& decoration = {});

}  // namespace liegra
