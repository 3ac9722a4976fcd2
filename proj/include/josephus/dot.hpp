#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "josephus/dynamics.hpp"
#include "josephus/error.hpp"

namespace josephus {

using DotAttrs = std::map<std::string, std::string>;

struct DotNode {
  std::string id;
  DotAttrs attrs;
};

struct DotEdge {
  std::string from;
  std::string to;
  DotAttrs attrs;

  std::string style() const {
    auto it = attrs.find("style");
    return it == attrs.end() ? "solid" : it->second;
  }
};

struct DotCluster {
  std::string name;
  DotAttrs attrs;
  std::vector<DotNode> nodes;
};

// The subset of Graphviz DOT this project reads and writes: one digraph with
// optional subgraph clusters, node and edge statements, attribute lists.
struct DotGraph {
  std::string name;
  DotAttrs attrs;
  std::vector<DotCluster> clusters;
  std::vector<DotNode> nodes;  // nodes outside any cluster
  std::vector<DotEdge> edges;

  // Every distinct node id, declared or implied by an edge.
  std::vector<std::string> node_ids() const;
};

// Deterministic output: LF endings, attributes in key order, every id quoted.
void write_dot(const DotGraph& g, std::ostream& out);
std::string to_dot(const DotGraph& g);

// Throws ParseError with a line number on malformed input.
DotGraph parse_dot(std::string_view text);

struct DiagramOptions {
  std::size_t cap = 200;  // maximum total node count
};

namespace detail {

void check_diagram_cap(std::size_t states, const DiagramOptions& opts);

template <StateValue S>
DotCluster cluster_of(const DynSystem<S>& sys, const std::string& name, const std::string& prefix,
                      std::vector<DotEdge>& edges) {
  DotCluster c{"cluster_" + name, {{"label", name}}, {}};
  for (std::size_t i = 0; i < sys.size(); ++i) {
    c.nodes.push_back(DotNode{prefix + sys.key(i), {{"label", sys.key(i)}}});
    edges.push_back(DotEdge{prefix + sys.key(i), prefix + sys.key(sys.image(i)),
                            {{"style", "solid"}}});
  }
  return c;
}

}  // namespace detail

// Internal diagram of one system: a node per state and a solid edge x -> step(x).
template <StateValue S>
DotGraph internal_diagram(const DynSystem<S>& sys, const DiagramOptions& opts = {}) {
  detail::check_diagram_cap(sys.size(), opts);
  DotGraph g;
  g.name = "internal_diagram";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    g.nodes.push_back(DotNode{sys.key(i), {}});
    g.edges.push_back(DotEdge{sys.key(i), sys.key(sys.image(i)), {{"style", "solid"}}});
  }
  return g;
}

// Two systems in their own clusters plus a dashed edge x -> f(x) per source
// state. Node ids are "<name>:<state>".
template <StateValue S, StateValue T>
DotGraph internal_diagram(const SystemMap<S, T>& f, const std::string& source_name,
                          const std::string& target_name, const DiagramOptions& opts = {}) {
  detail::check_diagram_cap(f.source().size() + f.target().size(), opts);
  DotGraph g;
  g.name = "internal_diagram";
  g.attrs["rankdir"] = "LR";
  const std::string sp = source_name + ":";
  const std::string tp = target_name + ":";
  g.clusters.push_back(detail::cluster_of(f.source(), source_name, sp, g.edges));
  g.clusters.push_back(detail::cluster_of(f.target(), target_name, tp, g.edges));
  for (std::size_t i = 0; i < f.source().size(); ++i)
    g.edges.push_back(DotEdge{sp + f.source().key(i), tp + f.target().key(f[i]),
                              {{"style", "dashed"}}});
  return g;
}

template <StateValue S>
void export_internal_diagram(const DynSystem<S>& sys, std::ostream& sink,
                             const DiagramOptions& opts = {}) {
  write_dot(internal_diagram(sys, opts), sink);
}

template <StateValue S, StateValue T>
void export_internal_diagram(const SystemMap<S, T>& f, const std::string& source_name,
                             const std::string& target_name, std::ostream& sink,
                             const DiagramOptions& opts = {}) {
  write_dot(internal_diagram(f, source_name, target_name, opts), sink);
}

}  // namespace josephus
