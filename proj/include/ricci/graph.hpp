#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ricci/errors.hpp"

namespace ricci {

// Finite simple undirected graph. Vertices are dense indices 0..n-1 with
// unique text labels; neighbor lists are kept sorted so that every
// traversal, and therefore every report, is deterministic.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool has_edge(int u, int v) const;
    // Sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    bool is_regular() const;

    // Index of the vertex with the given label.
    std::optional<int> find_label(const std::string& label) const;
    int require_label(const std::string& label) const;

  private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

// Parses "u v" lines. '#' starts a comment, blank lines are skipped,
// duplicate edges collapse. Self-loops and malformed lines are rejected
// with their line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Serializes to the parse_edge_list format (one "u v" line per edge,
// endpoint labels, deterministic order).
std::string dump_edge_list(const Graph& g);

// Named generators: "cycle:n" (n>=3), "complete:n" (n>=2), "path:n" (n>=2),
// "hypercube:k" (k>=1), "petersen", "h1", "h2".
Graph generate(const std::string& spec);

// Hop distances from s; nullopt marks vertices in other components.
std::vector<std::optional<int>> bfs_distance(const Graph& g, int s);

// Distance between two vertices; PreconditionError if unreachable.
int graph_distance(const Graph& g, int u, int v);

// The decomposition of N(x) and N(y) around an edge xy: common neighbors,
// exclusive neighbors of x, exclusive neighbors of y. All sets sorted.
struct EdgeNeighborhood {
    int x = -1;
    int y = -1;
    std::vector<int> triangle;  // N(x) ∩ N(y)
    std::vector<int> r_x;       // N(x) \ (triangle ∪ {y})
    std::vector<int> r_y;       // N(y) \ (triangle ∪ {x})
};

EdgeNeighborhood edge_neighborhood(const Graph& g, int x, int y);

enum class EdgeKind { Horizontal, Vertical, Diagonal };

std::string edge_kind_str(EdgeKind k);

// A product together with its factors and the coordinate map, so that
// projections never need label parsing. Labels are "(gLabel,hLabel)".
struct ProductGraph {
    Graph graph;
    Graph left_factor;
    Graph right_factor;
    std::vector<std::pair<int, int>> coords;  // product index -> (g, h)

    int vertex_of(int g_index, int h_index) const;
};

// (u1,v1) ~ (u2,v2) iff u2 ∈ N[u1], v2 ∈ N[v1], and the pairs differ.
ProductGraph strong_product(const Graph& g, const Graph& h);

// Adjacent iff exactly one coordinate moves along a factor edge.
ProductGraph cartesian_product(const Graph& g, const Graph& h);

// Horizontal: same g-coordinate; vertical: same h-coordinate; diagonal: both move.
EdgeKind classify_edge(const ProductGraph& p, int u, int v);

// N[x1] = N[x2] as sets (closed-twin test; true for x1 = x2).
bool closed_neighborhood_equal(const Graph& g, int x1, int x2);

}  // namespace ricci
