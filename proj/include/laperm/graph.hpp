#ifndef LAPERM_GRAPH_HPP
#define LAPERM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laperm/error.hpp"

namespace laperm {

// Labeled simple undirected graph, vertices 0..n-1. Edge set and adjacency
// lists are kept consistent; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  // New graph with vertex i relabeled to perm[i].
  Graph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;  // u < v, kept sorted
};

enum class GraphKind { Tree, Unicyclic, Other };

struct Bipartition {
  std::vector<int> class_a;  // smaller class, sorted
  std::vector<int> class_b;  // larger class, sorted
  int p = 0;                 // |class_a|, p <= q
  int q = 0;                 // |class_b|
};

bool is_connected(const Graph& g);

// Tree iff |E| = n-1, Unicyclic iff |E| = n. Throws DisconnectedInput.
GraphKind classify(const Graph& g);

// The unique 2-coloring, normalized to p <= q (ties broken by putting the
// class containing vertex 0 first). nullopt if an odd cycle exists.
// Throws DisconnectedInput.
std::optional<Bipartition> bipartition(const Graph& g);

// All vertices of degree exactly 1, sorted.
std::vector<int> pendant_vertices(const Graph& g);

// BFS edge-count distance; -1 if unreachable.
int distance(const Graph& g, int u, int v);

// Maximum distance over connected pairs. 0 for n <= 1.
int diameter(const Graph& g);

// Vertices of the unique cycle in traversal order. Throws NotUnicyclic.
std::vector<int> unique_cycle(const Graph& g);

// Byte sequence equal exactly for isomorphic graphs; refinement plus
// exhaustive minimization with twin-vertex pruning. Throws SizeBound when
// n exceeds max_n.
std::vector<std::uint8_t> canonical_form(const Graph& g, int max_n = 16);

// Maximum matching size by exhaustive search; n <= 20.
int matching_number(const Graph& g);

// Edge-list text format: first line `n`, then one `u v` pair per line,
// 0-based; `#` starts a comment.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// Standard graph6 byte encoding (single line, n <= 62 is enough here).
Graph read_graph6(const std::string& line);

}  // namespace laperm

#endif
