#pragma once

#include <variant>

#include "laperm/graph.hpp"

namespace laperm {

// The three edge-grafting moves. Vertex names follow the conventions used
// throughout the library: op1 moves the pendant edge uv to uw, op2 moves the
// star W = N(u)\{v} from u onto w, op3 shortens the cycle of a unicyclic
// graph by two (the relabeling is searched internally).
struct OpI {
  int u, v, w;
};
struct OpII {
  int u, v, w;
};
struct OpIII {
  std::pair<int, int> cycle_edge;  // (v1, v2), the removed edge
  int target;                      // v4, the new neighbor of v1
};
using GraftMove = std::variant<OpI, OpII, OpIII>;

// g - uv + uw where uv is a pendant edge (degree(u) == 1) and
// degree(w) >= degree(v). Requires g bipartite connected with n >= 3.
Graph apply_op1(const Graph& g, int u, int v, int w);

// Moves every edge u-z, z in W = N(u)\{v}, onto w, where uv and vw are edges,
// degree(w) >= 2, and every vertex of W is pendant (W nonempty).
// Requires g bipartite connected.
Graph apply_op2(const Graph& g, int u, int v, int w);

// Shortens the cycle of a bipartite unicyclic graph with cycle length
// 2k >= 6: picks a cyclic labeling v1..v2k such that only v1 and possibly
// positions v_i, v_j with 4 < i < j carry attachments, then returns
// g - v1v2 + v1v4. The labeling search uses the lexicographically smallest
// valid labeling under canonical vertex order. Also returns the move applied.
std::pair<Graph, OpIII> apply_op3_move(const Graph& g);
Graph apply_op3(const Graph& g);

// Lemma-3.5 style move on a tree: u is v's unique non-pendant neighbor and
// A = N(v)\{u} is nonempty; every A-edge is moved from v to u.
Graph apply_lemma35(const Graph& g, int v, int u);

}  // namespace laperm
