#include "laperm/transforms.hpp"

#include <algorithm>

#include "laperm/error.hpp"

namespace laperm {

namespace {

void check(bool ok, const std::string& clause) {
  if (!ok) throw PreconditionViolated(clause);
}

void require_bipartite_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedInput();
  if (!bipartition(g)) throw NotBipartite();
}

}  // namespace

Graph apply_op1(const Graph& g, int u, int v, int w) {
  require_bipartite_connected(g);
  check(g.vertex_count() >= 3, "OrderAtLeast3");
  check(u >= 0 && u < g.vertex_count() && v >= 0 && v < g.vertex_count() && w >= 0 && w < g.vertex_count(),
        "VertexInRange");
  check(g.has_edge(u, v), "PendantEdgePresent");
  check(g.degree(u) == 1, "UIsPendant");
  check(w != v && w != u, "WDistinct");
  check(g.degree(w) >= g.degree(v), "DegreeWAtLeastDegreeV");
  Graph out = g;
  out.remove_edge(u, v);
  out.add_edge(u, w);
  return out;
}

Graph apply_op2(const Graph& g, int u, int v, int w) {
  require_bipartite_connected(g);
  check(u >= 0 && u < g.vertex_count() && v >= 0 && v < g.vertex_count() && w >= 0 && w < g.vertex_count(),
        "VertexInRange");
  check(u != w, "WDistinct");
  check(g.has_edge(u, v), "EdgeUV");
  check(g.has_edge(v, w), "EdgeVW");
  check(g.degree(w) >= 2, "DegreeWAtLeast2");
  std::vector<int> star;
  for (int z : g.neighbors(u))
    if (z != v) star.push_back(z);
  check(!star.empty(), "StarNonempty");
  for (int z : star) check(g.degree(z) == 1, "StarVerticesPendant");
  Graph out = g;
  for (int z : star) {
    out.remove_edge(u, z);
    out.add_edge(w, z);
  }
  return out;
}

std::pair<Graph, OpIII> apply_op3_move(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedInput();
  if (classify(g) != GraphKind::Unicyclic) throw NotUnicyclic();
  if (!bipartition(g)) throw NotBipartite();
  std::vector<int> cycle = unique_cycle(g);
  const int len = static_cast<int>(cycle.size());
  if (len < 6) throw PreconditionViolated("CycleTooShort");

  std::vector<char> on_cycle(g.vertex_count(), 0);
  for (int v : cycle) on_cycle[v] = 1;
  // Attachments must be stars: every off-cycle vertex is a pendant whose
  // neighbor lies on the cycle.
  std::vector<int> attach_count(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    if (g.degree(v) != 1 || !on_cycle[g.neighbors(v)[0]])
      throw PreconditionViolated("NoValidLabeling");
    ++attach_count[g.neighbors(v)[0]];
  }

  // Search cyclic labelings (all rotations, both directions) for one where
  // the vertices carrying attachments sit at positions > 4 (1-indexed) and
  // there are at most two such positions; take the lexicographically
  // smallest valid vertex sequence.
  std::optional<std::vector<int>> best;
  auto consider = [&](const std::vector<int>& lab) {
    for (int pos = 0; pos < 4; ++pos)
      if (attach_count[lab[pos]] > 0) return;
    int carriers = 0;
    for (int pos = 4; pos < len; ++pos)
      if (attach_count[lab[pos]] > 0) ++carriers;
    if (carriers > 2) return;
    if (!best || lab < *best) best = lab;
  };
  for (int start = 0; start < len; ++start) {
    std::vector<int> fwd(len), rev(len);
    for (int t = 0; t < len; ++t) {
      fwd[t] = cycle[(start + t) % len];
      rev[t] = cycle[(start - t + len) % len];
    }
    consider(fwd);
    consider(rev);
  }
  if (!best) throw PreconditionViolated("NoValidLabeling");

  const std::vector<int>& lab = *best;
  OpIII move{{lab[0], lab[1]}, lab[3]};
  Graph out = g;
  out.remove_edge(move.cycle_edge.first, move.cycle_edge.second);
  out.add_edge(move.cycle_edge.first, move.target);
  return {out, move};
}

Graph apply_op3(const Graph& g) { return apply_op3_move(g).first; }

Graph apply_lemma35(const Graph& g, int v, int u) {
  if (!is_connected(g)) throw DisconnectedInput();
  if (classify(g) != GraphKind::Tree) throw NotATree();
  check(v >= 0 && v < g.vertex_count() && u >= 0 && u < g.vertex_count(), "VertexInRange");
  check(g.has_edge(u, v), "EdgeUV");
  check(g.degree(u) >= 2, "UNonPendant");
  std::vector<int> moved;
  for (int z : g.neighbors(v)) {
    if (z == u) continue;
    check(g.degree(z) == 1, "OtherNeighborsPendant");
    moved.push_back(z);
  }
  check(!moved.empty(), "MovedSetNonempty");
  Graph out = g;
  for (int z : moved) {
    out.remove_edge(v, z);
    out.add_edge(u, z);
  }
  return out;
}

}  // namespace laperm
