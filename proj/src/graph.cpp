#include "laperm/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace laperm {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw InvalidParameters("vertex count must be nonnegative");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw InvalidParameters("vertex label out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidParameters("loops are not allowed");
  if (has_edge(u, v)) throw InvalidParameters("duplicate edge");
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  auto e = std::minmax(u, v);
  std::pair<int, int> p{e.first, e.second};
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), p), p);
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) throw InvalidParameters("edge not present");
  auto erase_from = [](std::vector<int>& nb, int x) {
    nb.erase(std::lower_bound(nb.begin(), nb.end(), x));
  };
  erase_from(adj_[u], v);
  erase_from(adj_[v], u);
  auto e = std::minmax(u, v);
  std::pair<int, int> p{e.first, e.second};
  edges_.erase(std::lower_bound(edges_.begin(), edges_.end(), p));
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const { return edges_; }

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw InvalidParameters("permutation size mismatch");
  Graph out(n_);
  for (auto [u, v] : edges_) out.add_edge(perm[u], perm[v]);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && edges_ == other.edges_;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

GraphKind classify(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedInput();
  int n = g.vertex_count(), m = g.edge_count();
  if (m == n - 1) return GraphKind::Tree;
  if (m == n) return GraphKind::Unicyclic;
  return GraphKind::Other;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedInput();
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::deque<int> queue;
  if (n > 0) {
    color[0] = 0;
    queue.push_back(0);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        return std::nullopt;
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v)
    (color[v] == 0 ? b.class_a : b.class_b).push_back(v);
  if (b.class_a.size() > b.class_b.size()) std::swap(b.class_a, b.class_b);
  b.p = static_cast<int>(b.class_a.size());
  b.q = static_cast<int>(b.class_b.size());
  return b;
}

std::vector<int> pendant_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

int distance(const Graph& g, int u, int v) { return bfs_distances(g, u)[v]; }

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int d : dist) best = std::max(best, d);
  }
  return best;
}

std::vector<int> unique_cycle(const Graph& g) {
  GraphKind kind;
  try {
    kind = classify(g);
  } catch (const DisconnectedInput&) {
    throw NotUnicyclic();
  }
  if (kind != GraphKind::Unicyclic) throw NotUnicyclic();
  // Strip pendant vertices until only the cycle remains.
  int n = g.vertex_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) stack.push_back(v);
  std::vector<char> removed(n, 0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    removed[v] = 1;
    for (int w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) stack.push_back(w);
    }
  }
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      start = v;
      break;
    }
  std::vector<int> cycle{start};
  int prev = -1, cur = start;
  for (;;) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == start) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  return cycle;
}

namespace {

// Equitable refinement: split color classes by multiset of neighbor colors
// until stable. Returns per-vertex color ids, contiguous from 0.
std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
  int n = g.vertex_count();
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> split;
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      for (int w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin(), sig.end());
      split[{color[v], std::move(sig)}].push_back(v);
    }
    if (static_cast<int>(split.size()) ==
        *std::max_element(color.begin(), color.end()) + 1) {
      return color;
    }
    int next = 0;
    for (auto& [key, members] : split) {
      for (int v : members) color[v] = next;
      ++next;
    }
  }
}

std::vector<std::uint8_t> encode(const Graph& g, const std::vector<int>& pos) {
  // pos[v] = position of v in the candidate labeling; upper-triangle bits.
  int n = g.vertex_count();
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(n));
  int nbits = n * (n - 1) / 2;
  bytes.resize(1 + (nbits + 7) / 8, 0);
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[pos[v]] = v;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(inv[i], inv[j]))
        bytes[1 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
      ++bit;
    }
  }
  return bytes;
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::uint8_t> best;
  bool have_best = false;

  void run(std::vector<int> color) {
    color = refine_colors(g, color);
    int n = g.vertex_count();
    int ncolors = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    if (ncolors == n) {
      auto cand = encode(g, color);
      if (!have_best || cand < best) {
        best = std::move(cand);
        have_best = true;
      }
      return;
    }
    // Branch on the first non-singleton color class; vertices with equal
    // neighborhoods (twins) produce identical branches, explore one each.
    std::vector<std::vector<int>> cells(ncolors);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& cell : cells) {
      if (cell.size() > 1) {
        target = &cell;
        break;
      }
    }
    auto twins = [&](int u, int v) {
      // (u v) is an automorphism iff N(u)\{v} == N(v)\{u}.
      std::vector<int> nu, nv;
      for (int w : g.neighbors(u))
        if (w != v) nu.push_back(w);
      for (int w : g.neighbors(v))
        if (w != u) nv.push_back(w);
      return nu == nv;
    };
    std::vector<int> reps;
    for (int v : *target) {
      bool dup = false;
      for (int r : reps)
        if (twins(r, v)) {
          dup = true;
          break;
        }
      if (dup) continue;
      reps.push_back(v);
    }
    for (int v : reps) {
      // Individualize v: give it a color strictly below its old cellmates.
      auto child = color;
      for (int u = 0; u < n; ++u)
        if (child[u] >= color[v] && u != v) ++child[u];
      run(std::move(child));
    }
  }
};

}  // namespace

std::vector<std::uint8_t> canonical_form(const Graph& g, int max_n) {
  int n = g.vertex_count();
  if (n > max_n) throw SizeBound("canonical_form order " + std::to_string(n));
  if (n == 0) return {0};
  CanonSearch search{g};
  search.run(std::vector<int>(n, 0));
  return search.best;
}

namespace {

int matching_search(const Graph& g, std::vector<char>& used, int v) {
  int n = g.vertex_count();
  while (v < n && used[v]) ++v;
  if (v == n) return 0;
  // v stays unmatched
  used[v] = 1;
  int best = matching_search(g, used, v + 1);
  for (int w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = 1;
    best = std::max(best, 1 + matching_search(g, used, v + 1));
    used[w] = 0;
  }
  used[v] = 0;
  return best;
}

}  // namespace

int matching_number(const Graph& g) {
  if (g.vertex_count() > 20)
    throw SizeBound("matching_number order " + std::to_string(g.vertex_count()));
  std::vector<char> used(g.vertex_count(), 0);
  return matching_search(g, used, 0);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      int header;
      std::string rest;
      if (!(ls >> header)) {
        ls.clear();
        if (ls >> rest)
          throw ParseError("line " + std::to_string(lineno) +
                           ": expected vertex-count header");
        continue;  // skip blank/comment lines before the header
      }
      if (header < 0)
        throw ParseError("line " + std::to_string(lineno) + ": negative n");
      n = header;
      continue;
    }
    int u, v;
    if (!(ls >> u)) {
      ls.clear();
      std::string rest;
      if (ls >> rest)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected `u v` pair");
      continue;  // blank or comment-only line
    }
    if (!(ls >> v))
      throw ParseError("line " + std::to_string(lineno) + ": expected `u v` pair");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("missing vertex-count header line");
  try {
    return Graph(n, edges);
  } catch (const InvalidParameters& e) {
    throw ParseError(e.what());
  }
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph read_graph6(const std::string& raw) {
  std::string line = raw;
  if (!line.empty() && line.back() == '\n') line.pop_back();
  if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
  if (line.empty()) throw ParseError("empty graph6 line");
  size_t pos = 0;
  long n;
  if (line[0] == '~') throw ParseError("graph6 orders above 62 are not supported");
  n = line[0] - 63;
  pos = 1;
  if (n < 0 || n > 62) throw ParseError("bad graph6 order byte");
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  auto next_bit = [&]() -> int {
    if (pos + bit / 6 >= line.size()) throw ParseError("graph6 line too short");
    int byte = line[pos + bit / 6] - 63;
    if (byte < 0 || byte > 63) throw ParseError("bad graph6 data byte");
    int b = (byte >> (5 - bit % 6)) & 1;
    ++bit;
    return b;
  };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (next_bit()) edges.emplace_back(i, j);
  return Graph(static_cast<int>(n), edges);
}

}  // namespace laperm
