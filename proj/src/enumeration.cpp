#include "laperm/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "laperm/limits.hpp"

namespace laperm {

namespace {

std::string canon_key(const Graph& g) {
  auto bytes = canonical_form(g, std::max(limits().canon_max_n, g.vertex_count()));
  return std::string(bytes.begin(), bytes.end());
}

std::string one_line_edges(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " edges:";
  for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
  return out.str();
}

// Centroid-rooted AHU canonical string; equal exactly for isomorphic trees.
std::string tree_key(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return "()";
  // Subtree sizes from an arbitrary root give every vertex's maximum
  // component size on removal.
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  order.push_back(0);
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : g.neighbors(order[i]))
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<int> size(n, 1);
  for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
  std::vector<int> centroids;
  int best = n + 1;
  for (int v = 0; v < n; ++v) {
    // Max component size when v is removed: child subtrees plus the
    // parent-side remainder.
    int big = 0;
    for (int w : g.neighbors(v)) {
      int side = (parent[w] == v) ? size[w] : n - size[v];
      big = std::max(big, side);
    }
    if (big < best) {
      best = big;
      centroids.assign(1, v);
    } else if (big == best) {
      centroids.push_back(v);
    }
  }
  std::function<std::string(int, int)> ahu = [&](int v, int from) {
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
      if (w != from) kids.push_back(ahu(w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
  };
  if (centroids.size() == 1) return ahu(centroids[0], -1);
  std::string a = ahu(centroids[0], centroids[1]);
  std::string b = ahu(centroids[1], centroids[0]);
  if (b < a) std::swap(a, b);
  return "e" + a + b;
}

Graph tree_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j)
      if (levels[j] == levels[i] - 1) {
        g.add_edge(j, i);
        break;
      }
  }
  return g;
}

}  // namespace

std::vector<Graph> free_trees(int n) {
  if (n < 1) throw InvalidParameters("tree order must be >= 1");
  if (n > limits().trees_max_n)
    throw SizeBound("tree enumeration capped at n = " +
                    std::to_string(limits().trees_max_n));
  if (n == 1) return {Graph(1)};
  if (n == 2) return {Graph(2, {{0, 1}})};

  // Beyer-Hedetniemi generation of all canonical rooted level sequences,
  // deduplicated to free trees by the centroid-rooted canonical string.
  std::vector<int> levels(n);
  std::iota(levels.begin(), levels.end(), 1);
  std::set<std::string> seen;
  std::vector<Graph> out;
  while (true) {
    Graph g = tree_from_levels(levels);
    if (seen.insert(tree_key(g)).second) out.push_back(g);
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
      if (levels[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (levels[i] == levels[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  }
  return out;
}

std::vector<Graph> trees_via_pruefer(int n) {
  if (n < 1 || n > 9)
    throw SizeBound("Pruefer oracle capped at n = 9");
  if (n == 1) return {Graph(1)};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::set<std::string> seen;
  std::vector<Graph> out;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    // Decode the Pruefer sequence.
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    Graph g(n);
    std::vector<int> degree = deg;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.insert(v);
    for (int x : seq) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      g.add_edge(leaf, x);
      if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    g.add_edge(a, b);
    if (seen.insert(tree_key(g)).second) out.push_back(g);
    // Next sequence.
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

namespace {

bool passes_filters(const Graph& g, const ClassQuery& q) {
  if (q.bipartition) {
    auto bp = bipartition(g);
    if (!bp || bp->p != q.bipartition->first || bp->q != q.bipartition->second)
      return false;
  }
  if (q.diameter_at_least && diameter(g) < *q.diameter_at_least) return false;
  if (q.matching_number && matching_number(g) != *q.matching_number)
    return false;
  return true;
}

}  // namespace

std::vector<Graph> enumerate_class(const ClassQuery& query) {
  if (query.bipartition) {
    auto [p, q] = *query.bipartition;
    if (p < 1 || p > q || p + q != query.n)
      throw InvalidParameters("bipartition filter needs 1 <= p <= q, p+q = n");
  }
  std::vector<Graph> out;
  if (query.kind == ClassKind::Trees) {
    for (const Graph& g : free_trees(query.n))
      if (passes_filters(g, query)) out.push_back(g);
    return out;
  }
  if (query.n > limits().unicyclic_max_n)
    throw SizeBound("unicyclic enumeration capped at n = " +
                    std::to_string(limits().unicyclic_max_n));
  if (query.n < 4) return out;
  std::set<std::string> seen;
  for (const Graph& t : free_trees(query.n)) {
    for (int u = 0; u < query.n; ++u)
      for (int v = u + 1; v < query.n; ++v) {
        if (t.has_edge(u, v)) continue;
        if (distance(t, u, v) % 2 == 0) continue;  // keep the cycle even
        Graph g = t;
        g.add_edge(u, v);
        if (seen.insert(canon_key(g)).second && passes_filters(g, query))
          out.push_back(g);
      }
  }
  return out;
}

namespace {

// Candidate table for family recognition, built once per order. Earlier
// entries win so the most specific name is reported.
const std::map<std::string, FamilySpec>& family_table(int n) {
  static std::map<int, std::map<std::string, FamilySpec>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<std::string, FamilySpec>& table = cache[n];
  std::vector<FamilySpec> candidates;
  using namespace family;
  candidates.push_back(Star{n});
  candidates.push_back(Path{n});
  for (int p = 1; 2 * p <= n; ++p) candidates.push_back(DoubleStar{p, n - p});
  for (int p = 2; p <= n - 2; ++p)
    if (n - p >= 2) {
      candidates.push_back(family::DPrime{p, n - p});
      candidates.push_back(family::DDoublePrime{p, n - p});
    }
  for (int d = 2; d <= n - 1; ++d)
    for (int i = 2; i <= d; ++i) candidates.push_back(family::Broom{n, d, i});
  for (int k = 2; k <= n; ++k)
    for (int a = 0; a + k <= n; ++a)
      candidates.push_back(TEndAttach{n, k, a});
  for (int m = 1; 2 * m <= n + 1; ++m)
    candidates.push_back(MatchingTree{n, m});
  candidates.push_back(Cycle{n});
  for (int p = 2; 2 * p <= n; ++p) candidates.push_back(family::BPQ{p, n - p});
  for (int p = 3; 2 * p <= n; ++p) {
    candidates.push_back(family::G1{p, n - p});
    candidates.push_back(family::G2{p, n - p});
  }
  for (int i = 1; i <= 8; ++i) candidates.push_back(GHat{i, n});
  // Every C4(1^{s1}k1, ..., 1^{s4}k4) of this order.
  {
    std::array<int, 8> part{};
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == 8) {
        if (left != 0) return;
        candidates.push_back(C4Family{{part[0], part[1], part[2], part[3]},
                                      {part[4], part[5], part[6], part[7]}});
        return;
      }
      for (int v = 0; v <= left; ++v) {
        part[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    if (n >= 4) rec(0, n - 4);
  }
  for (const FamilySpec& spec : candidates) {
    try {
      Graph g = build(spec);
      if (g.vertex_count() != n) continue;
      table.emplace(canon_key(g), spec);
    } catch (const Error&) {
      // parameters invalid for this order; skip
    }
  }
  return table;
}

}  // namespace

std::optional<FamilySpec> recognize_family(const Graph& g) {
  const auto& table = family_table(g.vertex_count());
  auto it = table.find(canon_key(g));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

RankedResult rank_by_permanent(const ClassQuery& query, int k) {
  std::vector<Graph> graphs = enumerate_class(query);
  struct Row {
    Int value;
    std::string key;
    int index;
  };
  std::vector<Row> rows;
  rows.reserve(graphs.size());
  for (int i = 0; i < static_cast<int>(graphs.size()); ++i)
    rows.push_back({laplacian_permanent(graphs[i]), canon_key(graphs[i]), i});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.key < b.key;
  });
  RankedResult out;
  out.class_size = static_cast<long long>(graphs.size());
  const int take = std::min<int>(k, static_cast<int>(rows.size()));
  for (int i = 0; i < take; ++i) {
    const Row& row = rows[i];
    out.entries.push_back(
        {graphs[row.index], row.value, recognize_family(graphs[row.index])});
  }
  return out;
}

TheoremId parse_theorem(const std::string& name) {
  if (name == "T32") return TheoremId::T32;
  if (name == "T33") return TheoremId::T33;
  if (name == "T36") return TheoremId::T36;
  if (name == "T37") return TheoremId::T37;
  if (name == "T38") return TheoremId::T38;
  if (name == "T39") return TheoremId::T39;
  if (name == "L34") return TheoremId::L34;
  if (name == "R1") return TheoremId::R1;
  if (name == "R3") return TheoremId::R3;
  throw ParseError("unknown theorem id `" + name + "`");
}

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T32: return "T32";
    case TheoremId::T33: return "T33";
    case TheoremId::T36: return "T36";
    case TheoremId::T37: return "T37";
    case TheoremId::T38: return "T38";
    case TheoremId::T39: return "T39";
    case TheoremId::L34: return "L34";
    case TheoremId::R1: return "R1";
    case TheoremId::R3: return "R3";
  }
  return "?";
}

std::string status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Confirmed: return "Confirmed";
    case VerifyStatus::Refuted: return "Refuted";
    case VerifyStatus::Inapplicable: return "Inapplicable";
  }
  return "?";
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["params"] = params;
  j["status"] = status_name(status);
  j["class_size"] = class_size;
  j["minimizers"] = nlohmann::json::array();
  for (const auto& m : minimizers)
    j["minimizers"].push_back(
        {{"family", m.family}, {"value", m.value.get_str()}});
  j["mismatches"] = mismatches;
  j["notes"] = notes;
  return j;
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  out << "theorem " << theorem << ": " << status_name(status) << "\n";
  for (const auto& [k, v] : params) out << "  " << k << " = " << v << "\n";
  out << "  class size: " << class_size << "\n";
  for (const auto& m : minimizers)
    out << "  minimizer " << m.family << " -> " << m.value.get_str() << "\n";
  for (const auto& m : mismatches) out << "  MISMATCH: " << m << "\n";
  for (const auto& nline : notes) out << "  note: " << nline << "\n";
  return out.str();
}

namespace {

// Sorted (value, canonical key, index) view of a class.
struct RankedClass {
  std::vector<Graph> graphs;
  std::vector<Int> values;        // sorted ascending
  std::vector<std::string> keys;  // aligned with values
  long long size() const { return static_cast<long long>(graphs.size()); }
};

RankedClass ranked_class(std::vector<Graph> graphs) {
  struct Row {
    Int value;
    std::string key;
    Graph graph;
  };
  std::vector<Row> rows;
  rows.reserve(graphs.size());
  for (Graph& g : graphs)
    rows.push_back({laplacian_permanent(g), canon_key(g), std::move(g)});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.key < b.key;
  });
  RankedClass out;
  for (Row& r : rows) {
    out.values.push_back(std::move(r.value));
    out.keys.push_back(std::move(r.key));
    out.graphs.push_back(std::move(r.graph));
  }
  return out;
}

class Verifier {
 public:
  Verifier(TheoremId id, int n) : id_(id), n_(n) {
    report_.theorem = theorem_name(id);
    report_.params["n"] = std::to_string(n);
  }

  VerificationReport run() {
    switch (id_) {
      case TheoremId::T32: t32(); break;
      case TheoremId::T33: t33(); break;
      case TheoremId::T36: t36(); break;
      case TheoremId::T37: t37(); break;
      case TheoremId::T38: t38(); break;
      case TheoremId::T39: t39(); break;
      case TheoremId::L34: l34(); break;
      case TheoremId::R1: r1(); break;
      case TheoremId::R3: r3(); break;
    }
    if (!report_.mismatches.empty()) report_.status = VerifyStatus::Refuted;
    return std::move(report_);
  }

 private:
  void mismatch(const std::string& text) { report_.mismatches.push_back(text); }

  void expect_rank(const RankedClass& cls, int rank /*0-based*/,
                   const FamilySpec& spec, const Int& value,
                   const std::string& context) {
    if (rank >= static_cast<int>(cls.values.size())) {
      mismatch(context + ": class has no rank-" + std::to_string(rank + 1) +
               " member");
      return;
    }
    if (cls.values[rank] != value)
      mismatch(context + ": rank-" + std::to_string(rank + 1) + " value " +
               cls.values[rank].get_str() + " != formula " + value.get_str() +
               " (" + one_line_edges(cls.graphs[rank]) + ")");
    if (cls.keys[rank] != canon_key(build(spec)))
      mismatch(context + ": rank-" + std::to_string(rank + 1) +
               " graph is not " + print_family(spec) + " (" +
               one_line_edges(cls.graphs[rank]) + ")");
    // Uniqueness of the stated minimizer: the next value must be larger.
    if (rank + 1 < static_cast<int>(cls.values.size()) &&
        cls.values[rank + 1] == cls.values[rank])
      mismatch(context + ": rank-" + std::to_string(rank + 1) +
               " value is not unique");
  }

  std::vector<std::pair<int, int>> bipartitions() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; 2 * p <= n_; ++p) out.push_back({p, n_ - p});
    return out;
  }

  RankedClass tree_class(int p, int q) const {
    ClassQuery query{ClassKind::Trees, n_, std::pair{p, q}, {}, {}};
    return ranked_class(enumerate_class(query));
  }

  RankedClass unicyclic_class(int p, int q) const {
    ClassQuery query{ClassKind::BipartiteUnicyclic, n_, std::pair{p, q}, {}, {}};
    return ranked_class(enumerate_class(query));
  }

  void add_min(const std::string& family, Int value) {
    report_.minimizers.push_back({family, std::move(value)});
  }

  void t32() {
    for (auto [p, q] : bipartitions()) {
      RankedClass cls = tree_class(p, q);
      report_.class_size += cls.size();
      Int bound = eval_formula({FormulaId::Kind::DStar, p, q});
      std::string ctx = "T32 (p,q)=(" + std::to_string(p) + "," +
                        std::to_string(q) + ")";
      expect_rank(cls, 0, family::DoubleStar{p, q}, bound, ctx);
      for (size_t i = 0; i < cls.values.size(); ++i)
        if (cls.values[i] < bound) {
          mismatch(ctx + ": value below the stated bound (" +
                   one_line_edges(cls.graphs[i]) + ")");
          break;
        }
      add_min(print_family(family::DoubleStar{p, q}), bound);
    }
  }

  void t33() {
    for (auto [p, q] : bipartitions()) {
      if (p == 1) continue;  // the class is the star alone
      RankedClass cls = tree_class(p, q);
      report_.class_size += cls.size();
      std::string ctx = "T33 (p,q)=(" + std::to_string(p) + "," +
                        std::to_string(q) + ")";
      if (p == 2) {
        // The whole class is T(n,3,0), ..., T(n,3,floor((n-3)/2)) in
        // strictly increasing order.
        const int top = (n_ - 3) / 2;
        if (cls.size() != top + 1) {
          mismatch(ctx + ": class size " + std::to_string(cls.size()) +
                   " != " + std::to_string(top + 1));
          continue;
        }
        for (int i = 0; i <= top; ++i)
          expect_rank(cls, i, family::TEndAttach{n_, 3, i},
                      eval_formula({FormulaId::Kind::T3i, n_, i}),
                      ctx + " chain i=" + std::to_string(i));
        add_min(print_family(family::TEndAttach{n_, 3, 1}),
                eval_formula({FormulaId::Kind::T3i, n_, 1}));
      } else {
        expect_rank(cls, 1, family::DPrime{p, q},
                    eval_formula({FormulaId::Kind::DPrime, p, q}), ctx);
        add_min(print_family(family::DPrime{p, q}),
                eval_formula({FormulaId::Kind::DPrime, p, q}));
        if (q > p) {
          expect_rank(cls, 2, family::DDoublePrime{p, q},
                      eval_formula({FormulaId::Kind::DDoublePrime, p, q}), ctx);
          add_min(print_family(family::DDoublePrime{p, q}),
                  eval_formula({FormulaId::Kind::DDoublePrime, p, q}));
        }
      }
    }
  }

  void t36() {
    for (int d = 3; d <= n_ - 1; ++d) {
      ClassQuery query{ClassKind::Trees, n_, {}, d, {}};
      RankedClass cls = ranked_class(enumerate_class(query));
      report_.class_size += cls.size();
      Int value = eval_formula({FormulaId::Kind::Broom, n_, d});
      std::string ctx = "T36 d=" + std::to_string(d);
      expect_rank(cls, 0, family::Broom{n_, d, 2}, value, ctx);
      add_min(print_family(family::Broom{n_, d, 2}), value);
    }
  }

  void t37() {
    for (auto [p, q] : bipartitions()) {
      if (p < 2) continue;
      RankedClass cls = unicyclic_class(p, q);
      report_.class_size += cls.size();
      Int bound = eval_formula({FormulaId::Kind::BPQ, p, q});
      std::string ctx = "T37 (p,q)=(" + std::to_string(p) + "," +
                        std::to_string(q) + ")";
      expect_rank(cls, 0, family::BPQ{p, q}, bound, ctx);
      for (size_t i = 0; i < cls.values.size(); ++i)
        if (cls.values[i] < bound) {
          mismatch(ctx + ": value below the stated bound (" +
                   one_line_edges(cls.graphs[i]) + ")");
          break;
        }
      add_min(print_family(family::BPQ{p, q}), bound);
    }
  }

  void t38_named_graphs() {
    // Part (ii)'s three named graphs, checked by closed form plus direct
    // engine evaluation (the full class is out of enumeration reach for
    // the theorem's stated n >= 20).
    Int b = eval_formula({FormulaId::Kind::UnThird, n_});
    Int g1 = eval_formula({FormulaId::Kind::GHatLinear, 1, n_});
    Int g2 = eval_formula({FormulaId::Kind::GHatLinear, 2, n_});
    struct Named {
      FamilySpec spec;
      Int formula;
    } named[] = {{family::BPQ{3, n_ - 3}, b},
                 {family::GHat{1, n_}, g1},
                 {family::GHat{2, n_}, g2}};
    for (auto& nm : named) {
      Int engine = laplacian_permanent(build(nm.spec));
      if (engine != nm.formula)
        mismatch("T38(ii) " + print_family(nm.spec) + ": engine " +
                 engine.get_str() + " != formula " + nm.formula.get_str());
      add_min(print_family(nm.spec), nm.formula);
    }
    if (!(b < g1 && g1 < g2))
      mismatch("T38(ii): named-graph ordering B(3,n-3) < Ghat1 < Ghat2 fails");
    report_.notes.push_back(
        "T38(ii) checked on the three named graphs only (formula + engine); "
        "the full class is not enumerated at this n");
  }

  void t38() {
    report_.params["q>p>=4"] = "second/third minimizers, part (iii)";
    if (n_ > limits().unicyclic_max_n) {
      if (n_ > ryser_max_order())
        throw SizeBound("T38 named-graph check needs n <= Ryser cap");
      t38_named_graphs();
      // Part (iii) by pure formula comparison at this n.
      for (int p = 4; 2 * p <= n_; ++p) {
        int q = n_ - p;
        Int second = eval_formula({FormulaId::Kind::C4SecondA, p, q});
        Int third = eval_formula({FormulaId::Kind::C4SecondB, p, q});
        Int first = eval_formula({FormulaId::Kind::BPQ, p, q});
        if (!(first < second && (p == q || second < third)))
          mismatch("T38(iii) formula ordering fails at (p,q)=(" +
                   std::to_string(p) + "," + std::to_string(q) + ")");
      }
      return;
    }
    bool any = false;
    for (int p = 4; 2 * p <= n_; ++p) {
      int q = n_ - p;
      if (n_ < 8) break;
      any = true;
      RankedClass cls = unicyclic_class(p, q);
      report_.class_size += cls.size();
      std::string ctx = "T38(iii) (p,q)=(" + std::to_string(p) + "," +
                        std::to_string(q) + ")";
      Int second = eval_formula({FormulaId::Kind::C4SecondA, p, q});
      expect_rank(cls, 1, *formula_family({FormulaId::Kind::C4SecondA, p, q}),
                  second, ctx);
      add_min(print_family(*formula_family({FormulaId::Kind::C4SecondA, p, q})),
              second);
      if (q > p && n_ >= 9) {
        Int third = eval_formula({FormulaId::Kind::C4SecondB, p, q});
        expect_rank(cls, 2, *formula_family({FormulaId::Kind::C4SecondB, p, q}),
                    third, ctx);
        add_min(
            print_family(*formula_family({FormulaId::Kind::C4SecondB, p, q})),
            third);
      }
    }
    // Part (ii) is stated for n >= 20; report the observed bottom of
    // U_n^{3,n-3} as data.
    if (n_ >= 7) {
      RankedClass cls = unicyclic_class(3, n_ - 3);
      std::ostringstream note;
      note << "T38(ii) observed bottom of U_n^{3,n-3} at n=" << n_ << ":";
      for (int i = 0; i < std::min<int>(3, cls.size()); ++i) {
        auto fam = recognize_family(cls.graphs[i]);
        note << ' ' << (fam ? print_family(*fam) : "unrecognized") << '='
             << cls.values[i].get_str();
      }
      note << " (theorem hypothesis n >= 20; observational only)";
      report_.notes.push_back(note.str());
    }
    if (!any) {
      report_.status = VerifyStatus::Inapplicable;
      report_.notes.push_back("no (p,q) with q >= p >= 4 and n >= 8 at this n");
    }
  }

  void t39() {
    if (n_ < 4) throw InvalidParameters("T39 needs n >= 4");
    std::vector<Graph> all;
    for (auto [p, q] : bipartitions()) {
      if (p < 2) continue;
      ClassQuery query{ClassKind::BipartiteUnicyclic, n_, std::pair{p, q},
                       {}, {}};
      for (Graph& g : enumerate_class(query)) all.push_back(std::move(g));
    }
    RankedClass cls = ranked_class(std::move(all));
    report_.class_size = cls.size();
    expect_rank(cls, 0, family::BPQ{2, n_ - 2},
                eval_formula({FormulaId::Kind::UnMin, n_}), "T39 minimum");
    add_min(print_family(family::BPQ{2, n_ - 2}),
            eval_formula({FormulaId::Kind::UnMin, n_}));
    if (n_ >= 6) {
      expect_rank(cls, 1, *formula_family({FormulaId::Kind::UnSecond, n_}),
                  eval_formula({FormulaId::Kind::UnSecond, n_}), "T39 second");
      add_min(print_family(*formula_family({FormulaId::Kind::UnSecond, n_})),
              eval_formula({FormulaId::Kind::UnSecond, n_}));
      expect_rank(cls, 2, family::BPQ{3, n_ - 3},
                  eval_formula({FormulaId::Kind::UnThird, n_}), "T39 third");
      add_min(print_family(family::BPQ{3, n_ - 3}),
              eval_formula({FormulaId::Kind::UnThird, n_}));
    }
    if (n_ >= 8 && cls.size() >= 4) {
      auto fam = recognize_family(cls.graphs[3]);
      report_.notes.push_back(
          "observed fourth-smallest: " +
          (fam ? print_family(*fam) : std::string("unrecognized")) + " = " +
          cls.values[3].get_str() + " (56n-252 = " +
          eval_formula({FormulaId::Kind::UnFourth, n_}).get_str() +
          "; not claimed by the theorem)");
    }
  }

  void l34() {
    if (n_ > 200) throw SizeBound("L34 arithmetic check capped at n = 200");
    if (n_ < 3) throw InvalidParameters("L34 needs n >= 3");
    long long checked = 0;
    for (int k = 1; 2 * k <= n_ + 1; ++k)
      for (int j = k + 1; 2 * j <= n_ + 1; ++j) {
        ++checked;
        if (lemma34_gap(n_, k, j) <= 0)
          mismatch("L34 gap not positive at (n,k,j)=(" + std::to_string(n_) +
                   "," + std::to_string(k) + "," + std::to_string(j) + ")");
      }
    report_.class_size = checked;
    report_.notes.push_back("checked all 1 <= k < j <= (n+1)/2 pairs");
  }

  // Dominance helpers: a "prec" b means a's coefficients never exceed b's
  // and are smaller somewhere.
  static bool strictly_dominates(const Graph& a, const Graph& b) {
    return dominance_compare(char_poly(a), char_poly(b)) ==
           Dominance::StrictlyADominated;
  }
  static bool dominates(const Graph& a, const Graph& b) {
    Dominance d = dominance_compare(char_poly(a), char_poly(b));
    return d == Dominance::StrictlyADominated || d == Dominance::Equal ||
           d == Dominance::ADominated;
  }

  // Record an observed failure of a conjectured dominance relation. These
  // are reported, not counted as mismatches: the source only conjectures
  // the relation, so a counterexample refutes the conjecture, not the tool.
  void conjecture_gap(const std::string& what) {
    constexpr size_t kMaxListed = 6;
    if (++conjecture_failures_ <= kMaxListed)
      report_.notes.push_back("conjectured relation fails: " + what);
  }
  void conjecture_summary(const std::string& chain) {
    if (conjecture_failures_ == 0) {
      report_.notes.push_back("conjectured chain " + chain +
                              " holds at this n");
    } else {
      report_.notes.push_back(
          "conjectured chain " + chain + " fails at this n (" +
          std::to_string(conjecture_failures_) + " counterexample(s))");
    }
  }

  void r1() {
    report_.notes.push_back(
        "dominance chain observed at this n only; no proof is claimed");
    for (auto [p, q] : bipartitions()) {
      if (p < 2) continue;
      RankedClass cls = tree_class(p, q);
      if (cls.size() < 2) continue;
      report_.class_size += cls.size();
      std::string ctx = "R1 (p,q)=(" + std::to_string(p) + "," +
                        std::to_string(q) + ")";
      Graph d0 = build(family::DoubleStar{p, q});
      Graph d1 = build(family::DPrime{p, q});
      std::string key_d0 = canon_key(d0), key_d1 = canon_key(d1);
      // For p = 2 the double star and its primed companion coincide
      // (D(2,q) is the broom obtained by attaching a 2-path to a star),
      // so the strict comparison is vacuous there.
      if (p > 2) {
        if (!strictly_dominates(d0, d1)) mismatch(ctx + ": D does not prec D'");
      } else if (key_d0 != key_d1) {
        mismatch(ctx + ": expected D(2,q) and D'(1,q-1) to coincide");
      }
      // Cited result: D' strictly dominated by every other tree in the class.
      for (size_t i = 0; i < cls.graphs.size(); ++i) {
        const std::string& k = cls.keys[i];
        if (k == key_d0 || k == key_d1) continue;
        if (!strictly_dominates(d1, cls.graphs[i]))
          mismatch(ctx + ": D' does not prec " + one_line_edges(cls.graphs[i]));
      }
      // Conjectured extension: insert D'' between D' and the rest.
      if (q > p && p > 2) {
        Graph d2 = build(family::DDoublePrime{p, q});
        if (!strictly_dominates(d1, d2))
          conjecture_gap(ctx + ": D' does not strictly prec D''");
        std::string key_d2 = canon_key(d2);
        for (size_t i = 0; i < cls.graphs.size(); ++i) {
          const std::string& k = cls.keys[i];
          if (k == key_d0 || k == key_d1 || k == key_d2) continue;
          if (!strictly_dominates(d2, cls.graphs[i]))
            conjecture_gap(ctx + ": D'' does not prec " +
                           one_line_edges(cls.graphs[i]));
        }
        add_min(print_family(family::DDoublePrime{p, q}),
                laplacian_permanent(d2));
      }
    }
    conjecture_summary("D prec D' prec D'' prec T");
    // The permanent/coefficient non-monotonicity exhibit: the broom beats
    // the caterpillar on the permanent while losing on coefficients.
    for (int d = 5; d <= n_ - 2; ++d) {
      if (d / 2 == 2) continue;
      Graph broom = build(family::Broom{n_, d, 2});
      Graph cat = build(family::Caterpillar{n_, d});
      Int per_broom = laplacian_permanent(broom);
      Int per_cat = laplacian_permanent(cat);
      if (!(per_broom < per_cat))
        mismatch("R1 exhibit d=" + std::to_string(d) +
                 ": per L(T_{n,d,2}) !< per L(T_{n,d,floor(d/2)})");
      if (!dominates(cat, broom))
        mismatch("R1 exhibit d=" + std::to_string(d) +
                 ": caterpillar coefficients do not dominate the broom's");
      report_.notes.push_back(
          "exhibit d=" + std::to_string(d) + ": per broom " +
          per_broom.get_str() + " < per caterpillar " + per_cat.get_str() +
          ", caterpillar minimizes the coefficients of the pair");
    }
  }

  void r3() {
    report_.notes.push_back(
        "dominance chain observed at this n only; no proof is claimed");
    bool any = false;
    for (int p = 4; 2 * p <= n_; ++p) {
      int q = n_ - p;
      if (q <= p) continue;
      any = true;
      RankedClass cls = unicyclic_class(p, q);
      report_.class_size += cls.size();
      std::string ctx = "R3 (p,q)=(" + std::to_string(p) + "," +
                        std::to_string(q) + ")";
      Graph b = build(family::BPQ{p, q});
      Graph a2 = build(*formula_family({FormulaId::Kind::C4SecondA, p, q}));
      Graph a3 = build(*formula_family({FormulaId::Kind::C4SecondB, p, q}));
      // The whole unicyclic chain is only hoped for in the source, so every
      // link is observational.
      if (!strictly_dominates(b, a2))
        conjecture_gap(ctx + ": B does not prec 2nd");
      if (!strictly_dominates(a2, a3))
        conjecture_gap(ctx + ": 2nd does not prec 3rd");
      std::string kb = canon_key(b), k2 = canon_key(a2), k3 = canon_key(a3);
      for (size_t i = 0; i < cls.graphs.size(); ++i) {
        const std::string& k = cls.keys[i];
        if (k == kb || k == k2 || k == k3) continue;
        if (!strictly_dominates(a3, cls.graphs[i]))
          conjecture_gap(ctx + ": 3rd does not prec " +
                         one_line_edges(cls.graphs[i]));
      }
      add_min(print_family(family::BPQ{p, q}), laplacian_permanent(b));
    }
    conjecture_summary("B prec C4(...) prec C4(...) prec G");
    if (!any) {
      report_.status = VerifyStatus::Inapplicable;
      report_.notes.push_back("no (p,q) with q > p >= 4 at this n");
    }
  }

  TheoremId id_;
  int n_;
  VerificationReport report_;
  size_t conjecture_failures_ = 0;
};

}  // namespace

VerificationReport verify_theorem(TheoremId id, int n) {
  return Verifier(id, n).run();
}

}  // namespace laperm
