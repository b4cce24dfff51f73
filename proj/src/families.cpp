#include "laperm/families.hpp"

#include <cctype>
#include <sstream>

namespace laperm {

namespace {

using namespace family;

void require(bool ok, const std::string& constraint) {
  if (!ok) throw InvalidParameters(constraint);
}

// Labeling: path vertices 0..n-1 in order.
Graph build_path(int n) {
  require(n >= 1, "Path: n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Labeling: center 0, leaves 1..n-1.
Graph build_star(int n) {
  require(n >= 1, "Star: n >= 1");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph build_cycle(int n) {
  require(n >= 3, "Cycle: n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Labeling: v=0, w=1; pendants of v are 2..p, pendants of w are p+1..n-1.
Graph build_double_star(int p, int q) {
  require(p >= 1 && q >= 1, "DoubleStar: p,q >= 1");
  int n = p + q;
  Graph g(n);
  g.add_edge(0, 1);
  for (int i = 0; i < p - 1; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < q - 1; ++i) g.add_edge(1, p + 1 + i);
  return g;
}

// Labeling: D(p-1,q-1) as above on 0..p+q-3, then path w-a-b with
// a=n-2, b=n-1 (at v for the double-prime variant).
Graph build_dprime(int p, int q, bool at_v) {
  require(p >= 2 && q >= 2, "DPrime/DDoublePrime: p,q >= 2");
  Graph g = build_double_star(p - 1, q - 1);
  int n = p + q;
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  int anchor = at_v ? 0 : 1;
  out.add_edge(anchor, n - 2);
  out.add_edge(n - 2, n - 1);
  return out;
}

// Labeling: path 0..k-1; a pendants at 0 labeled k..k+a-1; the rest at k-1.
Graph build_end_attach(int n, int k, int a) {
  require(k >= 2, "TEndAttach: k >= 2");
  require(a >= 0 && n - k - a >= 0, "TEndAttach: 0 <= a and a <= n-k");
  Graph g = build_path(k);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int i = 0; i < a; ++i) out.add_edge(0, k + i);
  for (int i = 0; i < n - k - a; ++i) out.add_edge(k - 1, k + a + i);
  return out;
}

// Labeling: path v_1..v_{d+1} = 0..d; pendants d+1..n-1 at v_i = i-1.
Graph build_broom(int n, int d, int i) {
  require(d >= 1, "Broom: d >= 1");
  require(n >= d + 1, "Broom: n >= d+1");
  if (n > d + 1) require(i >= 2 && i <= d, "Broom: 2 <= i <= d");
  Graph out(n);
  for (int j = 0; j < d; ++j) out.add_edge(j, j + 1);
  for (int j = d + 1; j < n; ++j) out.add_edge(i - 1, j);
  return out;
}

// Labeling: star center 0, non-central 1..n-m; pendants n-m+1..n-1 attached
// to 1..m-1 in order.
Graph build_matching_tree(int n, int m) {
  require(m >= 1, "MatchingTree: m >= 1");
  require(2 * m <= n, "MatchingTree: m <= n/2");
  Graph g(n);
  for (int i = 1; i <= n - m; ++i) g.add_edge(0, i);
  for (int i = 1; i < m; ++i) g.add_edge(i, n - m + i);
  return g;
}

// Labeling: cycle v1..v4 = 0..3; per corner, s_i pendants then the star
// center and its k_i - 1 leaves, in corner order.
Graph build_c4(const C4Family& f) {
  int n = 4;
  for (int i = 0; i < 4; ++i) {
    require(f.s[i] >= 0, "C4Family: s_i >= 0");
    require(f.k[i] >= 0, "C4Family: k_i >= 0");
    n += f.s[i] + (f.k[i] >= 1 ? f.k[i] : 0);
  }
  Graph g(n);
  for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
  int next = 4;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < f.s[i]; ++j) g.add_edge(i, next++);
    if (f.k[i] >= 1) {
      int center = next++;
      g.add_edge(i, center);
      for (int j = 0; j < f.k[i] - 1; ++j) g.add_edge(center, next++);
    }
  }
  return g;
}

// Labeling: hexagon 0..5; q-3 pendants at v0=0, then p-3 pendants at
// u0 = 3 (antipodal) for G1, u0 = 1 (adjacent) for G2.
Graph build_hex(int p, int q, bool antipodal) {
  require(p >= 3 && q >= 3, "G1/G2: p,q >= 3");
  int n = p + q;
  Graph g(n);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  int next = 6;
  for (int j = 0; j < q - 3; ++j) g.add_edge(0, next++);
  int u0 = antipodal ? 3 : 1;
  for (int j = 0; j < p - 3; ++j) g.add_edge(u0, next++);
  return g;
}

// The Fig. 8 reconstructions; engine permanents reproduce the displayed
// linear forms 72n-276 (1), 76n-352 (2), 168n-804 (3), 112n-516 (4),
// 96n-420 (5), 120n-580 (6), 216n-1140 (7). Ghat 8 has no displayed form.
Graph build_ghat(int index, int n) {
  require(index >= 1 && index <= 8, "GHat: index in 1..8");
  require(n >= 8, "GHat: n >= 8");
  switch (index) {
    case 1:
      return build_c4({{n - 6, 0, 0, 0}, {2, 0, 0, 0}});
    case 2:
      return build_c4({{n - 6, 1, 1, 0}, {0, 0, 0, 0}});
    case 3: {
      // n-7 pendants at v1 plus a pendant path on 3 vertices at v1.
      Graph g = build_c4({{n - 7, 0, 0, 0}, {0, 0, 0, 0}});
      Graph out(n);
      for (auto [u, v] : g.edges()) out.add_edge(u, v);
      out.add_edge(0, n - 3);
      out.add_edge(n - 3, n - 2);
      out.add_edge(n - 2, n - 1);
      return out;
    }
    case 4:
      return build_c4({{n - 6, 0, 0, 0}, {0, 2, 0, 0}});
    case 5:
      return build_c4({{0, 0, 0, 0}, {n - 4, 0, 0, 0}});
    case 6:
      return build_c4({{n - 7, 0, 1, 0}, {2, 0, 0, 0}});
    case 7: {
      // Path v1-x-c with a star of n-6 leaves at c.
      Graph g = build_c4({{0, 0, 0, 0}, {0, 0, 0, 0}});
      Graph out(n);
      for (auto [u, v] : g.edges()) out.add_edge(u, v);
      out.add_edge(0, 4);
      out.add_edge(4, 5);
      for (int j = 6; j < n; ++j) out.add_edge(5, j);
      return out;
    }
    default:
      return build_c4({{n - 6, 0, 0, 0}, {0, 0, 2, 0}});
  }
}

struct Builder {
  Graph operator()(const Path& f) { return build_path(f.n); }
  Graph operator()(const Star& f) { return build_star(f.n); }
  Graph operator()(const Cycle& f) { return build_cycle(f.n); }
  Graph operator()(const DoubleStar& f) { return build_double_star(f.p, f.q); }
  Graph operator()(const DPrime& f) { return build_dprime(f.p, f.q, false); }
  Graph operator()(const DDoublePrime& f) { return build_dprime(f.p, f.q, true); }
  Graph operator()(const TEndAttach& f) { return build_end_attach(f.n, f.k, f.a); }
  Graph operator()(const Broom& f) { return build_broom(f.n, f.d, f.i); }
  Graph operator()(const Caterpillar& f) {
    require(f.d >= 4, "Caterpillar: d >= 4");
    return build_broom(f.n, f.d, f.d / 2);
  }
  Graph operator()(const MatchingTree& f) { return build_matching_tree(f.n, f.m); }
  Graph operator()(const TwoCenter& f) {
    require(f.r >= 1, "TwoCenter: r >= 1");
    return build_end_attach(f.n, 2 * f.r, f.s);
  }
  Graph operator()(const BPQ& f) {
    require(f.p >= 2 && f.q >= 2, "BPQ: p,q >= 2");
    return build_c4({{f.p - 2, f.q - 2, 0, 0}, {0, 0, 0, 0}});
  }
  Graph operator()(const C4Family& f) { return build_c4(f); }
  Graph operator()(const G1& f) { return build_hex(f.p, f.q, true); }
  Graph operator()(const G2& f) { return build_hex(f.p, f.q, false); }
  Graph operator()(const GHat& f) { return build_ghat(f.index, f.n); }
};

}  // namespace

Graph build(const FamilySpec& spec) { return std::visit(Builder{}, spec); }

namespace {

struct Roles {
  std::map<std::string, int> operator()(const Path& f) {
    build_path(f.n);
    std::map<std::string, int> r;
    for (int i = 0; i < f.n; ++i) r["v" + std::to_string(i + 1)] = i;
    return r;
  }
  std::map<std::string, int> operator()(const Star& f) {
    build_star(f.n);
    return {{"center", 0}};
  }
  std::map<std::string, int> operator()(const Cycle& f) {
    build_cycle(f.n);
    std::map<std::string, int> r;
    for (int i = 0; i < f.n; ++i) r["v" + std::to_string(i + 1)] = i;
    return r;
  }
  std::map<std::string, int> operator()(const DoubleStar& f) {
    build_double_star(f.p, f.q);
    return {{"v", 0}, {"w", 1}};
  }
  std::map<std::string, int> operator()(const DPrime& f) {
    build_dprime(f.p, f.q, false);
    return {{"v", 0}, {"w", 1}};
  }
  std::map<std::string, int> operator()(const DDoublePrime& f) {
    build_dprime(f.p, f.q, true);
    return {{"v", 0}, {"w", 1}};
  }
  std::map<std::string, int> operator()(const TEndAttach& f) {
    build_end_attach(f.n, f.k, f.a);
    return {{"end1", 0}, {"end2", f.k - 1}};
  }
  std::map<std::string, int> operator()(const Broom& f) {
    build_broom(f.n, f.d, f.i);
    std::map<std::string, int> r;
    for (int j = 0; j <= f.d; ++j) r["v" + std::to_string(j + 1)] = j;
    return r;
  }
  std::map<std::string, int> operator()(const Caterpillar& f) {
    return (*this)(Broom{f.n, f.d, f.d / 2});
  }
  std::map<std::string, int> operator()(const MatchingTree& f) {
    build_matching_tree(f.n, f.m);
    return {{"center", 0}};
  }
  std::map<std::string, int> operator()(const TwoCenter& f) {
    build_end_attach(f.n, 2 * f.r, f.s);
    return {{"v0", 0}, {"u0", 2 * f.r - 1}};
  }
  std::map<std::string, int> operator()(const BPQ& f) {
    build_c4({{f.p - 2, f.q - 2, 0, 0}, {0, 0, 0, 0}});
    return {{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 3}};
  }
  std::map<std::string, int> operator()(const C4Family& f) {
    build_c4(f);
    return {{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 3}};
  }
  std::map<std::string, int> operator()(const G1& f) {
    build_hex(f.p, f.q, true);
    return {{"v0", 0}, {"u0", 3}};
  }
  std::map<std::string, int> operator()(const G2& f) {
    build_hex(f.p, f.q, false);
    return {{"v0", 0}, {"u0", 1}};
  }
  std::map<std::string, int> operator()(const GHat& f) {
    build_ghat(f.index, f.n);
    return {{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 3}};
  }
};

}  // namespace

std::map<std::string, int> vertex_roles(const FamilySpec& spec) {
  return std::visit(Roles{}, spec);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  FamilySpec parse() {
    std::string name = ident();
    skip_ws();
    expect('(');
    FamilySpec spec = body(name);
    expect(')');
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input in family spec");
    return spec;
  }

 private:
  FamilySpec body(const std::string& name) {
    if (name == "P") return Path{num()};
    if (name == "S") return Star{num()};
    if (name == "C") return Cycle{num()};
    if (name == "D") return pair<DoubleStar>();
    if (name == "Dprime") return pair<DPrime>();
    if (name == "Ddprime") return pair<DDoublePrime>();
    if (name == "B") return pair<BPQ>();
    if (name == "G1") return pair<G1>();
    if (name == "G2") return pair<G2>();
    if (name == "T") {
      int n = keyed("n");
      comma();
      int d = keyed("d");
      comma();
      int i = keyed("i");
      return Broom{n, d, i};
    }
    if (name == "Cat") {
      int n = keyed("n");
      comma();
      int d = keyed("d");
      return Caterpillar{n, d};
    }
    if (name == "Tend") {
      int n = keyed("n");
      comma();
      int k = keyed("k");
      comma();
      int a = keyed("a");
      return TEndAttach{n, k, a};
    }
    if (name == "T2") {
      int n = keyed("n");
      comma();
      int r = keyed("r");
      comma();
      int s = keyed("s");
      return TwoCenter{n, r, s};
    }
    if (name == "Tm") {
      int n = keyed("n");
      comma();
      int m = keyed("m");
      return MatchingTree{n, m};
    }
    if (name == "Ghat") {
      int index = num();
      comma();
      int n = keyed("n");
      return GHat{index, n};
    }
    if (name == "C4") {
      C4Family f{};
      for (int i = 0; i < 4; ++i) {
        if (i > 0) comma();
        skip_ws();
        expect('1');
        expect('^');
        f.s[i] = num();
        skip_ws();
        f.k[i] = num();
      }
      return f;
    }
    throw ParseError("unknown family `" + name + "`");
  }

  template <typename T>
  T pair() {
    int p = num();
    comma();
    int q = num();
    return T{p, q};
  }

  int keyed(const std::string& key) {
    skip_ws();
    std::string k = ident();
    if (k != key) throw ParseError("expected `" + key + "=`");
    expect('=');
    return num();
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(s_[pos_]) || s_[pos_] == '_')) {
      if (std::isdigit(s_[pos_]) && pos_ == start) break;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a name");
    return s_.substr(start, pos_ - start);
  }

  int num() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(s_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError("expected a number");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  void comma() {
    skip_ws();
    expect(',');
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(std::string("expected `") + c + "`");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(s_[pos_])) ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

struct Printer {
  std::string operator()(const Path& f) { return "P(" + std::to_string(f.n) + ")"; }
  std::string operator()(const Star& f) { return "S(" + std::to_string(f.n) + ")"; }
  std::string operator()(const Cycle& f) { return "C(" + std::to_string(f.n) + ")"; }
  std::string operator()(const DoubleStar& f) { return pq("D", f.p, f.q); }
  std::string operator()(const DPrime& f) { return pq("Dprime", f.p, f.q); }
  std::string operator()(const DDoublePrime& f) { return pq("Ddprime", f.p, f.q); }
  std::string operator()(const TEndAttach& f) {
    return "Tend(n=" + std::to_string(f.n) + ",k=" + std::to_string(f.k) +
           ",a=" + std::to_string(f.a) + ")";
  }
  std::string operator()(const Broom& f) {
    return "T(n=" + std::to_string(f.n) + ",d=" + std::to_string(f.d) +
           ",i=" + std::to_string(f.i) + ")";
  }
  std::string operator()(const Caterpillar& f) {
    return "Cat(n=" + std::to_string(f.n) + ",d=" + std::to_string(f.d) + ")";
  }
  std::string operator()(const MatchingTree& f) {
    return "Tm(n=" + std::to_string(f.n) + ",m=" + std::to_string(f.m) + ")";
  }
  std::string operator()(const TwoCenter& f) {
    return "T2(n=" + std::to_string(f.n) + ",r=" + std::to_string(f.r) +
           ",s=" + std::to_string(f.s) + ")";
  }
  std::string operator()(const BPQ& f) { return pq("B", f.p, f.q); }
  std::string operator()(const C4Family& f) {
    std::string out = "C4(";
    for (int i = 0; i < 4; ++i) {
      if (i > 0) out += ", ";
      out += "1^" + std::to_string(f.s[i]) + " " + std::to_string(f.k[i]);
    }
    return out + ")";
  }
  std::string operator()(const G1& f) { return pq("G1", f.p, f.q); }
  std::string operator()(const G2& f) { return pq("G2", f.p, f.q); }
  std::string operator()(const GHat& f) {
    return "Ghat(" + std::to_string(f.index) + ",n=" + std::to_string(f.n) + ")";
  }

  static std::string pq(const std::string& name, int p, int q) {
    return name + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

}  // namespace

FamilySpec parse_family(const std::string& text) { return SpecParser(text).parse(); }

std::string print_family(const FamilySpec& spec) {
  return std::visit(Printer{}, spec);
}

}  // namespace laperm
