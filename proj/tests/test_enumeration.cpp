#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "laperm/enumeration.hpp"
#include "laperm/graph.hpp"
#include "laperm/transforms.hpp"

using namespace laperm;

namespace {

std::string key(const Graph& g) {
  auto form = canonical_form(g);
  return std::string(form.begin(), form.end());
}

std::set<std::string> key_set(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const Graph& g : gs) out.insert(key(g));
  return out;
}

}  // namespace

TEST_CASE("free tree counts match the known sequence") {
  const long long expected[] = {0,  1,  1,   1,   2,   3,   6,  11,
                                23, 47, 106, 235, 551, 1301};
  for (int n = 1; n <= 13; ++n) {
    CHECK(static_cast<long long>(free_trees(n).size()) == expected[n]);
  }
}

TEST_CASE("free trees agree with the Pruefer-decode oracle for n <= 9") {
  for (int n = 3; n <= 9; ++n) {
    std::vector<Graph> fast = free_trees(n);
    std::vector<Graph> oracle = trees_via_pruefer(n);
    CHECK(fast.size() == oracle.size());
    CHECK(key_set(fast) == key_set(oracle));
    // No duplicates in either list.
    CHECK(key_set(fast).size() == fast.size());
  }
}

TEST_CASE("every enumerated tree is a tree on n vertices") {
  for (int n = 2; n <= 10; ++n) {
    for (const Graph& g : free_trees(n)) {
      CHECK(g.vertex_count() == n);
      CHECK(classify(g) == GraphKind::Tree);
    }
  }
}

TEST_CASE("bipartite unicyclic enumeration") {
  ClassQuery q{ClassKind::BipartiteUnicyclic, 4, {}, {}, {}};
  std::vector<Graph> u4 = enumerate_class(q);
  REQUIRE(u4.size() == 1);
  CHECK(key(u4[0]) == key(build(family::Cycle{4})));

  for (int n = 5; n <= 10; ++n) {
    ClassQuery qn{ClassKind::BipartiteUnicyclic, n, {}, {}, {}};
    std::vector<Graph> cls = enumerate_class(qn);
    CHECK(key_set(cls).size() == cls.size());
    for (const Graph& g : cls) {
      CHECK(g.vertex_count() == n);
      CHECK(g.edge_count() == n);
      CHECK(classify(g) == GraphKind::Unicyclic);
      auto bp = bipartition(g);
      REQUIRE(bp.has_value());
      CHECK(unique_cycle(g).size() % 2 == 0);
    }
  }
}

TEST_CASE("bipartition filter partitions the tree class") {
  for (int n = 5; n <= 10; ++n) {
    size_t total = 0;
    for (int p = 1; 2 * p <= n; ++p) {
      ClassQuery q{ClassKind::Trees, n, std::make_pair(p, n - p), {}, {}};
      std::vector<Graph> cls = enumerate_class(q);
      for (const Graph& g : cls) {
        auto bp = bipartition(g);
        REQUIRE(bp.has_value());
        CHECK(bp->p == p);
      }
      total += cls.size();
    }
    CHECK(total == free_trees(n).size());
  }
}

TEST_CASE("small filtered classes are exactly as expected") {
  // Trees on 5 vertices with a (2,3) bipartition: the double star and P5.
  ClassQuery q{ClassKind::Trees, 5, std::make_pair(2, 3), {}, {}};
  std::vector<Graph> cls = enumerate_class(q);
  REQUIRE(cls.size() == 2);
  std::set<std::string> got = key_set(cls);
  std::set<std::string> want{key(build(family::DoubleStar{2, 3})),
                             key(build(family::Path{5}))};
  CHECK(got == want);
}

TEST_CASE("diameter and matching filters") {
  for (int n = 6; n <= 9; ++n) {
    for (int d = 2; d < n; ++d) {
      ClassQuery q{ClassKind::Trees, n, {}, d, {}};
      size_t count = 0;
      for (const Graph& g : enumerate_class(q)) {
        CHECK(diameter(g) >= d);
        ++count;
      }
      // Cross-check against the unfiltered class.
      size_t direct = 0;
      for (const Graph& g : free_trees(n))
        if (diameter(g) >= d) ++direct;
      CHECK(count == direct);
    }
    for (int m = 1; 2 * m <= n; ++m) {
      ClassQuery q{ClassKind::Trees, n, {}, {}, m};
      for (const Graph& g : enumerate_class(q))
        CHECK(matching_number(g) == m);
    }
  }
}

TEST_CASE("rank_by_permanent is deterministic and sorted") {
  ClassQuery q{ClassKind::Trees, 9, {}, {}, {}};
  RankedResult a = rank_by_permanent(q, 5);
  RankedResult b = rank_by_permanent(q, 5);
  REQUIRE(a.entries.size() == 5);
  CHECK(a.class_size == 47);
  for (size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].value == b.entries[i].value);
    CHECK(key(a.entries[i].graph) == key(b.entries[i].graph));
    if (i > 0) CHECK(a.entries[i - 1].value <= a.entries[i].value);
  }
}

TEST_CASE("bottom three of the (3,5) tree class") {
  ClassQuery q{ClassKind::Trees, 8, std::make_pair(3, 5), {}, {}};
  RankedResult r = rank_by_permanent(q, 3);
  REQUIRE(r.entries.size() == 3);
  REQUIRE(r.entries[0].family.has_value());
  REQUIRE(r.entries[1].family.has_value());
  REQUIRE(r.entries[2].family.has_value());
  CHECK(print_family(*r.entries[0].family) == "D(3,5)");
  CHECK(print_family(*r.entries[1].family) == "Dprime(3,5)");
  CHECK(print_family(*r.entries[2].family) == "Ddprime(3,5)");
  CHECK(r.entries[0].value == 46);
}

TEST_CASE("family recognition labels built graphs and leaves others alone") {
  auto expect = [](const FamilySpec& spec) {
    auto got = recognize_family(build(spec));
    REQUIRE(got.has_value());
    CHECK(key(build(*got)) == key(build(spec)));
  };
  expect(family::Path{7});
  expect(family::Star{6});
  expect(family::Cycle{8});
  expect(family::DoubleStar{3, 5});
  expect(family::Broom{9, 5, 2});
  expect(family::BPQ{3, 6});
  expect(family::G1{4, 5});
  // A tree that matches no named family.
  Graph g(8);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(2, 5);
  g.add_edge(5, 6);
  g.add_edge(1, 7);
  CHECK(!recognize_family(g).has_value());
}

TEST_CASE("verify_theorem report shape") {
  VerificationReport r = verify_theorem(TheoremId::T39, 6);
  CHECK(r.theorem == "T39");
  CHECK(r.status == VerifyStatus::Confirmed);
  CHECK(r.mismatches.empty());
  REQUIRE(r.minimizers.size() >= 3);
  CHECK(r.minimizers[0].family == "B(2,4)");
  CHECK(r.minimizers[0].value == 84);

  nlohmann::json j = r.to_json();
  CHECK(j["theorem"] == "T39");
  CHECK(j["status"] == "Confirmed");
  CHECK(j["class_size"].is_number());
  REQUIRE(j["minimizers"].is_array());
  CHECK(j["minimizers"][0]["value"] == "84");
  CHECK(r.text().find("Confirmed") != std::string::npos);
}

TEST_CASE("theorem id round trip") {
  for (auto id : {TheoremId::T32, TheoremId::T33, TheoremId::T36,
                  TheoremId::T37, TheoremId::T38, TheoremId::T39,
                  TheoremId::L34, TheoremId::R1, TheoremId::R3}) {
    CHECK(parse_theorem(theorem_name(id)) == id);
  }
  CHECK_THROWS_AS(parse_theorem("T99"), Error);
}

TEST_CASE("all theorem branches confirmed at a small order") {
  for (auto id : {TheoremId::T32, TheoremId::T33, TheoremId::T36,
                  TheoremId::T37, TheoremId::T39, TheoremId::L34,
                  TheoremId::R1}) {
    VerificationReport r = verify_theorem(id, 8);
    CHECK(r.status == VerifyStatus::Confirmed);
    CHECK(r.mismatches.empty());
  }
  // T38(iii) needs q > p >= 4, so n = 9 is the first applicable order;
  // R3 likewise.
  CHECK(verify_theorem(TheoremId::T38, 9).status == VerifyStatus::Confirmed);
  CHECK(verify_theorem(TheoremId::R3, 9).status == VerifyStatus::Confirmed);
  CHECK(verify_theorem(TheoremId::R3, 8).status == VerifyStatus::Inapplicable);
}

TEST_CASE("enumeration respects size bounds") {
  ClassQuery q{ClassKind::Trees, 100, {}, {}, {}};
  CHECK_THROWS_AS(enumerate_class(q), SizeBound);
  ClassQuery u{ClassKind::BipartiteUnicyclic, 100, {}, {}, {}};
  CHECK_THROWS_AS(enumerate_class(u), SizeBound);
}
