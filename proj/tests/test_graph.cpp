#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "laperm/families.hpp"
#include "laperm/graph.hpp"

using namespace laperm;

namespace {

Graph path(int n) { return build(family::Path{n}); }
Graph star(int n) { return build(family::Star{n}); }
Graph cycle(int n) { return build(family::Cycle{n}); }

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("graph basics stay consistent") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.edge_count() == 2);
  g.remove_edge(1, 0);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.degree(1) == 1);
  CHECK_THROWS_AS(g.add_edge(0, 0), Error);
  CHECK_THROWS_AS(g.add_edge(0, 4), Error);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path(4)));
  CHECK(is_connected(Graph(1)));
  Graph two(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two));
}

TEST_CASE("classify") {
  CHECK(classify(cycle(6)) == GraphKind::Unicyclic);
  CHECK(classify(star(5)) == GraphKind::Tree);
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(classify(k4) == GraphKind::Other);
  CHECK_THROWS_AS(classify(Graph(3)), DisconnectedInput);
}

TEST_CASE("bipartition") {
  auto bp = bipartition(path(4));
  REQUIRE(bp.has_value());
  CHECK(bp->p == 2);
  CHECK(bp->q == 2);
  CHECK_FALSE(bipartition(cycle(5)).has_value());
  auto d23 = bipartition(build(family::DoubleStar{2, 3}));
  REQUIRE(d23.has_value());
  CHECK(d23->p == 2);
  CHECK(d23->q == 3);
  // every edge crosses the classes
  Graph g = build(family::BPQ{3, 5});
  auto b = bipartition(g);
  REQUIRE(b.has_value());
  std::vector<int> side(g.vertex_count(), -1);
  for (int v : b->class_a) side[v] = 0;
  for (int v : b->class_b) side[v] = 1;
  for (auto [u, v] : g.edges()) CHECK(side[u] != side[v]);
}

TEST_CASE("pendant vertices") {
  CHECK(pendant_vertices(star(5)).size() == 4);
  CHECK(pendant_vertices(cycle(4)).empty());
  CHECK(pendant_vertices(build(family::DoubleStar{2, 3})).size() == 3);
}

TEST_CASE("distance and diameter") {
  Graph p5 = path(5);
  CHECK(distance(p5, 0, 4) == 4);
  CHECK(diameter(p5) == 4);
  CHECK(diameter(star(6)) == 2);
  CHECK(diameter(build(family::Broom{9, 5, 2})) == 5);
  Graph two(3, {{0, 1}});
  CHECK(distance(two, 0, 2) == -1);
}

TEST_CASE("unique cycle") {
  auto c = unique_cycle(cycle(6));
  CHECK(c.size() == 6);
  auto b = unique_cycle(build(family::BPQ{2, 2}));
  CHECK(b.size() == 4);
  auto g1 = unique_cycle(build(family::G1{4, 4}));
  CHECK(g1.size() == 6);
  CHECK_THROWS_AS(unique_cycle(path(4)), NotUnicyclic);
}

TEST_CASE("canonical form equals exactly on isomorphic relabelings") {
  std::mt19937 rng(7);
  std::vector<Graph> graphs = {path(6),
                               star(7),
                               cycle(8),
                               build(family::BPQ{3, 5}),
                               build(family::DPrime{3, 5}),
                               build(family::G1{4, 5}),
                               build(family::GHat{3, 10})};
  for (const Graph& g : graphs) {
    auto base = canonical_form(g);
    for (int t = 0; t < 10; ++t) {
      Graph h = g.relabeled(random_perm(g.vertex_count(), rng));
      CHECK(canonical_form(h) == base);
    }
  }
  CHECK(canonical_form(path(4)) != canonical_form(star(4)));
  // same degree sequence, different graphs
  Graph a(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  Graph b(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(canonical_form(a) != canonical_form(b));
}

TEST_CASE("D-prime and D-double-prime coincide exactly when p = q") {
  CHECK(canonical_form(build(family::DPrime{3, 3})) ==
        canonical_form(build(family::DDoublePrime{3, 3})));
  CHECK(canonical_form(build(family::DPrime{3, 4})) !=
        canonical_form(build(family::DDoublePrime{3, 4})));
}

TEST_CASE("canonical form size bound") {
  CHECK_THROWS_AS(canonical_form(path(17), 16), SizeBound);
}

TEST_CASE("matching number") {
  CHECK(matching_number(path(4)) == 2);
  CHECK(matching_number(star(5)) == 1);
  CHECK(matching_number(build(family::MatchingTree{8, 3})) == 3);
  CHECK(matching_number(cycle(6)) == 3);
}

TEST_CASE("edge list round trip and errors") {
  Graph g = build(family::BPQ{3, 4});
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == g);
  std::istringstream bad("3\n0 1\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParseError);
}

TEST_CASE("graph6 reader") {
  // P4 in graph6 is "Cr" (n=3+... actually n=4, edges 01,12,23)
  Graph g = read_graph6("Ch");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  // decoded adjacency must be a path
  CHECK(canonical_form(g) == canonical_form(path(4)));
}
