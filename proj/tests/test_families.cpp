#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "laperm/families.hpp"
#include "laperm/graph.hpp"

using namespace laperm;
using namespace laperm::family;

namespace {

int count_edges(const FamilySpec& s) { return build(s).edge_count(); }

}  // namespace

TEST_CASE("orders and edge counts") {
  CHECK(build(Path{7}).vertex_count() == 7);
  CHECK(count_edges(Path{7}) == 6);
  CHECK(build(Star{9}).vertex_count() == 9);
  CHECK(build(Cycle{8}).edge_count() == 8);
  CHECK(build(DoubleStar{3, 5}).vertex_count() == 8);
  CHECK(build(DPrime{3, 5}).vertex_count() == 8);
  CHECK(build(DDoublePrime{3, 5}).vertex_count() == 8);
  CHECK(build(TEndAttach{9, 3, 2}).vertex_count() == 9);
  CHECK(build(Broom{9, 4, 2}).vertex_count() == 9);
  CHECK(build(MatchingTree{8, 3}).vertex_count() == 8);
  CHECK(build(BPQ{3, 6}).vertex_count() == 9);
  CHECK(build(BPQ{3, 6}).edge_count() == 9);
  CHECK(build(C4Family{{2, 1, 0, 0}, {0, 3, 0, 0}}).vertex_count() == 10);
  CHECK(build(G1{4, 5}).vertex_count() == 9);
  CHECK(build(G2{4, 5}).vertex_count() == 9);
  for (int i = 1; i <= 8; ++i) CHECK(build(GHat{i, 10}).vertex_count() == 10);
}

TEST_CASE("structural identities between families") {
  CHECK(canonical_form(build(DoubleStar{2, 2})) ==
        canonical_form(build(Path{4})));
  CHECK(canonical_form(build(DoubleStar{1, 5})) ==
        canonical_form(build(Star{6})));
  CHECK(canonical_form(build(TEndAttach{8, 2, 2})) ==
        canonical_form(build(DoubleStar{3, 5})));
  CHECK(canonical_form(build(Caterpillar{9, 6})) ==
        canonical_form(build(Broom{9, 6, 3})));
  CHECK(canonical_form(build(BPQ{2, 2})) == canonical_form(build(Cycle{4})));
  CHECK(canonical_form(build(BPQ{3, 5})) ==
        canonical_form(build(C4Family{{1, 3, 0, 0}, {0, 0, 0, 0}})));
  // broom with the full path is just the path
  CHECK(canonical_form(build(Broom{6, 5, 2})) ==
        canonical_form(build(Path{6})));
}

TEST_CASE("C4 notation: stars versus pendants") {
  // 1^0 2 at v1 = star on 2 vertices hung off v1 (center + 1 leaf)
  Graph g = build(C4Family{{0, 0, 0, 0}, {2, 0, 0, 0}});
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  CHECK(diameter(g) == 4);
  // 1^2 0 at v1 = two pendants
  Graph h = build(C4Family{{2, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK(h.vertex_count() == 6);
  CHECK(diameter(h) == 3);
}

TEST_CASE("families classify as expected") {
  CHECK(classify(build(DPrime{4, 6})) == GraphKind::Tree);
  CHECK(classify(build(Broom{10, 5, 3})) == GraphKind::Tree);
  CHECK(classify(build(BPQ{4, 6})) == GraphKind::Unicyclic);
  CHECK(classify(build(G1{5, 5})) == GraphKind::Unicyclic);
  for (int i = 1; i <= 8; ++i)
    CHECK(classify(build(GHat{i, 11})) == GraphKind::Unicyclic);
}

TEST_CASE("G-hat graphs are pairwise non-isomorphic") {
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      CHECK(canonical_form(build(GHat{i, 11})) !=
            canonical_form(build(GHat{j, 11})));
}

TEST_CASE("invalid parameters are rejected with the constraint named") {
  CHECK_THROWS_AS(build(Path{0}), InvalidParameters);
  CHECK_THROWS_AS(build(DoubleStar{0, 3}), InvalidParameters);
  CHECK_THROWS_AS(build(Broom{5, 6, 2}), InvalidParameters);
  CHECK_THROWS_AS(build(Broom{9, 4, 7}), InvalidParameters);
  CHECK_THROWS_AS(build(BPQ{1, 5}), InvalidParameters);
  CHECK_THROWS_AS(build(GHat{9, 10}), InvalidParameters);
  CHECK_THROWS_AS(build(C4Family{{-1, 0, 0, 0}, {0, 0, 0, 0}}),
                  InvalidParameters);
}

TEST_CASE("vertex roles point at the documented labels") {
  auto roles = vertex_roles(FamilySpec{DoubleStar{3, 5}});
  Graph g = build(DoubleStar{3, 5});
  CHECK(g.has_edge(roles.at("v"), roles.at("w")));
  CHECK(g.degree(roles.at("v")) == 3);
  CHECK(g.degree(roles.at("w")) == 5);
  auto broom = vertex_roles(FamilySpec{Broom{9, 4, 2}});
  Graph b = build(Broom{9, 4, 2});
  CHECK(b.degree(broom.at("v2")) == 6);
}

TEST_CASE("parse and print round-trip") {
  const char* specs[] = {"P(7)",
                         "S(5)",
                         "C(8)",
                         "D(3,5)",
                         "Dprime(3,5)",
                         "Ddprime(4,6)",
                         "B(3,7)",
                         "G1(4,5)",
                         "G2(4,5)",
                         "T(n=9,d=4,i=2)",
                         "Cat(n=11,d=6)",
                         "Tend(n=9,k=3,a=2)",
                         "T2(n=10,r=2,s=3)",
                         "Tm(n=8,m=3)",
                         "Ghat(4,n=12)",
                         "C4(1^2 0, 1^0 2, 1^0 0, 1^1 0)"};
  for (const char* s : specs) {
    FamilySpec spec = parse_family(s);
    CHECK(parse_family(print_family(spec)) == spec);
    CHECK_NOTHROW(build(spec));
  }
  CHECK_THROWS_AS(parse_family("Z(3)"), ParseError);
  CHECK_THROWS_AS(parse_family("D(3,5) x"), ParseError);
  CHECK_THROWS_AS(parse_family("C4(1^2 0)"), ParseError);
}
