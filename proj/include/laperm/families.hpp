#ifndef LAPERM_FAMILIES_HPP
#define LAPERM_FAMILIES_HPP

#include <array>
#include <map>
#include <string>
#include <variant>

#include "laperm/graph.hpp"

namespace laperm {

// Named graph families. Constructors are deterministic: same spec, same
// labeled graph. Labelings are documented per constructor in families.cpp.
namespace family {

struct Path {
  int n;
  bool operator==(const Path&) const = default;
};
struct Star {
  int n;
  bool operator==(const Star&) const = default;
};
struct Cycle {
  int n;
  bool operator==(const Cycle&) const = default;
};
// Double star D(p,q): edge vw with p-1 pendants at v, q-1 at w; n = p+q.
struct DoubleStar {
  int p, q;
  bool operator==(const DoubleStar&) const = default;
};
// D'(p-1,q-1): D(p-1,q-1) plus a pendant path of length 2 at w; n = p+q.
struct DPrime {
  int p, q;
  bool operator==(const DPrime&) const = default;
};
// D''(p-1,q-1): as DPrime but the path hangs at v.
struct DDoublePrime {
  int p, q;
  bool operator==(const DDoublePrime&) const = default;
};
// T(n,k,a): path on k vertices with a pendants at one end, n-k-a at the other.
struct TEndAttach {
  int n, k, a;
  bool operator==(const TEndAttach&) const = default;
};
// T_{n,d,i}: path v_1..v_{d+1} with n-d-1 pendants at v_i. i=2 is the broom.
struct Broom {
  int n, d, i;
  bool operator==(const Broom&) const = default;
};
// T_{n,d,floor(d/2)}.
struct Caterpillar {
  int n, d;
  bool operator==(const Caterpillar&) const = default;
};
// T_{n,m}: star S_{n-m+1} with pendant edges on m-1 non-central vertices.
struct MatchingTree {
  int n, m;
  bool operator==(const MatchingTree&) const = default;
};
// T(n,2r,s): path on 2r vertices with s and n-2r-s end pendants.
struct TwoCenter {
  int n, r, s;
  bool operator==(const TwoCenter&) const = default;
};
// B(p,q) = C4 with p-2 pendants at v1, q-2 at v2.
struct BPQ {
  int p, q;
  bool operator==(const BPQ&) const = default;
};
// C4(1^{s1}k1, 1^{s2}k2, 1^{s3}k3, 1^{s4}k4): cycle v1v2v3v4; s_i pendants
// at v_i; for k_i >= 1 a star center adjacent to v_i carrying k_i - 1 leaves.
struct C4Family {
  std::array<int, 4> s;
  std::array<int, 4> k;
  bool operator==(const C4Family&) const = default;
};
// Hexagon with q-3 pendants at v0 and p-3 pendants at the antipodal u0.
struct G1 {
  int p, q;
  bool operator==(const G1&) const = default;
};
// Hexagon with q-3 pendants at v0 and p-3 pendants at the adjacent u0.
struct G2 {
  int p, q;
  bool operator==(const G2&) const = default;
};
// The eight 4-cycle graphs adjacent to B(3,n-3) under one grafting move.
struct GHat {
  int index;  // 1..8
  int n;
  bool operator==(const GHat&) const = default;
};

}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Star, family::Cycle, family::DoubleStar,
                 family::DPrime, family::DDoublePrime, family::TEndAttach,
                 family::Broom, family::Caterpillar, family::MatchingTree,
                 family::TwoCenter, family::BPQ, family::C4Family, family::G1,
                 family::G2, family::GHat>;

// Throws InvalidParameters naming the violated constraint.
Graph build(const FamilySpec& spec);

// Map from figure role names (v, w, v1..v4, v0, u0, ...) to labels.
std::map<std::string, int> vertex_roles(const FamilySpec& spec);

// Canonical text syntax, e.g. D(3,5), B(3,7), C4(1^2 0, 1^0 2, 1^0 0, 1^1 0),
// T(n=9,d=4,i=2), Ghat(4,n=12). parse/print round-trip.
FamilySpec parse_family(const std::string& text);
std::string print_family(const FamilySpec& spec);

}  // namespace laperm

#endif
