#ifndef LAPERM_ENUMERATION_HPP
#define LAPERM_ENUMERATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "laperm/closed_forms.hpp"
#include "laperm/families.hpp"
#include "laperm/permanent.hpp"

namespace laperm {

enum class ClassKind { Trees, BipartiteUnicyclic };

struct ClassQuery {
  ClassKind kind = ClassKind::Trees;
  int n = 0;
  std::optional<std::pair<int, int>> bipartition;  // (p, q), p <= q
  std::optional<int> diameter_at_least;
  std::optional<int> matching_number;
};

// One labeled representative per isomorphism class, deterministic order.
// Trees come from canonical level-sequence generation with centroid-rooted
// canonical dedupe; unicyclic graphs add every even-cycle-creating non-edge
// to every tree and dedupe by canonical form. Throws SizeBound.
std::vector<Graph> enumerate_class(const ClassQuery& query);

// All free trees on n vertices (no filters).
std::vector<Graph> free_trees(int n);

// Independent oracle: decode every Pruefer sequence and dedupe. n <= 9.
std::vector<Graph> trees_via_pruefer(int n);

struct RankedEntry {
  Graph graph;
  Int value;
  std::optional<FamilySpec> family;
};

struct RankedResult {
  std::vector<RankedEntry> entries;  // bottom-k, values nondecreasing
  long long class_size = 0;
};

// Bottom-k by exact Laplacian permanent; ties broken by canonical-form
// bytes. Family labels come from canonical-form equality against built
// candidate specs, never structural heuristics.
RankedResult rank_by_permanent(const ClassQuery& query, int k);

std::optional<FamilySpec> recognize_family(const Graph& g);

enum class TheoremId { T32, T33, T36, T37, T38, T39, L34, R1, R3 };
TheoremId parse_theorem(const std::string& name);
std::string theorem_name(TheoremId id);

enum class VerifyStatus { Confirmed, Refuted, Inapplicable };
std::string status_name(VerifyStatus s);

struct VerificationReport {
  std::string theorem;
  std::map<std::string, std::string> params;
  VerifyStatus status = VerifyStatus::Confirmed;
  long long class_size = 0;
  struct Minimizer {
    std::string family;
    Int value;
  };
  std::vector<Minimizer> minimizers;
  std::vector<std::string> mismatches;  // Refuted carries the counterexamples
  std::vector<std::string> notes;       // observational output, never a claim

  nlohmann::json to_json() const;
  std::string text() const;
};

// Exhaustive check of one stated result at order n (L34: pure arithmetic,
// n <= 200; R1/R3 report observed dominance without asserting the
// conjectures). Throws SizeBound.
VerificationReport verify_theorem(TheoremId id, int n);

}  // namespace laperm

#endif
