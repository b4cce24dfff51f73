#ifndef LAPERM_PERMANENT_HPP
#define LAPERM_PERMANENT_HPP

#include <gmpxx.h>

#include <vector>

#include "laperm/graph.hpp"

namespace laperm {

// All permanents, determinants and coefficients are exact; no floating
// point anywhere in results.
using Int = mpz_class;

struct SquareMatrix {
  int order = 0;
  std::vector<Int> entries;  // row-major, order*order

  SquareMatrix() = default;
  explicit SquareMatrix(int n) : order(n), entries(n * n, 0) {}

  Int& at(int i, int j) { return entries[i * order + j]; }
  const Int& at(int i, int j) const { return entries[i * order + j]; }
};

// Coefficients c_0..c_n of det(lambda I - L) written as
// sum (-1)^k c_k lambda^(n-k).
struct CharPoly {
  std::vector<Int> c;
  int order() const { return static_cast<int>(c.size()) - 1; }
};

SquareMatrix laplacian(const Graph& g);

// Definitional oracle: sum over all permutations. Order <= 9.
Int permanent_naive(const SquareMatrix& m);

// Ryser's inclusion-exclusion with Gray-code column-sum updates.
// Order <= ryser_max_order().
Int permanent_ryser(const SquareMatrix& m);
int ryser_max_order();

// Linear-time bottom-up permanent of a tree Laplacian; equals
// permanent_ryser(laplacian(g)) for any root. Throws NotATree.
Int tree_permanent(const Graph& g, int root = 0);

// Convenience dispatcher: tree recurrence when g is a tree, Ryser otherwise.
Int laplacian_permanent(const Graph& g);

// per Q_n where Q_n is L(P_{n+1}) with row/column 1 removed, via the
// integer recurrence q_n = 2 q_{n-1} + q_{n-2}, q_0 = q_1 = 1.
Int q_permanent(int n);

// The explicit matrix Q_n, for cross-checks.
SquareMatrix q_matrix(int n);

// Exact coefficients by Bareiss determinants of (xI - L) at n+1 integer
// points plus exact interpolation. n <= 16 (configurable).
CharPoly char_poly(const Graph& g);

// Bareiss fraction-free determinant, exact.
Int determinant(const SquareMatrix& m);

// Matrix-Tree count via a principal Laplacian minor. Throws
// DisconnectedInput, SizeBound.
Int spanning_tree_count(const Graph& g);

enum class Dominance {
  Equal,
  ADominated,          // a <= b coefficient-wise
  BDominated,          // b <= a coefficient-wise
  StrictlyADominated,  // a <= b everywhere, < somewhere (a "prec" b)
  StrictlyBDominated,
  Incomparable,
};

Dominance dominance_compare(const CharPoly& a, const CharPoly& b);

}  // namespace laperm

#endif
