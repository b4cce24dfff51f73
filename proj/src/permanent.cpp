#include "laperm/permanent.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "laperm/limits.hpp"

namespace laperm {

SquareMatrix laplacian(const Graph& g) {
  int n = g.vertex_count();
  SquareMatrix m(n);
  for (int v = 0; v < n; ++v) m.at(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    m.at(u, v) = -1;
    m.at(v, u) = -1;
  }
  return m;
}

Int permanent_naive(const SquareMatrix& m) {
  int n = m.order;
  if (n > 9) throw SizeBound("permanent_naive order " + std::to_string(n));
  if (n == 0) return 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    Int prod = 1;
    for (int i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

int ryser_max_order() { return limits().ryser_max_order; }

namespace {

bool fits_small(const SquareMatrix& m) {
  for (const Int& x : m.entries)
    if (!x.fits_sint_p() || std::abs(x.get_si()) > (1 << 20)) return false;
  return true;
}

// Fast path: 64-bit column sums (Gray-code single-column updates), products
// in __int128 with an exact magnitude guard, accumulation in mpz. Rows whose
// partial sum is zero are counted so zero products are skipped outright.
Int ryser_small(const SquareMatrix& m) {
  int n = m.order;
  std::vector<long long> a(m.entries.size());
  for (size_t i = 0; i < a.size(); ++i) a[i] = m.entries[i].get_si();
  std::vector<long long> row_sum(n, 0);
  int zero_rows = n;  // all sums start at 0
  Int total = 0;
  Int big;
  const unsigned __int128 guard = (unsigned __int128)1 << 120;
  unsigned long long prev_gray = 0;
  for (unsigned long long s = 1; s < (1ull << n); ++s) {
    unsigned long long gray = s ^ (s >> 1);
    unsigned long long diff = gray ^ prev_gray;
    int j = __builtin_ctzll(diff);
    long long sign = (gray & diff) ? 1 : -1;
    for (int i = 0; i < n; ++i) {
      long long before = row_sum[i];
      row_sum[i] += sign * a[i * n + j];
      zero_rows += (row_sum[i] == 0) - (before == 0);
    }
    prev_gray = gray;
    if (zero_rows > 0) continue;
    int bits = __builtin_popcountll(gray);
    int term_sign = ((n - bits) % 2 == 0) ? 1 : -1;
    unsigned __int128 mag = 1;
    bool neg = false, overflow = false;
    for (int i = 0; i < n; ++i) {
      long long v = row_sum[i];
      if (v < 0) {
        neg = !neg;
        v = -v;
      }
      if (mag > guard / (unsigned __int128)v) {
        overflow = true;
        break;
      }
      mag *= (unsigned __int128)v;
    }
    if (!overflow) {
      Int term;
      // import the 128-bit magnitude
      unsigned long long hi = (unsigned long long)(mag >> 64);
      unsigned long long lo = (unsigned long long)mag;
      term = static_cast<unsigned long>(hi);
      term <<= 64;
      term += static_cast<unsigned long>(lo);
      if (neg) term = -term;
      if (term_sign > 0)
        total += term;
      else
        total -= term;
    } else {
      big = 1;
      for (int i = 0; i < n; ++i) big *= Int(static_cast<long>(row_sum[i]));
      if (term_sign > 0)
        total += big;
      else
        total -= big;
    }
  }
  return total;
}

Int ryser_general(const SquareMatrix& m) {
  int n = m.order;
  std::vector<Int> row_sum(n, 0);
  Int total = 0;
  unsigned long long prev_gray = 0;
  for (unsigned long long s = 1; s < (1ull << n); ++s) {
    unsigned long long gray = s ^ (s >> 1);
    unsigned long long diff = gray ^ prev_gray;
    int j = __builtin_ctzll(diff);
    bool add = (gray & diff) != 0;
    for (int i = 0; i < n; ++i) {
      if (add)
        row_sum[i] += m.at(i, j);
      else
        row_sum[i] -= m.at(i, j);
    }
    prev_gray = gray;
    Int prod = 1;
    for (int i = 0; i < n; ++i) prod *= row_sum[i];
    int bits = __builtin_popcountll(gray);
    if ((n - bits) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

}  // namespace

Int permanent_ryser(const SquareMatrix& m) {
  int n = m.order;
  if (n > ryser_max_order())
    throw SizeBound("permanent_ryser order " + std::to_string(n));
  if (n == 0) return 1;
  return fits_small(m) ? ryser_small(m) : ryser_general(m);
}

Int tree_permanent(const Graph& g, int root) {
  if (classify(g) != GraphKind::Tree) throw NotATree();
  int n = g.vertex_count();
  if (root < 0 || root >= n) throw InvalidParameters("root out of range");
  // Iterative post-order; a_v = d_v * prod(a_c) + sum_c b_c * prod_{c'!=c} a_c',
  // b_v = prod(a_c), with degrees taken in the whole tree.
  std::vector<int> order, parent(n, -1);
  order.reserve(n);
  std::vector<int> stack{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<Int> a(n), b(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    Int prod = 1, cross = 0;
    for (int w : g.neighbors(v)) {
      if (parent[w] != v) continue;
      // cross accumulates sum_c b_c * prod of a over earlier children;
      // multiplying by later a_c keeps every term's product complete.
      cross = cross * a[w] + b[w] * prod;
      prod *= a[w];
    }
    b[v] = prod;
    a[v] = Int(g.degree(v)) * prod + cross;
  }
  return a[root];
}

Int laplacian_permanent(const Graph& g) {
  if (is_connected(g) && g.edge_count() == g.vertex_count() - 1 &&
      g.vertex_count() > 0)
    return tree_permanent(g, 0);
  return permanent_ryser(laplacian(g));
}

Int q_permanent(int n) {
  if (n < 0) throw InvalidParameters("q_permanent needs n >= 0");
  Int prev = 1, cur = 1;  // q_0 = q_1 = 1
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    Int next = 2 * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

SquareMatrix q_matrix(int n) {
  if (n < 0) throw InvalidParameters("q_matrix needs n >= 0");
  // L(P_{n+1}) with row/column 1 removed: tridiagonal, diagonal 2..2,1.
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = (i == n - 1) ? 1 : 2;
  for (int i = 0; i + 1 < n; ++i) {
    m.at(i, i + 1) = -1;
    m.at(i + 1, i) = -1;
  }
  return m;
}

Int determinant(const SquareMatrix& m) {
  int n = m.order;
  if (n == 0) return 1;
  SquareMatrix w = m;
  Int prev_pivot = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev_pivot.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev_pivot = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

CharPoly char_poly(const Graph& g) {
  int n = g.vertex_count();
  if (n > limits().char_poly_max_n)
    throw SizeBound("char_poly order " + std::to_string(n));
  SquareMatrix lap = laplacian(g);
  // Evaluate det(xI - L) at x = 0..n, then Lagrange-interpolate exactly.
  std::vector<Int> values(n + 1);
  for (int x = 0; x <= n; ++x) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = (i == j ? Int(x) : Int(0)) - lap.at(i, j);
    values[x] = determinant(m);
  }
  // poly[j] holds the coefficient of lambda^j, assembled over rationals.
  std::vector<mpq_class> poly(n + 1, 0);
  for (int x = 0; x <= n; ++x) {
    // Basis polynomial prod_{y != x} (lambda - y) / (x - y).
    std::vector<Int> basis{1};
    Int denom = 1;
    for (int y = 0; y <= n; ++y) {
      if (y == x) continue;
      basis.insert(basis.begin(), 0);
      for (size_t j = 0; j + 1 < basis.size(); ++j)
        basis[j] -= Int(y) * basis[j + 1];
      denom *= Int(x - y);
    }
    mpq_class scale(values[x], denom);
    scale.canonicalize();
    for (size_t j = 0; j < basis.size(); ++j)
      poly[j] += scale * mpq_class(basis[j]);
  }
  CharPoly cp;
  cp.c.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    mpq_class coeff = poly[n - k];  // coefficient of lambda^(n-k)
    coeff.canonicalize();
    if (coeff.get_den() != 1)
      throw Error("char_poly interpolation produced a non-integer");
    cp.c[k] = coeff.get_num();
    if (k % 2 == 1) cp.c[k] = -cp.c[k];  // (-1)^k c_k convention
  }
  return cp;
}

Int spanning_tree_count(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedInput();
  int n = g.vertex_count();
  if (n > limits().char_poly_max_n)
    throw SizeBound("spanning_tree_count order " + std::to_string(n));
  if (n <= 1) return 1;
  SquareMatrix lap = laplacian(g);
  SquareMatrix minor(n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) minor.at(i - 1, j - 1) = lap.at(i, j);
  return determinant(minor);
}

Dominance dominance_compare(const CharPoly& a, const CharPoly& b) {
  if (a.c.size() != b.c.size()) throw OrderMismatch();
  bool a_le = true, b_le = true, strict = false;
  for (size_t k = 0; k < a.c.size(); ++k) {
    if (a.c[k] < b.c[k]) b_le = false;
    if (a.c[k] > b.c[k]) a_le = false;
    if (a.c[k] != b.c[k]) strict = true;
  }
  if (a_le && b_le) return Dominance::Equal;
  if (a_le) return strict ? Dominance::StrictlyADominated : Dominance::ADominated;
  if (b_le) return strict ? Dominance::StrictlyBDominated : Dominance::BDominated;
  return Dominance::Incomparable;
}

}  // namespace laperm
