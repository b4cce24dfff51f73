#include "laperm/limits.hpp"

#include <algorithm>
#include <cstdlib>

namespace laperm {

const Limits& limits() {
  static const Limits instance = [] {
    Limits l;
    if (const char* env = std::getenv("LAPERM_MAX_N")) {
      int n = std::atoi(env);
      if (n > 0) {
        l.canon_max_n = std::max(l.canon_max_n, n);
        l.char_poly_max_n = std::max(l.char_poly_max_n, n);
        l.trees_max_n = std::max(l.trees_max_n, n);
        l.unicyclic_max_n = std::max(l.unicyclic_max_n, n);
        l.ryser_max_order = std::max(l.ryser_max_order, n);
      }
    }
    return l;
  }();
  return instance;
}

}  // namespace laperm
