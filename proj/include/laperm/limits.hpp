#ifndef LAPERM_LIMITS_HPP
#define LAPERM_LIMITS_HPP

namespace laperm {

// Size bounds. LAPERM_MAX_N raises the structural bounds (canonical form,
// characteristic polynomial, enumeration); Ryser's order cap moves with it
// when the override exceeds the default.
struct Limits {
  int canon_max_n = 16;
  int char_poly_max_n = 16;
  int ryser_max_order = 28;
  int trees_max_n = 16;
  int unicyclic_max_n = 13;
  int matching_max_n = 20;
};

const Limits& limits();

}  // namespace laperm

#endif
