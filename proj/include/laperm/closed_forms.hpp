#ifndef LAPERM_CLOSED_FORMS_HPP
#define LAPERM_CLOSED_FORMS_HPP

#include <optional>
#include <string>
#include <utility>

#include "laperm/families.hpp"
#include "laperm/permanent.hpp"

namespace laperm {

// Every displayed permanent formula, keyed by id. Irrational-looking closed
// forms are reduced to the Pell-type integer recurrences
//   q_n = 2 q_{n-1} + q_{n-2},  q_0 = q_1 = 1
//   s_n = 2 s_{n-1} + s_{n-2},  s_0 = 0, s_1 = 1
// so no floating point appears anywhere.
struct FormulaId {
  enum class Kind {
    StarLowerBound,   // 2(n-1)
    PathPermanent,    // per L(P_n) = 2(q_n - s_n)
    QPermanent,       // per Q_n
    PellS,            // s_n
    DStar,            // (2p-1)(2q-1)+1
    DPrime,           // (2p-3)(6q-5)+3
    DDoublePrime,     // (2q-3)(6p-5)+3
    T3i,              // per L(T(n,3,i)) = -8i^2+8i(n-3)+6n-14
    Broom,            // per L(T_{n,d,2}) = 2(n-d) q_{d-1} + 2 s_{d-1}
    BroomGeneral,     // per L(P_{d+1}) + 2(n-d-1) q_{i-1} q_{d-i+1}
    BPQ,              // 20(p-1)(q-1)+4n
    G1,               // 100(p-2)(q-2)+40n-140
    C4Quad,           // -16i^2+16i(n-4)+24n-60
    C4SecondA,        // 36pq-32n-32q+68
    C4SecondB,        // 36pq-32n-32p+68
    C4SecondC,        // 60pq-68n-40q+144
    C4SecondD,        // 60pq-68n-40p+144
    C4SecondE,        // 48pq-72n+24p+84
    C4SecondF,        // 48pq-72n+24q+84
    C4ThirdB,         // 108pq-24q-204n+464
    C4ThirdC,         // 108pq-168q-132n+400
    C4ThirdD,         // 92pq+8q-172n+336
    C4ThirdE,         // 68pq-128n+260
    C4ThirdF,         // 80pq-40q-120n+260
    C4ThirdG,         // 88pq-120q-100n+272
    C4ThirdH,         // 64pq+8p-96n+132
    UnMin,            // 24n-60
    UnSecond,         // 40n-140
    UnThird,          // 44n-160
    UnFourth,         // 56n-252
    GHatLinear,       // 72n-276 ... 216n-1140, index 1..7
  };

  Kind kind;
  int a = 0;  // n, or p, or GHat index
  int b = 0;  // q, d, i, or n
  int c = 0;  // i (BroomGeneral)

  bool operator==(const FormulaId&) const = default;
};

// Exact value. Parameters outside the theorems' ordering hypotheses are
// accepted whenever the formula stays a well-defined polynomial.
Int eval_formula(const FormulaId& id);

// The family whose built graph the formula evaluates, when one exists
// (QPermanent, PellS and the signed-gap lemma are matrix/arithmetic-only).
std::optional<FamilySpec> formula_family(const FormulaId& id);

// (-1)^k (per Q_{j-1} per Q_{n-j} - per Q_{k-1} per Q_{n-k}), positive for
// 1 <= k < j <= (n+1)/2.
Int lemma34_gap(int n, int k, int j);

// (2(n-1), per L(P_n)).
std::pair<Int, Int> theorem11_bounds(int n);

// Pell helpers.
Int pell_q(int n);
Int pell_s(int n);

// Text syntax mirroring the family syntax plus formula-only entries,
// e.g. Q(5), pellS(5), lemma-free ids like D(3,5) or broom T(n=9,d=4).
FormulaId parse_formula(const std::string& text);
std::string print_formula(const FormulaId& id);

}  // namespace laperm

#endif
