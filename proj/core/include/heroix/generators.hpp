#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "heroix/tournament.hpp"

namespace heroix {

enum class Family { L, D, A, U, S, N, Delta2, C };

/// A named tournament family, with its parameter for L, D, A, U and S.
struct FamilySpec {
  Family family = Family::C;
  std::optional<int> param;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses the CLI spelling: "l 5", "d 3", "a 4", "u 3", "s 3", "n",
/// "delta2", "c" (family name case-insensitive).
FamilySpec parse_family(std::string_view name, std::optional<int> param);
std::string family_name(const FamilySpec& spec);

bool is_parametric(Family f);

/// Materialises a family member. Vertex labelling per family:
///  - L_k: i -> j for i < j.
///  - D_n: vertex 0 is the apex, then the two copies of D_{n-1} in order.
///  - A_n: blocks I, A_{n-1}, I, ..., A_{n-1}, I laid out consecutively.
///  - U_n: v_1..v_{2n-1} at 0..2n-2; v_j -> v_i (i < j) iff i, j both odd.
///  - S_n: v_i -> v_j iff (j - i) mod (2n-1) in {1..n-1}.
///  - N: v_2 -> v_3 -> v_4 -> v_5 transitively, v_1 -> {v_2, v_4},
///    {v_3, v_5} -> v_1.
///  - Delta2: Delta(L_2, L_2, L_2); C: the cyclic triangle 0->1->2->0.
/// Throws ValidationError for a missing or zero parameter and
/// LimitExceeded above the caps (D: 12, A: 6).
Tournament generate(const FamilySpec& spec);

inline constexpr int kMaxDParam = 12;
inline constexpr int kMaxAParam = 6;

// Shorthands used throughout tests and the CLI.
Tournament transitive_tournament(int k);
Tournament cyclic_triangle();
Tournament d_tournament(int n);
Tournament a_tournament(int n);
Tournament u_tournament(int n);
Tournament s_tournament(int n);
Tournament n_tournament();
Tournament delta2_tournament();

/// |V(A_n)| from the recursion |V(A_n)| = n + (n-1)|V(A_{n-1})|.
long long a_tournament_size(int n);

}  // namespace heroix
