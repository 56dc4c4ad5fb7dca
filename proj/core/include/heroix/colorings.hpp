#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "heroix/chromatic.hpp"
#include "heroix/containment.hpp"
#include "heroix/error.hpp"
#include "heroix/limits.hpp"
#include "heroix/tournament.hpp"

namespace heroix {

/// A required freeness condition fails; carries the offending pattern and
/// where it sits in the input.
class ForbiddenSubtournament : public PreconditionViolated {
 public:
  ForbiddenSubtournament(std::string pattern, Embedding embedding);

  const std::string& pattern() const { return pattern_; }
  const Embedding& embedding() const { return embedding_; }

 private:
  std::string pattern_;
  Embedding embedding_;
};

inline constexpr int kMaxExplicitA = 5;

/// n-colouring of generate(D, n): the apex takes colour n-1 and both copies
/// of D_{n-1} reuse colours 0..n-2. Requires 1 <= n <= kMaxDParam.
Coloring explicit_coloring_D(int n);

/// n-colouring of generate(A, n): every spine singleton takes colour n-1
/// and every copy of A_{n-1} reuses colours 0..n-2. Requires 1 <= n <= 5.
Coloring explicit_coloring_A(int n);

struct LiuForm {
  enum class Kind { Cyclic, Triple };
  Kind kind = Kind::Triple;
  /// Cyclic: T is isomorphic to S_m.
  int m = 0;
  /// Cyclic: iso.map[i] is the vertex of T playing v_{i+1} of S_m.
  Embedding iso;
  /// Triple: a partition whose pairwise unions are transitive.
  std::array<VertexSet, 3> parts;
};

/// Resolves a prime U_3-free tournament to S_m or to a transitive-pair
/// triple. The triple search assigns vertices in order, parts in order,
/// and requires every cyclic triangle to meet all three parts. Throws
/// PreconditionViolated (ForbiddenSubtournament for U_3) outside the
/// domain and Undecided once node_budget is spent.
LiuForm liu_form(const Tournament& t, std::uint64_t node_budget = kDefaultNodeBudget);

/// Valid colouring with at most 3^(n-2) colours of a {D_n, U_3}-free
/// tournament, by recursion on the root of the substitution decomposition.
/// Colour tuples over {0,1,2}^(n-2) are flattened with the first
/// coordinate most significant. Throws ForbiddenSubtournament when t
/// contains D_n or U_3.
Coloring u3_hero_coloring(const Tournament& t, int n);

/// 3^e for 0 <= e <= 38.
std::int64_t pow3(int e);

}  // namespace heroix
