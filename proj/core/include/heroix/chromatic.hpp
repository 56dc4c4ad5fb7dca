#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "heroix/limits.hpp"
#include "heroix/tournament.hpp"

namespace heroix {

/// Vertex -> colour map. Colours are 0..k-1 and every one is used.
struct Coloring {
  std::vector<int> assign;
  int k = 0;

  /// Compacts arbitrary non-negative colour labels to 0..k-1 in order of
  /// first appearance.
  static Coloring from_labels(const std::vector<long long>& labels);

  /// Colour classes, indexed by colour, each sorted.
  std::vector<VertexSet> classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// True iff every colour class is transitive. Throws ValidationError when
/// the assignment does not cover V(T) or uses a negative colour.
bool is_valid_coloring(const Tournament& t, const Coloring& c);

/// Exact decision: a valid colouring with at most k colours, or none.
/// Uses the subset engine up to kSubsetDpLimit vertices and the
/// branch-and-bound engine beyond that (Undecided if its budget runs out).
std::optional<Coloring> find_k_coloring(const Tournament& t, int k);

struct ChromaticResult {
  int chi = 0;
  Coloring witness;
};

/// Exact chromatic number by subset dynamic programming. Throws
/// LimitExceeded above kSubsetDpLimit vertices.
ChromaticResult chromatic_number(const Tournament& t);

struct ChromaticBounds {
  int lower = 0;
  int upper = 0;
  Coloring upper_witness;
};

/// Cheap bounds for tournaments beyond the exact engine: lower is 2 when a
/// cyclic triangle exists, upper is a first-fit colouring.
ChromaticBounds chromatic_bounds(const Tournament& t);

struct ColorabilityResult {
  std::optional<Coloring> coloring;  // empty: proven not k-colourable
  std::uint64_t nodes = 0;
};

/// Branch-and-bound k-colourability for up to kMaskEngineLimit vertices:
/// most-constrained vertex first, forward checking on colour domains, new
/// colours opened in order. Throws Undecided once node_budget is spent.
ColorabilityResult decide_k_colorable(const Tournament& t, int k,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

/// For each pair (a, b), the vertices x with {a, b, x} a cyclic triangle.
/// Requires n <= 64.
std::vector<std::vector<std::uint64_t>> cyclic_triangle_masks(const Tournament& t);

}  // namespace heroix
