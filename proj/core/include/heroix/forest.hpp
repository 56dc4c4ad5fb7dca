#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heroix/chromatic.hpp"
#include "heroix/limits.hpp"
#include "heroix/tournament.hpp"

namespace heroix {

/// Undirected graph of the edges of T that point backward under an
/// ordering: {u, v} is present iff the later endpoint beats the earlier.
struct BackedgeGraph {
  Ordering base;
  /// (earlier, later) vertex pairs, sorted by the positions of the later
  /// and then the earlier endpoint.
  std::vector<std::pair<Vertex, Vertex>> edges;
  /// Component id per vertex; ids count up in order of first position.
  std::vector<int> component;
  int component_count = 0;
};

BackedgeGraph backedge_graph(const Tournament& t, const Ordering& sigma);

/// Minimum number of edges crossing a prefix cut. Throws ValidationError
/// for fewer than two vertices.
int thickness(const BackedgeGraph& b);

/// Some cut has its crossing backedges in pairwise distinct components of
/// the backedge graph, and both sides are forest orderings recursively.
bool is_forest_ordering(const Tournament& t, const Ordering& sigma);

/// Position of the leftmost forest cut of sigma (vertices at positions
/// < result form the left side), or none.
std::optional<int> leftmost_forest_cut(const Tournament& t, const Ordering& sigma);

/// The lexicographically least forest ordering, or none. Prefixes of a
/// forest ordering are forest orderings, so the search extends prefixes
/// and drops any that fail. Throws LimitExceeded above kForestSearchLimit
/// vertices and Undecided once node_budget is spent.
std::optional<Ordering> find_forest_ordering(
    const Tournament& t, std::uint64_t node_budget = kDefaultNodeBudget);

/// Two-colours the (acyclic) backedge graph; each class then has no
/// internal backedge and is transitive. Throws PreconditionViolated unless
/// sigma is a forest ordering.
Coloring forest_two_coloring(const Tournament& t, const Ordering& sigma);

/// Injective map into the positive integers; phi[v] is the value of v.
struct IncomparableMap {
  std::vector<std::uint64_t> phi;
  std::uint64_t r = 1;
};

/// Builds an r-incomparable map whose induced order is sigma, recursing on
/// the leftmost forest cut. With phi_1 of span a on the left and phi_2 of
/// span b on the right, right-side values become
/// phi_1(last left) + a*b*(r+1)^2 + a*(r+1)*phi_2(v), where a zero span is
/// replaced by 1. Throws PreconditionViolated unless sigma is a forest
/// ordering and LimitExceeded if a value overflows 64 bits.
IncomparableMap build_incomparable_map(const Tournament& t, const Ordering& sigma,
                                       std::uint64_t r);

/// True iff no two distinct backedges in one component of the backedge
/// graph of the order induced by phi have gap ratio within [1/r, r].
/// Throws ValidationError if phi is not injective and positive.
bool verify_incomparable(const Tournament& t, const IncomparableMap& m);

/// The bounded variant: only pairs lying on a common path of at most s
/// edges are compared.
bool verify_incomparable_bounded(const Tournament& t, const IncomparableMap& m,
                                 int s);

/// The ordering sorting vertices by increasing phi.
Ordering ordering_of(const IncomparableMap& m);

}  // namespace heroix
