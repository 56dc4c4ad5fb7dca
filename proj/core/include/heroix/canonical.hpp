#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heroix/tournament.hpp"

namespace heroix {

/// Fingerprint of an isomorphism class. Two tournaments have equal codes
/// iff they are isomorphic; codes are totally ordered (by size first).
struct CanonicalCode {
  int n = 0;
  /// Upper-triangle adjacency of the canonically relabelled tournament,
  /// column by column, packed little-end first into 64-bit words.
  std::vector<std::uint64_t> bits;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

  std::string to_hex() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

/// Canonical labelling: result[i] is the vertex of t placed at position i.
///
/// The labelling minimises the column-wise adjacency string over all
/// orderings reachable by a vertex-refinement search: positions are filled
/// left to right, and each position may only take a vertex from the first
/// cell of the current equitable colour partition (colours refined by
/// score and by relation to the already placed vertices). The search tree
/// is defined from t alone, so the minimum is an isomorphism invariant.
///
/// Throws LimitExceeded when t.size() > kCanonicalLimit.
std::vector<Vertex> canonical_labeling(const Tournament& t);

CanonicalCode canonical_form(const Tournament& t);

/// t relabelled by its canonical labelling.
Tournament canonical_tournament(const Tournament& t);

bool are_isomorphic(const Tournament& a, const Tournament& b);

/// An isomorphism a -> b as a vertex map (result[v] is the image of v).
std::optional<std::vector<Vertex>> find_isomorphism(const Tournament& a,
                                                    const Tournament& b);

/// The code of a tournament that is already in canonical labelling, read
/// off directly without a search.
CanonicalCode code_of_labelled(const Tournament& t);

}  // namespace heroix
