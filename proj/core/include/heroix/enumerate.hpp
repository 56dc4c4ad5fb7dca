#pragma once

#include <vector>

#include "heroix/tournament.hpp"

namespace heroix {

/// One representative per isomorphism class of n-vertex tournaments, each
/// in canonical labelling, sorted by canonical code.
///
/// Generated by orderly extension: every canonical (n-1)-vertex class is
/// extended by a new vertex in all 2^(n-1) ways, and a child is kept only
/// when deleting its canonically last vertex gives back the parent class.
/// Results are cached per n. Throws LimitExceeded when n exceeds
/// enumeration_limit().
const std::vector<Tournament>& enumerate_tournaments(int n);

}  // namespace heroix
