#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heroix/tournament.hpp"

namespace heroix {

/// Largest tournament accepted by the decomposition routines.
inline constexpr int kStructureLimit = 64;

/// True iff no vertex outside S has both an in- and an out-neighbour in S.
/// Throws ValidationError unless 1 < |S| < n.
bool is_homogeneous(const Tournament& t, const VertexSet& s);

/// All inclusion-maximal homogeneous sets, each sorted, listed in
/// lexicographic order. Empty when n < 3.
std::vector<VertexSet> maximal_homogeneous_sets(const Tournament& t);

/// No homogeneous set. Tournaments on at most two vertices are prime.
bool is_prime(const Tournament& t);

struct DecompositionTree {
  enum class Kind { Leaf, Linear, Prime };
  Kind kind = Kind::Leaf;
  /// Sorted vertices of the top-level tournament covered by this node.
  VertexSet vertices;
  /// Linear: strong components in condensation order. Prime: maximal
  /// homogeneous sets and leftover singletons, ordered by least vertex.
  std::vector<DecompositionTree> children;
  /// The tournament on the children (vertex i is child i). L_k for linear
  /// nodes; prime for prime nodes; the one-vertex tournament for leaves.
  Tournament quotient;
};

DecompositionTree substitution_decomposition(const Tournament& t);

/// Rebuilds the tournament from its tree by repeated substitution into the
/// quotients. The result is labelled like the decomposed tournament.
Tournament reconstruct(const DecompositionTree& tree);

/// Partition (X, Y, Z) with X => Y, Y => Z and Z => X, or none. The
/// returned X contains the least vertex. A trisection exists iff the root
/// of the decomposition is prime on three children, and it is unique up to
/// rotation.
std::optional<std::array<VertexSet, 3>> find_trisection(const Tournament& t);

/// A Delta-partition ({v_1}, X_1, {v_2}, ..., X_{k-1}, {v_k}) with
/// singleton odd blocks. Even blocks may be empty: restricting a
/// Delta-partition of A_m to a strong subtournament can empty them.
struct DeltaPartitionSpine {
  VertexSet spine;
  std::vector<VertexSet> blocks;
};

/// Every spine Delta-partition of a strong tournament, one per admissible
/// first spine vertex, ordered by that vertex. v_1 beats every non-spine
/// vertex and is beaten by the rest of the spine, so v_1 determines the
/// whole partition.
std::vector<DeltaPartitionSpine> spine_delta_partitions(const Tournament& t);

/// The spine partition with the longest spine (least v_1 on ties), or none.
/// Throws PreconditionViolated unless t is strong with n >= 3.
std::optional<DeltaPartitionSpine> find_spine_delta_partition(const Tournament& t);

struct MembershipResult {
  bool member = false;
  /// One line per recursion step, indented by depth.
  std::vector<std::string> trace;
};

/// Membership in the hereditary closure of {D_n}: a single vertex; or not
/// strong with every strong component a member; or strong with a
/// trisection ({x}, Y, Z) where T|Y and T|Z are members.
MembershipResult member_D(const Tournament& t);

/// Membership in the hereditary closure of {A_n}: a single vertex; or not
/// strong with every strong component a member; or strong with a spine
/// Delta-partition whose even blocks all induce members.
MembershipResult member_A(const Tournament& t);

struct AFResult {
  bool member = false;
  /// 1..6 for the matched shape, 0 when not a member.
  int case_label = 0;
  std::string detail;
};

/// Membership in the intersection of the closure of {A_n} with the forest
/// tournaments, decided on the decomposition tree:
///  1. one vertex;
///  2. a linear root whose components are all members;
///  3. prime quotient U_2: Delta(I, L_k, H') or Delta(I, H', L_k);
///  4. prime quotient U_3: Delta(L, I, L, L, I) or Delta(I, L, L, I, L);
///  5. prime quotient U_3: Delta(I, H', L, L, I) or Delta(I, L, L, H', I);
///  6. prime quotient U_4: Delta(I, L, L, I, L, L, I);
/// where every L is transitive and H' is a member. Any other prime
/// quotient rejects.
AFResult member_AF(const Tournament& t);

}  // namespace heroix
