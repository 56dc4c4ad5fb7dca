#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace heroix {

using Vertex = int;

/// A list of vertices of some tournament. Order is significant for
/// induced(): the i-th member becomes vertex i of the subtournament.
using VertexSet = std::vector<Vertex>;

/// Complete antisymmetric digraph on vertices 0..n-1.
///
/// The edge relation is stored as n dense bit rows. Every mutation goes
/// through set_edge(), which writes both directions, so a Tournament value
/// always satisfies the tournament invariants.
class Tournament {
 public:
  Tournament() = default;

  /// The transitive tournament L_n with edges i -> j for i < j.
  explicit Tournament(int n);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  /// True iff u -> v. False when u == v.
  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] >>
            (v & 63)) & 1u;
  }

  /// Orient the pair {u, v} as u -> v.
  void set_edge(Vertex u, Vertex v);

  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const { return n_ - 1 - out_degree(v); }
  VertexSet out_neighbors(Vertex v) const;
  VertexSet in_neighbors(Vertex v) const;

  /// Out-/in-neighbourhood as a 64-bit mask. Requires size() <= 64.
  std::uint64_t out_mask(Vertex v) const;
  std::uint64_t in_mask(Vertex v) const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  std::size_t row_offset(Vertex v) const {
    return static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A permutation of the vertices of a tournament; seq()[i] is the i-th
/// vertex in the order.
class Ordering {
 public:
  Ordering() = default;
  /// Throws ValidationError unless seq is a permutation of 0..seq.size()-1.
  explicit Ordering(std::vector<Vertex> seq);

  static Ordering identity(int n);

  int size() const { return static_cast<int>(seq_.size()); }
  Vertex operator[](int i) const { return seq_[i]; }
  const std::vector<Vertex>& seq() const { return seq_; }
  /// Inverse permutation: position of v in the order.
  int position(Vertex v) const { return pos_[v]; }

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.seq_ == b.seq_;
  }

 private:
  std::vector<Vertex> seq_;
  std::vector<int> pos_;
};

/// Builds a tournament from an explicit list of directed edges. Every
/// unordered pair must appear exactly once and loops are rejected; the
/// ValidationError names the offending pair.
Tournament build(int n, std::span<const std::pair<Vertex, Vertex>> edges);

/// T|S with the vertex order of S retained.
Tournament induced(const Tournament& t, std::span<const Vertex> subset);

/// All vertices of t except v, in increasing order.
Tournament delete_vertex(const Tournament& t, Vertex v);

/// Every edge reversed.
Tournament complement(const Tournament& t);

bool is_transitive(const Tournament& t);
bool is_transitive_set(const Tournament& t, std::span<const Vertex> subset);

/// Strong components in condensation order: every component is complete to
/// every later one. Members of each component are sorted.
std::vector<VertexSet> strong_components(const Tournament& t);
bool is_strongly_connected(const Tournament& t);

/// True iff every vertex of a beats every vertex of b.
bool is_complete_to(const Tournament& t, std::span<const Vertex> a,
                    std::span<const Vertex> b);

/// T1 => T2: disjoint union with V(T1) complete to V(T2). Vertices of T1
/// come first.
Tournament compose_chain(const Tournament& first, const Tournament& second);

/// Delta-composition of an odd number of blocks. With 1-based block
/// positions i < j, block j beats block i when both positions are odd and
/// block i beats block j otherwise. Blocks are laid out consecutively.
Tournament compose_delta(std::span<const Tournament> blocks);

/// Replaces vertex v of host by the tournament part. The vertices of part
/// occupy positions v .. v+|part|-1 of the result; the remaining host
/// vertices keep their relative order.
Tournament substitute(const Tournament& host, Vertex v, const Tournament& part);

/// Relabels so that vertex i of the result is perm[i] of t.
inline Tournament relabel(const Tournament& t, std::span<const Vertex> perm) {
  return induced(t, perm);
}

/// The ordering of induced(t, subset) inherited from sigma.
Ordering restrict_ordering(const Ordering& sigma, std::span<const Vertex> subset);

}  // namespace heroix
