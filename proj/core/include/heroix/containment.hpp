#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heroix/chromatic.hpp"
#include "heroix/limits.hpp"
#include "heroix/tournament.hpp"

namespace heroix {

/// Injective, direction-preserving map from a pattern into a host:
/// map[p] is the host vertex of pattern vertex p.
struct Embedding {
  std::vector<Vertex> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Largest host accepted by the containment search.
inline constexpr int kContainmentHostLimit = 256;

/// Exact subtournament search. Pattern vertices are placed most-extreme
/// score first; host candidates are filtered by adjacency to every placed
/// vertex and by out/in-degree feasibility. Throws Undecided when
/// node_budget is exhausted.
std::optional<Embedding> contains_subtournament(
    const Tournament& host, const Tournament& pattern,
    std::uint64_t node_budget = kDefaultNodeBudget);

/// True iff host contains none of the patterns.
bool is_family_free(const Tournament& host, std::span<const Tournament> patterns);

/// Index and embedding of the first contained pattern, if any.
std::optional<std::pair<std::size_t, Embedding>> find_contained(
    const Tournament& host, std::span<const Tournament> patterns);

/// A transitive set of size k, listed source first, or none. Always
/// succeeds when n >= 2^(k-1).
std::optional<VertexSet> find_transitive_subset(const Tournament& t, int k);

struct NamedTournament {
  std::string name;
  Tournament t;
};

/// D_3, U_3, N, S_3, Delta_2, in that order.
const std::vector<NamedTournament>& minimal_nonheroes();

/// Structural derivation of a hero. Vertex sets refer to the tournament
/// passed to is_hero().
struct HeroDerivation {
  enum class Kind { Single, Chain, Delta };
  Kind kind = Kind::Single;
  VertexSet vertices;
  /// Delta only: the vertex x with H = Delta({x}, out(x), in(x)).
  Vertex apex = -1;
  /// Chain: strong components in order. Delta: out(apex), in(apex).
  std::vector<HeroDerivation> parts;
};

struct HeroVerdict {
  bool hero = false;
  /// Set when not a hero: which minimal non-hero is contained, and where.
  std::optional<std::string> obstruction;
  std::optional<Embedding> obstruction_embedding;
  /// Set when a hero.
  std::optional<HeroDerivation> derivation;
};

/// Decides heroism twice, by freeness from the five minimal non-heroes and
/// by the recursion over strong components and Delta(I, H1, H2) splits, and
/// throws ConsistencyFault if the two disagree. Throws ValidationError on
/// the empty tournament.
HeroVerdict is_hero(const Tournament& h);

/// The two routes on their own.
bool is_hero_by_forbidden_set(const Tournament& h);
bool is_hero_by_structure(const Tournament& h);

/// Not a hero, while every one-vertex deletion is.
bool is_minimal_nonhero(const Tournament& h);

struct JewelSpec {
  int a = 1;
  Tournament g;
  Tournament h;
};

/// True iff for every bipartition (A, B) of V(T), including empty sides,
/// T|A contains G or T|B contains H. Requires |V(T)| = spec.a and
/// spec.a <= kJewelLimit.
bool is_jewel(const Tournament& t, const JewelSpec& spec);

/// len disjoint vertex sets, each inducing a jewel and each complete to
/// every later one. Sets are chosen lexicographically first. Throws
/// Undecided when node_budget is exhausted.
std::optional<std::vector<VertexSet>> find_jewel_chain(
    const Tournament& t, const JewelSpec& spec, int len,
    std::uint64_t node_budget = kDefaultNodeBudget);

struct SurveyRow {
  int n = 0;
  std::size_t free_classes = 0;
  /// Zero when no class on n vertices is free.
  int max_chi = 0;
  std::optional<Tournament> witness;
};

/// For n = 1..max_n, the largest chromatic number among the enumerated
/// classes that avoid every forbidden pattern.
std::vector<SurveyRow> survey_max_chromatic(std::span<const Tournament> forbidden,
                                            int max_n);

}  // namespace heroix
