#include "heroix/containment.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "heroix/canonical.hpp"
#include "heroix/enumerate.hpp"
#include "heroix/error.hpp"
#include "heroix/generators.hpp"

namespace heroix {
namespace {

// Fixed-width vertex set for hosts up to kContainmentHostLimit vertices.
struct VertexMask {
  static constexpr int kWords = kContainmentHostLimit / 64;
  std::array<std::uint64_t, kWords> w{};

  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
  bool none() const {
    for (std::uint64_t x : w) {
      if (x) return false;
    }
    return true;
  }
  int count() const {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
  }
  VertexMask& operator&=(const VertexMask& o) {
    for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
    return *this;
  }
  VertexMask operator&(const VertexMask& o) const {
    VertexMask r = *this;
    r &= o;
    return r;
  }
  VertexMask operator~() const {
    VertexMask r;
    for (int i = 0; i < kWords; ++i) r.w[i] = ~w[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < kWords; ++i) {
      for (std::uint64_t x = w[i]; x; x &= x - 1) f(i * 64 + std::countr_zero(x));
    }
  }
};

struct HostRows {
  std::vector<VertexMask> out;
  std::vector<VertexMask> in;
  std::vector<int> out_deg;
  VertexMask all;
};

HostRows host_rows(const Tournament& t) {
  const int n = t.size();
  HostRows r;
  r.out.resize(n);
  r.in.resize(n);
  r.out_deg.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    r.all.set(u);
    for (Vertex v = 0; v < n; ++v) {
      if (t.has_edge(u, v)) {
        r.out[u].set(v);
        r.in[v].set(u);
      }
    }
    r.out_deg[u] = r.out[u].count();
  }
  return r;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Tournament& host, const Tournament& pattern,
                  std::uint64_t budget)
      : host_(host), pat_(pattern), rows_(host_rows(host)), budget_(budget) {
    const int k = pattern.size();
    const int n = host.size();
    // Most lopsided pattern vertices first: they have the fewest feasible
    // host images.
    order_.resize(k);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> pout(k);
    for (Vertex p = 0; p < k; ++p) pout[p] = pattern.out_degree(p);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return std::abs(2 * pout[a] - (k - 1)) > std::abs(2 * pout[b] - (k - 1));
    });
    feasible_.resize(k);
    for (Vertex p = 0; p < k; ++p) {
      const int need_in = k - 1 - pout[p];
      for (Vertex h = 0; h < n; ++h) {
        if (rows_.out_deg[h] >= pout[p] && (n - 1 - rows_.out_deg[h]) >= need_in) {
          feasible_[p].set(h);
        }
      }
    }
    map_.assign(k, -1);
  }

  std::optional<Embedding> run() {
    if (pat_.size() > host_.size()) return std::nullopt;
    if (pat_.size() == 0) return Embedding{};
    if (!dfs(0)) return std::nullopt;
    return Embedding{map_};
  }

 private:
  bool dfs(int depth) {
    if (depth == pat_.size()) return true;
    if (++nodes_ > budget_) {
      throw Undecided("containment search exceeded its node budget of " +
                      std::to_string(budget_));
    }
    const Vertex p = order_[depth];
    VertexMask cand = feasible_[p] & ~used_;
    for (int i = 0; i < depth; ++i) {
      const Vertex q = order_[i];
      cand &= pat_.has_edge(q, p) ? rows_.out[map_[q]] : rows_.in[map_[q]];
      if (cand.none()) return false;
    }
    bool found = false;
    cand.for_each([&](int h) {
      if (found) return;
      map_[p] = h;
      used_.set(h);
      if (dfs(depth + 1)) {
        found = true;
        return;
      }
      used_.reset(h);
      map_[p] = -1;
    });
    return found;
  }

  const Tournament& host_;
  const Tournament& pat_;
  HostRows rows_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<VertexMask> feasible_;
  std::vector<Vertex> map_;
  VertexMask used_;
};

bool find_transitive(const HostRows& rows, VertexMask cand, int k, VertexSet& out) {
  if (k == 0) return true;
  if (cand.count() < k) return false;
  // Try sources with the most candidates beyond them first.
  std::vector<std::pair<int, int>> sources;
  cand.for_each([&](int s) { sources.emplace_back(-(rows.out[s] & cand).count(), s); });
  std::sort(sources.begin(), sources.end());
  for (const auto& [neg, s] : sources) {
    if (-neg < k - 1) break;
    out.push_back(s);
    if (find_transitive(rows, rows.out[s] & cand, k - 1, out)) return true;
    out.pop_back();
  }
  return false;
}

void require_nonempty(const Tournament& h) {
  if (h.empty()) throw ValidationError("operation needs a nonempty tournament");
}

class HeroMemo {
 public:
  std::optional<bool> get(const Tournament& t) {
    if (t.size() > kCanonicalLimit) return std::nullopt;
    const CanonicalCode code = canonical_form(t);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(code);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }
  void put(const Tournament& t, bool v) {
    if (t.size() > kCanonicalLimit) return;
    const CanonicalCode code = canonical_form(t);
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(code, v);
  }

 private:
  std::mutex mu_;
  std::unordered_map<CanonicalCode, bool, CanonicalCodeHash> memo_;
};

HeroMemo& hero_memo() {
  static HeroMemo memo;
  return memo;
}

VertexSet lift(const VertexSet& local, const VertexSet& parent) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(parent[v]);
  return out;
}

// Structural recursion. `vertices` maps local vertices of t to the
// vertices of the top-level tournament, for the derivation only.
std::optional<HeroDerivation> derive_hero(const Tournament& t, const VertexSet& vertices) {
  HeroDerivation d;
  d.vertices = vertices;
  if (t.size() == 1) return d;
  const std::vector<VertexSet> comps = strong_components(t);
  if (comps.size() > 1) {
    d.kind = HeroDerivation::Kind::Chain;
    for (const VertexSet& comp : comps) {
      auto sub = derive_hero(induced(t, comp), lift(comp, vertices));
      if (!sub) return std::nullopt;
      d.parts.push_back(std::move(*sub));
    }
    return d;
  }
  if (auto known = hero_memo().get(t); known && !*known) return std::nullopt;
  for (Vertex x = 0; x < t.size(); ++x) {
    const VertexSet out = t.out_neighbors(x);
    const VertexSet in = t.in_neighbors(x);
    if (out.empty() || in.empty() || !is_complete_to(t, out, in)) continue;
    const Tournament h1 = induced(t, out);
    const Tournament h2 = induced(t, in);
    if (!is_transitive(h1) && !is_transitive(h2)) continue;
    auto d1 = derive_hero(h1, lift(out, vertices));
    if (!d1) continue;
    auto d2 = derive_hero(h2, lift(in, vertices));
    if (!d2) continue;
    d.kind = HeroDerivation::Kind::Delta;
    d.apex = vertices[x];
    d.parts.push_back(std::move(*d1));
    d.parts.push_back(std::move(*d2));
    hero_memo().put(t, true);
    return d;
  }
  hero_memo().put(t, false);
  return std::nullopt;
}

std::vector<Tournament> nonhero_tournaments() {
  std::vector<Tournament> out;
  for (const NamedTournament& nt : minimal_nonheroes()) out.push_back(nt.t);
  return out;
}

}  // namespace

std::optional<Embedding> contains_subtournament(const Tournament& host,
                                                const Tournament& pattern,
                                                std::uint64_t node_budget) {
  if (host.size() > kContainmentHostLimit) {
    throw LimitExceeded("containment supports hosts of at most " +
                        std::to_string(kContainmentHostLimit) + " vertices");
  }
  return EmbeddingSearch(host, pattern, node_budget).run();
}

std::optional<std::pair<std::size_t, Embedding>> find_contained(
    const Tournament& host, std::span<const Tournament> patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (auto e = contains_subtournament(host, patterns[i])) {
      return std::make_pair(i, std::move(*e));
    }
  }
  return std::nullopt;
}

bool is_family_free(const Tournament& host, std::span<const Tournament> patterns) {
  return !find_contained(host, patterns).has_value();
}

std::optional<VertexSet> find_transitive_subset(const Tournament& t, int k) {
  if (k < 0) throw ValidationError("size must be non-negative");
  if (t.size() > kContainmentHostLimit) {
    throw LimitExceeded("transitive subset search supports at most " +
                        std::to_string(kContainmentHostLimit) + " vertices");
  }
  const HostRows rows = host_rows(t);
  VertexSet out;
  if (!find_transitive(rows, rows.all, k, out)) return std::nullopt;
  return out;
}

const std::vector<NamedTournament>& minimal_nonheroes() {
  static const std::vector<NamedTournament> list = {
      {"D_3", d_tournament(3)},     {"U_3", u_tournament(3)},
      {"N", n_tournament()},       {"S_3", s_tournament(3)},
      {"Delta2", delta2_tournament()},
  };
  return list;
}

bool is_hero_by_forbidden_set(const Tournament& h) {
  require_nonempty(h);
  const std::vector<Tournament> nonheroes = nonhero_tournaments();
  return is_family_free(h, nonheroes);
}

bool is_hero_by_structure(const Tournament& h) {
  require_nonempty(h);
  VertexSet all(h.size());
  std::iota(all.begin(), all.end(), 0);
  return derive_hero(h, all).has_value();
}

HeroVerdict is_hero(const Tournament& h) {
  require_nonempty(h);
  HeroVerdict v;
  const std::vector<Tournament> nonheroes = nonhero_tournaments();
  const auto hit = find_contained(h, nonheroes);
  VertexSet all(h.size());
  std::iota(all.begin(), all.end(), 0);
  auto derivation = derive_hero(h, all);
  const bool by_forbidden = !hit.has_value();
  const bool by_structure = derivation.has_value();
  if (by_forbidden != by_structure) {
    throw ConsistencyFault(
        std::string("hero characterisations disagree: forbidden-set says ") +
        (by_forbidden ? "hero" : "non-hero") + ", structure says " +
        (by_structure ? "hero" : "non-hero"));
  }
  v.hero = by_forbidden;
  if (hit) {
    v.obstruction = minimal_nonheroes()[hit->first].name;
    v.obstruction_embedding = hit->second;
  } else {
    v.derivation = std::move(derivation);
  }
  return v;
}

bool is_minimal_nonhero(const Tournament& h) {
  require_nonempty(h);
  if (is_hero(h).hero) return false;
  for (Vertex v = 0; v < h.size(); ++v) {
    const Tournament rest = delete_vertex(h, v);
    if (!rest.empty() && !is_hero(rest).hero) return false;
  }
  return true;
}

bool is_jewel(const Tournament& t, const JewelSpec& spec) {
  if (spec.a < 1) throw ValidationError("jewel size must be at least 1");
  if (t.size() != spec.a) {
    throw ValidationError("jewel test needs a tournament on " +
                          std::to_string(spec.a) + " vertices, got " +
                          std::to_string(t.size()));
  }
  if (spec.a > kJewelLimit) {
    throw LimitExceeded("jewel test supports at most " + std::to_string(kJewelLimit) +
                        " vertices");
  }
  const int a = spec.a;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << a); ++mask) {
    VertexSet side_a;
    VertexSet side_b;
    for (Vertex v = 0; v < a; ++v) ((mask >> v) & 1u ? side_a : side_b).push_back(v);
    if (contains_subtournament(induced(t, side_a), spec.g)) continue;
    if (contains_subtournament(induced(t, side_b), spec.h)) continue;
    return false;
  }
  return true;
}

std::optional<std::vector<VertexSet>> find_jewel_chain(const Tournament& t,
                                                       const JewelSpec& spec, int len,
                                                       std::uint64_t node_budget) {
  if (len < 1) throw ValidationError("chain length must be at least 1");
  const int n = t.size();
  const int a = spec.a;
  if (a < 1) throw ValidationError("jewel size must be at least 1");
  if (static_cast<long long>(a) * len > n) return std::nullopt;

  // Every a-subset inducing a jewel, in lexicographic order.
  std::vector<VertexSet> jewels;
  VertexSet pick;
  std::uint64_t nodes = 0;
  auto spend = [&] {
    if (++nodes > node_budget) {
      throw Undecided("jewel chain search exceeded its node budget of " +
                      std::to_string(node_budget));
    }
  };
  auto collect = [&](auto&& self, Vertex from) -> void {
    if (static_cast<int>(pick.size()) == a) {
      spend();
      if (is_jewel(induced(t, pick), spec)) jewels.push_back(pick);
      return;
    }
    for (Vertex v = from; v <= n - (a - static_cast<int>(pick.size())); ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  collect(collect, 0);

  std::vector<VertexSet> chain;
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self) -> bool {
    if (static_cast<int>(chain.size()) == len) return true;
    for (const VertexSet& s : jewels) {
      spend();
      if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return used[v]; })) continue;
      if (std::any_of(chain.begin(), chain.end(), [&](const VertexSet& prev) {
            return !is_complete_to(t, prev, s);
          })) {
        continue;
      }
      chain.push_back(s);
      for (Vertex v : s) used[v] = 1;
      if (self(self)) return true;
      for (Vertex v : s) used[v] = 0;
      chain.pop_back();
    }
    return false;
  };
  if (!extend(extend)) return std::nullopt;
  return chain;
}

std::vector<SurveyRow> survey_max_chromatic(std::span<const Tournament> forbidden,
                                            int max_n) {
  if (max_n < 1) throw ValidationError("max_n must be at least 1");
  std::vector<SurveyRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    SurveyRow row;
    row.n = n;
    for (const Tournament& t : enumerate_tournaments(n)) {
      if (!is_family_free(t, forbidden)) continue;
      ++row.free_classes;
      const int chi = chromatic_number(t).chi;
      if (chi > row.max_chi) {
        row.max_chi = chi;
        row.witness = t;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace heroix
