#include "heroix/forest.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "heroix/error.hpp"

namespace heroix {
namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

constexpr int kPositionLimit = 64;

__extension__ typedef unsigned __int128 U128;

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

// Forest-ordering table over positions of an ordering that grows at the
// end. back_[j] holds the earlier positions i whose vertex is beaten by
// the vertex at j. ok_[l][r] says whether positions [l, r) form a forest
// ordering of the tournament they induce.
class ForestTable {
 public:
  ForestTable() : ok_(kPositionLimit + 1, std::vector<char>(kPositionLimit + 1, 0)) {}

  int size() const { return static_cast<int>(back_.size()); }

  // Appends a position and returns whether the whole prefix is a forest
  // ordering.
  bool push(Mask back_row) {
    back_.push_back(back_row);
    const int r = size();
    ok_[r - 1][r] = 1;
    ok_[r][r] = 1;
    for (int l = r - 2; l >= 0; --l) ok_[l][r] = first_cut(l, r).has_value();
    return ok_[0][r];
  }

  void pop() { back_.pop_back(); }

  bool ok(int l, int r) const { return ok_[l][r]; }

  // Leftmost forest cut of [l, r); assumes ok_ is filled for all
  // sub-intervals.
  std::optional<int> first_cut(int l, int r) const {
    const int len = r - l;
    UnionFind uf(len);
    for (int j = l; j < r; ++j) {
      for (Mask m = back_[j] & ~(bit(l) - 1); m; m &= m - 1) {
        uf.unite(std::countr_zero(m) - l, j - l);
      }
    }
    std::vector<char> seen(len, 0);
    for (int m = l + 1; m < r; ++m) {
      if (!ok_[l][m] || !ok_[m][r]) continue;
      std::fill(seen.begin(), seen.end(), 0);
      bool distinct = true;
      for (int j = m; j < r && distinct; ++j) {
        const Mask crossing = back_[j] & ~(bit(l) - 1) & (bit(m) - 1);
        for (Mask c = crossing; c; c &= c - 1) {
          const int root = uf.find(j - l);
          if (seen[root]) {
            distinct = false;
            break;
          }
          seen[root] = 1;
        }
      }
      if (distinct) return m;
    }
    return std::nullopt;
  }

 private:
  std::vector<Mask> back_;
  std::vector<std::vector<char>> ok_;
};

void check_positions(const Tournament& t, const Ordering& sigma) {
  if (sigma.size() != t.size()) {
    throw ValidationError("ordering has " + std::to_string(sigma.size()) +
                          " entries, tournament has " + std::to_string(t.size()) +
                          " vertices");
  }
  if (t.size() > kPositionLimit) {
    throw LimitExceeded("forest orderings are checked for at most " +
                        std::to_string(kPositionLimit) + " vertices");
  }
}

Mask back_row(const Tournament& t, const std::vector<Vertex>& seq, int j) {
  Mask row = 0;
  for (int i = 0; i < j; ++i) {
    if (t.has_edge(seq[j], seq[i])) row |= bit(i);
  }
  return row;
}

ForestTable table_for(const Tournament& t, const Ordering& sigma) {
  ForestTable table;
  for (int j = 0; j < t.size(); ++j) table.push(back_row(t, sigma.seq(), j));
  return table;
}

std::uint64_t checked(U128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw LimitExceeded("incomparable map value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

// Values for positions [l, r), strictly increasing.
std::vector<std::uint64_t> build_map(const ForestTable& table, int l, int r,
                                     std::uint64_t rr) {
  if (r - l == 1) return {1};
  const auto m = table.first_cut(l, r);
  if (!m) throw ConsistencyFault("forest interval without a forest cut");
  std::vector<std::uint64_t> left = build_map(table, l, *m, rr);
  const std::vector<std::uint64_t> right = build_map(table, *m, r, rr);
  const std::uint64_t a = std::max<std::uint64_t>(left.back() - left.front(), 1);
  const std::uint64_t b = std::max<std::uint64_t>(right.back() - right.front(), 1);
  using U = U128;
  const U r1 = U{rr} + 1;
  const std::uint64_t base = checked(U{left.back()} + U{a} * U{b} * r1 * r1);
  const std::uint64_t scale = checked(U{a} * r1);
  for (std::uint64_t v : right) left.push_back(checked(U{base} + U{scale} * U{v}));
  return left;
}

struct GapEdge {
  Vertex u;
  Vertex v;
  std::uint64_t gap;
};

// Backedges of the order induced by phi with their gaps.
std::vector<GapEdge> gap_edges(const IncomparableMap& m, const BackedgeGraph& b) {
  std::vector<GapEdge> out;
  for (const auto& [u, v] : b.edges) {
    const std::uint64_t x = m.phi[u];
    const std::uint64_t y = m.phi[v];
    out.push_back({u, v, x > y ? x - y : y - x});
  }
  return out;
}

bool ratio_close(std::uint64_t x, std::uint64_t y, std::uint64_t r) {
  using U = U128;
  return U{x} <= U{r} * U{y} && U{y} <= U{r} * U{x};
}

// Shortest path length containing both edges, or -1 when none exists.
int shortest_joint_path(const std::vector<std::vector<Vertex>>& adj, const GapEdge& e,
                        const GapEdge& f) {
  const int n = static_cast<int>(adj.size());
  int best = -1;
  const Vertex ends_e[2] = {e.u, e.v};
  const Vertex ends_f[2] = {f.u, f.v};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Vertex x = ends_e[i];
      const Vertex x_other = ends_e[1 - i];
      const Vertex y = ends_f[j];
      const Vertex y_other = ends_f[1 - j];
      if (x_other == y_other || x_other == y || y_other == x) continue;
      // BFS from x to y avoiding the far endpoints of both edges.
      std::vector<int> dist(n, -1);
      std::queue<Vertex> q;
      dist[x] = 0;
      q.push(x);
      while (!q.empty()) {
        const Vertex a = q.front();
        q.pop();
        for (Vertex c : adj[a]) {
          if (dist[c] >= 0 || c == x_other || c == y_other) continue;
          dist[c] = dist[a] + 1;
          q.push(c);
        }
      }
      if (dist[y] < 0) continue;
      const int len = dist[y] + 2;
      if (best < 0 || len < best) best = len;
    }
  }
  return best;
}

void check_map(const Tournament& t, const IncomparableMap& m) {
  if (static_cast<int>(m.phi.size()) != t.size()) {
    throw ValidationError("map covers " + std::to_string(m.phi.size()) +
                          " vertices, tournament has " + std::to_string(t.size()));
  }
  std::vector<std::uint64_t> sorted = m.phi;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("map is not injective");
  }
  if (!sorted.empty() && sorted.front() == 0) {
    throw ValidationError("map values must be positive");
  }
}

}  // namespace

BackedgeGraph backedge_graph(const Tournament& t, const Ordering& sigma) {
  if (sigma.size() != t.size()) {
    throw ValidationError("ordering size does not match the tournament");
  }
  const int n = t.size();
  BackedgeGraph b;
  b.base = sigma;
  UnionFind uf(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (t.has_edge(sigma[j], sigma[i])) {
        b.edges.emplace_back(sigma[i], sigma[j]);
        uf.unite(sigma[i], sigma[j]);
      }
    }
  }
  b.component.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (int p = 0; p < n; ++p) {
    const int root = uf.find(sigma[p]);
    if (id_of_root[root] < 0) id_of_root[root] = b.component_count++;
    b.component[sigma[p]] = id_of_root[root];
  }
  return b;
}

int thickness(const BackedgeGraph& b) {
  const int n = b.base.size();
  if (n < 2) throw ValidationError("thickness needs at least two vertices");
  int best = std::numeric_limits<int>::max();
  for (int cut = 1; cut < n; ++cut) {
    int crossing = 0;
    for (const auto& [u, v] : b.edges) {
      if (b.base.position(u) < cut && b.base.position(v) >= cut) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

bool is_forest_ordering(const Tournament& t, const Ordering& sigma) {
  check_positions(t, sigma);
  if (t.size() <= 1) return true;
  return table_for(t, sigma).ok(0, t.size());
}

std::optional<int> leftmost_forest_cut(const Tournament& t, const Ordering& sigma) {
  check_positions(t, sigma);
  if (t.size() <= 1) return std::nullopt;
  const ForestTable table = table_for(t, sigma);
  if (!table.ok(0, t.size())) return std::nullopt;
  return table.first_cut(0, t.size());
}

std::optional<Ordering> find_forest_ordering(const Tournament& t,
                                             std::uint64_t node_budget) {
  const int n = t.size();
  if (n > kForestSearchLimit) {
    throw LimitExceeded("forest ordering search supports at most " +
                        std::to_string(kForestSearchLimit) + " vertices, got " +
                        std::to_string(n));
  }
  if (n <= 1) return Ordering::identity(n);
  if (chromatic_number(t).chi >= 3) return std::nullopt;

  ForestTable table;
  std::vector<Vertex> seq;
  std::vector<char> used(n, 0);
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(seq.size()) == n) return true;
    if (++nodes > node_budget) {
      throw Undecided("forest ordering search exceeded its node budget of " +
                      std::to_string(node_budget));
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      seq.push_back(v);
      const Mask row = back_row(t, seq, static_cast<int>(seq.size()) - 1);
      // Two backedges from v into one component would close a cycle.
      bool acyclic = true;
      if (std::popcount(row) > 1) {
        UnionFind uf(static_cast<int>(seq.size()));
        for (int j = 0; j + 1 < static_cast<int>(seq.size()); ++j) {
          for (int i = 0; i < j; ++i) {
            if (t.has_edge(seq[j], seq[i])) uf.unite(i, j);
          }
        }
        std::vector<char> hit(seq.size(), 0);
        for (Mask m = row; m && acyclic; m &= m - 1) {
          const int root = uf.find(std::countr_zero(m));
          acyclic = !hit[root];
          hit[root] = 1;
        }
      }
      if (acyclic) {
        used[v] = 1;
        if (table.push(row) && self(self)) return true;
        table.pop();
        used[v] = 0;
      }
      seq.pop_back();
    }
    return false;
  };
  if (!dfs(dfs)) return std::nullopt;
  return Ordering(seq);
}

Coloring forest_two_coloring(const Tournament& t, const Ordering& sigma) {
  if (!is_forest_ordering(t, sigma)) {
    throw PreconditionViolated("ordering is not a forest ordering");
  }
  const int n = t.size();
  const BackedgeGraph b = backedge_graph(t, sigma);
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : b.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<long long> side(n, -1);
  for (int p = 0; p < n; ++p) {
    const Vertex s = sigma[p];
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex a = q.front();
      q.pop();
      for (Vertex c : adj[a]) {
        if (side[c] < 0) {
          side[c] = 1 - side[a];
          q.push(c);
        } else if (side[c] == side[a]) {
          throw ConsistencyFault("backedge graph of a forest ordering has an odd cycle");
        }
      }
    }
  }
  return Coloring::from_labels(side);
}

IncomparableMap build_incomparable_map(const Tournament& t, const Ordering& sigma,
                                       std::uint64_t r) {
  if (r < 1) throw ValidationError("r must be at least 1");
  check_positions(t, sigma);
  IncomparableMap m;
  m.r = r;
  const int n = t.size();
  if (n == 0) return m;
  const ForestTable table = table_for(t, sigma);
  if (!table.ok(0, n)) throw PreconditionViolated("ordering is not a forest ordering");
  const std::vector<std::uint64_t> values = build_map(table, 0, n, r);
  m.phi.assign(n, 0);
  for (int p = 0; p < n; ++p) m.phi[sigma[p]] = values[p];
  return m;
}

Ordering ordering_of(const IncomparableMap& m) {
  std::vector<Vertex> seq(m.phi.size());
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return m.phi[a] < m.phi[b]; });
  return Ordering(std::move(seq));
}

bool verify_incomparable(const Tournament& t, const IncomparableMap& m) {
  check_map(t, m);
  const BackedgeGraph b = backedge_graph(t, ordering_of(m));
  const std::vector<GapEdge> edges = gap_edges(m, b);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (b.component[edges[i].u] != b.component[edges[j].u]) continue;
      if (ratio_close(edges[i].gap, edges[j].gap, m.r)) return false;
    }
  }
  return true;
}

bool verify_incomparable_bounded(const Tournament& t, const IncomparableMap& m, int s) {
  if (s < 1) throw ValidationError("path bound must be at least 1");
  check_map(t, m);
  const BackedgeGraph b = backedge_graph(t, ordering_of(m));
  const std::vector<GapEdge> edges = gap_edges(m, b);
  std::vector<std::vector<Vertex>> adj(t.size());
  for (const auto& [u, v] : b.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!ratio_close(edges[i].gap, edges[j].gap, m.r)) continue;
      const int len = shortest_joint_path(adj, edges[i], edges[j]);
      if (len >= 0 && len <= s) return false;
    }
  }
  return true;
}

}  // namespace heroix
