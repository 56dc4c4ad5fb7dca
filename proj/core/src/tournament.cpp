#include "heroix/tournament.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "heroix/error.hpp"

namespace heroix {
namespace {

std::string pair_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_vertices(const Tournament& t, std::span<const Vertex> subset) {
  std::vector<bool> seen(t.size(), false);
  for (Vertex v : subset) {
    if (v < 0 || v >= t.size()) {
      throw ValidationError("vertex " + std::to_string(v) +
                            " out of range for tournament of size " +
                            std::to_string(t.size()));
    }
    if (seen[v]) {
      throw ValidationError("vertex " + std::to_string(v) +
                            " listed twice in vertex set");
    }
    seen[v] = true;
  }
}

}  // namespace

Tournament::Tournament(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw ValidationError("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
  }
}

void Tournament::set_edge(Vertex u, Vertex v) {
  bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[row_offset(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Tournament::out_degree(Vertex v) const {
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    d += std::popcount(bits_[row_offset(v) + w]);
  }
  return d;
}

VertexSet Tournament::out_neighbors(Vertex v) const {
  VertexSet out;
  for (Vertex u = 0; u < n_; ++u) {
    if (has_edge(v, u)) out.push_back(u);
  }
  return out;
}

VertexSet Tournament::in_neighbors(Vertex v) const {
  VertexSet in;
  for (Vertex u = 0; u < n_; ++u) {
    if (has_edge(u, v)) in.push_back(u);
  }
  return in;
}

std::uint64_t Tournament::out_mask(Vertex v) const {
  if (n_ > 64) throw LimitExceeded("64-bit masks need at most 64 vertices");
  return bits_[row_offset(v)];
}

std::uint64_t Tournament::in_mask(Vertex v) const {
  if (n_ > 64) throw LimitExceeded("64-bit masks need at most 64 vertices");
  const std::uint64_t all =
      n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  return all & ~bits_[row_offset(v)] & ~(std::uint64_t{1} << v);
}

Ordering::Ordering(std::vector<Vertex> seq) : seq_(std::move(seq)) {
  const int n = static_cast<int>(seq_.size());
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = seq_[i];
    if (v < 0 || v >= n) {
      throw ValidationError("ordering entry " + std::to_string(v) +
                            " out of range");
    }
    if (pos_[v] != -1) {
      throw ValidationError("ordering repeats vertex " + std::to_string(v));
    }
    pos_[v] = i;
  }
}

Ordering Ordering::identity(int n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return Ordering(std::move(seq));
}

Tournament build(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw ValidationError("negative vertex count");
  Tournament t(n);
  // 0 = unassigned, 1 = assigned.
  std::vector<char> assigned(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ValidationError("edge " + pair_name(u, v) + " out of range");
    }
    if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
    const Vertex a = std::min(u, v);
    const Vertex b = std::max(u, v);
    char& slot = assigned[static_cast<std::size_t>(a) * n + b];
    if (slot) {
      throw ValidationError("pair " + pair_name(a, b) + " assigned twice");
    }
    slot = 1;
    t.set_edge(u, v);
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!assigned[static_cast<std::size_t>(a) * n + b]) {
        throw ValidationError("pair " + pair_name(a, b) + " unassigned");
      }
    }
  }
  return t;
}

Tournament induced(const Tournament& t, std::span<const Vertex> subset) {
  check_vertices(t, subset);
  const int k = static_cast<int>(subset.size());
  Tournament sub(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (t.has_edge(subset[j], subset[i])) sub.set_edge(j, i);
    }
  }
  return sub;
}

Tournament delete_vertex(const Tournament& t, Vertex v) {
  VertexSet rest;
  rest.reserve(t.size());
  for (Vertex u = 0; u < t.size(); ++u) {
    if (u != v) rest.push_back(u);
  }
  return induced(t, rest);
}

Tournament complement(const Tournament& t) {
  const int n = t.size();
  Tournament c(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (t.has_edge(u, v)) c.set_edge(v, u);
    }
  }
  return c;
}

bool is_transitive_set(const Tournament& t, std::span<const Vertex> subset) {
  check_vertices(t, subset);
  // A tournament is transitive iff its score sequence is 0, 1, ..., k-1.
  const int k = static_cast<int>(subset.size());
  std::vector<char> seen(k, 0);
  for (int i = 0; i < k; ++i) {
    int score = 0;
    for (int j = 0; j < k; ++j) {
      if (t.has_edge(subset[i], subset[j])) ++score;
    }
    if (seen[score]) return false;
    seen[score] = 1;
  }
  return true;
}

bool is_transitive(const Tournament& t) {
  VertexSet all(t.size());
  std::iota(all.begin(), all.end(), 0);
  return is_transitive_set(t, all);
}

std::vector<VertexSet> strong_components(const Tournament& t) {
  // In a tournament, sorting by score puts the condensation in order: a
  // vertex in an earlier component beats everything after it. A prefix of
  // the score-descending order closes a component exactly when the prefix
  // beats the whole remainder, i.e. when its scores sum to
  // C(k,2) + k(n-k).
  const int n = t.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> score(n);
  for (Vertex v = 0; v < n; ++v) score[v] = t.out_degree(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return score[a] > score[b]; });
  std::vector<VertexSet> comps;
  VertexSet current;
  long long sum = 0;
  for (int k = 1; k <= n; ++k) {
    const Vertex v = order[k - 1];
    current.push_back(v);
    sum += score[v];
    const long long closed =
        static_cast<long long>(k) * (k - 1) / 2 + static_cast<long long>(k) * (n - k);
    if (sum == closed) {
      std::sort(current.begin(), current.end());
      comps.push_back(std::move(current));
      current.clear();
    }
  }
  return comps;
}

bool is_strongly_connected(const Tournament& t) {
  return strong_components(t).size() <= 1;
}

bool is_complete_to(const Tournament& t, std::span<const Vertex> a,
                    std::span<const Vertex> b) {
  for (Vertex u : a) {
    for (Vertex v : b) {
      if (!t.has_edge(u, v)) return false;
    }
  }
  return true;
}

Tournament compose_chain(const Tournament& first, const Tournament& second) {
  const int a = first.size();
  Tournament t(a + second.size());
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = u + 1; v < a; ++v) {
      if (first.has_edge(v, u)) t.set_edge(v, u);
    }
  }
  for (Vertex u = 0; u < second.size(); ++u) {
    for (Vertex v = u + 1; v < second.size(); ++v) {
      if (second.has_edge(v, u)) t.set_edge(a + v, a + u);
    }
  }
  return t;
}

Tournament compose_delta(std::span<const Tournament> blocks) {
  if (blocks.empty() || blocks.size() % 2 == 0) {
    throw ValidationError("Delta-composition needs an odd number of blocks, got " +
                          std::to_string(blocks.size()));
  }
  std::vector<int> offset(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    offset[i + 1] = offset[i] + blocks[i].size();
  }
  Tournament t(offset.back());
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Tournament& b = blocks[bi];
    for (Vertex u = 0; u < b.size(); ++u) {
      for (Vertex v = u + 1; v < b.size(); ++v) {
        if (b.has_edge(v, u)) t.set_edge(offset[bi] + v, offset[bi] + u);
      }
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      // 0-based even index == 1-based odd position.
      const bool both_odd = (i % 2 == 0) && (j % 2 == 0);
      if (!both_odd) continue;
      for (Vertex u = offset[i]; u < offset[i + 1]; ++u) {
        for (Vertex v = offset[j]; v < offset[j + 1]; ++v) t.set_edge(v, u);
      }
    }
  }
  return t;
}

Tournament substitute(const Tournament& host, Vertex v, const Tournament& part) {
  if (v < 0 || v >= host.size()) {
    throw ValidationError("substitution vertex " + std::to_string(v) +
                          " out of range");
  }
  if (part.empty()) throw ValidationError("cannot substitute an empty tournament");
  const int m = part.size();
  const int n = host.size() - 1 + m;
  // Map each result vertex to (host vertex, part vertex or -1).
  std::vector<Vertex> host_of(n);
  std::vector<Vertex> part_of(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    if (x < v) {
      host_of[x] = x;
    } else if (x < v + m) {
      host_of[x] = v;
      part_of[x] = x - v;
    } else {
      host_of[x] = x - m + 1;
    }
  }
  Tournament t(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const bool back = (part_of[x] >= 0 && part_of[y] >= 0)
                            ? part.has_edge(part_of[y], part_of[x])
                            : host.has_edge(host_of[y], host_of[x]);
      if (back) t.set_edge(y, x);
    }
  }
  return t;
}

Ordering restrict_ordering(const Ordering& sigma, std::span<const Vertex> subset) {
  std::vector<Vertex> idx(subset.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) {
    return sigma.position(subset[a]) < sigma.position(subset[b]);
  });
  return Ordering(std::move(idx));
}

}  // namespace heroix
