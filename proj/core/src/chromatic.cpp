#include "heroix/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "heroix/error.hpp"

namespace heroix {
namespace {

using Mask = std::uint64_t;
using CycTable = std::vector<std::vector<Mask>>;

Mask bit(int v) { return Mask{1} << v; }

Mask all_vertices(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

// Extends a transitive set inside `avail` (Bron-Kerbosch over cyclic
// triangle conflicts) and stops at the first set `accept` approves.
// `forbid` holds vertices that would close a cyclic triangle with a pair
// already in `set`.
template <class Accept>
bool search_transitive(const CycTable& cyc, Mask set, Mask cand, Mask excl,
                       Mask forbid, const Accept& accept, Mask& found) {
  if (cand == 0) {
    if (excl == 0 && accept(set)) {
      found = set;
      return true;
    }
    return false;
  }
  for (Mask c = cand; c; c &= c - 1) {
    const int w = std::countr_zero(c);
    Mask f = forbid;
    for (Mask s = set; s; s &= s - 1) f |= cyc[w][std::countr_zero(s)];
    const Mask next_set = set | bit(w);
    if (search_transitive(cyc, next_set, cand & ~f & ~bit(w), excl & ~f, f,
                          accept, found)) {
      return true;
    }
    cand &= ~bit(w);
    excl |= bit(w);
  }
  return false;
}

// Maximal transitive subset of `within` containing v whose removal leaves
// a set accepted by `accept`.
template <class Accept>
std::optional<Mask> transitive_through(const CycTable& cyc, int v, Mask within,
                                       const Accept& accept) {
  Mask found = 0;
  if (search_transitive(cyc, bit(v), within & ~bit(v), 0, 0, accept, found)) {
    return found;
  }
  return std::nullopt;
}

class SubsetDp {
 public:
  explicit SubsetDp(const Tournament& t)
      : n_(t.size()), cyc_(cyclic_triangle_masks(t)) {
    const std::size_t states = std::size_t{1} << n_;
    f_.assign(states, 0);
    for (std::size_t s = 1; s < states; ++s) {
      const Mask set = s;
      const int v = std::countr_zero(set);
      const int base = f_[set & ~bit(v)];
      const bool same = base > 0 && transitive_through(cyc_, v, set, [&](Mask tr) {
                                      return f_[set & ~tr] + 1 <= base;
                                    }).has_value();
      f_[s] = static_cast<std::uint8_t>(same ? base : base + 1);
    }
  }

  int chi() const { return f_.back(); }

  Coloring witness() const {
    std::vector<long long> labels(n_, -1);
    Mask rest = all_vertices(n_);
    int color = 0;
    while (rest) {
      const int v = std::countr_zero(rest);
      const int target = f_[rest] - 1;
      const auto cls = transitive_through(cyc_, v, rest, [&](Mask tr) {
        return f_[rest & ~tr] == target;
      });
      if (!cls) throw ConsistencyFault("subset DP witness reconstruction failed");
      for (Mask m = *cls; m; m &= m - 1) labels[std::countr_zero(m)] = color;
      rest &= ~*cls;
      ++color;
    }
    return Coloring::from_labels(labels);
  }

 private:
  int n_;
  CycTable cyc_;
  std::vector<std::uint8_t> f_;
};

class BranchAndBound {
 public:
  BranchAndBound(const Tournament& t, int k, std::uint64_t budget)
      : n_(t.size()), k_(k), budget_(budget), cyc_(cyclic_triangle_masks(t)) {
    color_.assign(n_, -1);
    members_.assign(k_, 0);
    forbid_.assign(k_, 0);
  }

  std::optional<Coloring> run() {
    if (n_ == 0) return Coloring{};
    if (k_ <= 0) return std::nullopt;
    if (!dfs(0, 0)) return std::nullopt;
    std::vector<long long> labels(color_.begin(), color_.end());
    return Coloring::from_labels(labels);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Colours available to v given `used` open colours: open colours whose
  // class v does not complete to a cyclic triangle, plus one fresh colour.
  int domain(int v, int used, int& first) const {
    int count = 0;
    first = -1;
    for (int c = 0; c < used; ++c) {
      if (!(forbid_[c] & bit(v))) {
        if (first < 0) first = c;
        ++count;
      }
    }
    if (used < k_) {
      if (first < 0) first = used;
      ++count;
    }
    return count;
  }

  bool dfs(int assigned, int used) {
    if (assigned == n_) return true;
    if (++nodes_ > budget_) {
      throw Undecided("k-colourability search exceeded its node budget of " +
                      std::to_string(budget_));
    }
    int best = -1;
    int best_count = k_ + 2;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int first = 0;
      const int count = domain(v, used, first);
      if (count == 0) return false;
      if (count < best_count) {
        best_count = count;
        best = v;
      }
    }
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (c < used && (forbid_[c] & bit(best))) continue;
      const Mask saved_forbid = forbid_[c];
      Mask f = forbid_[c];
      for (Mask s = members_[c]; s; s &= s - 1) f |= cyc_[best][std::countr_zero(s)];
      forbid_[c] = f;
      members_[c] |= bit(best);
      color_[best] = c;
      if (dfs(assigned + 1, std::max(used, c + 1))) return true;
      color_[best] = -1;
      members_[c] &= ~bit(best);
      forbid_[c] = saved_forbid;
    }
    return false;
  }

  int n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  CycTable cyc_;
  std::vector<int> color_;
  std::vector<Mask> members_;
  std::vector<Mask> forbid_;
};

}  // namespace

Coloring Coloring::from_labels(const std::vector<long long>& labels) {
  Coloring c;
  c.assign.resize(labels.size());
  std::map<long long, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) throw ValidationError("negative colour label");
    auto [it, inserted] = index.emplace(labels[i], static_cast<int>(index.size()));
    c.assign[i] = it->second;
  }
  c.k = static_cast<int>(index.size());
  return c;
}

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(k);
  for (std::size_t v = 0; v < assign.size(); ++v) {
    out[assign[v]].push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool is_valid_coloring(const Tournament& t, const Coloring& c) {
  if (static_cast<int>(c.assign.size()) != t.size()) {
    throw ValidationError("colouring covers " + std::to_string(c.assign.size()) +
                          " vertices, tournament has " + std::to_string(t.size()));
  }
  std::map<int, VertexSet> classes;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (c.assign[v] < 0) {
      throw ValidationError("vertex " + std::to_string(v) + " has no colour");
    }
    classes[c.assign[v]].push_back(v);
  }
  for (const auto& [color, members] : classes) {
    if (!is_transitive_set(t, members)) return false;
  }
  return true;
}

std::vector<std::vector<std::uint64_t>> cyclic_triangle_masks(const Tournament& t) {
  const int n = t.size();
  CycTable cyc(n, std::vector<Mask>(n, 0));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      // a -> b closes with b -> x -> a; b -> a closes with a -> x -> b.
      cyc[a][b] = t.has_edge(a, b) ? (t.out_mask(b) & t.in_mask(a))
                                   : (t.out_mask(a) & t.in_mask(b));
    }
  }
  return cyc;
}

ChromaticResult chromatic_number(const Tournament& t) {
  if (t.size() > kSubsetDpLimit) {
    throw LimitExceeded("exact chromatic number supports at most " +
                        std::to_string(kSubsetDpLimit) + " vertices, got " +
                        std::to_string(t.size()));
  }
  SubsetDp dp(t);
  return {dp.chi(), dp.witness()};
}

std::optional<Coloring> find_k_coloring(const Tournament& t, int k) {
  if (k < 0) throw ValidationError("colour count must be non-negative");
  if (t.size() <= kSubsetDpLimit) {
    ChromaticResult r = chromatic_number(t);
    if (r.chi > k) return std::nullopt;
    return r.witness;
  }
  return decide_k_colorable(t, k).coloring;
}

ChromaticBounds chromatic_bounds(const Tournament& t) {
  ChromaticBounds b;
  const int n = t.size();
  if (n == 0) return b;
  if (n > kMaskEngineLimit) {
    throw LimitExceeded("bounds support at most " + std::to_string(kMaskEngineLimit) +
                        " vertices");
  }
  b.lower = is_transitive(t) ? 1 : 2;
  const CycTable cyc = cyclic_triangle_masks(t);
  std::vector<Mask> members;
  std::vector<Mask> forbid;
  std::vector<long long> labels(n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t c = 0;
    while (c < members.size() && (forbid[c] & bit(v))) ++c;
    if (c == members.size()) {
      members.push_back(0);
      forbid.push_back(0);
    }
    for (Mask s = members[c]; s; s &= s - 1) forbid[c] |= cyc[v][std::countr_zero(s)];
    members[c] |= bit(v);
    labels[v] = static_cast<long long>(c);
  }
  b.upper_witness = Coloring::from_labels(labels);
  b.upper = b.upper_witness.k;
  return b;
}

ColorabilityResult decide_k_colorable(const Tournament& t, int k,
                                      std::uint64_t node_budget) {
  if (t.size() > kMaskEngineLimit) {
    throw LimitExceeded("branch-and-bound colouring supports at most " +
                        std::to_string(kMaskEngineLimit) + " vertices");
  }
  if (k < 0) throw ValidationError("colour count must be non-negative");
  BranchAndBound bb(t, k, node_budget);
  ColorabilityResult r;
  r.coloring = bb.run();
  r.nodes = bb.nodes();
  return r;
}

}  // namespace heroix
