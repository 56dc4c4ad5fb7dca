#include "heroix/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <numeric>

#include "heroix/error.hpp"
#include "heroix/limits.hpp"

namespace heroix {
namespace {

constexpr int kMaxN = kCanonicalLimit;

// Refines `color` (ranks 0..k-1) to the coarsest equitable partition below
// it. The new ranks sort cells by (old colour, out-neighbour colour
// counts), so the relative order of existing cells is preserved.
void refine(int n, const std::array<std::uint32_t, kMaxN>& out,
            std::vector<int>& color) {
  int cells = 1 + *std::max_element(color.begin(), color.end());
  std::vector<std::vector<int>> sig(n);
  std::vector<int> idx(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      sig[v].assign(cells + 1, 0);
      sig[v][0] = color[v];
      for (std::uint32_t m = out[v]; m; m &= m - 1) {
        ++sig[v][1 + color[std::countr_zero(m)]];
      }
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
      next[idx[i]] = rank;
    }
    const int next_cells = rank + 1;
    color = std::move(next);
    if (next_cells == cells) return;
    cells = next_cells;
  }
}

class LabelSearch {
 public:
  explicit LabelSearch(const Tournament& t) : n_(t.size()) {
    for (Vertex v = 0; v < n_; ++v) {
      out_[v] = static_cast<std::uint32_t>(t.out_mask(v));
    }
    cur_perm_.assign(n_, -1);
    cur_cols_.assign(n_, 0);
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    std::vector<int> color(n_);
    for (int v = 0; v < n_; ++v) color[v] = std::popcount(out_[v]);
    // Compress scores to ranks before refining.
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : color) {
      c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                           sorted.begin());
    }
    refine(n_, out_, color);
    dfs(0, color, false);
    return best_perm_;
  }

 private:
  std::uint32_t column(int p, Vertex v) const {
    std::uint32_t col = 0;
    for (int i = 0; i < p; ++i) {
      col = (col << 1) | ((out_[cur_perm_[i]] >> v) & 1u);
    }
    return col;
  }

  // Returns true when the best labelling was replaced inside this subtree;
  // the current path is then equal to the best one.
  bool dfs(int p, const std::vector<int>& color, bool less) {
    if (p == n_) {
      if (!has_best_ || less) {
        has_best_ = true;
        best_perm_ = cur_perm_;
        best_cols_ = cur_cols_;
        return true;
      }
      return false;
    }
    bool updated_any = false;
    std::vector<int> child(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] != p) continue;
      const std::uint32_t col = column(p, v);
      bool child_less = less;
      if (has_best_ && !less) {
        if (col > best_cols_[p]) continue;
        if (col < best_cols_[p]) child_less = true;
      }
      cur_perm_[p] = v;
      cur_cols_[p] = col;
      // Placed vertices keep their positions as colours; v takes p; the
      // rest are shifted past them and split by whether v beats them.
      for (Vertex u = 0; u < n_; ++u) {
        if (u == v) {
          child[u] = p;
        } else if (color[u] < p) {
          child[u] = color[u];
        } else {
          child[u] = n_ + 2 * color[u] + static_cast<int>((out_[v] >> u) & 1u);
        }
      }
      std::vector<int> ranked = child;
      std::vector<int> keys = child;
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (int& c : ranked) {
        c = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), c) -
                             keys.begin());
      }
      refine(n_, out_, ranked);
      if (dfs(p + 1, ranked, child_less)) {
        updated_any = true;
        less = false;
      }
    }
    return updated_any;
  }

  int n_;
  std::array<std::uint32_t, kMaxN> out_{};
  std::vector<Vertex> cur_perm_;
  std::vector<std::uint32_t> cur_cols_;
  bool has_best_ = false;
  std::vector<Vertex> best_perm_;
  std::vector<std::uint32_t> best_cols_;
};

}  // namespace

std::string CanonicalCode::to_hex() const {
  std::string s = std::to_string(n) + ":";
  char buf[17];
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(*it));
    s += buf;
  }
  return s;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::size_t h = static_cast<std::size_t>(c.n) * 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : c.bits) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Vertex> canonical_labeling(const Tournament& t) {
  if (t.size() > kCanonicalLimit) {
    throw LimitExceeded("canonical form supports at most " +
                        std::to_string(kCanonicalLimit) + " vertices, got " +
                        std::to_string(t.size()));
  }
  return LabelSearch(t).run();
}

CanonicalCode code_of_labelled(const Tournament& t) {
  CanonicalCode code;
  code.n = t.size();
  const int n = t.size();
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  code.bits.assign((nbits + 63) / 64, 0);
  std::size_t k = 0;
  for (Vertex p = 1; p < n; ++p) {
    for (Vertex i = 0; i < p; ++i, ++k) {
      if (t.has_edge(i, p)) code.bits[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
  }
  return code;
}

Tournament canonical_tournament(const Tournament& t) {
  const std::vector<Vertex> lab = canonical_labeling(t);
  return relabel(t, lab);
}

CanonicalCode canonical_form(const Tournament& t) {
  return code_of_labelled(canonical_tournament(t));
}

bool are_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<Vertex>> find_isomorphism(const Tournament& a,
                                                    const Tournament& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::vector<Vertex> la = canonical_labeling(a);
  const std::vector<Vertex> lb = canonical_labeling(b);
  if (code_of_labelled(relabel(a, la)) != code_of_labelled(relabel(b, lb))) {
    return std::nullopt;
  }
  std::vector<Vertex> map(a.size());
  for (int i = 0; i < a.size(); ++i) map[la[i]] = lb[i];
  return map;
}

}  // namespace heroix
