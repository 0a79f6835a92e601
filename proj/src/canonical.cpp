#include "twindom/canonical.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace twindom {

namespace {

// bits fit one word only while n(n-1)/2 <= 64
constexpr int kHardLimit = 11;

// Minimal-string search over all relabelings. Positions are filled left
// to right; placing position k fixes the k bits pairing it with earlier
// positions, so a partial assignment owns a prefix of the key and any
// branch whose prefix exceeds the best known key can be dropped.
// Candidates are visited lowest invariant first (outdegree, then the
// sorted outdegree multiset of the out-neighborhood), which reaches a
// near-minimal leaf early and makes the pruning bite.
struct MinStringSearch {
  int n = 0;
  int m = 0;
  std::array<std::uint64_t, 12> row{};
  std::array<int, 12> order{};
  std::array<int, 12> at{};
  std::uint32_t used = 0;
  std::uint64_t best = 0;

  explicit MinStringSearch(const Tournament& t) {
    n = t.order();
    m = n * (n - 1) / 2;
    for (int v = 0; v < n; ++v) row[static_cast<std::size_t>(v)] = t.out_mask(v);

    struct Rank {
      int od = 0;
      std::array<int, 12> out_ods{};
      int v = 0;
    };
    std::array<Rank, 12> ranks{};
    for (int v = 0; v < n; ++v) {
      Rank r;
      r.v = v;
      r.od = std::popcount(row[static_cast<std::size_t>(v)]);
      int c = 0;
      for (std::uint64_t mm = row[static_cast<std::size_t>(v)]; mm; mm &= mm - 1)
        r.out_ods[static_cast<std::size_t>(c++)] = std::popcount(row[static_cast<std::size_t>(std::countr_zero(mm))]);
      std::sort(r.out_ods.begin(), r.out_ods.begin() + c);
      ranks[static_cast<std::size_t>(v)] = r;
    }
    std::sort(ranks.begin(), ranks.begin() + n, [](const Rank& a, const Rank& b) {
      if (a.od != b.od) return a.od < b.od;
      if (a.out_ods != b.out_ods) return a.out_ods < b.out_ods;
      return a.v < b.v;
    });
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = ranks[static_cast<std::size_t>(i)].v;
    best = m == 0 ? 0 : (m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }

  void dfs(int k, std::uint64_t cur, int len) {
    if (k == n) {
      if (cur < best) best = cur;
      return;
    }
    for (int c = 0; c < n; ++c) {
      const int u = order[static_cast<std::size_t>(c)];
      if ((used >> u) & 1u) continue;
      std::uint64_t seg = 0;
      for (int i = 0; i < k; ++i) seg = (seg << 1) | ((row[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])] >> u) & 1u);
      const std::uint64_t cur2 = (cur << k) | seg;
      const int len2 = len + k;
      if (cur2 > (best >> (m - len2))) continue;
      at[static_cast<std::size_t>(k)] = u;
      used |= 1u << u;
      dfs(k + 1, cur2, len2);
      used &= ~(1u << u);
    }
  }
};

}  // namespace

CanonicalKey canonical_key(const Tournament& t, int order_limit) {
  const int limit = std::min(order_limit, kHardLimit);
  if (t.order() > limit)
    fail(errc::order_too_large_for_canonicalization,
         "order " + std::to_string(t.order()) + " exceeds limit " + std::to_string(limit));
  MinStringSearch search(t);
  search.dfs(0, 0, 0);
  return {t.order(), search.best};
}

Tournament CanonicalKey::representative() const {
  const int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  int p = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++p) {
      if ((bits >> (m - 1 - p)) & 1u)
        arcs.emplace_back(i, j);
      else
        arcs.emplace_back(j, i);
    }
  return Tournament::from_arcs(n, arcs);
}

}  // namespace twindom
