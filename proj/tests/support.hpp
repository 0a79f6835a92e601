#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "twindom/tournament.hpp"

// Oracles for the test suites. These deliberately know nothing about the
// library's domination or canonicalization code paths: they only consume
// the arc relation through beats().
namespace support {

inline bool naive_is_tds(const twindom::Tournament& t, std::uint64_t set) {
  for (int v = 0; v < t.order(); ++v) {
    if ((set >> v) & 1u) continue;
    bool arc_into_set = false, arc_from_set = false;
    for (int s = 0; s < t.order(); ++s) {
      if (!((set >> s) & 1u)) continue;
      if (t.beats(v, s)) arc_into_set = true;
      if (t.beats(s, v)) arc_from_set = true;
    }
    if (!arc_into_set || !arc_from_set) return false;
  }
  return true;
}

// Full scan over all nonempty subsets.
inline int naive_gamma_star(const twindom::Tournament& t) {
  const int n = t.order();
  int best = n;
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << n); ++set)
    if (std::popcount(set) < best && naive_is_tds(t, set)) best = std::popcount(set);
  return best;
}

// Smallest subset mask of the given size that dominates, or 0.
inline std::uint64_t naive_smallest_witness(const twindom::Tournament& t, int size) {
  const int n = t.order();
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << n); ++set)
    if (std::popcount(set) == size && naive_is_tds(t, set)) return set;
  return 0;
}

// Minimal trn-order bit string over all relabelings by brute force,
// usable as a canonical-form oracle for tiny orders.
inline std::vector<int> brute_min_string(const twindom::Tournament& t) {
  const int n = t.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    const twindom::Tournament p = t.permuted(perm);
    std::vector<int> bits;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) bits.push_back(p.beats(i, j) ? 1 : 0);
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Fisher-Yates with our own stream so shuffles replay across platforms.
  std::vector<int> permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(next() % static_cast<std::uint64_t>(i + 1));
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    return p;
  }
};

}  // namespace support
