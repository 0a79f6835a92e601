#pragma once

#include <compare>
#include <cstdint>

#include "twindom/tournament.hpp"

namespace twindom {

// Orders beyond this need a smarter labeling algorithm than the n!
// backtracking below; everything in this project stays at or under 8.
inline constexpr int kCanonicalOrderLimit = 8;

// Order-invariant fingerprint of a tournament: the lexicographically
// smallest arc-bit string over all vertex relabelings. Pairs are taken in
// extension order, (0,1), (0,2), (1,2), (0,3), ..., so that assigning one
// more vertex appends bits to the string; pair p is stored at bit
// (m-1-p), which makes integer order equal string order. Two tournaments
// of the same order have equal keys iff they are isomorphic.
struct CanonicalKey {
  int n = 0;
  std::uint64_t bits = 0;

  // The class member whose identity labeling realizes the key.
  Tournament representative() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const Tournament& t, int order_limit = kCanonicalOrderLimit);

}  // namespace twindom
