#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twindom/canonical.hpp"
#include "twindom/tournament.hpp"

namespace twindom {

inline constexpr int kLabeledEnumerationLimit = 6;     // 2^15 orientations at order 6
inline constexpr int kCanonicalEnumerationLimit = 8;   // 6880 classes at order 8
inline constexpr int kBurnsideLimit = 16;
inline constexpr char kGeneratorVersion[] = "twindom-1.0.0";

enum class GenMode { labeled, canonical };

// New vertex of index t.order() beats exactly the old vertices whose bit
// is set in `beats_pattern`.
Tournament extend_with_vertex(const Tournament& t, std::uint32_t beats_pattern);

// Canonical keys of every isomorphism class of the given order, sorted
// ascending. Built level by level: each order-k representative is
// extended by all 2^k arc patterns for a new vertex and the results are
// deduplicated by key. Workers split the representative list; the merge
// re-sorts, so the output never depends on the worker count.
std::vector<CanonicalKey> canonical_classes(int n, int jobs = 1);

// labeled: all 2^(n(n-1)/2) orientations in mask order (n <= 6).
// canonical: one representative per isomorphism class in key order
// (n <= 8).
std::vector<Tournament> generate_tournaments(int n, GenMode mode, int jobs = 1);

// Exact isomorphism-class count by orbit counting: average, over all
// vertex permutations, of the number of orientation assignments each
// fixes. Only permutations with all cycle lengths odd fix any tournament,
// and such a permutation fixes 2^q of them where q counts its pair
// orbits. Independent of the generator, so the two can audit each other.
using u128 = unsigned __int128;
u128 count_burnside(int n);
std::string u128_to_string(u128 value);

// Per-order enumeration result. Serializes to a single JSON document with
// the field order below and histogram keys ascending; byte-stable for a
// fixed order and version regardless of the worker count.
struct DomStarReport {
  int n = 0;
  std::uint64_t class_count = 0;
  int dom_star = 0;
  std::map<int, std::uint64_t> gamma_histogram;
  std::vector<std::string> extremal;  // trn encodings, smallest keys first
  std::string generator_version = kGeneratorVersion;

  std::string to_json() const;
};

// gamma_star over every class of order n (<= 8). The extremal list keeps
// at most `extremal_cap` attaining tournaments, smallest canonical keys
// first.
DomStarReport dom_star(int n, int jobs = 1, int extremal_cap = 16);

// Seeded random restarts plus arc-flip hill climbing (flips that do not
// decrease gamma_star are kept) until a tournament with gamma_star >=
// target appears or `budget` exact evaluations are spent. A found
// tournament is re-verified with the exact solver before it is returned;
// std::nullopt is the not-found-within-budget outcome.
std::optional<Tournament> search_gamma_at_least(int n, int target, std::uint64_t budget, std::uint64_t seed);

}  // namespace twindom
