#pragma once

#include <string>

#include "twindom/tournament.hpp"

namespace twindom {

// Subset scans get impractical past this many vertices.
inline constexpr int kExactSearchLimit = 20;

enum class Method { exact, sink_source, order8_case, half_witness, greedy };

const char* method_name(Method m) noexcept;

// A twin dominating set together with how it was obtained. `branch`
// records which case of the producing construction fired, so runs can be
// audited; `verified` means the checker accepted the set before it was
// returned (every constructor in this library verifies).
struct TdsCertificate {
  VertexSet set;
  int size = 0;
  Method method = Method::exact;
  std::string branch;
  bool verified = false;
};

// True iff every vertex outside S has an arc into S and an arc from S.
// One s in S can never serve both roles for the same outside vertex,
// since exactly one arc joins them.
bool is_twin_dominating(const Tournament& t, VertexSet s);

// Runs the checker and wraps the set; throws InternalVerificationFailure
// if the set does not dominate. Construction routines funnel their
// results through here so an unverified certificate cannot escape.
TdsCertificate make_verified(const Tournament& t, VertexSet s, Method method, std::string branch);

// Minimum twin dominating set by subset scan in increasing cardinality;
// among the minimum sets, the one with the smallest mask value is
// returned. Exact but exponential, hence the order cap.
TdsCertificate gamma_star(const Tournament& t, int exact_cap = kExactSearchLimit);

enum class GreedyMode { out, in };

// mode=out: repeatedly take the vertex of maximum outdegree within the
// undominated subtournament (ties to the lowest index) until every
// outside vertex has an in-arc from the result. Halving argument bounds
// the size by floor(log2 n) + 1. mode=in is the same on the reversed
// tournament: every outside vertex gets an out-arc into the result.
VertexSet greedy_dominating(const Tournament& t, GreedyMode mode);

// For a tournament with a sink t (or else a source s): {t} plus a greedy
// out-dominating set of T - t (dually, {s} plus a greedy in-dominating
// set of T - s). Size at most 2 + floor(log2(n-1)).
TdsCertificate sink_source_tds(const Tournament& t);

}  // namespace twindom
