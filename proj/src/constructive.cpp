#include "twindom/constructive.hpp"

#include <array>
#include <bit>
#include <vector>

namespace twindom {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

int lowest(std::uint64_t mask) { return std::countr_zero(mask); }

// Smallest arc (x,y) by lexicographic order of the ordered pair, with
// both endpoints inside `within`.
std::pair<int, int> smallest_arc(const Tournament& t, std::uint64_t within) {
  for (std::uint64_t xs = within; xs; xs &= xs - 1) {
    const int x = lowest(xs);
    const std::uint64_t targets = t.out_mask(x) & within;
    if (targets) return {x, lowest(targets)};
  }
  fail(errc::internal_verification_failure, "no arc inside a set of " + std::to_string(std::popcount(within)) + " vertices");
}

// Orients the two-element set {a,b} as (winner, loser).
std::pair<int, int> oriented_pair(const Tournament& t, std::uint64_t two) {
  const int a = lowest(two);
  const int b = lowest(two & (two - 1));
  return t.beats(a, b) ? std::pair{a, b} : std::pair{b, a};
}

// Re-verifies a delegated certificate against the tournament the caller
// actually asked about (delegation may have run on the reversal).
TdsCertificate rebrand(const TdsCertificate& inner, const Tournament& original, const std::string& prefix) {
  return make_verified(original, inner.set, inner.method, prefix + "/" + inner.branch);
}

// id(v) == 2 analysis. I(v) = {i,i'} with i -> i', O(v) = {z} + two pairs
// (o1p,o1), (o2p,o2) with o1p -> o1 and o2p -> o2, z the smallest
// out-neighbor. Either z reaches back into {i,o1,o2}, or z is beaten by
// all three and the arc between the pair winners decides.
TdsCertificate degree2_core(const Tournament& t, const Tournament& original, int v, const std::string& side) {
  const auto [i, ip] = oriented_pair(t, t.in_mask(v));
  const std::uint64_t outs = t.out_mask(v);
  const int z = lowest(outs);
  const std::uint64_t four = outs & ~bit(z);
  const auto [o1p, o1] = smallest_arc(t, four);
  const auto [o2p, o2] = oriented_pair(t, four & ~(bit(o1p) | bit(o1)));

  if (t.beats(z, i) || t.beats(z, o1) || t.beats(z, o2))
    return make_verified(original, VertexSet::of({v, i, o1, o2}), Method::order8_case, side + "/z_reaches_back");
  if (t.beats(o1p, o2p))
    return make_verified(original, VertexSet::of({v, i, z, o2p}), Method::order8_case, side + "/winner1_beats_winner2");
  return make_verified(original, VertexSet::of({v, i, z, o1p}), Method::order8_case, side + "/winner2_beats_winner1");
}

// id(v) == 1 analysis. I(v) = {z}; O(v) splits into three pairs
// (okp, ok) with okp -> ok.
TdsCertificate degree1_core(const Tournament& t, const Tournament& original, int v, const std::string& side) {
  const int z = lowest(t.in_mask(v));

  std::array<int, 3> loser{};   // ok
  std::array<int, 3> winner{};  // okp
  std::uint64_t unpaired = t.out_mask(v);
  for (int k = 0; k < 3; ++k) {
    const auto [w, l] = smallest_arc(t, unpaired);
    winner[static_cast<std::size_t>(k)] = w;
    loser[static_cast<std::size_t>(k)] = l;
    unpaired &= ~(bit(w) | bit(l));
  }

  // Step 1: some pair loser beats z.
  if (t.beats(loser[0], z) || t.beats(loser[1], z) || t.beats(loser[2], z))
    return make_verified(original, VertexSet::of({v, loser[0], loser[1], loser[2]}), Method::order8_case,
                         side + "/loser_beats_z");

  // Now z beats v's whole out-neighborhood's losers plus v itself, so
  // only pair winners can beat z.
  if (t.indegree(z) == 0) return rebrand(sink_source_tds(t), original, side + "/z_is_source");

  // Relabel pairs so that pair 3 is one whose winner beats z.
  int hit = -1;
  for (int k = 0; k < 3; ++k)
    if (t.beats(winner[static_cast<std::size_t>(k)], z)) {
      hit = k;
      break;
    }
  if (hit < 0) fail(errc::internal_verification_failure, "z has an in-arc but no pair winner provides it");
  std::swap(winner[static_cast<std::size_t>(hit)], winner[2]);
  std::swap(loser[static_cast<std::size_t>(hit)], loser[2]);
  const int o1 = loser[0], o1p = winner[0];
  const int o2 = loser[1], o2p = winner[1];
  const int o3 = loser[2];

  // Step 2: o3 reaches back into {o1, o2}.
  if (t.beats(o3, o1) || t.beats(o3, o2))
    return make_verified(original, VertexSet::of({v, z, o1, o2}), Method::order8_case, side + "/o3_reaches_back");

  // Step 3: o3 now loses to v, z, o1, o2 and its own pair winner, so its
  // outdegree is decided by the two other pair winners.
  if (t.beats(o3, o1p) && t.beats(o3, o2p)) {
    if (t.outdegree(o3) != 2)
      fail(errc::internal_verification_failure, "expected od(o3) == 2, got " + std::to_string(t.outdegree(o3)));
    return rebrand(tds_degree2_case(t, o3), original, side + "/o3_has_outdegree_2");
  }
  if (t.beats(o1p, o3))
    return make_verified(original, VertexSet::of({v, z, o2, o3}), Method::order8_case, side + "/winner1_beats_o3");
  return make_verified(original, VertexSet::of({v, z, o1, o3}), Method::order8_case, side + "/winner2_beats_o3");
}

}  // namespace

TdsCertificate tds_degree2_case(const Tournament& t, int v) {
  if (t.order() != 8) fail(errc::wrong_order, "order " + std::to_string(t.order()) + ", need 8");
  if (t.indegree(v) == 2) return degree2_core(t, t, v, "id2");
  if (t.outdegree(v) == 2) return degree2_core(t.reversed(), t, v, "od2");
  fail(errc::degree_condition_unmet, "vertex " + std::to_string(v) + " has id " + std::to_string(t.indegree(v)) +
                                         ", od " + std::to_string(t.outdegree(v)) + ", need one equal to 2");
}

TdsCertificate tds_degree1_case(const Tournament& t, int v) {
  if (t.order() != 8) fail(errc::wrong_order, "order " + std::to_string(t.order()) + ", need 8");
  if (t.indegree(v) == 1) return degree1_core(t, t, v, "id1");
  if (t.outdegree(v) == 1) return degree1_core(t.reversed(), t, v, "od1");
  fail(errc::degree_condition_unmet, "vertex " + std::to_string(v) + " has id " + std::to_string(t.indegree(v)) +
                                         ", od " + std::to_string(t.outdegree(v)) + ", need one equal to 1");
}

TdsCertificate tds_order8(const Tournament& t) {
  if (t.order() != 8) fail(errc::wrong_order, "order " + std::to_string(t.order()) + ", need 8");

  if (t.source() >= 0 || t.sink() >= 0) return rebrand(sink_source_tds(t), t, "order8");

  for (int d : {1, 2}) {
    for (int v = 0; v < 8; ++v)
      if (t.indegree(v) == d || t.outdegree(v) == d)
        return d == 1 ? tds_degree1_case(t, v) : tds_degree2_case(t, v);
  }

  // All indegrees are 3 or 4 now, and they sum to 28, so exactly four
  // vertices have indegree 3.
  int id3_count = 0, v = -1;
  for (int u = 0; u < 8; ++u)
    if (t.indegree(u) == 3) {
      ++id3_count;
      if (v < 0) v = u;
    }
  if (id3_count != 4)
    fail(errc::internal_verification_failure, "near-regular case with " + std::to_string(id3_count) + " indegree-3 vertices");

  // I(v) = {i,i',z} with i -> i'; O(v) = (o1p,o1), (o2p,o2) with the pair
  // winners beating the pair losers.
  const std::uint64_t ins = t.in_mask(v);
  const auto [i, ip] = smallest_arc(t, ins);
  const int z = lowest(ins & ~(bit(i) | bit(ip)));
  const auto [o1p, o1] = smallest_arc(t, t.out_mask(v));
  const auto [o2p, o2] = oriented_pair(t, t.out_mask(v) & ~(bit(o1p) | bit(o1)));

  if (t.beats(i, z) || t.beats(o1, z) || t.beats(o2, z))
    return make_verified(t, VertexSet::of({v, i, o1, o2}), Method::order8_case, "regular/z_is_beaten");
  // Otherwise O(z) = {v,i,o1,o2} exactly, and the o1/o2 arc decides.
  if (t.beats(o1, o2))
    return make_verified(t, VertexSet::of({v, z, i, o2}), Method::order8_case, "regular/o1_beats_o2");
  return make_verified(t, VertexSet::of({v, z, i, o1}), Method::order8_case, "regular/o2_beats_o1");
}

TdsCertificate half_witness(const Tournament& t) {
  const int n = t.order();
  if (n % 2 != 0) fail(errc::odd_order, "order " + std::to_string(n));
  if (n < 8) fail(errc::order_below_eight, "order " + std::to_string(n));

  if (n == 8) {
    TdsCertificate base = tds_order8(t);
    base.method = Method::half_witness;
    base.branch = "base/" + base.branch;
    return base;
  }

  const int k = n / 2 - 1;

  // Strip the endpoints of the smallest arc and recurse on the rest.
  const auto [v1, v2] = smallest_arc(t, t.universe());
  const InducedTournament sub = induced(t, VertexSet{t.universe() & ~(bit(v1) | bit(v2))});
  const TdsCertificate inner = half_witness(sub.tournament);
  std::uint64_t s1 = 0;
  for (int u : inner.set.to_vector()) s1 |= bit(sub.vertices[static_cast<std::size_t>(u)]);

  if (inner.size > k)
    fail(errc::internal_verification_failure, "recursive set of size " + std::to_string(inner.size) + " exceeds " + std::to_string(k));

  auto finish = [&](std::uint64_t mask, const std::string& branch) {
    TdsCertificate cert = make_verified(t, VertexSet{mask}, Method::half_witness, branch);
    if (cert.size > n / 2)
      fail(errc::internal_verification_failure, "witness of size " + std::to_string(cert.size) + " exceeds n/2");
    return cert;
  };

  if (inner.size < k) return finish(s1 | bit(v1) | bit(v2), "extend_pair");

  // Some recursive-set vertex already handles v1 or v2.
  if (t.in_mask(v1) & s1) return finish(s1 | bit(v2), "add_v2");
  if (t.out_mask(v2) & s1) return finish(s1 | bit(v1), "add_v1");

  // v1 beats all of S1 and all of S1 beats v2.
  if (t.source() >= 0 || t.sink() >= 0) {
    TdsCertificate cert = rebrand(sink_source_tds(t), t, "fallback");
    cert.method = Method::half_witness;
    if (cert.size > n / 2)
      fail(errc::internal_verification_failure, "sink_source fallback of size " + std::to_string(cert.size) + " exceeds n/2");
    return cert;
  }

  const std::uint64_t in_v1 = t.in_mask(v1);
  const std::uint64_t out_v2 = t.out_mask(v2);
  if (!in_v1 || !out_v2) fail(errc::internal_verification_failure, "missing o1/o2 despite no source or sink");
  const int o1 = lowest(in_v1);
  const int o2 = lowest(out_v2);

  // A third vertex closing a cycle v1 -> v2 -> o -> v1 lets the
  // complement drop o.
  if (o1 == o2) return finish(t.universe() & ~(s1 | bit(o1)), "cycle_shared");
  if (t.beats(v2, o1)) return finish(t.universe() & ~(s1 | bit(o1)), "cycle_o1");
  if (t.beats(o2, v1)) return finish(t.universe() & ~(s1 | bit(o2)), "cycle_o2");

  // Now o1 -> v2 and v1 -> o2; the complement of S1 dominates but has one
  // vertex to spare.
  const std::uint64_t complement = t.universe() & ~s1;
  if (t.beats(o2, o1)) return finish(complement & ~bit(o2), "complement_drop_o2");

  const std::uint64_t spare = complement & ~(bit(v1) | bit(v2) | bit(o1) | bit(o2));
  if (!spare) fail(errc::internal_verification_failure, "no spare vertex in the complement");
  const int v = lowest(spare);
  if (t.beats(v, o1)) return finish(complement & ~bit(o1), "complement_drop_o1");
  if (t.beats(o2, v)) return finish(complement & ~bit(o2), "complement_drop_o2_via_spare");
  return finish(complement & ~bit(v), "complement_drop_spare");
}

}  // namespace twindom
