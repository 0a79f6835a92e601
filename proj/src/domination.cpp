#include "twindom/domination.hpp"

#include <array>
#include <vector>

namespace twindom {

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::exact: return "exact";
    case Method::sink_source: return "sink_source";
    case Method::order8_case: return "order8_case";
    case Method::half_witness: return "half_witness";
    case Method::greedy: return "greedy";
  }
  return "unknown";
}

bool is_twin_dominating(const Tournament& t, VertexSet s) {
  if (s.mask & ~t.universe()) fail(errc::set_not_subset_of_vertices, "set has bits beyond the vertex range");
  const int n = t.order();
  for (int v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    if ((t.out_mask(v) & s.mask) == 0) return false;
    if ((t.in_mask(v) & s.mask) == 0) return false;
  }
  return true;
}

TdsCertificate make_verified(const Tournament& t, VertexSet s, Method method, std::string branch) {
  if (!is_twin_dominating(t, s))
    fail(errc::internal_verification_failure,
         std::string(method_name(method)) + "/" + branch + " produced a non-dominating set {" + s.to_csv() + "}");
  return {s, s.count(), method, std::move(branch), true};
}

TdsCertificate gamma_star(const Tournament& t, int exact_cap) {
  const int n = t.order();
  if (n > exact_cap || n > kMaxOrder - 1)
    fail(errc::order_too_large_for_exact_search,
         "order " + std::to_string(n) + " exceeds cap " + std::to_string(exact_cap));

  std::array<std::uint64_t, 64> out{};
  std::array<std::uint64_t, 64> in{};
  for (int v = 0; v < n; ++v) {
    out[static_cast<std::size_t>(v)] = t.out_mask(v);
    in[static_cast<std::size_t>(v)] = t.in_mask(v);
  }
  const std::uint64_t limit = std::uint64_t{1} << n;

  auto dominates = [&](std::uint64_t s) {
    for (std::uint64_t rest = t.universe() & ~s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((out[static_cast<std::size_t>(v)] & s) == 0 || (in[static_cast<std::size_t>(v)] & s) == 0) return false;
    }
    return true;
  };

  for (int k = 1; k <= n; ++k) {
    // Gosper's hack walks the k-subsets in increasing mask order, so the
    // first hit is the smallest witness of minimum size.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < limit) {
      if (dominates(mask)) return make_verified(t, VertexSet{mask}, Method::exact, "min");
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  fail(errc::internal_verification_failure, "no dominating subset found, which V itself contradicts");
}

VertexSet greedy_dominating(const Tournament& t, GreedyMode mode) {
  if (mode == GreedyMode::in) return greedy_dominating(t.reversed(), GreedyMode::out);
  std::uint64_t undominated = t.universe();
  std::uint64_t chosen = 0;
  while (undominated) {
    int pick = -1, best_deg = -1;
    for (std::uint64_t m = undominated; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int deg = std::popcount(t.out_mask(v) & undominated);
      if (deg > best_deg) {
        best_deg = deg;
        pick = v;
      }
    }
    chosen |= std::uint64_t{1} << pick;
    undominated &= ~(t.out_mask(pick) | (std::uint64_t{1} << pick));
  }
  return VertexSet{chosen};
}

namespace {

std::uint64_t map_back(VertexSet local, const std::vector<int>& labels) {
  std::uint64_t mask = 0;
  for (int v : local.to_vector()) mask |= std::uint64_t{1} << labels[static_cast<std::size_t>(v)];
  return mask;
}

int floor_log2(int x) { return std::bit_width(static_cast<unsigned>(x)) - 1; }

}  // namespace

TdsCertificate sink_source_tds(const Tournament& t) {
  const int n = t.order();
  if (n < 2) fail(errc::wrong_order, "order " + std::to_string(n) + " below 2");

  int anchor = t.sink();
  std::string branch = "sink";
  GreedyMode mode = GreedyMode::out;
  if (anchor < 0) {
    anchor = t.source();
    branch = "source";
    mode = GreedyMode::in;
  }
  if (anchor < 0) fail(errc::no_source_or_sink, "every vertex has both in- and out-arcs");

  // The anchor covers one arc direction for all outsiders; the greedy set
  // on the remaining n-1 vertices covers the other.
  VertexSet keep{t.universe() & ~(std::uint64_t{1} << anchor)};
  const InducedTournament rest = induced(t, keep);
  const VertexSet local = greedy_dominating(rest.tournament, mode);
  VertexSet s{map_back(local, rest.vertices) | (std::uint64_t{1} << anchor)};

  TdsCertificate cert = make_verified(t, s, Method::sink_source, branch);
  if (cert.size > 2 + floor_log2(n - 1))
    fail(errc::internal_verification_failure,
         "sink_source set of size " + std::to_string(cert.size) + " breaks the 2+floor(log2(n-1)) bound");
  return cert;
}

}  // namespace twindom
