#include "twindom/tournament.hpp"

#include <algorithm>
#include <charconv>

namespace twindom {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder)
    fail(errc::order_out_of_range, "order " + std::to_string(n) + " not in 1.." + std::to_string(kMaxOrder));
}

// splitmix64 (Sebastiano Vigna, public domain). Fixed here so that seeded
// tournaments are reproducible bit for bit across builds and platforms.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string VertexSet::to_csv() const {
  std::string s;
  for (int v : to_vector()) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

Tournament Tournament::from_arcs(int n, std::span<const std::pair<int, int>> arcs) {
  check_order(n);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> oriented(static_cast<std::size_t>(n), 0);  // pair {u,v} already seen
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::out_of_range_vertex, "arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) fail(errc::self_loop, "arc (" + std::to_string(u) + "," + std::to_string(u) + ")");
    if ((oriented[static_cast<std::size_t>(u)] >> v) & 1u)
      fail(errc::duplicate_or_conflicting_arc, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} oriented twice");
    oriented[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    oriented[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    out[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  }
  const auto want = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (arcs.size() != want)
    fail(errc::incomplete_orientation,
         std::to_string(arcs.size()) + " arcs given, " + std::to_string(want) + " required");
  return Tournament(n, std::move(out));
}

Tournament Tournament::from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs) {
  return from_arcs(n, std::span<const std::pair<int, int>>(arcs.begin(), arcs.size()));
}

Tournament Tournament::transitive(int n) {
  check_order(n);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = universe_mask(n) & ~universe_mask(v + 1);
  return Tournament(n, std::move(out));
}

Tournament Tournament::rotational(int n) {
  check_order(n);
  if (n % 2 == 0) fail(errc::even_order_for_rotational, "order " + std::to_string(n));
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int d = 1; d <= (n - 1) / 2; ++d) out[static_cast<std::size_t>(v)] |= std::uint64_t{1} << ((v + d) % n);
  return Tournament(n, std::move(out));
}

Tournament Tournament::random(int n, std::uint64_t seed) {
  check_order(n);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  std::uint64_t state = seed;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (splitmix64(state) >> 63)
        out[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      else
        out[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    }
  return Tournament(n, std::move(out));
}

std::string Tournament::encode() const {
  std::string s = std::to_string(n_);
  s += '\n';
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) s += beats(i, j) ? '1' : '0';
  return s;
}

Tournament Tournament::decode(std::string_view text) {
  const auto nl = text.find('\n');
  std::string_view header = text.substr(0, nl);
  std::string_view bits = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
  if (ec != std::errc{} || ptr != header.data() + header.size() || n < 1 || n > kMaxOrder)
    fail(errc::malformed_header, "\"" + std::string(header) + "\"");
  if (!bits.empty() && bits.back() == '\n') bits.remove_suffix(1);
  for (char c : bits)
    if (c != '0' && c != '1') fail(errc::illegal_character, "'" + std::string(1, c) + "'");
  const auto want = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (bits.size() != want)
    fail(errc::wrong_bit_count, std::to_string(bits.size()) + " bits for order " + std::to_string(n));

  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) {
      if (bits[p] == '1')
        out[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      else
        out[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    }
  return Tournament(n, std::move(out));
}

int Tournament::source() const {
  for (int v = 0; v < n_; ++v)
    if (in_mask(v) == 0) return v;
  return -1;
}

int Tournament::sink() const {
  for (int v = 0; v < n_; ++v)
    if (out_mask(v) == 0) return v;
  return -1;
}

Tournament Tournament::reversed() const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = in_mask(v);
  return Tournament(n_, std::move(out));
}

Tournament Tournament::permuted(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) fail(errc::not_a_bijection, "permutation length mismatch");
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || ((seen >> p) & 1u)) fail(errc::not_a_bijection, "not a bijection on 0.." + std::to_string(n_ - 1));
    seen |= std::uint64_t{1} << p;
  }
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_), 0);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      if (beats(u, v))
        out[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] |= std::uint64_t{1} << perm[static_cast<std::size_t>(v)];
      else
        out[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] |= std::uint64_t{1} << perm[static_cast<std::size_t>(u)];
    }
  return Tournament(n_, std::move(out));
}

InducedTournament induced(const Tournament& t, VertexSet keep) {
  if (keep.empty()) fail(errc::empty_keep_set, "induced subtournament needs at least one vertex");
  if (keep.mask & ~t.universe()) fail(errc::set_not_subset_of_vertices, "keep set has bits beyond the vertex range");
  std::vector<int> vertices = keep.to_vector();
  const int k = static_cast<int>(vertices.size());
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (t.beats(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)]))
        arcs.emplace_back(a, b);
      else
        arcs.emplace_back(b, a);
    }
  return {Tournament::from_arcs(k, arcs), std::move(vertices)};
}

}  // namespace twindom
