#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twindom/error.hpp"

namespace twindom {

inline constexpr int kMaxOrder = 64;

// Subset of the vertices 0..n-1 of some tournament, packed into one word.
struct VertexSet {
  std::uint64_t mask = 0;

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.add(v);
    return s;
  }

  bool contains(int v) const { return (mask >> v) & 1u; }
  void add(int v) { mask |= std::uint64_t{1} << v; }
  void remove(int v) { mask &= ~(std::uint64_t{1} << v); }
  int count() const { return std::popcount(mask); }
  bool empty() const { return mask == 0; }

  std::vector<int> to_vector() const;
  std::string to_csv() const;  // ascending, comma separated

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

inline std::uint64_t universe_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

struct Neighborhood {
  VertexSet inset;
  VertexSet outset;
};

// Complete oriented graph on n labeled vertices, 1 <= n <= 64. Row v of
// the adjacency relation is one machine word: bit u of out_mask(v) is set
// iff the arc (v,u) is present. Exactly one of (u,v), (v,u) exists for
// every pair, so the inset is derivable from the out row. Instances are
// immutable after construction and safe to share across threads.
class Tournament {
 public:
  // Builds from an explicit arc list; every unordered pair must be
  // oriented exactly once.
  static Tournament from_arcs(int n, std::span<const std::pair<int, int>> arcs);
  static Tournament from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs);

  // Linear order 0 -> 1 -> ... -> n-1 with all forward arcs.
  static Tournament transitive(int n);
  // Odd n only: i beats the (n-1)/2 vertices that follow it cyclically.
  static Tournament rotational(int n);
  // Deterministic per (n, seed): arc directions are the top bit of
  // consecutive splitmix64 outputs, one per pair (i,j) i<j in
  // lexicographic order. Bit-exact on every platform.
  static Tournament random(int n, std::uint64_t seed);

  // Text codec ("trn"): line 1 is the decimal order, line 2 holds one
  // character per pair (i,j) i<j in lexicographic order, '1' for i->j and
  // '0' for j->i. Trailing newline optional.
  static Tournament decode(std::string_view text);
  std::string encode() const;

  int order() const { return n_; }
  std::uint64_t universe() const { return universe_mask(n_); }

  bool beats(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (out_[static_cast<std::size_t>(u)] >> v) & 1u;
  }
  std::uint64_t out_mask(int v) const {
    check_vertex(v);
    return out_[static_cast<std::size_t>(v)];
  }
  std::uint64_t in_mask(int v) const {
    check_vertex(v);
    return universe() ^ out_[static_cast<std::size_t>(v)] ^ (std::uint64_t{1} << v);
  }
  int outdegree(int v) const { return std::popcount(out_mask(v)); }
  int indegree(int v) const { return n_ - 1 - outdegree(v); }

  Neighborhood neighborhoods(int v) const { return {VertexSet{in_mask(v)}, VertexSet{out_mask(v)}}; }

  // -1 when absent; a tournament has at most one of each.
  int source() const;  // indegree 0
  int sink() const;    // outdegree 0

  Tournament reversed() const;
  Tournament permuted(std::span<const int> perm) const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  Tournament(int n, std::vector<std::uint64_t> out) : n_(n), out_(std::move(out)) {}

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(errc::out_of_range_vertex, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
  }

  int n_;
  std::vector<std::uint64_t> out_;
};

// Subtournament on the kept vertices, relabeled densely. vertices[i] is
// the original label of new vertex i (ascending).
struct InducedTournament {
  Tournament tournament;
  std::vector<int> vertices;
};

InducedTournament induced(const Tournament& t, VertexSet keep);

}  // namespace twindom
