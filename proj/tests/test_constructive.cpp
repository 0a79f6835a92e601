#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "twindom/constructive.hpp"
#include "twindom/enumeration.hpp"

using namespace twindom;

namespace {

// Order 8 with id(0) = 2 arranged so that the smallest out-neighbor of 0
// is beaten by everything the first case tests, forcing the pair-winner
// comparison. Flipping `winners_forward` flips the arc between the two
// pair winners the algorithm will select.
Tournament degree2_config(bool winners_forward) {
  std::vector<std::pair<int, int>> arcs = {
      {1, 0}, {2, 0},                          // I(0)
      {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7},  // O(0)
      {1, 2},                                  // arc inside I(0)
      {4, 5}, {6, 7},                          // the pairs the search picks
      {1, 3}, {5, 3}, {7, 3},                  // z = 3 beaten by i, o1, o2
      {1, 4}, {1, 5}, {1, 6}, {1, 7},
      {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
      {3, 4}, {3, 6}, {4, 7}, {5, 6}, {5, 7},
  };
  arcs.push_back(winners_forward ? std::pair{4, 6} : std::pair{6, 4});
  return Tournament::from_arcs(8, arcs);
}

// Order 8 with id(0) = 1 and z = 1. The pair search picks (2,3), (4,5),
// (6,7); z beats every pair loser, only 4 beats z, and o3 = 5 after the
// relabel. `toggles` selects the arcs that steer steps 2 and 3.
Tournament degree1_config(bool z_is_source, bool delegate_od2) {
  std::vector<std::pair<int, int>> arcs = {
      {1, 0},
      {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7},
      {2, 3}, {4, 5}, {6, 7},          // pairs
      {1, 3}, {1, 5}, {1, 7},          // z beats every pair loser
      {1, 2}, {1, 6},                  // z beats two pair winners
      {3, 5}, {7, 5},                  // o3 loses back into the pair losers
      {2, 4}, {2, 6}, {2, 7},
      {3, 4}, {3, 6}, {3, 7},
      {4, 6}, {4, 7},
  };
  arcs.push_back(z_is_source ? std::pair{1, 4} : std::pair{4, 1});
  if (delegate_od2) {
    arcs.push_back({5, 2});
    arcs.push_back({5, 6});
  } else {
    arcs.push_back({2, 5});
    arcs.push_back({5, 6});
  }
  return Tournament::from_arcs(8, arcs);
}

// Rotational order 7 plus a vertex beating the first four: every
// indegree lands in {3,4}.
Tournament near_regular8() { return extend_with_vertex(Tournament::rotational(7), 0b0001111u); }

void check_cert(const Tournament& t, const TdsCertificate& cert, int max_size) {
  CHECK(cert.verified);
  CHECK(cert.size <= max_size);
  CHECK(support::naive_is_tds(t, cert.set.mask));
  CHECK_FALSE(cert.branch.empty());
}

}  // namespace

TEST_CASE("degree-2 case covers both sub-branches") {
  {
    const Tournament t = degree2_config(true);
    REQUIRE(t.indegree(0) == 2);
    const TdsCertificate cert = tds_degree2_case(t, 0);
    check_cert(t, cert, 4);
    CHECK(cert.branch == "id2/winner1_beats_winner2");
    CHECK(cert.set == VertexSet::of({0, 1, 3, 6}));
  }
  {
    const Tournament t = degree2_config(false);
    const TdsCertificate cert = tds_degree2_case(t, 0);
    check_cert(t, cert, 4);
    CHECK(cert.branch == "id2/winner2_beats_winner1");
    CHECK(cert.set == VertexSet::of({0, 1, 3, 4}));
  }
}

TEST_CASE("degree-2 case first branch fires when z reaches back") {
  // Same shape but z -> o2, landing in the first case.
  std::vector<std::pair<int, int>> arcs = {
      {1, 0}, {2, 0}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 2},
      {4, 5}, {6, 7}, {1, 3}, {5, 3}, {3, 7}, {1, 4}, {1, 5}, {1, 6},
      {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 6},
      {4, 7}, {5, 6}, {5, 7}, {4, 6},
  };
  const Tournament t = Tournament::from_arcs(8, arcs);
  REQUIRE(t.indegree(0) == 2);
  const TdsCertificate cert = tds_degree2_case(t, 0);
  check_cert(t, cert, 4);
  CHECK(cert.branch == "id2/z_reaches_back");
}

TEST_CASE("degree-2 case handles the od side by reversal") {
  const Tournament r = degree2_config(true).reversed();
  REQUIRE(r.outdegree(0) == 2);
  const TdsCertificate cert = tds_degree2_case(r, 0);
  check_cert(r, cert, 4);
  CHECK(cert.branch.substr(0, 3) == "od2");
}

TEST_CASE("degree-2 case rejects bad input") {
  CHECK_THROWS_AS(tds_degree2_case(Tournament::random(7, 1), 0), Error);
  const Tournament t = near_regular8();
  CHECK_THROWS_AS(tds_degree2_case(t, 0), Error);
}

TEST_CASE("degree-1 case main path") {
  const Tournament t = degree1_config(false, false);
  REQUIRE(t.indegree(0) == 1);
  const TdsCertificate cert = tds_degree1_case(t, 0);
  check_cert(t, cert, 4);
  CHECK(cert.branch == "id1/winner1_beats_o3");
  CHECK(cert.set == VertexSet::of({0, 1, 5, 7}));

  const Tournament r = t.reversed();
  REQUIRE(r.outdegree(0) == 1);
  const TdsCertificate rcert = tds_degree1_case(r, 0);
  check_cert(r, rcert, 4);
  CHECK(rcert.branch.substr(0, 3) == "od1");
}

TEST_CASE("degree-1 case delegates when z is a source") {
  const Tournament t = degree1_config(true, false);
  REQUIRE(t.indegree(1) == 0);
  const TdsCertificate cert = tds_degree1_case(t, 0);
  check_cert(t, cert, 4);
  CHECK(cert.branch.find("z_is_source") != std::string::npos);
}

TEST_CASE("degree-1 case delegates when o3 has outdegree 2") {
  const Tournament t = degree1_config(false, true);
  REQUIRE(t.outdegree(5) == 2);
  const TdsCertificate cert = tds_degree1_case(t, 0);
  check_cert(t, cert, 4);
  CHECK(cert.branch.find("o3_has_outdegree_2") != std::string::npos);
}

TEST_CASE("degree-1 case rejects bad input") {
  CHECK_THROWS_AS(tds_degree1_case(Tournament::transitive(7), 0), Error);
  CHECK_THROWS_AS(tds_degree1_case(near_regular8(), 0), Error);
}

TEST_CASE("order-8 dispatcher per degree profile") {
  {
    const TdsCertificate cert = tds_order8(Tournament::transitive(8));
    check_cert(Tournament::transitive(8), cert, 4);
    CHECK(cert.branch.substr(0, 6) == "order8");
    CHECK(cert.size == 2);
  }
  {
    const Tournament t = near_regular8();
    const TdsCertificate cert = tds_order8(t);
    check_cert(t, cert, 4);
    CHECK(cert.branch.substr(0, 7) == "regular");
  }
  CHECK_THROWS_AS(tds_order8(Tournament::random(9, 1)), Error);
}

TEST_CASE("order-8 analysis stays within 4 on random tournaments") {
  support::SplitMix rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const Tournament t = Tournament::random(8, rng.next());
    const TdsCertificate cert = tds_order8(t);
    check_cert(t, cert, 4);
  }
}

TEST_CASE("half_witness on fixed instances") {
  const Tournament tt12 = Tournament::transitive(12);
  const TdsCertificate c12 = half_witness(tt12);
  check_cert(tt12, c12, 6);
  CHECK(c12.method == Method::half_witness);

  const Tournament r10 = Tournament::random(10, 42);
  const TdsCertificate c10 = half_witness(r10);
  check_cert(r10, c10, 5);
  CHECK(gamma_star(r10).size <= 5);
}

TEST_CASE("half_witness across seeds and orders") {
  for (int n : {8, 10, 12}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Tournament t = Tournament::random(n, seed);
      const TdsCertificate cert = half_witness(t);
      check_cert(t, cert, n / 2);
      const int exact = gamma_star(t).size;
      CHECK(exact <= n / 2);
      CHECK(cert.size >= exact);
    }
  }
}

TEST_CASE("half_witness order preconditions") {
  CHECK_THROWS_AS(half_witness(Tournament::random(9, 1)), Error);
  CHECK_THROWS_AS(half_witness(Tournament::random(6, 1)), Error);
  try {
    half_witness(Tournament::random(6, 1));
  } catch (const Error& e) {
    CHECK(e.code() == errc::order_below_eight);
  }
  try {
    half_witness(Tournament::random(9, 1));
  } catch (const Error& e) {
    CHECK(e.code() == errc::odd_order);
  }
}
