#include <doctest.h>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "tjoin/coloring.hpp"
#include "tjoin/cuts.hpp"
#include "tjoin/errors.hpp"

using namespace tjoin;

TEST_CASE("minimum odd cuts agree with brute force") {
  for (const char* spec : {"hexabond", "dk4", "c4x3", "dq3", "doubled-prism(3)", "doubled-prism(5)",
                           "doubled-prism(6)", "tripled-cycle(6)"}) {
    CAPTURE(spec);
    PlaneMultigraph g = named(spec);
    OddCutReport r = min_odd_cut(g);
    oracle::OddCuts o = oracle::odd_cuts(g);
    CHECK(r.min_odd.size == o.min_odd);
    if (o.min_nontrivial < (1 << 30)) {
      REQUIRE(r.min_nontrivial.has_value());
      CHECK(r.min_nontrivial->size == o.min_nontrivial);
      CHECK(oracle::cut_size(g, side_mask(r.min_nontrivial->side)) == o.min_nontrivial);
    } else {
      CHECK_FALSE(r.min_nontrivial.has_value());
    }
    // both orientations are counted by the oracle, one by the library
    CHECK(enumerate_odd_cuts(g).size() * 2 == o.odd_sides.size());
  }
}

TEST_CASE("known odd cut values") {
  CHECK(min_odd_cut(named("dk4")).min_odd.size == 6);
  CHECK_FALSE(min_odd_cut(named("dk4")).min_nontrivial.has_value());
  CHECK(min_odd_cut(named("doubled-prism(3)")).min_nontrivial->size == 6);
  CHECK(min_odd_cut(named("dq3")).min_nontrivial->size == 10);
  CHECK_THROWS_AS(min_odd_cut(named("doubled-dodecahedron")), CapExceeded);
  CHECK(min_odd_cut(named("doubled-dodecahedron"), 20).min_odd.size == 6);
}

TEST_CASE("T-cut parity") {
  // 6-regular with T = V: |cut(A)| = 6|A| - 2e(A) is even
  TCutParity p6 = min_odd_cut(named("dq3")).t_parity;
  CHECK(p6.odd == 0);
  CHECK(p6.even > 0);
  CHECK(p6.same_parity());
  // cubic: 3|A| - 2e(A) is odd on odd sides
  TCutParity p3 = min_odd_cut(data_file("sdk4.pg")).t_parity;
  CHECK(p3.even == 0);
  CHECK(p3.same_parity());
}

TEST_CASE("cut_size preconditions") {
  PlaneMultigraph g = named("dk4");
  CHECK_THROWS_AS(cut_size(g, std::vector<VertexId>{}), PreconditionError);
  CHECK_THROWS_AS(cut_size(g, std::vector<VertexId>{0, 1, 2, 3}), PreconditionError);
  Cut c = cut_size(g, std::vector<VertexId>{0});
  CHECK(c.size == 6);
  CHECK(c.odd);
  CHECK(c.trivial);
  CHECK(cut_edges(g, side_mask(c.side)).size() == 6);
}

TEST_CASE("split along a non-trivial 6-cut and recombine") {
  PlaneMultigraph g = named("doubled-prism(3)");
  Cut cut = *min_odd_cut(g).min_nontrivial;
  REQUIRE(cut.size == 6);
  SplitResult s = split_along_cut(g, cut);
  CHECK(s.part_a.is_regular(6));
  CHECK(s.part_b.is_regular(6));
  CHECK(s.part_a.vertex_count() + s.part_b.vertex_count() == g.vertex_count() + 2);
  CHECK(s.cut.size() == 6);

  auto a = find_six_edge_coloring(s.part_a);
  auto b = find_six_edge_coloring(s.part_b);
  REQUIRE(a.coloring);
  REQUIRE(b.coloring);
  EdgeColoring col = combine_colorings(s, *a.coloring, *b.coloring);
  CHECK(verify_coloring(g, col).accepted);
  CHECK(oracle::proper(g, as_ints(col)));

  CHECK_THROWS_AS(split_along_cut(g, cut_size(g, std::vector<VertexId>{0})), PreconditionError);
  CHECK_THROWS_AS(split_along_cut(g, cut_size(g, std::vector<VertexId>{0, 1})), PreconditionError);
}
