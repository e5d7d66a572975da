#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "tjoin/coloring.hpp"
#include "tjoin/errors.hpp"

using namespace tjoin;

TEST_CASE("solver colours the corpus") {
  for (const char* spec : {"hexabond", "dk4", "c4x3", "dq3", "doubled-prism(3)", "doubled-prism(6)",
                           "tripled-cycle(6)", "doubled-dodecahedron"}) {
    CAPTURE(spec);
    PlaneMultigraph g = named(spec);
    ColoringResult r = find_six_edge_coloring(g);
    REQUIRE(r.status == SearchStatus::found);
    REQUIRE(r.coloring);
    CHECK(verify_coloring(g, *r.coloring).accepted);
    CHECK(oracle::proper(g, as_ints(*r.coloring)));
  }
}

TEST_CASE("seeds give valid and reproducible colourings") {
  PlaneMultigraph g = named("dq3");
  for (std::uint64_t seed : {1u, 2u, 7u, 42u}) {
    SolverOptions o;
    o.seed = seed;
    auto a = find_six_edge_coloring(g, o);
    auto b = find_six_edge_coloring(g, o);
    REQUIRE(a.coloring);
    CHECK(a.coloring == b.coloring);
    CHECK(oracle::proper(g, as_ints(*a.coloring)));
  }
}

TEST_CASE("solver and oracle agree with the matching oracle on small graphs") {
  for (const char* spec : {"hexabond", "dk4", "c4x3", "tripled-cycle(4)"}) {
    CAPTURE(spec);
    PlaneMultigraph g = named(spec);
    SolverOptions o;
    o.oracle_cap = 0;  // keep the fallback out of the comparison
    o.exhaustive = true;
    auto r = find_six_edge_coloring(g, o);
    auto w = oracle_coloring(g);
    const bool colorable = oracle::six_colorable(g);
    CHECK(r.coloring.has_value() == colorable);
    CHECK(w.coloring.has_value() == colorable);
    if (w.coloring) CHECK(oracle::proper(g, as_ints(*w.coloring)));
  }
  CHECK_THROWS_AS(oracle_coloring(named("dq3")), CapExceeded);
}

TEST_CASE("solver preconditions") {
  CHECK_THROWS_AS(find_six_edge_coloring(data_file("sdk4.pg")), PreconditionError);
}

TEST_CASE("verify_coloring rejects clashes and size errors") {
  PlaneMultigraph g = named("dk4");
  EdgeColoring col = *find_six_edge_coloring(g).coloring;
  CHECK(verify_coloring(g, col).accepted);
  EdgeColoring bad = col;
  bad[0] = bad[1];
  CHECK_FALSE(verify_coloring(g, bad).accepted);
  bad = col;
  bad.pop_back();
  CHECK_FALSE(verify_coloring(g, bad).accepted);
}

TEST_CASE("Kempe swaps keep the colouring proper and are involutions") {
  PlaneMultigraph g = named("dq3");
  EdgeColoring col = *find_six_edge_coloring(g).coloring;
  for (DartId d = 0; d < g.dart_count(); d += 5) {
    const Color a = col[g.edge_of(d)];
    const Color b = a == Color::phi ? Color::alpha : color_at(index(a) + 1);
    auto [chain, swapped] = kempe_swap(g, col, d, a, b);
    CHECK(verify_coloring(g, swapped).accepted);
    for (EdgeId x : chain.edges(g)) CHECK((col[x] == a || col[x] == b));
    auto [chain2, back] = kempe_swap(g, swapped, d, a, b);
    CHECK(back == col);
    CHECK(chain2.darts.size() == chain.darts.size());
  }
  CHECK_THROWS_AS(kempe_chain(g, col, 0, Color::alpha, Color::alpha), PreconditionError);
}

TEST_CASE("colour classes are six disjoint T-joins") {
  for (const char* spec : {"dk4", "dq3", "doubled-prism(5)"}) {
    CAPTURE(spec);
    PlaneMultigraph g = named(spec);
    EdgeColoring col = *find_six_edge_coloring(g).coloring;
    TJoinPacking p = packing_from_coloring(g, col);
    REQUIRE(p.joins.size() == 6);
    CHECK(verify_packing(g, g.terminals(), p).accepted);
    std::set<EdgeId> all;
    for (const auto& j : p.joins)
      for (EdgeId e : j) CHECK(all.insert(e).second);

    TJoinPacking broken = p;
    broken.joins[0].push_back(broken.joins[1].front());
    CHECK_FALSE(verify_packing(g, g.terminals(), broken).accepted);
    broken = p;
    broken.joins.pop_back();
    CHECK_FALSE(verify_packing(g, g.terminals(), broken).accepted);
  }
}
