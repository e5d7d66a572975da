#include <doctest.h>

#include "helpers.hpp"
#include "tjoin/cuts.hpp"
#include "tjoin/errors.hpp"
#include "tjoin/workbench.hpp"

using namespace tjoin;

TEST_CASE("instance specs") {
  CHECK(parse_instance_spec("doubled-prism(5)") == InstanceSpec{"doubled-prism", 5});
  CHECK(parse_instance_spec("doubled-prism:5") == InstanceSpec{"doubled-prism", 5});
  CHECK(parse_instance_spec("dq3").label() == "dq3");
  CHECK(InstanceSpec{"tripled-cycle", 4}.label() == "tripled-cycle(4)");
  CHECK_THROWS_AS(parse_instance_spec("doubled-prism(x)"), InputError);
  CHECK_THROWS_AS(generate({"no-such", 0}), InputError);
  CHECK_THROWS_AS(generate({"doubled-prism", 2}), InputError);
  CHECK_THROWS_AS(generate({"tripled-cycle", 5}), InputError);
  CHECK(named_instances().size() == 9);
}

TEST_CASE("generators are deterministic") {
  for (const auto& spec : named_instances()) {
    CAPTURE(spec.label());
    CHECK(serialize_text(generate(spec)) == serialize_text(generate(spec)));
    CHECK(serialize_json(generate(spec)) == serialize_json(generate(spec)));
  }
}

TEST_CASE("doubled cubic instances meet the odd-cut hypothesis") {
  for (const auto& spec : named_instances()) {
    CAPTURE(spec.label());
    PlaneMultigraph g = generate(spec);
    CHECK(g.is_regular(6));
    CHECK(min_odd_cut(g, 20).min_odd.size == 6);
  }
}

TEST_CASE("edge multiplication keeps face degrees") {
  PlaneMultigraph k4 = data_file("sdk4.pg");
  PlaneMultigraph d = multiply_edges(k4, 2);
  CHECK(d.edge_count() == 12);
  int big = 0;
  for (const Face& f : d.faces()) big += f.degree() == 3;
  CHECK(big == 4);
  CHECK(d.face_count() == 4 + 6);
  CHECK_THROWS_AS(multiply_edges(k4, 0), InputError);
}

TEST_CASE("straight-line drawings") {
  // unit square with one diagonal
  PlaneMultigraph g = from_straight_line({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(g.face_count() == 3);
  CHECK(g.endpoints(0)[0] < g.endpoints(0)[1]);
}

TEST_CASE("graph files") {
  CHECK(data_file("dk4.pg") == named("dk4"));
  CHECK(data_file("doubled-prism-5.json") == named("doubled-prism(5)"));
  CHECK_THROWS_AS(read_graph_file("/nonexistent/file.pg"), InputError);
}
