#include <doctest.h>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "tjoin/errors.hpp"
#include "tjoin/plane_graph.hpp"

using namespace tjoin;

TEST_CASE("named instances have the expected counts") {
  struct Row {
    const char* spec;
    int v, e, f;
  };
  // F from Euler: F = 2 - V + E
  for (Row r : {Row{"hexabond", 2, 6, 6}, Row{"dk4", 4, 12, 10}, Row{"c4x3", 4, 12, 10}, Row{"dq3", 8, 24, 18},
                Row{"doubled-prism(5)", 10, 30, 22}, Row{"doubled-dodecahedron", 20, 60, 42}}) {
    CAPTURE(r.spec);
    PlaneMultigraph g = named(r.spec);
    CHECK(g.vertex_count() == r.v);
    CHECK(g.edge_count() == r.e);
    CHECK(g.face_count() == r.f);
    CHECK(oracle::count_faces(g) == g.face_count());
    CHECK(g.is_regular(6));
  }
}

TEST_CASE("face walk and rotation are consistent") {
  PlaneMultigraph g = named("dq3");
  for (DartId d = 0; d < g.dart_count(); ++d) {
    CHECK(g.reverse(g.reverse(d)) == d);
    CHECK(g.origin(g.face_next(d)) == g.target(d));
    CHECK(g.rotation_prev(g.rotation_next(d)) == d);
    CHECK(g.face_of(g.face_next(d)) == g.face_of(d));
  }
  int sum = 0;
  for (const Face& f : g.faces()) sum += f.degree();
  CHECK(sum == g.dart_count());
}

TEST_CASE("parser rejects broken embeddings") {
  auto rejects = [](const std::string& text, const std::string& fragment) {
    try {
      (void)parse_plane_graph(text);
    } catch (const InputError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
      return;
    }
    FAIL("accepted: " << text);
  };
  rejects("planegraph v1\nvertices 2\nrot 0 0\nrot 1 1 2\nedge 0 0 1\nedge 1 2 3\n", "dangling");
  rejects("planegraph v1\nvertices 2\nrot 0 0 1\nrot 1\nedge 0 0 1\n", "loop");
  rejects("planegraph v1\nvertices 4\nrot 0 0 2\nrot 1 3 1\nrot 2 4 6\nrot 3 7 5\n"
          "edge 0 0 1\nedge 1 2 3\nedge 2 4 5\nedge 3 6 7\n",
          "disconnected");
  // K4 with one vertex flipped lives on the torus
  rejects("planegraph v1\nvertices 4\nrot 0 0 4 2\nrot 1 1 8 6\nrot 2 3 7 10\nrot 3 5 11 9\n"
          "edge 0 0 1\nedge 1 2 3\nedge 2 4 5\nedge 3 6 7\nedge 4 8 9\nedge 5 10 11\n",
          "Euler");
  rejects("planegraph v1\nvertices 2\nrot 0 0 2\nrot 1 3 1\nedge 0 0 1\nedge 1 2 3\nT 0\n", "odd |T|");
  rejects("nonsense\n", "");
}

TEST_CASE("text and JSON round trips are exact") {
  for (const auto& spec : named_instances()) {
    CAPTURE(spec.label());
    PlaneMultigraph g = generate(spec);
    const std::string text = serialize_text(g);
    CHECK(serialize_text(parse_plane_graph(text)) == text);
    CHECK(parse_plane_graph(text) == g);
    const std::string json = serialize_json(g);
    CHECK(serialize_json(parse_plane_graph(json)) == json);
    CHECK(parse_plane_graph(json) == g);
  }
  PlaneMultigraph c3 = data_file("c3x3.pg");
  CHECK(c3.terminals_explicit());
  CHECK(serialize_text(parse_plane_graph(serialize_text(c3))) == serialize_text(c3));
}

TEST_CASE("multigons of the small instances") {
  auto dk4 = find_multigons(named("dk4"));
  CHECK(dk4.size() == 6);
  for (const auto& m : dk4) {
    CHECK(m.order() == 2);
    CHECK_FALSE(m.cyclic);
    CHECK(m.bigons.size() == 1);
  }
  auto c4 = find_multigons(named("c4x3"));
  CHECK(c4.size() == 4);
  for (const auto& m : c4) CHECK(m.order() == 3);

  auto hb = find_multigons(named("hexabond"));
  REQUIRE(hb.size() == 1);
  CHECK(hb[0].cyclic);
  CHECK(hb[0].order() == 6);
  CHECK_THROWS_AS(classify(named("hexabond")), PreconditionError);

  // each bigon face lies in exactly one multigon
  PlaneMultigraph g = named("doubled-prism(4)");
  std::vector<int> hits(g.face_count(), 0);
  for (const auto& m : find_multigons(g))
    for (FaceId f : m.bigons) ++hits[f];
  for (const Face& f : g.faces()) CHECK(hits[f.id] == (f.degree() == 2 ? 1 : 0));
}

TEST_CASE("classification of DK4, C4x3 and DQ3") {
  FaceClassification dk4 = classify(named("dk4"));
  CHECK(dk4.charged_faces().size() == 4);
  for (FaceId f : dk4.charged_faces()) {
    const FaceInfo& fi = dk4.face(f);
    CHECK(fi.degree == 3);
    CHECK(fi.bigness == 0);
    CHECK(fi.bigon_count == 3);
    CHECK(fi.single_count == 0);
    CHECK_FALSE(fi.dangerous);
  }

  FaceClassification c4 = classify(named("c4x3"));
  CHECK(c4.charged_faces().size() == 2);
  for (FaceId f : c4.charged_faces()) {
    CHECK(c4.face(f).degree == 4);
    CHECK(c4.face(f).trigon_count == 4);
  }
  for (bool d : c4.multigon_dangerous) CHECK_FALSE(d);

  FaceClassification dq = classify(named("dq3"));
  CHECK(dq.charged_faces().size() == 6);
  for (FaceId f : dq.charged_faces()) CHECK(dq.face(f).bigon_count == 4);
  CHECK(dq.f_incidence.size() == 24);
}

TEST_CASE("simple cubic graphs classify without multigons") {
  FaceClassification k4 = classify(data_file("sdk4.pg"));
  CHECK(k4.multigons.empty());
  for (FaceId f : k4.charged_faces()) {
    CHECK(k4.face(f).single_count == 3);
    CHECK(k4.face(f).bigness == 0);
  }
}
