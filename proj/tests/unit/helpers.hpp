#pragma once

#include <string>
#include <vector>

#include "tjoin/plane_graph.hpp"
#include "tjoin/workbench.hpp"

#ifndef TJOIN_TEST_DATA
#define TJOIN_TEST_DATA "tests/data"
#endif

inline tjoin::PlaneMultigraph named(const std::string& spec) {
  return tjoin::generate(tjoin::parse_instance_spec(spec));
}

inline tjoin::PlaneMultigraph data_file(const std::string& name) {
  return tjoin::read_graph_file(std::string(TJOIN_TEST_DATA) + "/" + name);
}

inline std::vector<int> as_ints(const tjoin::EdgeColoring& col) {
  std::vector<int> out;
  for (auto c : col) out.push_back(tjoin::index(c));
  return out;
}
