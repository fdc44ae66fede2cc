#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgla/cell_model.hpp"

namespace dgla {

struct Graph {
  struct Edge {
    std::string from;
    std::string to;
    std::string name;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

// An assignment of points to graph vertices and grading-0 elements to
// oriented edges. Flat when every edge flows between its endpoints and the
// BCH of every loop vanishes.
struct Realisation {
  Graph graph;
  std::map<std::string, Element> vertex_labels;
  std::map<std::string, Element> edge_labels;
};

struct FlatReport {
  struct EdgeCheck {
    std::string edge;
    bool flows = false;  // flow_unit(label, from) == to-label
  };
  // One fundamental loop per non-tree edge of a spanning forest.
  struct LoopCheck {
    std::string via_edge;
    bool zero = false;
    int checked_depth = 0;
    std::optional<int> first_nonzero_depth;
  };
  std::vector<EdgeCheck> edge_checks;
  std::vector<LoopCheck> loop_checks;
  int components = 0;
  bool flat = false;
};

FlatReport flat_realisation_check(const Realisation& r, const CellModelSpec& model);

}  // namespace dgla
