#include "dgla/realisation.hpp"

#include <algorithm>
#include <deque>

namespace dgla {

FlatReport flat_realisation_check(const Realisation& r, const CellModelSpec& model) {
  FlatReport report;
  const Algebra& alg = model.algebra();

  for (const auto& edge : r.graph.edges) {
    const Element& label = r.edge_labels.at(edge.name);
    const Element flowed = flow_unit(label, r.vertex_labels.at(edge.from), model);
    report.edge_checks.push_back({edge.name, flowed == r.vertex_labels.at(edge.to)});
  }

  // Spanning forest by BFS; each non-tree edge closes one fundamental loop.
  std::map<std::string, std::vector<std::pair<std::size_t, bool>>> incident;
  for (std::size_t i = 0; i < r.graph.edges.size(); ++i) {
    incident[r.graph.edges[i].from].emplace_back(i, false);
    incident[r.graph.edges[i].to].emplace_back(i, true);
  }
  // path_to[v]: oriented edge sequence from the component root to v
  std::map<std::string, std::vector<OrientedLabel>> path_to;
  std::vector<bool> tree_edge(r.graph.edges.size(), false);
  std::vector<std::size_t> nontree;
  for (const auto& root : r.graph.vertices) {
    if (path_to.count(root)) continue;
    ++report.components;
    path_to[root] = {};
    std::deque<std::string> queue{root};
    while (!queue.empty()) {
      const std::string v = queue.front();
      queue.pop_front();
      for (auto [ei, rev] : incident[v]) {
        const auto& edge = r.graph.edges[ei];
        const std::string& other = rev ? edge.from : edge.to;
        if (path_to.count(other)) continue;
        tree_edge[ei] = true;
        auto path = path_to[v];
        path.push_back({r.edge_labels.at(edge.name), rev});
        path_to[other] = std::move(path);
        queue.push_back(other);
      }
    }
  }
  for (std::size_t i = 0; i < r.graph.edges.size(); ++i)
    if (!tree_edge[i]) nontree.push_back(i);

  report.flat = std::all_of(report.edge_checks.begin(), report.edge_checks.end(),
                            [](const auto& c) { return c.flows; });
  for (std::size_t ei : nontree) {
    const auto& edge = r.graph.edges[ei];
    std::vector<OrientedLabel> loop = path_to.at(edge.from);
    loop.push_back({r.edge_labels.at(edge.name), false});
    const auto& back = path_to.at(edge.to);
    for (auto it = back.rbegin(); it != back.rend(); ++it)
      loop.push_back({it->label, !it->reversed});
    const Element residual = path_bch(alg, loop);
    FlatReport::LoopCheck check;
    check.via_edge = edge.name;
    check.zero = residual.is_zero();
    check.checked_depth = alg.max_depth();
    check.first_nonzero_depth = first_nonzero_depth(residual);
    if (!check.zero) report.flat = false;
    report.loop_checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace dgla
