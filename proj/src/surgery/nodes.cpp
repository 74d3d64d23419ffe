#include "stabeq/surgery/nodes.hpp"

namespace stabeq {

std::vector<Node> find_nodes(const AlgebraPtr& a, std::uint64_t seed) {
  std::vector<Node> out;
  for (auto v : a->structure().class_vertex) {
    Module s = simple_module(a, v);
    if (is_node(s, seed)) out.push_back({v, s});
  }
  return out;
}

std::size_t nonprojective_simple_count(const AlgebraPtr& a) {
  std::size_t n = 0;
  for (auto v : a->structure().class_vertex) {
    if (!is_projective(simple_module(a, v))) ++n;
  }
  return n;
}

}  // namespace stabeq
