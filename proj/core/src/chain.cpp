#include "cuspdens/chain.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "cuspdens/errors.hpp"

namespace cusp {

VertexId ChainGraph::add_vertex(ChainVertex v) {
  if (find(v.name)) throw ValidationError("duplicate chain vertex '" + v.name + "'");
  by_name_.emplace(v.name, vertices_.size());
  vertices_.push_back(std::move(v));
  adjacency_.emplace_back();
  return vertices_.size() - 1;
}

VertexId ChainGraph::add_vertex(std::string name, long long coefficient) {
  return add_vertex(ChainVertex{std::move(name), coefficient, true, std::nullopt});
}

void ChainGraph::add_edge(VertexId a, VertexId b) {
  if (a >= size() || b >= size()) throw ValidationError("chain edge references a missing vertex");
  if (a == b) throw ValidationError("chain edge is a self-loop at '" + vertices_[a].name + "'");
  const auto& na = adjacency_[a];
  if (std::find(na.begin(), na.end(), b) != na.end()) {
    throw ValidationError("repeated chain edge '" + vertices_[a].name + "'-'" +
                          vertices_[b].name + "'");
  }
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  edges_.emplace_back(std::min(a, b), std::max(a, b));
}

std::optional<VertexId> ChainGraph::find(std::string_view name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

ChainCheck check_chain(const ChainGraph& g) {
  const std::size_t n = g.size();
  ChainCheck result;
  std::vector<VertexId> parent(n);
  std::vector<int> depth(n, -1);

  for (VertexId root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    std::vector<VertexId> tree;
    std::vector<VertexId> stack{root};
    depth[root] = 0;
    parent[root] = root;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      tree.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (w == parent[v] && v != root) continue;
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          stack.push_back(w);
        } else if (result.acyclic) {
          // Non-tree edge v–w: walk both ends up to their common ancestor.
          result.acyclic = false;
          std::vector<VertexId> left{v}, right{w};
          VertexId a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          result.cycle = std::move(left);
          result.cycle.insert(result.cycle.end(), right.rbegin(), right.rend());
        }
      }
    }
    std::sort(tree.begin(), tree.end());
    result.trees.push_back(std::move(tree));
  }
  return result;
}

FillingPlan fill_chain(const ChainGraph& g, LeafOrder order) {
  for (const ChainVertex& v : g.vertices()) {
    if (!v.trivial) {
      throw ValidationError("chain component '" + v.name + "' is not trivial");
    }
  }
  const ChainCheck check = check_chain(g);
  if (!check.acyclic) {
    std::string names;
    for (VertexId v : check.cycle) {
      if (!names.empty()) names += " - ";
      names += g.vertex(v).name;
    }
    throw ChainCycleError("chain graph has a cycle: " + names, check.cycle);
  }

  const std::size_t n = g.size();
  std::vector<long long> acc(n);
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  for (VertexId v = 0; v < n; ++v) {
    acc[v] = g.vertex(v).coefficient;
    degree[v] = g.neighbors(v).size();
  }

  // Ordered by the active rule; std::priority_queue pops the largest key.
  auto key = [order](VertexId v) -> long long {
    return order == LeafOrder::lowest_first ? -static_cast<long long>(v)
                                            : static_cast<long long>(v);
  };
  auto cmp = [&](VertexId a, VertexId b) { return key(a) < key(b); };
  std::priority_queue<VertexId, std::vector<VertexId>, decltype(cmp)> leaves(cmp);
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] <= 1) leaves.push(v);
  }

  FillingPlan plan;
  plan.steps.reserve(n);
  while (!leaves.empty()) {
    const VertexId v = leaves.top();
    leaves.pop();
    if (removed[v]) continue;
    removed[v] = true;
    plan.steps.push_back({v, acc[v], g.vertex(v).strands});
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      acc[w] += acc[v];
      if (--degree[w] <= 1) leaves.push(w);
    }
  }
  plan.residual_coefficients = std::move(acc);
  return plan;
}

ChainGraph daisy_cover_skeleton(int n, int m, long long p) {
  if (n <= 4 || n % 2 != 0) {
    throw DomainError("daisy_cover_skeleton: n must be even and greater than 4");
  }
  if (m < 1) throw DomainError("daisy_cover_skeleton: cover degree m must be >= 1");

  const int r = n / 2 - 2;
  ChainGraph g;
  for (const char* side : {"L", "R"}) {
    const std::string prefix = side;
    const VertexId root = g.add_vertex(prefix + std::to_string(r), p);
    for (int copy = 0; copy < m; ++copy) {
      VertexId above = root;
      for (int i = r - 1; i >= 1; --i) {
        const VertexId v = g.add_vertex(prefix + std::to_string(i) + "." + std::to_string(copy), p);
        g.add_edge(above, v);
        above = v;
      }
    }
  }
  return g;
}

}  // namespace cusp
