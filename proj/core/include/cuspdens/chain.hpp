#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cusp {

using VertexId = std::size_t;

/// A trivial link component of a chain, with its (1, p) filling slope.
struct ChainVertex {
  std::string name;
  long long coefficient = 0;
  bool trivial = true;
  /// Number of strands through the spanning disk, when known.
  std::optional<int> strands;
};

/// Linking graph of a chain: vertices are trivial components, edges join
/// Hopf-linked pairs. Self-loops and repeated edges are rejected.
class ChainGraph {
 public:
  VertexId add_vertex(ChainVertex v);
  VertexId add_vertex(std::string name, long long coefficient);
  void add_edge(VertexId a, VertexId b);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const ChainVertex& vertex(VertexId id) const { return vertices_.at(id); }
  const std::vector<ChainVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<VertexId>& neighbors(VertexId id) const { return adjacency_.at(id); }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }
  std::optional<VertexId> find(std::string_view name) const;

 private:
  std::vector<ChainVertex> vertices_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::map<std::string, VertexId, std::less<>> by_name_;
};

struct ChainCheck {
  bool acyclic = true;
  /// Connected components, each sorted ascending, ordered by smallest id.
  /// Only meaningful as trees when acyclic.
  std::vector<std::vector<VertexId>> trees;
  /// One cycle in traversal order when not acyclic.
  std::vector<VertexId> cycle;
};

ChainCheck check_chain(const ChainGraph& g);

struct FillingStep {
  VertexId vertex = 0;
  /// Full twists added to the strands through this component's disk.
  long long twist_count = 0;
  std::optional<int> strand_count;
};

struct FillingPlan {
  std::vector<FillingStep> steps;
  /// Accumulated slope of every vertex when it was filled.
  std::vector<long long> residual_coefficients;
};

enum class LeafOrder { lowest_first, highest_first };

/// Fills a forest-shaped chain leaf by leaf. Filling a leaf with slope p adds
/// p full twists to the strands through it and turns its neighbour's
/// (1, q) filling into a (1, q + p) filling. Throws ChainCycleError when the
/// graph has a cycle and ValidationError when a vertex is not trivial.
FillingPlan fill_chain(const ChainGraph& g, LeafOrder order = LeafOrder::lowest_first);

/// Linking graph of the components left unfilled-around in the m-fold cyclic
/// cover of the alternating daisy chain D_n, taken about the component
/// opposite the belt, once the four distinguished components are removed.
///
/// Each half of the daisy chain contributes a path a_1 … a_r with r = n/2 − 2;
/// a_r is linked once with the covering axis and lifts to a single component,
/// the others lift to m copies. Every half therefore becomes a tree: a root
/// with m hanging paths of length r − 1. All coefficients are set to `p`.
/// Requires n even, n > 4 and m >= 1.
ChainGraph daisy_cover_skeleton(int n, int m, long long p = 1);

}  // namespace cusp
