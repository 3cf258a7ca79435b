#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace acx {

/// Ordered labeled rooted forest of resampling phases.
///
/// Nodes are stored in depth-first order (roots in chronological order, the
/// subtree of each node immediately after it), which is exactly the order in
/// which a run enters its phases. The tree shape is carried by the depth
/// field alone: a node of depth d hangs off the most recent earlier node of
/// depth d-1.
template <typename Label>
struct WitnessForest {
    struct Node {
        int depth = 0;
        Label label;
    };

    std::vector<Node> nodes;

    bool empty() const { return nodes.empty(); }
    std::size_t size() const { return nodes.size(); }
};

/// Parent index per node (-1 for roots), or nullopt when the depth sequence
/// is not a valid depth-first traversal (first node not at depth 0, or a
/// depth jumping by more than one).
template <typename Label>
std::optional<std::vector<int>> forest_parents(const WitnessForest<Label>& f) {
    std::vector<int> parent(f.nodes.size(), -1);
    std::vector<int> chain;  // chain[d] = latest node at depth d on the current path
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        const int d = f.nodes[i].depth;
        if (d < 0 || d > static_cast<int>(chain.size())) return std::nullopt;
        parent[i] = (d == 0) ? -1 : chain[static_cast<std::size_t>(d - 1)];
        chain.resize(static_cast<std::size_t>(d));
        chain.push_back(static_cast<int>(i));
    }
    return parent;
}

}  // namespace acx
