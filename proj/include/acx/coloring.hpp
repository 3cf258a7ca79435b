#pragma once

#include <vector>

namespace acx {

/// Per-edge colors, indexed by edge id. Colors are 1..palette; 0 marks an
/// unassigned slot (only seen in partially parsed files, never in run output).
struct EdgeColoring {
    int palette = 0;
    std::vector<int> color;
};

/// Per-vertex colors, indexed by vertex id.
struct VertexColoring {
    int palette = 0;
    std::vector<int> color;
};

}  // namespace acx
