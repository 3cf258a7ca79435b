#pragma once

#include <cstdint>

#include "acx/graph.hpp"

namespace acx {

Graph cycle_graph(int n);            // n >= 3 vertices on a cycle
Graph path_graph(int n);             // n >= 1 vertices on a path
Graph complete_graph(int n);         // n >= 1
Graph complete_bipartite(int a, int b);  // sides of size a >= 1 and b >= 1
Graph hypercube_graph(int dim);      // 2^dim vertices, dim in [1, 20]

// Erdos-Renyi G(n, p): every unordered pair independently becomes an edge
// with probability p.  One uniform draw is consumed per pair whatever the
// outcome, so the result depends only on (n, p, seed).
Graph gnp_graph(int n, double p, std::uint64_t seed);

// Uniform random regular graph via the pairing model: n * degree stubs are
// shuffled and matched, and the whole pairing is rejected until the result
// is simple (conditioned on simplicity the pairing model is uniform over
// degree-regular simple graphs).  Requires n * degree even and degree < n.
Graph random_regular_graph(int n, int degree, std::uint64_t seed);

}  // namespace acx
