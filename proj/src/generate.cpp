#include "acx/generate.hpp"

#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "acx/errors.hpp"

namespace acx {

namespace {

// Uniform index in [0, bound) with rejection, so the distribution is exact
// and the draw sequence is pinned down by this code rather than by a
// library's distribution implementation.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    for (;;) {
        const std::uint64_t x = rng();
        const std::uint64_t r = x % bound;
        if (x - r <= std::numeric_limits<std::uint64_t>::max() - (bound - 1)) return r;
    }
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidParamsError("a cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return Graph::build(n, pairs);
}

Graph path_graph(int n) {
    if (n < 1) throw InvalidParamsError("a path needs at least 1 vertex");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Graph::build(n, pairs);
}

Graph complete_graph(int n) {
    if (n < 1) throw InvalidParamsError("a complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return Graph::build(n, pairs);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InvalidParamsError("both bipartition sides must be nonempty");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) pairs.emplace_back(u, a + v);
    return Graph::build(a + b, pairs);
}

Graph hypercube_graph(int dim) {
    if (dim < 1) throw InvalidParamsError("hypercube dimension must be at least 1");
    if (dim > 20) throw RefuseTooLargeError("hypercube dimension above 20");
    const int n = 1 << dim;
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < dim; ++b)
            if (!(x & (1 << b))) pairs.emplace_back(x, x | (1 << b));
    return Graph::build(n, pairs);
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw InvalidParamsError("vertex count must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParamsError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform_unit(rng) < p) pairs.emplace_back(u, v);
    return Graph::build(n, pairs);
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed) {
    if (n < 1 || degree < 0 || degree >= n) {
        throw InvalidParamsError("regular graph needs 0 <= degree < n");
    }
    if ((static_cast<long long>(n) * degree) % 2 != 0) {
        throw InvalidParamsError("n * degree must be even");
    }
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * static_cast<std::size_t>(degree));
    for (int u = 0; u < n; ++u)
        for (int j = 0; j < degree; ++j) stubs[static_cast<std::size_t>(u) * degree + j] = u;

    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
            std::swap(stubs[i - 1], stubs[j]);
        }
        std::set<std::pair<int, int>> seen;
        bool simple = true;
        for (std::size_t t = 0; simple && t + 1 < stubs.size(); t += 2) {
            int u = stubs[t];
            int v = stubs[t + 1];
            if (u > v) std::swap(u, v);
            simple = u != v && seen.emplace(u, v).second;
        }
        if (simple) {
            std::vector<std::pair<int, int>> pairs(seen.begin(), seen.end());
            return Graph::build(n, pairs);
        }
    }
    throw InvalidParamsError("no simple pairing found after " + std::to_string(kMaxAttempts) +
                             " attempts");
}

}  // namespace acx
