#include "secluded/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace secluded {

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double unit() { return static_cast<double>(gen() >> 11) * 0x1p-53; }
    std::uint64_t below(std::uint64_t n) { return gen() % n; }
};

std::vector<Weight> weights(Rng& rng, int n, Weight max_weight) {
    if (max_weight < 1) throw std::invalid_argument("max weight must be positive");
    std::vector<Weight> w(n);
    for (auto& x : w) x = 1 + rng.below(max_weight);
    return w;
}

} // namespace

Digraph gnp(int n, double p, std::uint64_t seed, Weight max_weight) {
    if (n < 0 || p < 0 || p > 1) throw std::invalid_argument("gnp needs n >= 0 and p in [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.unit() < p) edges.emplace_back(u, v);
    return Digraph(n, std::move(edges), weights(rng, n, max_weight));
}

Digraph random_tournament(int n, std::uint64_t seed, Weight max_weight) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back(rng.unit() < 0.5 ? Edge{u, v} : Edge{v, u});
    return Digraph(n, std::move(edges), weights(rng, n, max_weight));
}

Digraph planted_clique(int n, int clique_size, int k, std::uint64_t seed) {
    if (clique_size < 0 || clique_size > n || k < 0) throw std::invalid_argument("bad planted clique parameters");
    Rng rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<int> clique(perm.begin(), perm.begin() + clique_size);
    std::vector<Edge> edges;
    auto both = [&](int a, int b) {
        edges.emplace_back(a, b);
        edges.emplace_back(b, a);
    };
    for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j) both(clique[i], clique[j]);
    for (int i = clique_size; i < n && i < clique_size + k; ++i)
        if (clique_size > 0) both(perm[i], clique[rng.below(clique_size)]);
    const double p = n > 0 ? 2.0 / n : 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) both(u, v);
    return Digraph(n, std::move(edges));
}

Digraph chained_cliques(int block, int count, std::uint64_t seed) {
    if (block < 2 || count < 1) throw std::invalid_argument("chained cliques need block >= 2 and count >= 1");
    Rng rng(seed);
    const int n = count * (block - 1) + 1;
    std::vector<Edge> edges;
    for (int b = 0; b < count; ++b) {
        const int first = b * (block - 1);
        for (int i = first; i < first + block; ++i)
            for (int j = i + 1; j < first + block; ++j) {
                double r = rng.unit();
                if (r < 0.1)
                    edges.emplace_back(i, j);
                else if (r < 0.2)
                    edges.emplace_back(j, i);
                else
                    edges.emplace_back(i, j), edges.emplace_back(j, i);
            }
    }
    std::vector<Weight> w(n);
    for (auto& x : w) x = 1 + rng.below(3);
    return Digraph(n, std::move(edges), std::move(w));
}

} // namespace secluded
