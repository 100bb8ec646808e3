#include "rainbow/generators.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace rainbow {

namespace {

// Hand-rolled draws: std::uniform_* distributions are implementation-defined,
// these are not, so generated instances match across platforms.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int pick_index(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// Mutable edge set used while generating, with the bookkeeping the repair
// loops need.
struct Builder {
    int n;
    std::vector<ColoredEdge> edges;
    std::vector<std::set<int>> adj;
    std::vector<std::map<long long, int>> colors;  // per vertex: color -> count

    explicit Builder(int n_) : n(n_), adj(static_cast<size_t>(n_)), colors(static_cast<size_t>(n_)) {}

    bool has_edge(int u, int v) const { return adj[static_cast<size_t>(u)].count(v) > 0; }

    void add(int u, int v, long long c) {
        edges.push_back({u, v, c});
        adj[static_cast<size_t>(u)].insert(v);
        adj[static_cast<size_t>(v)].insert(u);
        ++colors[static_cast<size_t>(u)][c];
        ++colors[static_cast<size_t>(v)][c];
    }

    int color_degree(int v) const { return static_cast<int>(colors[static_cast<size_t>(v)].size()); }

    EdgeColoredGraph build() const { return EdgeColoredGraph(n, edges); }
};

}  // namespace

EdgeColoredGraph gen_cayley(int n) {
    if (n < 1) throw std::invalid_argument("part size must be at least 1");
    std::vector<ColoredEdge> edges;
    edges.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            edges.push_back({i, n + j, static_cast<long long>((i + j) % n)});
    return EdgeColoredGraph(2 * n, std::move(edges));
}

EdgeColoredGraph gen_onefactorization(int m) {
    if (m < 1) throw std::invalid_argument("half order must be at least 1");
    int n = 2 * m;
    std::vector<ColoredEdge> edges;
    if (m == 1) {
        edges.push_back({0, 1, 0});
        return EdgeColoredGraph(2, std::move(edges));
    }
    // Round-robin: vertex n-1 sits still, the rest rotate; round r is color r.
    int mod = n - 1;
    for (int r = 0; r < mod; ++r) {
        edges.push_back({r, n - 1, static_cast<long long>(r)});
        for (int i = 1; i < m; ++i) {
            int a = (r + i) % mod;
            int b = (r - i + mod) % mod;
            edges.push_back({a, b, static_cast<long long>(r)});
        }
    }
    return EdgeColoredGraph(n, std::move(edges));
}

EdgeColoredGraph gen_random_mindeg(int n, int k, int q, double p, std::uint64_t seed) {
    if (k < 0) throw std::invalid_argument("color degree target must be non-negative");
    if (n <= k) throw std::invalid_argument("need more vertices than the color degree target");
    if (q < k) throw std::invalid_argument("need at least as many colors as the target");
    if (q < 1) throw std::invalid_argument("need at least one color");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability out of range");

    std::mt19937_64 rng(seed);
    Builder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_double(rng) < p) b.add(u, v, pick_index(rng, q));

    // Lift every deficient vertex to k distinct colors, one fresh edge at a
    // time, preferring colors new to both endpoints.
    while (true) {
        int v = -1;
        for (int x = 0; x < n; ++x)
            if (b.color_degree(x) < k) {
                v = x;
                break;
            }
        if (v < 0) break;

        std::vector<int> candidates;
        for (int w = 0; w < n; ++w)
            if (w != v && !b.has_edge(v, w)) candidates.push_back(w);
        if (candidates.empty())
            throw std::runtime_error("repair stuck: a deficient vertex is adjacent to everything");
        int w = candidates[static_cast<size_t>(pick_index(rng, static_cast<int>(candidates.size())))];

        std::vector<long long> absent_v, absent_both;
        for (long long c = 0; c < q; ++c) {
            if (b.colors[static_cast<size_t>(v)].count(c)) continue;
            absent_v.push_back(c);
            if (!b.colors[static_cast<size_t>(w)].count(c)) absent_both.push_back(c);
        }
        const std::vector<long long>& pool = absent_both.empty() ? absent_v : absent_both;
        long long c = pool[static_cast<size_t>(pick_index(rng, static_cast<int>(pool.size())))];
        b.add(std::min(v, w), std::max(v, w), c);
    }
    return b.build();
}

EdgeColoredGraph gen_proper_random(int n, int k, double p, std::uint64_t seed) {
    if (k < 0) throw std::invalid_argument("color degree target must be non-negative");
    if (n <= k) throw std::invalid_argument("need more vertices than the color degree target");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability out of range");

    std::mt19937_64 rng(seed);
    Builder b(n);
    auto smallest_free = [&](int u, int v) {
        long long c = 0;
        while (b.colors[static_cast<size_t>(u)].count(c) || b.colors[static_cast<size_t>(v)].count(c))
            ++c;
        return c;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_double(rng) < p) b.add(u, v, smallest_free(u, v));

    // Proper coloring keeps color degree equal to degree, so repairing the
    // degree repairs the color degree.
    while (true) {
        int v = -1;
        for (int x = 0; x < n; ++x)
            if (b.color_degree(x) < k) {
                v = x;
                break;
            }
        if (v < 0) break;
        std::vector<int> candidates;
        for (int w = 0; w < n; ++w)
            if (w != v && !b.has_edge(v, w)) candidates.push_back(w);
        if (candidates.empty())
            throw std::runtime_error("repair stuck: a deficient vertex is adjacent to everything");
        int w = candidates[static_cast<size_t>(pick_index(rng, static_cast<int>(candidates.size())))];
        b.add(std::min(v, w), std::max(v, w), smallest_free(v, w));
    }
    return b.build();
}

}  // namespace rainbow
