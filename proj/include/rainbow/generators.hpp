#pragma once

#include <cstdint>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Complete bipartite K_{n,n} on parts {0..n-1} and {n..2n-1}; edge (i, n+j)
/// gets color (i+j) mod n. Proper, every color class a perfect matching,
/// every color degree exactly n.
EdgeColoredGraph gen_cayley(int n);

/// K_{2m} properly colored with 2m-1 colors by the round-robin schedule
/// (vertex 2m-1 fixed, the others rotating). Every color class is a perfect
/// matching. Requires m >= 1.
EdgeColoredGraph gen_onefactorization(int m);

/// G(n,p) with colors uniform in {0..q-1}, then repaired: while some vertex
/// has fewer than k distinct colors, connect the smallest such vertex to a
/// random non-neighbor with a color absent at it (absent at both endpoints
/// when possible). Deterministic per seed. Requires n > k and q >= k; throws
/// std::runtime_error if a deficient vertex has no non-neighbor left.
EdgeColoredGraph gen_random_mindeg(int n, int k, int q, double p, std::uint64_t seed);

/// G(n,p) greedily properly colored (each edge gets the smallest color free
/// at both endpoints), then repaired to min degree k with properly colorable
/// edges. Proper colorings make color degree equal degree. Requires n > k.
EdgeColoredGraph gen_proper_random(int n, int k, double p, std::uint64_t seed);

}  // namespace rainbow
