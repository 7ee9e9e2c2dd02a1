#pragma once

#include <gvm/graph.hh>

#include <cstdint>
#include <vector>

namespace gvm {

/// f_{n,m}: m cycles of length n sharing one common vertex.
struct FriendshipParams {
    int n = 3;
    int m = 1;

    auto vertex_count() const -> int { return m * (n - 1) + 1; }

    /// Vertex id of v_{i_k}, arm i in 1..m, position k in 1..n-1.
    auto arm_vertex(int i, int k) const -> Vertex { return 1 + (i - 1) * (n - 1) + (k - 1); }
};

auto gen_path(int n) -> Graph;
auto gen_cycle(int n) -> Graph;
auto gen_complete(int n) -> Graph;

/// n isolated vertices (the complement of K_n).
auto gen_empty(int n) -> Graph;

/// Blocks of the given sizes laid out consecutively, every cross-block pair joined.
auto gen_complete_multipartite(const std::vector<int> & part_sizes) -> Graph;

/// Vertex 0 is the common vertex; arm i occupies arm_vertex(i, 1..n-1) in path
/// order, and the common vertex is joined to both ends of every arm.
auto gen_friendship(FriendshipParams params) -> Graph;

/// Spine path 0..s-1, then the pendants of spine vertex 0, of spine vertex 1, ...
auto gen_caterpillar(const std::vector<int> & pendants_per_spine_vertex) -> Graph;

/// H[G_1, ..., G_k]: part i becomes a consecutive vertex block; blocks i and j
/// are completely joined whenever ij is an edge of h.
auto h_join(const Graph & h, const std::vector<Graph> & parts) -> Graph;

/// Zero-divisor graph of F_{q_1} x ... x F_{q_k} for primes q_i. Vertices are
/// grouped by support pattern S (nonempty, proper subset of coordinates) in
/// increasing bitmask order; within a block, tuples follow lexicographic order.
auto gen_zero_divisor(const std::vector<int> & primes) -> Graph;

/// The ring tuple behind each vertex of gen_zero_divisor(primes).
auto zero_divisor_tuples(const std::vector<int> & primes) -> std::vector<std::vector<int>>;

}
