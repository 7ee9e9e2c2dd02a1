#pragma once

// Reference implementations for tests. Deliberately naive and independent of
// the library's arithmetic: elements are plain integer vectors, labelings are
// enumerated by odometer with no pruning.

#include <gvm/graph.hh>
#include <gvm/reduced.hh>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Element = std::vector<std::int64_t>;

/// All elements of prod Z_{m_i} in lexicographic order.
auto elements(const std::vector<std::int64_t> & moduli, bool include_zero) -> std::vector<Element>;

auto is_zero(const Element & x) -> bool;

/// Open-neighbourhood sums computed from the edge list; modulus 0 means Z.
auto weights(const gvm::Graph & g, const std::vector<std::int64_t> & moduli, const std::vector<Element> & labels)
    -> std::vector<Element>;

auto is_magic(const gvm::Graph & g, const std::vector<std::int64_t> & moduli, const std::vector<Element> & labels)
    -> bool;

/// First magic labeling in lexicographic order (vertex 0 most significant).
auto first_magic(const gvm::Graph & g, const std::vector<std::int64_t> & moduli)
    -> std::optional<std::vector<Element>>;

/// First A' labeling of the quotient: zero allowed only on classes of size >= 2.
auto first_a_prime(const gvm::ReducedGraph & r, const std::vector<std::int64_t> & moduli)
    -> std::optional<std::vector<Element>>;

/// First Z labeling with labels in [-bound, bound] \ {0}, ordered 1, -1, 2, -2, ...
auto first_int_magic(const gvm::Graph & g, std::int64_t bound) -> std::optional<std::vector<std::int64_t>>;

/// Connected graph on n vertices: random tree plus each other pair with probability p, then shuffled ids.
auto random_connected_graph(std::mt19937 & rng, int n, double p) -> gvm::Graph;

/// Every connected labeled graph on n vertices (n <= 5).
auto all_connected_graphs(int n) -> std::vector<gvm::Graph>;

/// Nonzero zero-divisors of F_{q_1} x ... x F_{q_k}, in lexicographic order.
auto zero_divisors(const std::vector<int> & primes) -> std::vector<std::vector<int>>;

/// Componentwise product of two tuples is zero.
auto annihilate(const std::vector<int> & x, const std::vector<int> & y, const std::vector<int> & primes) -> bool;

/// Neighbourhood classes by pairwise comparison of adjacency rows.
auto twin_classes(const gvm::Graph & g) -> std::vector<std::vector<gvm::Vertex>>;

}
