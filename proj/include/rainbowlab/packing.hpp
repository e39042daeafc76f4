#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// Thrown when an exact solver hits its node budget. The solvers never return
// an uncertified answer; callers either raise the budget or treat this as a
// distinct outcome (the CLI maps it to its own exit code).
struct ResourceExhausted : std::runtime_error {
    explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct Matching {
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    int size() const { return static_cast<int>(edges.size()); }
};

struct TrianglePacking {
    std::vector<std::array<int, 3>> triples;  // each sorted, list sorted
    int size() const { return static_cast<int>(triples.size()); }
};

struct PackingLimits {
    std::uint64_t node_budget = 100'000'000;
};

// All triangles of g as ordered triples u < v < w, in lexicographic order.
std::vector<std::array<int, 3>> enumerate_triangles(const Graph& g);

// Maximum matching on general graphs (exact, blossom contraction).
Matching max_matching(const Graph& g);

// Independent exact reference for max_matching, branch and bound over edge
// subsets. Rejects graphs with more than 40 edges.
int max_matching_bruteforce(const Graph& g);

// Maximum set of vertex-disjoint triangles, exact. Certified by exhausting
// the branch tree; throws ResourceExhausted beyond the node budget.
// Supports up to 64 vertices (bitmask state).
TrianglePacking max_independent_triangles(const Graph& g, const PackingLimits& limits = {});

// Early-exit variant: true iff g has k vertex-disjoint triangles.
bool has_k_disjoint_triangles(const Graph& g, int k, const PackingLimits& limits = {});

// Common neighbourhood of two distinct vertices, sorted.
std::vector<int> common_neighborhood(const Graph& g, int x, int y);

// For an edge uv and a third vertex w: true iff w completes a triangle on uv.
bool is_friendly(const Graph& g, int u, int v, int w);

bool validate_matching(const Graph& g, const Matching& m);
bool validate_packing(const Graph& g, const TrianglePacking& p);

namespace detail {

// Exhaustive search for `target` pairwise vertex-disjoint triples chosen from
// `tris`, avoiding vertices in `covered`. Returns indices into `tris` of the
// first family found in ascending-index order, or nullopt once the tree is
// exhausted. Shared by the triangle packing solver and the rainbow search.
std::optional<std::vector<int>> find_disjoint_triples(int n, const std::vector<std::array<int, 3>>& tris,
                                                      std::uint64_t covered, int target,
                                                      std::uint64_t& nodes, std::uint64_t node_budget);

}  // namespace detail

}  // namespace rainbowlab
