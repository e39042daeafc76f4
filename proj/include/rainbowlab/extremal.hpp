#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// All graphs on n vertices up to isomorphism, built level by level and
// deduplicated with invariant buckets plus exact isomorphism checks.
// Exhaustive mode stops at n = 7 (1044 classes).
std::vector<Graph> generate_graphs(int n);

struct ExtremalRecord {
    int n = 0;
    int t = 0;  // packing number for the Moon census, matching number for gamma
    long long bound = 0;
    std::string graph6;
    bool matches_reference = false;
};

struct CensusResult {
    int n_max = 0;
    long long graphs_examined = 0;
    std::vector<std::string> violations;
    std::vector<ExtremalRecord> extremal;
    bool ok() const { return violations.empty(); }
};

// Exhaustively checks every graph on up to n_max vertices: with t its
// triangle packing number, whenever 2n > 9t + 8 the graph has at most
// moon_ex(n, t) edges, and the unique graph meeting the bound is the join
// of K_t with a balanced complete bipartite graph.
CensusResult verify_moon(int n_max);

// Exhaustively checks, for every n <= n_max, that each triangle-free graph
// with matching number h has at most h*(n-h) edges, met only by K_{h,n-h}.
CensusResult verify_gamma(int n_max);

struct PairsExtraction {
    int pivot = -1;
    std::vector<int> independent_set;  // neighborhood of the pivot
    std::vector<int> low_degree;       // members with degree below 3n/8
    std::vector<int> core;             // the rest of the neighborhood
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

// For a triangle-free graph with n >= 12t + 54 and 4e >= n^2 - 2n - 24t - 44,
// extracts a max-degree pivot, its (independent) neighborhood X, the small
// low-degree part S, and the core X' = X \ S, then checks the promised sizes:
// 2|X| >= n - 4, |S| <= 7, 2|X'| >= n - 18, and every core pair x, y has
// 4(d(x) + d(y)) >= 3n. Violations come back as counterexample strings.
PairsExtraction lemma_pairs_extract(const Graph& g, int t);

// Adds each missing edge of the join of K_t with a balanced complete
// bipartite graph on n - t vertices and reports, as "u,v" strings, any
// insertion that fails to create t + 1 disjoint triangles.
std::vector<std::string> moon_perturbation_failures(int n, int t);

// A balanced complete bipartite graph on n vertices with a uniformly chosen
// number (at most max_deletions) of its edges removed. Stays triangle-free;
// deterministic for a given engine state.
Graph random_dense_triangle_free(int n, int max_deletions, std::mt19937_64& rng);

}  // namespace rainbowlab
