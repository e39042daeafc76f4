#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowlab/graph.hpp"
#include "rainbowlab/packing.hpp"

namespace rainbowlab {

// Total edge coloring of K_n with colors 0..r-1, every color used at least
// once. Stored per unordered pair in lexicographic order.
class EdgeColoring {
public:
    EdgeColoring(int n, std::vector<int> colors, int r);

    static EdgeColoring all_distinct(int n);
    static EdgeColoring monochromatic(int n);

    int vertex_count() const { return n_; }
    int color_count() const { return r_; }
    long long edge_total() const { return static_cast<long long>(color_.size()); }
    int color(int u, int v) const;
    const std::vector<int>& values() const { return color_; }

    // Edges per color class, lexicographic within each class.
    std::vector<std::vector<std::pair<int, int>>> classes() const;

private:
    int n_ = 0;
    int r_ = 0;
    std::vector<int> color_;
};

// The extremal avoiding coloring: the edges of the embedded
// join(K_t, T_2(n-t)) get distinct colors 1..moon_ex(n,t) in lexicographic
// edge order, every remaining edge gets color 0. Uses moon_ex(n,t)+1 colors
// and contains no rainbow (t+2)-triangle packing. Requires n > 3t+6.
EdgeColoring build_lower_bound_coloring(int n, int t);

struct RainbowPacking {
    std::vector<std::array<int, 3>> triples;        // vertex-disjoint triangles, lex order
    std::vector<std::array<int, 3>> triple_colors;  // per-triangle edge colors, 3k distinct overall
};

// Finds k vertex-disjoint triangles whose 3k edge colors are pairwise
// distinct, or certifies none exist. Exhaustive; the branch tree runs over
// triangles touching duplicated colors, with packings inside the subgraph of
// uniquely-colored edges closed by the exact triangle packing solver.
std::optional<RainbowPacking> has_rainbow_packing(const EdgeColoring& c, int k, const PackingLimits& limits = {});

// One representative edge per color class (the lexicographically least),
// giving a spanning rainbow subgraph with exactly r edges.
Graph extract_rainbow_subgraph(const EdgeColoring& c);

// Colors appearing on the given edge set, with multiplicities.
std::map<int, int> color_multiset(const EdgeColoring& c, const std::vector<std::pair<int, int>>& edges);

// Text format: header "n r", then one line "u v color" per edge in
// lexicographic order.
std::string coloring_to_text(const EdgeColoring& c);
EdgeColoring coloring_from_text(std::string_view text);

bool validate_rainbow_packing(const EdgeColoring& c, const RainbowPacking& p, int k);

}  // namespace rainbowlab
