#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rainbowlab/coloring.hpp"

namespace rainbowlab {

struct SearchOptions {
    std::uint64_t node_budget = 1'000'000'000;
    int workers = 1;          // subtree workers; >1 still yields deterministic results
    int split_depth = 0;      // 0 = choose automatically
    std::string checkpoint_path;  // empty disables checkpointing
    bool resume = false;          // continue from checkpoint_path
};

enum class AvoidOutcome { present, absent, exhausted };

struct AvoidingResult {
    AvoidOutcome outcome = AvoidOutcome::absent;
    std::optional<EdgeColoring> witness;  // set when present
    std::uint64_t nodes = 0;              // consumed by this call (checkpoints track the sum)
};

// Decides whether some surjective r-coloring of K_n has no rainbow
// k-triangle packing. Enumerates colorings as restricted-growth strings over
// a fixed edge order (one representative per color-permutation class),
// pruning branches whose already-colored edges force a rainbow packing.
// Known avoiding colorings (merged down to r classes) short-circuit the
// search; `absent` is certified by exhausting the canonical tree.
AvoidingResult exists_avoiding_coloring(int n, int r, int k, const SearchOptions& opts = {});

enum class SearchOutcome { exact, exhausted };

struct SearchReport {
    int n = 0, k = 0;
    SearchOutcome outcome = SearchOutcome::exact;
    long long ar = -1;       // meaningful when outcome == exact
    long long ar_lower = 1;  // bracket; equal bounds when exact
    long long ar_upper = -1;
    std::optional<EdgeColoring> witness;  // avoiding coloring with the most colors found
    std::uint64_t nodes = 0;
    double wall_ms = 0.0;
};

// Least r such that every surjective r-coloring of K_n contains k disjoint
// triangles in k pairwise distinct color triples: 1 + max{r : avoiding
// exists}. Searches r descending from C(n,2); merging two classes of an
// avoiding coloring stays avoiding, so the first present r is the max.
// On budget exhaustion the report carries the certified bracket instead.
SearchReport ar_exact(int n, int k, const SearchOptions& opts = {});

// Number of set partitions of m items into exactly r blocks, counted by
// walking all restricted-growth strings (test hook for the canonical
// enumeration; equals the Stirling partition number).
std::uint64_t count_canonical_partitions(int m, int r);

// Merge color class `away` into `keep` and relabel the classes densely.
EdgeColoring merge_color_classes(const EdgeColoring& c, int keep, int away);

// Merge the two highest classes until exactly r remain.
EdgeColoring reduce_to_r_colors(const EdgeColoring& c, int r);

}  // namespace rainbowlab
