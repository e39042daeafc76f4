#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rainbowlab {

// Simple undirected graph on vertex set {0..n-1}. Adjacency is a symmetric
// bit matrix with no self-loops; instances are immutable after construction
// and cheap to copy at the sizes this library targets (n <= ~200).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph complete(int n);
    static Graph turan(int n, int p);
    static Graph complete_bipartite(int a, int b);

    int vertex_count() const { return n_; }
    long long edge_count() const { return edge_count_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // lexicographic order

    // Copy with one extra edge (no-op if it is already present).
    Graph with_edge(int u, int v) const;

    // Raw bit-row access for the solvers.
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    int row_words() const { return words_; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

private:
    void set_edge(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    long long edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Disjoint union of g and h plus all edges between them. Vertices of g keep
// their labels, vertices of h are shifted by |g|.
Graph join(const Graph& g, const Graph& h);

// Edge count of the Turan graph T_p(n). For p=2 this is floor(n^2/4).
long long turan_edges(long long n, long long p);

// C(t,2) + t(n-t) + floor((n-t)^2/4): the maximum edge count of an n-vertex
// graph with at most t disjoint triangles (valid for n > 9t/2 + 4), attained
// by the join of K_t with the balanced complete bipartite graph.
long long moon_ex(long long n, long long t);

struct ArFormulaResult {
    long long value = 0;         // moon_ex(n,t) + 2
    bool in_proven_range = false;  // n >= 15t + 57
};

// Closed-form anti-Ramsey value c(n,t) for (t+2) disjoint triangles. The
// formula is evaluated for any 0 <= t <= n; the flag reports whether the
// inputs lie in the range where the value is proven exact.
ArFormulaResult ar_formula(long long n, long long t);

// Exact isomorphism test by degree screening plus permutation backtracking.
// Intended for tiny graphs; rejects inputs larger than max_n.
bool are_isomorphic(const Graph& g, const Graph& h, int max_n = 10);

// graph6 short form (n <= 62): header byte n+63, then the upper adjacency
// triangle column by column in 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

// Index of the pair (u,v), u < v, in lexicographic order over all
// unordered pairs of {0..n-1}.
inline long long pair_index(int n, int u, int v) {
    return static_cast<long long>(u) * n - static_cast<long long>(u) * (u + 1) / 2 + (v - u - 1);
}

}  // namespace rainbowlab
