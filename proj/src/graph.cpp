#include "rainbowlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rainbowlab {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) set_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

void Graph::set_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (has_edge(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bitsw = r[w];
        while (bitsw) {
            int b = std::countr_zero(bitsw);
            out.push_back(w * 64 + b);
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    g.set_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
    return g;
}

Graph Graph::turan(int n, int p) {
    if (p < 1) throw std::invalid_argument("turan: part count must be positive");
    if (n == 0) return Graph(0);
    // Largest parts first, vertices in contiguous blocks; extra parts stay empty.
    int q = n / p, r = n % p;
    std::vector<int> part_of(n);
    int v = 0;
    for (int i = 0; i < p; ++i) {
        int size = q + (i < r ? 1 : 0);
        for (int j = 0; j < size; ++j) part_of[v++] = i;
    }
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) g.set_edge(a, b);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("part sizes must be non-negative");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.set_edge(u, v);
    return g;
}

Graph join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::pair<int, int>> es = g.edges();
    for (const auto& [u, v] : h.edges()) es.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) es.emplace_back(u, ng + v);
    return Graph(ng + nh, es);
}

long long turan_edges(long long n, long long p) {
    if (p < 1) throw std::invalid_argument("turan_edges: part count must be positive");
    if (n < 0) throw std::invalid_argument("turan_edges: vertex count must be non-negative");
    long long q = n / p, r = n % p;
    return (n * n - r * (q + 1) * (q + 1) - (p - r) * q * q) / 2;
}

long long moon_ex(long long n, long long t) {
    if (t < 0 || t > n) throw std::invalid_argument("moon_ex: requires 0 <= t <= n");
    long long m = n - t;
    return t * (t - 1) / 2 + t * m + m * m / 4;
}

ArFormulaResult ar_formula(long long n, long long t) {
    ArFormulaResult res;
    res.value = moon_ex(n, t) + 2;
    res.in_proven_range = n >= 15 * t + 57;
    return res;
}

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<int>& map, std::vector<bool>& used,
                        const std::vector<int>& deg_g, const std::vector<int>& deg_h, int v) {
    int n = g.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || deg_g[v] != deg_h[w]) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v) != h.has_edge(map[u], w)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_isomorphism(g, h, map, used, deg_g, deg_h, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h, int max_n) {
    if (g.vertex_count() > max_n || h.vertex_count() > max_n)
        throw std::invalid_argument("are_isomorphic: graph exceeds the configured size bound");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    int n = g.vertex_count();
    std::vector<int> deg_g(n), deg_h(n);
    for (int v = 0; v < n; ++v) {
        deg_g[v] = g.degree(v);
        deg_h[v] = h.degree(v);
    }
    std::vector<int> sg = deg_g, sh = deg_h;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    return extend_isomorphism(g, h, map, used, deg_g, deg_h, 0);
}

std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6_encode: short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6_decode: empty input");
    for (char c : text) {
        if (c < 63 || c > 126) throw std::invalid_argument("graph6_decode: byte out of range");
    }
    if (text[0] == 126) throw std::invalid_argument("graph6_decode: long form is not supported");
    int n = text[0] - 63;
    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != 1 + need) throw std::invalid_argument("graph6_decode: malformed length");
    std::vector<std::pair<int, int>> es;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = text[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) es.emplace_back(u, v);
        }
    }
    // Padding bits beyond the triangle must be zero.
    for (long long b = nbits; b < static_cast<long long>(need) * 6; ++b) {
        int byte = text[1 + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw std::invalid_argument("graph6_decode: nonzero padding bits");
    }
    return Graph(n, es);
}

}  // namespace rainbowlab
