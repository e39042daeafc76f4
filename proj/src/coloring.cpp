#include "rainbowlab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace rainbowlab {

EdgeColoring::EdgeColoring(int n, std::vector<int> colors, int r) : n_(n), r_(r), color_(std::move(colors)) {
    if (n < 0) throw std::invalid_argument("coloring: vertex count must be non-negative");
    long long m = static_cast<long long>(n) * (n - 1) / 2;
    if (static_cast<long long>(color_.size()) != m)
        throw std::invalid_argument("coloring: expected one color per edge of the complete graph");
    if (r < 0 || (m > 0 && r < 1) || r > m)
        throw std::invalid_argument("coloring: color count out of range");
    std::vector<char> seen(static_cast<std::size_t>(r), 0);
    for (int c : color_) {
        if (c < 0 || c >= r) throw std::invalid_argument("coloring: color value out of range");
        seen[c] = 1;
    }
    for (int c = 0; c < r; ++c)
        if (!seen[c]) throw std::invalid_argument("coloring: not surjective onto its color set");
}

EdgeColoring EdgeColoring::all_distinct(int n) {
    long long m = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> colors(m);
    for (long long i = 0; i < m; ++i) colors[i] = static_cast<int>(i);
    return EdgeColoring(n, std::move(colors), static_cast<int>(m));
}

EdgeColoring EdgeColoring::monochromatic(int n) {
    long long m = static_cast<long long>(n) * (n - 1) / 2;
    return EdgeColoring(n, std::vector<int>(m, 0), m > 0 ? 1 : 0);
}

int EdgeColoring::color(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("coloring: vertex out of range");
    if (u == v) throw std::invalid_argument("coloring: no self-loops");
    if (u > v) std::swap(u, v);
    return color_[pair_index(n_, u, v)];
}

std::vector<std::vector<std::pair<int, int>>> EdgeColoring::classes() const {
    std::vector<std::vector<std::pair<int, int>>> out(r_);
    long long i = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v, ++i) out[color_[i]].emplace_back(u, v);
    return out;
}

EdgeColoring build_lower_bound_coloring(int n, int t) {
    if (t < 0) throw std::invalid_argument("build_lower_bound_coloring: t must be non-negative");
    if (n <= 3 * t + 6) throw std::invalid_argument("build_lower_bound_coloring: requires n > 3t + 6");
    int m = n - t;
    int upper = t + (m + 1) / 2;  // vertices t..upper-1 form the larger part
    long long ex = moon_ex(n, t);
    std::vector<int> colors(static_cast<std::size_t>(n) * (n - 1) / 2);
    int next = 1;
    long long i = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++i) {
            bool same_part = (u >= t && v < upper) || (u >= upper);
            colors[i] = same_part ? 0 : next++;
        }
    }
    if (next - 1 != ex) throw std::logic_error("build_lower_bound_coloring: edge count mismatch");
    return EdgeColoring(n, std::move(colors), static_cast<int>(ex) + 1);
}

namespace {

struct HeavyCandidate {
    std::array<int, 3> tri;
    std::uint64_t vmask;
    std::array<int, 3> cols;
    std::array<int, 3> heavy;  // heavy colors used, -1 padded
    int heavy_count;
};

struct RainbowSearch {
    const EdgeColoring& c;
    int n, k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<std::array<int, 3>> singleton_tris;  // triangles of the uniquely-colored subgraph
    std::vector<HeavyCandidate> cands;
    std::vector<int> chosen;
    std::vector<int> heavy_used;  // stack of heavy colors in use
    std::vector<int> fill;        // indices into singleton_tris on success

    RainbowSearch(const EdgeColoring& col, int kk, std::uint64_t b) : c(col), n(col.vertex_count()), k(kk), budget(b) {}

    void prepare() {
        std::vector<int> class_size(c.color_count(), 0);
        for (int v : c.values()) ++class_size[v];

        std::vector<std::pair<int, int>> singles;
        long long i = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++i)
                if (class_size[c.values()[i]] == 1) singles.emplace_back(u, v);
        Graph s(n, singles);
        singleton_tris = enumerate_triangles(s);

        for (int a = 0; a < n; ++a) {
            for (int b2 = a + 1; b2 < n; ++b2) {
                for (int d = b2 + 1; d < n; ++d) {
                    int c1 = c.color(a, b2), c2 = c.color(a, d), c3 = c.color(b2, d);
                    if (c1 == c2 || c1 == c3 || c2 == c3) continue;
                    HeavyCandidate hc;
                    hc.tri = {a, b2, d};
                    hc.vmask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b2) | (std::uint64_t{1} << d);
                    hc.cols = {c1, c2, c3};
                    hc.heavy = {-1, -1, -1};
                    hc.heavy_count = 0;
                    for (int col2 : hc.cols)
                        if (class_size[col2] > 1) hc.heavy[hc.heavy_count++] = col2;
                    if (hc.heavy_count > 0) cands.push_back(hc);
                }
            }
        }
    }

    bool heavy_conflicts(const HeavyCandidate& hc) const {
        for (int i = 0; i < hc.heavy_count; ++i)
            for (int used : heavy_used)
                if (hc.heavy[i] == used) return true;
        return false;
    }

    bool dfs(std::size_t idx, std::uint64_t covered) {
        if (++nodes > budget) throw ResourceExhausted("rainbow packing search: node budget exhausted");
        int need = k - static_cast<int>(chosen.size());
        // Try closing with triangles whose edges all carry unique colors:
        // vertex-disjointness then implies color-disjointness for free.
        if (auto f = detail::find_disjoint_triples(n, singleton_tris, covered, need, nodes, budget)) {
            fill = *f;
            return true;
        }
        if (need == 0) return false;  // unreachable: an empty fill always closes
        for (std::size_t i = idx; i < cands.size(); ++i) {
            const HeavyCandidate& hc = cands[i];
            if (hc.vmask & covered) continue;
            if (heavy_conflicts(hc)) continue;
            if (n - std::popcount(covered | hc.vmask) < 3 * (need - 1)) continue;
            chosen.push_back(static_cast<int>(i));
            for (int j = 0; j < hc.heavy_count; ++j) heavy_used.push_back(hc.heavy[j]);
            if (dfs(i + 1, covered | hc.vmask)) return true;
            for (int j = 0; j < hc.heavy_count; ++j) heavy_used.pop_back();
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<RainbowPacking> has_rainbow_packing(const EdgeColoring& c, int k, const PackingLimits& limits) {
    if (k < 0) throw std::invalid_argument("has_rainbow_packing: k must be non-negative");
    if (k == 0) return RainbowPacking{};
    int n = c.vertex_count();
    if (3LL * k > n) return std::nullopt;
    if (n > 64) throw std::invalid_argument("has_rainbow_packing: supports at most 64 vertices");

    RainbowSearch search(c, k, limits.node_budget);
    search.prepare();
    if (!search.dfs(0, 0)) return std::nullopt;

    RainbowPacking out;
    for (int i : search.chosen) out.triples.push_back(search.cands[i].tri);
    for (int i : search.fill) out.triples.push_back(search.singleton_tris[i]);
    std::sort(out.triples.begin(), out.triples.end());
    for (const auto& t : out.triples)
        out.triple_colors.push_back({c.color(t[0], t[1]), c.color(t[0], t[2]), c.color(t[1], t[2])});
    if (!validate_rainbow_packing(c, out, k))
        throw std::logic_error("has_rainbow_packing: produced an invalid witness");
    return out;
}

bool validate_rainbow_packing(const EdgeColoring& c, const RainbowPacking& p, int k) {
    if (static_cast<int>(p.triples.size()) != k) return false;
    if (p.triple_colors.size() != p.triples.size()) return false;
    std::vector<char> used_vertex(c.vertex_count(), 0);
    std::vector<int> all_colors;
    for (std::size_t i = 0; i < p.triples.size(); ++i) {
        const auto& t = p.triples[i];
        if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < c.vertex_count())) return false;
        for (int v : t) {
            if (used_vertex[v]) return false;
            used_vertex[v] = 1;
        }
        std::array<int, 3> expect = {c.color(t[0], t[1]), c.color(t[0], t[2]), c.color(t[1], t[2])};
        if (expect != p.triple_colors[i]) return false;
        for (int col : expect) all_colors.push_back(col);
    }
    std::sort(all_colors.begin(), all_colors.end());
    return std::adjacent_find(all_colors.begin(), all_colors.end()) == all_colors.end();
}

Graph extract_rainbow_subgraph(const EdgeColoring& c) {
    int n = c.vertex_count();
    std::vector<char> seen(c.color_count(), 0);
    std::vector<std::pair<int, int>> picked;
    long long i = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++i) {
            int col = c.values()[i];
            if (!seen[col]) {
                seen[col] = 1;
                picked.emplace_back(u, v);
            }
        }
    }
    Graph g(n, picked);
    if (g.edge_count() != c.color_count()) throw std::logic_error("extract_rainbow_subgraph: class count mismatch");
    return g;
}

std::map<int, int> color_multiset(const EdgeColoring& c, const std::vector<std::pair<int, int>>& edges) {
    std::map<int, int> out;
    for (const auto& [u, v] : edges) ++out[c.color(u, v)];
    return out;
}

std::string coloring_to_text(const EdgeColoring& c) {
    std::ostringstream os;
    os << c.vertex_count() << ' ' << c.color_count() << '\n';
    int n = c.vertex_count();
    long long i = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++i) os << u << ' ' << v << ' ' << c.values()[i] << '\n';
    return os.str();
}

EdgeColoring coloring_from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    long long n = -1, r = -1;
    if (!(is >> n >> r) || n < 0) throw std::invalid_argument("coloring text: bad header");
    long long m = n * (n - 1) / 2;
    std::vector<int> colors(m, -1);
    long long expected = 0;
    for (long long line = 0; line < m; ++line, ++expected) {
        long long u, v, col;
        if (!(is >> u >> v >> col)) throw std::invalid_argument("coloring text: missing edge line");
        if (u < 0 || v <= u || v >= n) throw std::invalid_argument("coloring text: bad edge");
        long long idx = pair_index(static_cast<int>(n), static_cast<int>(u), static_cast<int>(v));
        if (idx != expected) throw std::invalid_argument("coloring text: edges must be lexicographic and complete");
        colors[idx] = static_cast<int>(col);
    }
    std::string trailing;
    if (is >> trailing) throw std::invalid_argument("coloring text: trailing content");
    return EdgeColoring(static_cast<int>(n), std::move(colors), static_cast<int>(r));
}

}  // namespace rainbowlab
