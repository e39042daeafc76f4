#include "rainbowlab/extremal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rainbowlab/packing.hpp"

namespace rainbowlab {

namespace {

std::string invariant_key(const Graph& g) {
    std::vector<int> degs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    std::string key = std::to_string(g.edge_count());
    for (int d : degs) {
        key.push_back(';');
        key += std::to_string(d);
    }
    return key;
}

bool is_triangle_free(const Graph& g) { return enumerate_triangles(g).empty(); }

}  // namespace

std::vector<Graph> generate_graphs(int n) {
    if (n < 0 || n > 7) throw std::invalid_argument("generate_graphs: supports 0 <= n <= 7");
    std::vector<Graph> level{Graph(0)};
    for (int v = 1; v <= n; ++v) {
        std::vector<Graph> next;
        std::map<std::string, std::vector<std::size_t>> buckets;
        for (const Graph& g : level) {
            for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (v - 1)); ++nb) {
                std::vector<std::pair<int, int>> es = g.edges();
                for (int u = 0; u < v - 1; ++u)
                    if (nb >> u & 1) es.emplace_back(u, v - 1);
                Graph cand(v, es);
                auto& bucket = buckets[invariant_key(cand)];
                bool fresh = true;
                for (std::size_t i : bucket)
                    if (are_isomorphic(cand, next[i])) {
                        fresh = false;
                        break;
                    }
                if (fresh) {
                    bucket.push_back(next.size());
                    next.push_back(std::move(cand));
                }
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return graph6_encode(a) < graph6_encode(b);
    });
    return level;
}

CensusResult verify_moon(int n_max) {
    if (n_max < 0 || n_max > 7) throw std::invalid_argument("verify_moon: supports n_max <= 7");
    CensusResult res;
    res.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        std::map<int, bool> achieved;
        for (int t = 0; 3 * t <= n; ++t)
            if (2 * n > 9 * t + 8) achieved[t] = false;
        for (const Graph& g : generate_graphs(n)) {
            ++res.graphs_examined;
            int t = static_cast<int>(max_independent_triangles(g).size());
            if (2 * n <= 9 * t + 8) continue;
            long long bound = moon_ex(n, t);
            long long e = g.edge_count();
            if (e < bound) continue;
            std::string g6 = graph6_encode(g);
            std::string tag = "n=" + std::to_string(n) + " t=" + std::to_string(t);
            if (e > bound) {
                res.violations.push_back(tag + ": " + g6 + " has " + std::to_string(e) + " edges, bound " +
                                         std::to_string(bound));
            } else {
                bool matches = are_isomorphic(g, join(Graph::complete(t), Graph::turan(n - t, 2)));
                res.extremal.push_back({n, t, bound, g6, matches});
                achieved[t] = true;
                if (!matches) res.violations.push_back(tag + ": unexpected extremal graph " + g6);
            }
        }
        for (auto [t, hit] : achieved)
            if (!hit)
                res.violations.push_back("n=" + std::to_string(n) + " t=" + std::to_string(t) +
                                         ": no graph attains the bound " + std::to_string(moon_ex(n, t)));
    }
    return res;
}

CensusResult verify_gamma(int n_max) {
    if (n_max < 0 || n_max > 7) throw std::invalid_argument("verify_gamma: supports n_max <= 7");
    CensusResult res;
    res.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        for (const Graph& g : generate_graphs(n)) {
            ++res.graphs_examined;
            if (!is_triangle_free(g)) continue;
            int h = static_cast<int>(max_matching(g).size());
            long long bound = static_cast<long long>(h) * (n - h);
            long long e = g.edge_count();
            std::string g6 = graph6_encode(g);
            if (e > bound) {
                res.violations.push_back("n=" + std::to_string(n) + ": " + g6 + " has " + std::to_string(e) +
                                         " edges, matching bound " + std::to_string(bound));
            } else if (e == bound) {
                bool matches = are_isomorphic(g, Graph::complete_bipartite(h, n - h));
                res.extremal.push_back({n, h, bound, g6, matches});
                if (!matches)
                    res.violations.push_back("n=" + std::to_string(n) + ": unexpected extremal graph " + g6);
            }
        }
    }
    return res;
}

PairsExtraction lemma_pairs_extract(const Graph& g, int t) {
    int n = g.vertex_count();
    if (t < 0) throw std::invalid_argument("lemma_pairs_extract: t must be non-negative");
    if (!is_triangle_free(g)) throw std::invalid_argument("lemma_pairs_extract: graph must be triangle-free");
    if (n < 12 * t + 54) throw std::invalid_argument("lemma_pairs_extract: vertex count below the threshold");
    long long e = g.edge_count();
    if (4 * e < static_cast<long long>(n) * n - 2 * n - 24 * t - 44)
        throw std::invalid_argument("lemma_pairs_extract: edge count below the threshold");

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int pivot = 0;
    for (int v = 1; v < n; ++v)
        if (deg[v] > deg[pivot]) pivot = v;

    PairsExtraction out;
    out.pivot = pivot;
    out.independent_set = g.neighbors(pivot);
    for (int v : out.independent_set) {
        if (8 * deg[v] < 3 * n)
            out.low_degree.push_back(v);
        else
            out.core.push_back(v);
    }

    auto note = [&](std::string msg) { out.counterexamples.push_back(std::move(msg)); };
    const auto& X = out.independent_set;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j)
            if (g.has_edge(X[i], X[j]))
                note("neighborhood not independent: " + std::to_string(X[i]) + "," + std::to_string(X[j]));
    if (2 * static_cast<long long>(X.size()) < n - 4)
        note("neighborhood too small: |X|=" + std::to_string(X.size()));
    if (out.low_degree.size() > 7) note("low-degree part too large: |S|=" + std::to_string(out.low_degree.size()));
    if (2 * static_cast<long long>(out.core.size()) < n - 18)
        note("core too small: |X'|=" + std::to_string(out.core.size()));
    for (std::size_t i = 0; i < out.core.size(); ++i)
        for (std::size_t j = i + 1; j < out.core.size(); ++j) {
            int x = out.core[i], y = out.core[j];
            if (4 * (deg[x] + deg[y]) < 3 * n)
                note("core pair with low degree sum: " + std::to_string(x) + "," + std::to_string(y));
        }
    return out;
}

std::vector<std::string> moon_perturbation_failures(int n, int t) {
    if (t < 0 || n - t < 3) throw std::invalid_argument("moon_perturbation_failures: need t >= 0 and n >= t + 3");
    if (n > 64) throw std::invalid_argument("moon_perturbation_failures: supports at most 64 vertices");
    Graph base = join(Graph::complete(t), Graph::turan(n - t, 2));
    std::vector<std::string> failures;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (base.has_edge(u, v)) continue;
            if (!has_k_disjoint_triangles(base.with_edge(u, v), t + 1))
                failures.push_back(std::to_string(u) + "," + std::to_string(v));
        }
    return failures;
}

Graph random_dense_triangle_free(int n, int max_deletions, std::mt19937_64& rng) {
    if (n < 0) throw std::invalid_argument("random_dense_triangle_free: bad vertex count");
    Graph base = Graph::turan(n, 2);
    std::vector<std::pair<int, int>> es = base.edges();
    if (max_deletions < 0 || static_cast<std::size_t>(max_deletions) > es.size())
        throw std::invalid_argument("random_dense_triangle_free: max_deletions out of range");
    std::size_t j = max_deletions == 0 ? 0 : rng() % (static_cast<std::size_t>(max_deletions) + 1);
    for (std::size_t i = 0; i < j; ++i) std::swap(es[i], es[i + rng() % (es.size() - i)]);
    return Graph(n, std::vector<std::pair<int, int>>(es.begin() + j, es.end()));
}

}  // namespace rainbowlab
