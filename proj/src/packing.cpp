#include "rainbowlab/packing.hpp"

#include <algorithm>
#include <bit>

namespace rainbowlab {

std::vector<std::array<int, 3>> enumerate_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    int n = g.vertex_count();
    int words = g.row_words();
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const std::uint64_t* ru = g.row(u);
            const std::uint64_t* rv = g.row(v);
            for (int w = v / 64; w < words; ++w) {
                std::uint64_t bits = ru[w] & rv[w];
                if (w == v / 64) bits &= ~((std::uint64_t{2} << (v % 64)) - 1);  // keep > v
                while (bits) {
                    int b = std::countr_zero(bits);
                    out.push_back({u, v, w * 64 + b});
                    bits &= bits - 1;
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Maximum matching: augmenting paths with blossom contraction. Standard O(V^3)
// formulation; `base` tracks the contracted blossom root of each vertex.
// ---------------------------------------------------------------------------

namespace {

class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g) : n_(g.vertex_count()), adj_(n_), match_(n_, -1) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    }

    Matching run() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int u : adj_[v]) {
                if (match_[u] == -1) {
                    match_[v] = u;
                    match_[u] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] == -1) {
                int end = find_path(v);
                if (end != -1) augment(end);
            }
        }
        Matching m;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) m.edges.emplace_back(v, match_[v]);
        return m;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = p_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = p_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = true;
            blossom_[base_[match_[v]]] = true;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.assign(n_, false);
        p_.assign(n_, -1);
        base_.resize(n_);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::vector<int> q{root};
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                    // Odd cycle: contract the blossom rooted at the lca.
                    int curbase = lca(v, to);
                    blossom_.assign(n_, false);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = curbase;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) return to;  // augmenting path found
                    used_[match_[to]] = true;
                    q.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = p_[v], next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, p_, base_;
    std::vector<bool> used_, blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
    return BlossomMatcher(g).run();
}

int max_matching_bruteforce(const Graph& g) {
    auto es = g.edges();
    if (es.size() > 40) throw std::invalid_argument("max_matching_bruteforce: limited to 40 edges");
    std::vector<char> used(g.vertex_count(), 0);
    int best = 0;
    auto rec = [&](auto&& self, std::size_t idx, int count) -> void {
        best = std::max(best, count);
        for (std::size_t i = idx; i < es.size(); ++i) {
            if (count + static_cast<int>(es.size() - i) <= best) return;
            auto [u, v] = es[i];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            self(self, i + 1, count + 1);
            used[u] = used[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

// ---------------------------------------------------------------------------
// Triangle packing: branch and bound over the lex-ordered triangle list.
// Upper bound per node: free vertices / 3, refined by a greedy vertex
// transversal of the surviving triangles (any hitting set bounds the number
// of disjoint triangles). The greedy packing doubles as a lower bound.
// ---------------------------------------------------------------------------

namespace {

struct TriPackSearch {
    int n;
    const std::vector<std::array<int, 3>>& tris;
    std::vector<std::uint64_t> tmask;
    std::uint64_t budget;
    std::uint64_t& nodes;
    int target;  // -1 means maximize
    std::vector<int> best, cur;
    bool reached = false;

    TriPackSearch(int n_, const std::vector<std::array<int, 3>>& tris_, int target_, std::uint64_t& nodes_,
                  std::uint64_t budget_)
        : n(n_), tris(tris_), budget(budget_), nodes(nodes_), target(target_) {
        tmask.reserve(tris.size());
        for (const auto& t : tris)
            tmask.push_back((std::uint64_t{1} << t[0]) | (std::uint64_t{1} << t[1]) | (std::uint64_t{1} << t[2]));
    }

    int transversal_bound(const std::vector<int>& alive) const {
        if (alive.empty()) return 0;
        std::vector<int> deg(n, 0);
        for (int i : alive)
            for (int v : tris[i]) ++deg[v];
        std::vector<char> dead(alive.size(), 0);
        int remaining = static_cast<int>(alive.size());
        int ub = 0;
        while (remaining > 0) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (deg[v] > 0 && (pick < 0 || deg[v] > deg[pick])) pick = v;
            ++ub;
            for (std::size_t j = 0; j < alive.size(); ++j) {
                if (dead[j]) continue;
                const auto& t = tris[alive[j]];
                if (t[0] == pick || t[1] == pick || t[2] == pick) {
                    dead[j] = 1;
                    --remaining;
                    --deg[t[0]];
                    --deg[t[1]];
                    --deg[t[2]];
                }
            }
        }
        return ub;
    }

    void dfs(std::size_t start, std::uint64_t covered) {
        if (++nodes > budget) throw ResourceExhausted("triangle packing: node budget exhausted");
        std::vector<int> alive;
        for (std::size_t i = start; i < tris.size(); ++i)
            if (!(tmask[i] & covered)) alive.push_back(static_cast<int>(i));

        // Greedy packing: lower bound, materialized so `best` is a witness.
        {
            std::uint64_t cov = covered;
            std::size_t before = cur.size();
            std::vector<int> extra;
            for (int i : alive) {
                if (!(tmask[i] & cov)) {
                    extra.push_back(i);
                    cov |= tmask[i];
                }
            }
            if (cur.size() + extra.size() > best.size()) {
                best = cur;
                best.insert(best.end(), extra.begin(), extra.end());
            }
            if (target >= 0 && static_cast<int>(best.size()) >= target) {
                reached = true;
                return;
            }
            (void)before;
        }

        int free_v = n - std::popcount(covered);
        int ub = std::min(free_v / 3, transversal_bound(alive));
        int cap = static_cast<int>(cur.size()) + ub;
        if (target >= 0) {
            if (cap < target) return;
        } else if (cap <= static_cast<int>(best.size())) {
            return;
        }

        for (std::size_t pos = 0; pos < alive.size(); ++pos) {
            std::size_t remaining = alive.size() - pos;
            if (target >= 0) {
                if (cur.size() + remaining < static_cast<std::size_t>(target)) break;
            } else if (cur.size() + remaining <= best.size()) {
                break;
            }
            int i = alive[pos];
            cur.push_back(i);
            dfs(static_cast<std::size_t>(i) + 1, covered | tmask[i]);
            cur.pop_back();
            if (reached) return;
        }
    }
};

std::vector<std::array<int, 3>> indices_to_triples(const std::vector<std::array<int, 3>>& tris,
                                                   const std::vector<int>& idx) {
    std::vector<std::array<int, 3>> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(tris[i]);
    return out;
}

}  // namespace

TrianglePacking max_independent_triangles(const Graph& g, const PackingLimits& limits) {
    if (g.vertex_count() > 64)
        throw std::invalid_argument("max_independent_triangles: supports at most 64 vertices");
    auto tris = enumerate_triangles(g);
    std::uint64_t nodes = 0;
    TriPackSearch search(g.vertex_count(), tris, -1, nodes, limits.node_budget);
    search.dfs(0, 0);
    return TrianglePacking{indices_to_triples(tris, search.best)};
}

bool has_k_disjoint_triangles(const Graph& g, int k, const PackingLimits& limits) {
    if (k < 0) throw std::invalid_argument("has_k_disjoint_triangles: k must be non-negative");
    if (k == 0) return true;
    if (g.vertex_count() > 64)
        throw std::invalid_argument("has_k_disjoint_triangles: supports at most 64 vertices");
    if (3LL * k > g.vertex_count()) return false;
    auto tris = enumerate_triangles(g);
    std::uint64_t nodes = 0;
    TriPackSearch search(g.vertex_count(), tris, k, nodes, limits.node_budget);
    search.dfs(0, 0);
    return search.reached;
}

std::vector<int> common_neighborhood(const Graph& g, int x, int y) {
    int n = g.vertex_count();
    if (x < 0 || x >= n || y < 0 || y >= n) throw std::invalid_argument("common_neighborhood: vertex out of range");
    if (x == y) throw std::invalid_argument("common_neighborhood: vertices must be distinct");
    std::vector<int> out;
    const std::uint64_t* rx = g.row(x);
    const std::uint64_t* ry = g.row(y);
    for (int w = 0; w < g.row_words(); ++w) {
        std::uint64_t bits = rx[w] & ry[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

bool is_friendly(const Graph& g, int u, int v, int w) {
    int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n || w < 0 || w >= n)
        throw std::invalid_argument("is_friendly: vertex out of range");
    if (w == u || w == v) throw std::invalid_argument("is_friendly: third vertex must differ from the edge");
    if (!g.has_edge(u, v)) throw std::invalid_argument("is_friendly: uv must be an edge");
    return g.has_edge(u, w) && g.has_edge(v, w);
}

bool validate_matching(const Graph& g, const Matching& m) {
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) return false;
        if (u >= v || !g.has_edge(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

bool validate_packing(const Graph& g, const TrianglePacking& p) {
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& t : p.triples) {
        if (!(t[0] < t[1] && t[1] < t[2])) return false;
        if (t[0] < 0 || t[2] >= g.vertex_count()) return false;
        if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[0], t[2]) || !g.has_edge(t[1], t[2])) return false;
        for (int v : t) {
            if (used[v]) return false;
            used[v] = 1;
        }
    }
    return true;
}

namespace detail {

std::optional<std::vector<int>> find_disjoint_triples(int n, const std::vector<std::array<int, 3>>& tris,
                                                      std::uint64_t covered, int target, std::uint64_t& nodes,
                                                      std::uint64_t node_budget) {
    if (target < 0) throw std::invalid_argument("find_disjoint_triples: target must be non-negative");
    if (target == 0) return std::vector<int>{};
    if (n > 64) throw std::invalid_argument("find_disjoint_triples: supports at most 64 vertices");
    TriPackSearch search(n, tris, target, nodes, node_budget);
    search.dfs(0, covered);
    if (!search.reached) return std::nullopt;
    search.best.resize(target);
    return search.best;
}

}  // namespace detail

}  // namespace rainbowlab
