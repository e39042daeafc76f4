#include "rainbowlab/ar_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace rainbowlab {

namespace {

// Edges are assigned in vertex-incremental order: all edges inside {0..v}
// come before any edge touching v+1, so every triangle of a prefix is fully
// colored as early as possible and the rainbow prune fires early. The first
// edge always lands in block 0 (restricted growth), which pins the one free
// color swap; full vertex-orbit pruning is deliberately out of scope.
struct EdgeOrder {
    int n, m;
    std::vector<std::pair<int, int>> seq;
    struct Completion {
        int w, e1, e2;  // triangle {w,u,v}; e1=(w,u), e2=(w,v) are earlier
    };
    std::vector<std::vector<Completion>> completes;

    explicit EdgeOrder(int n_) : n(n_), m(n_ * (n_ - 1) / 2) {
        seq.reserve(m);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) seq.emplace_back(u, v);
        completes.resize(m);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = seq[e];
            for (int w = 0; w < u; ++w) completes[e].push_back({w, idx(w, u), idx(w, v)});
        }
    }
    static int idx(int u, int v) { return v * (v - 1) / 2 + u; }  // u < v
};

struct RainbowTri {
    std::uint64_t vmask;
    std::array<int, 3> cols;
};

bool cols_clash(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return true;
    return false;
}

// Does rts contain k pairwise vertex- and color-disjoint members, one of
// which is rts[must_use]? k is tiny, the list stays short.
bool packing_including(const std::vector<RainbowTri>& rts, std::size_t must_use, int k) {
    struct Frame {
        std::uint64_t vused;
        std::vector<std::array<int, 3>> cused;
    };
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t vused,
                   std::vector<std::array<int, 3>>& cused, int need) -> bool {
        if (need == 0) return true;
        for (std::size_t i = start; i < rts.size(); ++i) {
            if (i == must_use) continue;
            if (rts[i].vmask & vused) continue;
            bool clash = false;
            for (const auto& cs : cused)
                if (cols_clash(cs, rts[i].cols)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            cused.push_back(rts[i].cols);
            if (self(self, i + 1, vused | rts[i].vmask, cused, need - 1)) return true;
            cused.pop_back();
        }
        return false;
    };
    std::vector<std::array<int, 3>> cused{rts[must_use].cols};
    return rec(rec, 0, rts[must_use].vmask, cused, k - 1);
}

constexpr long long kNoWitness = std::numeric_limits<long long>::max();

struct Shared {
    std::uint64_t budget = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    std::atomic<long long> witness_job{kNoWitness};
    std::atomic<std::size_t> next_job{0};
    std::mutex mu;
    std::vector<char> completed;                       // guarded by mu
    std::vector<std::pair<long long, std::vector<int>>> found;  // guarded by mu

    void lower_witness_job(long long j) {
        long long cur = witness_job.load();
        while (j < cur && !witness_job.compare_exchange_weak(cur, j)) {
        }
    }
};

class SubtreeRunner {
public:
    SubtreeRunner(const EdgeOrder& ord, int r, int k, Shared& sh, long long job)
        : ord_(ord), r_(r), k_(k), sh_(sh), job_(job), col_(ord.m, -1) {}

    // Replays a restricted-growth prefix, then searches the subtree below it.
    // Returns true when a witness leaf was stored.
    bool run(const std::vector<std::uint16_t>& prefix) {
        bool found = run_inner(prefix);
        sh_.nodes.fetch_add(local_ & 0x3FF);  // nodes since the last full batch
        return found;
    }

    bool aborted() const { return aborted_; }
    const std::vector<int>& witness() const { return col_; }

private:
    bool run_inner(const std::vector<std::uint16_t>& prefix) {
        blocks_ = 0;
        rts_.clear();
        std::fill(col_.begin(), col_.end(), -1);
        for (std::size_t e = 0; e < prefix.size(); ++e) {
            int c = prefix[e];
            if (c > blocks_ || c >= r_) throw std::invalid_argument("search prefix violates restricted growth");
            col_[e] = c;
            if (!push_completions(static_cast<int>(e), c)) return false;  // dead prefix
            if (c == blocks_) ++blocks_;
        }
        return dfs(static_cast<int>(prefix.size()));
    }

    bool abort_check() {
        if ((++local_ & 0x3FF) == 0) flush();
        if (sh_.exhausted.load(std::memory_order_relaxed)) {
            aborted_ = true;
            return true;
        }
        if (job_ > sh_.witness_job.load(std::memory_order_relaxed)) {
            aborted_ = true;
            return true;
        }
        return false;
    }

    void flush() {
        std::uint64_t total = sh_.nodes.fetch_add(1024) + 1024;
        if (total > sh_.budget) sh_.exhausted.store(true);
    }

    bool push_completions(int e, int c) {
        auto [u, v] = ord_.seq[e];
        std::uint64_t base = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        for (const auto& comp : ord_.completes[e]) {
            int c1 = col_[comp.e1], c2 = col_[comp.e2];
            if (c1 == c2 || c1 == c || c2 == c) continue;
            rts_.push_back({base | (std::uint64_t{1} << comp.w), {c1, c2, c}});
            if (k_ == 1 || packing_including(rts_, rts_.size() - 1, k_)) return false;
        }
        return true;
    }

    bool dfs(int depth) {
        if (depth == ord_.m) return blocks_ == r_;
        int remaining = ord_.m - depth;
        int cmax = std::min(blocks_, r_ - 1);
        for (int c = 0; c <= cmax; ++c) {
            int nb = blocks_ + (c == blocks_ ? 1 : 0);
            if (nb + remaining - 1 < r_) continue;
            if (abort_check()) return false;
            std::size_t mark = rts_.size();
            col_[depth] = c;
            if (push_completions(depth, c)) {
                int ob = blocks_;
                blocks_ = nb;
                if (dfs(depth + 1)) return true;
                blocks_ = ob;
            }
            rts_.resize(mark);
            col_[depth] = -1;
            if (aborted_) return false;
        }
        return false;
    }

    const EdgeOrder& ord_;
    int r_, k_;
    Shared& sh_;
    long long job_;
    std::vector<int> col_;
    int blocks_ = 0;
    std::vector<RainbowTri> rts_;
    bool aborted_ = false;
    std::uint64_t local_ = 0;
};

// Enumerates the live restricted-growth prefixes at the split depth, with the
// same pruning the full search applies. Not charged against the node budget.
// Returns false when the cap cut the enumeration short, in which case `out`
// does not cover the whole tree and must not be searched.
bool generate_prefixes(const EdgeOrder& ord, int r, int k, int depth,
                       std::vector<std::vector<std::uint16_t>>& out, std::size_t cap) {
    std::vector<int> col(ord.m, -1);
    std::vector<RainbowTri> rts;
    int blocks = 0;

    auto push_ok = [&](int e, int c) -> bool {
        auto [u, v] = ord.seq[e];
        std::uint64_t base = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        for (const auto& comp : ord.completes[e]) {
            int c1 = col[comp.e1], c2 = col[comp.e2];
            if (c1 == c2 || c1 == c || c2 == c) continue;
            rts.push_back({base | (std::uint64_t{1} << comp.w), {c1, c2, c}});
            if (k == 1 || packing_including(rts, rts.size() - 1, k)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int e) -> bool {
        if (out.size() >= cap) return false;  // caller widens the depth instead
        if (e == depth) {
            out.emplace_back(col.begin(), col.begin() + depth);
            return true;
        }
        int remaining = ord.m - e;
        int cmax = std::min(blocks, r - 1);
        bool ok = true;
        for (int c = 0; c <= cmax && ok; ++c) {
            int nb = blocks + (c == blocks ? 1 : 0);
            if (nb + remaining - 1 < r) continue;
            std::size_t mark = rts.size();
            col[e] = c;
            if (push_ok(e, c)) {
                int ob = blocks;
                blocks = nb;
                ok = self(self, e + 1);
                blocks = ob;
            }
            rts.resize(mark);
            col[e] = -1;
        }
        return ok;
    };
    return rec(rec, 0);
}

struct CheckpointData {
    std::uint32_t n = 0, k = 0, r = 0, m = 0, depth = 0;
    std::uint64_t nodes = 0;
    std::vector<std::vector<std::uint16_t>> pending;
};

constexpr char kCheckpointMagic[4] = {'R', 'B', 'A', 'S'};
constexpr std::uint32_t kCheckpointVersion = 1;

void write_checkpoint(const std::string& path, const CheckpointData& cp) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write checkpoint file: " + tmp);
        auto put32 = [&](std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); };
        auto put64 = [&](std::uint64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); };
        os.write(kCheckpointMagic, 4);
        put32(kCheckpointVersion);
        put32(cp.n);
        put32(cp.k);
        put32(cp.r);
        put32(cp.m);
        put32(cp.depth);
        put64(cp.nodes);
        put32(static_cast<std::uint32_t>(cp.pending.size()));
        for (const auto& p : cp.pending)
            os.write(reinterpret_cast<const char*>(p.data()), static_cast<std::streamsize>(p.size() * 2));
        if (!os) throw std::runtime_error("short write on checkpoint file: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move checkpoint into place: " + path);
}

CheckpointData read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("cannot open checkpoint file: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || !std::equal(magic, magic + 4, kCheckpointMagic))
        throw std::invalid_argument("not a search checkpoint: " + path);
    auto get32 = [&]() {
        std::uint32_t v = 0;
        is.read(reinterpret_cast<char*>(&v), 4);
        return v;
    };
    auto get64 = [&]() {
        std::uint64_t v = 0;
        is.read(reinterpret_cast<char*>(&v), 8);
        return v;
    };
    if (get32() != kCheckpointVersion) throw std::invalid_argument("unsupported checkpoint version");
    CheckpointData cp;
    cp.n = get32();
    cp.k = get32();
    cp.r = get32();
    cp.m = get32();
    cp.depth = get32();
    cp.nodes = get64();
    std::uint32_t count = get32();
    if (!is) throw std::invalid_argument("truncated checkpoint header");
    if (cp.depth > cp.m || count > 10'000'000) throw std::invalid_argument("implausible checkpoint contents");
    cp.pending.resize(count);
    for (auto& p : cp.pending) {
        p.resize(cp.depth);
        is.read(reinterpret_cast<char*>(p.data()), static_cast<std::streamsize>(p.size() * 2));
    }
    if (!is) throw std::invalid_argument("truncated checkpoint body");
    return cp;
}

EdgeColoring witness_to_coloring(const EdgeOrder& ord, const std::vector<int>& col, int n, int r) {
    std::vector<int> lex(static_cast<std::size_t>(n) * (n - 1) / 2, -1);
    for (int e = 0; e < ord.m; ++e) {
        auto [u, v] = ord.seq[e];
        lex[pair_index(n, u, v)] = col[e];
    }
    return EdgeColoring(n, std::move(lex), r);
}

// Star coloring: edge {u,v} with u < v gets color u. No triangle is rainbow
// (two of its edges share the color of its least vertex), so it avoids every
// rainbow packing while spending n-1 colors.
EdgeColoring star_coloring(int n) {
    std::vector<int> cols(static_cast<std::size_t>(n) * (n - 1) / 2);
    long long i = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++i) cols[i] = u;
    return EdgeColoring(n, std::move(cols), n - 1);
}

// Best known avoiding coloring for (n,k), merged down to exactly r colors and
// re-verified. Returns nullopt when no known coloring has >= r colors.
std::optional<EdgeColoring> seed_avoiding(int n, int r, int k) {
    std::vector<EdgeColoring> seeds;
    if (k >= 2) {
        int t = k - 2;
        if (n > 3 * t + 6) seeds.push_back(build_lower_bound_coloring(n, t));
    }
    if (n >= 2) seeds.push_back(star_coloring(n));
    for (const auto& s : seeds) {
        if (s.color_count() < r) continue;
        EdgeColoring w = reduce_to_r_colors(s, r);
        if (!has_rainbow_packing(w, k)) return w;
    }
    return std::nullopt;
}

AvoidingResult run_search(int n, int r, int k, const SearchOptions& opts) {
    EdgeOrder ord(n);
    Shared sh;
    sh.budget = opts.node_budget;

    std::vector<std::vector<std::uint16_t>> jobs;
    std::uint32_t depth = 0;
    std::uint64_t prior_nodes = 0;

    if (opts.resume) {
        if (opts.checkpoint_path.empty())
            throw std::invalid_argument("resume requested without a checkpoint path");
        CheckpointData cp = read_checkpoint(opts.checkpoint_path);
        if (static_cast<int>(cp.n) != n || static_cast<int>(cp.k) != k || static_cast<int>(cp.r) != r ||
            static_cast<int>(cp.m) != ord.m)
            throw std::invalid_argument("checkpoint does not match the requested search");
        jobs = std::move(cp.pending);
        depth = cp.depth;
        prior_nodes = cp.nodes;
    } else {
        // Deepen the split until there are enough subtrees to spread across
        // workers and to checkpoint at a useful granularity.
        constexpr std::size_t kJobCap = 200'000;
        std::size_t target = std::max<std::size_t>(256, 64 * static_cast<std::size_t>(std::max(1, opts.workers)));
        int d = opts.split_depth > 0 ? std::min(opts.split_depth, ord.m) : 0;
        if (d == 0) {
            d = std::min(4, ord.m);
            std::vector<std::vector<std::uint16_t>> prev;
            for (;;) {
                jobs.clear();
                bool complete = generate_prefixes(ord, r, k, d, jobs, kJobCap);
                if (!complete) {
                    // The first depth cannot hit the cap, so prev covers the tree.
                    jobs = std::move(prev);
                    --d;
                    break;
                }
                if (jobs.empty() || jobs.size() >= target || d >= ord.m || d >= 24) break;
                prev = jobs;
                ++d;
            }
        } else {
            if (!generate_prefixes(ord, r, k, d, jobs, kJobCap))
                throw std::invalid_argument("split depth produces too many jobs");
        }
        depth = static_cast<std::uint32_t>(d);
    }

    sh.completed.assign(jobs.size(), 0);

    auto worker_main = [&]() {
        for (;;) {
            std::size_t j = sh.next_job.fetch_add(1);
            if (j >= jobs.size()) return;
            if (sh.exhausted.load()) return;
            if (static_cast<long long>(j) > sh.witness_job.load()) {
                std::lock_guard<std::mutex> lk(sh.mu);
                sh.completed[j] = 1;
                continue;
            }
            SubtreeRunner runner(ord, r, k, sh, static_cast<long long>(j));
            bool found = runner.run(jobs[j]);
            if (found) {
                std::lock_guard<std::mutex> lk(sh.mu);
                sh.found.emplace_back(static_cast<long long>(j), runner.witness());
                sh.completed[j] = 1;
                sh.lower_witness_job(static_cast<long long>(j));
            } else if (!runner.aborted()) {
                std::lock_guard<std::mutex> lk(sh.mu);
                sh.completed[j] = 1;
            } else if (sh.exhausted.load()) {
                return;  // leave the job pending for the checkpoint
            } else {
                std::lock_guard<std::mutex> lk(sh.mu);  // superseded by an earlier witness
                sh.completed[j] = 1;
            }
        }
    };

    int nworkers = std::max(1, opts.workers);
    if (nworkers == 1 || jobs.size() <= 1) {
        worker_main();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker_main);
        for (auto& t : pool) t.join();
    }

    AvoidingResult res;
    res.nodes = sh.nodes.load();

    long long wj = sh.witness_job.load();
    if (wj != kNoWitness) {
        std::vector<int> best;
        for (auto& [j, col] : sh.found)
            if (j == wj) best = col;
        res.outcome = AvoidOutcome::present;
        res.witness = witness_to_coloring(ord, best, n, r);
        if (has_rainbow_packing(*res.witness, k))
            throw std::logic_error("avoiding search returned a coloring that fails revalidation");
        if (!opts.checkpoint_path.empty()) std::remove(opts.checkpoint_path.c_str());
        return res;
    }

    if (sh.exhausted.load()) {
        res.outcome = AvoidOutcome::exhausted;
        if (!opts.checkpoint_path.empty()) {
            CheckpointData cp;
            cp.n = static_cast<std::uint32_t>(n);
            cp.k = static_cast<std::uint32_t>(k);
            cp.r = static_cast<std::uint32_t>(r);
            cp.m = static_cast<std::uint32_t>(ord.m);
            cp.depth = depth;
            cp.nodes = prior_nodes + res.nodes;
            for (std::size_t j = 0; j < jobs.size(); ++j)
                if (!sh.completed[j]) cp.pending.push_back(jobs[j]);
            write_checkpoint(opts.checkpoint_path, cp);
        }
        return res;
    }

    res.outcome = AvoidOutcome::absent;
    if (!opts.checkpoint_path.empty()) std::remove(opts.checkpoint_path.c_str());
    return res;
}

}  // namespace

AvoidingResult exists_avoiding_coloring(int n, int r, int k, const SearchOptions& opts) {
    if (n < 0) throw std::invalid_argument("exists_avoiding_coloring: bad vertex count");
    if (k < 0) throw std::invalid_argument("exists_avoiding_coloring: k must be non-negative");
    long long m = static_cast<long long>(n) * (n - 1) / 2;
    if (r < 1 || r > m) throw std::invalid_argument("exists_avoiding_coloring: r out of range");

    AvoidingResult res;
    if (k == 0) {
        // The empty packing is rainbow and present in every coloring.
        res.outcome = AvoidOutcome::absent;
        return res;
    }
    if (n < 3 * k) {
        // No k disjoint triangles fit at all; hand back the canonical
        // lex-least coloring with exactly r classes.
        std::vector<int> cols(m, 0);
        for (long long i = m - r + 1, c = 1; i < m; ++i, ++c) cols[i] = static_cast<int>(c);
        res.outcome = AvoidOutcome::present;
        res.witness = EdgeColoring(n, std::move(cols), r);
        return res;
    }
    if (n > 64) throw std::invalid_argument("exists_avoiding_coloring: supports at most 64 vertices");

    if (!opts.resume) {
        if (auto seed = seed_avoiding(n, r, k)) {
            res.outcome = AvoidOutcome::present;
            res.witness = std::move(seed);
            return res;
        }
    }
    return run_search(n, r, k, opts);
}

SearchReport ar_exact(int n, int k, const SearchOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (n < 3) throw std::invalid_argument("ar_exact: requires n >= 3");
    if (k < 0) throw std::invalid_argument("ar_exact: k must be non-negative");
    if (n < 3 * k) throw std::invalid_argument("ar_exact: requires n >= 3k");

    long long m = static_cast<long long>(n) * (n - 1) / 2;
    SearchReport rep;
    rep.n = n;
    rep.k = k;

    auto finish = [&](SearchReport& r2) {
        r2.wall_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(std::chrono::steady_clock::now() - t0)
                .count();
        return r2;
    };

    if (k == 0) {
        rep.ar = rep.ar_lower = rep.ar_upper = 1;
        return finish(rep);
    }

    if (n > 64) throw std::invalid_argument("ar_exact: supports at most 64 vertices");

    // Verified lower bound for the bracket (and the exhausted-path witness).
    long long lo = 1;
    std::optional<EdgeColoring> lo_witness = EdgeColoring::monochromatic(n);
    {
        std::vector<EdgeColoring> cands;
        if (k >= 2 && n > 3 * (k - 2) + 6) cands.push_back(build_lower_bound_coloring(n, k - 2));
        if (n >= 2) cands.push_back(star_coloring(n));
        for (auto& s : cands)
            if (s.color_count() > lo && !has_rainbow_packing(s, k)) {
                lo = s.color_count();
                lo_witness = std::move(s);
            }
    }

    long long r_start = m;
    if (opts.resume) {
        CheckpointData cp = read_checkpoint(opts.checkpoint_path);
        if (static_cast<int>(cp.n) != n || static_cast<int>(cp.k) != k || static_cast<int>(cp.m) != m)
            throw std::invalid_argument("checkpoint does not match the requested search");
        r_start = cp.r;
    }

    std::uint64_t used = 0;
    for (long long r = r_start; r >= 1; --r) {
        SearchOptions sub = opts;
        sub.resume = opts.resume && r == r_start;
        sub.node_budget = opts.node_budget > used ? opts.node_budget - used : 0;
        AvoidingResult res;
        if (sub.node_budget == 0) {
            res.outcome = AvoidOutcome::exhausted;
        } else {
            res = exists_avoiding_coloring(n, static_cast<int>(r), k, sub);
            used += res.nodes;
        }
        if (res.outcome == AvoidOutcome::absent) continue;
        if (res.outcome == AvoidOutcome::present) {
            rep.ar = rep.ar_lower = rep.ar_upper = r + 1;
            rep.witness = std::move(res.witness);
            if (has_rainbow_packing(*rep.witness, k))
                throw std::logic_error("ar_exact: witness failed independent revalidation");
            rep.nodes = used;
            return finish(rep);
        }
        rep.outcome = SearchOutcome::exhausted;
        rep.ar_lower = lo + 1;
        rep.ar_upper = r + 1;
        rep.witness = lo_witness;
        rep.nodes = used;
        return finish(rep);
    }
    throw std::logic_error("ar_exact: descended past r = 1 without a presence certificate");
}

std::uint64_t count_canonical_partitions(int m, int r) {
    if (m < 0 || r < 0) throw std::invalid_argument("count_canonical_partitions: bad arguments");
    if (r > m) return 0;
    if (m == 0) return 1;  // r == 0 here
    if (r == 0) return 0;
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int i, int b) -> void {
        if (i == m) {
            if (b == r) ++count;
            return;
        }
        int cmax = std::min(b, r - 1);
        for (int c = 0; c <= cmax; ++c) {
            int nb = b + (c == b ? 1 : 0);
            if (nb + (m - i - 1) < r) continue;
            self(self, i + 1, nb);
        }
    };
    rec(rec, 0, 0);
    return count;
}

EdgeColoring merge_color_classes(const EdgeColoring& c, int keep, int away) {
    int r = c.color_count();
    if (keep < 0 || away < 0 || keep >= r || away >= r || keep == away)
        throw std::invalid_argument("merge_color_classes: bad class ids");
    std::vector<int> cols = c.values();
    for (int& x : cols) {
        if (x == away) x = keep;
        if (x > away) --x;
    }
    return EdgeColoring(c.vertex_count(), std::move(cols), r - 1);
}

EdgeColoring reduce_to_r_colors(const EdgeColoring& c, int r) {
    if (r < 1 || r > c.color_count()) throw std::invalid_argument("reduce_to_r_colors: r out of range");
    EdgeColoring cur = c;
    while (cur.color_count() > r) cur = merge_color_classes(cur, cur.color_count() - 2, cur.color_count() - 1);
    return cur;
}

}  // namespace rainbowlab
