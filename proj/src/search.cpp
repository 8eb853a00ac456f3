#include "srdual/search.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "srdual/dual_graph.hpp"
#include "srdual/error.hpp"
#include "srdual/serre.hpp"

namespace srdual {

namespace {

using BigInt = boost::multiprecision::cpp_int;
constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturate(const BigInt& v) {
    return v > BigInt(kSaturated) ? kSaturated : v.convert_to<std::size_t>();
}

// floor(3 * 2^((k-5)/2) * k) without floating point.
std::size_t thm38_value(std::size_t k) {
    if (k % 2 == 1) {
        BigInt v = BigInt(3) * k;
        if (k >= 5)
            v <<= (k - 5) / 2;
        else
            v >>= (5 - k) / 2;
        return saturate(v);
    }
    // For even k the value is sqrt(18 k^2 4^e) with e = (k-6)/2.
    const long e = (static_cast<long>(k) - 6) / 2;
    BigInt radicand = BigInt(18) * k * k;
    if (e > 0) radicand <<= static_cast<unsigned>(2 * e);
    BigInt root = boost::multiprecision::sqrt(radicand);
    if (e < 0) root >>= static_cast<unsigned>(-e);
    return saturate(root);
}

}  // namespace

std::vector<std::pair<std::string, std::size_t>> UpperBounds::entries() const {
    std::vector<std::pair<std::string, std::size_t>> out;
    auto add = [&](const char* name, const std::optional<std::size_t>& v) {
        if (v) out.emplace_back(name, *v);
    };
    add("thm32", thm32);
    add("thm35", thm35);
    add("thm36", thm36);
    add("thm37", thm37);
    add("thm38", thm38);
    add("codim3", codim3);
    add("codim4", codim4);
    add("klee_walkup_reduced", klee_walkup_reduced);
    return out;
}

UpperBounds bounds(std::size_t d, std::size_t n) {
    if (d < 2 || n <= d)
        throw Error(ErrorCode::BadParams, "bounds need 2 <= d < n, got d=" + std::to_string(d) +
                                              " n=" + std::to_string(n));
    const std::size_t k = n - d;
    UpperBounds b;
    b.d = d;
    b.n = n;
    if (d == 3) {
        const long long ln = static_cast<long long>(n);
        b.thm32 = static_cast<std::size_t>(std::max(2 * ln - 10, ln - 2));
    }
    b.thm35 = saturate(BigInt(k) << static_cast<unsigned>(d - 2));
    if (k == 5) b.thm36 = 8;
    if (k == 6) b.thm37 = 14;
    // At codimension 1 the formula gives 0, below the true value 1.
    if (k >= 2) b.thm38 = thm38_value(k);
    if (k == 3) b.codim3 = 3;
    if (k == 4) b.codim4 = 6;
    if (k >= 2 && k != d) b.klee_walkup_reduced = bounds(k, 2 * k).best;

    b.best = kSaturated;
    for (const auto& [name, v] : b.entries()) b.best = std::min(b.best, v);
    return b;
}

bool verify_bounds(const SimplicialComplex& cx) {
    const std::size_t d = cx.pure_facet_size();
    const Distance diam = diameter(build_dual_graph(cx));
    if (!diam) return false;
    if (cx.facet_count() == 1) return true;
    return *diam <= bounds(d, cx.universe_size()).best;
}

bool verify_bounds(const SearchResult& result) {
    return !result.witness || verify_bounds(*result.witness);
}

namespace {

// -1 when chunk a makes the better (smaller) labeled list, 1 when b does.
// A chunk that is a proper prefix of the other loses: the longer one has
// one more facet below the next power of two.
int compare_chunks(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a.size() == b.size()) return 0;
    return a.size() > b.size() ? -1 : 1;
}

struct Partial {
    std::vector<Vertex> label;  // label[v], or kUnlabeled
    VertexSet assigned;
};

constexpr Vertex kUnlabeled = static_cast<Vertex>(-1);

}  // namespace

CanonicalForm canonical_labeling(const std::vector<VertexSet>& input, std::size_t n,
                                 std::size_t beam_cap) {
    std::vector<VertexSet> facets = input;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    CanonicalForm out;
    if (facets.empty() || n == 0) {
        out.facets = facets;
        for (Vertex v = 0; v < n; ++v) out.perm.push_back(v);
        return out;
    }

    auto has = [&](const VertexSet& s) { return std::binary_search(facets.begin(), facets.end(), s); };
    auto twins = [&](Vertex u, Vertex v) {
        for (const auto& f : facets) {
            if (f.contains(u) == f.contains(v)) continue;
            VertexSet g = f;
            g.erase(f.contains(u) ? u : v);
            g.insert(f.contains(u) ? v : u);
            if (!has(g)) return false;
        }
        return true;
    };
    std::vector<std::vector<Vertex>> classes;
    std::vector<bool> placed(n, false);
    for (Vertex u = 0; u < n; ++u) {
        if (placed[u]) continue;
        classes.push_back({u});
        placed[u] = true;
        for (Vertex v = u + 1; v < n; ++v)
            if (!placed[v] && twins(u, v)) {
                classes.back().push_back(v);
                placed[v] = true;
            }
    }

    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t i = 0; i < facets.size(); ++i)
        facets[i].for_each([&](Vertex v) { incident[v].push_back(i); });

    // In a pure complex the least list starts with the facet {0, ..., d-1},
    // so the first d labels must go to the vertices of one facet.
    const std::size_t d = facets.front().size();
    const bool pure = std::all_of(facets.begin(), facets.end(),
                                  [&](const VertexSet& f) { return f.size() == d; });

    std::vector<Partial> beam{Partial{std::vector<Vertex>(n, kUnlabeled), VertexSet{}}};
    std::vector<VertexSet> prefix;
    for (Vertex k = 0; k < n; ++k) {
        std::vector<Partial> next;
        std::optional<std::vector<VertexSet>> best;
        for (const Partial& s : beam) {
            for (const auto& cls : classes) {
                auto it = std::find_if(cls.begin(), cls.end(),
                                       [&](Vertex v) { return !s.assigned.contains(v); });
                if (it == cls.end()) continue;
                const Vertex v = *it;
                VertexSet grown = s.assigned;
                grown.insert(v);
                if (pure && k < d &&
                    std::none_of(incident[v].begin(), incident[v].end(),
                                 [&](std::size_t i) { return grown.is_subset_of(facets[i]); }))
                    continue;

                std::vector<VertexSet> chunk;
                for (std::size_t i : incident[v]) {
                    if (!facets[i].is_subset_of(grown)) continue;
                    VertexSet mask{k};
                    facets[i].for_each([&](Vertex u) {
                        if (u != v) mask.insert(s.label[u]);
                    });
                    chunk.push_back(mask);
                }
                std::sort(chunk.begin(), chunk.end());

                const int cmp = best ? compare_chunks(chunk, *best) : -1;
                if (cmp > 0) continue;
                if (cmp < 0) {
                    best = std::move(chunk);
                    next.clear();
                }
                if (next.size() >= beam_cap) {
                    out.exact = false;
                    continue;
                }
                Partial child = s;
                child.label[v] = k;
                child.assigned = grown;
                next.push_back(std::move(child));
            }
        }
        prefix.insert(prefix.end(), best->begin(), best->end());
        beam = std::move(next);
    }

    out.facets = std::move(prefix);
    out.perm = beam.front().label;
    return out;
}

CanonicalForm canonical_form(const SimplicialComplex& cx) {
    return canonical_labeling(cx.facets(), cx.universe_size());
}

namespace {

using FacetList = std::vector<VertexSet>;

bool adjacent(const VertexSet& a, const VertexSet& b, std::size_t d) {
    return intersection_size(a, b) + 1 == d;
}

// Whether the ridge graph stays connected once facet `skip` is removed.
bool connected_without(const FacetList& fs, std::size_t skip, std::size_t d) {
    const std::size_t m = fs.size();
    if (m <= 2) return true;
    std::vector<bool> seen(m, false);
    seen[skip] = true;
    const std::size_t start = skip == 0 ? 1 : 0;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < m; ++w)
            if (!seen[w] && adjacent(fs[u], fs[w], d)) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached + 1 == m;
}

// Diameter of a ridge-connected facet list.
std::size_t list_diameter(const FacetList& fs, std::size_t d) {
    const std::size_t m = fs.size();
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (adjacent(fs[i], fs[j], d)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::size_t best = 0;
    std::vector<std::size_t> dist(m);
    for (std::size_t s = 0; s < m; ++s) {
        std::fill(dist.begin(), dist.end(), kSaturated);
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            best = std::max(best, dist[u]);
            for (std::size_t w : adj[u])
                if (dist[w] == kSaturated) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
    }
    return best;
}

VertexSet relabeled(const VertexSet& s, const std::vector<Vertex>& perm) {
    VertexSet out;
    s.for_each([&](Vertex v) { out.insert(perm[v]); });
    return out;
}

std::vector<std::string> letter_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(fresh_vertex_name(names, i));
    return names;
}

std::string hex_masks(const FacetList& fs) {
    std::ostringstream os;
    os << std::hex;
    for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? " " : "") << fs[i].low_word();
    return os.str();
}

class Search {
public:
    Search(std::size_t d, std::size_t n, const SearchOptions& opt)
        : d_(d), n_(n), opt_(opt), bound_(bounds(d, n).best),
          start_(std::chrono::steady_clock::now()) {
        // d-subsets of {0, ..., n-1} in increasing order (Gosper's hack).
        std::uint64_t mask = (std::uint64_t{1} << d) - 1;
        while (mask < (std::uint64_t{1} << n)) {
            candidates_.push_back(VertexSet::from_words(mask, 0));
            const std::uint64_t low = mask & (~mask + 1);
            const std::uint64_t ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }

    SearchResult run() {
        const FacetList root{VertexSet::range(d_)};
        std::vector<FacetList> tasks;
        std::vector<FacetList> level1;
        visit_shallow(root, level1);
        for (const auto& x : level1) visit_shallow(x, tasks);
        std::vector<bool> done(tasks.size(), false);
        const std::uint64_t shallow_nodes = nodes_.load();
        if (load_checkpoint(tasks.size(), done)) {
            log("resumed from checkpoint: " + std::to_string(std::count(done.begin(), done.end(), true)) +
                " of " + std::to_string(tasks.size()) + " tasks done");
        } else {
            nodes_ = shallow_nodes;
        }
        log("search d=" + std::to_string(d_) + " n=" + std::to_string(n_) + ": " +
            std::to_string(candidates_.size()) + " candidate facets, " +
            std::to_string(tasks.size()) + " tasks");

        std::atomic<std::size_t> next{0};
        std::size_t completed = static_cast<std::size_t>(std::count(done.begin(), done.end(), true));
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next++;
                if (i >= tasks.size() || stop_) return;
                if (done[i]) continue;
                visit(tasks[i]);
                if (stop_) return;
                std::lock_guard lock(mutex_);
                done[i] = true;
                ++completed;
                save_checkpoint(done);
                if (completed * 10 / tasks.size() != (completed - 1) * 10 / tasks.size() ||
                    completed == tasks.size())
                    log("tasks " + std::to_string(completed) + "/" + std::to_string(tasks.size()) +
                        ", nodes " + std::to_string(nodes_.load()) + ", incumbent " +
                        std::to_string(incumbent_.load()));
            }
        };
        const unsigned threads = std::max(1u, opt_.threads);
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        // Exceptions from workers would terminate; bound violations are
        // recorded and rethrown here instead.
        if (!violation_.empty()) throw std::logic_error(violation_);

        SearchResult r;
        r.d = d_;
        r.n = n_;
        r.mu = incumbent_.load();
        r.budget_exhausted = budget_hit_;
        r.bound_reached = bound_hit_;
        r.canonical_exact = !inexact_;
        r.exhaustive = !budget_hit_ && !bound_hit_ && !inexact_;
        r.nodes_explored = nodes_.load();
        r.tasks = tasks.size();
        r.elapsed = std::chrono::steady_clock::now() - start_;
        if (have_witness_) {
            r.witness = SimplicialComplex::from_facets(best_key_, n_, letter_names(n_));
            recheck(*r.witness, r.mu);
        }
        log("finished: mu=" + std::to_string(r.mu) + " exhaustive=" + (r.exhaustive ? "yes" : "no") +
            " nodes=" + std::to_string(r.nodes_explored));
        return r;
    }

private:
    void log(const std::string& line) const {
        if (opt_.log) opt_.log(line);
    }

    void recheck(const SimplicialComplex& w, std::size_t mu) const {
        const bool ok = w.is_pure() && w.pure_facet_size() == d_ && w.universe_size() == n_ &&
                        is_s2(w).holds && diameter(build_dual_graph(w)) == Distance(mu);
        if (!ok) throw std::logic_error("search witness failed re-verification: " + hex_masks(w.facets()));
    }

    bool over_budget() {
        const std::uint64_t count = nodes_.load();
        if (opt_.max_nodes && count > *opt_.max_nodes) return true;
        if (opt_.time_limit && count % 128 == 0 &&
            std::chrono::steady_clock::now() - start_ > *opt_.time_limit)
            return true;
        return false;
    }

    bool uses_all_vertices(const FacetList& x) const {
        VertexSet used;
        for (const auto& f : x) used |= f;
        return used.size() == n_;
    }

    void evaluate(const FacetList& x, std::size_t diam) {
        if (!uses_all_vertices(x) || diam < incumbent_.load()) return;
        const SimplicialComplex cx = SimplicialComplex::from_facets(x, n_);
        if (!is_s2(cx).holds) return;
        std::lock_guard lock(mutex_);
        if (diam > bound_ && violation_.empty())
            violation_ = "diameter " + std::to_string(diam) + " exceeds bound " +
                         std::to_string(bound_) + " for facets " + hex_masks(x);
        const std::size_t cur = incumbent_.load();
        if (!have_witness_ || diam > cur || (diam == cur && x < best_key_)) {
            have_witness_ = true;
            best_key_ = x;
            incumbent_ = std::max(cur, diam);
        }
        if (opt_.stop_at_bound && incumbent_.load() >= bound_) {
            bound_hit_ = true;
            stop_ = true;
        }
    }

    // Canonical children of the canonical list x, one per isomorphism class
    // whose canonical parent is isomorphic to x.
    std::vector<FacetList> children(const FacetList& x) {
        std::vector<FacetList> out;
        std::set<FacetList> seen;
        for (const auto& f : candidates_) {
            if (std::binary_search(x.begin(), x.end(), f)) continue;
            if (std::none_of(x.begin(), x.end(), [&](const VertexSet& g) { return adjacent(f, g, d_); }))
                continue;
            FacetList y = x;
            y.push_back(f);
            CanonicalForm cf = canonical_labeling(y, n_, opt_.beam_cap);
            if (!cf.exact) inexact_ = true;
            if (!seen.insert(cf.facets).second) continue;
            const std::size_t last = cf.facets.size() - 1;
            std::size_t g_index = last;
            while (!connected_without(cf.facets, g_index, d_)) --g_index;
            bool accept = relabeled(f, cf.perm) == cf.facets[g_index];
            if (!accept) {
                FacetList parent = cf.facets;
                parent.erase(parent.begin() + static_cast<long>(g_index));
                CanonicalForm pf = canonical_labeling(parent, n_, opt_.beam_cap);
                if (!pf.exact) inexact_ = true;
                accept = pf.facets == x;
            }
            if (accept) out.push_back(std::move(cf.facets));
        }
        return out;
    }

    void visit_shallow(const FacetList& x, std::vector<FacetList>& sink) {
        ++nodes_;
        evaluate(x, list_diameter(x, d_));
        for (auto& c : children(x)) sink.push_back(std::move(c));
    }

    void visit(const FacetList& x) {
        if (stop_) return;
        ++nodes_;
        if (over_budget()) {
            budget_hit_ = true;
            stop_ = true;
            return;
        }
        const std::size_t diam = list_diameter(x, d_);
        evaluate(x, diam);
        if (diam + (candidates_.size() - x.size()) < incumbent_.load()) return;
        for (const auto& c : children(x)) {
            visit(c);
            if (stop_) return;
        }
    }

    // Text format, one record per line:
    //   srdual-checkpoint 1
    //   d <d>
    //   n <n>
    //   tasks <count>
    //   done <task indices...>
    //   incumbent <mu> <hex facet masks...>   or   incumbent none
    //   nodes <count>
    void save_checkpoint(const std::vector<bool>& done) const {
        if (opt_.checkpoint_path.empty()) return;
        const std::string tmp = opt_.checkpoint_path + ".tmp";
        {
            std::ofstream out(tmp);
            out << "srdual-checkpoint 1\n"
                << "d " << d_ << "\n"
                << "n " << n_ << "\n"
                << "tasks " << done.size() << "\n"
                << "done";
            for (std::size_t i = 0; i < done.size(); ++i)
                if (done[i]) out << ' ' << i;
            out << "\n";
            if (have_witness_)
                out << "incumbent " << incumbent_.load() << ' ' << hex_masks(best_key_) << "\n";
            else
                out << "incumbent none\n";
            out << "nodes " << nodes_.load() << "\n";
        }
        std::rename(tmp.c_str(), opt_.checkpoint_path.c_str());
    }

    bool load_checkpoint(std::size_t task_count, std::vector<bool>& done) {
        if (opt_.checkpoint_path.empty()) return false;
        std::ifstream in(opt_.checkpoint_path);
        if (!in) return false;
        auto fail = [&](const std::string& why) -> bool {
            throw Error(ErrorCode::ParseError, "checkpoint " + opt_.checkpoint_path + ": " + why);
        };
        std::string line, word;
        std::size_t value = 0;
        if (!std::getline(in, line) || line != "srdual-checkpoint 1") return fail("bad header");
        auto expect = [&](const char* key, std::size_t want) {
            std::getline(in, line);
            std::istringstream ls(line);
            if (!(ls >> word >> value) || word != key) fail(std::string("missing ") + key);
            if (value != want) fail(std::string(key) + " does not match this search");
        };
        expect("d", d_);
        expect("n", n_);
        expect("tasks", task_count);

        std::getline(in, line);
        std::istringstream done_line(line);
        if (!(done_line >> word) || word != "done") fail("missing done");
        while (done_line >> value) {
            if (value >= task_count) fail("task index out of range");
            done[value] = true;
        }

        std::getline(in, line);
        std::istringstream inc(line);
        if (!(inc >> word) || word != "incumbent") fail("missing incumbent");
        std::string mu;
        inc >> mu;
        if (mu != "none") {
            FacetList key;
            std::uint64_t mask = 0;
            while (inc >> std::hex >> mask) key.push_back(VertexSet::from_words(mask, 0));
            if (key.empty()) fail("incumbent without facets");
            have_witness_ = true;
            best_key_ = std::move(key);
            incumbent_ = std::stoul(mu);
        }

        std::getline(in, line);
        std::istringstream nodes_line(line);
        std::uint64_t count = 0;
        if (!(nodes_line >> word >> count) || word != "nodes") fail("missing nodes");
        nodes_ = count;
        return true;
    }

    std::size_t d_;
    std::size_t n_;
    const SearchOptions& opt_;
    std::size_t bound_;
    std::chrono::steady_clock::time_point start_;
    FacetList candidates_;

    std::atomic<std::size_t> incumbent_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
    std::atomic<bool> budget_hit_{false};
    std::atomic<bool> bound_hit_{false};
    std::atomic<bool> inexact_{false};

    std::mutex mutex_;
    bool have_witness_ = false;
    FacetList best_key_;
    std::string violation_;
};

}  // namespace

SearchResult enumerate_mu(std::size_t d, std::size_t n, const SearchOptions& options) {
    if (d < 2 || n <= d || n > 32)
        throw Error(ErrorCode::BadParams, "search needs 2 <= d < n <= 32, got d=" +
                                              std::to_string(d) + " n=" + std::to_string(n));
    // The candidate facets are held in memory; keep that list modest.
    BigInt candidates = 1;
    for (std::size_t i = 0; i < d; ++i) candidates = candidates * (n - i) / (i + 1);
    if (candidates > (1u << 22))
        throw Error(ErrorCode::BadParams, "too many candidate facets for d=" + std::to_string(d) +
                                              " n=" + std::to_string(n));
    Search search(d, n, options);
    return search.run();
}

}  // namespace srdual
