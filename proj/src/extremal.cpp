#include "spexlab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "spexlab/bounds.hpp"
#include "spexlab/canonical.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/parallel.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

namespace {

std::string subscript(const std::string& base, int n, int k) {
    return base + "_{" + std::to_string(n) + "," + std::to_string(k) + "}";
}

bool is_maximal_free(const Graph& g, const Forbidden& f) {
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v) && is_free(g.with_edge(u, v), f)) return false;
        }
    }
    return true;
}

struct Candidate {
    Graph graph;
    double lambda = 0.0;
};

class Ranker {
public:
    explicit Ranker(Objective mode) : mode_(mode) {}

    void add(Graph g, double lambda) {
        ++count_;
        if (mode_ == Objective::edges) {
            const auto e = static_cast<long long>(g.size());
            if (e > best_edges_) {
                best_edges_ = e;
                pool_.clear();
            }
            if (e == best_edges_) pool_.push_back({std::move(g), 0.0});
            return;
        }
        if (lambda > best_lambda_) {
            best_lambda_ = lambda;
            std::erase_if(pool_, [&](const Candidate& c) { return c.lambda < best_lambda_ - kLambdaTieTolerance; });
        }
        if (lambda >= best_lambda_ - kLambdaTieTolerance) pool_.push_back({std::move(g), lambda});
    }

    void finish(ExtremalReport& r) const {
        r.candidates = count_;
        if (pool_.empty()) {
            r.notes.push_back("no graph avoids the forbidden graph");
            return;
        }
        if (mode_ == Objective::edges) {
            r.optimum_edges = best_edges_;
            std::set<std::string> forms;
            for (const auto& c : pool_) forms.insert(canonical_form(c.graph));
            r.argmax.assign(forms.begin(), forms.end());
            r.tie_set = r.argmax;
            r.certified = true;
        } else {
            finish_lambda(r);
        }
        r.unique = r.argmax.size() == 1;
        for (const auto& s : r.argmax) r.argmax_connected.push_back(graph6_decode(s).is_connected());
    }

private:
    void finish_lambda(ExtremalReport& r) const {
        std::set<std::string> ties;
        bool exact = true;
        for (const auto& c : pool_) {
            ties.insert(canonical_form(c.graph));
            exact = exact && c.graph.order() <= kExactCompareLimit;
        }
        r.tie_set.assign(ties.begin(), ties.end());
        std::size_t leader = 0;
        for (std::size_t i = 1; i < pool_.size(); ++i) {
            if (!exact) {
                if (pool_[i].lambda > pool_[leader].lambda) leader = i;
            } else if (exact_lambda_compare(pool_[i].graph, pool_[leader].graph) > 0) {
                leader = i;
            }
        }
        std::set<std::string> best;
        for (const auto& c : pool_) {
            const bool equal = exact ? exact_lambda_compare(c.graph, pool_[leader].graph) == 0
                                     : std::abs(c.lambda - pool_[leader].lambda) <= kLambdaTieTolerance;
            if (equal) best.insert(canonical_form(c.graph));
        }
        r.argmax.assign(best.begin(), best.end());
        r.optimum_lambda = pool_[leader].lambda;
        r.certified = exact;
        if (!exact) r.notes.push_back("ties above 12 vertices resolved at tolerance 1e-9, not exactly");
    }

    Objective mode_;
    long long count_ = 0;
    long long best_edges_ = -1;
    double best_lambda_ = -1.0;
    std::vector<Candidate> pool_;
};

/// Scores a batch in parallel, then feeds the ranker in batch order.
void score_batch(std::vector<Graph>& batch, const Forbidden& f, bool check_free, bool maximal, Objective mode,
                 int workers, Ranker& ranker) {
    std::vector<char> keep(batch.size(), 0);
    std::vector<double> lambda(batch.size(), 0.0);
    parallel_for(batch.size(), workers, [&](std::size_t i) {
        const Graph& g = batch[i];
        if (check_free && !is_free(g, f)) return;
        if (maximal && !is_maximal_free(g, f)) return;
        keep[i] = 1;
        if (mode == Objective::lambda) {
            SpectralResult sr = power_iteration(g);
            if (!sr.converged) throw std::runtime_error("power iteration did not converge on " + graph6_encode(g));
            lambda[i] = sr.lambda;
        }
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
        if (keep[i]) ranker.add(std::move(batch[i]), lambda[i]);
    }
    batch.clear();
}

constexpr std::size_t kBatch = 2048;

void describe_forbidden(ExtremalReport& r, const Forbidden& f) {
    r.forbidden_graph6 = graph6_encode(forbidden_graph(f));
    if (const auto* spec = std::get_if<CycleSpec>(&f)) {
        r.forbidden_kind = "cycles";
        r.forbidden_label = spec->to_string();
    } else {
        r.forbidden_kind = "graph";
        r.forbidden_label = r.forbidden_graph6;
    }
}

void attach_prediction(ExtremalReport& r, const Forbidden& f, const std::optional<Construction>& pred) {
    if (!pred) return;
    r.prediction_name = pred->name;
    r.prediction = canonical_form(pred->graph);
    r.prediction_free = is_free(pred->graph, f);
    r.matches_prediction = r.argmax.size() == 1 && r.argmax.front() == *r.prediction;
}

void attach_perron(ExtremalReport& r) {
    bool any = false;
    bool ok = true;
    double margin = 0.0;
    for (const auto& s : r.argmax) {
        Graph g = graph6_decode(s);
        if (!g.is_connected() || g.order() < 2) continue;
        SpectralResult sr = power_iteration(g);
        const double m = *std::min_element(sr.perron.begin(), sr.perron.end()) - 1.0 / sr.lambda;
        margin = any ? std::min(margin, m) : m;
        any = true;
        ok = ok && m >= -kPerronSlack;
    }
    if (any) {
        r.perron_bound_ok = ok;
        r.perron_min_margin = margin;
    }
}

void attach_lambda_upper(ExtremalReport& r, int kappa, int t) {
    if (r.n <= kappa || r.argmax.empty()) return;
    r.lambda_upper = std::sqrt(static_cast<double>(4 * kappa + t) * (r.n - 1.0));
    r.within_lambda_upper = r.optimum_lambda <= *r.lambda_upper + kLambdaTieTolerance;
}

ExtremalReport run_builtin(int n, const Forbidden& f, Objective mode, const SearchOptions& opt) {
    if (n < 1 || n > kMaxEnumOrder) throw std::invalid_argument("built-in search supports 1 <= n <= 9");
    ExtremalReport r;
    r.n = n;
    r.mode = mode;
    r.maximal_only = mode == Objective::lambda && opt.maximal_only;
    describe_forbidden(r, f);
    Ranker ranker(mode);
    std::vector<Graph> batch;
    EnumFilter filter;
    filter.freeness = f;
    enumerate_graphs(
        n, filter,
        [&](const Graph& g) {
            batch.push_back(g);
            if (batch.size() == kBatch) score_batch(batch, f, false, r.maximal_only, mode, opt.workers, ranker);
        },
        opt.workers);
    score_batch(batch, f, false, r.maximal_only, mode, opt.workers, ranker);
    ranker.finish(r);
    return r;
}

void decorate_cycles(ExtremalReport& r, const CycleSpec& spec, const Forbidden& f) {
    auto pred = predicted_construction(r.n, spec);
    if (r.mode == Objective::lambda) {
        attach_prediction(r, f, pred);
        attach_lambda_upper(r, spec.kappa(), spec.t());
        attach_perron(r);
        return;
    }
    if (pred) {
        r.construction_name = pred->name;
        r.construction_edges = static_cast<long long>(pred->graph.size());
        r.construction_free = is_free(pred->graph, f);
    }
    if (!r.argmax.empty()) {
        r.aks_bound = aks_bound(r.n, spec);
        r.within_aks_bound = within_aks_bound(r.optimum_edges, r.n, spec);
    }
}

void decorate(ExtremalReport& r, const Forbidden& f) {
    if (const auto* spec = std::get_if<CycleSpec>(&f)) {
        decorate_cycles(r, *spec, f);
        return;
    }
    if (r.mode != Objective::lambda) return;
    const Graph& h = std::get<Graph>(f);
    auto pred = predicted_construction(r.n, h);
    if (!pred) r.notes.push_back("forbidden graph is not connected bipartite; no prediction");
    attach_prediction(r, f, pred);
    attach_perron(r);
}

} // namespace

std::optional<Construction> predicted_construction(int n, const CycleSpec& spec) {
    if (spec.max_k() >= 3) {
        if (n < spec.kappa() + 2) return std::nullopt;
        return Construction{subscript("S+", n, spec.kappa()), make_S_plus(n, spec.kappa())};
    }
    if (n < spec.t()) return std::nullopt;
    return Construction{subscript("F", n, spec.t()), make_F(n, spec.t())};
}

std::optional<Construction> predicted_construction(int n, const CyclePathSpec& spec) {
    const int t1 = static_cast<int>(spec.cycle_ks.size());
    const int t2 = static_cast<int>(spec.path_ps.size());
    if (spec.max_param() >= 3) {
        if (t1 < 1 && t2 < 2) return std::nullopt;
        if (n < spec.kappa() + 2) return std::nullopt;
        return Construction{subscript("S+", n, spec.kappa()), make_S_plus(n, spec.kappa())};
    }
    if (n < spec.t()) return std::nullopt;
    return Construction{subscript("F", n, spec.t()), make_F(n, spec.t())};
}

std::optional<Construction> predicted_construction(int n, const Graph& h) {
    if (h.order() == 0 || !h.is_connected()) return std::nullopt;
    auto bp = bipartition(h);
    if (!bp) return std::nullopt;
    const int k = bp->smallest_class_size - 1;
    if (k > n) return std::nullopt;
    return Construction{subscript("S", n, k), make_S(n, k)};
}

ExtremalReport ex_search(int n, const Forbidden& f, const SearchOptions& opt) {
    ExtremalReport r = run_builtin(n, f, Objective::edges, opt);
    decorate(r, f);
    return r;
}

ExtremalReport spex_search(int n, const Forbidden& f, const SearchOptions& opt) {
    ExtremalReport r = run_builtin(n, f, Objective::lambda, opt);
    decorate(r, f);
    return r;
}

ExtremalReport spex_search_forbidden_graph(int n, const Graph& h, const SearchOptions& opt) {
    return spex_search(n, Forbidden{h}, opt);
}

ExtremalReport spex_search_cycles_paths(int n, const CyclePathSpec& spec, const SearchOptions& opt) {
    const Forbidden f{make_intersecting_cycles_paths(spec)};
    ExtremalReport r = run_builtin(n, f, Objective::lambda, opt);
    r.forbidden_kind = "cycles-paths";
    std::string label;
    for (int k : spec.cycle_ks) label += (label.empty() ? "" : ",") + std::to_string(k);
    label += ";";
    for (std::size_t i = 0; i < spec.path_ps.size(); ++i) label += (i ? "," : "") + std::to_string(spec.path_ps[i]);
    r.forbidden_label = label;
    auto pred = predicted_construction(n, spec);
    if (!pred) r.notes.push_back("parameters fall outside both construction cases; no prediction");
    attach_prediction(r, f, pred);
    attach_lambda_upper(r, spec.kappa(), spec.t());
    attach_perron(r);
    return r;
}

ExtremalReport search_graphs(const std::vector<Graph>& graphs, const Forbidden& f, Objective mode,
                             const SearchOptions& opt) {
    ExtremalReport r;
    r.mode = mode;
    describe_forbidden(r, f);
    if (graphs.empty()) {
        r.notes.push_back("empty input");
        return r;
    }
    r.n = graphs.front().order();
    for (const auto& g : graphs) {
        if (g.order() != r.n) throw std::invalid_argument("input graphs must all have the same order");
        if (!g.is_dense()) throw std::invalid_argument("input graphs must have at most 64 vertices");
    }
    Ranker ranker(mode);
    std::vector<Graph> batch;
    for (const auto& g : graphs) {
        batch.push_back(g);
        if (batch.size() == kBatch) score_batch(batch, f, true, false, mode, opt.workers, ranker);
    }
    score_batch(batch, f, true, false, mode, opt.workers, ranker);
    ranker.finish(r);
    decorate(r, f);
    return r;
}

} // namespace spexlab
