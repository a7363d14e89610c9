#include "spexlab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spexlab/bounds.hpp"
#include "spexlab/canonical.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/parallel.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/subgraph.hpp"
#include "spexlab/verify.hpp"

namespace spexlab {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed(double x, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

void for_each_input(const std::string& path, std::istream& in, const std::function<void(Graph&&)>& fn) {
    if (path.empty() || path == "-") {
        stream_graph6(in, fn);
        return;
    }
    std::ifstream file(path);
    if (!file) throw UsageError("cannot read " + path);
    stream_graph6(file, fn);
}

std::vector<Graph> read_inputs(const std::string& path, std::istream& in) {
    std::vector<Graph> gs;
    for_each_input(path, in, [&](Graph&& g) { gs.push_back(std::move(g)); });
    return gs;
}

/// Writes to --output when given, otherwise to `out`.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write " + path);
    file << text;
}

CyclePathSpec parse_cycles_paths(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw UsageError("cycles-paths spec must look like \"2,3;2\"");
    auto ints = [](const std::string& part) {
        if (part.empty()) return std::vector<int>{};
        return CycleSpec::parse(part).ks();
    };
    return CyclePathSpec(ints(text.substr(0, semi)), ints(text.substr(semi + 1)));
}

struct ForbiddenArgs {
    std::string spec;
    std::string graph;
    std::string cycles_paths;

    void add(CLI::App* app, bool with_cycles_paths) {
        auto* s = app->add_option("--spec", spec, "cycle parameters k_1,...,k_t (\"2,3\" is C_{4,6})");
        auto* g = app->add_option("--forbidden", graph, "forbidden graph as a graph6 string");
        s->excludes(g);
        if (with_cycles_paths) {
            auto* c = app->add_option("--cycles-paths", cycles_paths, "cycles and paths as \"k1,k2;p1,p2\"");
            c->excludes(s)->excludes(g);
        }
    }

    bool present() const { return !spec.empty() || !graph.empty() || !cycles_paths.empty(); }

    Forbidden get() const {
        if (!spec.empty()) return CycleSpec::parse(spec);
        if (!graph.empty()) return graph6_decode(graph);
        if (!cycles_paths.empty()) return make_intersecting_cycles_paths(parse_cycles_paths(cycles_paths));
        throw UsageError("one of --spec, --forbidden or --cycles-paths is required");
    }
};

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    auto digits = [&](const std::string& d) {
        if (d.empty() || !std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw UsageError("not a number: " + text);
        }
        return BigInt(d);
    };
    Rational r;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        BigInt den = digits(s.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator: " + text);
        r = Rational(digits(s.substr(0, slash)), den);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        r = Rational(digits(s.substr(0, dot).empty() ? "0" : s.substr(0, dot)) * scale + (frac.empty() ? 0 : digits(frac)),
                     scale);
    } else {
        r = Rational(digits(s));
    }
    return neg ? Rational(-r) : r;
}

json optional_json(const auto& opt) {
    if (!opt) return nullptr;
    return json(*opt);
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::string family;
    int n = -1;
    int k = -1;
    int a = -1;
    int b = -1;
    std::string spec;
    std::string paths;
};

Graph build_family(const ConstructArgs& c) {
    auto need = [&](int v, const char* name) {
        if (v < 0) throw UsageError(c.family + " needs --" + name);
        return v;
    };
    const std::string& f = c.family;
    if (f == "S") return make_S(need(c.n, "n"), need(c.k, "k"));
    if (f == "S+") return make_S_plus(need(c.n, "n"), need(c.k, "k"));
    if (f == "F") return make_F(need(c.n, "n"), need(c.k, "k"));
    if (f == "M") return make_matching(need(c.k, "k"));
    if (f == "K") return make_K(need(c.a, "a"), need(c.b, "b"));
    if (f == "Kp") return make_Kp(need(c.a, "a"), need(c.b, "b"));
    if (f == "Km") return make_Km(need(c.a, "a"), need(c.b, "b"));
    if (f == "complete") return make_complete(need(c.n, "n"));
    if (f == "cycle") return make_cycle(need(c.n, "n"));
    if (f == "path") return make_path(need(c.n, "n"));
    if (f == "empty") return make_empty(need(c.n, "n"));
    if (f == "cycles") {
        if (c.spec.empty()) throw UsageError("cycles needs --spec");
        return make_intersecting_even_cycles(CycleSpec::parse(c.spec));
    }
    if (f == "cycles-paths") {
        if (c.spec.empty() && c.paths.empty()) throw UsageError("cycles-paths needs --spec and/or --paths");
        return make_intersecting_cycles_paths(parse_cycles_paths(c.spec + ";" + c.paths));
    }
    throw UsageError("unknown family: " + f);
}

std::optional<std::vector<std::vector<Vertex>>> family_partition(const ConstructArgs& c) {
    if (c.family == "S") return partition_S(c.n, c.k);
    if (c.family == "S+") return partition_S_plus(c.n, c.k);
    if (c.family == "F") return partition_F(c.n, c.k);
    return std::nullopt;
}

void add_family_options(CLI::App* app, ConstructArgs& c) {
    app->add_option("--family", c.family, "S, S+, F, M, K, Kp, Km, complete, cycle, path, empty, cycles, cycles-paths");
    app->add_option("--n", c.n, "order");
    app->add_option("--k", c.k, "clique or matching size");
    app->add_option("--a", c.a, "side A size");
    app->add_option("--b", c.b, "side B size");
    app->add_option("--spec", c.spec, "cycle parameters");
    app->add_option("--paths", c.paths, "path parameters for cycles-paths");
}

// ---------------------------------------------------------------------------

json spectrum_json(const Graph& g, const std::string& method, double lambda, const SpectralResult* sr,
                   bool with_perron) {
    json j;
    if (g.is_dense()) j["graph6"] = graph6_encode(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["method"] = method;
    j["lambda"] = lambda;
    if (sr) {
        j["residual"] = sr->residual;
        j["iterations"] = sr->iterations;
        j["converged"] = sr->converged;
        if (with_perron) j["perron"] = sr->perron;
    }
    return j;
}

} // namespace

json report_json(const ExtremalReport& r) {
    json j;
    j["schema"] = 1;
    j["n"] = r.n;
    j["forbidden"] = {{"kind", r.forbidden_kind}, {"label", r.forbidden_label}, {"graph6", r.forbidden_graph6}};
    j["mode"] = r.mode == Objective::edges ? "edges" : "lambda";
    j["maximal_only"] = r.maximal_only;
    j["candidates"] = r.candidates;
    if (r.mode == Objective::edges) {
        j["optimum"] = r.optimum_edges;
    } else {
        j["optimum"] = r.optimum_lambda;
    }
    j["argmax"] = r.argmax;
    j["argmax_connected"] = r.argmax_connected;
    j["tie_set"] = r.tie_set;
    j["unique"] = r.unique;
    j["certified"] = r.certified;
    j["prediction"] = {{"name", optional_json(r.prediction_name)},
                       {"graph6", optional_json(r.prediction)},
                       {"free", optional_json(r.prediction_free)}};
    j["matches_prediction"] = optional_json(r.matches_prediction);
    json b;
    if (r.construction_name) {
        b["construction"] = {{"name", *r.construction_name},
                             {"edges", optional_json(r.construction_edges)},
                             {"free", optional_json(r.construction_free)}};
    }
    if (r.aks_bound) {
        b["aks_bound"] = *r.aks_bound;
        b["within_aks_bound"] = optional_json(r.within_aks_bound);
        b["aks_note"] = "the subtracted O(1/n) term is dropped";
    }
    if (r.lambda_upper) {
        b["lambda_upper"] = *r.lambda_upper;
        b["within_lambda_upper"] = optional_json(r.within_lambda_upper);
    }
    if (r.perron_bound_ok) {
        b["perron_bound_ok"] = *r.perron_bound_ok;
        b["perron_min_margin"] = optional_json(r.perron_min_margin);
    }
    j["checks"] = b.is_null() ? json::object() : b;
    j["notes"] = r.notes;
    return j;
}

std::string report_table(const ExtremalReport& r) {
    std::ostringstream out;
    out << "n                   " << r.n << '\n';
    out << "forbidden           " << r.forbidden_kind << ' ' << r.forbidden_label << '\n';
    out << "mode                " << (r.mode == Objective::edges ? "edges" : "lambda") << '\n';
    out << "candidates          " << r.candidates << '\n';
    out << "optimum             "
        << (r.mode == Objective::edges ? std::to_string(r.optimum_edges) : fixed(r.optimum_lambda)) << '\n';
    out << "argmax              ";
    for (std::size_t i = 0; i < r.argmax.size(); ++i) out << (i ? " " : "") << r.argmax[i];
    out << '\n';
    out << "unique              " << (r.unique ? "yes" : "no") << (r.certified ? " (exact)" : "") << '\n';
    out << "tie set size        " << r.tie_set.size() << '\n';
    if (r.prediction_name) {
        out << "prediction          " << *r.prediction_name << ' ' << *r.prediction << '\n';
        out << "matches prediction  " << (r.matches_prediction.value_or(false) ? "yes" : "no") << '\n';
    }
    if (r.construction_name) {
        out << "construction        " << *r.construction_name << " edges " << *r.construction_edges
            << (r.construction_free.value_or(false) ? " (free)" : " (not free)") << '\n';
    }
    if (r.aks_bound) out << "aks bound           " << fixed(*r.aks_bound, 6) << " (O(1/n) term dropped)\n";
    if (r.lambda_upper) out << "lambda upper        " << fixed(*r.lambda_upper, 6) << '\n';
    if (r.perron_bound_ok) out << "perron bound        " << (*r.perron_bound_ok ? "ok" : "violated") << '\n';
    for (const auto& note : r.notes) out << "note                " << note << '\n';
    return out.str();
}

std::string report_csv(const ExtremalReport& r) {
    std::ostringstream out;
    out << "n,forbidden,mode,optimum,graph6,connected,matches_prediction\n";
    const std::string optimum =
        r.mode == Objective::edges ? std::to_string(r.optimum_edges) : fixed(r.optimum_lambda, 12);
    for (std::size_t i = 0; i < r.argmax.size(); ++i) {
        out << r.n << ",\"" << r.forbidden_kind << ' ' << r.forbidden_label << "\","
            << (r.mode == Objective::edges ? "edges" : "lambda") << ',' << optimum << ",\"" << r.argmax[i]
            << "\"," << (r.argmax_connected[i] ? "true" : "false") << ',';
        if (r.prediction) out << (r.argmax[i] == *r.prediction ? "true" : "false");
        out << '\n';
    }
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral Turan experiments on intersecting even cycles", "spexlab"};
    app.require_subcommand(1);
    int workers = 0;
    app.add_option("--workers", workers, "worker threads (default: SPEXLAB_WORKERS or all cores)");

    // construct
    ConstructArgs cons;
    auto* construct = app.add_subcommand("construct", "print a named graph as graph6");
    add_family_options(construct, cons);
    construct->get_option("--family")->required();

    // spectrum
    ConstructArgs spec_cons;
    std::string spectrum_input, spectrum_method = "power", spectrum_format = "json";
    double tol = kDefaultTolerance;
    long max_iter = kDefaultMaxIterations;
    bool with_perron = false;
    auto* spectrum = app.add_subcommand("spectrum", "spectral radius of graph6 input or a named graph");
    add_family_options(spectrum, spec_cons);
    spectrum->add_option("--input", spectrum_input, "graph6 file (default stdin)");
    spectrum->add_option("--method", spectrum_method, "power or quotient")->check(CLI::IsMember({"power", "quotient"}));
    spectrum->add_option("--tol", tol, "residual tolerance");
    spectrum->add_option("--max-iter", max_iter, "iteration cap");
    spectrum->add_flag("--perron", with_perron, "include the Perron vector");
    spectrum->add_option("--format", spectrum_format)->check(CLI::IsMember({"json", "csv", "table"}));

    // check-free
    ForbiddenArgs free_args;
    std::string free_input, free_format = "json";
    auto* check_free = app.add_subcommand("check-free", "test graph6 input for a forbidden subgraph");
    free_args.add(check_free, true);
    check_free->add_option("--input", free_input, "graph6 file (default stdin)");
    check_free->add_option("--format", free_format)->check(CLI::IsMember({"json", "csv", "table"}));

    // enum
    ForbiddenArgs enum_args;
    int enum_n = 0;
    bool enum_connected = false, enum_count = false;
    std::optional<int> min_edges, max_edges;
    auto* enumerate = app.add_subcommand("enum", "all graphs on n <= 9 vertices up to isomorphism");
    enumerate->add_option("--n", enum_n)->required();
    enumerate->add_flag("--connected", enum_connected);
    enumerate->add_option("--min-edges", min_edges);
    enumerate->add_option("--max-edges", max_edges);
    enumerate->add_flag("--count", enum_count, "print only the number of graphs");
    enum_args.add(enumerate, true);

    // ex-search / spex-search
    struct SearchArgs {
        ForbiddenArgs forbid;
        int n = 0;
        std::string input, format = "json", output;
        bool all_graphs = false;
    };
    SearchArgs ex_args, spex_args;
    auto add_search = [&](const char* name, const char* help, SearchArgs& s) {
        auto* sub = app.add_subcommand(name, help);
        s.forbid.add(sub, true);
        sub->add_option("--n", s.n, "order for the built-in enumeration");
        sub->add_option("--input", s.input, "search a graph6 file (\"-\" for stdin) instead of enumerating");
        sub->add_option("--format", s.format)->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--output", s.output, "write the report here");
        sub->add_flag("--all-graphs", s.all_graphs, "do not restrict to maximal F-free graphs");
        return sub;
    };
    auto* ex = add_search("ex-search", "maximum edges over F-free graphs", ex_args);
    auto* spex = add_search("spex-search", "maximum spectral radius over F-free graphs", spex_args);

    // bounds
    std::vector<int> bound_ns;
    std::vector<std::string> bound_specs;
    bool alon = false;
    long long qa = 1, qb = 1, qr = 1, qn = 1;
    std::string qd = "0";
    auto* bounds = app.add_subcommand("bounds", "bound table over an (n, spec) grid");
    bounds->add_option("--n", bound_ns, "orders, comma separated")->delimiter(',');
    bounds->add_option("--spec", bound_specs, "cycle parameters; repeat for several");
    bounds->add_flag("--alon", alon, "evaluate the containment condition for bipartite H instead");
    bounds->add_option("--a", qa);
    bounds->add_option("--b", qb);
    bounds->add_option("--r", qr);
    bounds->add_option("--order", qn, "host order for --alon");
    bounds->add_option("--d", qd, "average degree for --alon (integer, a/b or decimal)");

    // verify
    std::string claim, verify_spec, verify_h, verify_output;
    std::vector<int> verify_ns;
    std::vector<std::string> verify_specs;
    int nmax = 8, n_lo = -1, n_hi = -1;
    long trials = 10000;
    std::uint64_t seed = 42;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run a named claim check");
    verify->add_option("--claim", claim, "claim id or \"all\"")->required();
    verify->add_option("--spec", verify_specs, "cycle parameters; repeat for grids");
    verify->add_option("--n", verify_ns, "order(s), comma separated")->delimiter(',');
    verify->add_option("--nmax", nmax);
    verify->add_option("--n-lo", n_lo);
    verify->add_option("--n-hi", n_hi);
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);
    verify->add_option("--graph", verify_h, "forbidden graph (graph6) for small-subgraph");
    verify->add_flag("--timing", timing, "include runtimes in the output");
    verify->add_option("--output", verify_output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (workers <= 0) workers = default_workers();
        SearchOptions opt;
        opt.workers = workers;

        if (construct->parsed()) {
            out << graph6_encode(build_family(cons)) << '\n';
            return kExitOk;
        }

        if (spectrum->parsed()) {
            std::vector<Graph> graphs;
            std::optional<std::vector<std::vector<Vertex>>> cells;
            if (!spec_cons.family.empty()) {
                graphs.push_back(build_family(spec_cons));
                cells = family_partition(spec_cons);
            } else {
                graphs = read_inputs(spectrum_input, in);
            }
            json results = json::array();
            for (const auto& g : graphs) {
                if (spectrum_method == "quotient") {
                    auto classes = cells ? *cells : equitable_refinement(g);
                    const double lambda = g.order() ? quotient_spectral_radius(g, classes) : 0.0;
                    results.push_back(spectrum_json(g, "quotient", lambda, nullptr, false));
                } else {
                    SpectralResult sr = power_iteration(g, tol, max_iter);
                    results.push_back(spectrum_json(g, "power", sr.lambda, &sr, with_perron));
                }
            }
            if (spectrum_format == "json") {
                out << json{{"schema", 1}, {"results", results}}.dump(2) << '\n';
            } else if (spectrum_format == "csv") {
                out << "graph6,n,m,method,lambda,residual,iterations,converged\n";
                for (const auto& r : results) {
                    out << '"' << r.value("graph6", std::string()) << "\"," << r["n"] << ',' << r["m"] << ','
                        << r["method"].get<std::string>() << ',' << fixed(r["lambda"].get<double>(), 12) << ',';
                    if (r.contains("residual")) {
                        out << r["residual"] << ',' << r["iterations"] << ',' << r["converged"];
                    } else {
                        out << ",,";
                    }
                    out << '\n';
                }
            } else {
                for (const auto& r : results) {
                    out << r.value("graph6", std::string("-")) << ' ' << fixed(r["lambda"].get<double>()) << '\n';
                }
            }
            return kExitOk;
        }

        if (check_free->parsed()) {
            const Forbidden f = free_args.get();
            const auto* spec = std::get_if<CycleSpec>(&f);
            const Graph h = forbidden_graph(f);
            json results = json::array();
            for_each_input(free_input, in, [&](Graph&& g) {
                json j{{"graph6", graph6_encode(g)}};
                if (spec) {
                    auto w = spec->vertex_count() <= g.order() ? contains_intersecting_even_cycles(g, *spec)
                                                               : std::nullopt;
                    j["free"] = !w.has_value();
                    if (w) j["witness"] = {{"center", w->center}, {"cycles", w->cycles}};
                } else {
                    auto w = h.order() <= g.order() ? contains_subgraph(g, h) : std::nullopt;
                    j["free"] = !w.has_value();
                    if (w) j["witness"] = *w;
                }
                results.push_back(std::move(j));
            });
            if (free_format == "json") {
                out << json{{"schema", 1}, {"forbidden", graph6_encode(h)}, {"results", results}}.dump(2) << '\n';
            } else if (free_format == "csv") {
                out << "graph6,free\n";
                for (const auto& r : results) {
                    out << '"' << r["graph6"].get<std::string>() << "\"," << r["free"] << '\n';
                }
            } else {
                for (const auto& r : results) {
                    out << r["graph6"].get<std::string>() << ' ' << (r["free"].get<bool>() ? "free" : "contains")
                        << '\n';
                }
            }
            return kExitOk;
        }

        if (enumerate->parsed()) {
            EnumFilter filter;
            filter.connected_only = enum_connected;
            filter.min_edges = min_edges;
            filter.max_edges = max_edges;
            if (enum_args.present()) filter.freeness = enum_args.get();
            long long count = 0;
            enumerate_graphs(
                enum_n, filter,
                [&](const Graph& g) {
                    ++count;
                    if (!enum_count) out << graph6_encode(g) << '\n';
                },
                workers);
            if (enum_count) out << count << '\n';
            return kExitOk;
        }

        if (ex->parsed() || spex->parsed()) {
            const bool lambda_mode = spex->parsed();
            SearchArgs& s = lambda_mode ? spex_args : ex_args;
            opt.maximal_only = !s.all_graphs;
            ExtremalReport rep;
            if (!s.input.empty()) {
                rep = search_graphs(read_inputs(s.input, in), s.forbid.get(),
                                    lambda_mode ? Objective::lambda : Objective::edges, opt);
            } else if (s.n <= 0) {
                throw UsageError("--n is required without --input");
            } else if (lambda_mode && !s.forbid.cycles_paths.empty()) {
                rep = spex_search_cycles_paths(s.n, parse_cycles_paths(s.forbid.cycles_paths), opt);
            } else if (lambda_mode) {
                rep = spex_search(s.n, s.forbid.get(), opt);
            } else {
                rep = ex_search(s.n, s.forbid.get(), opt);
            }
            emit(s.output, out,
                 s.format == "json"  ? report_json(rep).dump(2) + "\n"
                 : s.format == "csv" ? report_csv(rep)
                                     : report_table(rep));
            return kExitOk;
        }

        if (bounds->parsed()) {
            if (alon) {
                BoundQuery q{qa, qb, qr, qn, parse_rational(qd)};
                out << (alon_condition(q) ? "true" : "false") << '\n';
                return kExitOk;
            }
            if (bound_ns.empty() || bound_specs.empty()) throw UsageError("bounds needs --n and --spec");
            std::vector<CycleSpec> specs;
            for (const auto& s : bound_specs) specs.push_back(CycleSpec::parse(s));
            out << bounds_csv(bound_ns, specs);
            return kExitOk;
        }

        if (verify->parsed()) {
            std::vector<VerificationRecord> records;
            std::vector<CycleSpec> specs;
            for (const auto& s : verify_specs) specs.push_back(CycleSpec::parse(s));
            auto one_spec = [&]() -> const CycleSpec& {
                if (specs.size() != 1) throw UsageError("this claim needs exactly one --spec");
                return specs.front();
            };
            auto one_n = [&]() {
                if (verify_ns.size() != 1) throw UsageError("this claim needs exactly one --n");
                return verify_ns.front();
            };
            if (claim == "all") {
                records = run_default_suite(opt);
            } else {
                auto id = resolve_claim(claim);
                if (!id) throw UsageError("unknown claim: " + claim);
                if (*id == "containment-kab") {
                    records.push_back(verify_containment_kab(one_spec()));
                } else if (*id == "almost-bipartite") {
                    records.push_back(verify_almost_bipartite(one_spec()));
                } else if (*id == "degree-squares") {
                    records.push_back(verify_degree_squares(nmax, one_spec(), workers));
                } else if (*id == "disjoint-paths") {
                    records.push_back(verify_disjoint_paths(trials, one_n(), one_spec(), seed));
                } else if (*id == "main-theorems") {
                    int lo = n_lo, hi = n_hi;
                    if (verify_ns.size() == 1) lo = hi = verify_ns.front();
                    if (lo < 0 || hi < 0) throw UsageError("main-theorems needs --n or --n-lo and --n-hi");
                    records = verify_main_theorems(lo, hi, one_spec(), opt);
                } else if (*id == "lambda-bounds") {
                    if (specs.empty() || verify_ns.empty()) throw UsageError("lambda-bounds needs --spec and --n");
                    std::vector<std::pair<int, CycleSpec>> grid;
                    for (const auto& sp : specs) {
                        for (int n : verify_ns) grid.emplace_back(n, sp);
                    }
                    records.push_back(verify_lambda_bounds(grid));
                } else if (*id == "minor-freeness") {
                    records.push_back(verify_minor_freeness(one_spec(), one_n()));
                } else if (*id == "small-subgraph") {
                    if (verify_h.empty()) throw UsageError("small-subgraph needs --graph");
                    records.push_back(verify_small_subgraph(graph6_decode(verify_h), one_spec(), one_n(), opt));
                }
            }
            json arr = json::array();
            bool failed = false;
            for (const auto& r : records) {
                arr.push_back(to_json(r, timing));
                failed = failed || r.verdict == Verdict::fail;
            }
            emit(verify_output, out, json{{"schema", 1}, {"records", arr}}.dump(2) + "\n");
            return failed ? kExitVerificationFailed : kExitOk;
        }
    } catch (const UsageError& e) {
        err << "spexlab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "spexlab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Graph6Error& e) {
        err << "spexlab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "spexlab: error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace spexlab
