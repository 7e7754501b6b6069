#include "antimagic/errors.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/io.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/pipeline.hpp"
#include "antimagic/polynomial.hpp"
#include "antimagic/sampling.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace antimagic;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_text(path)); }

Json load_json(const std::string& path) { return parse_json(read_text(path), path == "-" ? "stdin" : path); }

bool trace_enabled() {
    const char* level = std::getenv("ANTIMAGIC_LOG");
    return level && *level && std::string(level) != "0";
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto n = static_cast<unsigned>(std::stoul(text));
            return {n, n};
        }
        const auto lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
        const auto hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
        if (lo > hi) throw UsageError("empty range '" + text + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("bad range '" + text + "', expected A..B");
    }
}

// Runs fn(0..count-1) on up to `jobs` threads; results keep input order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void print_json(const Json& doc) { std::cout << dump(doc); }

// ---------------------------------------------------------------- gen

struct GenConfig {
    std::string family;
    std::size_t n = 0;
    double p = 0.5;
    std::size_t max_degree = SIZE_MAX;
    std::uint64_t seed = 0;
};

int cmd_gen(const GenConfig& c) {
    std::cout << write_graph(generate(c.family, c.n, c.p, c.max_degree, c.seed));
    return exit_ok;
}

// ---------------------------------------------------------------- sample

struct SampleConfig {
    std::string what;
    std::string graph = "-";
    std::uint64_t seed = 0;
    std::optional<std::size_t> size;
    std::optional<std::int64_t> k;
    std::string variant = "weighted-list";
};

int cmd_sample(const SampleConfig& c) {
    const Graph g = load_graph(c.graph);
    std::mt19937_64 rng(c.seed);
    if (c.what == "weights") {
        print_json(write_weighting(sample_adversarial_weighting(g, rng)));
        return exit_ok;
    }
    const std::int64_t k = c.k.value_or(theorem_k(g.vertex_count(), parse_variant(c.variant)));
    const std::size_t size = c.size.value_or(g.edge_count() + static_cast<std::size_t>(k));
    print_json(write_lists(sample_adversarial_lists(g, size, rng)));
    return exit_ok;
}

// ---------------------------------------------------------------- solve

struct SolveConfig {
    std::string graph = "-";
    std::string variant = "weighted-list";
    std::optional<std::int64_t> k;
    std::string weights;
    std::string lists;
    std::uint64_t budget = SearchOptions{}.budget;
    bool exhaustive = false;
};

int cmd_solve(const SolveConfig& c) {
    SolveRequest req;
    req.graph = load_graph(c.graph);
    req.variant = parse_variant(c.variant);
    req.k_override = c.k;
    req.search.budget = c.budget;
    req.search.exhaustive_fallback = c.exhaustive;
    Json extra = Json::object();
    if (!c.weights.empty()) {
        const Json doc = load_json(c.weights);
        req.weights = read_weighting(doc, req.graph);
        extra["weights"] = doc["weights"];
    }
    if (!c.lists.empty()) {
        const Json doc = load_json(c.lists);
        req.lists = read_lists(doc, req.graph);
        extra["lists"] = doc["lists"];
    }

    const SolveResult result = solve(req);
    Json out = write_labeling(result.labeling, result.k, to_string(req.variant));
    out["graph"] = write_graph(req.graph);
    for (const auto& [key, value] : extra.items()) out[key] = value;
    out["verify"] = to_json(result.report);
    if (!result.success) out["failure"] = result.failure;
    if (trace_enabled()) {
        Json trace = Json::array();
        for (const auto& r : result.trace) trace.push_back(to_json(r));
        out["trace"] = std::move(trace);
    }
    print_json(out);
    return result.success ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- verify

struct VerifyConfig {
    std::string labeling = "-";
    std::string graph;
    std::string variant;
    std::optional<std::int64_t> k;
    std::string weights;
    std::string lists;
    bool relaxed = false;
};

int cmd_verify(const VerifyConfig& c) {
    Json doc = load_json(c.labeling);
    if (!doc.is_object()) throw ParseError("/", "labeling document must be an object");
    Graph g;
    if (!c.graph.empty())
        g = load_graph(c.graph);
    else if (doc.contains("graph") && doc["graph"].is_string())
        g = parse_graph(doc["graph"].get<std::string>());
    else
        throw UsageError("no graph: pass --graph or a labeling document with a \"graph\" field");

    const LabelingDocument ld = read_labeling(doc, g);
    std::string variant_name = !c.variant.empty() ? c.variant : ld.variant;
    if (variant_name.empty()) variant_name = ld.labeling.orientation ? "oriented" : "weighted-list";
    const Variant variant = parse_variant(variant_name);
    const bool oriented = variant == Variant::quasi_oriented_antimagic;
    const std::int64_t k = c.k ? *c.k : ld.k.value_or(theorem_k(g.vertex_count(), variant));
    const auto m = static_cast<std::int64_t>(g.edge_count());

    Weighting w;
    if (!c.weights.empty())
        w = read_weighting(load_json(c.weights), g);
    else if (doc.contains("weights"))
        w = read_weighting(Json{{"weights", doc["weights"]}}, g);

    std::optional<ListAssignment> lists;
    if (!c.lists.empty())
        lists = read_lists(load_json(c.lists), g);
    else if (doc.contains("lists"))
        lists = read_lists(Json{{"lists", doc["lists"]}}, g);

    VerifyOptions options;
    options.mode = oriented ? SumMode::oriented : SumMode::undirected;
    options.exemption = c.relaxed ? Exemption::quasi_relaxed : Exemption::quasi;
    if (lists && !oriented)
        options.lists = &*lists;
    else
        options.label_bound = m + k;
    const VerifyReport report = verify_labeling(g, ld.labeling, oriented ? Weighting{} : w, options);
    print_json(to_json(report));
    return report.ok ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- certify

struct CertifyConfig {
    std::string mode = "both";
    std::string range = "4..14";
    std::string format = "json";
    unsigned jobs = 1;
};

int cmd_certify(const CertifyConfig& c) {
    const auto [lo, hi] = parse_range(c.range);
    if (lo < 4) throw UsageError("certificates need n >= 4");
    std::vector<ReductionMode> modes;
    if (c.mode == "undirected" || c.mode == "both") modes.push_back(ReductionMode::undirected);
    if (c.mode == "oriented" || c.mode == "both") modes.push_back(ReductionMode::oriented);
    if (modes.empty()) throw UsageError("mode must be undirected, oriented or both");

    std::vector<std::pair<ReductionMode, unsigned>> tasks;
    for (auto mode : modes)
        for (unsigned n = lo; n <= hi; ++n) tasks.emplace_back(mode, n);
    const auto certs = parallel_map<CoefficientCertificate>(
        tasks.size(), c.jobs, [&](std::size_t i) { return certify_reduction_monomial(tasks[i].second, tasks[i].first); });

    bool all_nonzero = true;
    if (c.format == "csv") {
        std::cout << "mode,n,a,b,c,coefficient,nonzero\n";
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const auto& cert = certs[i];
            std::cout << to_string(tasks[i].first) << ',' << tasks[i].second << ',' << cert.exponents[0] << ','
                      << cert.exponents[1] << ',' << cert.exponents[2] << ',' << cert.coefficient.get_str() << ','
                      << (cert.nonzero ? "true" : "false") << '\n';
            all_nonzero = all_nonzero && cert.nonzero;
        }
    } else {
        Json out = Json::array();
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            out.push_back(certificate_to_json(certs[i], tasks[i].first, tasks[i].second));
            all_nonzero = all_nonzero && certs[i].nonzero;
        }
        print_json(out);
    }
    return all_nonzero ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- oracle

struct OracleConfig {
    std::vector<std::string> graphs{"-"};
    std::string variant = "quasi-antimagic";
    std::int64_t k = 0;
    std::string mode = "find-one";
    std::string weights;
    std::string lists;
    std::uint64_t cap = OracleQuery{}.cap;
    std::string format = "json";
    unsigned jobs = 1;
};

int cmd_oracle(const OracleConfig& c) {
    const OracleVariant variant = parse_oracle_variant(c.variant);
    const OracleMode mode = parse_oracle_mode(c.mode);
    std::vector<OracleQuery> queries;
    for (const auto& path : c.graphs) {
        OracleQuery q;
        q.graph = load_graph(path);
        q.variant = variant;
        q.k = c.k;
        q.mode = mode;
        q.cap = c.cap;
        if (!c.weights.empty()) q.weights = read_weighting(load_json(c.weights), q.graph);
        if (!c.lists.empty()) q.lists = read_lists(load_json(c.lists), q.graph);
        queries.push_back(std::move(q));
    }
    using Outcome = std::pair<std::optional<OracleResult>, std::string>;
    const auto results = parallel_map<Outcome>(queries.size(), c.jobs, [&](std::size_t i) -> Outcome {
        try {
            return {brute_force(queries[i]), {}};
        } catch (const OracleCapExceeded& e) {
            return {std::nullopt, e.what()};
        }
    });

    bool all_ok = true;
    Json out = Json::array();
    if (c.format == "csv") std::cout << "instance,variant,k,mode,exists,count,nodes,space,error\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& [r, error] = results[i];
        all_ok = all_ok && r.has_value();
        if (c.format == "csv") {
            std::cout << csv_field(c.graphs[i]) << ',' << to_string(variant) << ',' << c.k << ',' << to_string(mode)
                      << ',';
            if (r)
                std::cout << (r->exists ? "true" : "false") << ',' << (mode == OracleMode::count ? std::to_string(r->count) : "")
                          << ',' << r->nodes << ',' << r->space.get_str() << ",\n";
            else
                std::cout << ",,,," << csv_field(error) << '\n';
            continue;
        }
        Json item{{"instance", c.graphs[i]}, {"variant", to_string(variant)}, {"k", c.k}, {"mode", to_string(mode)}};
        if (!r) {
            item["error"] = error;
        } else {
            item["exists"] = r->exists;
            item["nodes"] = r->nodes;
            item["space"] = r->space.get_str();
            if (mode == OracleMode::count) item["count"] = r->count;
            if (r->witness && mode == OracleMode::find_one) item["witness"] = write_labeling(*r->witness, c.k);
        }
        out.push_back(std::move(item));
    }
    if (c.format != "csv") print_json(c.graphs.size() == 1 ? out[0] : out);
    return all_ok ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- sweep

struct SweepConfig {
    std::vector<std::string> graphs;
    std::string family;
    std::string range;
    std::string variant = "weighted-list";
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    std::int64_t max_k = 8;
    std::uint64_t cap = OracleQuery{}.cap;
    std::string format = "json";
    unsigned jobs = 1;
};

std::optional<std::int64_t> bound_for(OracleVariant v, std::size_t n) {
    if (v == OracleVariant::weighted_list_quasi_antimagic) return theorem_k(n, Variant::weighted_list_quasi_antimagic);
    if (v == OracleVariant::quasi_oriented_antimagic) return theorem_k(n, Variant::quasi_oriented_antimagic);
    return std::nullopt;
}

int cmd_sweep(const SweepConfig& c) {
    const OracleVariant variant = parse_oracle_variant(c.variant);
    std::vector<std::pair<std::string, Graph>> instances;
    for (const auto& path : c.graphs) instances.emplace_back(path, load_graph(path));
    if (!c.family.empty()) {
        if (c.range.empty()) throw UsageError("--family needs --n-range");
        const auto [lo, hi] = parse_range(c.range);
        for (unsigned n = lo; n <= hi; ++n)
            instances.emplace_back(c.family + "-" + std::to_string(n), generate(c.family, n, 0.5, SIZE_MAX, c.seed + n));
    }
    if (instances.empty()) instances.emplace_back("stdin", load_graph("-"));

    // Every instance gets its own generator derived from --seed and its position.
    const auto reports = parallel_map<SweepReport>(instances.size(), c.jobs, [&](std::size_t i) {
        return sweep_min_k(instances[i].second, variant, c.trials, c.seed + i, c.max_k, c.cap);
    });

    Json out = Json::array();
    if (c.format == "csv") std::cout << "instance,n,m,variant,samples,min_k,theorem_k,partial\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& [name, g] = instances[i];
        const auto& r = reports[i];
        const auto bound = bound_for(variant, g.vertex_count());
        if (c.format == "csv") {
            std::cout << csv_field(name) << ',' << g.vertex_count() << ',' << g.edge_count() << ','
                      << to_string(variant) << ',' << r.samples << ',' << (r.min_k ? std::to_string(*r.min_k) : "")
                      << ',' << (bound ? std::to_string(*bound) : "") << ',' << (r.partial ? "true" : "false") << '\n';
            continue;
        }
        Json item{{"instance", name},          {"n", g.vertex_count()}, {"m", g.edge_count()},
                  {"variant", to_string(variant)}, {"samples", r.samples},  {"partial", r.partial},
                  {"successes", r.successes}};
        item["min_k"] = r.min_k ? Json(*r.min_k) : Json(nullptr);
        item["theorem_k"] = bound ? Json(*bound) : Json(nullptr);
        out.push_back(std::move(item));
    }
    if (c.format != "csv") print_json(out);
    return exit_ok;
}

void add_format(CLI::App* app, std::string& format) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-antimagic labelings and orientations via the Combinatorial Nullstellensatz"};
    app.require_subcommand(1);
    std::function<int()> run;

    GenConfig gen;
    auto* g = app.add_subcommand("gen", "Print a generated graph as an edge list");
    g->add_option("family", gen.family, "path, cycle, complete, wheel, star or random")->required();
    g->add_option("n", gen.n, "Number of vertices")->required();
    g->add_option("--p", gen.p, "Edge probability (random)");
    g->add_option("--max-degree", gen.max_degree, "Degree cap (random)");
    g->add_option("--seed", gen.seed, "Random seed");
    g->callback([&] { run = [&] { return cmd_gen(gen); }; });

    SampleConfig sample;
    auto* sa = app.add_subcommand("sample", "Print adversarial weights or lists for a graph");
    sa->add_option("what", sample.what, "weights or lists")->required()->check(CLI::IsMember({"weights", "lists"}));
    sa->add_option("graph", sample.graph, "Edge-list file, - for stdin");
    sa->add_option("--seed", sample.seed, "Random seed");
    sa->add_option("--size", sample.size, "List size (default m + k)");
    sa->add_option("--k", sample.k, "k used for the default list size");
    sa->add_option("--variant", sample.variant, "Variant used for the default k");
    sa->callback([&] { run = [&] { return cmd_sample(sample); }; });

    SolveConfig solve_cfg;
    auto* s = app.add_subcommand("solve", "Construct a labeling and verify it");
    s->add_option("graph", solve_cfg.graph, "Edge-list file, - for stdin");
    s->add_option("--variant", solve_cfg.variant, "weighted-list or oriented");
    s->add_option("--k", solve_cfg.k, "Override k (default: the theorem bound)");
    s->add_option("--weights", solve_cfg.weights, "Weighting JSON");
    s->add_option("--lists", solve_cfg.lists, "List assignment JSON");
    s->add_option("--budget", solve_cfg.budget, "Search node budget per stage");
    s->add_flag("--exhaustive", solve_cfg.exhaustive, "Keep searching past the budget");
    s->callback([&] { run = [&] { return cmd_solve(solve_cfg); }; });

    VerifyConfig verify;
    auto* v = app.add_subcommand("verify", "Check a labeling document");
    v->add_option("labeling", verify.labeling, "Labeling JSON, - for stdin");
    v->add_option("--graph", verify.graph, "Edge-list file (default: the document's graph field)");
    v->add_option("--variant", verify.variant, "weighted-list or oriented");
    v->add_option("--k", verify.k, "k for the label range m + k");
    v->add_option("--weights", verify.weights, "Weighting JSON");
    v->add_option("--lists", verify.lists, "List assignment JSON");
    v->add_flag("--relaxed", verify.relaxed, "Exempt K2 endpoints from every comparison");
    v->callback([&] { run = [&] { return cmd_verify(verify); }; });

    CertifyConfig certify;
    auto* c = app.add_subcommand("certify", "Coefficient certificates for the reduction step");
    c->add_option("--mode", certify.mode, "undirected, oriented or both")
        ->check(CLI::IsMember({"undirected", "oriented", "both"}));
    c->add_option("--n-range,--n", certify.range, "A..B or a single n");
    add_format(c, certify.format);
    c->add_option("--jobs", certify.jobs, "Worker threads");
    c->callback([&] { run = [&] { return cmd_certify(certify); }; });

    OracleConfig oracle;
    auto* o = app.add_subcommand("oracle", "Exhaustive search on small graphs");
    o->add_option("graphs", oracle.graphs, "Edge-list files, - for stdin");
    o->add_option("--variant", oracle.variant,
                  "antimagic, quasi-antimagic, weighted-list, oriented-antimagic or oriented");
    o->add_option("--k", oracle.k, "Labels range over 1..m+k");
    o->add_option("--mode", oracle.mode, "exists, find-one or count")
        ->check(CLI::IsMember({"exists", "find-one", "count"}));
    o->add_option("--weights", oracle.weights, "Weighting JSON");
    o->add_option("--lists", oracle.lists, "List assignment JSON");
    o->add_option("--cap", oracle.cap, "Largest search space to attempt");
    add_format(o, oracle.format);
    o->add_option("--jobs", oracle.jobs, "Worker threads");
    o->callback([&] { run = [&] { return cmd_oracle(oracle); }; });

    SweepConfig sweep;
    auto* w = app.add_subcommand("sweep", "Smallest k the oracle finds for sampled weightings");
    w->add_option("graphs", sweep.graphs, "Edge-list files");
    w->add_option("--family", sweep.family, "Generate instances from a family instead");
    w->add_option("--n-range", sweep.range, "A..B for --family");
    w->add_option("--variant", sweep.variant, "Oracle variant");
    w->add_option("--trials", sweep.trials, "Sampled weightings per instance (the first is zero)");
    w->add_option("--seed", sweep.seed, "Random seed");
    w->add_option("--max-k", sweep.max_k, "Largest k to try");
    w->add_option("--cap", sweep.cap, "Oracle search space cap");
    add_format(w, sweep.format);
    w->add_option("--jobs", sweep.jobs, "Worker threads");
    w->callback([&] { run = [&] { return cmd_sweep(sweep); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
}
