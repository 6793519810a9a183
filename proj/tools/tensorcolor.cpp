#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tensorcolor/errors.hpp"
#include "tensorcolor/graph.hpp"
#include "tensorcolor/hardness.hpp"
#include "tensorcolor/instance.hpp"
#include "tensorcolor/oracles.hpp"
#include "tensorcolor/pipeline.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tc;

// Exit codes: 0 success, 1 usage or I/O, 2 model violation (incomplete cover,
// failed coloring, failed verification), 3 not near a tensor, 4 cap exceeded.
constexpr int kExitUsage = 1;
constexpr int kExitModel = 2;
constexpr int kExitNotNear = 3;
constexpr int kExitCap = 4;

struct RunConfig {
    std::string in;
    std::string out;
    std::string blind_out;
    std::string metrics;
    std::string sidecar;
    std::string g_type = "regular";
    int n = 0;
    int d = 0;
    int ell = 0;
    std::string beta = "0";
    std::string epsilon; // empty = unset
    uint64_t seed = 0;
    std::string strategy = "random";
    int k = -1; // -1 = unset
    int k_cap = 4;
    long long triangle_cap = 2'000'000;
    int oracle_cap = 150;
    std::string mode = "with-clouds";
    std::string op;
    int g1 = 0, g2 = 0, g3 = 0;
    std::string families = "regular";
    std::string ns = "20";
    std::string ds = "6";
    std::string epsilons = "0";
    std::string reconstruction_file;
    std::string coloring_file;
};

ordered_json config_to_json(const RunConfig& c) {
    ordered_json j;
    j["in"] = c.in;
    j["out"] = c.out;
    j["blind_out"] = c.blind_out;
    j["metrics"] = c.metrics;
    j["sidecar"] = c.sidecar;
    j["g_type"] = c.g_type;
    j["n"] = c.n;
    j["d"] = c.d;
    j["ell"] = c.ell;
    j["beta"] = c.beta;
    j["epsilon"] = c.epsilon;
    j["seed"] = c.seed;
    j["strategy"] = c.strategy;
    j["k"] = c.k;
    j["k_cap"] = c.k_cap;
    j["triangle_cap"] = c.triangle_cap;
    j["oracle_cap"] = c.oracle_cap;
    j["mode"] = c.mode;
    j["op"] = c.op;
    j["g1"] = c.g1;
    j["g2"] = c.g2;
    j["g3"] = c.g3;
    j["families"] = c.families;
    j["ns"] = c.ns;
    j["ds"] = c.ds;
    j["epsilons"] = c.epsilons;
    j["reconstruction_file"] = c.reconstruction_file;
    j["coloring_file"] = c.coloring_file;
    return j;
}

void config_from_json(const ordered_json& j, RunConfig& c) {
    auto get = [&](const char* key, auto& slot) {
        if (j.contains(key)) slot = j.at(key).get<std::decay_t<decltype(slot)>>();
    };
    get("in", c.in);
    get("out", c.out);
    get("blind_out", c.blind_out);
    get("metrics", c.metrics);
    get("sidecar", c.sidecar);
    get("g_type", c.g_type);
    get("n", c.n);
    get("d", c.d);
    get("ell", c.ell);
    get("beta", c.beta);
    get("epsilon", c.epsilon);
    get("seed", c.seed);
    get("strategy", c.strategy);
    get("k", c.k);
    get("k_cap", c.k_cap);
    get("triangle_cap", c.triangle_cap);
    get("oracle_cap", c.oracle_cap);
    get("mode", c.mode);
    get("op", c.op);
    get("g1", c.g1);
    get("g2", c.g2);
    get("g3", c.g3);
    get("families", c.families);
    get("ns", c.ns);
    get("ds", c.ds);
    get("epsilons", c.epsilons);
    get("reconstruction_file", c.reconstruction_file);
    get("coloring_file", c.coloring_file);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int max_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    int threads = hw == 0 ? 1 : (int)hw;
    if (const char* env = std::getenv("TENSORCOLOR_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < threads) threads = cap;
    }
    return threads;
}

BaseKind parse_g_type(const std::string& s) {
    if (s == "regular") return BaseKind::RandomRegular;
    if (s == "hypercube") return BaseKind::NoisyHypercube;
    if (s == "complete") return BaseKind::Complete;
    if (s == "odd-cycle") return BaseKind::OddCycle;
    if (s == "two-cliques") return BaseKind::TwoCliquesBridged;
    throw InvalidParams("unknown --g-type '" + s + "'");
}

DeletionStrategy parse_strategy(const std::string& s) {
    if (s == "random") return DeletionStrategy::Random;
    if (s == "round-robin") return DeletionStrategy::RoundRobin;
    if (s == "confusable-push") return DeletionStrategy::ConfusablePush;
    throw InvalidParams("unknown --strategy '" + s + "'");
}

Graph load_graph(const std::string& path) {
    if (path.empty()) throw InvalidParams("missing --in");
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return read_instance_file(path).h;
    return read_dimacs_file(path);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidParams("cannot open '" + path + "' for writing");
    out << text;
}

ordered_json reconstruction_to_json(const Reconstruction& rec) {
    ordered_json j;
    j["epsilon_used"] = rec.epsilon.to_string();
    j["error_delta"] = rec.error_delta;
    ordered_json comps = ordered_json::array();
    for (const auto& f : rec.components) {
        ordered_json c;
        c["vertices"] = f.vertices;
        c["color_map"] = std::vector<int>(f.color_map.begin(), f.color_map.end());
        c["g_map"] = f.g_map;
        ordered_json ge = ordered_json::array();
        for (auto [a, b] : f.g_tilde.edges()) ge.push_back({a, b});
        c["g_tilde_edges"] = std::move(ge);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    ordered_json he = ordered_json::array();
    for (auto [u, v] : rec.h_tilde.e) he.push_back({u, v});
    j["h_tilde_edges"] = std::move(he);
    ordered_json stats;
    stats["n_triangles"] = rec.stats.n_triangles;
    stats["n_components"] = rec.stats.n_components;
    stats["n_accepted"] = rec.stats.n_accepted;
    stats["n_rejected_factor"] = rec.stats.n_rejected_factor;
    stats["n_rejected_cut"] = rec.stats.n_rejected_cut;
    stats["n_skipped_overlap"] = rec.stats.n_skipped_overlap;
    j["stats"] = std::move(stats);
    return j;
}

void append_metrics(const std::string& path, const Graph& h, const Rat& eps,
                    const Reconstruction& rec, double wall_ms) {
    bool fresh = !std::filesystem::exists(path);
    std::ofstream out(path, std::ios::app);
    if (!out) throw InvalidParams("cannot open metrics file '" + path + "'");
    if (fresh) {
        out << "# tensorcolor-metrics v1\n";
        out << "n,m,epsilon,error_delta,error_ratio,components_total,"
               "components_accepted,wall_ms\n";
    }
    double ratio = 0.0;
    Rat denom = eps * Rat(h.m());
    if (!denom.is_zero()) ratio = (double)rec.error_delta / denom.to_double();
    out << h.n() << ',' << h.m() << ',' << eps.to_string() << ','
        << rec.error_delta << ',' << ratio << ',' << rec.stats.n_components << ','
        << rec.stats.n_accepted << ',' << wall_ms << '\n';
}

int run_gen(const RunConfig& cfg) {
    BaseParams params;
    params.kind = parse_g_type(cfg.g_type);
    params.n = cfg.n;
    params.d = cfg.d;
    params.ell = cfg.ell;
    params.beta = Rat::parse(cfg.beta);
    if (cfg.epsilon.empty()) throw InvalidParams("gen requires --epsilon");
    Rat eps = Rat::parse(cfg.epsilon);
    Graph g = gen_base_graph(params, cfg.seed);
    LabeledInstance inst = make_instance(g, eps, parse_strategy(cfg.strategy), cfg.seed);
    if (cfg.out.empty()) throw InvalidParams("gen requires --out");
    write_instance_file(cfg.out, inst, true);
    if (!cfg.blind_out.empty()) write_dimacs_file(cfg.blind_out, inst.h);
    std::cout << "generated instance: |V(G)|=" << inst.g.n()
              << " |V(H)|=" << inst.h.n() << " |E(H)|=" << inst.h.m()
              << " deleted=" << inst.deleted.size() << "\n";
    return 0;
}

int run_reconstruct(const RunConfig& cfg) {
    Graph h = load_graph(cfg.in);
    PipelineCaps caps;
    caps.triangle_cap = cfg.triangle_cap;
    auto start = std::chrono::steady_clock::now();
    Reconstruction rec;
    if (cfg.epsilon.empty()) {
        EpsilonSearchResult es = epsilon_search(h, caps);
        rec = std::move(es.reconstruction);
    } else {
        rec = main_reconstruct(h, Rat::parse(cfg.epsilon), caps);
    }
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (!cfg.out.empty())
        write_text(cfg.out, reconstruction_to_json(rec).dump(2) + "\n");
    if (!cfg.metrics.empty()) append_metrics(cfg.metrics, h, rec.epsilon, rec, wall_ms);
    std::cout << "reconstructed with epsilon=" << rec.epsilon.to_string()
              << " error_delta=" << rec.error_delta
              << " components=" << rec.stats.n_accepted << "\n";
    return 0;
}

int run_color(const RunConfig& cfg) {
    Graph h = load_graph(cfg.in);
    if (cfg.epsilon.empty()) throw InvalidParams("color requires --epsilon");
    Rat eps = Rat::parse(cfg.epsilon);
    PipelineCaps caps;
    caps.triangle_cap = cfg.triangle_cap;
    std::optional<Coloring3> colors;
    if (cfg.k >= 0) {
        if (cfg.k > cfg.k_cap)
            throw CapExceeded("--k exceeds --k-cap (default 4)");
        colors = color_with_k_core_components(h, eps, cfg.k, caps);
    } else {
        colors = full_3_coloring(h, eps, caps);
    }
    if (!colors) {
        std::cerr << "coloring failed: no covering component assignment\n";
        return kExitModel;
    }
    if (!is_proper_3coloring(h, *colors))
        throw std::logic_error("produced coloring is not proper");
    ordered_json j;
    j["epsilon"] = eps.to_string();
    if (cfg.k >= 0) j["k"] = cfg.k;
    j["colors"] = std::vector<int>(colors->begin(), colors->end());
    if (!cfg.out.empty()) write_text(cfg.out, j.dump(2) + "\n");
    std::cout << "colored " << h.n() << " vertices\n";
    return 0;
}

int run_reduce(const RunConfig& cfg) {
    Graph g = read_dimacs_file(cfg.in);
    EqualityInstance inst;
    Rat eps;
    if (cfg.mode == "plain") {
        inst = plain_equality_instance(g);
    } else if (cfg.mode == "with-clouds") {
        if (cfg.epsilon.empty())
            throw InvalidParams("--mode with-clouds requires --epsilon");
        eps = Rat::parse(cfg.epsilon);
        inst = make_equality_instance(g, eps);
    } else {
        throw InvalidParams("unknown --mode '" + cfg.mode + "'");
    }
    ReducedGraph rg = tensor_reduction(inst);
    if (cfg.out.empty()) throw InvalidParams("reduce requires --out");
    write_dimacs_file(cfg.out, rg.graph);

    ordered_json side;
    side["mode"] = cfg.mode;
    if (cfg.mode == "with-clouds") side["epsilon"] = eps.to_string();
    side["n_input"] = g.n();
    side["n_instance"] = inst.n;
    side["n_reduced"] = rg.graph.n();
    ordered_json neq = ordered_json::array();
    for (auto [u, v] : inst.neq.e) neq.push_back({u, v});
    side["neq_edges"] = std::move(neq);
    ordered_json eq = ordered_json::array();
    for (auto [u, v] : inst.eq.e) eq.push_back({u, v});
    side["eq_edges"] = std::move(eq);
    side["owner"] = inst.owner;
    std::string sidecar = cfg.sidecar.empty() ? cfg.out + ".json" : cfg.sidecar;
    write_text(sidecar, side.dump(2) + "\n");
    std::cout << "reduced: " << g.n() << " -> " << inst.n << " -> " << rg.graph.n()
              << " vertices, " << rg.graph.m() << " edges\n";
    return 0;
}

int run_verify(const RunConfig& cfg) {
    if (cfg.in.empty()) throw InvalidParams("verify requires --in (instance)");
    LabeledInstance inst = read_instance_file(cfg.in);
    const Graph& h = inst.h;
    bool all_ok = true;
    auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok:   " : "FAIL: ") << what << "\n";
        if (!ok) all_ok = false;
    };

    if (!cfg.reconstruction_file.empty()) {
        std::ifstream in(cfg.reconstruction_file);
        if (!in) throw InvalidParams("cannot read reconstruction file");
        ordered_json j = ordered_json::parse(in);
        Rat eps = Rat::parse(j.at("epsilon_used").get<std::string>());
        long long stored_delta = j.at("error_delta").get<long long>();

        std::vector<char> seen((size_t)h.n(), 0);
        bool partition_ok = true;
        std::vector<std::pair<int, int>> derived;
        for (const auto& c : j.at("components")) {
            auto vertices = c.at("vertices").get<std::vector<int>>();
            auto color_map = c.at("color_map").get<std::vector<int>>();
            auto g_map = c.at("g_map").get<std::vector<int>>();
            if (color_map.size() != vertices.size() || g_map.size() != vertices.size())
                partition_ok = false;
            for (int v : vertices) {
                if (v < 0 || v >= h.n() || seen[(size_t)v]) partition_ok = false;
                else seen[(size_t)v] = 1;
            }
            // h_tilde must match the product structure of this component.
            std::vector<std::pair<int, int>> ge;
            for (const auto& e : c.at("g_tilde_edges"))
                ge.emplace_back(e[0].get<int>(), e[1].get<int>());
            auto adjacent = [&](int a, int b) {
                auto key = std::minmax(a, b);
                for (auto [x, y] : ge)
                    if (x == key.first && y == key.second) return true;
                return false;
            };
            for (size_t i = 0; i < vertices.size(); ++i)
                for (size_t l = i + 1; l < vertices.size(); ++l)
                    if (color_map[i] != color_map[l] &&
                        adjacent(g_map[i], g_map[l]))
                        derived.emplace_back(std::min(vertices[i], vertices[l]),
                                             std::max(vertices[i], vertices[l]));
        }
        for (int v = 0; v < h.n(); ++v)
            if (!seen[(size_t)v]) partition_ok = false;
        report(partition_ok, "component vertex sets partition V(H)");

        std::vector<std::pair<int, int>> stored;
        for (const auto& e : j.at("h_tilde_edges"))
            stored.emplace_back(e[0].get<int>(), e[1].get<int>());
        EdgeSet stored_set = EdgeSet::from_pairs(stored);
        EdgeSet derived_set = EdgeSet::from_pairs(derived);
        report(stored_set.e == derived_set.e,
               "h_tilde matches the product of color_map, g_map, g_tilde");

        long long delta = symmetric_difference(EdgeSet::from_graph(h), stored_set);
        report(delta == stored_delta, "error_delta matches |E(H) xor E(H~)|");

        Rat em = eps * Rat(h.m());
        if (em >= Rat(h.n()))
            report(Rat(stored_delta) <= Rat(550) * em,
                   "error_delta within 550*epsilon*|E(H)|");
        else
            std::cout << "note: epsilon*|E(H)| < |V(H)|, reconstruction bound "
                         "not applicable\n";
    }

    if (!cfg.coloring_file.empty()) {
        std::ifstream in(cfg.coloring_file);
        if (!in) throw InvalidParams("cannot read coloring file");
        ordered_json j = ordered_json::parse(in);
        auto raw = j.at("colors").get<std::vector<int>>();
        Coloring3 colors(raw.begin(), raw.end());
        report(is_proper_3coloring(h, colors), "coloring is proper on H");
    }

    if (cfg.reconstruction_file.empty() && cfg.coloring_file.empty())
        throw InvalidParams("verify needs --reconstruction and/or --coloring");
    return all_ok ? 0 : kExitModel;
}

int run_bench(const RunConfig& cfg) {
    if (cfg.out.empty()) throw InvalidParams("bench requires --out");
    struct Cell {
        std::string family;
        int n;
        int d;
        std::string eps;
    };
    std::vector<Cell> grid;
    for (const auto& fam : split_list(cfg.families))
        for (const auto& ns : split_list(cfg.ns))
            for (const auto& ds : split_list(cfg.ds))
                for (const auto& es : split_list(cfg.epsilons))
                    grid.push_back({fam, std::stoi(ns), std::stoi(ds), es});

    std::vector<std::string> rows(grid.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= grid.size()) return;
            const Cell& cell = grid[i];
            std::ostringstream row;
            try {
                BaseParams params;
                params.kind = parse_g_type(cell.family);
                params.n = cell.n;
                params.d = cell.d;
                params.ell = cell.n; // hypercube family reads dimension from n
                params.beta = Rat(1, 2);
                Rat eps = Rat::parse(cell.eps);
                uint64_t seed = cfg.seed + i;
                Graph g = gen_base_graph(params, seed);
                LabeledInstance inst =
                    make_instance(g, eps, DeletionStrategy::Random, seed);
                PipelineCaps caps;
                caps.triangle_cap = cfg.triangle_cap;
                auto start = std::chrono::steady_clock::now();
                Reconstruction rec = main_reconstruct(inst.h, eps, caps);
                double wall_ms = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
                double ratio = 0.0;
                Rat denom = eps * Rat(inst.h.m());
                if (!denom.is_zero())
                    ratio = (double)rec.error_delta / denom.to_double();
                row << inst.h.n() << ',' << inst.h.m() << ',' << eps.to_string()
                    << ',' << rec.error_delta << ',' << ratio << ','
                    << rec.stats.n_components << ',' << rec.stats.n_accepted << ','
                    << wall_ms;
            } catch (const std::exception& e) {
                row << cell.n << ",0," << cell.eps << ",-1,-1,0,0,0 # " << e.what();
            }
            rows[i] = row.str();
        }
    };
    int threads = std::min<int>(max_threads(), (int)grid.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ostringstream csv;
    csv << "# tensorcolor-metrics v1\n";
    csv << "n,m,epsilon,error_delta,error_ratio,components_total,"
           "components_accepted,wall_ms\n";
    for (const auto& row : rows) csv << row << '\n';
    write_text(cfg.out, csv.str());
    std::cout << "bench wrote " << rows.size() << " rows\n";
    return 0;
}

int run_oracle(const RunConfig& cfg) {
    ordered_json j;
    if (cfg.op == "3color") {
        Graph g = load_graph(cfg.in);
        auto colors = brute_force_3coloring(g, cfg.oracle_cap);
        j["colorable"] = colors.has_value();
        if (colors) j["colors"] = std::vector<int>(colors->begin(), colors->end());
    } else if (cfg.op == "bottleneck") {
        std::ifstream in(cfg.in);
        if (!in) throw InvalidParams("cannot read weight matrix file");
        ordered_json matrix_json = ordered_json::parse(in);
        auto rows = matrix_json.at("weights");
        int k = (int)rows.size();
        auto w = WeightedBipartite::zeros(k, k);
        for (int i = 0; i < k; ++i)
            for (int jj = 0; jj < k; ++jj)
                w.at(i, jj) = Rat::parse(rows[(size_t)i][(size_t)jj].get<std::string>());
        MatchResult res = brute_force_bottleneck(w);
        j["objective"] = res.objective.to_string();
        j["pairing"] = res.pairing;
    } else if (cfg.op == "disjunction") {
        Graph g = load_graph(cfg.in);
        j["value"] = disjunction(g, cfg.g1, cfg.g2, cfg.g3);
    } else if (cfg.op == "confusable") {
        Graph g = load_graph(cfg.in);
        if (cfg.epsilon.empty()) throw InvalidParams("confusable requires --epsilon");
        j["value"] = confusable(g, cfg.g1, cfg.g2, Rat::parse(cfg.epsilon));
    } else {
        throw InvalidParams("unknown --op '" + cfg.op + "'");
    }
    std::string text = j.dump(2) + "\n";
    if (!cfg.out.empty())
        write_text(cfg.out, text);
    else
        std::cout << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tensor factorization and 3-coloring toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, write_config_path;
    app.add_option("--config", config_path, "load options from a JSON config file");
    app.add_option("--write-config", write_config_path,
                   "write the effective options to a JSON config file");

    // Pre-scan for --config so file values become defaults the flags override.
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") {
            std::ifstream in(argv[i + 1]);
            if (!in) {
                std::cerr << "error: cannot read config '" << argv[i + 1] << "'\n";
                return kExitUsage;
            }
            try {
                config_from_json(ordered_json::parse(in), cfg);
            } catch (const std::exception& e) {
                std::cerr << "error: bad config: " << e.what() << "\n";
                return kExitUsage;
            }
        }

    auto add_common = [&](CLI::App* sub) {
        // Let --config / --write-config appear after the subcommand name too.
        sub->fallthrough();
        sub->add_option("--in", cfg.in, "input file");
        sub->add_option("--out", cfg.out, "output file");
        sub->add_option("--epsilon", cfg.epsilon,
                        "noise rate as a rational or decimal, e.g. 1/64 or 0.01");
        sub->add_option("--seed", cfg.seed, "PRNG seed");
        sub->add_option("--triangle-cap", cfg.triangle_cap,
                        "abort when the candidate graph has more triangles");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a labeled instance");
    add_common(gen);
    gen->add_option("--g-type", cfg.g_type,
                    "regular | hypercube | complete | odd-cycle | two-cliques");
    gen->add_option("--n", cfg.n, "base graph vertices");
    gen->add_option("--d", cfg.d, "degree (regular)");
    gen->add_option("--ell", cfg.ell, "hypercube dimension");
    gen->add_option("--beta", cfg.beta, "hypercube flip distance fraction");
    gen->add_option("--strategy", cfg.strategy,
                    "random | round-robin | confusable-push");
    gen->add_option("--blind-out", cfg.blind_out, "also write H as DIMACS");

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "recover a tensor factorization");
    add_common(reconstruct);
    reconstruct->add_option("--metrics", cfg.metrics, "append a metrics CSV row");

    CLI::App* color = app.add_subcommand("color", "3-color the input graph");
    add_common(color);
    color->add_option("--k", cfg.k, "allow up to k covering components");
    color->add_option("--k-cap", cfg.k_cap, "upper limit for --k");

    CLI::App* reduce = app.add_subcommand("reduce", "build a hardness instance");
    add_common(reduce);
    reduce->add_option("--mode", cfg.mode, "with-clouds | plain");
    reduce->add_option("--sidecar", cfg.sidecar, "bookkeeping JSON path");

    CLI::App* verify = app.add_subcommand("verify", "re-check produced artifacts");
    add_common(verify);
    verify->add_option("--reconstruction", cfg.reconstruction_file,
                       "reconstruction JSON to verify");
    verify->add_option("--coloring", cfg.coloring_file, "coloring JSON to verify");

    CLI::App* bench = app.add_subcommand("bench", "sweep a parameter grid");
    add_common(bench);
    bench->add_option("--families", cfg.families, "comma list of g types");
    bench->add_option("--ns", cfg.ns, "comma list of sizes");
    bench->add_option("--ds", cfg.ds, "comma list of degrees");
    bench->add_option("--epsilons", cfg.epsilons, "comma list of noise rates");

    CLI::App* oracle = app.add_subcommand("oracle", "run a reference oracle");
    add_common(oracle);
    oracle->add_option("--op", cfg.op,
                       "3color | bottleneck | disjunction | confusable");
    oracle->add_option("--g1", cfg.g1, "first vertex");
    oracle->add_option("--g2", cfg.g2, "second vertex");
    oracle->add_option("--g3", cfg.g3, "third vertex");
    oracle->add_option("--oracle-cap", cfg.oracle_cap, "3-coloring vertex cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    if (!write_config_path.empty()) {
        try {
            write_text(write_config_path, config_to_json(cfg).dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    try {
        if (gen->parsed()) return run_gen(cfg);
        if (reconstruct->parsed()) return run_reconstruct(cfg);
        if (color->parsed()) return run_color(cfg);
        if (reduce->parsed()) return run_reduce(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (bench->parsed()) return run_bench(cfg);
        if (oracle->parsed()) return run_oracle(cfg);
    } catch (const IncompleteCover& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitModel;
    } catch (const NotNearTensor& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotNear;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const SizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
