#include "qs/json_io.hpp"
#include "qs/log.hpp"
#include "qs/modelgeom.hpp"
#include "qs/roots.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace qs;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    int n = 2;
    int loops = 2;
    int w = 1;
    std::string lambda = "0";
    std::string format = "json";
    unsigned long long seed = 1;
    int jobs = 1;
    std::string quiver_path;
    std::string window = "0:0";
    int samples = 20;
    int type_index = -1;
    std::string point;
};

void emit(const Json& report, const RunConfig& cfg) {
    if (cfg.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        // text mode: one "key: value" line per top-level entry
        for (const auto& [key, value] : report.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
    }
}

Rat parse_lambda(const std::string& s) {
    try {
        return parse_rat(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--lambda", "not a rational: '" + s + "'");
    }
}

std::pair<long long, long long> parse_window(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--window", "expected a:b, got '" + s + "'");
    try {
        long long a = std::stoll(s.substr(0, colon));
        long long b = std::stoll(s.substr(colon + 1));
        if (a > b) throw CLI::ValidationError("--window", "empty window '" + s + "'");
        return {a, b};
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--window", "expected integers a:b, got '" + s + "'");
    }
}

FramedSetting load_setting(const RunConfig& cfg) {
    if (!cfg.quiver_path.empty()) {
        std::ifstream in(cfg.quiver_path);
        if (!in) throw CLI::ValidationError("--quiver", "cannot open '" + cfg.quiver_path + "'");
        Json j = Json::parse(in);
        return framed_from_json(j);
    }
    return flower_setting(cfg.n, cfg.loops, cfg.w);
}

RepresentationType minimal_leaf_type(int n) {
    RepresentationType tau;
    tau.parts.push_back({{0, 1}, 1});
    for (int i = 0; i < n; ++i) tau.parts.push_back({{1, 0}, 1});
    return tau;
}

// ---- subcommands ----------------------------------------------------------

int cmd_roots(const RunConfig& cfg) {
    FramedSetting s = load_setting(cfg);
    auto [qext, vext] = extend(s);
    auto roots = positive_roots_below(qext, vext);
    Json j;
    j["quiver"] = quiver_to_json(qext);
    j["bound"] = dim_to_json(qext, vext);
    Json list = Json::array();
    for (const auto& r : roots) {
        Json entry;
        entry["root"] = dim_to_json(qext, r);
        entry["p"] = p_form(qext, r);
        list.push_back(std::move(entry));
    }
    j["count"] = roots.size();
    j["roots"] = std::move(list);
    emit(j, cfg);
    return 0;
}

int cmd_flat_check(const RunConfig& cfg) {
    FramedSetting s = load_setting(cfg);
    Json j;
    j["n"] = cfg.n;
    j["loops"] = cfg.loops;
    j["w"] = cfg.w;
    j["flat"] = moment_map_flat(s);
    emit(j, cfg);
    return 0;
}

int cmd_leaves(const RunConfig& cfg) {
    FramedSetting s = load_setting(cfg);
    auto [qext, vext] = extend(s);
    auto types = enumerate_rep_types(s);
    Json list = Json::array();
    for (const auto& tau : types) {
        Json entry;
        entry["tau"] = rep_type_to_json(qext, tau);
        entry["display"] = tau.display(qext);
        entry["dim"] = stratum_dim(qext, tau);
        bool relevant = is_relevant(qext, tau);
        entry["relevant"] = relevant;
        // the closure order is defined between flower types only
        std::optional<long long> codim =
            relevant ? min_boundary_codim(qext, tau, types) : std::nullopt;
        entry["boundary_codim"] = codim ? Json(*codim) : Json(nullptr);
        list.push_back(std::move(entry));
    }
    Json j;
    j["n"] = cfg.n;
    j["loops"] = cfg.loops;
    j["w"] = cfg.w;
    j["count"] = types.size();
    j["leaves"] = std::move(list);
    emit(j, cfg);
    return 0;
}

int cmd_slice(const RunConfig& cfg) {
    FramedSetting s = load_setting(cfg);
    auto [qext, vext] = extend(s);
    RepresentationType tau;
    if (cfg.type_index < 0) {
        tau = minimal_leaf_type(cfg.n);
    } else {
        auto types = enumerate_rep_types(s);
        if (cfg.type_index >= static_cast<int>(types.size()))
            throw CLI::ValidationError("--type", "index out of range");
        tau = types[cfg.type_index];
    }
    SliceQuiverData data = slice_quiver(qext, tau);
    Json j;
    j["tau"] = rep_type_to_json(qext, tau);
    j["display"] = tau.display(qext);
    Json slice;
    slice["quiver"] = quiver_to_json(data.quiver);
    slice["v"] = dim_to_json(data.quiver, data.v);
    slice["w"] = dim_to_json(data.quiver, data.w);
    slice["loop_counts"] = data.loop_counts;
    slice["loops_removed"] = data.loops_removed;
    j["slice"] = std::move(slice);
    emit(j, cfg);
    return 0;
}

Json chamber_report(const Arrangement& arr, const std::vector<Chamber>& chs) {
    Json list = Json::array();
    for (const auto& ch : chs) list.push_back(chamber_to_json(arr, ch));
    return list;
}

int cmd_classify(const RunConfig& cfg) {
    Rat lambda = parse_lambda(cfg.lambda);
    Arrangement arr = build_reduced(cfg.n, cfg.loops, cfg.w, lambda);
    auto chs = enumerate_bounded(arr, cfg.jobs);
    long long expected = reference_count(cfg.n, cfg.loops, cfg.w, lambda);
    Json j;
    j["n"] = cfg.n;
    j["ell"] = cfg.loops;
    j["w"] = cfg.w;
    j["lambda"] = rat_to_string(lambda);
    j["count"] = chs.size();
    j["expected"] = expected;
    j["chambers"] = chamber_report(arr, chs);
    emit(j, cfg);
    if (static_cast<long long>(chs.size()) != expected) {
        std::cerr << "mismatch: enumerated " << chs.size() << " bounded chambers, closed form gives "
                  << expected << "\n";
        return kExitMismatch;
    }
    return 0;
}

int cmd_chambers(const RunConfig& cfg) {
    // full-arrangement route cross-checked against the reduced one
    Rat lambda = parse_lambda(cfg.lambda);
    FramedSetting s = flower_setting(cfg.n, cfg.loops, cfg.w);
    auto [qext, vext] = extend(s);
    SliceQuiverData slice = slice_quiver(qext, minimal_leaf_type(cfg.n));
    Arrangement full = build_full(slice, lambda);
    Arrangement red = build_reduced(cfg.n, cfg.loops, cfg.w, lambda);
    auto full_chs = enumerate_bounded(full, cfg.jobs);
    auto red_chs = enumerate_bounded(red, cfg.jobs);

    std::set<SignVector> reduced_signs;
    for (const auto& ch : red_chs) reduced_signs.insert(ch.sign);
    std::set<SignVector> images;
    Json list = Json::array();
    bool ok = full_chs.size() == red_chs.size();
    for (const auto& ch : full_chs) {
        SignVector img = reduce_chamber(full, ch);
        images.insert(img);
        Json entry = chamber_to_json(full, ch);
        entry["reduced_signs"] = sign_vector_to_json(red, img);
        list.push_back(std::move(entry));
        if (!reduced_signs.count(img)) ok = false;
    }
    if (images.size() != full_chs.size()) ok = false;

    Json j;
    j["n"] = cfg.n;
    j["ell"] = cfg.loops;
    j["w"] = cfg.w;
    j["lambda"] = rat_to_string(lambda);
    j["count"] = full_chs.size();
    j["reduced_count"] = red_chs.size();
    j["chambers"] = std::move(list);
    emit(j, cfg);
    if (!ok) {
        std::cerr << "mismatch: " << full_chs.size() << " full chambers vs " << red_chs.size()
                  << " reduced; reduction must be a bijection\n";
        return kExitMismatch;
    }
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    auto [lo, hi] = parse_window(cfg.window);
    Json rows = Json::array();
    bool ok = true;
    for (long long lam = lo; lam <= hi; ++lam) {
        Arrangement arr = build_reduced(cfg.n, cfg.loops, cfg.w, Rat(lam));
        auto chs = enumerate_bounded(arr, cfg.jobs);
        long long expected = reference_count(cfg.n, cfg.loops, cfg.w, Rat(lam));
        bool row_ok = static_cast<long long>(chs.size()) == expected;
        ok = ok && row_ok;
        Json row;
        row["lambda"] = lam;
        row["count"] = chs.size();
        row["expected"] = expected;
        row["ok"] = row_ok;
        rows.push_back(std::move(row));
        if (!row_ok)
            std::cerr << "mismatch at lambda=" << lam << ": enumerated " << chs.size()
                      << ", closed form gives " << expected << "\n";
    }
    Json j;
    j["n"] = cfg.n;
    j["ell"] = cfg.loops;
    j["w"] = cfg.w;
    j["window"] = {lo, hi};
    j["rows"] = std::move(rows);
    j["ok"] = ok;
    emit(j, cfg);
    return ok ? 0 : kExitMismatch;
}

Rat random_rat(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 13) - 6;
    long long den = 1 + static_cast<long long>(rng() % 3);
    return Rat(num, den);
}

LeafPoint parse_point(const std::string& text, int loops) {
    // comma-separated 2*loops rationals: s_1..s_l,t_1..t_l
    std::vector<Rat> vals;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            vals.push_back(parse_rat(cell));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--point", "not a rational: '" + cell + "'");
        }
    }
    if (static_cast<int>(vals.size()) != 2 * loops)
        throw CLI::ValidationError("--point", "expected " + std::to_string(2 * loops) + " entries");
    LeafPoint p;
    p.s.assign(vals.begin(), vals.begin() + loops);
    p.t.assign(vals.begin() + loops, vals.end());
    return p;
}

int cmd_modelcheck(const RunConfig& cfg) {
    if (cfg.loops < 2) throw CLI::ValidationError("--loops", "needs loops >= 2");

    if (!cfg.point.empty()) {
        LeafPoint p = parse_point(cfg.point, cfg.loops);
        Json j;
        j["loops"] = cfg.loops;
        j["point"] = cfg.point;
        j["transition"] = matrix_to_json(transition_matrix(p));
        emit(j, cfg);
        return 0;
    }

    std::mt19937_64 rng(cfg.seed);
    int dim = 2 * cfg.loops;
    int unipotent_ok = 0, darboux_ok = 0;
    RatMat want_gram = zero_matrix(dim, dim);
    want_gram[0][dim - 1] = 1;
    want_gram[dim - 1][0] = -1;
    for (int k = 1; k <= cfg.loops - 1; ++k) {
        want_gram[dim - 1 - k][k] = 1;
        want_gram[k][dim - 1 - k] = -1;
    }
    for (int rep = 0; rep < cfg.samples; ++rep) {
        LeafPoint p;
        p.s.resize(cfg.loops);
        p.t.resize(cfg.loops);
        do {
            for (auto& c : p.s) c = random_rat(rng);
            for (auto& c : p.t) c = random_rat(rng);
        } while (p.s[0] == 0 || p.s[1] == 0);

        if (is_unipotent(transition_matrix(p))) ++unipotent_ok;

        bool darboux = true;
        for (const Frame& f : {frame_I(p), frame_J(p)}) {
            for (int i = 0; i < dim && darboux; ++i)
                for (int j = 0; j < dim; ++j)
                    if (symplectic_pair(f.vectors[i], f.vectors[j]) != want_gram[i][j]) {
                        darboux = false;
                        break;
                    }
        }
        if (darboux) ++darboux_ok;
    }

    if (cfg.format == "json") {
        Json j;
        j["loops"] = cfg.loops;
        j["samples"] = cfg.samples;
        j["seed"] = cfg.seed;
        j["unipotent"] = unipotent_ok;
        j["darboux"] = darboux_ok;
        j["ok"] = unipotent_ok == cfg.samples && darboux_ok == cfg.samples;
        emit(j, cfg);
    } else {
        std::cout << "unipotent: " << unipotent_ok << "/" << cfg.samples << ", darboux: " << darboux_ok
                  << "/" << cfg.samples << "\n";
    }
    if (unipotent_ok != cfg.samples || darboux_ok != cfg.samples) {
        std::cerr << "mismatch: " << (cfg.samples - unipotent_ok) << " non-unipotent, "
                  << (cfg.samples - darboux_ok) << " non-Darboux samples\n";
        return kExitMismatch;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"quiver stratification and chamber toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--n", cfg.n, "vertex count / dimension at the flower vertex");
    app.add_option("--loops", cfg.loops, "loop count at the flower vertex");
    app.add_option("--framing", cfg.w, "framing multiplicity");
    app.add_option("--lambda", cfg.lambda, "parameter value, exact rational");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--jobs", cfg.jobs, "worker count")->check(CLI::PositiveNumber);
    app.add_option("--quiver", cfg.quiver_path, "framed setting JSON file");
    app.add_option("--window", cfg.window, "lambda range a:b for sweep");
    app.add_option("--samples", cfg.samples, "sample count for modelcheck")
        ->check(CLI::PositiveNumber);
    app.add_option("--type", cfg.type_index, "type index for slice (default: minimal leaf)");
    app.add_option("--point", cfg.point, "explicit leaf point s_1..s_l,t_1..t_l for modelcheck");

    auto* roots = app.add_subcommand("roots", "positive roots below the extended dimension vector");
    auto* flat = app.add_subcommand("flat-check", "flatness of the framed moment map");
    auto* leaves = app.add_subcommand("leaves", "decomposition types with dims and boundary codims");
    auto* slice = app.add_subcommand("slice", "slice quiver data of a decomposition type");
    auto* classify = app.add_subcommand("classify", "bounded chambers vs the closed-form count");
    auto* chambers = app.add_subcommand("chambers", "full-arrangement chambers with reduction check");
    auto* sweep = app.add_subcommand("sweep", "tabulate chamber counts over a lambda window");
    auto* modelcheck = app.add_subcommand("modelcheck", "frame and transition-matrix invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (log_has("config")) std::cerr << "seed=" << cfg.seed << " jobs=" << cfg.jobs << "\n";

    try {
        if (roots->parsed()) return cmd_roots(cfg);
        if (flat->parsed()) return cmd_flat_check(cfg);
        if (leaves->parsed()) return cmd_leaves(cfg);
        if (slice->parsed()) return cmd_slice(cfg);
        if (classify->parsed()) return cmd_classify(cfg);
        if (chambers->parsed()) return cmd_chambers(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (modelcheck->parsed()) return cmd_modelcheck(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
