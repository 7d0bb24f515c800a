#pragma once

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "plab/config.hpp"
#include "plab/graded_graph.hpp"
#include "plab/growth.hpp"
#include "plab/json_io.hpp"
#include "plab/measures.hpp"
#include "plab/posets.hpp"
#include "plab/prefix.hpp"
#include "plab/rng.hpp"
#include "plab/selftest.hpp"
#include "plab/series.hpp"
#include "plab/stats.hpp"
#include "plab/totpos.hpp"
#include "plab/transfer.hpp"

namespace plab {

// One parsed invocation: the command name plus the superset of parameters;
// each command reads its own slice.
struct ExperimentConfig {
    std::string command;

    std::uint64_t seed = kDefaultSeed;
    std::string format = "json";  // json | csv
    std::string out;              // output path; empty writes to stdout

    long long n = -1;
    int k = -1;
    long long trials = -1;
    int order = -1;
    int window = -1;
    int up_to = -1;
    int m = 0;
    int width = 64;

    std::string shape;      // bracketed row list, e.g. [4,2,1]
    std::string poset = "z2";
    std::string ideal = "whole";
    std::string coeffs;     // "exp", a comma list of rationals, or @file
    std::string chi;        // comma list of rationals
    std::string alpha;      // comma list of rationals, may be empty
    std::string beta;
    std::string gamma = "0";
    std::string tableau;    // inline JSON rows or @file
    std::string graph;      // graph JSON file
    bool pascal = false;
    std::string emit_graph;  // also write the inspected graph here
    std::string numbering_file;
    std::string sizes;      // comma list for sublinearity
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        if (!item.empty()) out.push_back(item);
        pos = comma + 1;
    }
    return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const std::string& item : split_list(text)) out.push_back(parse_rational(item));
    return out;
}

inline std::vector<long long> parse_size_list(const std::string& text) {
    std::vector<long long> out;
    for (const std::string& item : split_list(text)) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw validation_error("bad size '" + item + "'");
        }
    }
    return out;
}

// Inline value or @path indirection for larger payloads.
inline std::string inline_or_file(const std::string& text) {
    if (text.empty() || text[0] != '@') return text;
    std::ifstream in(text.substr(1));
    if (!in) throw validation_error("cannot open " + text.substr(1));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Writes through a temp file in the target directory, then renames, so a
// crash never leaves a half-written document.
inline void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    fs::path tmp = dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw validation_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw validation_error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw validation_error("cannot move output into place at " + path);
    }
}

inline void emit(const ExperimentConfig& cfg, const std::string& content) {
    if (cfg.out.empty())
        std::cout << content;
    else
        write_atomic(cfg.out, content);
}

inline void emit_json(const ExperimentConfig& cfg, const Json& doc) {
    emit(cfg, doc.dump(2) + "\n");
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

inline void require_json_format(const ExperimentConfig& cfg) {
    if (cfg.format != "json")
        throw validation_error("this command only supports --format json");
}

inline Partition parse_shape_arg(const std::string& text) {
    if (text.empty()) throw validation_error("missing --shape");
    return partition_from_string(text);
}

inline CoefficientSequence parse_coeffs_arg(const ExperimentConfig& cfg, int min_order) {
    if (cfg.coeffs.empty()) throw validation_error("missing --coeffs");
    if (cfg.coeffs == "exp") {
        std::vector<Rational> c(static_cast<std::size_t>(min_order) + 1);
        for (int kk = 0; kk <= min_order; ++kk) c[kk] = Rational(BigInt(1), factorial(kk));
        return CoefficientSequence(std::move(c));
    }
    std::string text = inline_or_file(cfg.coeffs);
    std::vector<Rational> c;
    if (!text.empty() && (text[0] == '[' || text[0] == '{')) {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw validation_error(std::string("malformed coefficient JSON: ") + e.what());
        }
        for (const auto& v : doc) {
            if (v.is_string())
                c.push_back(parse_rational(v.get<std::string>()));
            else if (v.is_number_integer())
                c.push_back(Rational(v.get<long long>()));
            else
                throw validation_error("coefficients must be p/q strings or integers");
        }
    } else {
        c = parse_rational_list(text);
    }
    if (c.empty()) throw validation_error("coefficient list is empty");
    // A finite list means a finitely supported sequence: zero-pad to the window.
    while (static_cast<int>(c.size()) <= min_order) c.emplace_back(0);
    return CoefficientSequence(std::move(c));
}

inline long long require_n(const ExperimentConfig& cfg) {
    if (cfg.n < 0) throw validation_error("missing --n");
    return cfg.n;
}

inline long long require_trials(const ExperimentConfig& cfg) {
    if (cfg.trials < 0) throw validation_error("missing --trials");
    return cfg.trials;
}

inline std::shared_ptr<PosetHandle> make_poset(const ExperimentConfig& cfg) {
    if (cfg.poset == "z2") return lattice_z2();
    if (cfg.poset == "z3") return lattice_zd(3);
    if (cfg.poset == "z4") return lattice_zd(4);
    if (cfg.poset == "nonrigid") return nonrigid_poset(cfg.width);
    throw validation_error("unknown poset '" + cfg.poset + "' (z2, z3, z4, nonrigid)");
}

inline void run_measure(const ExperimentConfig& cfg) {
    const long long n = require_n(cfg);
    if (n > std::numeric_limits<int>::max()) throw validation_error("level too large");
    LevelMeasure m = level_measure(static_cast<int>(n));
    if (cfg.format == "csv") {
        std::string csv = "partition,weight\n";
        for (const auto& [p, w] : m.weights)
            csv += csv_escape(p.to_string()) + "," + csv_escape(rational_string(w)) + "\n";
        emit(cfg, csv);
        return;
    }
    Json doc{{"command", "measure"}};
    doc.update(level_measure_json(m));
    doc["total"] = rational_string(m.total());
    emit_json(cfg, doc);
}

inline void run_sample(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    const long long n = require_n(cfg);
    const long long trials = cfg.trials < 0 ? 1 : cfg.trials;
    if (trials < 1) throw validation_error("need at least one trial");
    const std::uint64_t seed = resolve_seed(cfg.seed);
    Json samples = Json::array();
    for (long long trial = 0; trial < trials; ++trial) {
        GrowthSample s = sample_growth(n, seed, trial);
        samples.push_back(Json{{"trial", trial},
                               {"shape", partition_json(s.tableau.shape())},
                               {"tableau", tableau_json(s.tableau)}});
    }
    emit_json(cfg, Json{{"command", "sample"},
                        {"n", n},
                        {"seed", seed},
                        {"trials", trials},
                        {"exact_weights", growth_uses_exact_weights(n)},
                        {"samples", samples}});
}

inline void run_coherence(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    const long long n = require_n(cfg);
    CoherenceReport r = check_coherence(static_cast<int>(n));
    Json doc{{"command", "coherence"}};
    doc.update(coherence_report_json(r));
    emit_json(cfg, doc);
}

inline void run_prefix_dist(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    Partition shape = parse_shape_arg(cfg.shape);
    if (cfg.k < 0) throw validation_error("missing --k");
    PrefixDistribution dist = induced_prefix_distribution(shape, cfg.k);
    Rational tv = prefix_distance_exact(shape, cfg.k);
    Json doc{{"command", "prefix-dist"}};
    doc.update(prefix_distribution_json(dist));
    doc["distance_to_level"] = rational_string(tv);
    doc["distance_double"] = to_double(tv);
    emit_json(cfg, doc);
}

inline void run_plgraph(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    if (cfg.up_to < 0) throw validation_error("missing --up-to");
    std::shared_ptr<GradedGraph> g;
    if (!cfg.graph.empty()) {
        if (cfg.pascal) throw validation_error("--graph and --pascal are mutually exclusive");
        g = graph_from_json(load_json_file(cfg.graph), std::filesystem::path(cfg.graph).stem().string());
    } else if (cfg.pascal) {
        g = pascal_graph();
    } else {
        g = young_graph_adapter();
    }
    PlancherelGraphReport r = is_plancherel_graph(*g, cfg.up_to);
    Json masses = Json::array();
    const int depth = r.holds ? cfg.up_to + 1 : r.witness->level + 1;
    for (int n = 0; n <= depth; ++n) masses.push_back(level_mass(*g, n).mass.str());
    Json doc{{"command", "plgraph"}, {"graph", g->name()}, {"up_to", cfg.up_to}};
    doc.update(plancherel_report_json(r));
    doc["masses"] = masses;
    if (!cfg.emit_graph.empty())
        write_atomic(cfg.emit_graph, graph_json(*g, cfg.up_to + 1).dump(2) + "\n");
    emit_json(cfg, doc);
}

inline void run_numberings(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    const long long n = require_n(cfg);
    auto poset = make_poset(cfg);
    std::vector<MonotoneNumbering> all = enumerate_numberings(*poset, static_cast<int>(n));
    Json list = Json::array();
    for (const MonotoneNumbering& m : all) list.push_back(numbering_json(m));
    emit_json(cfg, Json{{"command", "numberings"},
                        {"poset", poset->name()},
                        {"n", n},
                        {"count", all.size()},
                        {"numberings", list}});
}

inline void run_density(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    IdealSpec ideal = IdealSpec::parse(cfg.ideal);
    MonotoneNumbering numbering;
    Json source;
    std::uint64_t seed = 0;
    if (!cfg.numbering_file.empty()) {
        numbering = numbering_from_json(load_json_file(cfg.numbering_file));
        auto poset = make_poset(cfg);
        validate_numbering(*poset, numbering);
        source = Json{{"file", cfg.numbering_file}, {"poset", poset->name()}};
    } else {
        const long long n = require_n(cfg);
        seed = resolve_seed(cfg.seed);
        numbering = numbering_from_tableau(sample_growth(n, seed, 0).tableau);
        source = Json{{"sample", Json{{"n", n}, {"seed", seed}}}};
    }
    emit_json(cfg, Json{{"command", "density"},
                        {"ideal", ideal.to_string()},
                        {"source", source},
                        {"n", numbering.size()},
                        {"count", ideal_count(numbering, ideal)},
                        {"density", ideal_density(numbering, ideal)}});
}

inline void run_transfer(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    if (cfg.tableau.empty()) throw validation_error("missing --tableau");
    std::string text = inline_or_file(cfg.tableau);
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw validation_error(std::string("malformed tableau JSON: ") + e.what());
    }
    StandardTableau input = tableau_from_json(doc);
    StandardTableau output = transfer_step(input);
    emit_json(cfg, Json{{"command", "transfer"},
                        {"input", tableau_json(input)},
                        {"output", tableau_json(output)},
                        {"shape_before", partition_json(input.shape())},
                        {"shape_after", partition_json(output.shape())}});
}

inline void run_qs_test(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    if (cfg.k < 0) throw validation_error("missing --k");
    const long long n = require_n(cfg);
    const long long trials = require_trials(cfg);
    const std::uint64_t seed = resolve_seed(cfg.seed);
    QuasiStationarityReport r = quasi_stationarity_test(cfg.k, n, trials, seed);
    Json out{{"command", "qs-test"}};
    out.update(qs_report_json(r));
    emit_json(cfg, out);
}

inline void run_tp_check(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    if (cfg.order < 1) throw validation_error("missing --order");
    if (cfg.window < 1) throw validation_error("missing --window");
    CoefficientSequence c = parse_coeffs_arg(cfg, cfg.window - 1);
    TotalPositivityReport r = check_total_positivity(c, cfg.order, cfg.window);
    Json out{{"command", "tp-check"}, {"coefficients", coefficient_strings(c)}};
    out.update(tp_report_json(r));
    emit_json(cfg, out);
}

inline void run_thoma(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    if (cfg.order < 0) throw validation_error("missing --order");
    ThomaParams params;
    params.alpha = parse_rational_list(cfg.alpha);
    params.beta = parse_rational_list(cfg.beta);
    params.gamma = parse_rational(cfg.gamma);
    params.m = cfg.m;
    CoefficientSequence f = thoma_coefficients(params, cfg.order);
    Json out{{"command", "thoma"}};
    Json alpha = Json::array(), beta = Json::array();
    for (const Rational& a : params.alpha) alpha.push_back(rational_string(a));
    for (const Rational& b : params.beta) beta.push_back(rational_string(b));
    out["alpha"] = alpha;
    out["beta"] = beta;
    out["gamma"] = rational_string(params.gamma);
    out["m"] = params.m;
    out["order"] = cfg.order;
    out["coefficients"] = coefficient_strings(f);
    emit_json(cfg, out);
}

inline void run_chargf(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    if (cfg.order < 0) throw validation_error("missing --order");
    if (cfg.chi.empty()) throw validation_error("missing --chi");
    std::vector<Rational> chi = parse_rational_list(inline_or_file(cfg.chi));
    CoefficientSequence f = character_gf(chi, cfg.order);
    Json values = Json::array();
    for (const Rational& v : chi) values.push_back(rational_string(v));
    emit_json(cfg, Json{{"command", "chargf"},
                        {"chi", values},
                        {"order", cfg.order},
                        {"coefficients", coefficient_strings(f)}});
}

inline void run_first_row(const ExperimentConfig& cfg) {
    const long long n = require_n(cfg);
    const long long trials = require_trials(cfg);
    const std::uint64_t seed = resolve_seed(cfg.seed);
    RowGrowthReport r = first_row_statistics(n, trials, seed);
    if (cfg.format == "csv") {
        std::string csv = "trial,first_row,rows\n";
        for (std::size_t i = 0; i < r.per_trial.size(); ++i)
            csv += std::to_string(i) + "," + std::to_string(r.per_trial[i].first) + "," +
                   std::to_string(r.per_trial[i].second) + "\n";
        emit(cfg, csv);
        return;
    }
    Json per_trial = Json::array();
    for (const auto& [row, rows] : r.per_trial) per_trial.push_back(Json::array({row, rows}));
    emit_json(cfg, Json{{"command", "first-row"},
                        {"n", r.n},
                        {"trials", r.trials},
                        {"seed", r.seed},
                        {"mean_ratio", r.mean_ratio},
                        {"stddev_ratio", r.stddev_ratio},
                        {"per_trial", per_trial}});
}

inline void run_sublinearity(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw validation_error("missing --sizes");
    const long long trials = require_trials(cfg);
    const std::uint64_t seed = resolve_seed(cfg.seed);
    SublinearityReport r = sublinearity_check(parse_size_list(cfg.sizes), trials, seed);
    if (cfg.format == "csv") {
        std::string csv = "n,mean_fraction\n";
        for (std::size_t i = 0; i < r.sizes.size(); ++i)
            csv += std::to_string(r.sizes[i]) + "," + std::to_string(r.mean_fraction[i]) + "\n";
        emit(cfg, csv);
        return;
    }
    emit_json(cfg, Json{{"command", "sublinearity"},
                        {"sizes", r.sizes},
                        {"trials", r.trials},
                        {"seed", r.seed},
                        {"mean_fraction", r.mean_fraction},
                        {"strictly_decreasing", r.strictly_decreasing}});
}

inline int run_selftest_command(const ExperimentConfig& cfg) {
    require_json_format(cfg);
    std::vector<SelfTestItem> items = run_selftest();
    bool all = true;
    Json list = Json::array();
    for (const SelfTestItem& item : items) {
        all = all && item.pass;
        list.push_back(Json{{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
    }
    emit_json(cfg, Json{{"command", "selftest"}, {"items", list}, {"all_pass", all}});
    return all ? 0 : 1;
}

}  // namespace detail

// Dispatches one experiment; throws validation_error or resource_limit_error
// on bad input, returns the process exit code otherwise.
inline int run_experiment(const ExperimentConfig& cfg) {
    if (cfg.format != "json" && cfg.format != "csv")
        throw validation_error("unknown format '" + cfg.format + "'");
    if (cfg.command == "measure") detail::run_measure(cfg);
    else if (cfg.command == "sample") detail::run_sample(cfg);
    else if (cfg.command == "coherence") detail::run_coherence(cfg);
    else if (cfg.command == "prefix-dist") detail::run_prefix_dist(cfg);
    else if (cfg.command == "plgraph") detail::run_plgraph(cfg);
    else if (cfg.command == "numberings") detail::run_numberings(cfg);
    else if (cfg.command == "density") detail::run_density(cfg);
    else if (cfg.command == "transfer") detail::run_transfer(cfg);
    else if (cfg.command == "qs-test") detail::run_qs_test(cfg);
    else if (cfg.command == "tp-check") detail::run_tp_check(cfg);
    else if (cfg.command == "thoma") detail::run_thoma(cfg);
    else if (cfg.command == "chargf") detail::run_chargf(cfg);
    else if (cfg.command == "first-row") detail::run_first_row(cfg);
    else if (cfg.command == "sublinearity") detail::run_sublinearity(cfg);
    else if (cfg.command == "selftest") return detail::run_selftest_command(cfg);
    else throw validation_error("unknown command '" + cfg.command + "'");
    return 0;
}

}  // namespace plab
