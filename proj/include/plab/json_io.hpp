#pragma once

#include "json.hpp"

#include <fstream>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "plab/graded_graph.hpp"
#include "plab/measures.hpp"
#include "plab/partition.hpp"
#include "plab/posets.hpp"
#include "plab/prefix.hpp"
#include "plab/rational.hpp"
#include "plab/tableau.hpp"
#include "plab/totpos.hpp"
#include "plab/transfer.hpp"

namespace plab {

// Insertion-ordered documents keep every serialization byte-stable.
using Json = nlohmann::ordered_json;

inline Json partition_json(const Partition& p) {
    Json j = Json::array();
    for (int part : p.parts()) j.push_back(part);
    return j;
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw validation_error("partition must be a JSON array of row lengths");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw validation_error("partition entries must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

inline Json tableau_json(const StandardTableau& t) {
    Json j = Json::array();
    for (const auto& row : t.rows()) j.push_back(row);
    return j;
}

inline StandardTableau tableau_from_json(const Json& j) {
    if (!j.is_array()) throw validation_error("tableau must be a JSON array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw validation_error("tableau rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw validation_error("tableau entries must be integers");
            r.push_back(v.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return StandardTableau::from_rows(std::move(rows));
}

inline Json level_measure_json(const LevelMeasure& m) {
    Json weights = Json::object();
    for (const auto& [p, w] : m.weights) weights[p.to_string()] = rational_string(w);
    return Json{{"n", m.n}, {"weights", weights}};
}

inline Json prefix_distribution_json(const PrefixDistribution& d) {
    Json weights = Json::object();
    for (const auto& [t, w] : d.weights) weights[t.to_string()] = rational_string(w);
    return Json{{"shape", partition_json(d.shape)}, {"k", d.k}, {"weights", weights}};
}

inline Json graph_json(const GradedGraph& g, int up_to) {
    if (g.height() && up_to >= *g.height())
        throw validation_error(g.name() + " has fewer levels than requested");
    Json levels = Json::array();
    Json edges = Json::array();
    for (int n = 0; n <= up_to; ++n) {
        Json level = Json::array();
        for (const VertexId& v : g.level(n)) {
            level.push_back(v);
            if (n < up_to)
                for (const auto& [w, mult] : g.up_edges(v)) edges.push_back(Json::array({v, w, mult}));
        }
        levels.push_back(level);
    }
    return Json{{"levels", levels}, {"edges", edges}};
}

inline std::shared_ptr<ExplicitGraph> graph_from_json(const Json& j, const std::string& name) {
    if (!j.is_object() || !j.contains("levels") || !j.contains("edges"))
        throw validation_error("graph document needs 'levels' and 'edges'");
    std::vector<std::vector<VertexId>> levels;
    for (const auto& level : j.at("levels")) {
        std::vector<VertexId> ids;
        for (const auto& v : level) {
            if (!v.is_string()) throw validation_error("vertex ids must be strings");
            ids.push_back(v.get<std::string>());
        }
        levels.push_back(std::move(ids));
    }
    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3))
            throw validation_error("edges must be [from, to] or [from, to, multiplicity]");
        int mult = e.size() == 3 ? e.at(2).get<int>() : 1;
        edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>(), mult);
    }
    return std::make_shared<ExplicitGraph>(name, std::move(levels), std::move(edges));
}

inline Json plancherel_report_json(const PlancherelGraphReport& r) {
    Json j{{"holds", r.holds}, {"levels_checked", r.levels_checked}};
    if (r.witness) {
        j["witness"] = Json{{"level", r.witness->level},
                            {"vertex", r.witness->vertex},
                            {"expected", rational_string(r.witness->expected)},
                            {"actual", rational_string(r.witness->actual)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json coherence_report_json(const CoherenceReport& r) {
    Json j{{"n", r.n}, {"holds", r.holds}};
    j["witness"] = r.witness ? tableau_json(*r.witness) : Json(nullptr);
    return j;
}

inline Json qs_report_json(const QuasiStationarityReport& r) {
    Json counts = Json::object();
    Json expected = Json::object();
    for (std::size_t i = 0; i < r.atoms.size(); ++i) {
        const std::string key = r.atoms[i].to_string();
        counts[key] = r.counts[i];
        expected[key] = rational_string(r.expected[i]);
    }
    return Json{{"k", r.k},
                {"n", r.n},
                {"trials", r.trials},
                {"seed", r.seed},
                {"counts", counts},
                {"expected", expected},
                {"chi_square", r.chi_square},
                {"critical_1pct", r.critical_1pct},
                {"total_variation", r.total_variation},
                {"pass", r.pass}};
}

inline Json tp_report_json(const TotalPositivityReport& r) {
    Json j{{"totally_positive", r.totally_positive},
           {"max_order", r.max_order},
           {"window", r.window},
           {"minors_checked", r.minors_checked}};
    if (r.witness) {
        j["witness"] = Json{{"rows", r.witness->rows},
                            {"cols", r.witness->cols},
                            {"value", rational_string(r.witness->value)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json numbering_json(const MonotoneNumbering& m) {
    Json j = Json::array();
    for (const PosetElement& e : m.order) j.push_back(e);
    return j;
}

inline MonotoneNumbering numbering_from_json(const Json& j) {
    if (!j.is_array()) throw validation_error("numbering must be a JSON array of elements");
    MonotoneNumbering m;
    for (const auto& e : j) {
        if (!e.is_array()) throw validation_error("numbering elements must be coordinate arrays");
        PosetElement elem;
        for (const auto& v : e) elem.push_back(v.get<int>());
        m.order.push_back(std::move(elem));
    }
    return m;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw validation_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace plab
