#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "plab/dimension.hpp"
#include "plab/partition.hpp"
#include "plab/rational.hpp"

namespace plab {

using VertexId = std::string;

// Graded graph with multiplicities. Vertices are opaque ids; dim(v) is the
// weighted count of paths from level 0.
class GradedGraph {
public:
    virtual ~GradedGraph() = default;
    virtual std::string name() const = 0;
    // Number of levels if the graph is finite, no value if unbounded.
    virtual std::optional<int> height() const = 0;
    virtual std::vector<VertexId> level(int n) const = 0;
    virtual std::vector<std::pair<VertexId, int>> up_edges(const VertexId& v) const = 0;
    virtual BigInt dim(const VertexId& v) const = 0;
};

struct LevelMass {
    int n = 0;
    BigInt mass;  // sum of dim^2 over the level
};

inline LevelMass level_mass(const GradedGraph& g, int n) {
    require_cap(n, global_caps().level, "level");
    if (n < 0) throw validation_error("level must be nonnegative");
    if (g.height() && n >= *g.height())
        throw validation_error(g.name() + " has no level " + std::to_string(n));
    LevelMass out{n, 0};
    for (const VertexId& v : g.level(n)) {
        BigInt d = g.dim(v);
        out.mass += d * d;
    }
    return out;
}

struct PlancherelGraphWitness {
    int level = 0;
    VertexId vertex;
    Rational expected;  // mass(n) / mass(n+1)
    Rational actual;    // dim(v) / sum of dim over up-neighbours
};

struct PlancherelGraphReport {
    bool holds = true;
    int levels_checked = 0;  // vertices at levels 0..levels_checked were tested
    std::optional<PlancherelGraphWitness> witness;
};

// Tests whether dim(v) / sum_{v->w} mult * dim(w) is constant across each
// level and equal to mass(n) / mass(n+1). Vertices at levels 0..up_to are
// checked, which needs masses through level up_to + 1.
inline PlancherelGraphReport is_plancherel_graph(const GradedGraph& g, int up_to) {
    require_cap(up_to + 1, global_caps().level, "level");
    if (up_to < 0) throw validation_error("level range must be nonnegative");
    if (g.height() && up_to + 1 >= *g.height())
        throw validation_error(g.name() + " is too shallow: need levels through " +
                               std::to_string(up_to + 1));
    PlancherelGraphReport report;
    BigInt mass_n = level_mass(g, 0).mass;
    for (int n = 0; n <= up_to; ++n) {
        BigInt mass_next = level_mass(g, n + 1).mass;
        for (const VertexId& v : g.level(n)) {
            BigInt out_sum = 0;
            for (const auto& [w, mult] : g.up_edges(v)) out_sum += mult * g.dim(w);
            if (out_sum == 0)
                throw validation_error("vertex " + v + " at level " + std::to_string(n) +
                                       " has no up-edges; graph is not branching here");
            Rational expected(mass_n, mass_next);
            Rational actual(g.dim(v), out_sum);
            if (expected != actual) {
                report.holds = false;
                report.levels_checked = n;
                report.witness = PlancherelGraphWitness{n, v, expected, actual};
                return report;
            }
        }
        mass_n = mass_next;
    }
    report.levels_checked = up_to;
    return report;
}

// The lattice of Young diagrams ordered by containment, one edge per added
// cell, all multiplicities 1. Vertex ids are the bracketed row lists.
class YoungGraph : public GradedGraph {
public:
    std::string name() const override { return "young"; }
    std::optional<int> height() const override { return std::nullopt; }

    std::vector<VertexId> level(int n) const override {
        std::vector<VertexId> out;
        for (const Partition& p : enumerate_level(n)) out.push_back(p.to_string());
        return out;
    }

    std::vector<std::pair<VertexId, int>> up_edges(const VertexId& v) const override {
        std::vector<std::pair<VertexId, int>> out;
        for (const Partition& q : covers_up(partition_from_string(v))) out.emplace_back(q.to_string(), 1);
        return out;
    }

    BigInt dim(const VertexId& v) const override { return dim_hook(partition_from_string(v)); }
};

inline std::shared_ptr<GradedGraph> young_graph_adapter() { return std::make_shared<YoungGraph>(); }

// Pascal triangle as a graded graph: vertex "n,k", edges to "n+1,k" and
// "n+1,k+1", dim = binomial(n,k).
class PascalGraph : public GradedGraph {
public:
    std::string name() const override { return "pascal"; }
    std::optional<int> height() const override { return std::nullopt; }

    std::vector<VertexId> level(int n) const override {
        std::vector<VertexId> out;
        for (int k = 0; k <= n; ++k) out.push_back(id(n, k));
        return out;
    }

    std::vector<std::pair<VertexId, int>> up_edges(const VertexId& v) const override {
        auto [n, k] = parse(v);
        return {{id(n + 1, k), 1}, {id(n + 1, k + 1), 1}};
    }

    BigInt dim(const VertexId& v) const override {
        auto [n, k] = parse(v);
        return binomial(n, k);
    }

    static VertexId id(int n, int k) { return std::to_string(n) + "," + std::to_string(k); }

    static std::pair<int, int> parse(const VertexId& v) {
        auto comma = v.find(',');
        if (comma == std::string::npos) throw validation_error("bad pascal vertex id: " + v);
        int n = std::stoi(v.substr(0, comma));
        int k = std::stoi(v.substr(comma + 1));
        if (n < 0 || k < 0 || k > n) throw validation_error("bad pascal vertex id: " + v);
        return {n, k};
    }
};

inline std::shared_ptr<GradedGraph> pascal_graph() { return std::make_shared<PascalGraph>(); }

// Explicit finite graph, the in-memory form of the JSON interchange format.
class ExplicitGraph : public GradedGraph {
public:
    ExplicitGraph(std::string graph_name, std::vector<std::vector<VertexId>> levels,
                  std::vector<std::tuple<VertexId, VertexId, int>> edges)
        : name_(std::move(graph_name)), levels_(std::move(levels)), edges_(std::move(edges)) {
        if (levels_.empty() || levels_[0].empty())
            throw validation_error("graph needs a nonempty level 0");
        for (int n = 0; n < static_cast<int>(levels_.size()); ++n) {
            if (levels_[n].empty()) throw validation_error("empty level " + std::to_string(n));
            for (const VertexId& v : levels_[n])
                if (!level_of_.emplace(v, n).second)
                    throw validation_error("duplicate vertex id: " + v);
        }
        for (const auto& [from, to, mult] : edges_) {
            auto fi = level_of_.find(from);
            auto ti = level_of_.find(to);
            if (fi == level_of_.end() || ti == level_of_.end())
                throw validation_error("edge endpoint not a declared vertex: " + from + " -> " + to);
            if (ti->second != fi->second + 1)
                throw validation_error("edge " + from + " -> " + to + " does not go up one level");
            if (mult < 1) throw validation_error("edge multiplicity must be positive");
            up_[from].emplace_back(to, mult);
            in_[to].emplace_back(from, mult);
        }
        for (int n = 1; n < static_cast<int>(levels_.size()); ++n)
            for (const VertexId& v : levels_[n])
                if (in_.find(v) == in_.end())
                    throw validation_error("vertex " + v + " at level " + std::to_string(n) +
                                           " is unreachable from level 0");
    }

    std::string name() const override { return name_; }
    std::optional<int> height() const override { return static_cast<int>(levels_.size()); }

    std::vector<VertexId> level(int n) const override {
        if (n < 0 || n >= static_cast<int>(levels_.size())) return {};
        return levels_[n];
    }

    std::vector<std::pair<VertexId, int>> up_edges(const VertexId& v) const override {
        if (!level_of_.count(v)) throw validation_error("unknown vertex: " + v);
        auto it = up_.find(v);
        return it == up_.end() ? std::vector<std::pair<VertexId, int>>{} : it->second;
    }

    BigInt dim(const VertexId& v) const override {
        auto lv = level_of_.find(v);
        if (lv == level_of_.end()) throw validation_error("unknown vertex: " + v);
        auto memo = dims_.find(v);
        if (memo != dims_.end()) return memo->second;
        BigInt d;
        if (lv->second == 0) {
            d = 1;
        } else {
            d = 0;
            for (const auto& [from, mult] : in_.at(v)) d += mult * dim(from);
        }
        dims_.emplace(v, d);
        return d;
    }

    const std::vector<std::vector<VertexId>>& levels() const { return levels_; }
    const std::vector<std::tuple<VertexId, VertexId, int>>& edges() const { return edges_; }

private:
    std::string name_;
    std::vector<std::vector<VertexId>> levels_;
    std::vector<std::tuple<VertexId, VertexId, int>> edges_;
    std::map<VertexId, int> level_of_;
    std::map<VertexId, std::vector<std::pair<VertexId, int>>> up_;
    std::map<VertexId, std::vector<std::pair<VertexId, int>>> in_;
    mutable std::map<VertexId, BigInt> dims_;
};

// View of a base graph with one edge removed. Path counts are kept from the
// base graph so the deletion perturbs branching structure, not the weights.
class EdgeDeletedView : public GradedGraph {
public:
    EdgeDeletedView(std::shared_ptr<const GradedGraph> base, VertexId from, VertexId to)
        : base_(std::move(base)), from_(std::move(from)), to_(std::move(to)) {}

    std::string name() const override { return base_->name() + " minus " + from_ + "->" + to_; }
    std::optional<int> height() const override { return base_->height(); }
    std::vector<VertexId> level(int n) const override { return base_->level(n); }
    BigInt dim(const VertexId& v) const override { return base_->dim(v); }

    std::vector<std::pair<VertexId, int>> up_edges(const VertexId& v) const override {
        auto edges = base_->up_edges(v);
        if (v == from_)
            std::erase_if(edges, [&](const auto& e) { return e.first == to_; });
        return edges;
    }

private:
    std::shared_ptr<const GradedGraph> base_;
    VertexId from_;
    VertexId to_;
};

}  // namespace plab
