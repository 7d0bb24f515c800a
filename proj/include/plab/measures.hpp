#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "plab/dimension.hpp"
#include "plab/partition.hpp"
#include "plab/rational.hpp"
#include "plab/tableau.hpp"

namespace plab {

// Probability weights dim^2 / n! on one level, in enumeration order.
struct LevelMeasure {
    int n = 0;
    std::vector<std::pair<Partition, Rational>> weights;

    const Rational& at(const Partition& p) const {
        for (const auto& [q, w] : weights)
            if (q == p) return w;
        throw validation_error(p.to_string() + " is not on level " + std::to_string(n));
    }

    Rational total() const {
        Rational t = 0;
        for (const auto& [q, w] : weights) t += w;
        return t;
    }
};

inline LevelMeasure level_measure(int n) {
    LevelMeasure m;
    m.n = n;
    BigInt nf = factorial(n);
    for (const Partition& p : enumerate_level(n)) {
        BigInt d = dim_hook(p);
        m.weights.emplace_back(p, Rational(d * d, nf));
    }
    return m;
}

// Weight of one standard tableau under the uniform-on-paths measure whose
// shape marginal is level_measure: dim(shape) / n!.
inline Rational tableau_measure(const StandardTableau& t) {
    return Rational(dim_hook(t.shape()), factorial(t.size()));
}

// Forward step weight from lambda to a cover Lambda: dim(Lambda) / ((n+1) dim(lambda)).
inline Rational transition_prob(const Partition& lambda, const Partition& cover) {
    if (cover.n() != lambda.n() + 1 || !cover.contains(lambda))
        throw validation_error(cover.to_string() + " does not cover " + lambda.to_string());
    return Rational(dim_hook(cover), (lambda.n() + 1) * dim_hook(lambda));
}

// Backward step weight from Lambda down to a covered lambda: dim(lambda) / dim(Lambda).
inline Rational cotransition_prob(const Partition& cover, const Partition& lambda) {
    if (cover.n() != lambda.n() + 1 || !cover.contains(lambda))
        throw validation_error(cover.to_string() + " does not cover " + lambda.to_string());
    return Rational(dim_hook(lambda), dim_hook(cover));
}

struct CoherenceReport {
    int n = 0;
    bool holds = true;
    // A tableau whose extension weights fail to sum back to its own weight.
    std::optional<StandardTableau> witness;
};

// Row-major filling 1..n of a shape; the canonical standard tableau used for
// witnesses. The extension sum below depends only on the shape, so one
// representative per shape is exhaustive.
inline StandardTableau canonical_tableau(const Partition& shape) {
    std::vector<std::vector<int>> rows(shape.rows());
    int next = 1;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.part(r); ++c) rows[r].push_back(next++);
    return StandardTableau::from_rows(std::move(rows));
}

// Checks, for every tableau weight on level n, that the weights of its
// one-cell extensions sum to it: sum_{cover} dim(cover) = (n+1) dim(shape).
inline CoherenceReport check_coherence(int n) {
    require_cap(n, global_caps().coherence, "coherence");
    if (n < 1) throw validation_error("coherence level must be positive");
    CoherenceReport report;
    report.n = n;
    for (const Partition& p : enumerate_level(n)) {
        BigInt up = 0;
        for (const Partition& q : covers_up(p)) up += dim_hook(q);
        if (up != (n + 1) * dim_hook(p)) {
            report.holds = false;
            report.witness = canonical_tableau(p);
            return report;
        }
    }
    return report;
}

// Push-forward of level n through the forward step weights reproduces level n+1.
inline bool pushforward_consistent(int n) {
    LevelMeasure mu = level_measure(n);
    LevelMeasure nu = level_measure(n + 1);
    for (const auto& [q, wq] : nu.weights) {
        Rational acc = 0;
        for (const Partition& p : covers_down(q)) acc += mu.at(p) * transition_prob(p, q);
        if (acc != wq) return false;
    }
    return true;
}

// Averaging level n+1 through the backward step weights reproduces level n.
inline bool projection_consistent(int n) {
    LevelMeasure mu = level_measure(n);
    LevelMeasure nu = level_measure(n + 1);
    for (const auto& [p, wp] : mu.weights) {
        Rational acc = 0;
        for (const Partition& q : covers_up(p)) acc += nu.at(q) * cotransition_prob(q, p);
        if (acc != wp) return false;
    }
    return true;
}

}  // namespace plab
