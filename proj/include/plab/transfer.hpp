#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "plab/config.hpp"
#include "plab/growth.hpp"
#include "plab/measures.hpp"
#include "plab/parallel.hpp"
#include "plab/tableau.hpp"

namespace plab {

// Removes entry 1 and slides the hole outward: at each position the smaller
// of the right and lower neighbours moves in (the sole neighbour when only
// one exists); the hole leaves through a removable corner and the remaining
// entries shift down by one. The result has one cell fewer.
inline StandardTableau transfer_step(const StandardTableau& t) {
    if (t.size() < 2) throw validation_error("transfer needs at least two cells");
    std::vector<std::vector<int>> rows = t.rows();
    std::size_t r = 0, c = 0;
    for (;;) {
        const bool right = c + 1 < rows[r].size();
        const bool down = r + 1 < rows.size() && c < rows[r + 1].size();
        if (!right && !down) break;
        const bool take_down = down && (!right || rows[r + 1][c] < rows[r][c + 1]);
        if (take_down) {
            rows[r][c] = rows[r + 1][c];
            ++r;
        } else {
            rows[r][c] = rows[r][c + 1];
            ++c;
        }
    }
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    for (auto& row : rows)
        for (int& e : row) --e;
    return StandardTableau::from_rows(std::move(rows));
}

struct QuasiStationarityReport {
    int k = 0;
    long long n = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    // Aligned over all k-cell tableaux in lexicographic order.
    std::vector<StandardTableau> atoms;
    std::vector<long long> counts;
    std::vector<Rational> expected;  // level-k tableau weights dim(shape)/k!
    double chi_square = 0.0;
    double critical_1pct = 0.0;
    double total_variation = 0.0;
    bool pass = false;  // chi_square below the 1% critical value
};

namespace detail {

// Upper 1% points of chi-square, indexed by degrees of freedom 1..10.
inline double chi_square_critical_1pct(int dof) {
    static constexpr double table[] = {6.6349, 9.2103, 11.3449, 13.2767, 15.0863,
                                       16.8119, 18.4753, 20.0902, 21.6660, 23.2093};
    if (dof < 1 || dof > 10) throw validation_error("no critical value for dof " + std::to_string(dof));
    return table[dof - 1];
}

}  // namespace detail

// Samples an n-cell growth tableau per trial, applies one transfer step, and
// compares the empirical law of the k-cell prefix against the level-k
// tableau weights. The buffer n >= k + 50 keeps the prefix deep inside the
// bulk of the sampled tableau.
inline QuasiStationarityReport quasi_stationarity_test(int k, long long n, long long trials,
                                                       std::uint64_t seed) {
    if (k < 2 || k > 4) throw validation_error("prefix size must lie in 2..4");
    if (n < k + 50)
        throw validation_error("target size must be at least k + 50 to bury boundary effects");
    if (trials < 1000) throw validation_error("need at least 1000 trials");
    require_cap(n, global_caps().sampling, "sampling");

    QuasiStationarityReport report;
    report.k = k;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.atoms = enumerate_tableaux(k);
    const std::size_t m = report.atoms.size();
    std::map<StandardTableau, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index.emplace(report.atoms[i], i);

    std::vector<std::uint8_t> outcome(static_cast<std::size_t>(trials));
    parallel_for_trials(trials, [&](long long trial) {
        GrowthSample sample = sample_growth(n, seed, trial);
        StandardTableau shifted = transfer_step(sample.tableau);
        outcome[static_cast<std::size_t>(trial)] =
            static_cast<std::uint8_t>(index.at(shifted.prefix(k)));
    });

    report.counts.assign(m, 0);
    for (std::uint8_t o : outcome) ++report.counts[o];

    BigInt kf = factorial(k);
    double chi = 0.0, tv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        Rational p(dim_hook(report.atoms[i].shape()), kf);
        report.expected.push_back(p);
        const double expect = to_double(p) * static_cast<double>(trials);
        const double diff = static_cast<double>(report.counts[i]) - expect;
        chi += diff * diff / expect;
        tv += std::abs(diff) / static_cast<double>(trials);
    }
    report.chi_square = chi;
    report.total_variation = tv / 2.0;
    report.critical_1pct = detail::chi_square_critical_1pct(static_cast<int>(m) - 1);
    report.pass = chi <= report.critical_1pct;
    return report;
}

}  // namespace plab
