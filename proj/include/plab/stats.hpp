#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "plab/config.hpp"
#include "plab/growth.hpp"
#include "plab/parallel.hpp"

namespace plab {

struct RowGrowthReport {
    long long n = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<int, int>> per_trial;  // (first row, row count)
    double mean_ratio = 0.0;                     // mean of first row / sqrt(n)
    double stddev_ratio = 0.0;
};

// Growth samples at one size; records first-row length and row count per
// trial and the normalized first-row statistics.
inline RowGrowthReport first_row_statistics(long long n, long long trials, std::uint64_t seed) {
    if (trials < 1) throw validation_error("need at least one trial");
    require_cap(n, global_caps().sampling, "sampling");
    RowGrowthReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.per_trial.resize(static_cast<std::size_t>(trials));
    parallel_for_trials(trials, [&](long long trial) {
        Partition shape = sample_growth_shape(n, seed, trial);
        report.per_trial[static_cast<std::size_t>(trial)] = {shape.part(0), shape.rows()};
    });
    const double root = std::sqrt(static_cast<double>(n));
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& [row, _] : report.per_trial) {
        const double ratio = static_cast<double>(row) / root;
        sum += ratio;
        sum_sq += ratio * ratio;
    }
    report.mean_ratio = sum / static_cast<double>(trials);
    const double var = sum_sq / static_cast<double>(trials) - report.mean_ratio * report.mean_ratio;
    report.stddev_ratio = var > 0 ? std::sqrt(var) : 0.0;
    return report;
}

struct SublinearityReport {
    std::vector<long long> sizes;
    long long trials = 0;
    std::uint64_t seed = 0;
    std::vector<double> mean_fraction;  // mean of first row / n, per size
    bool strictly_decreasing = false;
};

// The first-row fraction lambda_1 / n must fall as n grows if the first row
// is sublinear. Trials at different sizes use disjoint substreams.
inline SublinearityReport sublinearity_check(std::vector<long long> sizes, long long trials,
                                             std::uint64_t seed) {
    if (sizes.size() < 2) throw validation_error("need at least two sizes to compare");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw validation_error("sizes must be positive");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw validation_error("sizes must increase strictly");
        require_cap(sizes[i], global_caps().sampling, "sampling");
    }
    if (trials < 1) throw validation_error("need at least one trial");
    SublinearityReport report;
    report.sizes = std::move(sizes);
    report.trials = trials;
    report.seed = seed;
    for (std::size_t si = 0; si < report.sizes.size(); ++si) {
        const long long n = report.sizes[si];
        std::vector<int> first_rows(static_cast<std::size_t>(trials));
        parallel_for_trials(trials, [&](long long trial) {
            const long long stream = static_cast<long long>(si) * trials + trial;
            first_rows[static_cast<std::size_t>(trial)] = sample_growth_shape(n, seed, stream).part(0);
        });
        double sum = 0.0;
        for (int row : first_rows) sum += static_cast<double>(row) / static_cast<double>(n);
        report.mean_fraction.push_back(sum / static_cast<double>(trials));
    }
    report.strictly_decreasing = true;
    for (std::size_t i = 1; i < report.mean_fraction.size(); ++i)
        if (report.mean_fraction[i] >= report.mean_fraction[i - 1]) {
            report.strictly_decreasing = false;
            break;
        }
    return report;
}

}  // namespace plab
