#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "plab/config.hpp"
#include "plab/partition.hpp"
#include "plab/rational.hpp"
#include "plab/rng.hpp"
#include "plab/tableau.hpp"

namespace plab {

struct GrowthSample {
    StandardTableau tableau;
    std::uint64_t seed = 0;
    long long trial = 0;
    bool exact = true;  // arithmetic mode the weights were computed in
};

namespace detail {

// Product of many machine-size factors, spilled into a big integer only when
// the running 64-bit chunk would overflow.
class FactorProduct {
public:
    void mul(std::uint64_t f) {
        if (chunk_ > std::numeric_limits<std::uint64_t>::max() / f) {
            big_ *= chunk_;
            chunk_ = f;
        } else {
            chunk_ *= f;
        }
    }

    BigInt value() const {
        BigInt v = big_;
        v *= chunk_;
        return v;
    }

private:
    BigInt big_ = 1;
    std::uint64_t chunk_ = 1;
};

// One growth step adds a cell at an addable corner (r, c), c = parts[r],
// with probability proportional to the filling count of the grown shape:
//
//   dim(grown) = dim(current) * (k+1) * prod h/(h+1)
//
// where h runs over current hook lengths along row r and column c. Exact
// mode carries dim as an integer and computes the corner products fresh each
// step; every weight is an exact filling count.
class ExactGrowth {
public:
    // Returns the row index that received the new cell. One 64-bit draw per
    // step; the selection grid has 2^-64 granularity, the weights themselves
    // are exact.
    int step(Rng& rng) {
        const int rows = static_cast<int>(parts_.size());
        corner_rows_.clear();
        weights_.clear();
        BigInt total = 0;
        for (int r = 0; r <= rows; ++r) {
            if (r > 0 && r < rows && parts_[r] >= parts_[r - 1]) continue;
            const int c = r < rows ? parts_[r] : 0;
            FactorProduct num, den;
            if (r < rows)
                for (int j = 0; j < c; ++j) {
                    std::uint64_t h = static_cast<std::uint64_t>(parts_[r] - j + conj_[j] - r - 1);
                    num.mul(h);
                    den.mul(h + 1);
                }
            for (int i = 0; i < r; ++i) {
                std::uint64_t h = static_cast<std::uint64_t>(parts_[i] - c + conj_[c] - i - 1);
                num.mul(h);
                den.mul(h + 1);
            }
            BigInt w = dim_ * (k_ + 1);
            w *= num.value();
            w /= den.value();  // divides exactly: w is the filling count of the grown shape
            total += w;
            corner_rows_.push_back(r);
            weights_.push_back(std::move(w));
        }
        BigInt target = (total * rng.next_u64()) >> 64;
        std::size_t pick = 0;
        BigInt cum = weights_[0];
        while (cum <= target) cum += weights_[++pick];
        const int r = corner_rows_[pick];
        dim_ = weights_[pick];
        ++k_;
        if (r == rows)
            parts_.push_back(1);
        else
            ++parts_[r];
        const int c = parts_[r] - 1;
        if (c == static_cast<int>(conj_.size()))
            conj_.push_back(1);
        else
            ++conj_[c];
        return r;
    }

    const std::vector<int>& parts() const { return parts_; }
    const BigInt& current_dim() const { return dim_; }

private:
    std::vector<int> parts_, conj_;
    std::vector<int> corner_rows_;
    std::vector<BigInt> weights_;
    BigInt dim_ = 1;
    long long k_ = 0;
};

// Float mode keeps, for every full row and column, the running product of
// h/(h+1) over its cells. The corner weight is then rowprod[r] * colprod[c]
// because the cells entering the corner formula are exactly one full row and
// one full column. Adding a cell at (r, c) changes hooks only in row r and
// column c, so the update recomputes those two products and applies an O(1)
// ratio fix to each crossing row and column: O(parts + largest part) a step.
class FloatGrowth {
public:
    int step(Rng& rng) {
        const int rows = static_cast<int>(parts_.size());
        corner_rows_.clear();
        weights_.clear();
        double total = 0.0;
        for (int r = 0; r <= rows; ++r) {
            if (r > 0 && r < rows && parts_[r] >= parts_[r - 1]) continue;
            const int c = r < rows ? parts_[r] : 0;
            double w = (r < rows ? rowprod_[r] : 1.0) *
                       (c < static_cast<int>(colprod_.size()) ? colprod_[c] : 1.0);
            total += w;
            corner_rows_.push_back(r);
            weights_.push_back(w);
        }
        const double u = rng.next_unit() * total;
        std::size_t pick = 0;
        double cum = weights_[0];
        while (cum <= u && pick + 1 < weights_.size()) cum += weights_[++pick];
        const int r = corner_rows_[pick];
        add_cell_at(r);
        return r;
    }

    const std::vector<int>& parts() const { return parts_; }

private:
    static double ratio(long long h) { return static_cast<double>(h) / static_cast<double>(h + 1); }

    void add_cell_at(int r) {
        if (r == static_cast<int>(parts_.size()))
            parts_.push_back(1);
        else
            ++parts_[r];
        const int c = parts_[r] - 1;
        if (c == static_cast<int>(conj_.size()))
            conj_.push_back(1);
        else
            ++conj_[c];

        if (r == static_cast<int>(rowprod_.size())) rowprod_.push_back(1.0);
        double rp = 1.0;
        for (int j = 0; j <= c; ++j) rp *= ratio(parts_[r] - j + conj_[j] - r - 1);
        rowprod_[r] = rp;

        if (c == static_cast<int>(colprod_.size())) colprod_.push_back(1.0);
        double cp = 1.0;
        for (int i = 0; i < conj_[c]; ++i) cp *= ratio(parts_[i] - c + conj_[c] - i - 1);
        colprod_[c] = cp;

        // Rows crossing column c gained one leg on their cell (r', c).
        for (int i = 0; i < conj_[c]; ++i) {
            if (i == r) continue;
            const long long h = parts_[i] - c + conj_[c] - i - 1;
            rowprod_[i] *= static_cast<double>(h) * static_cast<double>(h) /
                           (static_cast<double>(h + 1) * static_cast<double>(h - 1));
        }
        // Columns crossing row r gained one arm on their cell (r, c').
        for (int j = 0; j < c; ++j) {
            const long long h = parts_[r] - j + conj_[j] - r - 1;
            colprod_[j] *= static_cast<double>(h) * static_cast<double>(h) /
                           (static_cast<double>(h + 1) * static_cast<double>(h - 1));
        }
    }

    std::vector<int> parts_, conj_;
    std::vector<double> rowprod_, colprod_;
    std::vector<int> corner_rows_;
    std::vector<double> weights_;
};

template <class OnStep>
void grow(long long n, bool exact, Rng& rng, OnStep&& on_step) {
    if (exact) {
        ExactGrowth engine;
        for (long long i = 0; i < n; ++i) on_step(engine.step(rng));
    } else {
        FloatGrowth engine;
        for (long long i = 0; i < n; ++i) on_step(engine.step(rng));
    }
}

}  // namespace detail

inline bool growth_uses_exact_weights(long long n) {
    return n <= global_caps().exact_threshold;
}

// Random standard tableau grown cell by cell; the chain of shapes follows
// the filling-count weighted walk. Each (seed, trial) pair is a separate
// substream that replays bit-exactly.
inline GrowthSample sample_growth(long long n, std::uint64_t seed, long long trial = 0) {
    require_cap(n, global_caps().sampling, "sampling");
    if (n < 1) throw validation_error("growth target must be at least one cell");
    Rng rng(seed, static_cast<std::uint64_t>(trial));
    std::vector<std::vector<int>> rows;
    int entry = 0;
    const bool exact = growth_uses_exact_weights(n);
    detail::grow(n, exact, rng, [&](int r) {
        ++entry;
        if (r == static_cast<int>(rows.size()))
            rows.push_back({entry});
        else
            rows[r].push_back(entry);
    });
    return GrowthSample{StandardTableau::from_rows(std::move(rows)), seed, trial, exact};
}

// Shape-only variant for statistics runs; same chain as sample_growth for a
// given (seed, trial), without materializing entries.
inline Partition sample_growth_shape(long long n, std::uint64_t seed, long long trial = 0) {
    require_cap(n, global_caps().sampling, "sampling");
    if (n < 1) throw validation_error("growth target must be at least one cell");
    Rng rng(seed, static_cast<std::uint64_t>(trial));
    std::vector<int> parts;
    detail::grow(n, growth_uses_exact_weights(n), rng, [&](int r) {
        if (r == static_cast<int>(parts.size()))
            parts.push_back(1);
        else
            ++parts[r];
    });
    return Partition(std::move(parts));
}

}  // namespace plab
