#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plab/config.hpp"
#include "plab/rational.hpp"
#include "plab/series.hpp"

namespace plab {

namespace detail {

// Fraction-free determinant; every division is exact.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
    const int m = static_cast<int>(a.size());
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < m; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[m - 1][m - 1] : -a[m - 1][m - 1];
}

inline void check_index_tuple(const std::vector<int>& idx, const char* which) {
    if (idx.empty()) throw validation_error(std::string(which) + " index tuple must be nonempty");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0) throw validation_error(std::string(which) + " indices must be nonnegative");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw validation_error(std::string(which) + " indices must increase strictly");
    }
}

}  // namespace detail

// Minor det || c_{rows[s] - cols[t]} || of the lower-triangular Toeplitz
// matrix of the sequence; negative subscripts read as zero, subscripts past
// the stored order are an error because they are unknown, not zero.
inline Rational toeplitz_minor(const CoefficientSequence& c, const std::vector<int>& rows,
                               const std::vector<int>& cols) {
    detail::check_index_tuple(rows, "row");
    detail::check_index_tuple(cols, "column");
    if (rows.size() != cols.size()) throw validation_error("minor must be square");
    require_cap(static_cast<long long>(rows.size()), global_caps().minor_order, "minor_order");

    const int m = static_cast<int>(rows.size());
    BigInt lcm_den = 1;
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            const int idx = rows[s] - cols[t];
            if (idx > c.order())
                throw validation_error("minor needs coefficient " + std::to_string(idx) +
                                       " beyond stored order " + std::to_string(c.order()));
            if (idx >= 0) lcm_den = lcm(lcm_den, denominator(c.at(idx)));
        }
    std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, BigInt(0)));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            const int idx = rows[s] - cols[t];
            if (idx >= 0) {
                const Rational& e = c.at(idx);
                a[s][t] = numerator(e) * (lcm_den / denominator(e));
            }
        }
    BigInt det = detail::bareiss_det(std::move(a));
    BigInt scale = 1;
    for (int s = 0; s < m; ++s) scale *= lcm_den;
    return Rational(det, scale);
}

struct ToeplitzWitness {
    std::vector<int> rows, cols;
    Rational value;
};

struct TotalPositivityReport {
    bool totally_positive = true;
    int max_order = 0;
    int window = 0;
    long long minors_checked = 0;
    std::optional<ToeplitzWitness> witness;
};

// Sweeps every minor of order 1..max_order with row and column indices
// inside [0, window), in lexicographic order, and stops at the first
// negative value. Exact arithmetic throughout.
inline TotalPositivityReport check_total_positivity(const CoefficientSequence& c, int max_order,
                                                    int window) {
    require_cap(max_order, global_caps().minor_order, "minor_order");
    require_cap(window, global_caps().minor_window, "minor_window");
    if (max_order < 1) throw validation_error("max order must be positive");
    if (window < max_order) throw validation_error("window must admit minors of the given order");
    if (window > c.order() + 1)
        throw validation_error("window " + std::to_string(window) + " needs coefficients up to " +
                               std::to_string(window - 1) + ", beyond stored order " +
                               std::to_string(c.order()));

    TotalPositivityReport report;
    report.max_order = max_order;
    report.window = window;

    auto next_combination = [window](std::vector<int>& idx) -> bool {
        const int m = static_cast<int>(idx.size());
        for (int i = m - 1; i >= 0; --i) {
            if (idx[i] < window - (m - i)) {
                ++idx[i];
                for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    for (int m = 1; m <= max_order; ++m) {
        std::vector<int> rows(m);
        for (int i = 0; i < m; ++i) rows[i] = i;
        do {
            std::vector<int> cols(m);
            for (int i = 0; i < m; ++i) cols[i] = i;
            do {
                Rational v = toeplitz_minor(c, rows, cols);
                ++report.minors_checked;
                if (v < 0) {
                    report.totally_positive = false;
                    report.witness = ToeplitzWitness{rows, cols, v};
                    return report;
                }
            } while (next_combination(cols));
        } while (next_combination(rows));
    }
    return report;
}

// Parameters of the product form z^m e^{gamma z} prod (1 + alpha_i z) / (1 - beta_i z):
// nonnegative, each list weakly decreasing, total mass alpha + beta + gamma = 1.
struct ThomaParams {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    Rational gamma = 0;
    int m = 0;

    void validate() const {
        auto check_list = [](const std::vector<Rational>& v, const char* which) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] < 0) throw validation_error(std::string(which) + " entries must be nonnegative");
                if (i > 0 && v[i] > v[i - 1])
                    throw validation_error(std::string(which) + " entries must be weakly decreasing");
            }
        };
        check_list(alpha, "alpha");
        check_list(beta, "beta");
        if (gamma < 0) throw validation_error("gamma must be nonnegative");
        if (m < 0) throw validation_error("leading power must be nonnegative");
        Rational total = gamma;
        for (const Rational& a : alpha) total += a;
        for (const Rational& b : beta) total += b;
        if (total != 1)
            throw validation_error("alpha + beta + gamma must sum to one, got " + rational_string(total));
    }
};

// Coefficient sequence of the product form, truncated at the given order.
inline CoefficientSequence thoma_coefficients(const ThomaParams& params, int order) {
    params.validate();
    CoefficientSequence f = CoefficientSequence::one(order);
    for (const Rational& a : params.alpha)
        f = mul(f, add(CoefficientSequence::one(order), CoefficientSequence::monomial(a, 1, order)));
    for (const Rational& b : params.beta) f = mul(f, geometric(b, order));
    if (params.gamma != 0)
        f = mul(f, exp_series(CoefficientSequence::monomial(params.gamma, 1, order)));
    if (params.m > 0) f = shift(f, params.m);
    return f;
}

// Generating function exp(sum_n chi(n) z^n / n) from the values chi(1..L);
// values beyond the list are zero.
inline CoefficientSequence character_gf(const std::vector<Rational>& chi, int order) {
    CoefficientSequence a = CoefficientSequence::zero(order);
    std::vector<Rational> c(order + 1, Rational(0));
    for (int n = 1; n <= order && n <= static_cast<int>(chi.size()); ++n)
        c[n] = chi[n - 1] / n;
    return exp_series(CoefficientSequence(std::move(c)));
}

}  // namespace plab
