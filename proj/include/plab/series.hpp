#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "plab/config.hpp"
#include "plab/rational.hpp"

namespace plab {

// Power series truncated at a fixed order, rational coefficients c[0..order].
class CoefficientSequence {
public:
    CoefficientSequence() : c_(1, Rational(0)) {}

    explicit CoefficientSequence(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw validation_error("coefficient sequence must have an order-0 term");
        require_cap(order(), global_caps().series_order, "series_order");
    }

    static CoefficientSequence zero(int order) {
        return CoefficientSequence(std::vector<Rational>(check_order(order) + 1, Rational(0)));
    }

    static CoefficientSequence one(int order) {
        auto c = std::vector<Rational>(check_order(order) + 1, Rational(0));
        c[0] = 1;
        return CoefficientSequence(std::move(c));
    }

    static CoefficientSequence monomial(const Rational& a, int degree, int order) {
        auto s = zero(order);
        if (degree < 0 || degree > order) throw validation_error("monomial degree out of range");
        s.c_[degree] = a;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& at(int k) const {
        if (k < 0 || k > order())
            throw validation_error("coefficient index " + std::to_string(k) + " outside stored order " +
                                   std::to_string(order()));
        return c_[k];
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;

private:
    static int check_order(int order) {
        if (order < 0) throw validation_error("order must be nonnegative");
        require_cap(order, global_caps().series_order, "series_order");
        return order;
    }

    std::vector<Rational> c_;
};

inline CoefficientSequence add(const CoefficientSequence& a, const CoefficientSequence& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (int k = 0; k <= order; ++k) c[k] = a.at(k) + b.at(k);
    return CoefficientSequence(std::move(c));
}

inline CoefficientSequence mul(const CoefficientSequence& a, const CoefficientSequence& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1, Rational(0));
    for (int i = 0; i <= order; ++i) {
        if (a.at(i) == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.at(j) == 0) continue;
            c[i + j] += a.at(i) * b.at(j);
        }
    }
    return CoefficientSequence(std::move(c));
}

// exp of a series with zero constant term, via the differential recurrence
// n B_n = sum_{k=1..n} k A_k B_{n-k}.
inline CoefficientSequence exp_series(const CoefficientSequence& a) {
    if (a.at(0) != 0) throw validation_error("exp needs a zero constant term");
    const int order = a.order();
    std::vector<Rational> b(order + 1, Rational(0));
    b[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += k * a.at(k) * b[n - k];
        b[n] = acc / n;
    }
    return CoefficientSequence(std::move(b));
}

// Multiplication by z^m inside the same truncation window.
inline CoefficientSequence shift(const CoefficientSequence& a, int m) {
    if (m < 0) throw validation_error("shift must be nonnegative");
    const int order = a.order();
    std::vector<Rational> c(order + 1, Rational(0));
    for (int k = m; k <= order; ++k) c[k] = a.at(k - m);
    return CoefficientSequence(std::move(c));
}

// 1 / (1 - b z) truncated: the geometric series.
inline CoefficientSequence geometric(const Rational& b, int order) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (int k = 1; k <= order; ++k) c[k] = c[k - 1] * b;
    return CoefficientSequence(std::move(c));
}

inline std::vector<std::string> coefficient_strings(const CoefficientSequence& s) {
    std::vector<std::string> out;
    out.reserve(s.order() + 1);
    for (const Rational& r : s.coefficients()) out.push_back(rational_string(r));
    return out;
}

}  // namespace plab
