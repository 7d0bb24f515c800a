#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "plab/rng.hpp"
#include "plab/series.hpp"
#include "plab/totpos.hpp"

using namespace plab;

namespace {

CoefficientSequence exp_coefficients(int order) {
    std::vector<Rational> c(order + 1);
    BigInt kf = 1;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) kf *= k;
        c[k] = Rational(BigInt(1), kf);
    }
    return CoefficientSequence(std::move(c));
}

// Independent oracle: cofactor expansion along the first row.
Rational cofactor_det(const std::vector<std::vector<Rational>>& a) {
    const std::size_t m = a.size();
    if (m == 1) return a[0][0];
    Rational det = 0;
    int sign = 1;
    for (std::size_t t = 0; t < m; ++t) {
        std::vector<std::vector<Rational>> sub;
        for (std::size_t i = 1; i < m; ++i) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < m; ++j)
                if (j != t) row.push_back(a[i][j]);
            sub.push_back(std::move(row));
        }
        det += sign * a[0][t] * cofactor_det(sub);
        sign = -sign;
    }
    return det;
}

Rational entry(const CoefficientSequence& c, int idx) {
    return idx < 0 ? Rational(0) : c.at(idx);
}

}  // namespace

TEST_CASE("sequence construction and access enforce the window", "[series]") {
    CHECK(CoefficientSequence::zero(3).order() == 3);
    CHECK(CoefficientSequence::one(3).at(0) == 1);
    CHECK(CoefficientSequence::one(3).at(3) == 0);
    CHECK(CoefficientSequence::monomial(Rational(2, 3), 2, 4).at(2) == Rational(2, 3));
    CHECK_THROWS_AS(CoefficientSequence(std::vector<Rational>{}), validation_error);
    CHECK_THROWS_AS(CoefficientSequence::zero(-1), validation_error);
    CHECK_THROWS_AS(CoefficientSequence::zero(global_caps().series_order + 1),
                    resource_limit_error);
    CHECK_THROWS_AS(CoefficientSequence::monomial(1, 5, 4), validation_error);
    CHECK_THROWS_AS(CoefficientSequence::one(3).at(4), validation_error);
    CHECK_THROWS_AS(CoefficientSequence::one(3).at(-1), validation_error);
}

TEST_CASE("arithmetic operates within the shorter window", "[series]") {
    auto a = CoefficientSequence({Rational(1), Rational(2), Rational(3)});
    auto b = CoefficientSequence({Rational(1), Rational(1)});
    CHECK(add(a, b).order() == 1);
    CHECK(add(a, b).at(1) == 3);
    auto p = mul(a, b);
    CHECK(p.at(0) == 1);
    CHECK(p.at(1) == 3);

    auto geo = geometric(Rational(1, 2), 6);
    CHECK(geo.at(4) == Rational(1, 16));
    auto inverse = CoefficientSequence({Rational(1), Rational(-1, 2), Rational(0), Rational(0),
                                        Rational(0), Rational(0), Rational(0)});
    CHECK(mul(geo, inverse) == CoefficientSequence::one(6));

    CHECK(shift(CoefficientSequence::one(4), 2).at(2) == 1);
    CHECK(shift(CoefficientSequence::one(4), 2).at(0) == 0);
    CHECK_THROWS_AS(shift(CoefficientSequence::one(4), -1), validation_error);
}

TEST_CASE("the exponential recurrence reproduces reciprocal factorials", "[series]") {
    auto e = exp_series(CoefficientSequence::monomial(1, 1, 10));
    CHECK(e == exp_coefficients(10));
    CHECK_THROWS_AS(exp_series(CoefficientSequence::one(3)), validation_error);

    // exp turns sums into products.
    auto a = CoefficientSequence({Rational(0), Rational(1, 2), Rational(-1, 3), Rational(2)});
    auto b = CoefficientSequence({Rational(0), Rational(-1, 5), Rational(1), Rational(1, 7)});
    CHECK(exp_series(add(a, b)) == mul(exp_series(a), exp_series(b)));
}

TEST_CASE("minor evaluation matches hand-worked values", "[totpos]") {
    auto perturbed = exp_coefficients(11);
    {
        auto c = perturbed.coefficients();
        c[2] = 1;
        perturbed = CoefficientSequence(std::move(c));
    }
    CHECK(toeplitz_minor(perturbed, {1, 2, 3}, {0, 1, 2}) == Rational(-5, 6));
    CHECK(toeplitz_minor(perturbed, {3, 4}, {0, 1}) == Rational(-1, 72));

    auto small = CoefficientSequence({Rational(1), Rational(1), Rational(2)});
    CHECK(toeplitz_minor(small, {1, 2}, {0, 1}) == -1);
    CHECK(toeplitz_minor(small, {0}, {1}) == 0);
    CHECK(toeplitz_minor(small, {2}, {0}) == 2);

    auto e = exp_coefficients(8);
    CHECK(toeplitz_minor(e, {1, 2, 3}, {0, 1, 2}) == Rational(1, 6));
    CHECK(toeplitz_minor(e, {0, 1, 2}, {0, 1, 2}) == toeplitz_minor(e, {1, 2, 3}, {1, 2, 3}));
}

TEST_CASE("minor evaluation validates its index tuples", "[totpos]") {
    auto e = exp_coefficients(6);
    CHECK_THROWS_AS(toeplitz_minor(e, {}, {}), validation_error);
    CHECK_THROWS_AS(toeplitz_minor(e, {0, 1}, {0}), validation_error);
    CHECK_THROWS_AS(toeplitz_minor(e, {1, 1}, {0, 1}), validation_error);
    CHECK_THROWS_AS(toeplitz_minor(e, {-1}, {0}), validation_error);
    CHECK_THROWS_AS(toeplitz_minor(e, {7}, {0}), validation_error);
    CHECK_THROWS_AS(toeplitz_minor(e, {0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 5, 6}),
                    resource_limit_error);
}

TEST_CASE("fraction-free and cofactor determinants agree", "[totpos]") {
    Rng rng(0x5eedc0deULL, 77);
    for (int round = 0; round < 40; ++round) {
        const int m = 1 + static_cast<int>(rng.next_below(4));
        std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m));
        std::vector<std::vector<Rational>> q(m, std::vector<Rational>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const int v = static_cast<int>(rng.next_below(19)) - 9;
                a[i][j] = v;
                q[i][j] = v;
            }
        CHECK(Rational(detail::bareiss_det(a)) == cofactor_det(q));
    }
}

TEST_CASE("minors agree with a direct rational determinant", "[totpos]") {
    Rng rng(0x5eedc0deULL, 78);
    std::vector<Rational> coeffs;
    for (int k = 0; k <= 9; ++k)
        coeffs.emplace_back(static_cast<int>(rng.next_below(13)) - 4,
                            1 + static_cast<int>(rng.next_below(6)));
    CoefficientSequence c(std::move(coeffs));
    for (int round = 0; round < 25; ++round) {
        const int m = 1 + static_cast<int>(rng.next_below(3));
        std::set<int> row_set, col_set;
        while (static_cast<int>(row_set.size()) < m) row_set.insert(static_cast<int>(rng.next_below(10)));
        while (static_cast<int>(col_set.size()) < m) col_set.insert(static_cast<int>(rng.next_below(10)));
        std::vector<int> rows(row_set.begin(), row_set.end());
        std::vector<int> cols(col_set.begin(), col_set.end());
        std::vector<std::vector<Rational>> q(m, std::vector<Rational>(m));
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t) q[s][t] = entry(c, rows[s] - cols[t]);
        CHECK(toeplitz_minor(c, rows, cols) == cofactor_det(q));
    }
}

TEST_CASE("the positivity sweep clears the exponential sequence", "[totpos]") {
    auto report = check_total_positivity(exp_coefficients(7), 3, 8);
    CHECK(report.totally_positive);
    CHECK_FALSE(report.witness.has_value());
    CHECK(report.minors_checked == 3984);
}

TEST_CASE("the positivity sweep pins the first lexicographic witness", "[totpos]") {
    auto seq = CoefficientSequence({Rational(1), Rational(1), Rational(2), Rational(0),
                                    Rational(0), Rational(0), Rational(0), Rational(0)});
    auto report = check_total_positivity(seq, 2, 8);
    REQUIRE_FALSE(report.totally_positive);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->rows == std::vector<int>{1, 2});
    CHECK(report.witness->cols == std::vector<int>{0, 1});
    CHECK(report.witness->value == -1);
    CHECK(toeplitz_minor(seq, report.witness->rows, report.witness->cols) == report.witness->value);

    auto perturbed = exp_coefficients(11);
    {
        auto c = perturbed.coefficients();
        c[2] = 1;
        perturbed = CoefficientSequence(std::move(c));
    }
    auto pr = check_total_positivity(perturbed, 4, 12);
    REQUIRE_FALSE(pr.totally_positive);
    REQUIRE(pr.witness.has_value());
    CHECK(pr.witness->rows == std::vector<int>{3, 4});
    CHECK(pr.witness->cols == std::vector<int>{0, 1});
    CHECK(pr.witness->value == Rational(-1, 72));
}

TEST_CASE("the positivity sweep validates its ranges", "[totpos]") {
    auto e = exp_coefficients(9);
    CHECK_THROWS_AS(check_total_positivity(e, 0, 5), validation_error);
    CHECK_THROWS_AS(check_total_positivity(e, 3, 2), validation_error);
    CHECK_THROWS_AS(check_total_positivity(e, 2, 11), validation_error);
    CHECK_THROWS_AS(check_total_positivity(e, global_caps().minor_order + 1, 10),
                    resource_limit_error);
    CHECK_THROWS_AS(check_total_positivity(e, 2, global_caps().minor_window + 1),
                    resource_limit_error);
}

TEST_CASE("product-form parameters validate and expand", "[totpos]") {
    ThomaParams pure_alpha{{Rational(1)}, {}, 0, 0};
    auto a = thoma_coefficients(pure_alpha, 5);
    CHECK(a.at(0) == 1);
    CHECK(a.at(1) == 1);
    CHECK(a.at(2) == 0);

    ThomaParams pure_beta{{}, {Rational(1)}, 0, 0};
    auto b = thoma_coefficients(pure_beta, 5);
    for (int k = 0; k <= 5; ++k) CHECK(b.at(k) == 1);

    ThomaParams pure_gamma{{}, {}, 1, 0};
    CHECK(thoma_coefficients(pure_gamma, 8) == exp_coefficients(8));

    ThomaParams shifted{{Rational(1, 2), Rational(1, 4)}, {Rational(1, 8)}, Rational(1, 8), 2};
    auto s = thoma_coefficients(shifted, 6);
    CHECK(s.at(0) == 0);
    CHECK(s.at(1) == 0);
    CHECK(s.at(2) == 1);
    CHECK(s.at(3) == Rational(1, 2) + Rational(1, 4) + Rational(1, 8) + Rational(1, 8));

    CHECK_THROWS_AS(thoma_coefficients(ThomaParams{{Rational(-1, 2)}, {}, Rational(3, 2), 0}, 4),
                    validation_error);
    CHECK_THROWS_AS(
        thoma_coefficients(ThomaParams{{Rational(1, 4), Rational(1, 2)}, {}, Rational(1, 4), 0}, 4),
        validation_error);
    CHECK_THROWS_AS(thoma_coefficients(ThomaParams{{Rational(1, 2)}, {}, Rational(1, 4), 0}, 4),
                    validation_error);
    CHECK_THROWS_AS(thoma_coefficients(ThomaParams{{}, {}, 1, -1}, 4), validation_error);
}

TEST_CASE("geometric character values expand to a squared geometric series", "[totpos]") {
    std::vector<Rational> chi;
    Rational v = 1;
    for (int n = 1; n <= 12; ++n) {
        chi.push_back(v);
        v /= 2;
    }
    auto f = character_gf(chi, 12);
    Rational pow = 1;
    for (int k = 0; k <= 12; ++k) {
        CHECK(f.at(k) == Rational(k + 1) * pow);
        pow /= 2;
    }
}

TEST_CASE("the trivial character expands to the exponential", "[totpos]") {
    auto f = character_gf({Rational(1)}, 10);
    CHECK(f == exp_coefficients(10));
    auto g = thoma_coefficients(ThomaParams{{}, {}, 1, 0}, 10);
    CHECK(f == g);
}
