#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fgx/fitmetrics.hpp"

using namespace fgx;

namespace {

std::vector<double> random_vector(std::mt19937& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

}  // namespace

TEST_CASE("PairedSeries validation") {
    CHECK_THROWS_AS(PairedSeries({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(PairedSeries({1, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(PairedSeries({1, 2}, {1, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(PairedSeries({1, 2}, {1, 2}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PairedSeries({1, 2}, {1, 2}, {1, -3}), std::invalid_argument);
}

TEST_CASE("hand-evaluated statistics") {
    const PairedSeries a({1, 2, 3}, {1, 2, 4});
    CHECK(sse(a) == 1.0);
    CHECK(sse(PairedSeries({1, 2, 3}, {1, 2, 4}, {2, 2, 2})) == 2.0);

    const PairedSeries b({0, 2}, {1, 1});
    CHECK(b.observed_mean() == 1.0);
    CHECK(ssr(b) == 0.0);
    CHECK(sst(b) == 2.0);
    CHECK(r_square(b) == 0.0);

    CHECK(residuals(PairedSeries({3}, {1})) == std::vector<double>{2});
}

TEST_CASE("perfect fit gives SSE 0 and R-square 1") {
    const std::vector<double> y{0.5, 1.5, -2.0, 7.25};
    const PairedSeries s(y, y);
    CHECK(sse(s) == 0.0);
    CHECK(r_square(s) == 1.0);
    CHECK(ssr(s) == sst(s));
    for (double r : residuals(s)) CHECK(r == 0.0);
}

TEST_CASE("degenerate variance is an explicit error") {
    const PairedSeries s({4, 4, 4}, {1, 2, 3});
    CHECK(sst(s) == 0.0);
    CHECK_THROWS_AS(r_square(s), DegenerateVarianceError);
    CHECK_FALSE(fit_stats(s).r_square.has_value());
}

TEST_CASE("scaling and weights") {
    std::mt19937 rng(8);
    const auto y = random_vector(rng, 50, -3, 3);
    const auto p = random_vector(rng, 50, -3, 3);
    std::vector<double> y3(y);
    for (auto& v : y3) v *= 3.0;
    CHECK(sst(PairedSeries(y3, p)) == doctest::Approx(9.0 * sst(PairedSeries(y, p))).epsilon(1e-12));
    CHECK(sse(PairedSeries(y, p, std::vector<double>(50, 2.0))) ==
          doctest::Approx(2.0 * sse(PairedSeries(y, p))).epsilon(1e-12));

    // Mean-only prediction explains nothing.
    const PairedSeries base(y, p);
    const PairedSeries mean_fit(y, std::vector<double>(50, base.observed_mean()));
    CHECK(ssr(mean_fit) < 1e-20);
    CHECK(std::abs(r_square(mean_fit)) < 1e-12);
}

TEST_CASE("decomposition identity holds for arbitrary predictions") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        const PairedSeries s(random_vector(rng, n, -10, 10), random_vector(rng, n, -10, 10),
                             random_vector(rng, n, 0.1, 5));
        const double total = sst(s);
        const double rebuilt = ssr(s) + sse(s) + cross_term(s);
        CHECK(std::abs(total - rebuilt) <= 1e-9 * std::max(1.0, std::abs(total)));
    }
}

TEST_CASE("sums are permutation invariant") {
    std::mt19937 rng(12);
    auto y = random_vector(rng, 64, 0, 1);
    auto p = random_vector(rng, 64, 0, 1);
    const FitStats a = fit_stats(PairedSeries(y, p));
    std::vector<std::size_t> idx(64);
    for (std::size_t i = 0; i < 64; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<double> y2, p2;
    for (auto i : idx) {
        y2.push_back(y[i]);
        p2.push_back(p[i]);
    }
    const FitStats b = fit_stats(PairedSeries(y2, p2));
    CHECK(a.sse == doctest::Approx(b.sse).epsilon(1e-14));
    CHECK(a.ssr == doctest::Approx(b.ssr).epsilon(1e-14));
    CHECK(a.sst == doctest::Approx(b.sst).epsilon(1e-14));
}

TEST_CASE("least-squares line fixture with R-square 0.8234") {
    // y = 2 + 0.5 x + s e, where e is orthogonal to both 1 and x, so the
    // least-squares line is exactly 2 + 0.5 x and the cross term vanishes.
    // s is chosen so that SSR / (SSR + SSE) = 0.8234.
    const std::vector<double> x{0, 1, 2, 3, 4, 5, 6, 7};
    const std::vector<double> e{1, -1, -1, 1, 1, -1, -1, 1};  // sum 0, sum x e = 0
    double sxx = 0.0;
    for (double v : x) sxx += (v - 3.5) * (v - 3.5);
    const double regression = 0.25 * sxx;
    const double scale = std::sqrt(regression * (1.0 / 0.8234 - 1.0) / 8.0);
    std::vector<double> y, fit;
    for (std::size_t i = 0; i < x.size(); ++i) {
        fit.push_back(2.0 + 0.5 * x[i]);
        y.push_back(fit.back() + scale * e[i]);
    }
    const PairedSeries s(y, fit);
    CHECK(std::abs(cross_term(s)) < 1e-9);
    CHECK(std::abs(sst(s) - (ssr(s) + sse(s))) < 1e-9);
    CHECK(r_square(s) == doctest::Approx(0.8234).epsilon(1e-12));
    CHECK(std::abs(r_square(s) - ssr(s) / sst(s)) < 1e-9);
}

TEST_CASE("sse is zero exactly when observed equals predicted") {
    CHECK(sse(PairedSeries({1, 2, 3}, {1, 2, 3 + 1e-9})) > 0.0);
    CHECK(sse(PairedSeries({1, 2, 3}, {1, 2, 3})) == 0.0);
}

TEST_CASE("compensated summation keeps small terms") {
    CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 1000000; ++i) s.add(1e-16);
    s.add(-1.0);
    CHECK(s.value() == doctest::Approx(1e-10).epsilon(1e-9));
}
