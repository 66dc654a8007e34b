#include <catch2/catch_amalgamated.hpp>

#include "cftl/core.hpp"
#include "cftl/rng.hpp"
#include "oracles.hpp"

using namespace cftl;

TEST_CASE("frequency registry matches the task table") {
    CHECK(Frequency::of(FrequencyKind::Yearly).seasonal_period == 1);
    CHECK(Frequency::of(FrequencyKind::Quarterly).seasonal_period == 4);
    CHECK(Frequency::of(FrequencyKind::Monthly).seasonal_period == 12);
    CHECK(Frequency::of(FrequencyKind::Weekly).seasonal_period == 1);
    CHECK(Frequency::of(FrequencyKind::Daily).seasonal_period == 1);
    CHECK(Frequency::of(FrequencyKind::Hourly).seasonal_period == 24);
    CHECK(Frequency::of(FrequencyKind::Other).seasonal_period == 4);
}

TEST_CASE("split_train_test keeps the last H values as test") {
    TimeSeries s{"a", Frequency::of(FrequencyKind::Monthly), {1, 2, 3, 4, 5}, 0};
    auto [train, test] = split_train_test(s, SplitSpec{2});
    CHECK(train.values == std::vector<double>{1, 2, 3});
    CHECK(test == std::vector<double>{4, 5});
    CHECK(train.id == "a");
}

TEST_CASE("split_train_test rejects series that would leave no train part") {
    TimeSeries s{"a", Frequency::of(FrequencyKind::Yearly), {7}, 0};
    CHECK_THROWS_AS(split_train_test(s, SplitSpec{1}), SplitError);
    TimeSeries t{"b", Frequency::of(FrequencyKind::Yearly), {7, 8}, 0};
    CHECK_THROWS_AS(split_train_test(t, SplitSpec{2}), SplitError);
}

TEST_CASE("split of an M3-monthly-sized series") {
    // Min length 66 at horizon 18 leaves 48 training observations.
    TimeSeries s{"m3", Frequency::of(FrequencyKind::Monthly), std::vector<double>(66, 1.0), 0};
    auto [train, test] = split_train_test(s, SplitSpec{18});
    CHECK(train.values.size() == 48);
    CHECK(test.size() == 18);
}

TEST_CASE("split round-trip reproduces the input exactly") {
    Rng rng(42);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = (int)rng.uniform_int(2, 200);
        const int h = (int)rng.uniform_int(1, n - 1);
        TimeSeries s{"r", Frequency::of(FrequencyKind::Daily), {}, 0};
        for (int i = 0; i < n; ++i) s.values.push_back(rng.normal(0, 100));
        auto [train, test] = split_train_test(s, SplitSpec{h});
        std::vector<double> joined = train.values;
        joined.insert(joined.end(), test.begin(), test.end());
        CHECK(joined == s.values);
    }
}

TEST_CASE("normal_ppf frozen values from the erf oracle") {
    CHECK(normal_ppf(0.5) == Catch::Approx(0.0).margin(1e-12));
    CHECK(normal_ppf(0.975) == Catch::Approx(1.959964).margin(5e-7));
    CHECK(normal_ppf(0.1) == Catch::Approx(-1.281552).margin(5e-7));
    // Full-precision comparison against bisection on the series CDF.
    for (double q : {0.001, 0.01, 0.025, 0.1, 0.25, 0.5, 0.6, 0.9, 0.975, 0.999}) {
        CHECK(normal_ppf(q) == Catch::Approx(oracle::normal_ppf_bisect(q)).margin(1e-10));
    }
}

TEST_CASE("normal_ppf meets the 1e-9 CDF contract") {
    for (int i = 1; i <= 999; ++i) {
        const double q = i / 1000.0;
        const double z = normal_ppf(q);
        CHECK(std::fabs((double)oracle::normal_cdf_hp(z) - q) <= 1e-9);
    }
}

TEST_CASE("normal_ppf domain errors") {
    CHECK_THROWS_AS(normal_ppf(0.0), DomainError);
    CHECK_THROWS_AS(normal_ppf(1.0), DomainError);
    CHECK_THROWS_AS(normal_ppf(-0.3), DomainError);
}

TEST_CASE("normal_ppf symmetry") {
    for (int i = 1; i <= 499; ++i) {
        const double q = i / 1000.0;
        CHECK(normal_ppf(q) == Catch::Approx(-normal_ppf(1.0 - q)).margin(1e-12));
    }
}

TEST_CASE("gaussian_to_quantiles point values") {
    QuantileGrid g5(std::vector<double>{0.5});
    auto f = gaussian_to_quantiles(GaussianForecast{{2.5}, {1.0}}, g5);
    CHECK(f.values[0][0] == Catch::Approx(2.5).margin(1e-12));

    QuantileGrid g975(std::vector<double>{0.975});
    auto f2 = gaussian_to_quantiles(GaussianForecast{{0.0}, {4.0}}, g975);
    CHECK(f2.values[0][0] == Catch::Approx(3.919928).margin(1e-5));

    auto any = QuantileGrid::percentiles(9);
    auto f3 = gaussian_to_quantiles(GaussianForecast{{1.0, 1.0}, {0.0, 0.0}}, any);
    for (const auto& row : f3.values)
        for (double v : row) CHECK(v == 1.0);
}

TEST_CASE("gaussian_to_quantiles rows are monotone for random gaussians") {
    Rng rng(7);
    auto grid = QuantileGrid::percentiles(99);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t h = (std::size_t)rng.uniform_int(1, 12);
        GaussianForecast f;
        for (std::size_t i = 0; i < h; ++i) {
            f.mean.push_back(rng.normal(0, 50));
            f.variance.push_back(rng.uniform() < 0.1 ? 0.0 : rng.log_uniform(1e-6, 1e4));
        }
        auto qf = gaussian_to_quantiles(f, grid);
        REQUIRE_NOTHROW(validate(qf, grid));
    }
}

TEST_CASE("quantile grid validation") {
    CHECK_THROWS_AS(QuantileGrid(std::vector<double>{}), DomainError);
    CHECK_THROWS_AS(QuantileGrid(std::vector<double>{0.2, 0.2}), DomainError);
    CHECK_THROWS_AS(QuantileGrid(std::vector<double>{0.0, 0.5}), DomainError);
    CHECK_THROWS_AS(QuantileGrid(std::vector<double>{0.5, 1.0}), DomainError);
    auto g = QuantileGrid::percentiles(99);
    CHECK(g.size() == 99);
    CHECK(g[0] == Catch::Approx(0.01));
    CHECK(g[49] == Catch::Approx(0.50));
    CHECK(g[98] == Catch::Approx(0.99));
}

TEST_CASE("series and dataset validation") {
    TimeSeries empty{"e", Frequency::of(FrequencyKind::Daily), {}, 0};
    CHECK_THROWS_AS(validate(empty), DomainError);
    TimeSeries with_nan{"n", Frequency::of(FrequencyKind::Daily), {1.0, std::nan("")}, 0};
    CHECK_THROWS_AS(validate(with_nan), DomainError);

    Dataset d{"d", Frequency::of(FrequencyKind::Daily), 3, {}};
    d.series.push_back(TimeSeries{"x", Frequency::of(FrequencyKind::Monthly), {1, 2}, 0});
    CHECK_THROWS_AS(validate(d), DomainError);
}
