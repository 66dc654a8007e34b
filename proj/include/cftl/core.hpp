#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cftl/errors.hpp"

// Domain types shared by every other module: frequencies with their seasonal
// periods, identified value sequences, forecast containers, the train/test
// split and the Gaussian -> quantile conversion. All types are immutable
// after construction and safe to share across threads; operations are pure.

namespace cftl {

enum class FrequencyKind { Yearly, Quarterly, Monthly, Weekly, Daily, Hourly, Other };

/// Sampling frequency of a series plus the seasonal period m used by
/// seasonal models and the MASE denominator.
struct Frequency {
    FrequencyKind kind = FrequencyKind::Other;
    int seasonal_period = 4;

    static int default_period(FrequencyKind k) {
        switch (k) {
            case FrequencyKind::Yearly: return 1;
            case FrequencyKind::Quarterly: return 4;
            case FrequencyKind::Monthly: return 12;
            case FrequencyKind::Weekly: return 1;
            case FrequencyKind::Daily: return 1;
            case FrequencyKind::Hourly: return 24;
            case FrequencyKind::Other: return 4;
        }
        return 1;
    }

    static Frequency of(FrequencyKind k) { return Frequency{k, default_period(k)}; }

    friend bool operator==(const Frequency& a, const Frequency& b) = default;
};

inline const char* to_string(FrequencyKind k) {
    switch (k) {
        case FrequencyKind::Yearly: return "yearly";
        case FrequencyKind::Quarterly: return "quarterly";
        case FrequencyKind::Monthly: return "monthly";
        case FrequencyKind::Weekly: return "weekly";
        case FrequencyKind::Daily: return "daily";
        case FrequencyKind::Hourly: return "hourly";
        case FrequencyKind::Other: return "other";
    }
    return "other";
}

inline FrequencyKind frequency_kind_from_string(const std::string& s) {
    if (s == "yearly") return FrequencyKind::Yearly;
    if (s == "quarterly") return FrequencyKind::Quarterly;
    if (s == "monthly") return FrequencyKind::Monthly;
    if (s == "weekly") return FrequencyKind::Weekly;
    if (s == "daily") return FrequencyKind::Daily;
    if (s == "hourly") return FrequencyKind::Hourly;
    if (s == "other") return FrequencyKind::Other;
    throw DomainError("unknown frequency: " + s);
}

/// One univariate series. Time coordinates are plain integer indices;
/// calendar timestamps are parsed at ingestion and discarded.
struct TimeSeries {
    std::string id;
    Frequency frequency;
    std::vector<double> values;
    std::int64_t start_index = 0;

    std::size_t size() const { return values.size(); }
};

inline void validate(const TimeSeries& s) {
    if (s.values.empty()) throw DomainError("series '" + s.id + "' is empty");
    for (double v : s.values) {
        if (!std::isfinite(v)) throw DomainError("series '" + s.id + "' has non-finite value");
    }
}

/// A named collection of series sharing one frequency and forecast horizon.
struct Dataset {
    std::string name;
    Frequency frequency;
    int horizon = 1;
    std::vector<TimeSeries> series;
};

inline void validate(const Dataset& d) {
    if (d.horizon <= 0) throw DomainError("dataset '" + d.name + "' has non-positive horizon");
    for (const auto& s : d.series) {
        validate(s);
        if (!(s.frequency == d.frequency))
            throw DomainError("series '" + s.id + "' frequency differs from dataset '" + d.name + "'");
    }
}

/// Strictly increasing probabilities in (0,1) at which quantile forecasts
/// are emitted and scored.
class QuantileGrid {
public:
    explicit QuantileGrid(std::vector<double> probs) : probs_(std::move(probs)) {
        if (probs_.empty()) throw DomainError("quantile grid is empty");
        double prev = 0.0;
        for (double p : probs_) {
            if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile grid prob outside (0,1)");
            if (!(p > prev)) throw DomainError("quantile grid not strictly increasing");
            prev = p;
        }
    }

    /// Evenly spaced grid {1/(k+1), ..., k/(k+1)}; percentiles(99) is the
    /// default scoring grid {0.01, ..., 0.99}.
    static QuantileGrid percentiles(int k) {
        if (k <= 0) throw DomainError("grid size must be positive");
        std::vector<double> p(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i) p[static_cast<std::size_t>(i - 1)] = double(i) / double(k + 1);
        return QuantileGrid(std::move(p));
    }

    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }

private:
    std::vector<double> probs_;
};

/// Per-horizon mean and variance, the native output of the statistical
/// models and their ensemble.
struct GaussianForecast {
    std::vector<double> mean;
    std::vector<double> variance;

    std::size_t horizon() const { return mean.size(); }
};

inline void validate(const GaussianForecast& f) {
    if (f.mean.size() != f.variance.size()) throw ShapeError("gaussian forecast mean/variance length mismatch");
    if (f.mean.empty()) throw ShapeError("gaussian forecast is empty");
    for (double m : f.mean)
        if (!std::isfinite(m)) throw DomainError("gaussian forecast mean non-finite");
    for (double v : f.variance) {
        if (!std::isfinite(v)) throw DomainError("gaussian forecast variance non-finite");
        if (v < 0.0) throw DomainError("gaussian forecast variance negative");
    }
}

/// H x K matrix of forecast values at the grid probabilities; every horizon
/// row is non-decreasing across the grid.
struct QuantileForecast {
    std::vector<std::vector<double>> values;  // [h][k]

    std::size_t horizon() const { return values.size(); }
};

inline void validate(const QuantileForecast& f, const QuantileGrid& grid) {
    for (const auto& row : f.values) {
        if (row.size() != grid.size()) throw ShapeError("quantile row length differs from grid");
        for (std::size_t k = 0; k + 1 < row.size(); ++k)
            if (row[k] > row[k + 1]) throw DomainError("quantile row not monotone");
    }
}

/// Suffix-holdout split: the last `horizon` observations form the test
/// window; `validation_len` observations before it may be held out during
/// neural pre-training.
struct SplitSpec {
    int horizon = 1;
    int validation_len = 24;
};

/// Splits one series into train prefix and the length-H test suffix.
/// Concatenating the parts reproduces the input exactly.
inline std::pair<TimeSeries, std::vector<double>> split_train_test(const TimeSeries& series,
                                                                   const SplitSpec& spec) {
    const std::size_t n = series.values.size();
    const auto h = static_cast<std::size_t>(spec.horizon);
    if (spec.horizon <= 0) throw SplitError("split horizon must be positive");
    if (n <= h) throw SplitError("series '" + series.id + "' too short to split: length " +
                                 std::to_string(n) + " <= horizon " + std::to_string(h));
    TimeSeries train{series.id, series.frequency,
                     std::vector<double>(series.values.begin(), series.values.end() - static_cast<std::ptrdiff_t>(h)),
                     series.start_index};
    std::vector<double> test(series.values.end() - static_cast<std::ptrdiff_t>(h), series.values.end());
    return {std::move(train), std::move(test)};
}

/// Standard normal CDF.
inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

/// Standard normal density.
inline double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * 3.14159265358979323846);
}

/// Percent point function (inverse CDF) of the standard normal.
///
/// Rational approximation refined by one Newton step on the CDF, giving
/// |Phi(z) - q| <= 1e-9 across (0,1).
inline double normal_ppf(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("normal_ppf requires q in (0,1)");

    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    static constexpr double p_low = 0.02425;

    double z;
    if (q < p_low) {
        const double u = std::sqrt(-2.0 * std::log(q));
        z = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    } else if (q <= 1.0 - p_low) {
        const double r = q - 0.5;
        const double u = r * r;
        z = r * (((((a[0] * u + a[1]) * u + a[2]) * u + a[3]) * u + a[4]) * u + a[5]) /
            (((((b[0] * u + b[1]) * u + b[2]) * u + b[3]) * u + b[4]) * u + 1.0);
    } else {
        const double u = std::sqrt(-2.0 * std::log(1.0 - q));
        z = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }

    // One Newton step on Phi(z) = q.
    const double density = normal_pdf(z);
    if (density > 0.0) z -= (normal_cdf(z) - q) / density;
    return z;
}

/// Per-horizon quantiles of a Gaussian forecast: mean + sd * z(q). Rows are
/// monotone by construction; zero variance yields constant rows.
inline QuantileForecast gaussian_to_quantiles(const GaussianForecast& f, const QuantileGrid& grid) {
    validate(f);
    std::vector<double> z(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) z[k] = normal_ppf(grid[k]);

    QuantileForecast out;
    out.values.resize(f.mean.size());
    for (std::size_t h = 0; h < f.mean.size(); ++h) {
        const double sd = std::sqrt(f.variance[h]);
        auto& row = out.values[h];
        row.resize(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) row[k] = f.mean[h] + sd * z[k];
    }
    return out;
}

}  // namespace cftl
