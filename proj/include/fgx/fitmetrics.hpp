#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fgx {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

// Observed values y, predictions y-hat and per-point weights w (default 1).
// All three share one length n >= 1 and every weight is positive.
class PairedSeries {
public:
    PairedSeries(std::vector<double> observed, std::vector<double> predicted);
    PairedSeries(std::vector<double> observed, std::vector<double> predicted, std::vector<double> weights);

    std::size_t size() const noexcept { return observed_.size(); }
    std::span<const double> observed() const noexcept { return observed_; }
    std::span<const double> predicted() const noexcept { return predicted_; }
    std::span<const double> weights() const noexcept { return weights_; }

    // Weighted mean of the observations, sum(w y) / sum(w).
    double observed_mean() const noexcept;

private:
    std::vector<double> observed_;
    std::vector<double> predicted_;
    std::vector<double> weights_;
};

class DegenerateVarianceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

double sse(const PairedSeries& s);
double ssr(const PairedSeries& s);
double sst(const PairedSeries& s);

// 2 sum w (y-hat - mean)(y - y-hat); SST = SSR + SSE + cross_term for any input.
double cross_term(const PairedSeries& s);

// 1 - SSE/SST. Throws DegenerateVarianceError when SST is zero.
double r_square(const PairedSeries& s);

std::vector<double> residuals(const PairedSeries& s);

struct FitStats {
    double sse = 0.0;
    double ssr = 0.0;
    double sst = 0.0;
    std::optional<double> r_square;  // empty when SST == 0
    std::vector<double> residuals;
};

FitStats fit_stats(const PairedSeries& s);

}  // namespace fgx
