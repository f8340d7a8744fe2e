#include "fgx/fitmetrics.hpp"

#include <cmath>
#include <string>

namespace fgx {

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        carry_ += (sum_ - t) + x;
    else
        carry_ += (x - t) + sum_;
    sum_ = t;
}

PairedSeries::PairedSeries(std::vector<double> observed, std::vector<double> predicted)
    : PairedSeries(observed, std::move(predicted), std::vector<double>(observed.size(), 1.0)) {}

PairedSeries::PairedSeries(std::vector<double> observed, std::vector<double> predicted, std::vector<double> weights)
    : observed_(std::move(observed)), predicted_(std::move(predicted)), weights_(std::move(weights)) {
    if (observed_.empty()) throw std::invalid_argument("series must contain at least one value");
    if (predicted_.size() != observed_.size() || weights_.size() != observed_.size())
        throw std::invalid_argument("series length mismatch: observed=" + std::to_string(observed_.size()) +
                                    " predicted=" + std::to_string(predicted_.size()) +
                                    " weights=" + std::to_string(weights_.size()));
    for (double w : weights_)
        if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be positive and finite");
}

double PairedSeries::observed_mean() const noexcept {
    CompensatedSum num;
    CompensatedSum den;
    for (std::size_t i = 0; i < observed_.size(); ++i) {
        num.add(weights_[i] * observed_[i]);
        den.add(weights_[i]);
    }
    return num.value() / den.value();
}

double sse(const PairedSeries& s) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double e = s.observed()[i] - s.predicted()[i];
        acc.add(s.weights()[i] * e * e);
    }
    return acc.value();
}

double ssr(const PairedSeries& s) {
    const double mean = s.observed_mean();
    CompensatedSum acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d = s.predicted()[i] - mean;
        acc.add(s.weights()[i] * d * d);
    }
    return acc.value();
}

double sst(const PairedSeries& s) {
    const double mean = s.observed_mean();
    CompensatedSum acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d = s.observed()[i] - mean;
        acc.add(s.weights()[i] * d * d);
    }
    return acc.value();
}

double cross_term(const PairedSeries& s) {
    const double mean = s.observed_mean();
    CompensatedSum acc;
    for (std::size_t i = 0; i < s.size(); ++i)
        acc.add(s.weights()[i] * (s.predicted()[i] - mean) * (s.observed()[i] - s.predicted()[i]));
    return 2.0 * acc.value();
}

double r_square(const PairedSeries& s) {
    const double total = sst(s);
    if (!(total > 0.0)) throw DegenerateVarianceError("R-square undefined: observed data has zero variance");
    return 1.0 - sse(s) / total;
}

std::vector<double> residuals(const PairedSeries& s) {
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s.observed()[i] - s.predicted()[i];
    return out;
}

FitStats fit_stats(const PairedSeries& s) {
    FitStats st;
    st.sse = sse(s);
    st.ssr = ssr(s);
    st.sst = sst(s);
    if (st.sst > 0.0) st.r_square = 1.0 - st.sse / st.sst;
    st.residuals = residuals(s);
    return st;
}

}  // namespace fgx
