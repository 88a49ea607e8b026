#include "qwline/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwline {

namespace {

double site_prob(const SiteAmplitudes& s) { return std::norm(s.a) + std::norm(s.b); }

// -p log2 p with the 0 log 0 = 0 convention.
double entropy_term(double p) {
    if (p <= 0.0) return 0.0;
    return -p * std::log2(p);
}

}  // namespace

double ProbabilityProfile::at(int x) const {
    const long long i = static_cast<long long>(x) - x_min;
    if (i < 0 || i >= static_cast<long long>(p.size())) return 0.0;
    return p[static_cast<std::size_t>(i)];
}

double ProbabilityProfile::max_p() const {
    if (p.empty()) return 0.0;
    return *std::max_element(p.begin(), p.end());
}

ProbabilityProfile probability_profile(const WalkState& state) {
    ProbabilityProfile prof;
    prof.t = state.time();
    prof.x_min = state.support_min();
    prof.p.reserve(static_cast<std::size_t>(state.support_max() - state.support_min()) + 1);
    for (int x = state.support_min(); x <= state.support_max(); ++x) {
        prof.p.push_back(site_prob(state.site(x)));
    }
    return prof;
}

double survival(const WalkState& state, int s) {
    if (s < 0) throw std::invalid_argument("survival radius must be >= 0");
    const int lo = std::max(-s, state.support_min());
    const int hi = std::min(s, state.support_max());
    double sum = 0.0;
    for (int x = lo; x <= hi; ++x) sum += site_prob(state.site(x));
    return sum;
}

double variance(const WalkState& state) {
    double mean = 0.0, second = 0.0;
    for (int x = state.support_min(); x <= state.support_max(); ++x) {
        const double p = site_prob(state.site(x));
        const double xd = static_cast<double>(x);
        mean += xd * p;
        second += xd * xd * p;
    }
    return second - mean * mean;
}

std::array<double, 2> CoinDensityMatrix::eigenvalues() const {
    const double trace = m[0][0].real() + m[1][1].real();
    const double diff = m[0][0].real() - m[1][1].real();
    const double disc = std::sqrt(diff * diff + 4.0 * std::norm(m[0][1]));
    const auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
    return {clamp01(0.5 * (trace + disc)), clamp01(0.5 * (trace - disc))};
}

CoinDensityMatrix coin_density(const WalkState& state) {
    Complex rr{0.0, 0.0}, rl{0.0, 0.0}, ll{0.0, 0.0};
    for (int x = state.support_min(); x <= state.support_max(); ++x) {
        const SiteAmplitudes s = state.site(x);
        rr += s.a * std::conj(s.a);
        rl += s.a * std::conj(s.b);
        ll += s.b * std::conj(s.b);
    }
    CoinDensityMatrix rho;
    rho.m[0][0] = rr;
    rho.m[0][1] = rl;
    rho.m[1][0] = std::conj(rl);
    rho.m[1][1] = ll;
    return rho;
}

double entanglement_entropy(const CoinDensityMatrix& rho) {
    constexpr double tol = 1e-9;
    const Complex off_mismatch = rho.m[0][1] - std::conj(rho.m[1][0]);
    if (std::abs(off_mismatch) > tol || std::abs(rho.m[0][0].imag()) > tol ||
        std::abs(rho.m[1][1].imag()) > tol) {
        throw std::invalid_argument("coin density matrix is not Hermitian");
    }
    const double trace = rho.m[0][0].real() + rho.m[1][1].real();
    if (std::abs(trace - 1.0) > tol) {
        throw std::invalid_argument("coin density matrix trace differs from 1");
    }
    const auto lambda = rho.eigenvalues();
    return entropy_term(lambda[0]) + entropy_term(lambda[1]);
}

double asymptotic_entropy(const TimeSeries& entropy_series, int t_min, int t_max) {
    if (t_min > t_max) {
        throw std::invalid_argument("entropy averaging window must satisfy t_min <= t_max");
    }
    double sum = 0.0;
    std::size_t count = 0;
    for (const Sample& s : entropy_series.samples()) {
        if (s.t >= t_min && s.t <= t_max) {
            sum += s.value;
            ++count;
        }
    }
    if (count == 0) {
        throw std::invalid_argument("entropy averaging window contains no samples");
    }
    return sum / static_cast<double>(count);
}

}  // namespace qwline
