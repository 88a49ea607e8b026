#include "qwline/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwline/bessel.hpp"

namespace qwline {

namespace {

double parity_sign(int y) { return (y % 2 != 0) ? -1.0 : 1.0; }  // (-1)^y

void check_time(int t) {
    if (t < 1) throw std::domain_error("closed-form distribution requires t >= 1");
}

void check_pair_params(int k, int sign) {
    if (k < 1) throw std::invalid_argument("symmetric pair requires k >= 1");
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("symmetric pair sign must be +1 or -1");
    }
}

double scaled_time(int t) { return static_cast<double>(t) / std::numbers::sqrt2; }

}  // namespace

AnalyticInitial::AnalyticInitial(std::vector<AnalyticEntry> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("analytic initial state has no entries");
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const AnalyticEntry& l, const AnalyticEntry& r) { return l.site < r.site; });
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0 && entries_[i].site == entries_[i - 1].site) {
            throw std::invalid_argument("analytic initial state repeats a site position");
        }
        norm_sq += std::norm(entries_[i].a) + std::norm(entries_[i].b);
    }
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        throw std::invalid_argument("analytic initial state is not normalized");
    }
}

AnalyticInitial to_analytic(const InitialCondition& cond) {
    if (const auto* loc = std::get_if<Localized>(&cond)) {
        return AnalyticInitial({{0, loc->alpha, loc->beta}});
    }
    if (const auto* pair = std::get_if<SymmetricPair>(&cond)) {
        check_pair_params(pair->k, pair->sign);
        const Complex a0{0.0, 0.5};
        const Complex b0{0.5, 0.0};
        const double sg = static_cast<double>(pair->sign);
        return AnalyticInitial({{-pair->k, a0, b0}, {+pair->k, sg * a0, sg * b0}});
    }
    std::vector<AnalyticEntry> entries;
    for (const auto& e : std::get<Custom>(cond).entries) entries.push_back({e.x, e.a, e.b});
    return AnalyticInitial(std::move(entries));
}

double analytic_prob(int x, int t, const AnalyticInitial& init) {
    check_time(t);
    const double tau = scaled_time(t);

    // The double sum over (y, y') factors into a product of two single sums,
    // one per coin component, which keeps the result manifestly real:
    //   P_x = |sum_y (-1)^y a_y J_{x-y}|^2 + |sum_y (-1)^y b_y J_{x-y}|^2.
    Complex coeff_a{0.0, 0.0};
    Complex coeff_b{0.0, 0.0};
    for (const AnalyticEntry& e : init.entries()) {
        const double weight = parity_sign(e.site) * bessel_j(x - e.site, tau);
        coeff_a += weight * e.a;
        coeff_b += weight * e.b;
    }
    return std::norm(coeff_a) + std::norm(coeff_b);
}

double analytic_prob_pair(int x, int t, int k, int sign) {
    check_pair_params(k, sign);
    check_time(t);
    const double tau = scaled_time(t);
    const double combo = bessel_j(x + k, tau) + sign * bessel_j(x - k, tau);
    return 0.5 * combo * combo;
}

double analytic_survival(int t, int s, const AnalyticInitial& init) {
    if (s < 0) throw std::invalid_argument("survival radius must be >= 0");
    check_time(t);
    double sum = 0.0;
    for (int x = -s; x <= s; ++x) sum += analytic_prob(x, t, init);
    return sum;
}

double analytic_survival_pair(int t, int s, int k, int sign) {
    if (s < 0) throw std::invalid_argument("survival radius must be >= 0");
    check_pair_params(k, sign);
    check_time(t);
    double sum = 0.0;
    for (int x = -s; x <= s; ++x) sum += analytic_prob_pair(x, t, k, sign);
    return sum;
}

int asymptotic_survival_exponent(int k, int sign) {
    check_pair_params(k, sign);
    const bool odd_k = k % 2 != 0;
    const bool plus = sign == 1;
    return (odd_k == plus) ? -3 : -1;
}

}  // namespace qwline
