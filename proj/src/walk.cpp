#include "qwline/walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwline {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_unit_norm(double norm_sq, const char* what) {
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        throw std::invalid_argument(std::string(what) + " is not normalized: |psi|^2 = " +
                                    std::to_string(norm_sq));
    }
}

void validate(const InitialCondition& cond) {
    if (const auto* loc = std::get_if<Localized>(&cond)) {
        check_unit_norm(std::norm(loc->alpha) + std::norm(loc->beta), "localized coin state");
        return;
    }
    if (const auto* pair = std::get_if<SymmetricPair>(&cond)) {
        if (pair->k < 1) throw std::invalid_argument("symmetric pair requires k >= 1");
        if (pair->sign != 1 && pair->sign != -1) {
            throw std::invalid_argument("symmetric pair sign must be +1 or -1");
        }
        return;
    }
    const auto& entries = std::get<Custom>(cond).entries;
    if (entries.empty()) throw std::invalid_argument("custom initial state has no entries");
    double norm_sq = 0.0;
    std::vector<int> xs;
    xs.reserve(entries.size());
    for (const auto& e : entries) {
        xs.push_back(e.x);
        norm_sq += std::norm(e.a) + std::norm(e.b);
    }
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
        throw std::invalid_argument("custom initial state repeats a site position");
    }
    check_unit_norm(norm_sq, "custom initial state");
}

}  // namespace

SiteAmplitudes hadamard(const SiteAmplitudes& s) {
    return {(s.a + s.b) * kInvSqrt2, (s.a - s.b) * kInvSqrt2};
}

int initial_reach(const InitialCondition& cond) {
    if (std::holds_alternative<Localized>(cond)) return 0;
    if (const auto* pair = std::get_if<SymmetricPair>(&cond)) return pair->k;
    const auto& entries = std::get<Custom>(cond).entries;
    int reach = 0;
    for (const auto& e : entries) reach = std::max(reach, std::abs(e.x));
    return reach;
}

WalkState make_initial(const InitialCondition& cond, int capacity_steps) {
    if (capacity_steps < 0) throw std::invalid_argument("capacity_steps must be >= 0");
    validate(cond);

    const int reach = initial_reach(cond);
    WalkState state;
    state.alloc_reach_ = reach + capacity_steps;
    state.front_.assign(2 * (static_cast<std::size_t>(state.alloc_reach_) + 2) + 1,
                        SiteAmplitudes{});
    state.back_ = state.front_;
    state.lo_ = -reach;
    state.hi_ = reach;

    if (const auto* loc = std::get_if<Localized>(&cond)) {
        state.front_[state.idx(0)] = {loc->alpha, loc->beta};
    } else if (const auto* pair = std::get_if<SymmetricPair>(&cond)) {
        // (|L> + i|R>)/sqrt(2) on (|-k> + sign|+k>)/sqrt(2): each occupied
        // site carries amplitudes (i/2, 1/2) up to the relative sign.
        const Complex a0{0.0, 0.5};
        const Complex b0{0.5, 0.0};
        const double sg = static_cast<double>(pair->sign);
        state.front_[state.idx(-pair->k)] = {a0, b0};
        state.front_[state.idx(+pair->k)] = {sg * a0, sg * b0};
    } else {
        for (const auto& e : std::get<Custom>(cond).entries) {
            state.front_[state.idx(e.x)] = {e.a, e.b};
        }
    }
    return state;
}

SiteAmplitudes WalkState::site(int x) const {
    if (x < lo_ || x > hi_) return {};
    return front_[idx(x)];
}

double WalkState::norm_squared() const {
    double sum = 0.0;
    for (int x = lo_; x <= hi_; ++x) {
        const SiteAmplitudes& s = front_[idx(x)];
        sum += std::norm(s.a) + std::norm(s.b);
    }
    return sum;
}

void WalkState::grow(int extra_reach) {
    const int new_reach = alloc_reach_ + extra_reach;
    std::vector<SiteAmplitudes> wider(2 * (static_cast<std::size_t>(new_reach) + 2) + 1,
                                      SiteAmplitudes{});
    const std::size_t shift = static_cast<std::size_t>(new_reach - alloc_reach_);
    for (std::size_t i = 0; i < front_.size(); ++i) wider[i + shift] = front_[i];
    front_ = std::move(wider);
    back_.assign(front_.size(), SiteAmplitudes{});
    alloc_reach_ = new_reach;
}

void WalkState::advance() {
    if (hi_ + 1 > alloc_reach_) grow(std::max(64, alloc_reach_));

    // The support widens by one site per step, so writing [lo_-1, hi_+1]
    // covers every site that can become occupied; back_ is zero outside the
    // support it held two steps ago, which this window always contains.
    for (int x = lo_ - 1; x <= hi_ + 1; ++x) {
        const SiteAmplitudes& from_left = front_[idx(x - 1)];
        const SiteAmplitudes& from_right = front_[idx(x + 1)];
        back_[idx(x)] = {(from_left.a + from_left.b) * kInvSqrt2,
                         (from_right.a - from_right.b) * kInvSqrt2};
    }
    std::swap(front_, back_);
    --lo_;
    ++hi_;
    ++t_;
}

WalkState step(WalkState s) {
    s.advance();
    return s;
}

WalkState evolve(WalkState s, int n) {
    if (n < 0) throw std::invalid_argument("cannot evolve a negative number of steps");
    for (int i = 0; i < n; ++i) s.advance();
    return s;
}

}  // namespace qwline
