#include "qwline/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qwline {

namespace {

constexpr int kMaxOrder = 1000000;

// Below this argument the recurrence factors 2n/tau get uncomfortably close
// to overflow; the first series terms are already exact to ~1e-30 there.
constexpr double kTinyTau = 1e-10;

void check_tau(double tau) {
    if (!(tau >= 0.0) || std::isinf(tau)) {
        throw std::domain_error("Bessel argument must be finite and >= 0");
    }
}

// Starting order for the downward recurrence: comfortably above both the
// requested order and the turning point n ~ tau, so that the arbitrary seed
// has decayed to rounding noise by the time the recurrence reaches the
// answer.
int start_order(int n_need, double tau) {
    const int m = std::max(n_need, static_cast<int>(std::ceil(tau)));
    const int pad =
        static_cast<int>(std::ceil(10.0 * std::sqrt(static_cast<double>(std::max(m, 1)))));
    return m + pad + 20;
}

// One downward pass of f_{n-1} = (2n/tau) f_n - f_{n+1}, normalized at the
// end with the identity J_0 + 2 sum_{m>=1} J_{2m} = 1. Fills out[0..n_store]
// when `out` is given and returns the value at order n_capture (or 0.0 if
// n_capture < 0). Intermediate values are rescaled whenever they threaten to
// overflow; the normalization cancels the rescaling.
double miller_pass(double tau, int n_store, std::vector<double>* out, int n_capture) {
    const int start = start_order(std::max(n_store, n_capture), tau);
    double above = 0.0;   // f_{n+1}
    double here = 1e-30;  // f_n, arbitrary seed at n = start
    double captured = 0.0;
    double norm = 0.0;  // accumulates f_0 + 2 sum f_{2m}

    for (int n = start; n >= 0; --n) {
        if (out != nullptr && n <= n_store) (*out)[static_cast<std::size_t>(n)] = here;
        if (n == n_capture) captured = here;
        if (n % 2 == 0) norm += (n == 0) ? here : 2.0 * here;
        if (n == 0) break;

        const double below = (2.0 * n / tau) * here - above;
        above = here;
        here = below;
        if (std::abs(here) > 1e270) {
            constexpr double scale = 1e-270;
            here *= scale;
            above *= scale;
            norm *= scale;
            captured *= scale;
            if (out != nullptr) {
                for (int j = std::min(n_store, start); j >= n - 1 && j >= 0; --j) {
                    (*out)[static_cast<std::size_t>(j)] *= scale;
                }
            }
        }
    }

    if (!(std::abs(norm) > 0.0)) {
        throw std::runtime_error("Bessel recurrence normalization failed");
    }
    if (out != nullptr) {
        for (int j = 0; j <= n_store; ++j) (*out)[static_cast<std::size_t>(j)] /= norm;
    }
    return captured / norm;
}

}  // namespace

double bessel_j(int n, double tau) {
    check_tau(tau);
    if (n > kMaxOrder || n < -kMaxOrder) {
        throw std::invalid_argument("Bessel order magnitude exceeds 1e6");
    }
    const int m = std::abs(n);
    const double sign = (n < 0 && m % 2 == 1) ? -1.0 : 1.0;  // J_{-n} = (-1)^n J_n
    if (tau < kTinyTau) {
        if (m == 0) return 1.0 - 0.25 * tau * tau;
        if (m == 1) return sign * 0.5 * tau;
        if (m == 2) return 0.125 * tau * tau;
        return 0.0;
    }
    return sign * miller_pass(tau, -1, nullptr, m);
}

std::vector<double> bessel_j_batch(int n_max, double tau) {
    check_tau(tau);
    if (n_max < 0) throw std::invalid_argument("bessel_j_batch requires n_max >= 0");
    if (n_max > kMaxOrder) throw std::invalid_argument("Bessel order magnitude exceeds 1e6");

    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (tau < kTinyTau) {
        out[0] = 1.0 - 0.25 * tau * tau;
        if (n_max >= 1) out[1] = 0.5 * tau;
        if (n_max >= 2) out[2] = 0.125 * tau * tau;
        return out;
    }
    miller_pass(tau, n_max, &out, -1);
    return out;
}

}  // namespace qwline
