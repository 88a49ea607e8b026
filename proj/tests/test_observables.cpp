#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qwline/observables.hpp"
#include "qwline/walk.hpp"

using namespace qwline;

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

WalkState two_step_right_walker() {
    // |R> at the origin, evolved two steps: probabilities 1/4, 1/2, 1/4 at
    // x = -2, 0, +2.
    return evolve(make_initial(Localized{Complex(1.0, 0.0), Complex(0.0, 0.0)}, 4), 2);
}

}  // namespace

TEST_CASE("probability profile matches the hand-computed two-step table") {
    const ProbabilityProfile prof = probability_profile(two_step_right_walker());
    CHECK(prof.t == 2);
    CHECK(prof.x_min == -2);
    REQUIRE(prof.p.size() == 5);
    CHECK(prof.at(-2) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(prof.at(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(prof.at(2) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(prof.at(1) == 0.0);
    CHECK(prof.at(100) == 0.0);
    CHECK(prof.at(-100) == 0.0);
    CHECK(prof.max_p() == doctest::Approx(0.5).epsilon(1e-14));

    double total = 0.0;
    for (const double p : prof.p) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("survival counts probability inside [-s, s]") {
    const WalkState state = two_step_right_walker();
    CHECK(survival(state, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(survival(state, 1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(survival(state, 2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(survival(state, 1000) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(survival(state, -1), std::invalid_argument);
}

TEST_CASE("variance of the two-step profile") {
    // E[x] = 0, E[x^2] = 4*(1/4) + 0 + 4*(1/4) = 2.
    CHECK(variance(two_step_right_walker()) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("coin density of a product state is pure") {
    const Complex alpha(0.0, kInvSqrt2);
    const Complex beta(kInvSqrt2, 0.0);
    const WalkState state = make_initial(Localized{alpha, beta}, 0);
    const CoinDensityMatrix rho = coin_density(state);

    CHECK(std::abs(rho.m[0][0] - Complex(0.5, 0.0)) <= 1e-14);
    CHECK(std::abs(rho.m[1][1] - Complex(0.5, 0.0)) <= 1e-14);
    CHECK(std::abs(rho.m[0][1] - alpha * std::conj(beta)) <= 1e-14);
    CHECK(std::abs(rho.m[1][0] - std::conj(rho.m[0][1])) <= 1e-15);

    const auto lambda = rho.eigenvalues();
    CHECK(lambda[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lambda[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(entanglement_entropy(rho) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("one step of the default walker maximally entangles the coin") {
    // After one step a sits only at x=+1 and b only at x=-1, so the coin
    // density matrix is diag(1/2, 1/2): exactly one bit of entropy.
    const WalkState state =
        evolve(make_initial(Localized{Complex(0.0, kInvSqrt2), Complex(kInvSqrt2, 0.0)}, 2), 1);
    const CoinDensityMatrix rho = coin_density(state);
    CHECK(std::abs(rho.m[0][1]) <= 1e-15);
    CHECK(entanglement_entropy(rho) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two disjoint branches give the maximally mixed coin") {
    Custom custom;
    custom.entries.push_back({0, Complex(kInvSqrt2, 0.0), Complex(0.0, 0.0)});
    custom.entries.push_back({2, Complex(0.0, 0.0), Complex(kInvSqrt2, 0.0)});
    const WalkState state = make_initial(custom, 0);
    CHECK(entanglement_entropy(coin_density(state)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entropy handles eigenvalues clamped at the ends of [0, 1]") {
    CoinDensityMatrix rho;
    rho.m[0][0] = Complex(1.0 + 5e-10, 0.0);
    rho.m[1][1] = Complex(-5e-10, 0.0);
    rho.m[0][1] = Complex(0.0, 0.0);
    rho.m[1][0] = Complex(0.0, 0.0);
    const auto lambda = rho.eigenvalues();
    CHECK(lambda[0] == 1.0);
    CHECK(lambda[1] == 0.0);
    CHECK(entanglement_entropy(rho) == 0.0);
}

TEST_CASE("entropy rejects malformed density matrices") {
    CoinDensityMatrix bad_trace;
    bad_trace.m[0][0] = Complex(0.7, 0.0);
    bad_trace.m[1][1] = Complex(0.7, 0.0);
    CHECK_THROWS_AS(entanglement_entropy(bad_trace), std::invalid_argument);

    CoinDensityMatrix not_hermitian;
    not_hermitian.m[0][0] = Complex(0.5, 0.0);
    not_hermitian.m[1][1] = Complex(0.5, 0.0);
    not_hermitian.m[0][1] = Complex(0.1, 0.0);
    not_hermitian.m[1][0] = Complex(0.3, 0.0);
    CHECK_THROWS_AS(entanglement_entropy(not_hermitian), std::invalid_argument);

    CoinDensityMatrix imaginary_diagonal;
    imaginary_diagonal.m[0][0] = Complex(0.5, 0.1);
    imaginary_diagonal.m[1][1] = Complex(0.5, -0.1);
    CHECK_THROWS_AS(entanglement_entropy(imaginary_diagonal), std::invalid_argument);
}

TEST_CASE("asymptotic entropy averages the requested window") {
    TimeSeries series("entropy_bits");
    for (int t = 1; t <= 10; ++t) series.append(t, static_cast<double>(t));
    CHECK(asymptotic_entropy(series, 4, 6) == doctest::Approx(5.0));
    CHECK(asymptotic_entropy(series, 10, 10) == doctest::Approx(10.0));
    CHECK(asymptotic_entropy(series, 1, 10) == doctest::Approx(5.5));
    CHECK_THROWS_AS(asymptotic_entropy(series, 11, 20), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_entropy(series, 6, 4), std::invalid_argument);
}

TEST_CASE("time series enforces order and finiteness") {
    TimeSeries series("p_surv");
    series.append(0, 1.0);
    series.append(5, 0.5);
    CHECK_THROWS_AS(series.append(5, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(series.append(3, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(series.append(9, std::nan("")), std::invalid_argument);
    CHECK(series.samples().size() == 2);
    CHECK(series.label() == "p_surv");
}
