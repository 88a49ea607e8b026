#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qwline/walk.hpp"

using namespace qwline;

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

bool close(const Complex& a, const Complex& b, double tol = 1e-14) {
    return std::abs(a - b) <= tol;
}

InitialCondition default_localized() {
    return Localized{Complex(0.0, kInvSqrt2), Complex(kInvSqrt2, 0.0)};
}

}  // namespace

TEST_CASE("hadamard maps the coin basis to equal superpositions") {
    const SiteAmplitudes right = hadamard({Complex(1.0, 0.0), Complex(0.0, 0.0)});
    CHECK(close(right.a, Complex(kInvSqrt2, 0.0)));
    CHECK(close(right.b, Complex(kInvSqrt2, 0.0)));

    const SiteAmplitudes left = hadamard({Complex(0.0, 0.0), Complex(1.0, 0.0)});
    CHECK(close(left.a, Complex(kInvSqrt2, 0.0)));
    CHECK(close(left.b, Complex(-kInvSqrt2, 0.0)));
}

TEST_CASE("hadamard is an involution") {
    const SiteAmplitudes s{Complex(0.3, -0.4), Complex(-0.5, 0.7)};
    const SiteAmplitudes twice = hadamard(hadamard(s));
    CHECK(close(twice.a, s.a));
    CHECK(close(twice.b, s.b));
}

TEST_CASE("one step from the default localized state") {
    WalkState state = make_initial(default_localized(), 8);
    state.advance();

    // Coin output at the origin is ((alpha+beta), (alpha-beta))/sqrt(2) =
    // ((1+i)/2, (i-1)/2); the a component then sits at x=+1, b at x=-1.
    CHECK(state.time() == 1);
    CHECK(close(state.site(1).a, Complex(0.5, 0.5)));
    CHECK(close(state.site(1).b, Complex(0.0, 0.0)));
    CHECK(close(state.site(-1).b, Complex(-0.5, 0.5)));
    CHECK(close(state.site(-1).a, Complex(0.0, 0.0)));
    CHECK(close(state.site(0).a, Complex(0.0, 0.0)));
    CHECK(state.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("two steps from |R> reproduce the textbook 1/4, 1/2, 1/4 profile") {
    const InitialCondition right = Localized{Complex(1.0, 0.0), Complex(0.0, 0.0)};
    const WalkState state = evolve(make_initial(right, 8), 2);

    const auto p = [&](int x) {
        const SiteAmplitudes s = state.site(x);
        return std::norm(s.a) + std::norm(s.b);
    };
    CHECK(p(-2) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p(2) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p(1) == 0.0);
    CHECK(p(-1) == 0.0);
}

TEST_CASE("symmetric pair starts with amplitude (i/2, 1/2) at -k and signed at +k") {
    const WalkState plus = make_initial(SymmetricPair{2, +1}, 0);
    CHECK(close(plus.site(-2).a, Complex(0.0, 0.5)));
    CHECK(close(plus.site(-2).b, Complex(0.5, 0.0)));
    CHECK(close(plus.site(2).a, Complex(0.0, 0.5)));
    CHECK(close(plus.site(2).b, Complex(0.5, 0.0)));
    CHECK(plus.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));

    const WalkState minus = make_initial(SymmetricPair{2, -1}, 0);
    CHECK(close(minus.site(2).a, Complex(0.0, -0.5)));
    CHECK(close(minus.site(2).b, Complex(-0.5, 0.0)));
}

TEST_CASE("the evolution is linear in the initial state") {
    // Two unit states with disjoint support and a normalized superposition.
    const Complex c1(0.6, 0.2);
    const Complex c2(0.0, std::sqrt(1.0 - std::norm(c1)));

    Custom base_a;
    base_a.entries.push_back({0, Complex(1.0, 0.0), Complex(0.0, 0.0)});
    Custom base_b;
    base_b.entries.push_back({3, Complex(0.0, 0.0), Complex(1.0, 0.0)});
    Custom combined;
    combined.entries.push_back({0, c1, Complex(0.0, 0.0)});
    combined.entries.push_back({3, Complex(0.0, 0.0), c2});

    const int t = 25;
    const WalkState ea = evolve(make_initial(base_a, t), t);
    const WalkState eb = evolve(make_initial(base_b, t), t);
    const WalkState ec = evolve(make_initial(combined, t), t);

    for (int x = ec.support_min(); x <= ec.support_max(); ++x) {
        const Complex want_a = c1 * ea.site(x).a + c2 * eb.site(x).a;
        const Complex want_b = c1 * ea.site(x).b + c2 * eb.site(x).b;
        CHECK(close(ec.site(x).a, want_a, 1e-13));
        CHECK(close(ec.site(x).b, want_b, 1e-13));
    }
}

TEST_CASE("support tracks the light cone and stays exactly zero outside") {
    WalkState state = make_initial(SymmetricPair{3, -1}, 16);
    for (int t = 1; t <= 16; ++t) {
        state.advance();
        CHECK(state.support_min() == -3 - t);
        CHECK(state.support_max() == 3 + t);
    }
    CHECK(state.site(state.support_max() + 1).a == Complex(0.0, 0.0));
    CHECK(state.site(state.support_min() - 1).b == Complex(0.0, 0.0));
}

TEST_CASE("odd/even sublattice alternates: x+t odd carries no amplitude") {
    WalkState state = make_initial(default_localized(), 9);
    for (int t = 1; t <= 9; ++t) {
        state.advance();
        for (int x = state.support_min(); x <= state.support_max(); ++x) {
            if ((x + t) % 2 != 0) {
                CHECK(state.site(x).a == Complex(0.0, 0.0));
                CHECK(state.site(x).b == Complex(0.0, 0.0));
            }
        }
    }
}

TEST_CASE("norm is conserved to rounding over a long run") {
    WalkState state = make_initial(SymmetricPair{2, -1}, 1000);
    for (int t = 0; t < 1000; ++t) state.advance();
    CHECK(std::abs(state.norm_squared() - 1.0) <= 1e-12);
}

TEST_CASE("growing past the preallocated capacity changes nothing") {
    const InitialCondition cond = default_localized();
    WalkState tight = make_initial(cond, 0);    // grows on demand
    WalkState roomy = make_initial(cond, 100);  // never grows
    for (int t = 0; t < 100; ++t) {
        tight.advance();
        roomy.advance();
    }
    CHECK(tight.time() == roomy.time());
    CHECK(tight.support_min() == roomy.support_min());
    for (int x = roomy.support_min(); x <= roomy.support_max(); ++x) {
        // identical arithmetic in identical order: bitwise equality expected
        CHECK(tight.site(x).a == roomy.site(x).a);
        CHECK(tight.site(x).b == roomy.site(x).b);
    }
}

TEST_CASE("step and evolve return copies, leaving the input unchanged") {
    const WalkState start = make_initial(default_localized(), 4);
    const WalkState after = step(start);
    CHECK(start.time() == 0);
    CHECK(after.time() == 1);

    const WalkState same = evolve(start, 0);
    CHECK(same.time() == 0);
    CHECK(same.site(0).a == start.site(0).a);
}

TEST_CASE("survival-relevant value at t = 500 stays pinned") {
    // Frozen from an independent implementation of the same walk; guards the
    // evolution against silent numerical regressions.
    WalkState state = make_initial(default_localized(), 500);
    for (int t = 0; t < 500; ++t) state.advance();
    const SiteAmplitudes s = state.site(0);
    const double p0 = std::norm(s.a) + std::norm(s.b);
    CHECK(p0 == doctest::Approx(1.270696e-03).epsilon(1e-5));
}

TEST_CASE("initial conditions are validated") {
    CHECK_THROWS_AS(make_initial(Localized{Complex(1.0, 0.0), Complex(1.0, 0.0)}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_initial(SymmetricPair{0, +1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_initial(SymmetricPair{1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_initial(Custom{}, 0), std::invalid_argument);

    Custom duplicate;
    duplicate.entries.push_back({1, Complex(kInvSqrt2, 0.0), Complex(0.0, 0.0)});
    duplicate.entries.push_back({1, Complex(0.0, 0.0), Complex(kInvSqrt2, 0.0)});
    CHECK_THROWS_AS(make_initial(duplicate, 0), std::invalid_argument);

    Custom unnormalized;
    unnormalized.entries.push_back({0, Complex(1.0, 0.0), Complex(0.5, 0.0)});
    CHECK_THROWS_AS(make_initial(unnormalized, 0), std::invalid_argument);

    CHECK_THROWS_AS(make_initial(default_localized(), -1), std::invalid_argument);
    CHECK_THROWS_AS(evolve(make_initial(default_localized(), 0), -3), std::invalid_argument);
}

TEST_CASE("initial_reach reports the support half-width") {
    CHECK(initial_reach(default_localized()) == 0);
    CHECK(initial_reach(SymmetricPair{4, -1}) == 4);
    Custom custom;
    custom.entries.push_back({-7, Complex(1.0, 0.0), Complex(0.0, 0.0)});
    CHECK(initial_reach(InitialCondition{custom}) == 7);
}
