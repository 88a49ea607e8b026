#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace qwline {

using Complex = std::complex<double>;

// Coin amplitudes at a single lattice site: `a` multiplies the right-moving
// coin state |R>, `b` the left-moving state |L>.
struct SiteAmplitudes {
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
};

// Hadamard coin acting on one site: (a, b) -> ((a+b), (a-b)) / sqrt(2).
SiteAmplitudes hadamard(const SiteAmplitudes& s);

// Walker released from the origin with coin state alpha|R> + beta|L>.
// The amplitudes must form a unit vector.
struct Localized {
    Complex alpha;
    Complex beta;
};

// Walker prepared in the coin state (|L> + i|R>)/sqrt(2) on the position
// superposition (|-k> + sign*|+k>)/sqrt(2), with k >= 1 and sign = +1 or -1.
struct SymmetricPair {
    int k = 1;
    int sign = +1;
};

struct CustomEntry {
    int x = 0;
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
};

// Arbitrary finite-support initial state. Site positions must be distinct
// and the total amplitude vector must have unit norm.
struct Custom {
    std::vector<CustomEntry> entries;
};

using InitialCondition = std::variant<Localized, SymmetricPair, Custom>;

// Half-width of the initial support: k for a symmetric pair, max|x| over the
// entries for a custom state, 0 for a localized walker.
int initial_reach(const InitialCondition& cond);

// Full walker state at one instant. Amplitudes live on a dense array covering
// the light cone; everything outside [support_min, support_max] is exactly 0.
class WalkState {
  public:
    int time() const { return t_; }

    // Inclusive light-cone bounds at the current time: the support is
    // contained in [-reach - t, reach + t].
    int support_min() const { return lo_; }
    int support_max() const { return hi_; }

    // Amplitudes at position x (zero outside the light cone).
    SiteAmplitudes site(int x) const;

    // Sum of |a|^2 + |b|^2 over all sites; stays 1 up to rounding.
    double norm_squared() const;

    // Applies the coin to every site and then shifts: the |R> component of
    // each site moves one step right, the |L> component one step left.
    void advance();

  private:
    friend WalkState make_initial(const InitialCondition& cond, int capacity_steps);

    std::vector<SiteAmplitudes> front_, back_;
    int alloc_reach_ = 0;  // arrays cover positions [-alloc_reach_-2, alloc_reach_+2]
    int lo_ = 0, hi_ = 0;  // current light-cone bounds
    int t_ = 0;

    std::size_t idx(int x) const { return static_cast<std::size_t>(x + alloc_reach_ + 2); }
    void grow(int extra_reach);
};

// Builds the t = 0 state. `capacity_steps` pre-allocates room for that many
// steps; the state grows automatically if evolved further.
WalkState make_initial(const InitialCondition& cond, int capacity_steps = 0);

// One step of the walk (coin then shift), by value.
WalkState step(WalkState s);

// n steps of the walk, n >= 0.
WalkState evolve(WalkState s, int n);

}  // namespace qwline
