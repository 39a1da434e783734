#pragma once

#include <cstdint>
#include <random>

#include "linkgenus/document.hpp"
#include "linkgenus/tate.hpp"

namespace linkgenus {

// Deterministic generator for the self-check battery. mt19937_64 with plain
// modulo draws, so the same seed replays the same instances on any build.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    // Uniform-ish draw in [0, n); n must be positive and desk-scale.
    Int below(const Int& n);
    Int range(long lo, long hi); // inclusive
    std::size_t index(std::size_t n);
    bool coin();

  private:
    std::mt19937_64 eng_;
};

LinkWindow random_window(Rng& rng, std::size_t max_knots);
// Valid cover of the window: degree in [1, max_n], nonempty branch set for
// degree > 1, characters adjusted until the total character is onto.
CoverSpec random_cover(Rng& rng, const LinkWindow& w, const Int& max_n);
// Cover idele whose fiber sums all vanish (each fiber is a cyclic difference).
CoverIdele random_norm_zero_idele(Rng& rng, const LinkWindow& w, const CoverSpec& cover);
// Cycle supported off the branch locus, possibly empty.
Cycle1 random_cycle(Rng& rng, const LinkWindow& w, const CoverSpec& cover);

// Canonical form of Z/m_1 + ... + Z/m_k computed by sorting prime parts,
// with no elimination anywhere; the linear-algebra path is checked against
// this.
FinAbGroup oracle_sum_of_cyclics(const std::vector<Int>& ms);

struct VerifyCaps {
    std::uint64_t seed = 1;
    Int max_n = 12;
    std::size_t max_knots = 6;
    std::size_t trials = 16;
    // Name of a check forced to fail, for exercising the reporting path.
    std::string fail_injected;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t trials = 0;
    std::string detail; // minimized failing instance, empty when passed
};

struct VerifyReport {
    std::vector<CheckResult> checks; // in name order
    bool all_passed() const;
};

// Runs the eight randomized identity checks sequentially. A failing trial is
// re-searched at smaller caps so the reported instance is near-minimal.
VerifyReport run_verify(const VerifyCaps& caps);

} // namespace linkgenus
