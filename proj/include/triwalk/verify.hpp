// Named verification suites. Each criterion runs a fixed set of numerical
// checks with pinned tolerances and reports the measured values.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "triwalk/spectral.hpp"
#include "triwalk/types.hpp"

namespace triwalk::verify {

struct Options {
    std::size_t grid_size = QuadratureGrid::kDefaultSize;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;

    [[nodiscard]] bool passed() const;
};

inline constexpr int kCriterionCount = 10;

[[nodiscard]] std::string criterion_title(int id);
[[nodiscard]] CriterionResult run_criterion(int id, const Options& options = {});

// Suites: paper-constants, simulation, spectral, time-average, weak-limit,
// properties, all.
[[nodiscard]] const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
[[nodiscard]] std::vector<int> suite_criteria(std::string_view suite);

// Named qubit states used across the checks: the basis states, balanced
// and sign-alternating superpositions, the zero-localization state and a
// few complex-phase states.
struct NamedState {
    std::string name;
    QubitState state;
};
[[nodiscard]] const std::vector<NamedState>& reference_states();

// i/sqrt(2), 0, 1/sqrt(2): beta = 0, origin average 2(5 - 2 sqrt6).
[[nodiscard]] QubitState balanced_state();
// (1, -2, 1)/sqrt(6): no localization at all.
[[nodiscard]] QubitState zero_state();

// One line per check: "[PASS] 3. name: detail".
[[nodiscard]] std::string format(const CriterionResult& r);

}  // namespace triwalk::verify
