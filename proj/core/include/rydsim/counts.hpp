#pragma once

#include <stdexcept>

#include "rydsim/measured.hpp"

namespace rydsim {

// Two-atom outcome probabilities from a readout *with* the state-selective
// removal step. Outcome 0 = atom detected (bright), 1 = not detected.
struct OutcomeCounts {
    Measured a00, a01, a10, a11;
    long total_shots = 0;  // 0 for analytic (exact) distributions

    double sum() const { return a00.value + a01.value + a10.value + a11.value; }
};

// Two-atom outcome probabilities *without* the removal step: both qubit
// states are bright, anything outside the computational basis is dark.
struct BrightDarkCounts {
    Measured bbb, bbd, bdb, bdd;
    long total_shots = 0;
    // When set, bdd.value is an upper bound (interval [0, value]) rather
    // than a central value.
    bool bdd_is_upper_bound = false;

    double sum() const { return bbb.value + bbd.value + bdb.value + bdd.value; }
};

}  // namespace rydsim
