#pragma once

#include <vector>

#include "rydsim/cz.hpp"

namespace rydsim {

struct ParityPoint {
    double phase = 0.0;
    double p00 = 0.0, p01 = 0.0, p10 = 0.0, p11 = 0.0;
    double parity = 0.0;  // p00 + p11 - p01 - p10
};

// Entangling-circuit output: prepare both atoms in (|0> - i|1>)/sqrt(2),
// apply the two-pulse gate, analyze with a pi/2 pulse whose axis phase is
// comp_phase. Exact compensation is comp_phase = params.phi01 - pi/2 and
// yields (|00> + i|11>)/sqrt(2); an offset of pi flips the sign of the
// entangled phase.
DensityOperator bell_circuit(const CZPulseParams& params, double comp_phase,
                             double omega, double blockade,
                             const NoiseModel* noise = nullptr);

// Same circuit with a light shift applied to |r> during both entangling
// pulses. For |light_shift| >> omega the gate is frozen out and the ideal
// output approaches |00>; at zero shift this is exactly the entangling
// circuit with comp_phase = phi01 + pi.
DensityOperator suppressed_gate(const CZPulseParams& params, double light_shift,
                                double omega, double blockade,
                                const NoiseModel* noise = nullptr);

// Apply a pi/2 analyzer pulse at each phase and report populations and the
// two-atom parity. An ideal entangled output oscillates at twice the
// analyzer phase with unit contrast.
std::vector<ParityPoint> parity_scan(const DensityOperator& rho,
                                     const std::vector<double>& phases);

}  // namespace rydsim
