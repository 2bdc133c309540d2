#include "rydsim/circuits.hpp"

#include <cmath>

#include "rydsim/populations.hpp"
#include "rydsim/rotations.hpp"

namespace rydsim {

DensityOperator bell_circuit(const CZPulseParams& params, double comp_phase,
                             double omega, double blockade,
                             const NoiseModel* noise) {
    // Prepare [(|0> - i|1>)/sqrt(2)] on both atoms, entangle, then analyze
    // with a pi/2 pulse about the rotated axis. The returned operator is
    // expressed in the frame of the analyzer pulse: the residual qubit
    // phase (comp_phase + pi/2) is removed so that exact compensation,
    // comp_phase = phi01 - pi/2, leaves (|00> + i|11>)/sqrt(2).
    DensityOperator rho =
        DensityOperator::from_pure(QuantumState::pair(Level::g0, Level::g0));
    rho = single_qubit_rotation(rho, 0.5 * std::numbers::pi, 0.0);
    rho = apply_cz(rho, params, omega, blockade, noise);
    rho = single_qubit_rotation(rho, 0.5 * std::numbers::pi, comp_phase);
    rho = z_frame_rotation(rho, -(comp_phase + 0.5 * std::numbers::pi));
    return rho;
}

DensityOperator suppressed_gate(const CZPulseParams& params, double light_shift,
                                double omega, double blockade,
                                const NoiseModel* noise) {
    // Same circuit with the entangling pulses detuned by the |r> light
    // shift. The analyzer pulse inverts the preparation pulse (axis at pi)
    // after compensating whatever single-qubit phase the shifted pulses
    // still imprint, so the ideal strongly-shifted output is |00>.
    const double resid_phase =
        cz_single_qubit_phase(params, light_shift / omega);
    const double comp = resid_phase + std::numbers::pi;

    DensityOperator rho =
        DensityOperator::from_pure(QuantumState::pair(Level::g0, Level::g0));
    rho = single_qubit_rotation(rho, 0.5 * std::numbers::pi, 0.0);
    rho = apply_cz(rho, params, omega, blockade, noise, light_shift);
    rho = single_qubit_rotation(rho, 0.5 * std::numbers::pi, comp);
    rho = z_frame_rotation(rho, -(comp + 0.5 * std::numbers::pi));
    return rho;
}

std::vector<ParityPoint> parity_scan(const DensityOperator& rho,
                                     const std::vector<double>& phases) {
    if (phases.empty())
        throw std::invalid_argument("parity_scan: need at least one phase");
    if (rho.n_atoms() != 2)
        throw std::invalid_argument("parity_scan: expected a two-atom state");

    std::vector<ParityPoint> out;
    out.reserve(phases.size());
    for (double phi : phases) {
        const DensityOperator analyzed =
            single_qubit_rotation(rho, 0.5 * std::numbers::pi, phi);
        const std::vector<double> p = populations(analyzed);
        ParityPoint pt;
        pt.phase = phi;
        pt.p00 = p[idx_00];
        pt.p01 = p[idx_01];
        pt.p10 = p[idx_10];
        pt.p11 = p[idx_11];
        pt.parity = pt.p00 + pt.p11 - pt.p01 - pt.p10;
        out.push_back(pt);
    }
    return out;
}

}  // namespace rydsim
