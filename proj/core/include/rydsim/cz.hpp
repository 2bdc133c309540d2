#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rydsim/drive.hpp"
#include "rydsim/evolve.hpp"
#include "rydsim/noise.hpp"

namespace rydsim {

// Dimensionless parameters of the two-pulse controlled-Z protocol: both
// atoms are driven |1> <-> |r> with detuning delta_over_omega * omega for a
// time tau_omega / omega, twice, with the drive phase advanced by xi on the
// second pulse. phi01 is the phase acquired by |01> (and |10>) over the
// full gate; |11> acquires 2*phi01 + pi.
struct CZPulseParams {
    double delta_over_omega = 0.0;
    double xi = 0.0;         // rad
    double tau_omega = 0.0;  // pulse length in units of 1/omega
    double phi01 = 0.0;      // rad
};

struct CZSolution {
    CZPulseParams params;
    // |<01|U|01>| - 1, |<11|U|11>| - 1, and the phase-identity residual
    // phi11 - 2 phi01 - pi (wrapped), all for the ideal blockaded gate.
    std::array<double, 3> residuals{};
    int iterations = 0;
};

class SolverError : public std::runtime_error {
  public:
    SolverError(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual(best_residual) {}
    double best_residual;
};

// Solve for the gate parameters under perfect blockade.
//
// The search space collapses to one dimension: picking tau as one full
// generalized-Rabi cycle of the blockade-enhanced (sqrt(2) omega) pair
// closes the |11> trajectory after each pulse, and for any detuning there
// is a phase slip xi that closes the |01> trajectory over the two pulses
// (the slip aligns the second pulse's rotation axis with the return path).
// The detuning is then the single knob that enforces the phase identity
// phi11 = 2 phi01 + pi. A bisection on that residual gives the root to
// machine precision; the returned residuals are re-verified on the
// composed two-pulse propagators. Throws SolverError if the verification
// misses `tol`.
CZSolution solve_cz_parameters(double tol = 1e-6);

// Single-qubit return phase arg<1|U|1> of the two-pulse sequence for a
// drive whose |r> level is shifted by light_shift_over_omega * omega.
// At zero shift this equals phi01.
double cz_single_qubit_phase(const CZPulseParams& params,
                             double light_shift_over_omega = 0.0);

// Apply the two-pulse gate at drive strength omega (rad/s) and interaction
// shift `blockade` (rad/s). A light shift on |r> may be supplied (gate
// suppression studies). With a noise model the density-operator overload
// integrates the master equation; otherwise evolution is unitary.
QuantumState apply_cz(const QuantumState& state, const CZPulseParams& params,
                      double omega, double blockade,
                      double ryd_light_shift = 0.0);
DensityOperator apply_cz(const DensityOperator& rho, const CZPulseParams& params,
                         double omega, double blockade,
                         const NoiseModel* noise = nullptr,
                         double ryd_light_shift = 0.0);

// Populations sampled on a uniform grid over the whole gate (both pulses);
// used to export the gate dynamics. Returns times (s) and the population
// vector at each time.
struct CZTrajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> populations;
};
CZTrajectory cz_trajectory(const QuantumState& initial,
                           const CZPulseParams& params, double omega,
                           double blockade, int samples_per_pulse = 200);

}  // namespace rydsim
