#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rydsim/state.hpp"

namespace rydsim {

// Thrown when the adaptive integrator cannot meet the requested tolerance.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

// One decay or dephasing channel: d rho/dt gains
// rate * (L rho L^dag - 1/2 {L^dag L, rho}).
struct LindbladChannel {
    Eigen::MatrixXcd op;
    double rate = 0.0;  // 1/s, >= 0
};

struct LindbladOptions {
    double abs_tol = 1e-9;        // per-element absolute error target per step
    long max_steps = 20'000'000;  // hard cap on accepted+rejected steps
};

// exp(-i H t) for Hermitian H via eigendecomposition. Throws
// std::invalid_argument if H is not Hermitian (within 1e-9 relative).
Eigen::MatrixXcd unitary_of(const Eigen::MatrixXcd& h, double t);

// |psi(t)> = exp(-i H t) |psi(0)>. Requires t >= 0 and Hermitian H.
QuantumState evolve_unitary(const QuantumState& state, const Eigen::MatrixXcd& h,
                            double t);
DensityOperator evolve_unitary(const DensityOperator& rho,
                               const Eigen::MatrixXcd& h, double t);

// Master-equation evolution under constant H and the given channels,
// integrated with an embedded Dormand-Prince 4(5) stepper. Preserves
// Hermiticity by construction; trace is preserved by the generator.
DensityOperator evolve_lindblad(const DensityOperator& rho,
                                const Eigen::MatrixXcd& h,
                                const std::vector<LindbladChannel>& channels,
                                double t, const LindbladOptions& opts = {});

}  // namespace rydsim
