#pragma once

#include <Eigen/Dense>

#include "rydsim/state.hpp"

namespace rydsim {

// 3x3 qubit rotation exp(-i (angle/2) (cos(axis_phase) X + sin(axis_phase) Y))
// acting on the {|0>,|1>} block; |r> is untouched.
Eigen::MatrixXcd rotation_matrix(double angle, double axis_phase);

// Frame rotation Z(angle) = diag(e^{-i angle/2}, e^{i angle/2}, 1) on the
// qubit block. Used to re-reference the qubit phase after a gate.
Eigen::MatrixXcd z_rotation_matrix(double angle);

// Apply the same single-qubit rotation to every atom of the state.
QuantumState single_qubit_rotation(const QuantumState& s, double angle,
                                   double axis_phase);
DensityOperator single_qubit_rotation(const DensityOperator& rho, double angle,
                                      double axis_phase);
QuantumState z_frame_rotation(const QuantumState& s, double angle);
DensityOperator z_frame_rotation(const DensityOperator& rho, double angle);

// Qubit drive integrated in the lab frame without the rotating-wave
// approximation: H(t) = (omega_larmor/2) Z + omega_rf cos(omega_larmor t +
// phase) X on each atom's qubit block. Returns the lab-frame state after
// duration t. Populations agree with single_qubit_rotation(angle =
// omega_rf * t) to O(omega_rf/omega_larmor).
QuantumState rf_drive_full(const QuantumState& s, double omega_rf,
                           double omega_larmor, double t, double phase = 0.0,
                           double abs_tol = 1e-10);

}  // namespace rydsim
