#include "rydsim/rotations.hpp"

#include <cmath>
#include <stdexcept>

#include "rydsim/drive.hpp"
#include "rydsim/evolve.hpp"

namespace rydsim {

Eigen::MatrixXcd rotation_matrix(double angle, double axis_phase) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(dim_one_atom, dim_one_atom);
    const double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
    const Complex i(0.0, 1.0);
    r(0, 0) = c;
    r(1, 1) = c;
    r(0, 1) = -i * std::exp(-i * axis_phase) * s;
    r(1, 0) = -i * std::exp(i * axis_phase) * s;
    return r;
}

Eigen::MatrixXcd z_rotation_matrix(double angle) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Identity(dim_one_atom, dim_one_atom);
    const Complex i(0.0, 1.0);
    z(0, 0) = std::exp(-i * (0.5 * angle));
    z(1, 1) = std::exp(i * (0.5 * angle));
    return z;
}

namespace {

Eigen::MatrixXcd on_all_atoms(const Eigen::MatrixXcd& op, int n_atoms) {
    return n_atoms == 1 ? op : tensor_pair(op, op);
}

}  // namespace

QuantumState single_qubit_rotation(const QuantumState& s, double angle,
                                   double axis_phase) {
    const Eigen::MatrixXcd u =
        on_all_atoms(rotation_matrix(angle, axis_phase), s.n_atoms());
    return QuantumState(u * s.amplitudes);
}

DensityOperator single_qubit_rotation(const DensityOperator& rho, double angle,
                                      double axis_phase) {
    const Eigen::MatrixXcd u =
        on_all_atoms(rotation_matrix(angle, axis_phase), rho.n_atoms());
    return DensityOperator(u * rho.matrix * u.adjoint());
}

QuantumState z_frame_rotation(const QuantumState& s, double angle) {
    const Eigen::MatrixXcd u = on_all_atoms(z_rotation_matrix(angle), s.n_atoms());
    return QuantumState(u * s.amplitudes);
}

DensityOperator z_frame_rotation(const DensityOperator& rho, double angle) {
    const Eigen::MatrixXcd u =
        on_all_atoms(z_rotation_matrix(angle), rho.n_atoms());
    return DensityOperator(u * rho.matrix * u.adjoint());
}

QuantumState rf_drive_full(const QuantumState& s, double omega_rf,
                           double omega_larmor, double t, double phase,
                           double abs_tol) {
    if (s.n_atoms() != 1)
        throw std::invalid_argument("rf_drive_full: single-atom states only");
    if (omega_rf < 0.0 || omega_larmor <= 0.0)
        throw std::invalid_argument("rf_drive_full: need omega_rf >= 0, omega_larmor > 0");
    if (t < 0.0) throw std::invalid_argument("rf_drive_full: negative duration");
    if (t == 0.0 || omega_rf == 0.0) {
        // Free precession only; apply the exact Z evolution.
        Eigen::VectorXcd a = s.amplitudes;
        const Complex i(0.0, 1.0);
        a(0) *= std::exp(-i * (0.5 * omega_larmor * t));
        a(1) *= std::exp(i * (0.5 * omega_larmor * t));
        return QuantumState(std::move(a));
    }

    // Time-dependent Schrodinger equation on the qubit block, fixed-step
    // RK4 refined by step doubling until stable to abs_tol. The |r>
    // amplitude is constant under this drive.
    const Complex i(0.0, 1.0);
    const auto rhs = [&](double time, const Eigen::Vector2cd& psi) {
        const double ox = omega_rf * std::cos(omega_larmor * time + phase);
        Eigen::Vector2cd d;
        d(0) = -i * (0.5 * omega_larmor * psi(0) + ox * psi(1));
        d(1) = -i * (ox * psi(0) - 0.5 * omega_larmor * psi(1));
        return d;
    };

    const auto run = [&](long nsteps) {
        Eigen::Vector2cd psi(s.amplitudes(0), s.amplitudes(1));
        const double dh = t / static_cast<double>(nsteps);
        double time = 0.0;
        for (long n = 0; n < nsteps; ++n) {
            const Eigen::Vector2cd k1 = rhs(time, psi);
            const Eigen::Vector2cd k2 = rhs(time + 0.5 * dh, psi + 0.5 * dh * k1);
            const Eigen::Vector2cd k3 = rhs(time + 0.5 * dh, psi + 0.5 * dh * k2);
            const Eigen::Vector2cd k4 = rhs(time + dh, psi + dh * k3);
            psi += (dh / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            time += dh;
        }
        return psi;
    };

    // Resolve the fastest scale with ~40 points per carrier cycle, then
    // use step doubling as the error estimate.
    const double fast = std::max(omega_larmor, omega_rf);
    long nsteps = std::max<long>(64, static_cast<long>(40.0 * fast * t / 6.283));
    Eigen::Vector2cd psi = run(nsteps);
    for (int refine = 0; refine < 14; ++refine) {
        nsteps *= 2;
        const Eigen::Vector2cd finer = run(nsteps);
        const double err = (finer - psi).cwiseAbs().maxCoeff();
        psi = finer;
        if (err <= abs_tol) {
            Eigen::VectorXcd out = s.amplitudes;
            out(0) = psi(0);
            out(1) = psi(1);
            return QuantumState(std::move(out));
        }
        if (refine == 13)
            throw ConvergenceError("rf_drive_full: step doubling did not converge",
                                   err);
    }
    Eigen::VectorXcd out = s.amplitudes;
    out(0) = psi(0);
    out(1) = psi(1);
    return QuantumState(std::move(out));
}

}  // namespace rydsim
