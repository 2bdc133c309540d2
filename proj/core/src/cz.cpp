#include "rydsim/cz.hpp"

#include <cmath>
#include <complex>

#include "rydsim/populations.hpp"
#include "rydsim/units.hpp"

namespace rydsim {

namespace {

// 2x2 pulse propagator for a two-level pair {ground, excited} driven with
// Rabi frequency `rabi`, detuning `delta` (carried as -delta on the excited
// diagonal) and drive phase `phi`, for duration tau.
Eigen::Matrix2cd pulse_unitary(double rabi, double delta, double phi,
                               double tau) {
    Eigen::Matrix2cd h;
    const Complex c = 0.5 * rabi * std::exp(Complex(0.0, phi));
    h << 0.0, c, std::conj(c), -delta;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
    const Eigen::Vector2d lam = es.eigenvalues();
    Eigen::Vector2cd phases;
    phases << std::exp(Complex(0.0, -lam(0) * tau)),
        std::exp(Complex(0.0, -lam(1) * tau));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Two-pulse propagator (phase slip xi on the second pulse), omega = 1 units.
Eigen::Matrix2cd two_pulse(double rabi, double delta, double xi, double tau) {
    return pulse_unitary(rabi, delta, xi, tau) *
           pulse_unitary(rabi, delta, 0.0, tau);
}

struct Candidate {
    double xi = 0.0;
    double tau = 0.0;
    double phi01 = 0.0;
    double phi11 = 0.0;
    double identity_residual = 0.0;
};

// For a trial detuning (omega = 1), close |11> by construction, derive the
// slip that closes |01>, and report the phase-identity residual.
Candidate evaluate(double delta) {
    Candidate c;
    const double w11 = std::sqrt(delta * delta + 2.0);
    c.tau = two_pi / w11;

    const Eigen::Matrix2cd u1 = pulse_unitary(1.0, delta, 0.0, c.tau);
    // u1 is complex symmetric; closure of the composed sequence requires
    // e^{-i xi} = -u1(1,1)/u1(0,0) (unimodular by unitarity).
    const Complex ratio = -u1(1, 1) / u1(0, 0);
    c.xi = std::arg(std::conj(ratio));
    if (c.xi < 0.0) c.xi += two_pi;

    const Eigen::Matrix2cd u = two_pulse(1.0, delta, c.xi, c.tau);
    c.phi01 = std::arg(u(0, 0));
    // One full enhanced-Rabi cycle per pulse leaves |11> with phase
    // pi + pi*delta/w11 per pulse.
    c.phi11 = wrap_angle(two_pi * delta / w11);
    c.identity_residual = wrap_angle(c.phi11 - 2.0 * c.phi01 - std::numbers::pi);
    return c;
}

}  // namespace

CZSolution solve_cz_parameters(double tol) {
    if (!(tol > 0.0) || tol > 1e-3)
        throw std::invalid_argument("solve_cz_parameters: tol must be in (0, 1e-3]");

    // Bracket the root of the identity residual in delta/omega. The
    // residual is smooth on (0, 1) and crosses zero once.
    const int n_scan = 64;
    double lo = 0.02, hi = 0.98;
    double prev_x = lo, prev_r = evaluate(lo).identity_residual;
    double root_lo = 0.0, root_hi = 0.0;
    bool bracketed = false;
    for (int k = 1; k <= n_scan; ++k) {
        const double x = lo + (hi - lo) * k / n_scan;
        const double r = evaluate(x).identity_residual;
        if (std::signbit(r) != std::signbit(prev_r) &&
            std::abs(r - prev_r) < std::numbers::pi) {
            root_lo = prev_x;
            root_hi = x;
            bracketed = true;
            break;
        }
        prev_x = x;
        prev_r = r;
    }
    if (!bracketed)
        throw SolverError("solve_cz_parameters: no sign change in scan",
                          std::abs(prev_r));

    int iters = 0;
    double flo = evaluate(root_lo).identity_residual;
    while (root_hi - root_lo > 1e-15) {
        const double mid = 0.5 * (root_lo + root_hi);
        const double fm = evaluate(mid).identity_residual;
        if (std::signbit(fm) == std::signbit(flo)) {
            root_lo = mid;
            flo = fm;
        } else {
            root_hi = mid;
        }
        if (++iters > 200) break;
    }

    const double delta = 0.5 * (root_lo + root_hi);
    const Candidate c = evaluate(delta);

    CZSolution sol;
    sol.params.delta_over_omega = delta;
    sol.params.xi = c.xi;
    sol.params.tau_omega = c.tau;
    sol.params.phi01 = c.phi01;
    sol.iterations = iters;

    // Verify on the composed propagators of both driven pairs.
    const Eigen::Matrix2cd u01 = two_pulse(1.0, delta, c.xi, c.tau);
    const Eigen::Matrix2cd u11 = two_pulse(std::sqrt(2.0), delta, c.xi, c.tau);
    sol.residuals[0] = std::abs(u01(0, 0)) - 1.0;
    sol.residuals[1] = std::abs(u11(0, 0)) - 1.0;
    sol.residuals[2] =
        wrap_angle(std::arg(u11(0, 0)) - 2.0 * std::arg(u01(0, 0)) -
                   std::numbers::pi);

    for (double r : sol.residuals) {
        if (std::abs(r) > tol)
            throw SolverError("solve_cz_parameters: residual above tolerance",
                              std::abs(r));
    }
    return sol;
}

double cz_single_qubit_phase(const CZPulseParams& params,
                             double light_shift_over_omega) {
    const double delta_eff = params.delta_over_omega - light_shift_over_omega;
    const Eigen::Matrix2cd u =
        two_pulse(1.0, delta_eff, params.xi, params.tau_omega);
    return std::arg(u(0, 0));
}

namespace {

DriveHamiltonian gate_drive(const CZPulseParams& p, double omega, double phase,
                            double light_shift) {
    DriveHamiltonian d;
    d.rabi = omega;
    d.detuning = p.delta_over_omega * omega;
    d.phase = phase;
    d.ryd_light_shift = light_shift;
    return d;
}

}  // namespace

QuantumState apply_cz(const QuantumState& state, const CZPulseParams& params,
                      double omega, double blockade, double ryd_light_shift) {
    if (omega <= 0.0) throw std::invalid_argument("apply_cz: omega must be > 0");
    const double tau = params.tau_omega / omega;
    const auto h_of = [&](double phase) {
        const DriveHamiltonian d = gate_drive(params, omega, phase, ryd_light_shift);
        return state.n_atoms() == 2 ? build_two_atom(d, d, blockade)
                                    : build_single_atom(d);
    };
    QuantumState s = evolve_unitary(state, h_of(0.0), tau);
    return evolve_unitary(s, h_of(params.xi), tau);
}

DensityOperator apply_cz(const DensityOperator& rho, const CZPulseParams& params,
                         double omega, double blockade, const NoiseModel* noise,
                         double ryd_light_shift) {
    if (omega <= 0.0) throw std::invalid_argument("apply_cz: omega must be > 0");
    const double tau = params.tau_omega / omega;
    const auto h_of = [&](double phase) {
        const DriveHamiltonian d = gate_drive(params, omega, phase, ryd_light_shift);
        return rho.n_atoms() == 2 ? build_two_atom(d, d, blockade)
                                  : build_single_atom(d);
    };
    if (noise == nullptr || !noise->has_rates()) {
        DensityOperator r = evolve_unitary(rho, h_of(0.0), tau);
        return evolve_unitary(r, h_of(params.xi), tau);
    }
    const std::vector<LindbladChannel> channels =
        collapse_channels(*noise, rho.n_atoms());
    DensityOperator r = evolve_lindblad(rho, h_of(0.0), channels, tau);
    return evolve_lindblad(r, h_of(params.xi), channels, tau);
}

CZTrajectory cz_trajectory(const QuantumState& initial,
                           const CZPulseParams& params, double omega,
                           double blockade, int samples_per_pulse) {
    if (samples_per_pulse < 2)
        throw std::invalid_argument("cz_trajectory: need at least 2 samples");
    const double tau = params.tau_omega / omega;
    const auto h_of = [&](double phase) {
        const DriveHamiltonian d = gate_drive(params, omega, phase, 0.0);
        return initial.n_atoms() == 2 ? build_two_atom(d, d, blockade)
                                      : build_single_atom(d);
    };

    CZTrajectory traj;
    const Eigen::MatrixXcd h1 = h_of(0.0);
    const Eigen::MatrixXcd h2 = h_of(params.xi);
    QuantumState pulse_start = initial;
    for (int pulse = 0; pulse < 2; ++pulse) {
        const Eigen::MatrixXcd& h = pulse == 0 ? h1 : h2;
        for (int k = 0; k < samples_per_pulse; ++k) {
            const double tk = tau * k / samples_per_pulse;
            const QuantumState s = evolve_unitary(pulse_start, h, tk);
            traj.times.push_back(pulse * tau + tk);
            traj.populations.push_back(populations(s));
        }
        pulse_start = evolve_unitary(pulse_start, h, tau);
    }
    traj.times.push_back(2.0 * tau);
    traj.populations.push_back(populations(pulse_start));
    return traj;
}

}  // namespace rydsim
