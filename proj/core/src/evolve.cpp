#include "rydsim/evolve.hpp"

#include <algorithm>
#include <cmath>

namespace rydsim {

namespace {

void require_hermitian(const Eigen::MatrixXcd& h) {
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * scale)
        throw std::invalid_argument("evolve: Hamiltonian is not Hermitian");
}

}  // namespace

Eigen::MatrixXcd unitary_of(const Eigen::MatrixXcd& h, double t) {
    require_hermitian(h);
    if (t < 0.0) throw std::invalid_argument("evolve: negative duration");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("evolve: eigendecomposition failed");
    const Eigen::VectorXd& lam = es.eigenvalues();
    Eigen::VectorXcd phases(lam.size());
    for (Eigen::Index k = 0; k < lam.size(); ++k)
        phases(k) = std::exp(Complex(0.0, -lam(k) * t));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

QuantumState evolve_unitary(const QuantumState& state, const Eigen::MatrixXcd& h,
                            double t) {
    if (h.rows() != state.dim())
        throw std::invalid_argument("evolve_unitary: dimension mismatch");
    return QuantumState(unitary_of(h, t) * state.amplitudes);
}

DensityOperator evolve_unitary(const DensityOperator& rho,
                               const Eigen::MatrixXcd& h, double t) {
    if (h.rows() != rho.dim())
        throw std::invalid_argument("evolve_unitary: dimension mismatch");
    const Eigen::MatrixXcd u = unitary_of(h, t);
    return DensityOperator(u * rho.matrix * u.adjoint());
}

namespace {

struct LindbladRhs {
    const Eigen::MatrixXcd& h;
    std::vector<Eigen::MatrixXcd> ls;      // sqrt(rate) * L
    std::vector<Eigen::MatrixXcd> ldag_l;  // rate * L^dag L

    LindbladRhs(const Eigen::MatrixXcd& h_,
                const std::vector<LindbladChannel>& channels)
        : h(h_) {
        for (const auto& c : channels) {
            if (c.rate < 0.0)
                throw std::invalid_argument("evolve_lindblad: negative rate");
            if (c.op.rows() != h.rows() || c.op.cols() != h.cols())
                throw std::invalid_argument(
                    "evolve_lindblad: channel dimension mismatch");
            if (c.rate == 0.0) continue;
            const double s = std::sqrt(c.rate);
            ls.push_back(s * c.op);
            ldag_l.push_back(c.rate * (c.op.adjoint() * c.op));
        }
    }

    Eigen::MatrixXcd operator()(const Eigen::MatrixXcd& rho) const {
        const Complex i(0.0, 1.0);
        Eigen::MatrixXcd d = -i * (h * rho - rho * h);
        for (std::size_t k = 0; k < ls.size(); ++k) {
            d += ls[k] * rho * ls[k].adjoint();
            d -= 0.5 * (ldag_l[k] * rho + rho * ldag_l[k]);
        }
        return d;
    }
};

}  // namespace

DensityOperator evolve_lindblad(const DensityOperator& rho0,
                                const Eigen::MatrixXcd& h,
                                const std::vector<LindbladChannel>& channels,
                                double t, const LindbladOptions& opts) {
    require_hermitian(h);
    if (t < 0.0) throw std::invalid_argument("evolve_lindblad: negative duration");
    if (t == 0.0) return rho0;

    const LindbladRhs rhs(h, channels);

    // Dormand-Prince 4(5) tableau.
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695,
                            e4 = 393.0 / 640, e5 = -92097.0 / 339200,
                            e6 = 187.0 / 2100, e7 = 1.0 / 40;

    Eigen::MatrixXcd rho = rho0.matrix;
    double time = 0.0;

    // Initial step from the generator's magnitude.
    double rate_scale = h.cwiseAbs().maxCoeff();
    for (const auto& c : channels)
        rate_scale += c.rate * c.op.cwiseAbs().maxCoeff() * c.op.cwiseAbs().maxCoeff();
    double step = std::min(t, 0.1 / std::max(rate_scale, 1.0 / t));

    const double min_step = t * 1e-14;
    double worst_error = 0.0;
    Eigen::MatrixXcd k1 = rhs(rho);

    for (long n = 0; n < opts.max_steps; ++n) {
        if (time >= t) break;
        step = std::min(step, t - time);

        const Eigen::MatrixXcd k2 = rhs(rho + step * (a21 * k1));
        const Eigen::MatrixXcd k3 = rhs(rho + step * (a31 * k1 + a32 * k2));
        const Eigen::MatrixXcd k4 = rhs(rho + step * (a41 * k1 + a42 * k2 + a43 * k3));
        const Eigen::MatrixXcd k5 =
            rhs(rho + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Eigen::MatrixXcd k6 = rhs(
            rho + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Eigen::MatrixXcd next =
            rho + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Eigen::MatrixXcd k7 = rhs(next);
        const Eigen::MatrixXcd lower =
            rho + step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double err = (next - lower).cwiseAbs().maxCoeff();
        worst_error = std::max(worst_error, err);

        if (err <= opts.abs_tol) {
            time += step;
            rho = 0.5 * (next + next.adjoint().eval());  // keep Hermitian
            k1 = rhs(rho);
        }
        const double shrink =
            err > 0.0 ? 0.9 * std::pow(opts.abs_tol / err, 0.2) : 5.0;
        step *= std::clamp(shrink, 0.2, 5.0);
        if (step < min_step)
            throw ConvergenceError(
                "evolve_lindblad: step size underflow before reaching target time",
                err);
        if (n + 1 == opts.max_steps)
            throw ConvergenceError("evolve_lindblad: step budget exhausted",
                                   worst_error);
    }
    return DensityOperator(std::move(rho));
}

}  // namespace rydsim
