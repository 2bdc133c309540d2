#include "rydsim/drive.hpp"

#include <cmath>
#include <stdexcept>

namespace rydsim {

Eigen::MatrixXcd build_single_atom(const DriveHamiltonian& drive) {
    if (drive.rabi < 0.0)
        throw std::invalid_argument("build_single_atom: rabi must be >= 0");
    for (double v : {drive.rabi, drive.detuning, drive.phase,
                     drive.ryd_light_shift, drive.zeeman_split}) {
        if (!std::isfinite(v))
            throw std::invalid_argument("build_single_atom: non-finite drive field");
    }

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim_one_atom, dim_one_atom);
    const Complex coupling =
        0.5 * drive.rabi * std::exp(Complex(0.0, drive.phase));
    const int g0 = static_cast<int>(Level::g0);
    const int g1 = static_cast<int>(Level::g1);
    const int r = static_cast<int>(Level::ryd);

    h(g1, r) = coupling;
    h(r, g1) = std::conj(coupling);
    h(r, r) = -(drive.detuning - drive.ryd_light_shift);

    if (drive.couple_g0) {
        // Off-resonant leakage path: same drive strength, but the target
        // sublevel sits zeeman_split away. The extra detuning is carried on
        // the g0 diagonal so the |1>-|r> pair is unaffected.
        h(g0, r) = coupling;
        h(r, g0) = std::conj(coupling);
        h(g0, g0) = drive.zeeman_split;
    }
    return h;
}

namespace {

// Tensor product of two 3x3 operators; first factor acts on atom 1.
Eigen::MatrixXcd kron3(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(dim_two_atom, dim_two_atom);
    for (int i = 0; i < dim_one_atom; ++i)
        for (int j = 0; j < dim_one_atom; ++j)
            out.block(i * dim_one_atom, j * dim_one_atom, dim_one_atom,
                      dim_one_atom) = a(i, j) * b;
    return out;
}

}  // namespace

// Embed a single-atom operator on one atom of the pair (identity elsewhere).
Eigen::MatrixXcd embed_on_atom(const Eigen::MatrixXcd& op, int atom) {
    const Eigen::MatrixXcd id =
        Eigen::MatrixXcd::Identity(dim_one_atom, dim_one_atom);
    return atom == 0 ? kron3(op, id) : kron3(id, op);
}

Eigen::MatrixXcd tensor_pair(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return kron3(a, b);
}

Eigen::MatrixXcd build_two_atom(const Eigen::MatrixXcd& h1,
                                const Eigen::MatrixXcd& h2, double blockade) {
    if (h1.rows() != dim_one_atom || h1.cols() != dim_one_atom ||
        h2.rows() != dim_one_atom || h2.cols() != dim_one_atom)
        throw std::invalid_argument("build_two_atom: single-atom terms must be 3x3");
    if (!std::isfinite(blockade))
        throw std::invalid_argument("build_two_atom: non-finite blockade");

    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim_one_atom, dim_one_atom);
    Eigen::MatrixXcd h = kron3(h1, id) + kron3(id, h2);
    h(idx_rr, idx_rr) += blockade;
    return h;
}

Eigen::MatrixXcd build_two_atom(const DriveHamiltonian& d1,
                                const DriveHamiltonian& d2, double blockade) {
    return build_two_atom(build_single_atom(d1), build_single_atom(d2), blockade);
}

}  // namespace rydsim
