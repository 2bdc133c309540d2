#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "rydsim/basis.hpp"

namespace rydsim {

using Complex = std::complex<double>;

// Pure state over the 3-level (one atom) or 9-level (two atom) basis.
struct QuantumState {
    Eigen::VectorXcd amplitudes;

    QuantumState() = default;
    explicit QuantumState(Eigen::VectorXcd a) : amplitudes(std::move(a)) {
        check_dim(amplitudes.size());
    }

    // Basis state |level> of a single atom.
    static QuantumState single(Level l) {
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim_one_atom);
        a(static_cast<int>(l)) = 1.0;
        return QuantumState(std::move(a));
    }
    // Basis state |l1 l2> of an atom pair.
    static QuantumState pair(Level l1, Level l2) {
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim_two_atom);
        a(pair_index(l1, l2)) = 1.0;
        return QuantumState(std::move(a));
    }

    int dim() const { return static_cast<int>(amplitudes.size()); }
    int n_atoms() const { return dim() == dim_one_atom ? 1 : 2; }
    double norm() const { return amplitudes.norm(); }

    static void check_dim(Eigen::Index n) {
        if (n != dim_one_atom && n != dim_two_atom)
            throw std::invalid_argument("QuantumState: dimension must be 3 or 9");
    }
};

// Density operator over the same basis.
struct DensityOperator {
    Eigen::MatrixXcd matrix;

    DensityOperator() = default;
    explicit DensityOperator(Eigen::MatrixXcd m) : matrix(std::move(m)) {
        QuantumState::check_dim(matrix.rows());
        if (matrix.rows() != matrix.cols())
            throw std::invalid_argument("DensityOperator: matrix must be square");
    }

    static DensityOperator from_pure(const QuantumState& s) {
        return DensityOperator(s.amplitudes * s.amplitudes.adjoint());
    }

    int dim() const { return static_cast<int>(matrix.rows()); }
    int n_atoms() const { return dim() == dim_one_atom ? 1 : 2; }
    double trace() const { return matrix.trace().real(); }

    // <psi|rho|psi>
    double fidelity(const QuantumState& psi) const {
        return (psi.amplitudes.adjoint() * matrix * psi.amplitudes)(0).real();
    }
};

}  // namespace rydsim
