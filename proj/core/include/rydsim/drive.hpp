#pragma once

#include <Eigen/Dense>

#include "rydsim/state.hpp"

namespace rydsim {

// One laser drive on a single atom, in the frame rotating at the laser
// frequency. The drive couples |1> <-> |r> with matrix element
// (rabi/2) e^{i phase}; the |r> diagonal carries -(detuning - ryd_light_shift).
// |0> is uncoupled unless couple_g0 is set, in which case the same drive
// reaches |r> from |0> with an extra detuning zeeman_split (the splitting
// between the Rydberg sublevels addressed from the two qubit states).
struct DriveHamiltonian {
    double rabi = 0.0;             // rad/s, >= 0
    double detuning = 0.0;         // rad/s
    double phase = 0.0;            // rad
    double ryd_light_shift = 0.0;  // rad/s, shift applied to |r>
    double zeeman_split = 0.0;     // rad/s, used only when couple_g0
    bool couple_g0 = false;
};

// 3x3 single-atom Hamiltonian for the drive above. Throws
// std::invalid_argument for rabi < 0 or non-finite fields.
Eigen::MatrixXcd build_single_atom(const DriveHamiltonian& drive);

// 9x9 two-atom Hamiltonian H = H1 (x) 1 + 1 (x) H2 + V |rr><rr|.
// V is the interaction shift of the doubly-excited state; positive by
// convention, either sign accepted.
Eigen::MatrixXcd build_two_atom(const DriveHamiltonian& d1,
                                const DriveHamiltonian& d2, double blockade);
Eigen::MatrixXcd build_two_atom(const Eigen::MatrixXcd& h1,
                                const Eigen::MatrixXcd& h2, double blockade);

// A (x) B for two single-atom operators, and the embedding of a
// single-atom operator on atom 0 or 1 of a pair.
Eigen::MatrixXcd tensor_pair(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
Eigen::MatrixXcd embed_on_atom(const Eigen::MatrixXcd& op, int atom);

}  // namespace rydsim
