#pragma once

#include <vector>

#include "rydsim/evolve.hpp"

namespace rydsim {

// Error model for gate simulations and readout accounting.
//
// ryd_decay_rate      spontaneous decay out of |r>, split evenly between
//                     |0> and |1> (branching outside the basis is folded in)
// ryd_dephasing_rate  phenomenological dephasing of |r> against the ground
//                     levels (laser phase noise, Doppler)
// raman_rate          incoherent qubit flips |0> <-> |1> from photon
//                     scattering during the optical drive
// atom_loss           per-atom probability that the atom is missing at
//                     readout; folded into the measurement, not the dynamics
// qubit_trap_shift_ratio and field_gradient_hz_per_um parameterize slow
// dephasing sources for the coherence-time experiment generators.
struct NoiseModel {
    double ryd_decay_rate = 0.0;      // 1/s
    double ryd_dephasing_rate = 0.0;  // 1/s
    double raman_rate = 0.0;          // 1/s
    double atom_loss = 0.0;           // probability in [0, 1]
    double qubit_trap_shift_ratio = 0.0;
    double field_gradient_hz_per_um = 0.0;

    bool has_rates() const {
        return ryd_decay_rate > 0.0 || ryd_dephasing_rate > 0.0 || raman_rate > 0.0;
    }
};

// Collapse operators for the model acting on each atom of an n_atom system.
std::vector<LindbladChannel> collapse_channels(const NoiseModel& model,
                                               int n_atoms);

}  // namespace rydsim
