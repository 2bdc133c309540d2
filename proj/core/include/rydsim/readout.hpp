#pragma once

#include <cstdint>

#include "rydsim/counts.hpp"
#include "rydsim/state.hpp"

namespace rydsim {

// State-selective readout: n_rounds cycles of (qubit-selective excitation to
// |r>, then removal of the excited atom), followed by fluorescence imaging.
//
// pi_pulse_error       probability per cycle that a |1> atom survives the
//                      excitation-removal step
// n_rounds             number of removal cycles N
// imaging_error        per-cycle probability that a surviving atom is lost
//                      or misread dark (applied once when N = 0)
// raman_scatter_error  per-cycle probability that a |0> atom is pumped out
//                      of the dark qubit state and subsequently removed
struct ReadoutModel {
    double pi_pulse_error = 0.0;
    int n_rounds = 1;
    double imaging_error = 0.0;
    double raman_scatter_error = 0.0;
};

// P(bright) for one atom prepared in `level`, with the removal step applied
// (blowout = true) or plain imaging (blowout = false). `atom_loss` is the
// independent probability the atom is missing entirely.
double bright_probability(Level level, const ReadoutModel& model, bool blowout,
                          double atom_loss = 0.0);

// Exact outcome distribution for a two-atom state (analytic mode).
OutcomeCounts measure_with_blowout(const DensityOperator& rho,
                                   const ReadoutModel& model,
                                   double atom_loss = 0.0);
BrightDarkCounts measure_without_blowout(const DensityOperator& rho,
                                         const ReadoutModel& model,
                                         double atom_loss = 0.0);

// Monte Carlo mode: `shots` samples with binomial uncertainties, seeded.
OutcomeCounts sample_with_blowout(const DensityOperator& rho,
                                  const ReadoutModel& model, double atom_loss,
                                  long shots, std::uint64_t seed);
BrightDarkCounts sample_without_blowout(const DensityOperator& rho,
                                        const ReadoutModel& model,
                                        double atom_loss, long shots,
                                        std::uint64_t seed);

}  // namespace rydsim
