#include "rydsim/readout.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rydsim/populations.hpp"

namespace rydsim {

namespace {

void validate(const ReadoutModel& m, double atom_loss) {
    for (double p : {m.pi_pulse_error, m.imaging_error, m.raman_scatter_error,
                     atom_loss}) {
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("readout: probabilities must be in [0, 1]");
    }
    if (m.n_rounds < 0)
        throw std::invalid_argument("readout: n_rounds must be >= 0");
}

// Binomial sigma with a rule-of-succession floor so empty bins still carry
// a finite uncertainty.
Measured counted(long k, long n) {
    const double p = static_cast<double>(k) / static_cast<double>(n);
    const double pf = (static_cast<double>(k) + 0.5) / (static_cast<double>(n) + 1.0);
    return {p, std::sqrt(pf * (1.0 - pf) / static_cast<double>(n))};
}

}  // namespace

double bright_probability(Level level, const ReadoutModel& model, bool blowout,
                          double atom_loss) {
    validate(model, atom_loss);
    const double present = 1.0 - atom_loss;
    if (level == Level::ryd) return 0.0;  // excited atoms are always removed

    if (!blowout) return present * (1.0 - model.imaging_error);

    // Per-cycle survival factor common to both qubit states; a |1> atom
    // additionally needs the excitation-removal step to fail every cycle.
    const double q =
        std::max(0.0, (1.0 - model.imaging_error) * (1.0 - model.raman_scatter_error));
    if (model.n_rounds == 0) return present * (1.0 - model.imaging_error);
    const double per_round = (level == Level::g1) ? q * model.pi_pulse_error : q;
    return present * std::pow(per_round, model.n_rounds);
}

namespace {

// Joint bright/dark distribution: outcomes indexed (atom1, atom2) with
// 0 = bright, 1 = dark.
std::array<double, 4> joint_distribution(const DensityOperator& rho,
                                         const ReadoutModel& model, bool blowout,
                                         double atom_loss) {
    if (rho.n_atoms() != 2)
        throw std::invalid_argument("readout: expected a two-atom state");
    const std::vector<double> pop = populations(rho);

    std::array<double, 3> bright{};
    for (int l = 0; l < n_levels; ++l)
        bright[l] = bright_probability(static_cast<Level>(l), model, blowout,
                                       atom_loss);

    std::array<double, 4> out{};
    for (int l1 = 0; l1 < n_levels; ++l1) {
        for (int l2 = 0; l2 < n_levels; ++l2) {
            const double p = pop[n_levels * l1 + l2];
            if (p <= 0.0) continue;
            const double b1 = bright[l1], b2 = bright[l2];
            out[0] += p * b1 * b2;
            out[1] += p * b1 * (1.0 - b2);
            out[2] += p * (1.0 - b1) * b2;
            out[3] += p * (1.0 - b1) * (1.0 - b2);
        }
    }
    return out;
}

std::array<long, 4> sample_distribution(const std::array<double, 4>& probs,
                                        long shots, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::array<long, 4> counts{};
    for (long s = 0; s < shots; ++s) {
        double u = uni(rng);
        int k = 0;
        for (; k < 3; ++k) {
            if (u < probs[k]) break;
            u -= probs[k];
        }
        ++counts[k];
    }
    return counts;
}

}  // namespace

OutcomeCounts measure_with_blowout(const DensityOperator& rho,
                                   const ReadoutModel& model, double atom_loss) {
    const auto d = joint_distribution(rho, model, true, atom_loss);
    OutcomeCounts c;
    c.a00 = {d[0], 0.0};
    c.a01 = {d[1], 0.0};
    c.a10 = {d[2], 0.0};
    c.a11 = {d[3], 0.0};
    return c;
}

BrightDarkCounts measure_without_blowout(const DensityOperator& rho,
                                         const ReadoutModel& model,
                                         double atom_loss) {
    const auto d = joint_distribution(rho, model, false, atom_loss);
    BrightDarkCounts c;
    c.bbb = {d[0], 0.0};
    c.bbd = {d[1], 0.0};
    c.bdb = {d[2], 0.0};
    c.bdd = {d[3], 0.0};
    return c;
}

OutcomeCounts sample_with_blowout(const DensityOperator& rho,
                                  const ReadoutModel& model, double atom_loss,
                                  long shots, std::uint64_t seed) {
    if (shots <= 0) throw std::invalid_argument("readout: shots must be > 0");
    const auto n = sample_distribution(
        joint_distribution(rho, model, true, atom_loss), shots, seed);
    OutcomeCounts c;
    c.a00 = counted(n[0], shots);
    c.a01 = counted(n[1], shots);
    c.a10 = counted(n[2], shots);
    c.a11 = counted(n[3], shots);
    c.total_shots = shots;
    return c;
}

BrightDarkCounts sample_without_blowout(const DensityOperator& rho,
                                        const ReadoutModel& model,
                                        double atom_loss, long shots,
                                        std::uint64_t seed) {
    if (shots <= 0) throw std::invalid_argument("readout: shots must be > 0");
    const auto n = sample_distribution(
        joint_distribution(rho, model, false, atom_loss), shots, seed);
    BrightDarkCounts c;
    c.bbb = counted(n[0], shots);
    c.bbd = counted(n[1], shots);
    c.bdb = counted(n[2], shots);
    c.bdd = counted(n[3], shots);
    c.total_shots = shots;
    return c;
}

}  // namespace rydsim
