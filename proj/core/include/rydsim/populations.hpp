#pragma once

#include <vector>

#include "rydsim/state.hpp"

namespace rydsim {

// Basis-state populations, indexed as the state is. Values are clamped to
// [0, 1]; small negative diagonal entries from integration error are
// truncated at zero.
inline std::vector<double> populations(const QuantumState& s) {
    std::vector<double> p(s.dim());
    for (int k = 0; k < s.dim(); ++k) p[k] = std::norm(s.amplitudes(k));
    return p;
}

inline std::vector<double> populations(const DensityOperator& rho) {
    std::vector<double> p(rho.dim());
    for (int k = 0; k < rho.dim(); ++k) {
        const double v = rho.matrix(k, k).real();
        p[k] = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    }
    return p;
}

}  // namespace rydsim
