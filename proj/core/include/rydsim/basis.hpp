#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace rydsim {

// Single-atom levels. |0> and |1> are the qubit ground sublevels, |r> the
// Rydberg level. The ordering g0 < g1 < ryd is fixed; every vector and
// matrix in the library is indexed in this order.
enum class Level : int { g0 = 0, g1 = 1, ryd = 2 };

inline constexpr int n_levels = 3;

inline const char* level_name(Level l) {
    switch (l) {
        case Level::g0: return "0";
        case Level::g1: return "1";
        default: return "r";
    }
}

// Two-atom basis index in lexicographic order: index = 3*first + second,
// i.e. 00, 01, 0r, 10, 11, 1r, r0, r1, rr.
constexpr int pair_index(Level first, Level second) {
    return n_levels * static_cast<int>(first) + static_cast<int>(second);
}

inline std::string pair_name(int index) {
    const Level a = static_cast<Level>(index / n_levels);
    const Level b = static_cast<Level>(index % n_levels);
    return std::string(level_name(a)) + level_name(b);
}

inline constexpr int dim_one_atom = 3;
inline constexpr int dim_two_atom = 9;

// Computational two-atom indices (no Rydberg component).
inline constexpr int idx_00 = pair_index(Level::g0, Level::g0);
inline constexpr int idx_01 = pair_index(Level::g0, Level::g1);
inline constexpr int idx_10 = pair_index(Level::g1, Level::g0);
inline constexpr int idx_11 = pair_index(Level::g1, Level::g1);
inline constexpr int idx_rr = pair_index(Level::ryd, Level::ryd);

}  // namespace rydsim
