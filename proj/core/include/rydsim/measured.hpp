#pragma once

#include <cmath>

namespace rydsim {

// A scalar with a 1-sigma uncertainty. Arithmetic helpers implement
// first-order Gaussian propagation for the few combinations the
// estimators need; anything fancier is written out at the call site.
struct Measured {
    double value = 0.0;
    double sigma = 0.0;

    Measured() = default;
    Measured(double v, double s = 0.0) : value(v), sigma(s) {}
};

inline Measured operator+(const Measured& a, const Measured& b) {
    return {a.value + b.value, std::hypot(a.sigma, b.sigma)};
}
inline Measured operator-(const Measured& a, const Measured& b) {
    return {a.value - b.value, std::hypot(a.sigma, b.sigma)};
}
inline Measured operator*(const Measured& a, double k) {
    return {a.value * k, std::abs(k) * a.sigma};
}
inline Measured operator*(double k, const Measured& a) { return a * k; }

}  // namespace rydsim
