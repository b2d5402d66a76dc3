#pragma once

#include <array>
#include <complex>

#include "apforge/sequence.hpp"

namespace apforge {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major 2x2
using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

// A 2x2 unitary stored as coefficients over {I, sigma_x, sigma_y, sigma_z}:
//   U = aI I + ax sigma_x + ay sigma_y + az sigma_z.
// Products are evaluated with the Pauli rule
//   sigma_a sigma_b = delta_ab I + i eps_abc sigma_c,
// so no matrix is ever materialized except on request.
struct Su2Operator {
    Complex aI{1.0, 0.0};
    Complex ax{0.0, 0.0};
    Complex ay{0.0, 0.0};
    Complex az{0.0, 0.0};

    static Su2Operator identity() { return {}; }
    Mat2 to_matrix() const;
};

// Coefficients of the product p*q (exact Pauli-rule composition).
Su2Operator pauli_compose(const Su2Operator& p, const Su2Operator& q);
inline Su2Operator operator*(const Su2Operator& p, const Su2Operator& q) {
    return pauli_compose(p, q);
}

enum class Frame { Original, Adiabatic };

// Probability amplitudes of a pure state; the frame tag records whether they
// are original-frame (a) or adiabatic-frame (b) amplitudes.
struct SpinState {
    Complex c1{1.0, 0.0};
    Complex c2{0.0, 0.0};
    Frame frame = Frame::Adiabatic;

    double norm2() const { return std::norm(c1) + std::norm(c2); }
};

struct BlochVector {
    double sx = 0.0;
    double sy = 0.0;
    double sz = 1.0;
};

// Constant-control propagator over rescaled duration tau at amplitude v:
//   aI = cos(w tau/2), ay = i (v/w) sin(w tau/2), az = -i (1/w) sin(w tau/2)
// with w = sqrt(1+v^2).  Requires tau >= 0, v >= 0.
Su2Operator on_propagator(double tau, double v);

// Zero-control propagator: aI = cos(tau/2), az = -i sin(tau/2).  tau >= 0.
Su2Operator off_propagator(double tau);

// exp(-i angle/2 axis.sigma) for a unit 3-axis.
Su2Operator axis_propagator(const Vec3& axis, double angle);

// Ordered product of the whole bang-bang sequence (first pulse applied
// first, i.e. rightmost factor).  Rejects m < 1 and negative durations.
Su2Operator sequence_propagator(int m, double tau1, double tau2, double tau3, double v);
Su2Operator sequence_propagator(const PulseSequence& seq);

SpinState apply(const Su2Operator& op, const SpinState& state);

// (sx, sy, sz) = (2 Re c1* c2, 2 Im c1* c2, |c1|^2 - |c2|^2).
BlochVector state_to_bloch(const SpinState& state);

// Right-handed rotation of vec by angle about a unit axis; rejects a
// non-unit axis (|norm-1| > 1e-10).
Vec3 rotate3(const Vec3& axis, double angle, const Vec3& vec);

}  // namespace apforge
