#pragma once

namespace apforge {

// Bang-bang control in rescaled time: two boundary "on" pulses of duration
// tau1 at amplitude v, m "off" pulses of duration tau2, and m-1 interior
// "on" pulses of duration tau3.  Chronological layout:
//   on(tau1) [off(tau2) on(tau3)]^(m-1) off(tau2) on(tau1)
// The degenerate form tau2 = 0, m = 1 is a single constant pulse of
// duration 2*tau1 (the classical constant-control protocol).
struct PulseSequence {
    double v = 0.0;
    int m = 1;
    double tau1 = 0.0;
    double tau2 = 0.0;
    double tau3 = 0.0;

    double total_rescaled() const { return 2.0 * tau1 + m * tau2 + (m - 1) * tau3; }
    double on_area() const { return v * (2.0 * tau1 + (m - 1) * tau3); }
    double total_on() const { return 2.0 * tau1 + (m - 1) * tau3; }
};

// Throws std::invalid_argument on m < 1, negative durations, or non-finite
// fields.  Area/boundary consistency is checked where boundary conditions
// are known (solver, dynamics).
void validate_sequence(const PulseSequence& seq);

}  // namespace apforge
