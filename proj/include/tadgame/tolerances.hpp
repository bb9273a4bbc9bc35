#pragma once

namespace tad {

// Precision knobs shared by the library checks and the test suites.
struct Tolerances {
  double identity = 1e-10;        // phi * phi_inv against I
  double composition = 1e-9;      // STM semigroup / duality
  double vs_oracle = 1e-8;        // closed form against an RK4 oracle
  double anomaly_round_trip = 1e-12;
  double singular_condition = 1e14;  // max condition estimate of a factor we invert
  double blowup_magnitude = 1e15;    // numerical Riccati divergence guard
};

inline constexpr Tolerances kTolerances{};

}  // namespace tad
