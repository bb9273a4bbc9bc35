#pragma once

#include "tadgame/types.hpp"

namespace tad {

// Keplerian reference orbit in the elliptic regime the closed forms support.
class ReferenceOrbit {
 public:
  // Throws ConfigError unless mu > 0, p > 0 and 0 <= e <= 0.8.
  ReferenceOrbit(double mu, double p, double e);

  double mu() const { return mu_; }
  double p() const { return p_; }
  double e() const { return e_; }
  // sqrt(mu / p^3), rad/s.
  double n() const { return n_; }
  // 1 / n^2.
  double beta() const { return 1.0 / (n_ * n_); }
  // Semi-major axis p / (1 - e^2), km.
  double a() const { return p_ / (1.0 - e_ * e_); }

  static constexpr double kMaxEccentricity = 0.8;

 private:
  double mu_;
  double p_;
  double e_;
  double n_;
};

struct AnomalyPoint {
  double f;    // true anomaly, unbounded
  double E;    // eccentric anomaly on the continued branch
  double rho;  // 1 + e cos f
};

double rho(const ReferenceOrbit& orbit, double f);

// E on the branch with |E - f| < pi, so E(f) is continuous over any number of
// revolutions.
double true_to_eccentric(const ReferenceOrbit& orbit, double f);
double eccentric_to_true(const ReferenceOrbit& orbit, double E);

AnomalyPoint anomaly_point(const ReferenceOrbit& orbit, double f);

// Integral of 1/rho^2 df, i.e. (E - e sin E) / (1 - e^2)^{3/2}.
double mean_motion_integral(const ReferenceOrbit& orbit, double f);

// Fundamental matrix of the uncontrolled true-anomaly dynamics and its
// closed-form inverse.
Stm6 phi(const ReferenceOrbit& orbit, double f);
Stm6 phi_inv(const ReferenceOrbit& orbit, double f);

struct FundamentalPair {
  AnomalyPoint point;
  Stm6 phi;
  Stm6 phi_inv;
};

// phi and phi_inv sharing one evaluation of the scalar components.
FundamentalPair fundamental_pair(const ReferenceOrbit& orbit, double f);

// State transition f1 -> f2 of the uncontrolled system.
Stm6 omega11(const ReferenceOrbit& orbit, double f2, double f1);
// Costate transition f1 -> f2; equals omega11(f2, f1)^{-T}.
Stm6 omega22(const ReferenceOrbit& orbit, double f2, double f1);

}  // namespace tad
