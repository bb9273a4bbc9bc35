#include "tadgame/orbit.hpp"

#include <cmath>
#include <numbers>

#include "tadgame/errors.hpp"

namespace tad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Scalar pieces shared by phi and phi_inv.
struct Components {
  double s, c;
  double phi1, dphi1, s_phi1;
  double phi2, dphi2, s_phi2;
  double phi3, dphi3, s_2phi3p1;
};

Components components(const ReferenceOrbit& orbit, const AnomalyPoint& pt) {
  const double e = orbit.e();
  const double q = 1.0 - e * e;
  const double s = std::sin(pt.f);
  const double c = std::cos(pt.f);
  const double rho = pt.rho;
  const double L = (pt.E - e * std::sin(pt.E)) / (q * std::sqrt(q));
  const double D = s * (2.0 + e * c) / (rho * rho);
  const double K = D - 3.0 * e * L;

  Components out{};
  out.s = s;
  out.c = c;
  out.phi1 = rho * s;
  out.dphi1 = rho * c - e * s * s;
  out.s_phi1 = -c - 0.5 * e * c * c;
  out.phi2 = e * out.phi1 / q * K - c / rho;
  out.phi3 = -out.phi1 / q * K - c * c / rho - c * c;
  out.dphi2 = e * out.dphi1 / q * K + e * s * c / (rho * rho) + s / rho;
  out.s_phi2 = -rho * rho * K / (2.0 * q);
  out.dphi3 = 2.0 * (out.dphi1 * out.s_phi2 - out.dphi2 * out.s_phi1);
  out.s_2phi3p1 = e * s * (2.0 + e * c) / q - 3.0 * rho * rho * L / q;
  return out;
}

Stm6 assemble_phi(const Components& k) {
  Stm6 m;
  // clang-format off
  m <<  k.phi1,          k.phi2,          k.phi3,             0, 0,    0,
       -2 * k.s_phi1,   -2 * k.s_phi2,   -k.s_2phi3p1,        1, 0,    0,
        0,               0,               0,                  0, k.c,  k.s,
        k.dphi1,         k.dphi2,         k.dphi3,            0, 0,    0,
       -2 * k.phi1,     -2 * k.phi2,     -2 * k.phi3 - 1,     0, 0,    0,
        0,               0,               0,                  0, -k.s, k.c;
  // clang-format on
  return m;
}

Stm6 assemble_phi_inv(const Components& k) {
  Stm6 m;
  // clang-format off
  m <<  4 * k.s_phi2 + k.dphi2,            0, 0,   -k.phi2, 2 * k.s_phi2,  0,
       -4 * k.s_phi1 - k.dphi1,            0, 0,    k.phi1, -2 * k.s_phi1, 0,
       -2,                                  0, 0,    0,      -1,           0,
       -2 * k.s_2phi3p1 - k.dphi3,          1, 0,    k.phi3, -k.s_2phi3p1, 0,
        0,                                  0, k.c,  0,       0,          -k.s,
        0,                                  0, k.s,  0,       0,           k.c;
  // clang-format on
  return m;
}

}  // namespace

ReferenceOrbit::ReferenceOrbit(double mu, double p, double e)
    : mu_(mu), p_(p), e_(e), n_(0.0) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw ConfigError("mu must be positive and finite");
  }
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw ConfigError("p must be positive and finite");
  }
  if (!(e >= 0.0 && e <= kMaxEccentricity)) {
    throw ConfigError("e must lie in [0, 0.8]");
  }
  n_ = std::sqrt(mu / (p * p * p));
}

double rho(const ReferenceOrbit& orbit, double f) {
  return 1.0 + orbit.e() * std::cos(f);
}

double true_to_eccentric(const ReferenceOrbit& orbit, double f) {
  const double e = orbit.e();
  const double principal =
      std::atan2(std::sqrt(1.0 - e * e) * std::sin(f), std::cos(f) + e);
  // E - f stays inside (-pi, pi), which pins the revolution count.
  return principal + kTwoPi * std::round((f - principal) / kTwoPi);
}

double eccentric_to_true(const ReferenceOrbit& orbit, double E) {
  const double e = orbit.e();
  const double principal =
      std::atan2(std::sqrt(1.0 - e * e) * std::sin(E), std::cos(E) - e);
  return principal + kTwoPi * std::round((E - principal) / kTwoPi);
}

AnomalyPoint anomaly_point(const ReferenceOrbit& orbit, double f) {
  return {f, true_to_eccentric(orbit, f), rho(orbit, f)};
}

double mean_motion_integral(const ReferenceOrbit& orbit, double f) {
  const double e = orbit.e();
  const double q = 1.0 - e * e;
  const double E = true_to_eccentric(orbit, f);
  return (E - e * std::sin(E)) / (q * std::sqrt(q));
}

FundamentalPair fundamental_pair(const ReferenceOrbit& orbit, double f) {
  const AnomalyPoint pt = anomaly_point(orbit, f);
  const Components k = components(orbit, pt);
  return {pt, assemble_phi(k), assemble_phi_inv(k)};
}

Stm6 phi(const ReferenceOrbit& orbit, double f) {
  return assemble_phi(components(orbit, anomaly_point(orbit, f)));
}

Stm6 phi_inv(const ReferenceOrbit& orbit, double f) {
  return assemble_phi_inv(components(orbit, anomaly_point(orbit, f)));
}

Stm6 omega11(const ReferenceOrbit& orbit, double f2, double f1) {
  return phi(orbit, f2) * phi_inv(orbit, f1);
}

Stm6 omega22(const ReferenceOrbit& orbit, double f2, double f1) {
  return phi_inv(orbit, f2).transpose() * phi(orbit, f1).transpose();
}

}  // namespace tad
