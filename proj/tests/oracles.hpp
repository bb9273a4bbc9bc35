#pragma once

// Independent reference computations for the tests. Nothing here calls the
// closed-form library code: dynamics are rebuilt from their definitions and
// integrated or solved numerically.

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace oracle {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat12 = Eigen::Matrix<double, 12, 12>;
using Mat24 = Eigen::Matrix<double, 24, 24>;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using Vec24 = Eigen::Matrix<double, 24, 1>;

inline constexpr double kPi = std::numbers::pi;

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// max |a - b| / max |b|
inline double rel_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return max_abs(a - b) / max_abs(b);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Tschauner-Hempel system matrix in the true-anomaly domain.
inline Mat6 a_matrix(double e, double f) {
  const double rho = 1.0 + e * std::cos(f);
  Mat6 a = Mat6::Zero();
  a(0, 3) = a(1, 4) = a(2, 5) = 1.0;
  a(3, 0) = 3.0 / rho;
  a(3, 4) = 2.0;
  a(4, 3) = -2.0;
  a(5, 2) = -1.0;
  return a;
}

// Input gain beta / rho^3 with beta = 1 / n^2.
inline double b_gain(double mu, double p, double e, double f) {
  const double rho = 1.0 + e * std::cos(f);
  return p * p * p / mu / (rho * rho * rho);
}

template <class M, class Field>
M rk4(const Field& field, M y, double f1, double f2, int steps) {
  const double h = (f2 - f1) / steps;
  for (int i = 0; i < steps; ++i) {
    const double f = f1 + i * h;
    const M k1 = field(f, y);
    const M k2 = field(f + h / 2, M(y + h / 2 * k1));
    const M k3 = field(f + h / 2, M(y + h / 2 * k2));
    const M k4 = field(f + h, M(y + h * k3));
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y;
}

inline int steps_for(double f1, double f2, double step) {
  return std::max(1, static_cast<int>(std::ceil(std::abs(f2 - f1) / step)));
}

// State transition f1 -> f2 of x' = A x by RK4.
inline Mat6 stm(double e, double f1, double f2, double step = kPi / 1e4) {
  auto field = [e](double f, const Mat6& m) -> Mat6 { return a_matrix(e, f) * m; };
  return rk4<Mat6>(field, Mat6::Identity(), f1, f2, steps_for(f1, f2, step));
}

// True anomaly of eccentric anomaly E in (-pi, pi).
inline double true_of_eccentric_principal(double e, double E) {
  return 2.0 * std::atan(std::sqrt((1 + e) / (1 - e)) * std::tan(E / 2));
}

// Eccentric anomaly by bisection on the monotone map E -> f, continued so
// that E and f lie in the same revolution.
inline double eccentric_by_bisection(double e, double f) {
  const double k = std::round(f / (2 * kPi));
  const double fr = f - 2 * kPi * k;
  if (std::abs(std::abs(fr) - kPi) < 1e-15) return f;
  double lo = -kPi;
  double hi = kPi;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (true_of_eccentric_principal(e, mid) < fr ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) + 2 * kPi * k;
}

// Integrand of the C-matrix antiderivative with respect to f.
inline Mat6 c_integrand(const Mat6& phi_inv, double e, double f) {
  const double rho = 1.0 + e * std::cos(f);
  Mat6 mid = Mat6::Zero();
  mid.bottomRightCorner<3, 3>() = std::pow(rho, -6) * Eigen::Matrix3d::Identity();
  return phi_inv * mid * phi_inv.transpose();
}

// Composite Simpson rule.
template <class M>
M simpson(const std::function<M(double)>& g, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  M sum = g(a) + g(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * g(a + i * h);
  return sum * (h / 3.0);
}

struct Weights {
  double r_a, r_d, s_ar, s_av, s_dar, s_dav;
};

struct Game {
  double mu, p, e;
  Weights w;
};

// Blocks of y' = W11 y + W12 Lambda, Lambda' = W22 Lambda.
struct W {
  Mat12 w11, w12, w22;
};

inline W w_blocks(const Game& g, double f) {
  const Mat6 a = a_matrix(g.e, f);
  const double b = b_gain(g.mu, g.p, g.e, f);
  Mat6 bb = Mat6::Zero();
  bb.bottomRightCorner<3, 3>() = b * b * Eigen::Matrix3d::Identity();
  W out;
  out.w11 = Mat12::Zero();
  out.w11.topLeftCorner<6, 6>() = a;
  out.w11.bottomRightCorner<6, 6>() = a;
  out.w12 = Mat12::Zero();
  out.w12.topLeftCorner<6, 6>() = -bb / g.w.r_a;
  out.w12.topRightCorner<6, 6>() = bb / g.w.r_a;
  out.w12.bottomLeftCorner<6, 6>() = bb / g.w.r_a;
  out.w12.bottomRightCorner<6, 6>() = bb * (1 / g.w.r_d - 1 / g.w.r_a);
  out.w22 = -out.w11.transpose();
  return out;
}

inline Mat12 terminal(const Weights& w) {
  Vec12 d;
  d << w.s_ar, w.s_ar, w.s_ar, w.s_av, w.s_av, w.s_av, -w.s_dar, -w.s_dar,
      -w.s_dar, -w.s_dav, -w.s_dav, -w.s_dav;
  return d.asDiagonal();
}

// P(f) from backward RK4 of P' = W22 P - P W11 - P W12 P, P(ff) = terminal.
inline Mat12 riccati_backward(const Game& g, double f, double ff,
                              double step = kPi / 1e4) {
  auto field = [&g](double s, const Mat12& p) -> Mat12 {
    const W w = w_blocks(g, s);
    return w.w22 * p - p * w.w11 - p * w.w12 * p;
  };
  return rk4<Mat12>(field, terminal(g.w), ff, f, steps_for(ff, f, step));
}

// Open-loop coupled [y; Lambda] system from f1 to f2.
inline Vec24 coupled(const Game& g, const Vec24& z0, double f1, double f2,
                     double step = kPi / 1e4) {
  auto field = [&g](double s, const Vec24& z) -> Vec24 {
    const W w = w_blocks(g, s);
    Vec24 out;
    out.head<12>() = w.w11 * z.head<12>() + w.w12 * z.tail<12>();
    out.tail<12>() = w.w22 * z.tail<12>();
    return out;
  };
  return rk4<Vec24>(field, z0, f1, f2, steps_for(f1, f2, step));
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace oracle
