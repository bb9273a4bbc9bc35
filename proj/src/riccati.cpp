#include "tadgame/riccati.hpp"

#include <array>
#include <cmath>

#include "tadgame/errors.hpp"
#include "tadgame/tolerances.hpp"

namespace tad {

void WeightSet::validate() const {
  if (!(r_a > 0.0) || !(r_d > 0.0)) {
    throw ConfigError("control weights r_a and r_d must be positive");
  }
  if (!(s_ar >= 0.0 && s_av >= 0.0 && s_dar >= 0.0 && s_dav >= 0.0)) {
    throw ConfigError("terminal weights must be non-negative");
  }
}

Mat6 WeightSet::s_a() const {
  Vec6 d;
  d << s_ar, s_ar, s_ar, s_av, s_av, s_av;
  return d.asDiagonal();
}

Mat6 WeightSet::s_da() const {
  Vec6 d;
  d << s_dar, s_dar, s_dar, s_dav, s_dav, s_dav;
  return d.asDiagonal();
}

Mat12 WeightSet::terminal() const { return block_diag(s_a(), -s_da()); }

Mat6 c_hat(const ReferenceOrbit& orbit, double E) {
  const double e = orbit.e();
  const double s = std::sin(E);
  const double c = std::cos(E);

  // sq[k] = (1 - e^2)^(k/2)
  std::array<double, 16> sq{};
  sq[0] = 1.0;
  sq[1] = std::sqrt(1.0 - e * e);
  for (std::size_t k = 2; k < sq.size(); ++k) sq[k] = sq[k - 1] * sq[1];

  const double e2 = e * e, e3 = e2 * e, e4 = e3 * e, e5 = e4 * e;
  const double e6 = e5 * e, e7 = e6 * e, e8 = e7 * e;
  const double E2 = E * E;
  const double c2 = c * c, c3 = c2 * c, c4 = c3 * c, c5 = c4 * c;
  const double s2 = s * s;

  Mat6 m = Mat6::Zero();

  m(0, 0) =
      -3.0 / (2.0 * sq[15]) *
      (-((-2.0 / 15 * e4 - 2.0 / 15 * e2 + 2.0 / 15) * s + e3 * E) * e3 * c4 -
       8.0 / 3 *
           ((-5.0 / 32 * e4 - 1.0 / 16 * e2 - 5.0 / 16) * s +
            e * (1 + e2) * E) *
           e2 * c3 -
       2 * e *
           ((7.0 / 9 - 4.0 / 45 * e6 + (E2 - 44.0 / 45) * e4 -
             7.0 / 15 * e2) *
                s -
            13.0 / 2 * e3 * E - 4 * e * E) *
           c2 +
       ((1 - 49.0 / 24 * e6 + (3 * E2 - 187.0 / 12) * e4 - 85.0 / 12 * e2) *
            s -
        8 * e * (1 + e4) * E) *
           c +
       (16.0 / 45 * e7 + (-4 * E2 + 1016.0 / 45) * e5 +
        (126.0 / 5 + 6 * E2) * e3 + 128.0 / 9 * e) *
           s +
       (-5.0 / 3 - 49.0 / 24 * e6 + (E2 - 251.0 / 12) * e4 +
        (-63.0 / 4 - 2 * E2) * e2) *
           E);

  m(0, 1) =
      1.0 / (60.0 * sq[12]) *
      (-12 * e3 * c5 + (-15 * e6 + 45 * e4 + 75 * e2) * c4 +
       (-40 * e5 - 100 * e3 - 140 * e) * c3 +
       (-60 * e3 * (e2 - 2) * E * s + 150 * e4 + 150 * e2 + 90) * c2 +
       ((90 * e4 * E - 360 * e2 * E) * s - 120 * e5 + 240 * e3 + 300 * e) * c +
       45 *
           ((-e3 + 4 * e) * s2 - 8.0 / 3 * (e4 - 7.0 / 2 * e2 - 3) * E * s +
            e * (e2 - 6) * E2) *
           e);

  m(0, 2) = 1.0 / (60.0 * sq[12]) *
            (-12 * e4 * c5 + (30 * e5 + 75 * e3) * c4 +
             (-100 * e4 - 180 * e2) * c3 +
             (60 * e4 * E * s + 180 * e3 + 210 * e) * c2 +
             (-270 * e3 * E * s + 120 * e4 + 420 * e2 - 120) * c +
             135 * e3 * s2 + (120 * e4 * E + 540 * e2 * E) * s -
             135 * e3 * E2 - 90 * e * E2);

  m(0, 3) =
      -3.0 / (2.0 * sq[15]) *
      (((-2.0 / 15 * e4 + 4.0 / 15 * e6) * s - e5 * E) * c4 +
       4.0 / 3 * e2 * c3 *
           ((-1.0 / 4 * e5 + 3.0 / 16 * e3 + 9.0 / 8 * e) * s +
            E * (e4 - 4 * e2 - 1)) -
       2 *
           ((e7 / 9 - 8.0 / 45 * e5 + e3 * (E2 - 86.0 / 45) + 11.0 / 9 * e) *
                s +
            2 * (e4 - 21.0 / 4 * e2 - 1) * E) *
           e * c2 +
       ((11.0 / 6 * e7 - 13.0 / 8 * e5 + (3 * E2 - 275.0 / 12) * e3 - e) * s -
        4 * E * (1 + e2) * (1 + e2)) *
           c +
       (16.0 / 3 - 4.0 / 9 * e8 - 298.0 / 45 * e6 +
        (1304.0 / 45 - 4 * E2) * e4 + (6 * E2 + 316.0 / 9) * e2) *
           s +
       e * E *
           (11.0 / 6 * e6 + 41.0 / 24 * e4 + (E2 - 129.0 / 4) * e2 - 2 * E2 -
            35.0 / 3));

  m(1, 1) = 1.0 / (2.0 * sq[11]) *
            ((-2.0 / 5 * e3 * c4 + 5.0 / 2 * e2 * c3 -
              2.0 / 3 * e * (e6 - 5 * e4 + 39.0 / 5 * e2 + 7) * c2 +
              (e6 - 9 * e4 + 75.0 / 4 * e2 + 3) * c - 4.0 / 3 * e7 +
              26.0 / 3 * e5 - 22.0 / 5 * e3 - 82.0 / 3 * e) *
                 s +
             E * (e6 - 11 * e4 + 83.0 / 4 * e2 + 5));

  m(1, 2) = -3.0 / (2.0 * sq[11]) *
            ((2.0 / 15 * e4 * c4 - 5.0 / 6 * e3 * c3 +
              (-2.0 / 9 * e6 + 28.0 / 45 * e4 + 2 * e2) * c2 +
              (e5 - 13.0 / 4 * e3 - 7.0 / 3 * e) * c - 4.0 / 9 * e6 -
              34.0 / 45 * e4 + 8 * e2 + 4.0 / 3) *
                 s +
             e * E * (e4 - 31.0 / 12 * e2 - 11.0 / 3));

  m(1, 3) = 1.0 / (60.0 * sq[12]) *
            (-12 * e4 * c5 + (-30 * e5 + 135 * e3) * c4 +
             (40 * e6 - 100 * e4 - 220 * e2) * c3 +
             (-60 * e2 * (e2 - 2) * E * s - 120 * e5 + 465 * e3 - 90 * e) * c2 +
             ((90 * e3 * E - 360 * e * E) * s - 60 * e2 + 480) * c -
             120 * (e4 - 7.0 / 2 * e2 - 3) * E * s +
             45 * ((E2 - 1) * e2 - 6 * E2 + 4) * e);

  m(2, 2) = 1.0 / (120.0 * sq[11]) *
            ((-24 * e5 * c4 + 150 * e4 * c3 + (-32 * e5 - 400 * e3) * c2 +
              (225 * e4 + 600 * e2) * c - 64 * e5 - 800 * e3 - 600 * e) *
                 s +
             225 * e4 * E + 600 * e2 * E + 120 * E);

  // The cos E coefficient is linear in sin E.
  m(2, 3) = 1.0 / (60.0 * sq[12]) *
            (-12 * e5 * c5 + (-15 * e6 + 120 * e4) * c4 +
             (60 * e5 - 340 * e3) * c3 +
             (60 * e3 * E * s - 90 * e4 + 345 * e2) * c2 +
             (-270 * e2 * E * s + 180 * e3 + 240 * e) * c +
             (120 * e3 * E + 540 * e * E) * s + (-135 * E2 + 135) * e2 -
             90 * E2);

  // 3 / (1 - e^2)^{15/2} * (e * A(E) sin E - (E / 2) * B(E))
  m(3, 3) =
      3.0 / sq[15] *
      (e *
           (-1.0 / 15 * e6 * c4 +
            (-1.0 / 6 * e7 + 5.0 / 4 * e5 - 43.0 / 24 * e3) * c3 +
            e2 * (-1.0 / 9 * e6 + 17.0 / 15 * e4 + E2 - 28.0 / 9 * e2 + 4.0 / 3) *
                c2 -
            3.0 / 2 * e *
                (-7.0 / 18 * e6 + 37.0 / 12 * e4 + E2 - 287.0 / 72 * e2 -
                 119.0 / 18) *
                c -
            2.0 / 9 * e8 - e6 / 15 + 103.0 / 9 * e4 + (2 * E2 - 79.0 / 3) * e2 -
            3 * E2 - 16) *
           s -
       E / 2 *
           (-e4 * c4 + (8.0 / 3 * e5 - 8 * e3) * c3 + (-8 * e4 + 29 * e2) * c2 -
            16 * e * c - 7.0 / 6 * e8 + 29.0 / 4 * e6 + 27.0 / 8 * e4 +
            (-283.0 / 6 + E2) * e2 - 8.0 / 3 - 2 * E2));

  // C55 and C56 integrate sin^2 f / rho^6 and -sin f cos f / rho^6.
  m(4, 4) = 3.0 / (8.0 * sq[9]) *
            ((8.0 / 15 * e3 * c4 - 2 * e2 * c3 + (-8.0 / 45 * e3 + 8.0 / 3 * e) * c2 +
              (e2 - 4.0 / 3) * c - 16.0 / 45 * e3 - 8.0 / 3 * e) *
                 s +
             E * (e2 + 4.0 / 3));

  m(4, 5) = c / (4.0 * sq[10]) *
            (-4.0 / 5 * e3 * c4 + (e4 + 3 * e2) * c3 + (-4 * e3 - 4 * e) * c2 +
             (6 * e2 + 2) * c - 4 * e);

  m(5, 5) = 9.0 / (4.0 * sq[11]) *
            ((-4.0 / 45 * e3 * c4 + (2.0 / 9 * e4 + 1.0 / 3 * e2) * c3 +
              (-4.0 / 27 * e5 - 136.0 / 135 * e3 - 4.0 / 9 * e) * c2 +
              (e4 + 11.0 / 6 * e2 + 2.0 / 9) * c - 8.0 / 27 * e5 -
              452.0 / 135 * e3 - 16.0 / 9 * e) *
                 s +
             E * (e4 + 41.0 / 18 * e2 + 2.0 / 9));

  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < i; ++j) m(i, j) = m(j, i);
  }
  return m;
}

Mat6 c1(const ReferenceOrbit& orbit, double f2, double f1) {
  const Mat6 dc = c_hat(orbit, true_to_eccentric(orbit, f2)) -
                  c_hat(orbit, true_to_eccentric(orbit, f1));
  return phi(orbit, f2) * dc * phi(orbit, f1).transpose();
}

VMatrices v_matrices(const ReferenceOrbit& orbit, const WeightSet& weights,
                     double f2, double f1) {
  const double n2 = orbit.n() * orbit.n();
  const double scale = 1.0 / (n2 * n2);
  const Mat6 c = c1(orbit, f2, f1);
  return {scale / weights.r_a * c,
          scale * (1.0 / weights.r_d - 1.0 / weights.r_a) * c};
}

UBlocks u_blocks(const ReferenceOrbit& orbit, const WeightSet& weights,
                 double f2, double f1) {
  UBlocks u;
  if (f2 == f1) {
    u.u11 = Block12(Mat12::Identity());
    u.u22 = Block12(Mat12::Identity());
    return u;
  }
  const FundamentalPair at2 = fundamental_pair(orbit, f2);
  const FundamentalPair at1 = fundamental_pair(orbit, f1);
  const Mat6 om11 = at2.phi * at1.phi_inv;
  const Mat6 om22 = at2.phi_inv.transpose() * at1.phi.transpose();

  const double n2 = orbit.n() * orbit.n();
  const double scale = 1.0 / (n2 * n2);
  const Mat6 c = at2.phi * (c_hat(orbit, at2.point.E) - c_hat(orbit, at1.point.E)) *
                 at1.phi.transpose();
  const Mat6 v1 = scale / weights.r_a * c;
  const Mat6 v2 = scale * (1.0 / weights.r_d - 1.0 / weights.r_a) * c;

  u.u11 = Block12(block_diag(om11, om11));
  u.u12 = Block12::assemble(-v1, v1, v1, v2);
  u.u21 = Block12();
  u.u22 = Block12(block_diag(om22, om22));
  return u;
}

RiccatiSolution riccati_p(const ReferenceOrbit& orbit, const WeightSet& weights,
                          double f, double ff) {
  const UBlocks u = u_blocks(orbit, weights, ff, f);
  const Mat12 s = weights.terminal();
  const Mat12 factor = u.u22.value - s * u.u12.value;
  const Eigen::PartialPivLU<Mat12> lu(factor);
  const double rcond = lu.rcond();
  const double condition = rcond > 0.0 ? 1.0 / rcond : INFINITY;
  if (!(condition <= kTolerances.singular_condition)) {
    throw SingularFactor(f, condition);
  }
  RiccatiSolution out;
  out.p = Block12(lu.solve(s * u.u11.value - u.u21.value));
  out.condition = condition;
  return out;
}

}  // namespace tad
