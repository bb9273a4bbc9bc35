#pragma once

#include "tadgame/orbit.hpp"
#include "tadgame/types.hpp"

namespace tad {

// Scalar weights of the quadratic cost. Ra = r_a I3, Rd = r_d I3,
// Sa = diag(s_ar I3, s_av I3), Sda = diag(s_dar I3, s_dav I3).
struct WeightSet {
  double r_a = 1.0;
  double r_d = 1.0;
  double s_ar = 0.0;
  double s_av = 0.0;
  double s_dar = 0.0;
  double s_dav = 0.0;

  // Throws ConfigError unless r_a, r_d > 0 and every s >= 0.
  void validate() const;

  Mat6 s_a() const;
  Mat6 s_da() const;
  // Terminal weight diag(Sa, -Sda); also P(ff).
  Mat12 terminal() const;
};

// Antiderivative in E of phi^-1 diag(0, rho^-6 I3) phi^-T df/dE. Symmetric;
// the (1..4, 5..6) coupling entries are identically zero.
Mat6 c_hat(const ReferenceOrbit& orbit, double E);

// phi(f2) (c_hat(E2) - c_hat(E1)) phi(f1)^T.
Mat6 c1(const ReferenceOrbit& orbit, double f2, double f1);

struct VMatrices {
  Mat6 v1;
  Mat6 v2;
};

// V1 = C1 / (n^4 r_a), V2 = C1 (1/r_d - 1/r_a) / n^4.
VMatrices v_matrices(const ReferenceOrbit& orbit, const WeightSet& weights,
                     double f2, double f1);

struct UBlocks {
  Block12 u11;  // blockdiag(Omega11, Omega11)
  Block12 u12;  // [-V1, V1; V1, V2]
  Block12 u21;  // zero
  Block12 u22;  // blockdiag(Omega22, Omega22)
};

UBlocks u_blocks(const ReferenceOrbit& orbit, const WeightSet& weights,
                 double f2, double f1);

struct RiccatiSolution {
  Block12 p;
  // 1-norm condition estimate of (U22 - S U12).
  double condition = 1.0;
};

// Closed-form P(f) = (U22(ff,f) - S U12(ff,f))^-1 S U11(ff,f).
// Throws SingularFactor when the condition estimate exceeds 1e14.
RiccatiSolution riccati_p(const ReferenceOrbit& orbit, const WeightSet& weights,
                          double f, double ff);

}  // namespace tad
