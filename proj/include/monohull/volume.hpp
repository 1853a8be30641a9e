#ifndef MONOHULL_VOLUME_HPP
#define MONOHULL_VOLUME_HPP

#include <array>
#include <optional>
#include <vector>

#include "monohull/core.hpp"
#include "monohull/hull.hpp"

namespace monohull {

// Closed-form hull volume:
//   (b_n - a_n) * prod_{i<n} b_i^2 / (n+1)! * ((n!-1) b_n + ((n-1)!-n) a_n).
Rational volume_cn1(const Instance& inst);

// Pyramid volume for the all-zero-lower-bound box:
//   prod b_i^2 * (n!-1) / (n+1)!.
Rational volume_cn0(int n, const std::vector<Rational>& b);

// Bilinear-envelope tetrahedron: (1/6) (b1-a1)^2 (b2-a2)^2.
Rational volume_mccormick(const std::array<Rational, 2>& a,
                          const std::array<Rational, 2>& b);

// The intermediate bodies of the geometric decomposition. All formulas are
// evaluated as written; the n = 2 and a_n = 0 degeneracies come out as
// exact zeros without special-casing.
Rational base_volume_B(const Instance& inst);    // corner-cut box, dim n-1
Rational prism_volume(const Instance& inst);     // B x [a_n, b_n]
Rational pyramid_Q_volume(const Instance& inst);  // prism coned to v1
Rational cone_volume_Fi(const Instance& inst);   // conv(F_i + v2), any i < n
Rational cone_volume_F(const Instance& inst);    // conv(F + v2)

// Facet description of the prism-over-v1 pyramid: the lifted prism facets
// plus y >= 0; 2n+2 rows. Unsupported at a_n = 0 (coefficients divide by
// a_n).
InequalitySystem lifted_Q_facets(const Instance& inst);

struct SeparationRow {
  int row = 0;  // 0-based position into lifted_Q_facets(inst).rows
  Rational slack;
  bool separates = false;
};

// Substitute the top full-product vertex v2 into every pyramid facet;
// exactly n rows separate it. Unsupported at a_n = 0.
std::vector<SeparationRow> separation_check_v2(const Instance& inst);

struct VolumeDecomposition {
  Rational vol_B;
  Rational vol_Pn;
  Rational vol_Q;
  Rational cone_Fi_each;
  Rational cone_Fi_total;  // (n-1) * cone_Fi_each
  Rational cone_F;
  Rational total;  // vol_Q + cone_Fi_total + cone_F
};

// Reconstructs the volume as pyramid + the cones over the n separated
// facets; total agrees with volume_cn1 exactly. a_n = 0 is allowed here.
VolumeDecomposition volume_by_decomposition(const Instance& inst);

// Floating-point diagnostics for the cone bodies: the n-measure of the
// facet and the apex height above it. Their product over (n+1) reproduces
// the exact cone volumes; the rational pipeline never computes these
// root-bearing intermediates.
struct ConeGeometry {
  double facet_measure = 0.0;
  double apex_height = 0.0;
};

ConeGeometry cone_geometry_Fi(const Instance& inst, int i);  // i in {1..n-1}
ConeGeometry cone_geometry_F(const Instance& inst);

struct MonteCarloResult {
  double estimate = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  unsigned long long seed = 0;
};

// Statistical oracle: uniform samples from the bounding box
// [0,b_1] x ... x [a_n,b_n] x [0, b_n Pi], classified against the full
// facet system in floating point with a relative slack tolerance of 2^-40.
// Deterministic for a fixed (seed, samples).
MonteCarloResult monte_carlo_volume(const Instance& inst, long long samples,
                                    unsigned long long seed);

struct VolumeReport {
  Rational closed_form;
  VolumeDecomposition decomposition;
  std::optional<MonteCarloResult> monte_carlo;
};

// Bundles the closed form, the decomposition, and (when samples > 0) a
// Monte Carlo estimate.
VolumeReport volume_report(const Instance& inst, long long mc_samples = 0,
                           unsigned long long seed = 0);

}  // namespace monohull

#endif  // MONOHULL_VOLUME_HPP
