#ifndef MONOHULL_OPTIMIZE_HPP
#define MONOHULL_OPTIMIZE_HPP

#include <string>
#include <vector>

#include "monohull/core.hpp"
#include "monohull/hull.hpp"

namespace monohull {

// Linear objective c0 * y + sum_i c[i] * x_i, to be maximized over the hull.
struct Objective {
  Rational c0;
  std::vector<Rational> c;  // size n, slot i-1 holds c_i
};

// Step 1: sign-split the first n-1 coefficients and compute S+, S-, Pi,
// and (case A only) the cheapest-to-zero index k. Coefficients equal to
// zero count as nonnegative; k ties resolve to the smallest index.
IndexSets classify(const Instance& inst, const Objective& obj);

// Step 2: the four candidate objective values, by the case A / case B
// formulas (full vs zero product, x_n at its lower vs upper bound).
struct CandidateValues {
  Rational z_pi_b;
  Rational z_pi_a;
  Rational z_0_b;
  Rational z_0_a;
  bool case_a = false;
};
CandidateValues candidate_values(const Instance& inst, const Objective& obj,
                                 const IndexSets& sets);

enum class Winner { PiB, PiA, ZeroB, ZeroA };

struct PrimalResult {
  Vertex vertex;
  Rational z_star;
  Winner winner = Winner::PiB;
};

// Step 3: pick the best candidate and return its extreme point. Ties are
// broken by the fixed priority PiB > PiA > ZeroB > ZeroA, which keeps every
// certificate precondition non-strict.
PrimalResult primal_solve(const Instance& inst, const Objective& obj);

// Independent oracle: evaluate the objective at all 2^n extreme points and
// return the best, ties broken by the enumeration order of vertices().
PrimalResult brute_force_optimize(const Instance& inst, const Objective& obj);

enum class CertificateCase { A1, A2a, A2b, A3, A4, B1, B2, B3, B4 };

// Dual variable assignment proving optimality of a primal result by exact
// strong duality. v, w run over {1..n-1} (slot i-1); t runs over {1..n}.
struct DualCertificate {
  Rational u1, u2, s1, s2;
  std::vector<Rational> v;
  std::vector<Rational> w;
  std::vector<Rational> t;
  CertificateCase case_tag = CertificateCase::A1;
  int ell = 0;  // the fixed index used by cases A1, A2a, B2; else 0
};

// Selects the construction by (case, winner), with the A-side PiA winner
// split on the sign of c0, and fills every dual variable by that case's
// closed formulas. Throws UnsupportedError when a_n = 0 (the formulas
// divide by a_n) and InternalContradictionError if the selected case's
// precondition inequalities fail, which would mean a bug here, not bad
// input.
DualCertificate build_certificate(const Instance& inst, const Objective& obj,
                                  const PrimalResult& result);

struct CheckResult {
  std::string name;
  bool pass = false;
  Rational residual;  // exactly 0 on pass
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// The five feasibility/optimality checks, all in exact arithmetic:
//   1. every dual variable is nonnegative
//   2. the y dual constraint holds with equality
//   3. the x_i dual constraints hold with equality, i < n
//   4. the x_n dual constraint holds with equality
//   5. the dual objective equals z_star
// Failures are reported, never thrown.
VerificationReport verify_certificate(const Instance& inst,
                                      const Objective& obj,
                                      const DualCertificate& cert,
                                      const PrimalResult& result);

Rational dual_objective(const Instance& inst, const DualCertificate& cert);
Rational objective_value(const Objective& obj, const Vertex& v);

std::string to_string(Winner winner);
std::string to_string(CertificateCase tag);

}  // namespace monohull

#endif  // MONOHULL_OPTIMIZE_HPP
