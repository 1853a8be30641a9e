#include "monohull/optimize.hpp"

#include <algorithm>

namespace monohull {

namespace {

void require_dims(const Instance& inst, const Objective& obj) {
  if (static_cast<int>(obj.c.size()) != inst.n())
    throw std::invalid_argument("objective dimension does not match instance");
}

const Rational& coef(const Objective& obj, int i) {  // 1-based
  return obj.c[static_cast<std::size_t>(i) - 1];
}

Vertex vertex_from_mask(const Instance& inst, std::uint64_t mask,
                        XnChoice xn) {
  const int n = inst.n();
  Vertex v;
  v.t_mask = mask;
  v.xn = xn;
  v.x.resize(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i)
    v.x[static_cast<std::size_t>(i) - 1] =
        (mask >> (i - 1)) & 1 ? inst.b_at(i) : Rational(0);
  v.x.back() = (xn == XnChoice::Upper) ? inst.b_at(n) : inst.a_n();
  v.y = 1;
  for (const Rational& xi : v.x) v.y *= xi;
  return v;
}

[[noreturn]] void contradiction(const char* tag) {
  throw InternalContradictionError(
      std::string("certificate precondition failed for case ") + tag);
}

}  // namespace

IndexSets classify(const Instance& inst, const Objective& obj) {
  require_dims(inst, obj);
  IndexSets sets;
  sets.pi = inst.pi();
  for (int i = 1; i < inst.n(); ++i) {
    const Rational contribution = coef(obj, i) * inst.b_at(i);
    if (coef(obj, i) >= 0) {
      sets.plus.push_back(i);
      sets.s_plus += contribution;
    } else {
      sets.minus.push_back(i);
      sets.s_minus += contribution;
    }
  }
  sets.case_a = sets.minus.empty();
  if (sets.case_a) {
    sets.k = sets.plus.front();
    Rational best = coef(obj, sets.k) * inst.b_at(sets.k);
    for (int i : sets.plus) {
      const Rational value = coef(obj, i) * inst.b_at(i);
      if (value < best) {
        best = value;
        sets.k = i;
      }
    }
  }
  return sets;
}

CandidateValues candidate_values(const Instance& inst, const Objective& obj,
                                 const IndexSets& sets) {
  require_dims(inst, obj);
  const int n = inst.n();
  const Rational& cn = coef(obj, n);
  const Rational& bn = inst.b_at(n);
  const Rational& an = inst.a_n();
  const Rational& pi = sets.pi;

  CandidateValues cand;
  cand.case_a = sets.case_a;
  if (sets.case_a) {
    const Rational ckbk = coef(obj, sets.k) * inst.b_at(sets.k);
    cand.z_pi_b = obj.c0 * bn * pi + cn * bn + sets.s_plus;
    cand.z_pi_a = obj.c0 * an * pi + cn * an + sets.s_plus;
    cand.z_0_b = cn * bn + sets.s_plus - ckbk;
    cand.z_0_a = cn * an + sets.s_plus - ckbk;
  } else {
    const Rational s = sets.s_plus + sets.s_minus;
    cand.z_pi_b = obj.c0 * bn * pi + cn * bn + s;
    cand.z_pi_a = obj.c0 * an * pi + cn * an + s;
    cand.z_0_b = cn * bn + sets.s_plus;
    cand.z_0_a = cn * an + sets.s_plus;
  }
  return cand;
}

PrimalResult primal_solve(const Instance& inst, const Objective& obj) {
  const IndexSets sets = classify(inst, obj);
  const CandidateValues cand = candidate_values(inst, obj, sets);
  const int n = inst.n();

  const std::pair<Winner, const Rational*> ordered[] = {
      {Winner::PiB, &cand.z_pi_b},
      {Winner::PiA, &cand.z_pi_a},
      {Winner::ZeroB, &cand.z_0_b},
      {Winner::ZeroA, &cand.z_0_a},
  };
  Winner winner = Winner::PiB;
  const Rational* best = &cand.z_pi_b;
  for (const auto& [tag, value] : ordered) {
    if (*value > *best) {
      best = value;
      winner = tag;
    }
  }

  const std::uint64_t full = (std::uint64_t(1) << (n - 1)) - 1;
  std::uint64_t mask = full;
  XnChoice xn = XnChoice::Upper;
  switch (winner) {
    case Winner::PiB:
      break;
    case Winner::PiA:
      xn = XnChoice::Lower;
      break;
    case Winner::ZeroB:
    case Winner::ZeroA: {
      if (sets.case_a) {
        mask = full ^ (std::uint64_t(1) << (sets.k - 1));
      } else {
        mask = 0;
        for (int i : sets.plus) mask |= std::uint64_t(1) << (i - 1);
      }
      xn = (winner == Winner::ZeroB) ? XnChoice::Upper : XnChoice::Lower;
      break;
    }
  }
  return PrimalResult{vertex_from_mask(inst, mask, xn), *best, winner};
}

Rational objective_value(const Objective& obj, const Vertex& v) {
  Rational value = obj.c0 * v.y;
  for (std::size_t j = 0; j < v.x.size(); ++j) value += obj.c[j] * v.x[j];
  return value;
}

PrimalResult brute_force_optimize(const Instance& inst, const Objective& obj) {
  require_dims(inst, obj);
  const std::vector<Vertex> verts = vertices(inst);
  const int n = inst.n();
  const std::uint64_t full = (std::uint64_t(1) << (n - 1)) - 1;

  std::size_t best = 0;
  Rational best_value = objective_value(obj, verts[0]);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    Rational value = objective_value(obj, verts[i]);
    if (value > best_value) {
      best_value = std::move(value);
      best = i;
    }
  }
  const Vertex& v = verts[best];
  Winner winner;
  if (v.t_mask == full)
    winner = (v.xn == XnChoice::Upper) ? Winner::PiB : Winner::PiA;
  else
    winner = (v.xn == XnChoice::Upper) ? Winner::ZeroB : Winner::ZeroA;
  return PrimalResult{v, best_value, winner};
}

DualCertificate build_certificate(const Instance& inst, const Objective& obj,
                                  const PrimalResult& result) {
  require_dims(inst, obj);
  if (inst.a_n() == 0)
    throw UnsupportedError(
        "dual certificates require a_n > 0; the constructions divide by a_n");

  const int n = inst.n();
  const IndexSets sets = classify(inst, obj);
  const Rational& an = inst.a_n();
  const Rational& bn = inst.b_at(n);
  const Rational& pi = sets.pi;
  const Rational& c0 = obj.c0;
  const Rational& cn = coef(obj, n);

  DualCertificate cert;
  cert.v.assign(static_cast<std::size_t>(n) - 1, Rational(0));
  cert.w.assign(static_cast<std::size_t>(n) - 1, Rational(0));
  cert.t.assign(static_cast<std::size_t>(n), Rational(0));
  auto v_at = [&cert](int i) -> Rational& {
    return cert.v[static_cast<std::size_t>(i) - 1];
  };
  auto w_at = [&cert](int i) -> Rational& {
    return cert.w[static_cast<std::size_t>(i) - 1];
  };
  auto t_at = [&cert](int i) -> Rational& {
    return cert.t[static_cast<std::size_t>(i) - 1];
  };

  if (sets.case_a) {
    const int k = sets.k;
    const Rational ckbk = coef(obj, k) * inst.b_at(k);

    switch (result.winner) {
      case Winner::PiB: {  // case A1
        if (cn + c0 * pi < 0) contradiction("A1");
        if (ckbk + c0 * bn * pi < 0) contradiction("A1");
        cert.case_tag = CertificateCase::A1;
        cert.ell = 1;
        cert.u2 = negative_part(c0);
        v_at(1) = positive_part(c0);
        t_at(1) = coef(obj, 1) + (an / inst.b_at(1)) * pi * positive_part(c0) -
                  (bn / inst.b_at(1)) * pi * negative_part(c0);
        t_at(n) = cn + c0 * pi;
        for (int i = 2; i < n; ++i)
          t_at(i) = coef(obj, i) - (bn / inst.b_at(i)) * pi * negative_part(c0);
        break;
      }
      case Winner::PiA: {
        if (cn + c0 * pi > 0) contradiction("A2");
        if (c0 >= 0) {  // case A2a
          cert.case_tag = CertificateCase::A2a;
          cert.ell = 1;
          v_at(1) = c0;
          t_at(1) = coef(obj, 1) + c0 * an * pi / inst.b_at(1);
          for (int i = 2; i < n; ++i) t_at(i) = coef(obj, i);
          cert.s2 = -(cn + c0 * pi);
        } else {  // case A2b
          if (ckbk + c0 * an * pi - (bn - an) * positive_part(cn) < 0)
            contradiction("A2b");
          cert.case_tag = CertificateCase::A2b;
          cert.u1 = -c0 - positive_part(cn) / pi;
          cert.u2 = positive_part(cn) / pi;
          for (int i = 1; i < n; ++i)
            t_at(i) = (coef(obj, i) * inst.b_at(i) + c0 * an * pi -
                       (bn - an) * positive_part(cn)) /
                      inst.b_at(i);
          cert.s2 = negative_part(cn);
        }
        break;
      }
      case Winner::ZeroB: {  // case A3
        if (cn < 0) contradiction("A3");
        if (c0 * bn * pi + ckbk > 0) contradiction("A3");
        if (-ckbk - c0 * an * pi + cn * (bn - an) < 0) contradiction("A3");
        cert.case_tag = CertificateCase::A3;
        cert.u1 = positive_part(ckbk - cn * bn) / (an * pi);
        cert.u2 = std::min(cn, Rational(ckbk / bn)) / pi;
        for (int i = 1; i < n; ++i)
          if (i != k) t_at(i) = coef(obj, i) - ckbk / inst.b_at(i);
        t_at(n) = positive_part(cn * bn - ckbk) / bn;
        cert.s1 = -c0 - cert.u1 - cert.u2;
        break;
      }
      case Winner::ZeroA: {  // case A4
        if (cn > 0) contradiction("A4");
        if (ckbk + c0 * an * pi > 0) contradiction("A4");
        cert.case_tag = CertificateCase::A4;
        cert.u1 = ckbk / (an * pi);
        for (int i = 1; i < n; ++i)
          if (i != k) t_at(i) = coef(obj, i) - ckbk / inst.b_at(i);
        cert.s1 = -(ckbk + c0 * an * pi) / (an * pi);
        cert.s2 = -cn;
        break;
      }
    }
    return cert;
  }

  // Case B: u1 = u2 = 0 throughout.
  const Rational& sminus = sets.s_minus;
  switch (result.winner) {
    case Winner::PiB: {  // case B1
      if (cn + c0 * pi < 0) contradiction("B1");
      if (c0 * bn * pi + sminus < 0) contradiction("B1");
      if (c0 * bn * pi + sminus + cn * (bn - an) < 0) contradiction("B1");
      cert.case_tag = CertificateCase::B1;
      const Rational sigma = negative_part(cn) / pi;
      for (int i : sets.minus) {
        const Rational lambda = coef(obj, i) * inst.b_at(i) / sminus;
        v_at(i) = sigma * lambda;
        w_at(i) = (c0 - sigma) * lambda;
        t_at(i) = coef(obj, i) + (an / inst.b_at(i)) * pi * v_at(i) +
                  (bn / inst.b_at(i)) * pi * w_at(i);
      }
      for (int i : sets.plus) t_at(i) = coef(obj, i);
      t_at(n) = cn + pi * sigma;
      break;
    }
    case Winner::PiA: {  // case B2
      if (cn + c0 * pi > 0) contradiction("B2");
      if (c0 * an * pi + sminus < 0) contradiction("B2");
      cert.case_tag = CertificateCase::B2;
      const int ell = sets.minus.front();
      cert.ell = ell;
      for (int i : sets.minus)
        if (i != ell) v_at(i) = -(coef(obj, i) * inst.b_at(i)) / (an * pi);
      v_at(ell) =
          (c0 * an * pi + sminus - coef(obj, ell) * inst.b_at(ell)) / (an * pi);
      for (int i : sets.plus) t_at(i) = coef(obj, i);
      t_at(ell) = (c0 * an * pi + sminus) / inst.b_at(ell);
      cert.s2 = -(cn + c0 * pi);
      break;
    }
    case Winner::ZeroB: {  // case B3
      if (cn < 0) contradiction("B3");
      if (c0 * bn * pi + sminus > 0) contradiction("B3");
      cert.case_tag = CertificateCase::B3;
      for (int i : sets.minus)
        w_at(i) = -(coef(obj, i) * inst.b_at(i)) / (bn * pi);
      for (int i : sets.plus) t_at(i) = coef(obj, i);
      t_at(n) = cn;
      cert.s1 = -(c0 * bn * pi + sminus) / (bn * pi);
      break;
    }
    case Winner::ZeroA: {  // case B4
      if (cn > 0) contradiction("B4");
      if (c0 * an * pi + sminus > 0) contradiction("B4");
      if (c0 * bn * pi + sminus + cn * (bn - an) > 0) contradiction("B4");
      cert.case_tag = CertificateCase::B4;
      const Rational beta = std::min(Rational(Rational(1) / (an * pi)),
                                     Rational(-cn / ((-sminus) * pi)));
      const Rational alpha = (1 - an * pi * beta) / (bn * pi);
      for (int i : sets.minus) {
        v_at(i) = -(beta * coef(obj, i) * inst.b_at(i));
        w_at(i) = -(alpha * coef(obj, i) * inst.b_at(i));
      }
      for (int i : sets.plus) t_at(i) = coef(obj, i);
      cert.s2 = -cn + pi * beta * sminus;
      cert.s1 = -(alpha + beta) * sminus - c0;
      break;
    }
  }
  return cert;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

Rational dual_objective(const Instance& inst, const DualCertificate& cert) {
  const int n = inst.n();
  const Rational& an = inst.a_n();
  const Rational& bn = inst.b_at(n);
  const Rational pi = inst.pi();

  Rational sum_v = 0;
  for (const Rational& vi : cert.v) sum_v += vi;
  Rational value = Rational(n - 2) * an * pi * cert.u1 +
                   Rational(n - 1) * bn * pi * cert.u2 - an * pi * sum_v -
                   an * cert.s2;
  for (int i = 1; i <= n; ++i)
    value += inst.b_at(i) * cert.t[static_cast<std::size_t>(i) - 1];
  return value;
}

VerificationReport verify_certificate(const Instance& inst,
                                      const Objective& obj,
                                      const DualCertificate& cert,
                                      const PrimalResult& result) {
  require_dims(inst, obj);
  const int n = inst.n();
  const Rational& an = inst.a_n();
  const Rational& bn = inst.b_at(n);
  const Rational pi = inst.pi();

  VerificationReport report;
  auto add = [&report](const char* name, Rational residual) {
    report.checks.push_back(CheckResult{name, residual == 0, std::move(residual)});
  };

  // 1. Nonnegativity; the residual sums every violation, so 0 means clean.
  {
    Rational violation = negative_part(cert.u1) + negative_part(cert.u2) +
                         negative_part(cert.s1) + negative_part(cert.s2);
    for (const Rational& vi : cert.v) violation += negative_part(vi);
    for (const Rational& wi : cert.w) violation += negative_part(wi);
    for (const Rational& ti : cert.t) violation += negative_part(ti);
    add("dual_nonnegativity", std::move(violation));
  }
  // 2. y constraint:  -u1 - u2 + sum v + sum w - s1 = c0
  {
    Rational lhs = -cert.u1 - cert.u2 - cert.s1;
    for (const Rational& vi : cert.v) lhs += vi;
    for (const Rational& wi : cert.w) lhs += wi;
    add("dual_constraint_y", lhs - obj.c0);
  }
  // 3. x_i constraints, aggregated as a sum of absolute residuals.
  {
    Rational total = 0;
    for (int i = 1; i < n; ++i) {
      const Rational& bi = inst.b_at(i);
      const Rational lhs =
          (an / bi) * pi * cert.u1 + (bn / bi) * pi * cert.u2 -
          (an / bi) * pi * cert.v[static_cast<std::size_t>(i) - 1] -
          (bn / bi) * pi * cert.w[static_cast<std::size_t>(i) - 1] +
          cert.t[static_cast<std::size_t>(i) - 1];
      total += abs(lhs - obj.c[static_cast<std::size_t>(i) - 1]);
    }
    add("dual_constraint_x", std::move(total));
  }
  // 4. x_n constraint:  Pi u2 - Pi sum v - s2 + t_n = c_n
  {
    Rational sum_v = 0;
    for (const Rational& vi : cert.v) sum_v += vi;
    const Rational lhs = pi * cert.u2 - pi * sum_v - cert.s2 + cert.t.back();
    add("dual_constraint_xn", lhs - obj.c.back());
  }
  // 5. Dual objective equals the primal optimum.
  add("dual_objective", dual_objective(inst, cert) - result.z_star);

  return report;
}

}  // namespace monohull
