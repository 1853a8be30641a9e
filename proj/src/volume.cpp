#include "monohull/volume.hpp"

#include <cmath>
#include <random>

namespace monohull {

namespace {

Rational pi_squared(const Instance& inst) {
  const Rational& pi = inst.pi();
  return pi * pi;
}

}  // namespace

Rational volume_cn1(const Instance& inst) {
  const int n = inst.n();
  const Rational& an = inst.a_n();
  const Rational& bn = inst.b_at(n);
  const Rational lead =
      (bn - an) * pi_squared(inst) / Rational(factorial(unsigned(n) + 1));
  const Rational inner = Rational(factorial(unsigned(n)) - 1) * bn +
                         Rational(factorial(unsigned(n) - 1) - n) * an;
  return lead * inner;
}

Rational volume_cn0(int n, const std::vector<Rational>& b) {
  if (n < 2) throw std::invalid_argument("volume requires n >= 2");
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("expected exactly n upper bounds");
  Rational prod_sq = 1;
  for (const Rational& bi : b) {
    if (bi <= 0)
      throw std::invalid_argument("upper bounds must be positive");
    prod_sq *= bi * bi;
  }
  return prod_sq * Rational(factorial(unsigned(n)) - 1) /
         Rational(factorial(unsigned(n) + 1));
}

Rational volume_mccormick(const std::array<Rational, 2>& a,
                          const std::array<Rational, 2>& b) {
  for (int i = 0; i < 2; ++i)
    if (a[static_cast<std::size_t>(i)] >= b[static_cast<std::size_t>(i)])
      throw std::invalid_argument("lower bound must be strictly below upper");
  const Rational d1 = b[0] - a[0];
  const Rational d2 = b[1] - a[1];
  return d1 * d1 * d2 * d2 / 6;
}

Rational base_volume_B(const Instance& inst) {
  const int n = inst.n();
  const Integer fact = factorial(unsigned(n) - 1);
  return Rational(fact - 1) / Rational(fact) * inst.pi();
}

Rational prism_volume(const Instance& inst) {
  return (inst.b_at(inst.n()) - inst.a_n()) * base_volume_B(inst);
}

Rational pyramid_Q_volume(const Instance& inst) {
  const int n = inst.n();
  const Integer fact = factorial(unsigned(n) - 1);
  return Rational(fact - 1) / Rational(Integer(n + 1) * fact) * inst.a_n() *
         (inst.b_at(n) - inst.a_n()) * pi_squared(inst);
}

Rational cone_volume_Fi(const Instance& inst) {
  const int n = inst.n();
  const Rational gap = inst.b_at(n) - inst.a_n();
  return gap * gap * pi_squared(inst) / Rational(Integer(n) * (n + 1));
}

Rational cone_volume_F(const Instance& inst) {
  const int n = inst.n();
  return Rational(factorial(unsigned(n) - 1) - 1) /
         Rational(factorial(unsigned(n)) * (n + 1)) * inst.b_at(n) *
         (inst.b_at(n) - inst.a_n()) * pi_squared(inst);
}

InequalitySystem lifted_Q_facets(const Instance& inst) {
  if (inst.a_n() == 0)
    throw UnsupportedError(
        "the lifted pyramid facets require a_n > 0; coefficients divide by "
        "a_n");
  const int n = inst.n();
  const Rational& an = inst.a_n();

  InequalitySystem sys;
  sys.n = n;
  sys.kind = SystemKind::LiftedQ;
  sys.lower.assign(static_cast<std::size_t>(n), Rational(0));
  sys.lower.back() = an;
  sys.upper = inst.b();

  auto blank = [n](const char* tag, int index) {
    LinearInequality r;
    r.family = tag;
    r.index = index;
    r.coef_y = 0;
    r.coef_x.assign(static_cast<std::size_t>(n), Rational(0));
    r.rhs = 0;
    return r;
  };

  // x_lb_lifted[i]:  x_i - y / (a_n prod_{j!=i,j<n} b_j) >= 0
  for (int i = 1; i < n; ++i) {
    LinearInequality r = blank(family::x_lb_lifted, i);
    r.coef_x[static_cast<std::size_t>(i) - 1] = 1;
    r.coef_y = -(Rational(1) / (an * pi_product(inst, {i, n})));
    sys.rows.push_back(std::move(r));
  }
  // x_ub[i]:  -x_i >= -b_i, i < n
  for (int i = 1; i < n; ++i) {
    LinearInequality r = blank(family::x_ub, i);
    r.coef_x[static_cast<std::size_t>(i) - 1] = -1;
    r.rhs = -inst.b_at(i);
    sys.rows.push_back(std::move(r));
  }
  // xn_lb:  x_n >= a_n
  {
    LinearInequality r = blank(family::xn_lb, 0);
    r.coef_x.back() = 1;
    r.rhs = an;
    sys.rows.push_back(std::move(r));
  }
  // xn_ub_lifted:  -x_n - ((b_n - a_n)/(a_n Pi)) y >= -b_n
  {
    LinearInequality r = blank(family::xn_ub_lifted, 0);
    r.coef_x.back() = -1;
    r.coef_y = -((inst.b_at(n) - an) / (an * inst.pi()));
    r.rhs = -inst.b_at(n);
    sys.rows.push_back(std::move(r));
  }
  // corner_cut:  -sum_{i<n} x_i/b_i + y/(a_n Pi) >= -(n-2)
  {
    LinearInequality r = blank(family::corner_cut, 0);
    for (int i = 1; i < n; ++i)
      r.coef_x[static_cast<std::size_t>(i) - 1] =
          -(Rational(1) / inst.b_at(i));
    r.coef_y = Rational(1) / (an * inst.pi());
    r.rhs = -Rational(n - 2);
    sys.rows.push_back(std::move(r));
  }
  // y_lb:  y >= 0
  {
    LinearInequality r = blank(family::y_lb, 0);
    r.coef_y = 1;
    sys.rows.push_back(std::move(r));
  }
  return sys;
}

std::vector<SeparationRow> separation_check_v2(const Instance& inst) {
  const InequalitySystem sys = lifted_Q_facets(inst);

  Point v2;
  v2.x = inst.b();
  v2.y = inst.b_at(inst.n()) * inst.pi();

  const std::vector<Rational> slacks = evaluate(sys, v2);
  std::vector<SeparationRow> table;
  table.reserve(slacks.size());
  for (std::size_t r = 0; r < slacks.size(); ++r)
    table.push_back(SeparationRow{static_cast<int>(r), slacks[r],
                                  slacks[r] < 0});
  return table;
}

VolumeDecomposition volume_by_decomposition(const Instance& inst) {
  const int n = inst.n();
  VolumeDecomposition d;
  d.vol_B = base_volume_B(inst);
  d.vol_Pn = prism_volume(inst);
  d.vol_Q = pyramid_Q_volume(inst);
  d.cone_Fi_each = cone_volume_Fi(inst);
  d.cone_Fi_total = Rational(n - 1) * d.cone_Fi_each;
  d.cone_F = cone_volume_F(inst);
  d.total = d.vol_Q + d.cone_Fi_total + d.cone_F;
  return d;
}

ConeGeometry cone_geometry_Fi(const Instance& inst, int i) {
  const int n = inst.n();
  if (i < 1 || i >= n) throw std::invalid_argument("index must be in {1..n-1}");
  const double gap = (inst.b_at(n) - inst.a_n()).convert_to<double>();
  const double prod = inst.pi().convert_to<double>();
  const double prod_in = pi_product(inst, {i, n}).convert_to<double>();
  const double an = inst.a_n().convert_to<double>();
  const double root = std::sqrt(1.0 + an * an * prod_in * prod_in);
  ConeGeometry g;
  g.facet_measure = gap * prod * root / n;
  g.apex_height = gap * prod / root;
  return g;
}

ConeGeometry cone_geometry_F(const Instance& inst) {
  const int n = inst.n();
  const double gap = (inst.b_at(n) - inst.a_n()).convert_to<double>();
  const double bn = inst.b_at(n).convert_to<double>();
  const double prod = inst.pi().convert_to<double>();
  const double an = inst.a_n().convert_to<double>();
  const double root = std::sqrt(gap * gap + an * an * prod * prod);
  const double fact = Rational(factorial(unsigned(n) - 1)).convert_to<double>();
  ConeGeometry g;
  g.facet_measure = (fact - 1.0) / (fact * n) * prod * root;
  g.apex_height = gap * bn * prod / root;
  return g;
}

MonteCarloResult monte_carlo_volume(const Instance& inst, long long samples,
                                    unsigned long long seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const int n = inst.n();
  const InequalitySystem sys = facet_system_cn1(inst);

  struct FloatRow {
    double coef_y;
    std::vector<double> coef_x;
    double rhs;
  };
  std::vector<FloatRow> rows;
  rows.reserve(sys.rows.size());
  for (const LinearInequality& row : sys.rows) {
    FloatRow fr;
    fr.coef_y = row.coef_y.convert_to<double>();
    fr.rhs = row.rhs.convert_to<double>();
    for (const Rational& c : row.coef_x)
      fr.coef_x.push_back(c.convert_to<double>());
    rows.push_back(std::move(fr));
  }

  std::vector<double> lo(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> hi(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 1; i <= n; ++i)
    hi[static_cast<std::size_t>(i) - 1] = inst.b_at(i).convert_to<double>();
  lo[static_cast<std::size_t>(n) - 1] = inst.a_n().convert_to<double>();
  hi.back() = (inst.b_at(n) * inst.pi()).convert_to<double>();

  double box_volume = 1.0;
  for (std::size_t j = 0; j < lo.size(); ++j) box_volume *= hi[j] - lo[j];

  // Bit-reproducible uniforms: take 53 bits straight from the generator
  // rather than going through a distribution.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double a, double b) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return a + u * (b - a);
  };

  const double rel_tol = std::ldexp(1.0, -40);
  std::vector<double> point(static_cast<std::size_t>(n) + 1, 0.0);
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < point.size(); ++j)
      point[j] = uniform(lo[j], hi[j]);
    bool in = true;
    for (const FloatRow& row : rows) {
      double slack = row.coef_y * point.back() - row.rhs;
      double magnitude =
          std::fabs(row.coef_y * point.back()) + std::fabs(row.rhs);
      for (std::size_t j = 0; j + 1 < point.size(); ++j) {
        slack += row.coef_x[j] * point[j];
        magnitude += std::fabs(row.coef_x[j] * point[j]);
      }
      if (slack < -rel_tol * std::max(1.0, magnitude)) {
        in = false;
        break;
      }
    }
    if (in) ++hits;
  }

  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  MonteCarloResult result;
  result.estimate = box_volume * p;
  result.std_error =
      box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  result.samples = samples;
  result.seed = seed;
  return result;
}

VolumeReport volume_report(const Instance& inst, long long mc_samples,
                           unsigned long long seed) {
  VolumeReport report;
  report.closed_form = volume_cn1(inst);
  report.decomposition = volume_by_decomposition(inst);
  if (mc_samples > 0)
    report.monte_carlo = monte_carlo_volume(inst, mc_samples, seed);
  return report;
}

}  // namespace monohull
