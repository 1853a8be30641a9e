#include <doctest.h>

#include <cmath>

#include "monohull/random.hpp"
#include "monohull/volume.hpp"

using namespace monohull;

namespace {

Instance spec22() { return Instance(2, 1, {Rational(2), Rational(3)}); }
Instance spec31() { return Instance(3, 1, {Rational(1), Rational(1), Rational(2)}); }

}  // namespace

TEST_CASE("closed-form volume") {
  CHECK(volume_cn1(spec22()) == Rational(8, 3));
  CHECK(volume_cn1(spec31()) == Rational(3, 8));
  // a_n = 0 collapses to the pyramid formula.
  const Instance degenerate(3, 0, {Rational(1), Rational(1), Rational(2)});
  CHECK(volume_cn1(degenerate) == volume_cn0(3, degenerate.b()));
}

TEST_CASE("pyramid volume formula") {
  CHECK(volume_cn0(2, {Rational(1), Rational(1)}) == Rational(1, 6));
  CHECK(volume_cn0(3, {Rational(1), Rational(1), Rational(1)}) ==
        Rational(5, 24));
  CHECK(volume_cn0(2, {Rational(2), Rational(3)}) == 6);
  CHECK_THROWS_AS(volume_cn0(1, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(volume_cn0(2, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(volume_cn0(2, {Rational(0), Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("bilinear envelope volume") {
  CHECK(volume_mccormick({Rational(0), Rational(0)},
                         {Rational(1), Rational(1)}) == Rational(1, 6));
  // Only the side lengths matter.
  CHECK(volume_mccormick({Rational(1), Rational(1)},
                         {Rational(2), Rational(2)}) == Rational(1, 6));
  CHECK(volume_mccormick({Rational(0), Rational(1)},
                         {Rational(2), Rational(3)}) == Rational(8, 3));
  CHECK_THROWS_AS(
      volume_mccormick({Rational(2), Rational(0)}, {Rational(1), Rational(1)}),
      std::invalid_argument);
}

TEST_CASE("decomposition summands") {
  SUBCASE("corner-cut base") {
    CHECK(base_volume_B(spec31()) == Rational(1, 2));
    CHECK(base_volume_B(spec22()) == 0);  // 1! - 1 = 0
    const Instance inst4(4, 1, {Rational(1), Rational(1), Rational(1), Rational(2)});
    CHECK(base_volume_B(inst4) == Rational(5, 6));
  }
  SUBCASE("prism") {
    CHECK(prism_volume(spec31()) == Rational(1, 2));
    CHECK(prism_volume(spec22()) == 0);
    // Linear in each b_i, i < n.
    const Instance doubled(3, 1, {Rational(2), Rational(1), Rational(2)});
    CHECK(prism_volume(doubled) == 2 * prism_volume(spec31()));
  }
  SUBCASE("pyramid over the prism") {
    CHECK(pyramid_Q_volume(spec31()) == Rational(1, 8));
    CHECK(pyramid_Q_volume(spec22()) == 0);
    const Instance degenerate(3, 0, {Rational(1), Rational(1), Rational(2)});
    CHECK(pyramid_Q_volume(degenerate) == 0);  // apex sits in the base plane
  }
  SUBCASE("per-facet cones") {
    CHECK(cone_volume_Fi(spec31()) == Rational(1, 12));
    CHECK(cone_volume_Fi(spec22()) == Rational(8, 3));
    CHECK(cone_volume_F(spec31()) == Rational(1, 12));
    CHECK(cone_volume_F(spec22()) == 0);
    const Instance inst4(4, 1, {Rational(1), Rational(1), Rational(1), Rational(2)});
    CHECK(cone_volume_F(inst4) == Rational(1, 12));
  }
}

TEST_CASE("decomposition equals the closed form") {
  SUBCASE("worked examples") {
    const VolumeDecomposition d3 = volume_by_decomposition(spec31());
    CHECK(d3.vol_Q == Rational(1, 8));
    CHECK(d3.cone_Fi_total == Rational(1, 6));
    CHECK(d3.cone_F == Rational(1, 12));
    CHECK(d3.total == Rational(3, 8));
    CHECK(d3.total == volume_cn1(spec31()));

    const VolumeDecomposition d2 = volume_by_decomposition(spec22());
    CHECK(d2.vol_Q == 0);
    CHECK(d2.cone_Fi_total == Rational(8, 3));
    CHECK(d2.cone_F == 0);
    CHECK(d2.total == Rational(8, 3));
  }
  SUBCASE("random instances, including a_n = 0") {
    Rng rng(71);
    for (int n = 2; n <= 10; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        const Instance inst = random_instance(rng, n, /*zero_an=*/trial % 5 == 0);
        const VolumeDecomposition d = volume_by_decomposition(inst);
        CHECK(d.total == d.vol_Q + d.cone_Fi_total + d.cone_F);
        CHECK(d.total == volume_cn1(inst));
      }
    }
  }
}

TEST_CASE("limit consistency") {
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const Instance inst = random_instance(rng, n, /*zero_an=*/true);
    CHECK(volume_cn1(inst) == volume_cn0(n, inst.b()));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = random_instance(rng, 2);
    CHECK(volume_cn1(inst) ==
          volume_mccormick({Rational(0), inst.a_n()},
                           {inst.b_at(1), inst.b_at(2)}));
  }
}

TEST_CASE("homogeneity") {
  Rng rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    const Instance inst = random_instance(rng, n);
    const Rational lambda = random_rational(rng, 1, 8, 4) / 2;
    REQUIRE(lambda > 0);

    // Scale the first n-1 bounds: volume multiplies by lambda^(2(n-1)).
    std::vector<Rational> b_scaled = inst.b();
    for (int i = 0; i + 1 < n; ++i) b_scaled[static_cast<std::size_t>(i)] *= lambda;
    const Instance side_scaled(n, inst.a_n(), b_scaled);
    Rational factor = 1;
    for (int i = 0; i < 2 * (n - 1); ++i) factor *= lambda;
    CHECK(volume_cn1(side_scaled) == factor * volume_cn1(inst));

    // Scale (a_n, b_n): volume multiplies by lambda^2.
    std::vector<Rational> b_top = inst.b();
    b_top.back() *= lambda;
    const Instance top_scaled(n, inst.a_n() * lambda, b_top);
    CHECK(volume_cn1(top_scaled) == lambda * lambda * volume_cn1(inst));
  }
}

TEST_CASE("volume strictly decreases in a_n") {
  Rng rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const Instance base = random_instance(rng, n, /*zero_an=*/true);
    Rational previous = volume_cn1(base);
    for (int step = 1; step <= 6; ++step) {
      const Rational a_n = base.b_at(n) * Rational(step, 7);
      const Instance moved(n, a_n, base.b());
      const Rational current = volume_cn1(moved);
      CHECK(current < previous);
      previous = current;
    }
  }
}

TEST_CASE("lifted pyramid facets") {
  const Instance inst = spec31();
  const InequalitySystem sys = lifted_Q_facets(inst);
  const int n = inst.n();
  REQUIRE(static_cast<int>(sys.rows.size()) == 2 * n + 2);
  CHECK(sys.kind == SystemKind::LiftedQ);

  // Extreme points of the pyramid: the zero-product vertices plus the
  // full-product point at the bottom (v1).
  std::vector<Vertex> extremes;
  for (const Vertex& v : vertices(inst))
    if (v.y == 0) extremes.push_back(v);
  REQUIRE(extremes.size() == (std::size_t(1) << n) - 2);
  Vertex v1;
  v1.x = inst.b();
  v1.x.back() = inst.a_n();
  v1.t_mask = (std::uint64_t(1) << (n - 1)) - 1;
  v1.xn = XnChoice::Lower;
  v1.y = inst.a_n() * inst.pi();
  extremes.push_back(v1);

  for (const Vertex& v : extremes)
    for (const Rational& s : evaluate(sys, to_point(v)))
      CHECK(s >= 0);

  // The lifting puts v1 on the lifted lower bounds, the lifted x_n upper
  // bound, and the lifted corner cut (as the apex it sits on every facet
  // except the base y >= 0).
  const std::vector<Rational> v1_slacks = evaluate(sys, to_point(v1));
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const std::string& fam = sys.rows[r].family;
    if (fam == family::x_lb_lifted || fam == family::xn_ub_lifted ||
        fam == family::corner_cut)
      CHECK(v1_slacks[r] == 0);
    if (fam == family::y_lb) CHECK(v1_slacks[r] > 0);
  }

  const Instance degenerate(3, 0, {Rational(1), Rational(1), Rational(2)});
  CHECK_THROWS_AS(lifted_Q_facets(degenerate), UnsupportedError);
}

TEST_CASE("separation of the top vertex from the pyramid") {
  Rng rng(89);
  for (int n = 2; n <= 8; ++n) {
    const Instance inst = random_instance(rng, n);
    const InequalitySystem sys = lifted_Q_facets(inst);
    const std::vector<SeparationRow> table = separation_check_v2(inst);
    REQUIRE(table.size() == sys.rows.size());

    const Rational& an = inst.a_n();
    const Rational& bn = inst.b_at(n);
    int separating = 0;
    for (const SeparationRow& entry : table) {
      const LinearInequality& row = sys.rows[static_cast<std::size_t>(entry.row)];
      if (row.family == family::x_lb_lifted) {
        CHECK(entry.slack == inst.b_at(row.index) * (1 - bn / an));
        CHECK(entry.separates);
      } else if (row.family == family::x_ub) {
        CHECK(entry.slack == 0);
        CHECK_FALSE(entry.separates);
      } else if (row.family == family::xn_lb) {
        CHECK(entry.slack == bn - an);
        CHECK_FALSE(entry.separates);
      } else if (row.family == family::xn_ub_lifted) {
        CHECK(entry.slack == -(bn - an) * bn / an);
        CHECK(entry.separates);
      } else if (row.family == family::corner_cut) {
        CHECK(entry.slack == bn / an - 1);
        CHECK_FALSE(entry.separates);
      } else if (row.family == family::y_lb) {
        CHECK(entry.slack == bn * inst.pi());
        CHECK_FALSE(entry.separates);
      }
      if (entry.separates) ++separating;
    }
    CHECK(separating == n);
  }
  const Instance degenerate(3, 0, {Rational(1), Rational(1), Rational(2)});
  CHECK_THROWS_AS(separation_check_v2(degenerate), UnsupportedError);
}

TEST_CASE("cone geometry diagnostics reproduce the rational cone volumes") {
  Rng rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    const Instance inst = random_instance(rng, n);
    const double fi = cone_volume_Fi(inst).convert_to<double>();
    for (int i = 1; i < n; ++i) {
      const ConeGeometry g = cone_geometry_Fi(inst, i);
      CHECK(g.facet_measure * g.apex_height / (n + 1) ==
            doctest::Approx(fi).epsilon(1e-12));
    }
    const ConeGeometry g = cone_geometry_F(inst);
    const double f = cone_volume_F(inst).convert_to<double>();
    CHECK(g.facet_measure * g.apex_height / (n + 1) ==
          doctest::Approx(f).epsilon(1e-12));
  }
  CHECK_THROWS_AS(cone_geometry_Fi(spec31(), 3), std::invalid_argument);
  CHECK_THROWS_AS(cone_geometry_Fi(spec31(), 0), std::invalid_argument);
}

TEST_CASE("monte carlo estimator") {
  SUBCASE("a single sample is all-or-nothing") {
    const Instance inst = spec22();
    const MonteCarloResult r = monte_carlo_volume(inst, 1, 5);
    const double box = 2.0 * 2.0 * 6.0;
    CHECK((r.estimate == 0.0 || r.estimate == box));
    CHECK(r.std_error == 0.0);
  }
  SUBCASE("rejects a nonpositive sample count") {
    CHECK_THROWS_AS(monte_carlo_volume(spec22(), 0, 1), std::invalid_argument);
  }
  SUBCASE("deterministic for a fixed seed") {
    const MonteCarloResult a = monte_carlo_volume(spec31(), 5000, 42);
    const MonteCarloResult b = monte_carlo_volume(spec31(), 5000, 42);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    const MonteCarloResult c = monte_carlo_volume(spec31(), 5000, 43);
    CHECK(a.estimate != c.estimate);  // astronomically unlikely to collide
  }
  SUBCASE("agrees with the closed form within 4 standard errors") {
    const MonteCarloResult r = monte_carlo_volume(spec22(), 200000, 7);
    const double truth = 8.0 / 3.0;
    CHECK(std::fabs(r.estimate - truth) <= 4.0 * r.std_error);
  }
}

TEST_CASE("volume report wiring") {
  const VolumeReport report = volume_report(spec31(), 2000, 9);
  CHECK(report.closed_form == Rational(3, 8));
  CHECK(report.decomposition.total == report.closed_form);
  REQUIRE(report.monte_carlo.has_value());
  CHECK(report.monte_carlo->samples == 2000);
  CHECK(report.monte_carlo->seed == 9);
  CHECK_FALSE(volume_report(spec31()).monte_carlo.has_value());
}
