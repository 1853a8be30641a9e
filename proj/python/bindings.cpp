// Python bindings for the monohull library. Rationals cross the boundary as
// fractions.Fraction (exact in both directions); inputs accept int, str
// ("p/q", "p", decimals), or Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monohull/core.hpp"
#include "monohull/hull.hpp"
#include "monohull/optimize.hpp"
#include "monohull/serialize.hpp"
#include "monohull/volume.hpp"

namespace py = pybind11;
using namespace monohull;

namespace {

Rational to_rational(py::handle obj) {
  return parse_rational(py::str(obj).cast<std::string>());
}

std::vector<Rational> to_rationals(py::handle seq) {
  std::vector<Rational> values;
  for (py::handle item : py::iter(seq)) values.push_back(to_rational(item));
  return values;
}

py::object fraction_type() {
  static py::object type = py::module_::import("fractions").attr("Fraction");
  return type;
}

py::object to_fraction(const Rational& r) {
  return fraction_type()(to_string(r));
}

py::list to_fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const Rational& v : values) out.append(to_fraction(v));
  return out;
}

Objective make_objective(py::handle c0, py::handle c) {
  Objective obj;
  obj.c0 = to_rational(c0);
  obj.c = to_rationals(c);
  return obj;
}

std::array<Rational, 2> to_pair(py::handle seq) {
  const std::vector<Rational> values = to_rationals(seq);
  if (values.size() != 2)
    throw std::invalid_argument("expected exactly two rationals");
  return {values[0], values[1]};
}

py::list vertex_T(const Vertex& v) {
  py::list out;
  for (std::size_t i = 0; i + 1 < v.x.size(); ++i)
    if ((v.t_mask >> i) & 1) out.append(static_cast<int>(i) + 1);
  return out;
}

py::dict decomposition_dict(const VolumeDecomposition& d) {
  py::dict out;
  out["vol_B"] = to_fraction(d.vol_B);
  out["vol_Pn"] = to_fraction(d.vol_Pn);
  out["vol_Q"] = to_fraction(d.vol_Q);
  out["cone_Fi_each"] = to_fraction(d.cone_Fi_each);
  out["cone_Fi_total"] = to_fraction(d.cone_Fi_total);
  out["cone_F"] = to_fraction(d.cone_F);
  out["total"] = to_fraction(d.total);
  return out;
}

}  // namespace

PYBIND11_MODULE(_monohull, m) {
  m.doc() =
      "Exact facet systems, LP optimality certificates, and volumes for the "
      "convex hull of a product of box-bounded variables";
  m.attr("__version__") = "0.1.0";

  py::register_exception<UnsupportedError>(m, "UnsupportedError",
                                           PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](int n, py::handle an, py::handle b) {
             return Instance(n, to_rational(an), to_rationals(b));
           }),
           py::arg("n"), py::arg("an"), py::arg("b"))
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("an",
                             [](const Instance& i) { return to_fraction(i.a_n()); })
      .def_property_readonly("b",
                             [](const Instance& i) { return to_fractions(i.b()); })
      .def_property_readonly("pi",
                             [](const Instance& i) { return to_fraction(i.pi()); })
      .def_property_readonly("degenerate", &Instance::degenerate)
      .def("__repr__", [](const Instance& i) {
        std::string out = "Instance(n=" + std::to_string(i.n()) +
                          ", an=" + to_string(i.a_n()) + ", b=[";
        for (int j = 1; j <= i.n(); ++j)
          out += (j > 1 ? ", " : "") + to_string(i.b_at(j));
        return out + "])";
      });

  py::class_<Vertex>(m, "Vertex")
      .def_property_readonly("x",
                             [](const Vertex& v) { return to_fractions(v.x); })
      .def_property_readonly("y",
                             [](const Vertex& v) { return to_fraction(v.y); })
      .def_property_readonly("T", &vertex_T)
      .def_property_readonly(
          "xn", [](const Vertex& v) { return to_string(v.xn); })
      .def("__repr__", [](const Vertex& v) {
        std::string out = "Vertex(";
        for (const Rational& xi : v.x) out += to_string(xi) + ", ";
        return out + to_string(v.y) + ")";
      });

  py::class_<LinearInequality>(m, "LinearInequality")
      .def_readonly("family", &LinearInequality::family)
      .def_readonly("index", &LinearInequality::index)
      .def_property_readonly(
          "coef_y",
          [](const LinearInequality& r) { return to_fraction(r.coef_y); })
      .def_property_readonly(
          "coef_x",
          [](const LinearInequality& r) { return to_fractions(r.coef_x); })
      .def_property_readonly(
          "rhs", [](const LinearInequality& r) { return to_fraction(r.rhs); })
      .def("__repr__", &inequality_to_pretty);

  py::class_<InequalitySystem>(m, "InequalitySystem")
      .def_property_readonly(
          "kind", [](const InequalitySystem& s) { return to_string(s.kind); })
      .def_readonly("n", &InequalitySystem::n)
      .def_property_readonly(
          "lower",
          [](const InequalitySystem& s) { return to_fractions(s.lower); })
      .def_property_readonly(
          "upper",
          [](const InequalitySystem& s) { return to_fractions(s.upper); })
      .def_readonly("rows", &InequalitySystem::rows)
      .def("__len__",
           [](const InequalitySystem& s) { return s.rows.size(); })
      .def("to_text", &system_to_text)
      .def("to_json",
           [](const InequalitySystem& s) { return dump_document(system_to_json(s)); })
      .def("__repr__", &system_to_pretty);

  py::class_<PrimalResult>(m, "PrimalResult")
      .def_readonly("vertex", &PrimalResult::vertex)
      .def_property_readonly(
          "z_star",
          [](const PrimalResult& r) { return to_fraction(r.z_star); })
      .def_property_readonly(
          "winner", [](const PrimalResult& r) { return to_string(r.winner); })
      .def("__repr__", [](const PrimalResult& r) {
        return "PrimalResult(winner=" + to_string(r.winner) +
               ", z_star=" + to_string(r.z_star) + ")";
      });

  py::class_<DualCertificate>(m, "DualCertificate")
      .def_property_readonly(
          "case_tag",
          [](const DualCertificate& c) { return to_string(c.case_tag); })
      .def_readonly("ell", &DualCertificate::ell)
      .def_property_readonly(
          "u1", [](const DualCertificate& c) { return to_fraction(c.u1); })
      .def_property_readonly(
          "u2", [](const DualCertificate& c) { return to_fraction(c.u2); })
      .def_property_readonly(
          "s1", [](const DualCertificate& c) { return to_fraction(c.s1); })
      .def_property_readonly(
          "s2", [](const DualCertificate& c) { return to_fraction(c.s2); })
      .def_property_readonly(
          "v", [](const DualCertificate& c) { return to_fractions(c.v); })
      .def_property_readonly(
          "w", [](const DualCertificate& c) { return to_fractions(c.w); })
      .def_property_readonly(
          "t", [](const DualCertificate& c) { return to_fractions(c.t); })
      .def("__repr__", [](const DualCertificate& c) {
        return "DualCertificate(case=" + to_string(c.case_tag) + ")";
      });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_property_readonly("all_pass", &VerificationReport::all_pass)
      .def_property_readonly("checks",
                             [](const VerificationReport& r) {
                               py::list out;
                               for (const CheckResult& c : r.checks)
                                 out.append(py::make_tuple(
                                     c.name, c.pass, to_fraction(c.residual)));
                               return out;
                             })
      .def("__repr__", [](const VerificationReport& r) {
        return std::string("VerificationReport(all_pass=") +
               (r.all_pass() ? "True" : "False") + ")";
      });

  m.def("vertices", &vertices, py::arg("inst"),
        "All 2^n extreme points, ordered by (T bitmask, lower before upper)");
  m.def("facet_system_cn1", &facet_system_cn1, py::arg("inst"));
  m.def("facet_system_cn0", &facet_system_cn0, py::arg("inst"));
  m.def(
      "facet_system_mccormick",
      [](py::handle a, py::handle b) {
        return facet_system_mccormick(to_pair(a), to_pair(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "evaluate",
      [](const InequalitySystem& sys, py::handle x, py::handle y) {
        return to_fractions(evaluate(sys, Point{to_rationals(x), to_rational(y)}));
      },
      py::arg("sys"), py::arg("x"), py::arg("y"),
      "Exact slack of every row at the point (x, y)");
  m.def(
      "membership",
      [](const InequalitySystem& sys, py::handle x, py::handle y) {
        const MembershipResult r =
            membership(sys, Point{to_rationals(x), to_rational(y)});
        return py::make_tuple(to_string(r.verdict), r.violated);
      },
      py::arg("sys"), py::arg("x"), py::arg("y"),
      "(verdict, violated row positions); rows are 0-based into sys.rows");

  m.def(
      "classify",
      [](const Instance& inst, py::handle c0, py::handle c) {
        const IndexSets sets = classify(inst, make_objective(c0, c));
        py::dict out;
        out["case"] = sets.case_a ? "A" : "B";
        out["plus"] = sets.plus;
        out["minus"] = sets.minus;
        out["s_plus"] = to_fraction(sets.s_plus);
        out["s_minus"] = to_fraction(sets.s_minus);
        out["pi"] = to_fraction(sets.pi);
        if (sets.case_a) out["k"] = sets.k;
        return out;
      },
      py::arg("inst"), py::arg("c0"), py::arg("c"));
  m.def(
      "candidate_values",
      [](const Instance& inst, py::handle c0, py::handle c) {
        const Objective obj = make_objective(c0, c);
        const CandidateValues cand =
            candidate_values(inst, obj, classify(inst, obj));
        py::dict out;
        out["z_pi_b"] = to_fraction(cand.z_pi_b);
        out["z_pi_a"] = to_fraction(cand.z_pi_a);
        out["z_0_b"] = to_fraction(cand.z_0_b);
        out["z_0_a"] = to_fraction(cand.z_0_a);
        out["case"] = cand.case_a ? "A" : "B";
        return out;
      },
      py::arg("inst"), py::arg("c0"), py::arg("c"));
  m.def(
      "primal_solve",
      [](const Instance& inst, py::handle c0, py::handle c) {
        return primal_solve(inst, make_objective(c0, c));
      },
      py::arg("inst"), py::arg("c0"), py::arg("c"));
  m.def(
      "brute_force_optimize",
      [](const Instance& inst, py::handle c0, py::handle c) {
        return brute_force_optimize(inst, make_objective(c0, c));
      },
      py::arg("inst"), py::arg("c0"), py::arg("c"),
      "Independent oracle: best objective over all 2^n extreme points");
  m.def(
      "build_certificate",
      [](const Instance& inst, py::handle c0, py::handle c,
         const PrimalResult& result) {
        return build_certificate(inst, make_objective(c0, c), result);
      },
      py::arg("inst"), py::arg("c0"), py::arg("c"), py::arg("result"));
  m.def(
      "verify_certificate",
      [](const Instance& inst, py::handle c0, py::handle c,
         const DualCertificate& cert, const PrimalResult& result) {
        return verify_certificate(inst, make_objective(c0, c), cert, result);
      },
      py::arg("inst"), py::arg("c0"), py::arg("c"), py::arg("cert"),
      py::arg("result"));
  m.def(
      "dual_objective",
      [](const Instance& inst, const DualCertificate& cert) {
        return to_fraction(dual_objective(inst, cert));
      },
      py::arg("inst"), py::arg("cert"));

  m.def(
      "volume_cn1",
      [](const Instance& inst) { return to_fraction(volume_cn1(inst)); },
      py::arg("inst"));
  m.def(
      "volume_cn0",
      [](int n, py::handle b) {
        return to_fraction(volume_cn0(n, to_rationals(b)));
      },
      py::arg("n"), py::arg("b"));
  m.def(
      "volume_mccormick",
      [](py::handle a, py::handle b) {
        return to_fraction(volume_mccormick(to_pair(a), to_pair(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "volume_by_decomposition",
      [](const Instance& inst) {
        return decomposition_dict(volume_by_decomposition(inst));
      },
      py::arg("inst"));
  m.def("lifted_Q_facets", &lifted_Q_facets, py::arg("inst"));
  m.def(
      "separation_check_v2",
      [](const Instance& inst) {
        py::list out;
        for (const SeparationRow& row : separation_check_v2(inst))
          out.append(py::make_tuple(row.row, to_fraction(row.slack),
                                    row.separates));
        return out;
      },
      py::arg("inst"),
      "(row, slack, separates) per lifted pyramid facet at the top vertex");
  m.def(
      "monte_carlo_volume",
      [](const Instance& inst, long long samples, unsigned long long seed) {
        const MonteCarloResult r = monte_carlo_volume(inst, samples, seed);
        py::dict out;
        out["estimate"] = r.estimate;
        out["std_error"] = r.std_error;
        out["samples"] = r.samples;
        out["seed"] = r.seed;
        return out;
      },
      py::arg("inst"), py::arg("samples"), py::arg("seed") = 0);
  m.def(
      "volume_report",
      [](const Instance& inst, long long mc_samples, unsigned long long seed) {
        const VolumeReport r = volume_report(inst, mc_samples, seed);
        py::dict out;
        out["closed_form"] = to_fraction(r.closed_form);
        out["decomposition"] = decomposition_dict(r.decomposition);
        if (r.monte_carlo) {
          py::dict mc;
          mc["estimate"] = r.monte_carlo->estimate;
          mc["std_error"] = r.monte_carlo->std_error;
          mc["samples"] = r.monte_carlo->samples;
          mc["seed"] = r.monte_carlo->seed;
          out["monte_carlo"] = std::move(mc);
        }
        return out;
      },
      py::arg("inst"), py::arg("mc_samples") = 0, py::arg("seed") = 0);
}
