#include "monohull/serialize.hpp"

#include <sstream>

namespace monohull {

namespace {

Json rationals_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const Rational& v : values) arr.push_back(to_string(v));
  return arr;
}

std::string family_label(const LinearInequality& row) {
  if (row.index == 0) return row.family;
  return row.family + "[" + std::to_string(row.index) + "]";
}

// Appends "+ c x_i" / "- c x_i" with the coefficient magnitude elided
// when it is 1.
void append_term(std::ostringstream& out, const Rational& coefficient,
                 const std::string& symbol, bool& first) {
  if (coefficient == 0) return;
  const bool negative = coefficient < 0;
  const Rational magnitude = negative ? Rational(-coefficient) : coefficient;
  if (first) {
    if (negative) out << "-";
    first = false;
  } else {
    out << (negative ? " - " : " + ");
  }
  if (magnitude != 1) out << to_string(magnitude) << " ";
  out << symbol;
}

}  // namespace

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::Cn1: return "cn1";
    case SystemKind::Cn0: return "cn0";
    case SystemKind::McCormick22: return "mccormick";
    case SystemKind::LiftedQ: return "lifted_q";
  }
  return "?";
}

std::string to_string(XnChoice choice) {
  return choice == XnChoice::Upper ? "upper" : "lower";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Inside: return "inside";
    case Verdict::Boundary: return "boundary";
    case Verdict::Outside: return "outside";
  }
  return "?";
}

std::string to_string(Winner winner) {
  switch (winner) {
    case Winner::PiB: return "pi_b";
    case Winner::PiA: return "pi_a";
    case Winner::ZeroB: return "zero_b";
    case Winner::ZeroA: return "zero_a";
  }
  return "?";
}

std::string to_string(CertificateCase tag) {
  switch (tag) {
    case CertificateCase::A1: return "A1";
    case CertificateCase::A2a: return "A2a";
    case CertificateCase::A2b: return "A2b";
    case CertificateCase::A3: return "A3";
    case CertificateCase::A4: return "A4";
    case CertificateCase::B1: return "B1";
    case CertificateCase::B2: return "B2";
    case CertificateCase::B3: return "B3";
    case CertificateCase::B4: return "B4";
  }
  return "?";
}

std::string system_to_text(const InequalitySystem& sys) {
  std::ostringstream out;
  for (const LinearInequality& row : sys.rows) {
    out << family_label(row) << " " << to_string(row.coef_y);
    for (const Rational& c : row.coef_x) out << " " << to_string(c);
    out << " " << to_string(row.rhs) << "\n";
  }
  return out.str();
}

std::string inequality_to_pretty(const LinearInequality& row) {
  std::ostringstream out;
  bool first = true;
  append_term(out, row.coef_y, "y", first);
  for (std::size_t j = 0; j < row.coef_x.size(); ++j)
    append_term(out, row.coef_x[j], "x" + std::to_string(j + 1), first);
  if (first) out << "0";
  out << " >= " << to_string(row.rhs);
  return out.str();
}

std::string system_to_pretty(const InequalitySystem& sys) {
  std::ostringstream out;
  out << "kind=" << to_string(sys.kind) << " n=" << sys.n
      << " rows=" << sys.rows.size() << "\n";
  int idx = 1;
  for (const LinearInequality& row : sys.rows) {
    out << "  " << idx++ << ") " << family_label(row) << ": "
        << inequality_to_pretty(row) << "\n";
  }
  return out.str();
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["n"] = inst.n();
  doc["an"] = to_string(inst.a_n());
  doc["b"] = rationals_to_json(inst.b());
  return doc;
}

Json system_to_json(const InequalitySystem& sys) {
  Json doc;
  doc["kind"] = to_string(sys.kind);
  doc["n"] = sys.n;
  doc["lower"] = rationals_to_json(sys.lower);
  doc["upper"] = rationals_to_json(sys.upper);
  Json rows = Json::array();
  for (const LinearInequality& row : sys.rows) {
    Json r;
    r["family"] = row.family;
    r["index"] = row.index;
    r["coef_y"] = to_string(row.coef_y);
    r["coef_x"] = rationals_to_json(row.coef_x);
    r["rhs"] = to_string(row.rhs);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

Json vertex_to_json(const Vertex& v) {
  Json doc;
  Json t = Json::array();
  for (std::size_t i = 0; i + 1 < v.x.size(); ++i)
    if ((v.t_mask >> i) & 1) t.push_back(static_cast<int>(i) + 1);
  doc["T"] = std::move(t);
  doc["xn"] = to_string(v.xn);
  doc["x"] = rationals_to_json(v.x);
  doc["y"] = to_string(v.y);
  return doc;
}

Json vertices_to_json(const std::vector<Vertex>& verts) {
  Json arr = Json::array();
  for (const Vertex& v : verts) arr.push_back(vertex_to_json(v));
  return arr;
}

Json classification_to_json(const IndexSets& sets) {
  Json doc;
  doc["case"] = sets.case_a ? "A" : "B";
  doc["plus"] = sets.plus;
  doc["minus"] = sets.minus;
  doc["s_plus"] = to_string(sets.s_plus);
  doc["s_minus"] = to_string(sets.s_minus);
  doc["pi"] = to_string(sets.pi);
  if (sets.case_a) doc["k"] = sets.k;
  return doc;
}

Json candidates_to_json(const CandidateValues& cand) {
  Json doc;
  doc["z_pi_b"] = to_string(cand.z_pi_b);
  doc["z_pi_a"] = to_string(cand.z_pi_a);
  doc["z_0_b"] = to_string(cand.z_0_b);
  doc["z_0_a"] = to_string(cand.z_0_a);
  return doc;
}

Json primal_result_to_json(const PrimalResult& result) {
  Json doc;
  doc["winner"] = to_string(result.winner);
  doc["z_star"] = to_string(result.z_star);
  doc["vertex"] = vertex_to_json(result.vertex);
  return doc;
}

Json certificate_to_json(const DualCertificate& cert) {
  Json doc;
  doc["case"] = to_string(cert.case_tag);
  if (cert.ell != 0) doc["ell"] = cert.ell;
  doc["u1"] = to_string(cert.u1);
  doc["u2"] = to_string(cert.u2);
  doc["s1"] = to_string(cert.s1);
  doc["s2"] = to_string(cert.s2);
  doc["v"] = rationals_to_json(cert.v);
  doc["w"] = rationals_to_json(cert.w);
  doc["t"] = rationals_to_json(cert.t);
  return doc;
}

Json verification_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const CheckResult& check : report.checks) {
    Json c;
    c["name"] = check.name;
    c["pass"] = check.pass;
    c["residual"] = to_string(check.residual);
    checks.push_back(std::move(c));
  }
  Json doc;
  doc["checks"] = std::move(checks);
  doc["all_pass"] = report.all_pass();
  return doc;
}

Json decomposition_to_json(const VolumeDecomposition& d) {
  Json doc;
  doc["vol_B"] = to_string(d.vol_B);
  doc["vol_Pn"] = to_string(d.vol_Pn);
  doc["vol_Q"] = to_string(d.vol_Q);
  doc["cone_Fi_each"] = to_string(d.cone_Fi_each);
  doc["cone_Fi_total"] = to_string(d.cone_Fi_total);
  doc["cone_F"] = to_string(d.cone_F);
  doc["total"] = to_string(d.total);
  return doc;
}

Json volume_report_to_json(const VolumeReport& report) {
  Json doc;
  doc["closed_form"] = to_string(report.closed_form);
  doc["decomposition"] = decomposition_to_json(report.decomposition);
  if (report.monte_carlo) {
    Json mc;
    mc["estimate"] = report.monte_carlo->estimate;
    mc["std_error"] = report.monte_carlo->std_error;
    mc["samples"] = report.monte_carlo->samples;
    mc["seed"] = report.monte_carlo->seed;
    doc["monte_carlo"] = std::move(mc);
  }
  return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace monohull
