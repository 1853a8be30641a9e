// Command-line surface over the monohull library. One subcommand per
// operation, emitting either human-oriented text or a single structured
// JSON document per invocation.
//
// Exit codes: 0 success; 1 a requested consistency check failed; 2 malformed
// input (the diagnostic names the violated precondition); 3 certification
// requested where unsupported (a_n = 0); 4 an internal-bug signal (nonzero
// verification residual or a contradicted certificate precondition).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monohull/core.hpp"
#include "monohull/hull.hpp"
#include "monohull/optimize.hpp"
#include "monohull/random.hpp"
#include "monohull/serialize.hpp"
#include "monohull/volume.hpp"

namespace {

using namespace monohull;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;
constexpr int kSchemaVersion = 1;

bool structured(const std::string& format) { return format == "structured"; }

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> values;
  std::string token;
  std::istringstream stream(csv);
  while (std::getline(stream, token, ',')) values.push_back(parse_rational(token));
  if (values.empty()) throw std::invalid_argument("empty rational list");
  return values;
}

// Instance files mirror the flag schema: "key = value" lines with keys
// n, an, b, and optionally c0, c. '#' starts a comment.
struct FileValues {
  std::optional<std::string> n, an, b, c0, c;
};

FileValues read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  FileValues values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw std::invalid_argument("instance file line " +
                                    std::to_string(lineno) +
                                    ": expected key = value");
      continue;
    }
    auto trim = [](std::string s) {
      const auto first = s.find_first_not_of(" \t\r");
      if (first == std::string::npos) return std::string();
      const auto last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n")
      values.n = value;
    else if (key == "an")
      values.an = value;
    else if (key == "b")
      values.b = value;
    else if (key == "c0")
      values.c0 = value;
    else if (key == "c")
      values.c = value;
    else
      throw std::invalid_argument("instance file: unknown key \"" + key +
                                  "\"");
  }
  return values;
}

struct InstanceOpts {
  int n = 0;
  bool n_set = false;
  std::string an;
  std::string b_csv;
  std::string file;
};

void add_instance_flags(CLI::App* cmd, InstanceOpts& opts) {
  cmd->add_option("-n", opts.n, "Number of variables (n >= 2)")
      ->each([&opts](const std::string&) { opts.n_set = true; });
  cmd->add_option("--an", opts.an, "Lower bound of x_n (rational)");
  cmd->add_option("--b", opts.b_csv, "Upper bounds b1,...,bn (rationals)");
  cmd->add_option("--instance", opts.file,
                  "Instance file with key = value lines (n, an, b)");
}

// Inline flags override file values; n defaults to the length of b.
Instance resolve_instance(const InstanceOpts& opts,
                          std::optional<Objective>* file_objective = nullptr) {
  std::string an = opts.an;
  std::string b_csv = opts.b_csv;
  std::optional<int> n;
  if (opts.n_set) n = opts.n;

  if (!opts.file.empty()) {
    const FileValues file = read_instance_file(opts.file);
    if (!n && file.n) n = static_cast<int>(std::stol(*file.n));
    if (an.empty() && file.an) an = *file.an;
    if (b_csv.empty() && file.b) b_csv = *file.b;
    if (file_objective && file.c0 && file.c) {
      Objective obj;
      obj.c0 = parse_rational(*file.c0);
      obj.c = parse_rational_list(*file.c);
      *file_objective = std::move(obj);
    }
  }
  if (b_csv.empty())
    throw std::invalid_argument("upper bounds are required (--b or --instance)");
  std::vector<Rational> b = parse_rational_list(b_csv);
  if (!n) n = static_cast<int>(b.size());
  const Rational a_n = an.empty() ? Rational(0) : parse_rational(an);
  return Instance(*n, a_n, std::move(b));
}

unsigned long long resolve_seed(const std::optional<unsigned long long>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MONOHULL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MONOHULL_SEED is not an integer");
    }
  }
  return 0;
}

void emit(const Json& doc, const std::string& format) {
  if (structured(format)) std::cout << dump_document(doc);
}

Json make_document(const char* command) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

std::string vertex_pretty(const Vertex& v) {
  std::ostringstream out;
  out << "(";
  for (const Rational& xi : v.x) out << to_string(xi) << ", ";
  out << to_string(v.y) << ")";
  return out.str();
}

// ---------------------------------------------------------------------------

int run_facets(const std::string& kind, const InstanceOpts& opts,
               const std::string& a_csv, bool pretty,
               const std::string& format) {
  InequalitySystem sys;
  if (kind == "mccormick") {
    if (a_csv.empty())
      throw std::invalid_argument("--a a1,a2 is required for --kind mccormick");
    const std::vector<Rational> a = parse_rational_list(a_csv);
    const std::vector<Rational> b = parse_rational_list(opts.b_csv);
    if (a.size() != 2 || b.size() != 2)
      throw std::invalid_argument("mccormick takes exactly two bounds per side");
    sys = facet_system_mccormick({a[0], a[1]}, {b[0], b[1]});
  } else {
    const Instance inst = resolve_instance(opts);
    sys = (kind == "cn0") ? facet_system_cn0(inst) : facet_system_cn1(inst);
  }

  if (structured(format)) {
    Json doc = make_document("facets");
    doc.update(system_to_json(sys));
    emit(doc, format);
  } else {
    std::cout << (pretty ? system_to_pretty(sys) : system_to_text(sys));
  }
  return kExitOk;
}

int run_vertices(const InstanceOpts& opts, const std::string& format) {
  const Instance inst = resolve_instance(opts);
  const std::vector<Vertex> verts = vertices(inst);
  if (structured(format)) {
    Json doc = make_document("vertices");
    doc.update(instance_to_json(inst));
    doc["count"] = verts.size();
    doc["vertices"] = vertices_to_json(verts);
    emit(doc, format);
  } else {
    for (const Vertex& v : verts) std::cout << vertex_pretty(v) << "\n";
  }
  return kExitOk;
}

int run_membership(const std::string& kind, const InstanceOpts& opts,
                   const std::string& a_csv, const std::string& x_csv,
                   const std::string& y_text, const std::string& format) {
  InequalitySystem sys;
  if (kind == "mccormick") {
    if (a_csv.empty())
      throw std::invalid_argument("--a a1,a2 is required for --kind mccormick");
    const std::vector<Rational> a = parse_rational_list(a_csv);
    const std::vector<Rational> b = parse_rational_list(opts.b_csv);
    if (a.size() != 2 || b.size() != 2)
      throw std::invalid_argument("mccormick takes exactly two bounds per side");
    sys = facet_system_mccormick({a[0], a[1]}, {b[0], b[1]});
  } else {
    const Instance inst = resolve_instance(opts);
    sys = (kind == "cn0") ? facet_system_cn0(inst) : facet_system_cn1(inst);
  }

  Point p;
  p.x = parse_rational_list(x_csv);
  p.y = parse_rational(y_text);
  const std::vector<Rational> slacks = evaluate(sys, p);
  const MembershipResult result = membership(sys, p);

  if (structured(format)) {
    Json doc = make_document("membership");
    doc["kind"] = to_string(sys.kind);
    doc["verdict"] = to_string(result.verdict);
    Json violated = Json::array();
    for (int r : result.violated) violated.push_back(r + 1);  // 1-based rows
    doc["violated"] = std::move(violated);
    Json sj = Json::array();
    for (const Rational& s : slacks) sj.push_back(to_string(s));
    doc["slacks"] = std::move(sj);
    emit(doc, format);
  } else {
    std::cout << to_string(result.verdict) << "\n";
    if (!result.violated.empty()) {
      std::cout << "violated rows:";
      for (int r : result.violated)
        std::cout << " " << (r + 1) << " ("
                  << sys.rows[static_cast<std::size_t>(r)].family
                  << (sys.rows[static_cast<std::size_t>(r)].index
                          ? "[" + std::to_string(
                                      sys.rows[static_cast<std::size_t>(r)].index) +
                                "]"
                          : "")
                  << ")";
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_optimize(const InstanceOpts& opts, const std::string& c0_text,
                 const std::string& c_csv, bool certify,
                 const std::string& format) {
  std::optional<Objective> file_obj;
  const Instance inst = resolve_instance(opts, &file_obj);

  Objective obj;
  if (!c0_text.empty() || !c_csv.empty()) {
    if (c0_text.empty() || c_csv.empty())
      throw std::invalid_argument("--c0 and --c must be given together");
    obj.c0 = parse_rational(c0_text);
    obj.c = parse_rational_list(c_csv);
  } else if (file_obj) {
    obj = std::move(*file_obj);
  } else {
    throw std::invalid_argument("an objective is required (--c0/--c flags or c0/c in the instance file)");
  }

  const IndexSets sets = classify(inst, obj);
  const CandidateValues cand = candidate_values(inst, obj, sets);
  const PrimalResult result = primal_solve(inst, obj);

  Json doc = make_document(certify ? "certify" : "optimize");
  doc.update(instance_to_json(inst));
  doc["c0"] = to_string(obj.c0);
  Json cj = Json::array();
  for (const Rational& ci : obj.c) cj.push_back(to_string(ci));
  doc["c"] = std::move(cj);
  doc["classification"] = classification_to_json(sets);
  doc["candidates"] = candidates_to_json(cand);
  doc.update(primal_result_to_json(result));

  int rc = kExitOk;
  std::optional<DualCertificate> cert;
  std::optional<VerificationReport> report;
  if (certify) {
    cert = build_certificate(inst, obj, result);  // throws on a_n = 0
    report = verify_certificate(inst, obj, *cert, result);
    doc["certificate"] = certificate_to_json(*cert);
    doc["verification"] = verification_to_json(*report);
    if (!report->all_pass()) rc = kExitInternal;
  }

  if (structured(format)) {
    emit(doc, format);
  } else {
    std::cout << "case " << (sets.case_a ? "A" : "B") << ", winner "
              << to_string(result.winner) << "\n";
    std::cout << "z* = " << to_string(result.z_star) << " at vertex "
              << vertex_pretty(result.vertex) << "\n";
    if (cert) {
      std::cout << "certificate " << to_string(cert->case_tag)
                << ", dual objective "
                << to_string(dual_objective(inst, *cert)) << "\n";
      for (const CheckResult& check : report->checks)
        std::cout << "  " << (check.pass ? "PASS" : "FAIL") << " "
                  << check.name << " residual " << to_string(check.residual)
                  << "\n";
    }
  }
  return rc;
}

int run_volume(const InstanceOpts& opts, long long samples,
               const std::optional<unsigned long long>& seed_flag, bool check,
               const std::string& format) {
  const Instance inst = resolve_instance(opts);
  const unsigned long long seed = resolve_seed(seed_flag);
  const VolumeReport report = volume_report(inst, samples, seed);
  const bool matches = report.decomposition.total == report.closed_form;

  if (structured(format)) {
    Json doc = make_document("volume");
    doc.update(instance_to_json(inst));
    doc.update(volume_report_to_json(report));
    if (check) doc["check"] = matches;
    emit(doc, format);
  } else {
    std::cout << "closed form: " << to_string(report.closed_form) << "\n";
    const VolumeDecomposition& d = report.decomposition;
    std::cout << "decomposition: vol_Q = " << to_string(d.vol_Q)
              << ", cone_Fi_total = " << to_string(d.cone_Fi_total)
              << ", cone_F = " << to_string(d.cone_F) << ", total = "
              << to_string(d.total) << "\n";
    std::cout << "  (vol_B = " << to_string(d.vol_B) << ", vol_Pn = "
              << to_string(d.vol_Pn) << ", cone_Fi_each = "
              << to_string(d.cone_Fi_each) << ")\n";
    if (report.monte_carlo) {
      const MonteCarloResult& mc = *report.monte_carlo;
      std::cout << "monte carlo: " << mc.estimate << " +/- " << mc.std_error
                << " (" << mc.samples << " samples, seed " << mc.seed << ")\n";
    }
    if (check)
      std::cout << "check: decomposition "
                << (matches ? "matches" : "DOES NOT match")
                << " the closed form\n";
  }
  return (check && !matches) ? kExitCheckFailed : kExitOk;
}

int run_verify(const InstanceOpts& opts, int objectives,
               const std::optional<unsigned long long>& seed_flag,
               const std::string& format) {
  const Instance inst = resolve_instance(opts);
  const unsigned long long seed = resolve_seed(seed_flag);
  const int n = inst.n();

  struct Check {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
  };
  std::vector<Check> checks;
  std::map<std::string, int> case_counts;

  const InequalitySystem sys = facet_system_cn1(inst);
  const std::vector<Vertex> verts = vertices(inst);

  // Vertex validity: every row has nonnegative slack at every extreme point.
  {
    bool ok = sys.rows.size() == static_cast<std::size_t>(3 * n + 2);
    for (const Vertex& v : verts) {
      for (const Rational& s : evaluate(sys, to_point(v)))
        if (s < 0) ok = false;
    }
    std::ostringstream detail;
    detail << verts.size() << " vertices x " << sys.rows.size()
           << " rows, all slacks >= 0";
    checks.push_back({"vertex_validity", ok, false, detail.str()});
  }

  // Strong duality over random objectives.
  {
    Rng rng(seed);
    bool ok = true;
    int certified = 0;
    for (int trial = 0; trial < objectives; ++trial) {
      const Objective obj = random_objective(rng, inst);
      const PrimalResult primal = primal_solve(inst, obj);
      const PrimalResult brute = brute_force_optimize(inst, obj);
      if (primal.z_star != brute.z_star) ok = false;
      if (!inst.degenerate()) {
        const DualCertificate cert = build_certificate(inst, obj, primal);
        case_counts[to_string(cert.case_tag)]++;
        if (!verify_certificate(inst, obj, cert, primal).all_pass()) ok = false;
        ++certified;
      }
    }
    std::ostringstream detail;
    detail << objectives << " objectives, z* matches brute force";
    if (certified > 0)
      detail << ", " << certified << " certificates verified";
    else
      detail << ", certificates skipped (a_n = 0)";
    checks.push_back({"strong_duality", ok, false, detail.str()});
  }

  // Volume identity.
  {
    const Rational closed = volume_cn1(inst);
    const Rational total = volume_by_decomposition(inst).total;
    checks.push_back({"volume_identity", closed == total, false,
                      "total = closed form = " + to_string(closed)});
  }

  // Separation count at the top vertex.
  if (inst.degenerate()) {
    checks.push_back(
        {"separation_count", true, true, "skipped (a_n = 0)"});
  } else {
    int separating = 0;
    for (const SeparationRow& row : separation_check_v2(inst))
      if (row.separates) ++separating;
    std::ostringstream detail;
    detail << separating << " rows separate v2 (expected n = " << n << ")";
    checks.push_back({"separation_count", separating == n, false, detail.str()});
  }

  bool all_pass = true;
  for (const Check& check : checks)
    if (!check.skipped && !check.pass) all_pass = false;

  if (structured(format)) {
    Json doc = make_document("verify");
    doc.update(instance_to_json(inst));
    doc["objectives"] = objectives;
    doc["seed"] = seed;
    Json cj = Json::array();
    for (const Check& check : checks) {
      Json c;
      c["name"] = check.name;
      c["pass"] = check.pass;
      c["skipped"] = check.skipped;
      c["detail"] = check.detail;
      cj.push_back(std::move(c));
    }
    doc["checks"] = std::move(cj);
    doc["certificate_cases"] = case_counts;
    Json diag = Json::array();
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
      Json d;
      d["row"] = r + 1;
      d["family"] = sys.rows[r].family;
      d["index"] = sys.rows[r].index;
      d["tight_vertex_rank"] =
          tight_vertex_rank(sys, static_cast<int>(r), verts);
      diag.push_back(std::move(d));
    }
    doc["facet_diagnostics"] = std::move(diag);
    doc["all_pass"] = all_pass;
    emit(doc, format);
  } else {
    for (const Check& check : checks)
      std::cout << "check " << check.name << ": "
                << (check.skipped ? "SKIP" : (check.pass ? "PASS" : "FAIL"))
                << " (" << check.detail << ")\n";
    if (!case_counts.empty()) {
      std::cout << "certificate cases:";
      for (const auto& [tag, count] : case_counts)
        std::cout << " " << tag << "=" << count;
      std::cout << "\n";
    }
    std::cout << "facet diagnostics (tight vertex rank, facet needs "
              << (n + 1) << "):";
    for (std::size_t r = 0; r < sys.rows.size(); ++r)
      std::cout << " " << tight_vertex_rank(sys, static_cast<int>(r), verts);
    std::cout << "\n";
    std::cout << (all_pass ? "all checks passed" : "SOME CHECKS FAILED")
              << "\n";
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact facet systems, optimality certificates, and volumes for the "
      "convex hull of a product of box-bounded variables"};
  app.require_subcommand(1);

  int rc = kExitOk;

  // facets ------------------------------------------------------------------
  auto* facets_cmd = app.add_subcommand(
      "facets", "Emit an inequality description (cn1, cn0, or mccormick)");
  static std::string facets_kind, facets_format = "human", facets_a;
  static bool facets_pretty = false;
  static InstanceOpts facets_inst;
  facets_cmd->add_option("--kind", facets_kind, "System kind")
      ->required()
      ->check(CLI::IsMember({"cn1", "cn0", "mccormick"}));
  add_instance_flags(facets_cmd, facets_inst);
  facets_cmd->add_option("--a", facets_a, "Lower bounds a1,a2 (mccormick)");
  facets_cmd->add_flag("--pretty", facets_pretty,
                       "Render inequalities instead of row records");
  facets_cmd->add_option("--format", facets_format)
      ->check(CLI::IsMember({"human", "structured"}));
  facets_cmd->callback([&] {
    rc = run_facets(facets_kind, facets_inst, facets_a, facets_pretty,
                    facets_format);
  });

  // vertices ----------------------------------------------------------------
  auto* vertices_cmd =
      app.add_subcommand("vertices", "Enumerate the 2^n extreme points");
  static std::string vertices_format = "human";
  static InstanceOpts vertices_inst;
  add_instance_flags(vertices_cmd, vertices_inst);
  vertices_cmd->add_option("--format", vertices_format)
      ->check(CLI::IsMember({"human", "structured"}));
  vertices_cmd->callback(
      [&] { rc = run_vertices(vertices_inst, vertices_format); });

  // membership ---------------------------------------------------------------
  auto* member_cmd = app.add_subcommand(
      "membership", "Classify a point against a facet system");
  static std::string member_kind = "cn1", member_format = "human";
  static std::string member_a, member_x, member_y;
  static InstanceOpts member_inst;
  member_cmd->add_option("--kind", member_kind)
      ->check(CLI::IsMember({"cn1", "cn0", "mccormick"}));
  add_instance_flags(member_cmd, member_inst);
  member_cmd->add_option("--a", member_a, "Lower bounds a1,a2 (mccormick)");
  member_cmd->add_option("--x", member_x, "Point coordinates x1,...,xn")
      ->required();
  member_cmd->add_option("--y", member_y, "Point coordinate y")->required();
  member_cmd->add_option("--format", member_format)
      ->check(CLI::IsMember({"human", "structured"}));
  member_cmd->callback([&] {
    rc = run_membership(member_kind, member_inst, member_a, member_x, member_y,
                        member_format);
  });

  // optimize / certify --------------------------------------------------------
  auto* opt_cmd = app.add_subcommand(
      "optimize", "Maximize c0 y + sum c_i x_i over the hull");
  static std::string opt_c0, opt_c, opt_format = "human";
  static bool opt_certify = false;
  static InstanceOpts opt_inst;
  add_instance_flags(opt_cmd, opt_inst);
  opt_cmd->add_option("--c0", opt_c0, "Objective coefficient of y");
  opt_cmd->add_option("--c", opt_c, "Objective coefficients c1,...,cn");
  opt_cmd->add_flag("--certify", opt_certify,
                    "Also build and verify the dual certificate");
  opt_cmd->add_option("--format", opt_format)
      ->check(CLI::IsMember({"human", "structured"}));
  opt_cmd->callback([&] {
    rc = run_optimize(opt_inst, opt_c0, opt_c, opt_certify, opt_format);
  });

  auto* cert_cmd = app.add_subcommand(
      "certify", "optimize with the dual certificate always built");
  static std::string cert_c0, cert_c, cert_format = "human";
  static InstanceOpts cert_inst;
  add_instance_flags(cert_cmd, cert_inst);
  cert_cmd->add_option("--c0", cert_c0, "Objective coefficient of y");
  cert_cmd->add_option("--c", cert_c, "Objective coefficients c1,...,cn");
  cert_cmd->add_option("--format", cert_format)
      ->check(CLI::IsMember({"human", "structured"}));
  cert_cmd->callback([&] {
    rc = run_optimize(cert_inst, cert_c0, cert_c, /*certify=*/true,
                      cert_format);
  });

  // volume --------------------------------------------------------------------
  auto* vol_cmd = app.add_subcommand(
      "volume", "Closed-form volume, decomposition, and Monte Carlo estimate");
  static std::string vol_format = "human";
  static long long vol_samples = 0;
  static std::optional<unsigned long long> vol_seed;
  static bool vol_check = false;
  static InstanceOpts vol_inst;
  add_instance_flags(vol_cmd, vol_inst);
  vol_cmd->add_option("--mc-samples", vol_samples,
                      "Monte Carlo sample count (0 = skip)");
  vol_cmd->add_option("--seed", vol_seed,
                      "Sampler seed (default: MONOHULL_SEED or 0)");
  vol_cmd->add_flag("--check", vol_check,
                    "Fail unless decomposition equals the closed form");
  vol_cmd->add_option("--format", vol_format)
      ->check(CLI::IsMember({"human", "structured"}));
  vol_cmd->callback([&] {
    rc = run_volume(vol_inst, vol_samples, vol_seed, vol_check, vol_format);
  });

  // verify --------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand(
      "verify", "One-shot consistency suite for an instance");
  static std::string verify_format = "human";
  static int verify_objectives = 100;
  static std::optional<unsigned long long> verify_seed;
  static InstanceOpts verify_inst;
  add_instance_flags(verify_cmd, verify_inst);
  verify_cmd->add_option("--objectives", verify_objectives,
                         "Number of random objectives");
  verify_cmd->add_option("--seed", verify_seed,
                         "Seed (default: MONOHULL_SEED or 0)");
  verify_cmd->add_option("--format", verify_format)
      ->check(CLI::IsMember({"human", "structured"}));
  verify_cmd->callback([&] {
    rc = run_verify(verify_inst, verify_objectives, verify_seed, verify_format);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const InternalContradictionError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return rc;
}
