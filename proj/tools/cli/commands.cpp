#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/problem_document.hpp"
#include "gpco/duality.hpp"
#include "gpco/errors.hpp"

namespace gpco::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string point;
  std::string dual_point;
  bool pretty = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Vector require_point(const std::string& text, const char* flag, std::size_t dim) {
  if (text.empty()) throw ParseError(std::string(flag) + " is required for this command");
  Vector v = parse_point(text);
  if (v.size() != dim)
    throw DimensionError(std::string(flag) + " has " + std::to_string(v.size()) + " coordinates, space_dim is " +
                         std::to_string(dim));
  return v;
}

ordered_json index_json(const std::vector<std::size_t>& idx) {
  ordered_json arr = ordered_json::array();
  for (auto i : idx) arr.push_back(i);
  return arr;
}

ordered_json vectors_json(const std::vector<Vector>& vs) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

ordered_json combo_json(const ConicCombo& c) {
  return {{"hull", vectors_json(c.hull)}, {"cone", vectors_json(c.cone)}, {"span", vectors_json(c.span)}};
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::Unbounded:
      return "unbounded";
  }
  return "?";
}

const char* status_name(DualStatus s) {
  switch (s) {
    case DualStatus::Optimal:
      return "optimal";
    case DualStatus::Infeasible:
      return "infeasible";
    case DualStatus::Unbounded:
      return "unbounded";
  }
  return "?";
}

ordered_json primal_json(const PrimalResult& r) {
  ordered_json j;
  j["status"] = status_name(r.status);
  if (r.status == SolveStatus::Optimal) {
    j["value"] = to_json(r.value);
    j["point"] = to_json(r.minimizer);
  } else if (r.status == SolveStatus::Unbounded) {
    j["ray"] = to_json(r.ray);
  }
  return j;
}

ordered_json dual_json(const DualResult& r) {
  ordered_json j;
  j["status"] = status_name(r.status);
  if (r.status == DualStatus::Optimal) {
    j["value"] = to_json(r.value);
    j["maximizer"] = to_json(r.maximizer);
  }
  return j;
}

int cmd_solve(const Problem& p, ordered_json& out) {
  const PrimalResult r = solve_primal(p);
  out.update(primal_json(r));
  if (r.status == SolveStatus::Infeasible) return kInfeasible;
  return r.status == SolveStatus::Unbounded ? kUnbounded : kSolved;
}

int cmd_existence(const Problem& p, ordered_json& out) {
  const ExistenceReport rep = existence_report(p);
  out["feasible"] = rep.feasible;
  if (!rep.feasible) return kInfeasible;
  out["solution_exists"] = rep.solution_exists();

  const auto& fw = *rep.frank_wolfe;
  ordered_json fwj{{"bounded_below", fw.bounded_below}};
  if (fw.bounded_below)
    fwj["lower_bound"] = to_json(fw.lower_bound);
  else
    fwj["descent_ray"] = to_json(fw.descent_ray);
  out["frank_wolfe"] = fwj;

  ordered_json eav{{"confirmed", rep.eaves->confirmed}};
  if (!rep.eaves->confirmed) eav["counterexample"] = to_json(rep.eaves->counterexample);
  out["eaves"] = eav;

  const auto& ex = *rep.explicit_criterion;
  ordered_json exj{{"member", ex.member}};
  if (ex.witness) {
    exj["lambda"] = to_json(ex.witness->lambda);
    exj["mu_constraints"] = to_json(ex.witness->mu_constraints);
    exj["mu_domain"] = to_json(ex.witness->mu_domain);
    exj["span_basis"] = vectors_json(ex.witness->span_basis);
    exj["nu"] = to_json(ex.witness->nu);
  } else {
    exj["separator"] = to_json(ex.separator->separator);
    exj["offset"] = to_json(ex.separator->offset);
    exj["descent_ray"] = to_json(ex.descent_ray);
  }
  out["explicit"] = exj;
  return rep.solution_exists() ? kSolved : kUnbounded;
}

int cmd_optimal(const Problem& p, const Options& opt, ordered_json& out) {
  const Vector x = require_point(opt.point, "--point", p.dim());
  const OptimalityVerdict verdict = verify_optimal(p, x);
  int code = kSolved;
  if (const auto* cert = std::get_if<OptimalityCertificate>(&verdict)) {
    out["verdict"] = "optimal";
    out["point"] = to_json(cert->point);
    out["value"] = to_json(evaluate(p.objective(), x));
    out["certificate"] = {{"active_pieces", index_json(cert->active_pieces)},
                          {"lambda", to_json(cert->lambda)},
                          {"active_constraints", index_json(cert->active_constraints)},
                          {"mu_constraints", to_json(cert->mu_constraints)},
                          {"active_domain", index_json(cert->active_domain)},
                          {"mu_domain", to_json(cert->mu_domain)},
                          {"span_basis", vectors_json(cert->span_basis)},
                          {"nu", to_json(cert->nu)}};
  } else {
    const auto& ref = std::get<Refutation>(verdict);
    out["verdict"] = "refuted";
    out["point"] = to_json(ref.point);
    out["value"] = to_json(evaluate(p.objective(), x));
    out["descent_direction"] = to_json(ref.descent_direction);
    out["directional_derivative"] = to_json(ref.derivative);
    code = kRefuted;
  }
  if (!opt.dual_point.empty()) {
    const Vector w = require_point(opt.dual_point, "--dual-point", p.dim());
    const JointVerdict joint = joint_certificate(p, x, w);
    if (const auto* jc = std::get_if<JointCertificate>(&joint)) {
      out["joint"] = {{"certified", true}, {"dual_point", to_json(jc->dual_point)}, {"value", to_json(jc->value)}};
    } else {
      const auto& mm = std::get<JointMismatch>(joint);
      out["joint"] = {{"certified", false},
                      {"in_normal_cone", mm.in_normal_cone},
                      {"in_negative_subdifferential", mm.in_negative_subdifferential},
                      {"values_equal", mm.values_equal},
                      {"first_failure", mm.first_failure}};
    }
  }
  return code;
}

int cmd_dual(const Problem& p, const Options& opt, ordered_json& out) {
  const DualProblem dp(p);
  const DualResult r = solve_dual(dp);
  out.update(dual_json(r));
  if (!opt.dual_point.empty()) {
    const Vector w = require_point(opt.dual_point, "--dual-point", p.dim());
    out["dual_point"] = to_json(w);
    out["dual_value"] = to_json(dual_value(dp, w));
  }
  if (r.status == DualStatus::Infeasible) return kInfeasible;
  return r.status == DualStatus::Unbounded ? kUnbounded : kSolved;
}

int cmd_report(const Problem& p, ordered_json& out) {
  const DualityReport rep = duality_report(p);
  out["primal"] = primal_json(rep.primal);
  out["dual"] = dual_json(rep.dual);
  out["gap"] = rep.gap ? to_json(*rep.gap) : ordered_json(nullptr);
  out["zero_gap"] = rep.gap.has_value() && sgn(*rep.gap) == 0;
  return kSolved;
}

int cmd_eval(const Problem& p, const Options& opt, ordered_json& out) {
  const Vector x = require_point(opt.point, "--point", p.dim());
  const GPolyFunc& f = p.objective();
  out["point"] = to_json(x);
  out["value"] = to_json(evaluate(f, x));
  out["in_constraint_set"] = contains(p.constraints(), x);
  if (contains(f.domain(), x)) {
    out["active_pieces"] = index_json(active_pieces(f, x));
    out["active_domain"] = index_json(active_set(f.domain(), x));
  }
  if (contains(p.constraints(), x)) out["active_constraints"] = index_json(active_set(p.constraints(), x));
  if (!opt.dual_point.empty()) {
    const Vector w = require_point(opt.dual_point, "--dual-point", p.dim());
    out["dual_point"] = to_json(w);
    out["conjugate_value"] = to_json(conjugate_value(f, w));
    out["dual_value"] = to_json(dual_value(DualProblem(p), w));
  }
  return kSolved;
}

int cmd_subdiff(const Problem& p, const Options& opt, ordered_json& out) {
  const Vector x = require_point(opt.point, "--point", p.dim());
  out["point"] = to_json(x);
  out["subdifferential"] = combo_json(subdifferential_at(p.objective(), x));
  if (contains(p.constraints(), x)) out["normal_cone"] = combo_json(normal_cone(p.constraints(), x));
  return kSolved;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of polyhedral convex optimization problems", "gpco"};
  app.require_subcommand(1);
  Options opt;

  auto add = [&](const char* name, const char* help, bool point_flag) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "problem document (JSON)")->required();
    if (point_flag) sub->add_option("--point", opt.point, "comma-separated rational coordinates");
    sub->add_option("--dual-point", opt.dual_point, "comma-separated rational coordinates of a dual vector");
    sub->add_flag("--pretty", opt.pretty, "indent the JSON output");
    sub->add_flag("--json", "compact JSON output (default)");
    return sub;
  };
  add("solve", "minimize f over D", false);
  add("existence", "run the three existence criteria", false);
  add("optimal", "certify or refute optimality of --point", true);
  add("dual", "solve the conjugate dual", false);
  add("report", "primal/dual duality report", false);
  add("eval", "evaluate f and active sets at --point", true);
  add("subdiff", "subdifferential and normal cone at --point", true);

  std::vector<const char*> argv{"gpco"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSolved;
  } catch (const CLI::ParseError& e) {
    err << "gpco: " << e.what() << "\n";
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Problem p = parse_problem(read_file(opt.file));
    ordered_json report;
    report["command"] = command;
    int code = kSolved;
    if (command == "solve") code = cmd_solve(p, report);
    else if (command == "existence") code = cmd_existence(p, report);
    else if (command == "optimal") code = cmd_optimal(p, opt, report);
    else if (command == "dual") code = cmd_dual(p, opt, report);
    else if (command == "report") code = cmd_report(p, report);
    else if (command == "eval") code = cmd_eval(p, opt, report);
    else code = cmd_subdiff(p, opt, report);
    out << (opt.pretty ? report.dump(2) : report.dump()) << "\n";
    return code;
  } catch (const Error& e) {
    err << "gpco: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace gpco::cli
