// Batch front-end: evaluations, series products, Cauchy reconstruction,
// bundle-point operations, and the verification suites. One JSON document on
// standard output per run; exit 0 on success, 1 on failed verification, 2 on
// schema or option errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slicebundle/io.hpp"
#include "slicebundle/verify.hpp"

namespace {

using namespace slicebundle;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw SchemaError("cannot write file: " + out_path);
  out << j.dump() << "\n";
}

std::vector<double> parse_csv_numbers(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw SchemaError("expected a comma-separated list of numbers: " + s);
    }
  }
  if (out.empty()) throw SchemaError("empty number list");
  return out;
}

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_csv_numbers(s)) out.push_back(static_cast<int>(v));
  return out;
}

EvalPoint load_point(const std::string& path, int slot, const UnitImaginary& axis) {
  const EvalPoint p = evalpoint_from_json(load_json_file(path), axis);
  if (p.slot != slot)
    throw SchemaError("point slot " + std::to_string(p.slot) + " disagrees with --slot " +
                      std::to_string(slot));
  return p;
}

int run(int argc, char** argv) {
  CLI::App app{"computational kernel for slice regular functions of several "
               "quaternionic variables"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--output", out_path, "write the JSON result to a file instead of stdout");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a series at a slot point");
  std::string eval_series, eval_frame, eval_point;
  int eval_slot = 1;
  eval_cmd->add_option("--series", eval_series, "series file")->required();
  eval_cmd->add_option("--frame", eval_frame, "frame file")->required();
  eval_cmd->add_option("--slot", eval_slot, "quaternionic slot (1-based)")->required();
  eval_cmd->add_option("--point", eval_point, "evaluation point file")->required();

  // starmul / bulletmul
  auto* star_cmd = app.add_subcommand("starmul", "star product of two series");
  std::string star_lhs, star_rhs;
  star_cmd->add_option("--lhs", star_lhs)->required();
  star_cmd->add_option("--rhs", star_rhs)->required();

  auto* bullet_cmd = app.add_subcommand("bulletmul", "bullet product of two series in a frame");
  std::string bullet_lhs, bullet_rhs, bullet_frame;
  bullet_cmd->add_option("--lhs", bullet_lhs)->required();
  bullet_cmd->add_option("--rhs", bullet_rhs)->required();
  bullet_cmd->add_option("--frame", bullet_frame)->required();

  // invert
  auto* invert_cmd = app.add_subcommand("invert", "truncated star inverse of a series");
  std::string invert_series;
  int invert_degree = 12;
  invert_cmd->add_option("--series", invert_series)->required();
  invert_cmd->add_option("--degree", invert_degree, "truncation degree");

  // project
  auto* project_cmd = app.add_subcommand("project", "evaluate the projection of a bundle point");
  std::string project_bundle, project_point;
  int project_slot = 1;
  project_cmd->add_option("--bundle", project_bundle)->required();
  project_cmd->add_option("--slot", project_slot)->required();
  project_cmd->add_option("--point", project_point)->required();

  // components
  auto* comp_cmd =
      app.add_subcommand("components", "restriction components of a series extension");
  std::string comp_series, comp_frame, comp_point;
  int comp_slot = 1;
  comp_cmd->add_option("--series", comp_series)->required();
  comp_cmd->add_option("--frame", comp_frame)->required();
  comp_cmd->add_option("--slot", comp_slot)->required();
  comp_cmd->add_option("--point", comp_point, "grid point file {\"coords\":[[x,y],...]}")
      ->required();

  // cauchy
  auto* cauchy_cmd = app.add_subcommand("cauchy", "Cauchy reconstruction on the torus");
  std::string cau_series, cau_frame, cau_target, cau_center, cau_deriv;
  int cau_slot = 1, cau_nodes = 64;
  double cau_radius = 1.0;
  cauchy_cmd->add_option("--series", cau_series)->required();
  cauchy_cmd->add_option("--frame", cau_frame)->required();
  cauchy_cmd->add_option("--slot", cau_slot)->required();
  cauchy_cmd->add_option("--center", cau_center, "polydisc centers, n or 2n comma values")
      ->required();
  cauchy_cmd->add_option("--radius", cau_radius)->required();
  cauchy_cmd->add_option("--target", cau_target)->required();
  cauchy_cmd->add_option("--nodes", cau_nodes, "nodes per circle");
  cauchy_cmd->add_option("--deriv", cau_deriv, "derivative multi-index, comma separated");

  // bundle
  auto* bundle_cmd = app.add_subcommand("bundle", "bundle point operations");
  std::string bundle_op, bundle_lhs, bundle_rhs, bundle_u;
  bundle_cmd->add_option("--op", bundle_op, "add | bullet | star | rotate")->required();
  bundle_cmd->add_option("--lhs", bundle_lhs)->required();
  bundle_cmd->add_option("--rhs", bundle_rhs);
  bundle_cmd->add_option("--u", bundle_u, "unit quaternion w,x,y,z for rotate");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 42;
  verify_cmd->add_option("--suite", verify_suite, "core | series | several | cauchy | bundle | all");
  verify_cmd->add_option("--seed", verify_seed, "draw seed (printed in the report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval_cmd) {
      const MultiSeries f = series_from_json(load_json_file(eval_series));
      const Frame fr = frame_from_json(load_json_file(eval_frame));
      const EvalPoint p = load_point(eval_point, eval_slot, fr.i());
      emit(Json{{"value", quaternion_to_json(eval_slice(f, p))}}, out_path);
    } else if (*star_cmd) {
      const MultiSeries a = series_from_json(load_json_file(star_lhs));
      const MultiSeries b = series_from_json(load_json_file(star_rhs));
      emit(series_to_json(star_product(a, b)), out_path);
    } else if (*bullet_cmd) {
      const MultiSeries a = series_from_json(load_json_file(bullet_lhs));
      const MultiSeries b = series_from_json(load_json_file(bullet_rhs));
      const Frame fr = frame_from_json(load_json_file(bullet_frame));
      emit(series_to_json(bullet_product(a, b, fr)), out_path);
    } else if (*invert_cmd) {
      const MultiSeries f = series_from_json(load_json_file(invert_series));
      emit(series_to_json(star_inverse(f, invert_degree)), out_path);
    } else if (*project_cmd) {
      const BundlePoint bp = bundle_from_json(load_json_file(project_bundle));
      const EvalPoint p = load_point(project_point, project_slot, bp.frame().i());
      const BaseFunction f = project(bp, project_slot);
      emit(Json{{"value", quaternion_to_json(f(p.q, p.zs))}}, out_path);
    } else if (*comp_cmd) {
      const MultiSeries f = series_from_json(load_json_file(comp_series));
      const Frame fr = frame_from_json(load_json_file(comp_frame));
      const GridPoint p = gridpoint_from_json(load_json_file(comp_point));
      const SlotFunction h = [&f, &fr, comp_slot](const Quaternion& q, const PairList& others) {
        return eval_slice(f, EvalPoint{comp_slot, q, others, fr.i()});
      };
      const QuadComponents e = e_components(h, fr, comp_slot, p);
      emit(Json{{"components", Json::array({detail::jnum(e.alpha), detail::jnum(e.beta),
                                            detail::jnum(e.gamma), detail::jnum(e.delta)})}},
           out_path);
    } else if (*cauchy_cmd) {
      const MultiSeries f = series_from_json(load_json_file(cau_series));
      const Frame fr = frame_from_json(load_json_file(cau_frame));
      const EvalPoint target = load_point(cau_target, cau_slot, fr.i());
      Polydisc pd;
      pd.axis = fr.i();
      pd.radius = cau_radius;
      const std::vector<double> cs = parse_csv_numbers(cau_center);
      if (static_cast<int>(cs.size()) == f.vars()) {
        for (double c : cs) pd.centers.push_back(Complex{c, 0.0});
      } else if (static_cast<int>(cs.size()) == 2 * f.vars()) {
        for (std::size_t k = 0; k + 1 < cs.size(); k += 2)
          pd.centers.push_back(Complex{cs[k], cs[k + 1]});
      } else {
        throw SchemaError("--center expects n or 2n comma-separated values");
      }
      Quaternion value;
      if (cau_deriv.empty()) {
        value = cauchy_eval(f, pd, cau_slot, fr, target, cau_nodes);
      } else {
        value = cauchy_deriv(f, pd, cau_slot, fr, target, parse_csv_ints(cau_deriv), cau_nodes);
      }
      emit(Json{{"value", quaternion_to_json(value)}}, out_path);
    } else if (*bundle_cmd) {
      const BundlePoint a = bundle_from_json(load_json_file(bundle_lhs));
      BundlePoint result = a;
      if (bundle_op == "rotate") {
        if (bundle_u.empty()) throw SchemaError("--u is required for rotate");
        const std::vector<double> uv = parse_csv_numbers(bundle_u);
        if (uv.size() != 4) throw SchemaError("--u expects w,x,y,z");
        result = bp_rotate(UnitQuaternion(Quaternion{uv[0], uv[1], uv[2], uv[3]}), a);
      } else {
        if (bundle_rhs.empty()) throw SchemaError("--rhs is required for " + bundle_op);
        const BundlePoint b = bundle_from_json(load_json_file(bundle_rhs));
        if (bundle_op == "add")
          result = bp_add(a, b);
        else if (bundle_op == "bullet")
          result = bp_bullet(a, b);
        else if (bundle_op == "star")
          result = bp_star(a, b);
        else
          throw SchemaError("unknown bundle op: " + bundle_op);
      }
      emit(bundle_to_json(result), out_path);
    } else if (*verify_cmd) {
      const std::vector<CheckResult> checks = run_suite(verify_suite, verify_seed);
      Json rows = Json::array();
      bool pass = true;
      for (const CheckResult& c : checks) {
        pass = pass && c.pass;
        rows.push_back(Json{{"check", c.name},
                            {"max_residual", detail::jnum(c.max_residual)},
                            {"tolerance", detail::jnum(c.tolerance)},
                            {"pass", c.pass}});
      }
      emit(Json{{"seed", verify_seed}, {"suite", verify_suite}, {"checks", rows},
                {"pass", pass}},
           out_path);
      return pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
