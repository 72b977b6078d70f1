#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ffgcd/harness.hpp"
#include "ffgcd/parser.hpp"

using namespace ffgcd;

namespace {

int run(int argc, char** argv) {
  CLI::App app{"exact arithmetic over k(t): valuations, heights, gcd counting functions,\n"
               "the twisted-derivative construction, and verification suites"};
  app.set_config("--config");
  app.require_subcommand(0, 1);

  std::string expr, expr2, places_text = "inf";
  std::string poly_text;
  std::vector<std::string> unit_texts;

  auto* eval_cmd = app.add_subcommand("eval", "parse and reduce an element of k(t)");
  eval_cmd->add_option("expr", expr, "element expression")->required();

  auto* height_cmd = app.add_subcommand("height", "pole-counting height of an element");
  height_cmd->add_option("expr", expr, "element expression")->required();

  auto* gcdcount_cmd =
      app.add_subcommand("gcdcount", "N_{S,gcd} and h_gcd of two nonzero elements");
  gcdcount_cmd->add_option("f", expr, "first element")->required();
  gcdcount_cmd->add_option("g", expr2, "second element")->required();
  gcdcount_cmd->add_option("--S", places_text, "comma-separated places (default: inf)");

  auto* du_cmd = app.add_subcommand("du", "apply the twisted derivative D_u to a polynomial");
  du_cmd->add_option("--poly", poly_text, "polynomial in x1..xn over k(t)")->required();
  du_cmd->add_option("--units", unit_texts, "unit tuple u1 ... un")->required()->expected(-1);

  std::string f1_text, f2_text;
  int ref_m = 2, ref_r = 1;
  auto* refine_cmd =
      app.add_subcommand("refine", "ideal-basis construction and key-inequality report");
  refine_cmd->add_option("--F1", f1_text, "first polynomial")->required();
  refine_cmd->add_option("--F2", f2_text, "second polynomial")->required();
  refine_cmd->add_option("--units", unit_texts, "unit tuple")->required()->expected(-1);
  refine_cmd->add_option("--m", ref_m, "truncation degree (>= 2 deg F)");
  refine_cmd->add_option("--r", ref_r, "power for the coefficient space");
  refine_cmd->add_option("--S", places_text, "places (default: the units' support)");

  std::string pisot_input, pisot_text;
  long pisot_d = 2, pisot_cap = 200;
  auto* pisot_cmd = app.add_subcommand("pisot", "d-th root factorization of b(n) = sum B_i(n) beta_i^n");
  pisot_cmd->add_option("--input", pisot_input, "file with (B ; beta) pairs");
  pisot_cmd->add_option("--text", pisot_text, "inline (B ; beta) pairs");
  pisot_cmd->add_option("--d", pisot_d, "the power d >= 2");
  pisot_cmd->add_option("--m-cap", pisot_cap, "witness scan cap");

  InstanceSpec spec;
  std::string suite_name, out_path, csv_path;
  std::string eps_text;
  auto* suite_cmd = app.add_subcommand("suite", "run a verification suite");
  suite_cmd->add_option("name", suite_name, "suite name, or 'list'")->required();
  suite_cmd->add_option("--seed", spec.seed, "generator seed");
  suite_cmd->add_option("--count", spec.count, "instance count (0 = suite default)");
  suite_cmd->add_option("--epsilon", eps_text, "epsilon as a rational, e.g. 1/10");
  suite_cmd->add_option("--ell-min", spec.ell_min, "smallest exponent");
  suite_cmd->add_option("--ell-max", spec.ell_max, "largest exponent");
  suite_cmd->add_option("--m-cap", spec.m_cap, "cap on the recipe degree m");
  suite_cmd->add_option("--r-cap", spec.r_cap, "cap on the recipe power r");
  suite_cmd->add_option("--product-cap", spec.product_cap, "cap on coefficient-space products");
  suite_cmd->add_option("--pisot-m-cap", spec.pisot_m_cap, "pisot witness scan cap");
  suite_cmd->add_option("--out", out_path, "write the JSON report here");
  suite_cmd->add_option("--csv", csv_path, "also write a CSV summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
  }

  if (*eval_cmd) {
    std::cout << parse_element(expr).str() << "\n";
    return 0;
  }
  if (*height_cmd) {
    K f = parse_element(expr);
    if (f.is_zero()) throw ParseError("height of 0 is undefined");
    std::cout << height(f) << "\n";
    return 0;
  }
  if (*gcdcount_cmd) {
    K f = parse_element(expr), g = parse_element(expr2);
    PlaceSet S = parse_places(places_text);
    std::cout << "N_S_gcd " << gcd_counting(f, g, S, GcdCountMode::OutsideS) << "\n";
    std::cout << "h_gcd " << gcd_counting(f, g, PlaceSet(), GcdCountMode::AllPlaces) << "\n";
    return 0;
  }
  if (*du_cmd) {
    std::vector<K> us;
    for (const auto& s : unit_texts) us.push_back(parse_element(s));
    MvPoly F = parse_mvpoly(poly_text, us.size());
    std::cout << apply_Du(F, UnitTuple::build(us)).str() << "\n";
    return 0;
  }
  if (*refine_cmd) {
    std::vector<K> us;
    for (const auto& s : unit_texts) us.push_back(parse_element(s));
    MvPoly F1 = parse_mvpoly(f1_text, us.size());
    MvPoly F2 = parse_mvpoly(f2_text, us.size());
    UnitTuple g = UnitTuple::build(us);
    PlaceSet S;
    if (refine_cmd->count("--S"))
      S = parse_places(places_text);
    else {
      S = S.with(ClosedPoint::infinity());
      for (const K& u : us)
        if (!u.is_constant()) S = S.united(support(u));
    }
    auto rep = key_inequality_check(F1, F2, g, S, ref_m, ref_r);
    Json j;
    j["branch"] = rep.branch;
    j["M"] = rep.params.M;
    j["Mprime"] = rep.params.Mprime;
    j["m"] = rep.params.m;
    j["r"] = rep.r;
    j["msmt_nondegenerate"] = rep.msmt_nondegenerate;
    j["thm_nondegenerate"] = rep.thm_nondegenerate;
    if (!rep.note.empty()) j["note"] = rep.note;
    Json checks = Json::array();
    bool all = true;
    for (const auto& c : rep.checks) {
      checks.push_back(Json{{"name", c.name},
                            {"lhs", c.lhs.get_str()},
                            {"rhs", c.rhs.get_str()},
                            {"margin", c.margin.get_str()}});
      all = all && c.holds();
    }
    for (const auto& c : rep.key_margins) all = all && c.holds();
    j["checks"] = checks;
    j["key_margins"] = static_cast<long>(rep.key_margins.size());
    j["all_margins_hold"] = all;
    std::cout << j.dump(2) << "\n";
    return all ? 0 : 1;
  }
  if (*pisot_cmd) {
    std::string text = pisot_text;
    if (!pisot_input.empty()) {
      std::ifstream in(pisot_input);
      if (!in) throw std::runtime_error("cannot open " + pisot_input);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    if (text.empty()) throw ParseError("pisot: provide --input or --text");
    auto out = pisot_factor(ExpPoly::parse(text), pisot_d, pisot_cap);
    Json j;
    j["status"] = out.status == PisotStatus::Ok                     ? "ok"
                  : out.status == PisotStatus::InsufficientWitnesses ? "insufficient-witnesses"
                  : out.status == PisotStatus::PatternViolated       ? "pattern-violated"
                                                                     : "nonconstant-Q0";
    j["message"] = out.message;
    j["witnesses"] = out.witness_count;
    j["threshold"] = out.threshold;
    if (out.factorization) {
      const auto& f = *out.factorization;
      j["R"] = f.R.str("T");
      j["Q1"] = f.Q1.str();
      j["G"] = f.G.str();
      j["beta"] = f.beta.str();
      j["gamma1_power"] = f.gamma1.base.str();
      j["gamma2_power"] = f.gamma2.base.str();
      Json basis = Json::array();
      for (const K& u : f.gb.basis.entries) basis.push_back(u.str());
      j["basis"] = basis;
      j["i_eff"] = f.i_eff;
      Json guard;
      guard["sampled"] = f.guard.sampled;
      guard["failing"] = f.guard.failing;
      j["guard"] = guard;
    } else if (out.status == PisotStatus::PatternViolated) {
      j["residual"] = out.residual.str();
    } else if (out.status == PisotStatus::NonconstantQ0) {
      j["Q0"] = out.q0.str();
    }
    std::cout << j.dump(2) << "\n";
    return out.status == PisotStatus::NonconstantQ0 ? 1 : 0;
  }
  if (*suite_cmd) {
    if (suite_name == "list") {
      for (const auto& name : suite_names()) std::cout << name << "\n";
      return 0;
    }
    if (!eps_text.empty()) spec.epsilon = rat_parse(eps_text);
    spec.suite = suite_name;
    SuiteResult res = run_suite(spec);
    std::string dumped = res.report.dump(2);
    dumped += "\n";
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      out << dumped;
    } else {
      std::cout << dumped;
    }
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      out << report_to_csv(res.report);
    }
    std::cerr << "suite " << suite_name << ": " << res.report["count"] << " verdicts, "
              << res.findings << " findings\n";
    return res.findings > 0 ? 1 : 0;
  }
  std::cout << app.help();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
