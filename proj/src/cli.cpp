#include "ramnag/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ramnag/engine.hpp"
#include "ramnag/intpoly.hpp"
#include "ramnag/normrep.hpp"
#include "ramnag/pell.hpp"
#include "ramnag/qforms.hpp"
#include "ramnag/sandwich.hpp"

namespace ramnag::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer integer_flag(const std::string& name, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": expected an integer, got '" + text + "'");
  }
}

unsigned long small_flag(const std::string& name, const std::string& text, unsigned long min = 0) {
  Integer v = integer_flag(name, text);
  if (v < min || !v.fits_ulong_p()) {
    throw UsageError("--" + name + ": out of range: " + text);
  }
  return v.get_ui();
}

std::vector<unsigned> parse_ys(const std::string& text) {
  if (text == "both") return {3, 5};
  if (text == "3") return {3};
  if (text == "5") return {5};
  throw UsageError("--y must be 3, 5 or both");
}

std::string join(const json& arr, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

std::string triple(const json& t) { return "(" + join(t) + ")"; }

void print_step(std::ostream& out, std::size_t index, const CertificateStep& s) {
  const json& c = s.constants;
  const json& in = s.inputs;
  out << "[" << index << "] " << describe(s.rule) << "\n";
  switch (s.rule) {
    case Rule::EvenZExcluded:
      for (const auto& f : c.at("fixtures")) {
        out << "    X^2 = F(Y), F = " << IntPolynomial::parse(f.at("F").get<std::string>()).to_string()
            << "\n      G = " << IntPolynomial::parse(f.at("G").get<std::string>()).to_string()
            << ", R = " << IntPolynomial::parse(f.at("R").get<std::string>()).to_string()
            << ", m = (" << join(f.at("m_values")) << "), Y0 = " << f.at("Y0").get<std::string>()
            << ", no solutions\n";
      }
      out << "    small-base residual cases checked directly: " << c.at("residual_cases").size() << "\n";
      break;
    case Rule::JacobiDivisor:
      out << "    2k-1 = " << c.at("n").get<std::string>() << ", p = " << c.at("p").get<std::string>()
          << " = " << c.at("p_mod_8").get<std::string>() << " (mod 8), (2/p) = -1\n";
      break;
    case Rule::SquareK:
      out << "    k = " << c.at("l").get<std::string>() << "^2\n";
      for (const char* key : {"fixtures_y3", "fixtures_y5"}) {
        for (const auto& f : c.at(key)) {
          out << "    fixture " << f.at("label").get<std::string>() << ": Y0 = "
              << f.at("Y0").get<std::string>() << ", no solutions\n";
        }
      }
      break;
    case Rule::ClassNumber:
      out << "    h(" << in.at("discriminant").get<std::string>() << ") = " << c.at("h").get<std::string>()
          << " (proper classes: " << c.at("h_plus").get<std::string>() << ", reduced forms: "
          << c.at("reduced_forms").get<std::string>() << ")\n";
      break;
    case Rule::PellLeast:
      out << "    (U1, V1) = (" << c.at("U1").get<std::string>() << ", " << c.at("V1").get<std::string>()
          << "), period length " << c.at("period").size() << "\n";
      break;
    case Rule::FundamentalSet:
      out << "    K = " << in.at("K").get<std::string>() << ", admissible Z1 = {" << join(c.at("admissible_Z1"))
          << "}\n";
      for (const auto& z : c.at("per_Z1")) {
        out << "    Z1 = " << z.at("Z1").get<std::string>() << ": " << z.at("height_bound").get<std::string>()
            << "; solutions {";
        const json& sols = z.at("solutions");
        for (std::size_t i = 0; i < sols.size(); ++i) out << (i ? ", " : "") << triple(sols[i]);
        out << "}\n";
      }
      break;
    case Rule::CongruenceElim:
      out << "    p = " << c.at("p").get<std::string>() << " divides gcd(k, V1) = "
          << c.at("gcd_k_V1").get<std::string>() << "; z >= 3 since " << c.at("z_min_reason").get<std::string>()
          << "\n";
      for (const auto& w : c.at("witnesses")) {
        const bool plus = w.at("lambda").get<std::string>() == "1";
        out << "    lambda = " << (plus ? "+1" : "-1") << ": (" << w.at("X1").get<std::string>()
            << (plus ? " + " : " - ") << w.at("Y1").get<std::string>() << "*sqrt("
            << in.at("k").get<std::string>() << "))^" << w.at("t").get<std::string>()
            << ": g = " << w.at("g_abs").get<std::string>() << " = " << w.at("g_abs_mod_p").get<std::string>()
            << " (mod p)\n";
      }
      break;
    case Rule::StructureOnly:
      out << "    fundamental solutions: " << c.at("fundamental_count").get<std::string>()
          << ", gcd(k, V1) = " << c.at("gcd_k_V1").get<std::string>() << "\n";
      break;
  }
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "k = " << v.k << ", y = " << v.y << ": x^2 + " << Natural(2 * v.k - 1) << "^" << v.y << " = " << v.k
      << "^z\n";
  out << "status: " << to_string(v.status) << "\n";
  for (std::size_t i = 0; i < v.certificate.steps.size(); ++i) print_step(out, i + 1, v.certificate.steps[i]);
  for (const auto& s : v.solutions) out << "solution: x = " << s.x << ", z = " << s.z << "\n";
  for (const auto& d : v.diagnostics) out << "note: " << d << "\n";
}

struct Globals {
  unsigned threads = 1;
  std::string factor_budget;
  std::string trial_limit;
};

AnalyzeOptions options_from(const Globals& g) {
  AnalyzeOptions opt;
  if (!g.factor_budget.empty()) opt.budget.factor.rho_iterations = small_flag("factor-budget", g.factor_budget);
  if (!g.trial_limit.empty()) opt.budget.factor.trial_limit = small_flag("trial-limit", g.trial_limit);
  return opt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decides x^2 + (2k-1)^y = k^z for y in {3, 5} with re-checkable certificates", "ramnag"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Cap on worker threads")->check(CLI::PositiveNumber);
  app.add_option("--factor-budget", g.factor_budget, "Pollard rho iteration budget");
  app.add_option("--trial-limit", g.trial_limit, "Trial division bound");

  std::string k_text, y_text = "both", zmax_text, from_text, to_text, csv_path, n_text, cutoff_text = "1000",
                      d_text, K_text, z1_text, disc_text, coeffs_text;
  bool as_json = false, show_cycles = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the decision pipeline for one k");
  analyze_cmd->add_option("--k", k_text, "k > 1")->required();
  analyze_cmd->add_option("--y", y_text, "3, 5 or both");
  analyze_cmd->add_option("--zmax", zmax_text, "Witness search bound when inconclusive");
  analyze_cmd->add_flag("--json", as_json, "Emit the certificate as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Brute-force search for solutions with z <= zmax");
  verify_cmd->add_option("--k", k_text)->required();
  verify_cmd->add_option("--y", y_text)->required();
  verify_cmd->add_option("--zmax", zmax_text)->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Analyze a range of k");
  sweep_cmd->add_option("--from", from_text)->required();
  sweep_cmd->add_option("--to", to_text)->required();
  sweep_cmd->add_option("--y", y_text, "3, 5 or both");
  sweep_cmd->add_option("--zmax", zmax_text, "Also brute-force every k up to this z");
  sweep_cmd->add_option("--csv", csv_path, "Write rows to this CSV file instead of stdout");

  auto* density_cmd = app.add_subcommand("density", "Count k <= N whose 2k-1 has a prime factor = +-3 (mod 8)");
  density_cmd->add_option("--n", n_text)->required();
  density_cmd->add_option("--cutoff", cutoff_text, "Prime cutoff for the comparison product");

  auto* pell_cmd = app.add_subcommand("pell", "Least solution of U^2 - D V^2 = 1");
  pell_cmd->add_option("--d", d_text)->required();

  auto* class_cmd = app.add_subcommand("classnumber", "Class number of indefinite forms of a discriminant");
  class_cmd->add_option("--disc", disc_text)->required();
  class_cmd->add_flag("--cycles", show_cycles, "Print the reduced cycles");

  auto* fund_cmd = app.add_subcommand("fundsols", "Fundamental solutions of X^2 - D Y^2 = K^Z1");
  fund_cmd->add_option("--d", d_text)->required();
  fund_cmd->add_option("--K", K_text)->required();
  fund_cmd->add_option("--z1", z1_text)->required();

  auto* sandwich_cmd = app.add_subcommand("sandwich", "Decide X^2 = F(Y) by the square-sandwich criterion");
  sandwich_cmd->add_option("--coeffs", coeffs_text, "c0,c1,...,cn (constant term first)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  const AnalyzeOptions opt = options_from(g);

  if (*analyze_cmd) {
    const Natural k = integer_flag("k", k_text);
    AnalyzeOptions o = opt;
    if (!zmax_text.empty()) o.witness_zmax = small_flag("zmax", zmax_text, 1);
    std::vector<Verdict> verdicts;
    for (unsigned y : parse_ys(y_text)) verdicts.push_back(analyze(k, y, o));
    if (as_json) {
      if (verdicts.size() == 1) {
        out << to_json(verdicts[0]).dump() << "\n";
      } else {
        json arr = json::array();
        for (const auto& v : verdicts) arr.push_back(to_json(v));
        out << arr.dump() << "\n";
      }
    } else {
      for (const auto& v : verdicts) print_verdict(out, v);
    }
    int code = kOk;
    for (const auto& v : verdicts) {
      if (v.status == Status::NoSolutions) continue;
      code = std::max(code, v.budget_exceeded ? kBudget : kInconclusive);
    }
    return code;
  }

  if (*verify_cmd) {
    const Natural k = integer_flag("k", k_text);
    const unsigned long y = small_flag("y", y_text, 1);
    const unsigned long zmax = small_flag("zmax", zmax_text, 1);
    auto sols = brute_force(k, y, zmax);
    out << "k = " << k << ", y = " << y << ", z <= " << zmax << ": " << sols.size() << " solution(s)\n";
    for (const auto& s : sols) out << "  x = " << s.x << ", z = " << s.z << "\n";
    return kOk;
  }

  if (*sweep_cmd) {
    const Natural from = integer_flag("from", from_text);
    const Natural to = integer_flag("to", to_text);
    const unsigned long zmax = zmax_text.empty() ? 0 : small_flag("zmax", zmax_text, 1);
    auto rows = sweep(from, to, parse_ys(y_text), zmax, opt, g.threads);
    std::ofstream file;
    if (!csv_path.empty()) {
      file.open(csv_path);
      if (!file) throw UsageError("cannot open " + csv_path);
    }
    std::ostream& csv = csv_path.empty() ? out : file;
    csv << "k,y,status,rule_that_decided,h4k,pell_u1,pell_v1,runtime_ms\n";
    std::size_t decided = 0, inconclusive = 0, found = 0;
    for (const auto& r : rows) {
      csv << r.k << "," << r.y << "," << to_string(r.status) << "," << r.rule << "," << r.h4k << "," << r.pell_u1
          << "," << r.pell_v1 << "," << std::fixed << std::setprecision(3) << r.runtime_ms << "\n";
      decided += r.status == Status::NoSolutions;
      inconclusive += r.status == Status::Inconclusive;
      found += r.status == Status::SolutionsFound;
    }
    if (!csv_path.empty()) {
      out << rows.size() << " rows: " << decided << " NoSolutions, " << inconclusive << " Inconclusive, " << found
          << " SolutionsFound\n";
    }
    return kOk;
  }

  if (*density_cmd) {
    const std::uint64_t n = small_flag("n", n_text, 1);
    const std::uint64_t cutoff = small_flag("cutoff", cutoff_text, 2);
    DensityResult d = density_sweep(n, cutoff, opt.budget.factor, g.threads);
    out << "N = " << d.N << ", N0 = " << d.N0 << ", unknown = " << d.unknown << "\n";
    out << "N0/N = " << d.ratio.get_str() << " = " << decimal(d.ratio, 6) << "\n";
    for (const auto& [prefix, count] : d.prefixes) {
      mpq_class r(static_cast<unsigned long>(count), static_cast<unsigned long>(prefix));
      r.canonicalize();
      out << "  k <= " << prefix << ": N0 = " << count << ", ratio " << decimal(r, 6) << "\n";
    }
    out << "1 - prod(1 - 1/p), p = +-3 (mod 8), p <= " << d.cutoff << ": " << decimal(d.partial_product, 6) << "\n";
    return d.unknown ? kBudget : kOk;
  }

  if (*pell_cmd) {
    const Natural D = integer_flag("d", d_text);
    PellFundamental pf = least_solution(D);
    out << "D = " << D << "\n(U1, V1) = (" << pf.U1 << ", " << pf.V1 << ")\n";
    out << "sqrt(D) = [" << isqrt(D) << "; ";
    for (std::size_t i = 0; i < pf.cf_period.size(); ++i) out << (i ? ", " : "") << pf.cf_period[i];
    out << "]\n";
    return kOk;
  }

  if (*class_cmd) {
    const Natural disc = integer_flag("disc", disc_text);
    FormClassData cd = class_number(disc);
    out << "discriminant " << disc << ": h = " << cd.h << " (proper classes " << cd.h_plus << ")\n";
    if (show_cycles) {
      for (std::size_t i = 0; i < cd.cycles.size(); ++i) {
        out << "  cycle " << i + 1 << ":";
        for (const auto& f : cd.cycles[i]) out << " " << to_string(f);
        out << "\n";
      }
    }
    return kOk;
  }

  if (*fund_cmd) {
    const Natural D = integer_flag("d", d_text);
    const Integer K = integer_flag("K", K_text);
    const unsigned long z1 = small_flag("z1", z1_text, 1);
    PellFundamental pf = least_solution(D);
    HeightBound hb = height_bound(D, K, z1, pf);
    auto reps = enumerate_fundamental(D, K, z1, pf);
    out << "X^2 - " << D << " Y^2 = (" << K << ")^" << z1 << "\n";
    out << "(U1, V1) = (" << pf.U1 << ", " << pf.V1 << ")\n";
    out << "X1 + Y1*sqrt(" << D << ") < " << hb.ceiling << "\n";
    out << reps.size() << " fundamental solution(s)\n";
    for (const auto& r : reps) out << "  (" << r.X1 << ", " << r.Y1 << ", " << r.Z1 << ")\n";
    return kOk;
  }

  if (*sandwich_cmd) {
    IntPolynomial F;
    try {
      F = IntPolynomial::parse(coeffs_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--coeffs: ") + e.what());
    }
    SandwichVerdict v = decide_no_solutions(F);
    json sols = json::array();
    for (const auto& s : v.solutions_found) sols.push_back({s.X.get_str(), s.Y.get_str()});
    const auto& th = v.threshold;
    json j = {{"F", F.to_csv()},
              {"G", th.G.to_csv()},
              {"R", th.R.to_csv()},
              {"branch", to_string(th.branch)},
              {"m_values", {th.components[0].get_str(), th.components[1].get_str(), th.components[2].get_str()}},
              {"Y0", th.Y0.get_str()},
              {"scanned_max", v.scanned_max.get_str()},
              {"solutions", sols},
              {"certified_no_solutions", v.certified_no_solutions()}};
    out << j.dump() << "\n";
    return kOk;
  }
  return kUsage;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kBudget;
  }
}

}  // namespace ramnag::cli
