#include "ramnag/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "ramnag/sandwich.hpp"

namespace ramnag {

namespace {

std::string str(const Integer& n) { return n.get_str(); }
std::string str(unsigned long n) { return std::to_string(n); }

Integer num(const json& j) { return parse_integer(j.get<std::string>()); }

void require_k(const Natural& k) {
  if (k <= 1) throw std::invalid_argument("k must be greater than 1");
}

json fixture_summary(const std::string& label) {
  const FixtureVerdict& fv = fixture_verdict(label);
  const SandwichVerdict& v = fv.verdict;
  if (!v.certified_no_solutions()) {
    throw std::logic_error("fixture " + label + " has solutions; criterion cannot certify");
  }
  const auto& fx = sandwich_fixtures();
  auto it = std::find_if(fx.begin(), fx.end(), [&](const SandwichFixture& f) { return f.label == label; });
  return {
      {"label", label},
      {"z", str(it->z)},
      {"F", v.F.to_csv()},
      {"G", v.threshold.G.to_csv()},
      {"R", v.threshold.R.to_csv()},
      {"branch", to_string(v.threshold.branch)},
      {"m_values", json::array({str(v.threshold.components[0]), str(v.threshold.components[1]),
                                str(v.threshold.components[2])})},
      {"Y0", str(v.threshold.Y0)},
      {"scanned_max", str(v.scanned_max)},
      {"solutions", "0"},
  };
}

// Exponents beyond the fixture range still admitted by
// 2 b^e <= (2k-1)^y + 1 for small bases b. For even z, b = k and e = z/2;
// for square k = l^2, b = l and e = z (odd). Each case is settled by checking
// that k^z - (2k-1)^y is not a positive square.
json residual_cases(unsigned y, bool square_base) {
  json out = json::array();
  const unsigned long limit = 1UL << y;
  for (unsigned long b = 2; b <= limit; ++b) {
    const Integer k = square_base ? Integer(b * b) : Integer(b);
    const Integer rhs = pow(Integer(2 * k - 1), y) + 1;
    // Fixtures cover e <= y (even z) or z <= 2y - 1 (odd z).
    unsigned long e = square_base ? 2UL * y + 1 : y + 1UL;
    for (; 2 * pow(Integer(b), e) <= rhs; e += square_base ? 2 : 1) {
      const unsigned long z = square_base ? e : 2 * e;
      Integer gap = pow(k, z) - pow(Integer(2 * k - 1), y);
      if (gap > 0 && is_perfect_square(gap)) {
        throw std::logic_error("residual case k=" + str(k) + " z=" + str(z) + " is a solution");
      }
      out.push_back({{"k", str(k)}, {"z", str(z)}, {"square", "no"}});
    }
  }
  return out;
}

}  // namespace

std::string to_string(Rule r) {
  switch (r) {
    case Rule::JacobiDivisor: return "JacobiDivisor";
    case Rule::SquareK: return "SquareK";
    case Rule::EvenZExcluded: return "EvenZExcluded";
    case Rule::ClassNumber: return "ClassNumber";
    case Rule::PellLeast: return "PellLeast";
    case Rule::FundamentalSet: return "FundamentalSet";
    case Rule::CongruenceElim: return "CongruenceElim";
    case Rule::StructureOnly: return "StructureOnly";
  }
  throw std::logic_error("bad rule");
}

Rule rule_from_string(std::string_view s) {
  for (Rule r : {Rule::JacobiDivisor, Rule::SquareK, Rule::EvenZExcluded, Rule::ClassNumber,
                 Rule::PellLeast, Rule::FundamentalSet, Rule::CongruenceElim, Rule::StructureOnly}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown rule '" + std::string(s) + "'");
}

std::string describe(Rule r) {
  switch (r) {
    case Rule::JacobiDivisor: return "Jacobi divisor criterion: (2/p) = -1 for a prime p | 2k-1";
    case Rule::SquareK: return "square-k criterion: k = l^2 reduces to sandwich fixtures";
    case Rule::EvenZExcluded: return "even-z exclusion: any solution has odd z";
    case Rule::ClassNumber: return "class number h(4k) of primitive forms";
    case Rule::PellLeast: return "least solution of U^2 - kV^2 = 1";
    case Rule::FundamentalSet: return "fundamental solutions of X^2 - kY^2 = (-(2k-1))^Z1";
    case Rule::CongruenceElim: return "congruence elimination modulo a prime p | gcd(k, V1)";
    case Rule::StructureOnly: return "structure constraints only (no criterion applies)";
  }
  throw std::logic_error("bad rule");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::NoSolutions: return "NoSolutions";
    case Status::Inconclusive: return "Inconclusive";
    case Status::SolutionsFound: return "SolutionsFound";
  }
  throw std::logic_error("bad status");
}

const CertificateStep* Certificate::find(Rule r) const {
  for (const auto& s : steps) {
    if (s.rule == r) return &s;
  }
  return nullptr;
}

bool StructureReport::all_empty() const {
  return std::all_of(fundamentals.begin(), fundamentals.end(),
                     [](const auto& v) { return v.empty(); });
}

std::string Verdict::deciding_rule() const {
  if (status != Status::NoSolutions || certificate.steps.empty()) return "";
  return to_string(certificate.steps.back().rule);
}

void require_supported_y(unsigned y) {
  if (y != 3 && y != 5) throw std::invalid_argument("y must be 3 or 5");
}

std::optional<CertificateStep> criterion_divisor(const Natural& k, const FactorBudget& budget) {
  require_k(k);
  const Natural n = 2 * k - 1;
  const Factorization f = factorize(n, budget);
  json factors = json::array();
  for (const auto& [p, e] : f) factors.push_back({str(p), str(e)});
  for (const auto& [p, e] : f) {
    unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 8);
    if (r != 3 && r != 5) continue;
    const int j = jacobi(2, p);
    if (j != -1) throw std::logic_error("jacobi(2, p) != -1 for p = +-3 mod 8");
    return CertificateStep{Rule::JacobiDivisor,
                           {{"k", str(k)}},
                           {{"n", str(n)},
                            {"factorization", factors},
                            {"p", str(p)},
                            {"p_mod_8", str(r)},
                            {"jacobi_2_p", "-1"}}};
  }
  return std::nullopt;
}

std::optional<CertificateStep> criterion_square(const Natural& k) {
  require_k(k);
  auto l = is_perfect_square(k);
  if (!l) return std::nullopt;
  return CertificateStep{Rule::SquareK,
                         {{"k", str(k)}},
                         {{"l", str(*l)},
                          {"fixtures_y3", json::array({fixture_summary("sq-y3-z5")})},
                          {"fixtures_y5", json::array({fixture_summary("sq-y5-z7"),
                                                       fixture_summary("sq-y5-z9")})},
                          {"residual_cases_y3", residual_cases(3, true)},
                          {"residual_cases_y5", residual_cases(5, true)}}};
}

CertificateStep even_z_exclusion(unsigned y) {
  require_supported_y(y);
  json fixtures = json::array();
  if (y == 3) {
    fixtures = {fixture_summary("y3-z4"), fixture_summary("y3-z6")};
  } else {
    fixtures = {fixture_summary("y5-z6"), fixture_summary("y5-z8"), fixture_summary("y5-z10")};
  }
  return CertificateStep{Rule::EvenZExcluded,
                         {{"y", str(y)}},
                         {{"z_parity", "odd"},
                          {"fixtures", fixtures},
                          {"residual_cases", residual_cases(y, false)}}};
}

CertificateStep class_number_step(const FormClassData& cd) {
  json lengths = json::array();
  std::size_t total = 0;
  for (const auto& c : cd.cycles) {
    lengths.push_back(str(c.size()));
    total += c.size();
  }
  return CertificateStep{Rule::ClassNumber,
                         {{"discriminant", str(cd.discriminant)}},
                         {{"h", str(cd.h)},
                          {"h_plus", str(cd.h_plus)},
                          {"reduced_forms", str(total)},
                          {"cycle_lengths", lengths}}};
}

CertificateStep class_number_step(const Natural& disc, const EngineBudget& budget) {
  return class_number_step(class_number(disc, budget.form_work));
}

CertificateStep pell_step(const PellFundamental& pf) {
  json period = json::array();
  for (const auto& a : pf.cf_period) period.push_back(str(a));
  return CertificateStep{Rule::PellLeast,
                         {{"D", str(pf.D)}},
                         {{"U1", str(pf.U1)},
                          {"V1", str(pf.V1)},
                          {"a0", str(isqrt(pf.D))},
                          {"period", period}}};
}

CertificateStep pell_step(const Natural& D, const EngineBudget& budget) {
  return pell_step(least_solution(D, budget.cf_period));
}

namespace {

std::vector<unsigned long> admissible_z1(unsigned y, const Natural& h) {
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d <= y; ++d) {
    if (y % d == 0 && mpz_divisible_ui_p(h.get_mpz_t(), d)) out.push_back(d);
  }
  return out;
}

void fill_fundamentals(StructureReport& r, const EngineBudget& budget) {
  const Integer K = -(2 * r.k - 1);
  r.admissible_Z1 = admissible_z1(r.y, r.classes.h);
  r.bounds.clear();
  r.fundamentals.clear();
  for (unsigned long z1 : r.admissible_Z1) {
    r.bounds.push_back(height_bound(r.k, K, z1, r.pell));
    r.fundamentals.push_back(enumerate_fundamental(r.k, K, z1, r.pell, budget.fundamental_scan));
  }
}

json reps_json(const std::vector<FundamentalRep>& reps) {
  json out = json::array();
  for (const auto& r : reps) out.push_back({str(r.X1), str(r.Y1), str(r.Z1)});
  return out;
}

}  // namespace

StructureReport structure_constraints(const Natural& k, unsigned y, const EngineBudget& budget) {
  require_k(k);
  require_supported_y(y);
  if (is_perfect_square(k)) throw std::invalid_argument("structure_constraints: k must be nonsquare");
  StructureReport r;
  r.k = k;
  r.y = y;
  r.classes = class_number(4 * k, budget.form_work);
  r.pell = least_solution(k, budget.cf_period);
  fill_fundamentals(r, budget);
  return r;
}

CertificateStep fundamental_set_step(const StructureReport& r) {
  json per = json::array();
  for (std::size_t i = 0; i < r.admissible_Z1.size(); ++i) {
    const HeightBound& hb = r.bounds[i];
    per.push_back({{"Z1", str(r.admissible_Z1[i])},
                   {"beta", {str(hb.beta.a), str(hb.beta.b)}},
                   {"ceiling", str(hb.ceiling)},
                   {"height_bound", "X1 + Y1*sqrt(" + str(r.k) + ") < " + str(hb.ceiling)},
                   {"scan_limit", str(Natural(hb.ceiling / isqrt(r.k) + 1))},
                   {"solutions", reps_json(r.fundamentals[i])}});
  }
  json admissible = json::array();
  for (auto z : r.admissible_Z1) admissible.push_back(str(z));
  return CertificateStep{Rule::FundamentalSet,
                         {{"k", str(r.k)},
                          {"y", str(r.y)},
                          {"K", str(Integer(-(2 * r.k - 1)))},
                          {"h", str(r.classes.h)},
                          {"U1", str(r.pell.U1)},
                          {"V1", str(r.pell.V1)}},
                         {{"admissible_Z1", admissible}, {"per_Z1", per}}};
}

std::optional<CertificateStep> congruence_elimination(const Natural& k, unsigned y,
                                                      const PellFundamental& pell,
                                                      const std::vector<FundamentalRep>& fundamentals,
                                                      const FactorBudget& budget) {
  require_k(k);
  require_supported_y(y);
  if (fundamentals.empty()) return std::nullopt;
  const Natural g = gcd(k, pell.V1);
  if (g == 1) return std::nullopt;

  json tried = json::array();
  for (const auto& [p, e] : factorize(g, budget)) {
    tried.push_back(str(p));
    json witnesses = json::array();
    bool eliminated = true;
    for (const auto& rep : fundamentals) {
      const unsigned long t = y / rep.Z1;
      for (int lambda : {1, -1}) {
        QuadInt power = quad_pow(QuadInt{rep.X1, lambda * rep.Y1, k}, t);
        Natural residue = mod(power.b, p);
        Natural abs_residue = mod(abs(power.b), p);
        if (residue == 0) eliminated = false;
        witnesses.push_back({{"X1", str(rep.X1)},
                             {"Y1", str(rep.Y1)},
                             {"Z1", str(rep.Z1)},
                             {"t", str(t)},
                             {"lambda", lambda == 1 ? "1" : "-1"},
                             {"f", str(power.a)},
                             {"g", str(power.b)},
                             {"g_abs", str(Natural(abs(power.b)))},
                             {"g_mod_p", str(residue)},
                             {"g_abs_mod_p", str(abs_residue)}});
      }
      if (!eliminated) break;
    }
    if (!eliminated) continue;
    // p | k^((z-1)/2) needs z >= 3, which follows from k^z > (2k-1)^y > k^2.
    const bool z_ge_3 = pow(Integer(2 * k - 1), y) > k * k;
    if (!z_ge_3) throw std::logic_error("(2k-1)^y <= k^2");
    json reps = json::array();
    for (const auto& rep : fundamentals) reps.push_back({str(rep.X1), str(rep.Y1), str(rep.Z1)});
    return CertificateStep{Rule::CongruenceElim,
                           {{"k", str(k)},
                            {"y", str(y)},
                            {"U1", str(pell.U1)},
                            {"V1", str(pell.V1)},
                            {"fundamentals", reps}},
                           {{"gcd_k_V1", str(g)},
                            {"primes_tried", tried},
                            {"p", str(p)},
                            {"z_min", "3"},
                            {"z_min_reason", "(2k-1)^y > k^2"},
                            {"witnesses", witnesses}}};
  }
  return std::nullopt;
}

std::optional<CertificateStep> congruence_elimination(const StructureReport& report,
                                                      const FactorBudget& budget) {
  std::vector<FundamentalRep> all;
  for (const auto& v : report.fundamentals) all.insert(all.end(), v.begin(), v.end());
  return congruence_elimination(report.k, report.y, report.pell, all, budget);
}

namespace {

CertificateStep structure_only_step(const StructureReport& r) {
  std::size_t count = 0;
  for (const auto& v : r.fundamentals) count += v.size();
  return CertificateStep{Rule::StructureOnly,
                         {{"k", str(r.k)}, {"y", str(r.y)}},
                         {{"fundamental_count", str(count)},
                          {"gcd_k_V1", str(gcd(r.k, r.pell.V1))},
                          {"congruence_elimination", "not applicable"}}};
}

}  // namespace

Verdict analyze(const Natural& k, unsigned y, const AnalyzeOptions& options) {
  require_k(k);
  require_supported_y(y);
  Verdict v;
  v.k = k;
  v.y = y;
  const CertificateStep even_z = even_z_exclusion(y);
  auto certify = [&](std::vector<CertificateStep> steps) {
    v.status = Status::NoSolutions;
    v.certificate.steps = {even_z};
    for (auto& s : steps) v.certificate.steps.push_back(std::move(s));
    return v;
  };

  try {
    if (auto step = criterion_divisor(k, options.budget.factor)) return certify({*step});
  } catch (const BudgetExceeded& e) {
    v.budget_exceeded = true;
    v.diagnostics.push_back(std::string("divisor criterion skipped: ") + e.what());
  }
  if (auto step = criterion_square(k)) return certify({*step});

  try {
    StructureReport report = structure_constraints(k, y, options.budget);
    CertificateStep cn = class_number_step(report.classes);
    CertificateStep pl = pell_step(report.pell);
    CertificateStep fs = fundamental_set_step(report);
    if (report.all_empty()) return certify({cn, pl, fs});
    if (auto ce = congruence_elimination(report, options.budget.factor)) return certify({cn, pl, fs, *ce});
    v.certificate.steps = {even_z, cn, pl, fs, structure_only_step(report)};
    v.structure = std::move(report);
  } catch (const BudgetExceeded& e) {
    v.budget_exceeded = true;
    v.diagnostics.push_back(std::string("structure constraints skipped: ") + e.what());
    v.certificate.steps = {even_z};
  }

  v.status = Status::Inconclusive;
  if (options.witness_zmax > 0) {
    for (auto& s : brute_force(k, y, options.witness_zmax)) {
      v.solutions.push_back({s.x, y, s.z});
    }
    if (!v.solutions.empty()) v.status = Status::SolutionsFound;
  }
  return v;
}

std::vector<BruteSolution> brute_force(const Natural& k, unsigned long y, unsigned long z_max) {
  require_k(k);
  if (z_max < 1) throw std::invalid_argument("z_max must be at least 1");
  const Integer d = pow(Integer(2 * k - 1), y);
  std::vector<BruteSolution> out;
  Integer kz = 1;
  for (unsigned long z = 1; z <= z_max; ++z) {
    kz *= k;
    Integer gap = kz - d;
    if (gap <= 0) continue;
    if (auto x = is_perfect_square(gap)) out.push_back({*x, z});
  }
  return out;
}

std::optional<std::string> replay(const Certificate& cert, const EngineBudget& budget) {
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& s = cert.steps[i];
    const json& in = s.inputs;
    std::optional<CertificateStep> again;
    try {
      switch (s.rule) {
        case Rule::EvenZExcluded:
          again = even_z_exclusion(static_cast<unsigned>(std::stoul(in.at("y").get<std::string>())));
          break;
        case Rule::JacobiDivisor:
          again = criterion_divisor(num(in.at("k")), budget.factor);
          break;
        case Rule::SquareK:
          again = criterion_square(num(in.at("k")));
          break;
        case Rule::ClassNumber:
          again = class_number_step(num(in.at("discriminant")), budget);
          break;
        case Rule::PellLeast:
          again = pell_step(num(in.at("D")), budget);
          break;
        case Rule::FundamentalSet: {
          StructureReport r;
          r.k = num(in.at("k"));
          r.y = static_cast<unsigned>(std::stoul(in.at("y").get<std::string>()));
          r.classes.h = num(in.at("h"));
          r.pell = PellFundamental{num(in.at("U1")), num(in.at("V1")), r.k, {}};
          if (r.pell.U1 * r.pell.U1 - r.k * r.pell.V1 * r.pell.V1 != 1) {
            return "step " + std::to_string(i) + ": (U1, V1) does not solve the Pell equation";
          }
          fill_fundamentals(r, budget);
          again = fundamental_set_step(r);
          break;
        }
        case Rule::CongruenceElim: {
          const Natural k = num(in.at("k"));
          const unsigned y = static_cast<unsigned>(std::stoul(in.at("y").get<std::string>()));
          PellFundamental pf{num(in.at("U1")), num(in.at("V1")), k, {}};
          std::vector<FundamentalRep> reps;
          for (const auto& r : in.at("fundamentals")) {
            reps.push_back({num(r.at(0)), num(r.at(1)),
                            std::stoul(r.at(2).get<std::string>()), k, Integer(-(2 * k - 1))});
          }
          again = congruence_elimination(k, y, pf, reps, budget.factor);
          break;
        }
        case Rule::StructureOnly: {
          const Natural k = num(in.at("k"));
          const unsigned y = static_cast<unsigned>(std::stoul(in.at("y").get<std::string>()));
          again = structure_only_step(structure_constraints(k, y, budget));
          break;
        }
      }
    } catch (const std::exception& e) {
      return "step " + std::to_string(i) + " (" + to_string(s.rule) + "): " + e.what();
    }
    if (!again) return "step " + std::to_string(i) + " (" + to_string(s.rule) + "): criterion no longer applies";
    if (!(*again == s)) return "step " + std::to_string(i) + " (" + to_string(s.rule) + "): constants differ";
  }
  return std::nullopt;
}

json to_json(const CertificateStep& step) {
  return {{"rule", to_string(step.rule)}, {"inputs", step.inputs}, {"constants", step.constants}};
}

CertificateStep step_from_json(const json& j) {
  return {rule_from_string(j.at("rule").get<std::string>()), j.at("inputs"), j.at("constants")};
}

json to_json(const Verdict& v) {
  json steps = json::array();
  for (const auto& s : v.certificate.steps) steps.push_back(to_json(s));
  json out = {{"k", str(v.k)}, {"y", str(v.y)}, {"status", to_string(v.status)}, {"steps", steps}};
  if (!v.solutions.empty()) {
    json sols = json::array();
    for (const auto& s : v.solutions) sols.push_back({str(s.x), str(s.y), str(s.z)});
    out["solutions"] = sols;
  }
  if (!v.diagnostics.empty()) out["diagnostics"] = v.diagnostics;
  return out;
}

std::string decimal(const mpq_class& q_in, unsigned digits) {
  mpq_class q = q_in;
  q.canonicalize();
  if (q < 0) throw std::invalid_argument("decimal: negative value");
  Natural whole = q.get_num() / q.get_den();
  Natural frac = (q.get_num() % q.get_den()) * pow(Integer(10), digits) / q.get_den();
  std::string f = frac.get_str();
  f.insert(0, digits - std::min<std::size_t>(digits, f.size()), '0');
  return whole.get_str() + (digits ? "." + f : "");
}

namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

DensityResult density_sweep(std::uint64_t N, std::uint64_t cutoff, const FactorBudget& budget,
                            unsigned threads) {
  if (N < 1) throw std::invalid_argument("density_sweep: N must be at least 1");
  // 0 = no qualifying prime, 1 = qualifies, 2 = factoring budget exceeded.
  std::vector<unsigned char> flag(N + 1, 0);
  parallel_for(N, threads, [&](std::size_t i) {
    const std::uint64_t k = i + 1;
    const Natural n = Natural(std::to_string(2 * k - 1));
    if (n == 1) return;
    try {
      for (const auto& pp : factorize(n, budget)) {
        unsigned long r = mpz_fdiv_ui(pp.prime.get_mpz_t(), 8);
        if (r == 3 || r == 5) {
          flag[k] = 1;
          break;
        }
      }
    } catch (const BudgetExceeded&) {
      flag[k] = 2;
    }
  });

  DensityResult res;
  res.N = N;
  std::uint64_t next_prefix = 10;
  for (std::uint64_t k = 1; k <= N; ++k) {
    res.N0 += (flag[k] == 1);
    res.unknown += (flag[k] == 2);
    if (k == next_prefix && k < N) {
      res.prefixes.emplace_back(k, res.N0);
      next_prefix *= 10;
    }
  }
  res.prefixes.emplace_back(N, res.N0);
  res.ratio = mpq_class(Natural(std::to_string(res.N0)), Natural(std::to_string(N)));
  res.ratio.canonicalize();

  res.cutoff = cutoff;
  std::vector<bool> composite(cutoff + 1, false);
  mpq_class product = 1;
  for (std::uint64_t p = 2; p <= cutoff; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= cutoff; m += p) composite[m] = true;
    if (p % 8 == 3 || p % 8 == 5) {
      product *= mpq_class(static_cast<unsigned long>(p - 1), static_cast<unsigned long>(p));
    }
  }
  res.partial_product = 1 - product;
  res.partial_product.canonicalize();
  return res;
}

std::vector<SweepRow> sweep(const Natural& from, const Natural& to, const std::vector<unsigned>& ys,
                            unsigned long zmax, const AnalyzeOptions& options, unsigned threads) {
  if (from < 2 || to < from) throw std::invalid_argument("sweep: need 2 <= from <= to");
  for (unsigned y : ys) require_supported_y(y);
  const std::size_t span = Natural(to - from + 1).get_ui();
  std::vector<SweepRow> rows(span * ys.size());
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.k = from + static_cast<unsigned long>(i / ys.size());
    row.y = ys[i % ys.size()];
    const auto start = std::chrono::steady_clock::now();
    Verdict v = analyze(row.k, row.y, options);
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.status = v.status;
    row.rule = v.deciding_rule();
    row.budget_exceeded = v.budget_exceeded;
    if (const CertificateStep* cn = v.certificate.find(Rule::ClassNumber)) {
      row.h4k = cn->constants.at("h").get<std::string>();
    }
    if (const CertificateStep* pl = v.certificate.find(Rule::PellLeast)) {
      row.pell_u1 = pl->constants.at("U1").get<std::string>();
      row.pell_v1 = pl->constants.at("V1").get<std::string>();
    }
    if (zmax > 0) {
      row.witnesses = brute_force(row.k, row.y, zmax);
      if (!row.witnesses.empty()) {
        if (v.status == Status::NoSolutions) {
          throw std::logic_error("soundness violation at k = " + row.k.get_str() +
                                 ", y = " + std::to_string(row.y));
        }
        row.status = Status::SolutionsFound;
      }
    }
  });
  return rows;
}

}  // namespace ramnag
