#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ramnag/bigarith.hpp"
#include "ramnag/normrep.hpp"
#include "ramnag/pell.hpp"
#include "ramnag/qforms.hpp"

namespace ramnag {

// Decision pipeline for x^2 + (2k-1)^y = k^z, y in {3, 5}.

using json = nlohmann::json;

enum class Rule {
  JacobiDivisor,
  SquareK,
  EvenZExcluded,
  ClassNumber,
  PellLeast,
  FundamentalSet,
  CongruenceElim,
  StructureOnly,
};

std::string to_string(Rule r);
Rule rule_from_string(std::string_view s);
// Long human-readable name for CLI output.
std::string describe(Rule r);

// One re-checkable proof step. inputs and constants hold only strings,
// arrays and objects; every integer is a decimal string.
struct CertificateStep {
  Rule rule;
  json inputs;
  json constants;

  bool operator==(const CertificateStep&) const = default;
};

struct Certificate {
  std::vector<CertificateStep> steps;

  const CertificateStep* find(Rule r) const;
  bool operator==(const Certificate&) const = default;
};

enum class Status { NoSolutions, Inconclusive, SolutionsFound };

std::string to_string(Status s);

struct EngineBudget {
  FactorBudget factor;
  std::uint64_t form_work = 200'000'000;
  std::size_t cf_period = 10'000'000;
  std::uint64_t fundamental_scan = 50'000'000;
};

struct StructureReport {
  Natural k;
  unsigned y = 0;
  FormClassData classes;  // discriminant 4k
  PellFundamental pell;
  std::vector<unsigned long> admissible_Z1;
  std::vector<HeightBound> bounds;                        // per admissible Z1
  std::vector<std::vector<FundamentalRep>> fundamentals;  // per admissible Z1

  bool all_empty() const;
};

struct Solution {
  Natural x;
  unsigned long y = 0;
  unsigned long z = 0;
  bool operator==(const Solution&) const = default;
};

struct Verdict {
  Natural k;
  unsigned y = 0;
  Status status = Status::Inconclusive;
  Certificate certificate;
  std::vector<Solution> solutions;
  std::optional<StructureReport> structure;
  std::vector<std::string> diagnostics;
  bool budget_exceeded = false;

  // Rule of the step that settled the verdict; empty when inconclusive.
  std::string deciding_rule() const;
};

struct AnalyzeOptions {
  EngineBudget budget;
  // When positive and the pipeline is inconclusive, search z <= witness_zmax
  // for an explicit solution.
  unsigned long witness_zmax = 0;
};

void require_supported_y(unsigned y);

std::optional<CertificateStep> criterion_divisor(const Natural& k, const FactorBudget& budget = {});
std::optional<CertificateStep> criterion_square(const Natural& k);
CertificateStep even_z_exclusion(unsigned y);

StructureReport structure_constraints(const Natural& k, unsigned y, const EngineBudget& budget = {});

CertificateStep class_number_step(const Natural& disc, const EngineBudget& budget = {});
CertificateStep class_number_step(const FormClassData& classes);
CertificateStep pell_step(const Natural& D, const EngineBudget& budget = {});
CertificateStep pell_step(const PellFundamental& pell);
CertificateStep fundamental_set_step(const StructureReport& report);

// Tries every prime p | gcd(k, V1) in increasing order; certifies when some p
// divides none of the sqrt(k)-components g of (X1 + lambda Y1 sqrt k)^(y/Z1).
std::optional<CertificateStep> congruence_elimination(const Natural& k, unsigned y,
                                                      const PellFundamental& pell,
                                                      const std::vector<FundamentalRep>& fundamentals,
                                                      const FactorBudget& budget = {});
std::optional<CertificateStep> congruence_elimination(const StructureReport& report,
                                                      const FactorBudget& budget = {});

Verdict analyze(const Natural& k, unsigned y, const AnalyzeOptions& options = {});

// All (x, z) with z <= z_max and k^z - (2k-1)^y a positive square.
struct BruteSolution {
  Natural x;
  unsigned long z = 0;
  bool operator==(const BruteSolution&) const = default;
};
std::vector<BruteSolution> brute_force(const Natural& k, unsigned long y, unsigned long z_max);

// Re-executes every step from its recorded inputs. Returns a description of
// the first mismatch, or nullopt when everything reproduces bit-exactly.
std::optional<std::string> replay(const Certificate& cert, const EngineBudget& budget = {});

json to_json(const CertificateStep& step);
CertificateStep step_from_json(const json& j);
json to_json(const Verdict& v);

struct DensityResult {
  std::uint64_t N = 0;
  std::uint64_t N0 = 0;
  std::uint64_t unknown = 0;
  mpq_class ratio;
  // 1 - prod(1 - 1/p) over primes p = +-3 (mod 8), p <= cutoff.
  std::uint64_t cutoff = 0;
  mpq_class partial_product;
  // (n, N0 restricted to k <= n) for n = 10, 100, ... below N, then N.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> prefixes;
};

DensityResult density_sweep(std::uint64_t N, std::uint64_t cutoff = 1000,
                            const FactorBudget& budget = {}, unsigned threads = 1);

struct SweepRow {
  Natural k;
  unsigned y = 0;
  Status status = Status::Inconclusive;
  std::string rule;
  std::string h4k, pell_u1, pell_v1;
  double runtime_ms = 0;
  std::vector<BruteSolution> witnesses;  // filled when zmax > 0
  bool budget_exceeded = false;
};

std::vector<SweepRow> sweep(const Natural& from, const Natural& to, const std::vector<unsigned>& ys,
                            unsigned long zmax, const AnalyzeOptions& options = {},
                            unsigned threads = 1);

// Exact decimal rendering of a nonnegative rational, truncated to digits places.
std::string decimal(const mpq_class& q, unsigned digits);

}  // namespace ramnag
