#include "zfree/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>
#include <utility>

#include "zfree/engine.hpp"
#include "zfree/oracle.hpp"
#include "zfree/set_spec.hpp"
#include "zfree/structure.hpp"
#include "zfree/sweep.hpp"

namespace zfree::cli {
namespace {

// An empty key prints the value as a bare token.
using Fields = std::vector<std::pair<std::string, std::string>>;

void emit(std::ostream& out, const Fields& fields, bool table) {
  if (table) {
    std::size_t width = 0;
    for (const auto& [k, v] : fields) width = std::max(width, k.empty() ? std::size_t{6} : k.size());
    for (const auto& [k, v] : fields) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << (k.empty() ? "result" : k) << v << '\n';
    }
    return;
  }
  bool first = true;
  for (const auto& [k, v] : fields) {
    if (!first) out << ' ';
    first = false;
    out << (k.empty() ? v : k + "=" + v);
  }
  out << '\n';
}

std::string braces(const std::string& literal) { return "{" + literal + "}"; }
std::string flag(bool b) { return b ? "true" : "false"; }

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

struct Options {
  Int prime = 0;
  std::string set;
  bool expect_zero_free = false;
  bool emit_sharp = false;
  bool interval = false;
  bool normalize = false;
  bool table = false;
  std::uint64_t budget = kDefaultOracleBudget;
  Int lo = 7;
  Int hi = 1000;
  Int oracle_cutoff = 47;
  Int verify_cutoff = std::numeric_limits<Int>::max();
  int workers = 1;
  std::string format = "csv";
  std::string out_path;
};

int cmd_check(const Options& o, std::ostream& out) {
  const PrimeModulus p(o.prime);
  const ResidueSet a = parse_set_spec(o.set, p);
  const bool zf = is_zero_free(a);
  Fields f{{"", zf ? "zero-free" : "not-zero-free"}};
  if (o.emit_sharp) {
    const std::vector<Int> sharp = subset_sums_integer(a).values();
    f.emplace_back("sharp", braces(format_integer_list(sharp)));
  }
  emit(out, f, o.table);
  return (o.expect_zero_free && !zf) ? kExitCheckFailed : kExitOk;
}

int cmd_maxcard(const Options& o, std::ostream& out) {
  const PrimeModulus p(o.prime);
  emit(out,
       {{"k", std::to_string(max_zero_free_card_formula(p))},
        {"delta", std::to_string(delta(p))},
        {"s", std::to_string(triangular_s(p))},
        {"special", flag(is_special_prime(p))}},
       o.table);
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const PrimeModulus p(o.prime);
  const ResidueSet a = o.interval ? construct_interval_set(p) : construct_extremal(p);
  emit(out, {{"", format_set_literal(a)}}, o.table);
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const PrimeModulus p(o.prime);
  const ResidueSet a = parse_set_spec(o.set, p);
  const Decomposition d = o.normalize ? decompose_normalized(a) : decompose(a);
  emit(out,
       {{"d", std::to_string(d.d)},
        {"neg", braces(format_set_literal(d.neg_part))},
        {"pos", braces(format_set_literal(d.pos_part))},
        {"s2", std::to_string(d.s_double_prime)},
        {"neg_weight", std::to_string(d.neg_weight)}},
       o.table);
  return kExitOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const PrimeModulus p(o.prime);
  const ResidueSet a = parse_set_spec(o.set, p);
  const NormalizationResult r = find_normalizing_dilate(a);
  emit(out,
       {{"d", std::to_string(r.d)},
        {"total", std::to_string(r.summary.total)},
        {"positive", std::to_string(r.summary.positive_part)},
        {"negative", std::to_string(r.summary.negative_part)},
        {"card", std::to_string(r.summary.cardinality)},
        {"excess", fixed(r.summary.excess, 6)},
        {"ties", std::to_string(r.ties)}},
       o.table);
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const PrimeModulus p(o.prime);
  ResidueSet a = parse_set_spec(o.set, p);
  if (o.normalize) a = dilate_set(a, find_normalizing_dilate(a).d);
  const ClassificationReport r = classification_report(a);
  if (o.table) {
    std::string line = r.to_string();
    Fields f;
    std::istringstream tokens(line);
    for (std::string tok; tokens >> tok;) {
      const auto eq = tok.find('=');
      f.emplace_back(tok.substr(0, eq), eq == std::string::npos ? "" : tok.substr(eq + 1));
    }
    emit(out, f, true);
  } else {
    out << r.to_string() << '\n';
  }
  return r.sharp_matches() ? kExitOk : kExitCheckFailed;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const PrimeModulus p(o.prime);
  const OracleResult r = oracle_max_zero_free(p, o.budget);
  if (r.status == OracleStatus::complete) {
    emit(out,
         {{"max", std::to_string(r.max_card)},
          {"witness", braces(format_set_literal(r.witness))},
          {"formula", std::to_string(r.formula_value)},
          {"agrees", flag(r.agrees)}},
         o.table);
    return kExitOk;
  }
  emit(out,
       {{"status", "inconclusive"},
        {"best", std::to_string(r.max_card)},
        {"witness", braces(format_set_literal(r.witness))},
        {"formula", std::to_string(r.formula_value)},
        {"nodes", std::to_string(r.nodes_explored)}},
       o.table);
  return kExitCheckFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepOptions so;
  so.lo = o.lo;
  so.hi = o.hi;
  so.oracle_cutoff = o.oracle_cutoff;
  so.oracle_node_budget = o.budget;
  so.verify_cutoff = o.verify_cutoff;
  so.workers = o.workers;
  const ReportFormat format = parse_report_format(o.format);
  const SweepReport report = sweep(so);

  std::size_t disagreements = 0;
  for (const SweepRecord& r : report.records) {
    if (r.oracle_agrees == false) ++disagreements;
  }
  if (o.out_path.empty()) {
    out << format_report(report, format);
  } else {
    write_report(report, format, o.out_path);
    emit(out,
         {{"primes", std::to_string(report.records.size())},
          {"delta_zero_fraction", fixed(report.delta_zero_fraction, 6)},
          {"special_count", std::to_string(report.special_count)},
          {"special_count_over_sqrt", fixed(report.special_count_over_sqrt, 6)},
          {"failures", std::to_string(report.failure_count())},
          {"oracle_disagreements", std::to_string(disagreements)},
          {"out", o.out_path}},
         o.table);
  }
  return (report.failure_count() == 0 && disagreements == 0) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-free subsets of Z/pZ: subset sums, extremal sets, structure and prime sweeps", "zfree"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--table", o.table, "Aligned key/value table instead of one line");

  auto add_prime = [&](CLI::App* c) { c->add_option("-p,--prime", o.prime, "Odd prime modulus")->required(); };
  auto add_set = [&](CLI::App* c) {
    c->add_option("-s,--set", o.set, "Set literal, e.g. \"-3,1,4..15\"")->required();
  };

  auto* check = app.add_subcommand("check", "Zero-freeness verdict for a set");
  add_prime(check);
  add_set(check);
  check->add_flag("--expect-zero-free", o.expect_zero_free, "Exit 1 when the set is not zero-free");
  check->add_flag("--emit-sharp", o.emit_sharp, "Also print the integer subset-sum set");

  auto* maxcard = app.add_subcommand("maxcard", "Maximal zero-free cardinality, delta(p), s(sqrt(2p))");
  add_prime(maxcard);

  auto* construct = app.add_subcommand("construct", "Extremal zero-free set as a set literal");
  add_prime(construct);
  construct->add_flag("--interval", o.interval, "Emit [1, floor(sqrt(2p)) - 1] instead");

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a set by sign of canonical representatives");
  add_prime(decompose_cmd);
  add_set(decompose_cmd);
  decompose_cmd->add_flag("--normalize", o.normalize, "Apply the minimal-weight dilate first");

  auto* normalize = app.add_subcommand("normalize", "Dilate minimizing the total weight");
  add_prime(normalize);
  add_set(normalize);

  auto* classify = app.add_subcommand("classify", "Structure row of a largest zero-free set");
  add_prime(classify);
  add_set(classify);
  classify->add_flag("--normalize", o.normalize, "Apply the minimal-weight dilate first");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive maximal zero-free cardinality");
  add_prime(oracle);
  oracle->add_option("--budget", o.budget, "Node budget before giving up");

  auto* sweep_cmd = app.add_subcommand("sweep", "Per-prime verification over a range");
  sweep_cmd->add_option("--lo", o.lo, "First value of the range (>= 7)")->capture_default_str();
  sweep_cmd->add_option("--hi", o.hi, "Last value of the range")->capture_default_str();
  sweep_cmd->add_option("--oracle-cutoff", o.oracle_cutoff, "Run the oracle for p <= N")->capture_default_str();
  sweep_cmd->add_option("--verify-cutoff", o.verify_cutoff, "DP-verify constructions for p <= N");
  sweep_cmd->add_option("--budget", o.budget, "Oracle node budget per prime");
  sweep_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sweep_cmd->add_option("--out", o.out_path, "Report path (stdout when omitted)");

  std::vector<const char*> argv{"zfree"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*maxcard) return cmd_maxcard(o, out);
    if (*construct) return cmd_construct(o, out);
    if (*decompose_cmd) return cmd_decompose(o, out);
    if (*normalize) return cmd_normalize(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*sweep_cmd) return cmd_sweep(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zfree::cli
