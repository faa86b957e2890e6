#include "cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumfree/basis_io.hpp"
#include "sumfree/bitlinalg.hpp"
#include "sumfree/error.hpp"
#include "sumfree/gf2n.hpp"
#include "sumfree/ledger.hpp"
#include "sumfree/pointeval.hpp"
#include "sumfree/subcalc.hpp"
#include "sumfree/sympoly.hpp"
#include "sumfree/zerosum.hpp"

namespace sumfree::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string subcommand;
  int n = 0;
  int k = 0;
  std::string modulus;  // hex; empty means default_modulus(n)
  std::string budget;   // decimal or 2^e; empty means the subcommand default
  std::uint64_t seed = 1;
  int workers = 1;
  std::string shard = "0/1";
  std::string format;  // empty means the subcommand default
  std::string store;
  std::string data_dir;
  std::string poly = "fk";
  std::string strategy = "random";
  std::string input = "-";
  bool dump = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::LimitExceeded:
    case ErrorCode::Overflow:
    case ErrorCode::SplittingFieldTooLarge:
      return kCapExceeded;
    case ErrorCode::ContradictionDetected:
      return kVerificationFailed;
    default:
      return kUsage;
  }
}

u128 parse_budget(const std::string& s, u128 fallback) {
  if (s.empty()) return fallback;
  try {
    if (auto caret = s.find('^'); caret != std::string::npos) {
      if (s.substr(0, caret) != "2") throw UsageError("budget powers must be 2^e");
      const int e = std::stoi(s.substr(caret + 1));
      if (e < 0 || e > 127) throw UsageError("budget exponent out of range");
      return u128{1} << e;
    }
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw UsageError("bad budget '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad budget '" + s + "'");
  }
}

std::pair<int, int> parse_shard(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw UsageError("shard must be index/total");
  try {
    const int i = std::stoi(s.substr(0, slash));
    const int t = std::stoi(s.substr(slash + 1));
    if (t < 1 || i < 0 || i >= t) throw UsageError("shard index must satisfy 0 <= index < total");
    return {i, t};
  } catch (const std::logic_error&) {
    throw UsageError("shard must be index/total");
  }
}

Field make_field(const RunConfig& c) {
  if (c.n < 1 || c.n > Field::kMaxDegree) throw UsageError("n must be in 1..64");
  if (c.modulus.empty()) return Field::standard(c.n);
  return Field(c.n, parse_hex(c.modulus));
}

std::string format_or(const RunConfig& c, const char* fallback) { return c.format.empty() ? fallback : c.format; }

void preamble(std::ostream& out, const std::string& modulus, std::uint64_t seed) {
  out << "# modulus=" << modulus << " seed=" << seed << "\n";
}

void preamble(std::ostream& out, const Field& f, std::uint64_t seed) { preamble(out, to_hex(f.modulus()), seed); }

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// --- subcommands -----------------------------------------------------------

int cmd_theta(const RunConfig& c, std::ostream& out) {
  preamble(out, "none", c.seed);
  const MPoly t = theta_sym(c.k);
  out << "theta k=" << c.k << " terms=" << t.size() << " degree=" << t.degree() << "\n";
  if (c.dump) out << dump_terms(t);
  return kOk;
}

int cmd_partitions(const RunConfig& c, std::ostream& out) {
  if (c.k < 1) throw UsageError("k must be >= 1");
  preamble(out, "none", c.seed);
  const auto parts = lambda_set(c.k);
  out << "partitions k=" << c.k << " count=" << parts.size() << "\n";
  for (const auto& p : parts) out << p.to_string() << "\n";
  return kOk;
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void print_report(const Subspace& e, const CriteriaReport& r, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") {
    ordered_json j;
    j["n"] = e.field().n();
    j["modulus"] = to_hex(e.field().modulus());
    j["k"] = e.dim();
    auto rows = ordered_json::array();
    for (Fe b : e.basis_elements()) rows.push_back(to_hex(b));
    j["basis"] = rows;
    j["inverse_sum"] = to_hex(r.inverse_sum);
    j["fk"] = to_hex(r.fk);
    j["theta"] = to_hex(r.theta);
    auto g = ordered_json::array();
    for (Fe b : r.gamma_image.basis_elements()) g.push_back(to_hex(b));
    j["gamma_basis"] = g;
    j["zero_sum"] = r.zero_sum();
    j["consistent"] = r.consistent();
    out << j.dump() << "\n";
    return;
  }
  out << "n=" << e.field().n() << " k=" << e.dim() << "\n";
  out << "basis:";
  for (Fe b : e.basis_elements()) out << " " << to_hex(b);
  out << "\n";
  out << "inverse_sum=" << to_hex(r.inverse_sum) << " zero=" << yes_no(r.zero_sum()) << "\n";
  out << "fk=" << to_hex(r.fk) << " zero=" << yes_no(r.fk_zero()) << "\n";
  out << "gamma basis:";
  for (Fe b : r.gamma_image.basis_elements()) out << " " << to_hex(b);
  out << "\n";
  out << "theta=" << to_hex(r.theta) << " zero=" << yes_no(r.theta_zero()) << "\n";
  out << "consistent=" << yes_no(r.consistent()) << "\n";
}

int cmd_check_subspace(const RunConfig& c, std::ostream& out) {
  const std::string text = read_input(c.input);
  const std::string fmt = format_or(c, "text");
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    std::istringstream lines(text);
    std::string line;
    int status = kOk;
    bool printed = false;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const Witness w = witness_from_json(line);
      const Subspace e = w.subspace();
      if (!printed) preamble(out, e.field(), w.seed);
      printed = true;
      const CriteriaReport r = check_all_criteria(e);
      print_report(e, r, fmt, out);
      const bool ok = verify_witness(w);
      if (fmt != "json") out << "witness " << (ok ? "verified" : "FAILED") << "\n";
      if (!ok) status = kVerificationFailed;
    }
    return status;
  }
  const BasisFile b = parse_basis_text(text);
  preamble(out, b.field, c.seed);
  const Subspace e = canonicalize(b.rows, b.field);
  if (e.dim() != static_cast<int>(b.rows.size())) throw Error(ErrorCode::DependentBasis, "input rows are linearly dependent");
  const CriteriaReport r = check_all_criteria(e);
  print_report(e, r, fmt, out);
  return r.consistent() ? kOk : kVerificationFailed;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  const Field f = make_field(c);
  preamble(out, f, c.seed);
  SearchOptions o;
  o.strategy = parse_strategy(c.strategy);
  o.budget = parse_budget(c.budget, o.strategy == SearchStrategy::Random ? u128{1} << 24 : kDefaultWorkBudget);
  o.seed = c.seed;
  o.workers = c.workers;
  const auto w = find_witness(f, c.k, o);
  const std::string fmt = format_or(c, "json");
  if (!w) {
    out << (fmt == "json" ? "null" : "no witness within budget") << "\n";
    return kOk;
  }
  if (!c.store.empty()) append_witness(c.store, *w);
  if (fmt == "json") {
    out << witness_to_json(*w) << "\n";
  } else {
    out << "witness n=" << w->n << " k=" << w->k << " trials=" << w->trials << "\n";
    for (std::uint64_t r : w->basis) out << "  " << to_hex(r) << "\n";
  }
  return kOk;
}

SweepOptions sweep_options(const RunConfig& c) {
  SweepOptions o;
  o.workers = c.workers;
  o.budget = parse_budget(c.budget, kDefaultWorkBudget);
  std::tie(o.shard_index, o.shard_count) = parse_shard(c.shard);
  return o;
}

int cmd_census(const RunConfig& c, std::ostream& out) {
  const Field f = make_field(c);
  preamble(out, f, c.seed);
  const CensusResult r = census(parse_census_poly(c.poly), f, c.k, sweep_options(c));
  const std::string fmt = format_or(c, "csv");
  const std::string on = r.zeros_on_delta ? to_decimal(*r.zeros_on_delta) : "not-computed";
  if (fmt == "csv") {
    out << census_csv_header() << "\n" << census_csv_row(r) << "\n";
  } else if (fmt == "json") {
    ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["selector"] = census_poly_name(r.poly);
    j["zeros_off_delta"] = to_decimal(r.zeros_off_delta);
    j["zeros_on_delta"] = on;
    j["swept"] = to_decimal(r.swept);
    out << j.dump() << "\n";
  } else {
    out << "census " << census_poly_name(r.poly) << " n=" << r.n << " k=" << r.k << "\n";
    out << "zeros off delta: " << to_decimal(r.zeros_off_delta) << "\n";
    out << "zeros on delta: " << on << "\n";
    out << "swept: " << to_decimal(r.swept) << "\n";
  }
  return kOk;
}

int cmd_zk(const RunConfig& c, std::ostream& out) {
  const Field f = make_field(c);
  preamble(out, f, c.seed);
  const u128 z = zk_count(f, c.k, sweep_options(c));
  const std::string fmt = format_or(c, "text");
  if (fmt == "json") {
    out << ordered_json{{"n", c.n}, {"k", c.k}, {"zk", to_decimal(z)}}.dump() << "\n";
  } else if (fmt == "csv") {
    out << "n,k,zk\n" << c.n << "," << c.k << "," << to_decimal(z) << "\n";
  } else {
    out << "zk n=" << c.n << " k=" << c.k << " count=" << to_decimal(z);
    if (c.k < 12) out << " gl2=" << to_decimal(gl2_order(c.k));
    out << "\n";
  }
  return kOk;
}

int cmd_sf_table(const RunConfig& c, std::ostream& out) {
  const Field f = make_field(c);
  preamble(out, f, c.seed);
  SfTableOptions o;
  o.seed = c.seed;
  o.workers = c.workers;
  o.budget = parse_budget(c.budget, kDefaultWorkBudget);
  const auto table = sf_table(f, o);
  const std::string fmt = format_or(c, "text");
  if (fmt == "csv") {
    out << "n,k,status,method,trials\n";
    for (const auto& e : table)
      out << c.n << "," << e.k << "," << (e.sum_free ? "IN_SF" : "IN_K") << "," << e.method << "," << e.trials << "\n";
    return kOk;
  }
  if (fmt == "json") {
    for (const auto& e : table) {
      ordered_json j{{"n", c.n}, {"k", e.k}, {"status", e.sum_free ? "IN_SF" : "IN_K"}, {"method", e.method},
                     {"trials", e.trials}};
      out << j.dump() << "\n";
    }
    return kOk;
  }
  std::string sf;
  for (const auto& e : table) {
    out << "k=" << e.k << " " << (e.sum_free ? "IN_SF" : "IN_K") << " by " << e.method;
    if (e.witness) {
      out << " basis";
      for (std::uint64_t r : e.witness->basis) out << " " << to_hex(r);
    }
    out << "\n";
    if (e.sum_free) sf += (sf.empty() ? "" : ",") + std::to_string(e.k);
  }
  out << "SF_" << c.n << " = {" << sf << "}\n";
  return kOk;
}

int cmd_derive(const RunConfig& c, std::ostream& out) {
  if (c.n < 2) throw UsageError("n must be >= 2");
  preamble(out, "none", c.seed);
  std::vector<Witness> ws;
  if (!c.store.empty()) ws = read_witness_store(c.store);
  const Ledger l = derive(c.n, ws);
  const AuditResult a = audit(l);
  const std::string fmt = format_or(c, "text");
  if (fmt == "csv") {
    out << ledger_csv(l);
  } else {
    out << ledger_text(l);
    out << "audit: " << (a.ok ? "ok" : "FAILED") << "\n";
  }
  for (const auto& f : a.failures) out << "audit failure: " << f << "\n";
  return a.ok ? kOk : kVerificationFailed;
}

int cmd_thresholds(const RunConfig& c, std::ostream& out) {
  if (c.k < 3) throw UsageError("k must be >= 3");
  preamble(out, "none", c.seed);
  const ThresholdReport r = threshold_exact(c.k);
  const double root = lemma52_root();
  const std::string fmt = format_or(c, "text");
  if (fmt == "csv") {
    out << "k,exact,simplified,quadratic_root,min_n\n"
        << c.k << "," << fixed(r.exact_bound, 3) << "," << fixed(r.simplified_bound, 3) << ","
        << fixed(r.quadratic_root_bound, 3) << "," << threshold_min_n(c.k) << "\n";
  } else if (fmt == "json") {
    ordered_json j{{"k", c.k},
                   {"exact", r.exact_bound},
                   {"simplified", r.simplified_bound},
                   {"quadratic_root", r.quadratic_root_bound},
                   {"min_n", threshold_min_n(c.k)},
                   {"lemma52_root", root}};
    out << j.dump() << "\n";
  } else {
    out << "k=" << c.k << "\n";
    out << "exact bound: n >= " << fixed(r.exact_bound, 3) << "\n";
    out << "simplified bound: n >= " << fixed(r.simplified_bound, 3) << "\n";
    out << "quadratic root bound: n >= " << fixed(r.quadratic_root_bound, 3) << "\n";
    out << "smallest n by the exact bound: " << threshold_min_n(c.k) << "\n";
    out << "k=5 sharpened root: n > " << fixed(root, 4) << "\n";
  }
  return kOk;
}

struct ShippedExample {
  int n;
  u128 modulus;
};

int cmd_verify_paper_examples(const RunConfig& c, std::ostream& out) {
  const std::string dir = c.data_dir.empty() ? default_data_dir() : c.data_dir;
  const ShippedExample examples[] = {{17, (u128{1} << 17) | 0x9}, {19, (u128{1} << 19) | 0x27}};
  out << "# seed=" << c.seed << " data-dir=" << dir << "\n";
  bool all = true;
  for (const auto& ex : examples) {
    const std::string stem = dir + "/n" + std::to_string(ex.n);
    const BasisFile u = read_basis_file(stem + "_u.txt");
    const BasisFile v = read_basis_file(stem + "_v.txt");
    out << "# modulus=" << to_hex(u.field.modulus()) << "\n";
    const Field& f = u.field;
    const Subspace e = canonicalize(u.rows, f);
    const Subspace ve = canonicalize(v.rows, v.field);
    const LinPoly le = annihilator(e);
    struct Check {
      const char* name;
      bool ok;
    };
    const Check checks[] = {
        {"modulus", f.modulus() == ex.modulus && v.field == f},
        {"dimension", e.dim() == 5 && ve.dim() == 5},
        {"inverse_sum", inverse_sum(e).is_zero()},
        {"fk", fk_eval(u.rows, f).is_zero()},
        {"gamma", gamma(e) == ve},
        {"theta", theta_eval(v.rows, f).is_zero()},
        {"matrix_criterion", matrix_criterion(le)},
        {"gamma_coords", kernel(gamma_coords(le)) == ve},
    };
    for (const Check& ch : checks) {
      out << "n=" << ex.n << " " << ch.name << ": " << (ch.ok ? "PASS" : "FAIL") << "\n";
      all = all && ch.ok;
    }
  }
  out << (all ? "all checks passed" : "verification FAILED") << "\n";
  return all ? kOk : kVerificationFailed;
}

}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv("SUMFREE_DATA_DIR"); env != nullptr && *env != '\0') return env;
#ifdef SUMFREE_DEFAULT_DATA_DIR
  return SUMFREE_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Zero-sum subspaces of binary fields: criteria, searches, censuses and the SF_n ledger", "sumfree"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--modulus", c.modulus, "Field modulus as hex (default: lowest-weight irreducible)");
  app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app.add_option("--budget", c.budget, "Work or trial budget, decimal or 2^e");
  app.add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_option("--shard", c.shard, "Sweep only part index/total")->capture_default_str();
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--store", c.store, "Witness store (JSON lines)");
  app.add_option("--data-dir", c.data_dir, "Directory holding the example matrices");

  auto* theta = app.add_subcommand("theta", "Symbolic Theta_k: term count, degree, optional dump");
  theta->add_flag("--dump", c.dump, "Emit one monomial per line");
  theta->add_option("k", c.k)->required();
  auto* partitions = app.add_subcommand("partitions", "List the 2-adic partitions Lambda_k");
  partitions->add_option("k", c.k)->required();
  auto* check = app.add_subcommand("check-subspace", "Three-way zero-sum check of a basis file or witness");
  check->add_option("input", c.input, "Basis file or witness JSON lines; - for stdin")->capture_default_str();
  auto* search = app.add_subcommand("search", "Find a zero-sum subspace");
  search->add_option("n", c.n)->required();
  search->add_option("k", c.k)->required();
  search->add_option("--strategy", c.strategy)->check(CLI::IsMember({"random", "exhaustive"}))->capture_default_str();
  auto* cen = app.add_subcommand("census", "Count zeros of F_k or Theta_k over all k-tuples");
  cen->add_option("n", c.n)->required();
  cen->add_option("k", c.k)->required();
  cen->add_option("--poly", c.poly)->check(CLI::IsMember({"fk", "theta"}))->capture_default_str();
  auto* zk = app.add_subcommand("zk", "Count k-dimensional zero-sum subspaces");
  zk->add_option("n", c.n)->required();
  zk->add_option("k", c.k)->required();
  auto* sf = app.add_subcommand("sf-table", "Certify SF_n for small n");
  sf->add_option("n", c.n)->required();
  auto* der = app.add_subcommand("derive", "Derive K_n / SF_n memberships with justifications");
  der->add_option("n", c.n)->required();
  auto* thr = app.add_subcommand("thresholds", "Threshold bounds for order k");
  thr->add_option("k", c.k)->required();
  auto* ver = app.add_subcommand("verify-paper-examples", "Re-verify the shipped n = 17 and n = 19 examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (theta->parsed()) return cmd_theta(c, out);
    if (partitions->parsed()) return cmd_partitions(c, out);
    if (check->parsed()) return cmd_check_subspace(c, out);
    if (search->parsed()) return cmd_search(c, out);
    if (cen->parsed()) return cmd_census(c, out);
    if (zk->parsed()) return cmd_zk(c, out);
    if (sf->parsed()) return cmd_sf_table(c, out);
    if (der->parsed()) return cmd_derive(c, out);
    if (thr->parsed()) return cmd_thresholds(c, out);
    if (ver->parsed()) return cmd_verify_paper_examples(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sumfree"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sumfree::cli
