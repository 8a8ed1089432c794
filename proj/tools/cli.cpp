#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbar/analysis.hpp"
#include "mbar/cache.hpp"
#include "mbar/errors.hpp"
#include "mbar/formulas.hpp"
#include "mbar/parallel.hpp"
#include "mbar/strata.hpp"

namespace mbar::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kConventionCheckN = 6;

struct RunConfig {
  std::string command;
  std::string check_kind;
  std::string n_spec;
  int n_max = 0;
  int l = -1;
  std::string method = "stirling";
  std::string format = "text";
  std::string cache;
  int jobs = 1;
  int verify_margin = 5;
  int n_max_oracle = kDefaultOracleMaxN;
  std::string eq1_reading = "corrected";
  std::string table;
  bool allow_out_of_range = false;
  int k_max = 20;
  int i_max = 10;
  int t_max = 20;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shared per-invocation state: the parsed config, the resolved Stirling
// convention and the findings collected along the way.
struct Context {
  RunConfig cfg;
  std::vector<int> ns;
  Method method = Method::Stirling;
  TableOptions options;
  Json findings = Json::array();
};

std::string q(const BigRational& r) { return mbar::to_string(r); }

std::vector<int> resolve_ns(const RunConfig& cfg, int default_min) {
  if (!cfg.n_spec.empty() && cfg.n_max > 0) throw UsageError("give either --n or --n-max, not both");
  std::vector<int> ns;
  if (!cfg.n_spec.empty()) {
    try {
      ns = parse_int_range(cfg.n_spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--n: ") + e.what());
    }
  } else if (cfg.n_max > 0) {
    for (int n = default_min; n <= cfg.n_max; ++n) ns.push_back(n);
  }
  if (ns.empty()) throw UsageError("empty n range");
  for (int n : ns)
    if (n < 3) throw UsageError("n must be >= 3, got " + std::to_string(n));
  return ns;
}

Json config_json(const Context& ctx) {
  const RunConfig& c = ctx.cfg;
  Json j;
  if (!c.check_kind.empty()) j["check"] = c.check_kind;
  j["n"] = ctx.ns;
  if (c.l >= 0) j["l"] = c.l;
  j["method"] = c.method;
  j["format"] = c.format;
  j["cache"] = c.cache.empty() ? Json(nullptr) : Json(c.cache);
  j["verify_margin"] = c.verify_margin;
  j["n_max_oracle"] = c.n_max_oracle;
  j["eq1_reading"] = c.eq1_reading;
  if (!c.table.empty()) j["injected_table"] = c.table;
  return j;
}

Json convention_json(const Context& ctx) {
  return Json{{"k_start", ctx.options.convention.k_start},
              {"j_start", ctx.options.convention.j_start},
              {"verify_margin", ctx.options.convention.verify_margin},
              {"checked_up_to_n", kConventionCheckN},
              {"eq1_reading", to_string(ctx.options.reading)}};
}

Json report(const Context& ctx, Json results) {
  Json j;
  j["command"] = ctx.cfg.command;
  j["config"] = config_json(ctx);
  j["results"] = std::move(results);
  j["resolved_convention"] = convention_json(ctx);
  j["findings"] = ctx.findings;
  return j;
}

void note_eq1_reading(Context& ctx) {
  if (ctx.method != Method::Cnki) return;
  const BigRational literal = betti_via_cnki_exact(4, 1, Eq1Reading::Literal);
  ctx.findings.push_back(
      {{"kind", "eq1_reading"},
       {"reading", to_string(ctx.options.reading)},
       {"message",
        "the literal reading (m=0 term always 1) gives rk H^2(M0,4) = " + q(literal) +
            " against 1 from the strata oracle; the corrected reading counts the m=0 term only "
            "when l=k"}});
}

Json ranks_json(const BettiTable& t) {
  Json arr = Json::array();
  for (const auto& r : t.ranks) arr.push_back(r.get_str());
  return arr;
}

void write_table_csv(std::ostream& out, const BettiTable& t) {
  const int d = t.n - 3;
  for (int l = 0; l <= d; ++l) {
    const BigInt b = binomial(d, l);
    out << t.n << ',' << l << ',' << t.ranks[l].get_str() << ',' << b.get_str() << ','
        << q(make_rational(t.ranks[l], b)) << '\n';
  }
}

constexpr const char* kTableCsvHeader = "n,l,rank,binomial,normalized_rank\n";

Json table_json(const BettiTable& t) {
  return Json{{"n", t.n}, {"ranks", ranks_json(t)}};
}

// Compares a freshly computed table to the cache record, if any, and
// merges it. Returns false on mismatch.
bool merge_into_cache(TableMap& cache, const BettiTable& table, Json& findings) {
  auto it = cache.find(table.n);
  if (it == cache.end()) {
    cache.emplace(table.n, table);
    return true;
  }
  if (it->second == table) return true;
  findings.push_back({{"kind", "cache_mismatch"},
                      {"n", table.n},
                      {"cached", ranks_json(it->second)},
                      {"computed", ranks_json(table)}});
  return false;
}

std::vector<BettiTable> compute_tables(const Context& ctx) {
  std::vector<std::optional<BettiTable>> slots(ctx.ns.size());
  parallel_for(ctx.ns.size(), ctx.cfg.jobs, [&](std::size_t i) {
    slots[i] = betti_table(ctx.ns[i], ctx.method, ctx.options);
  });
  std::vector<BettiTable> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ---- class / betti ------------------------------------------------------

int cmd_class(Context& ctx, std::ostream& out) {
  if (ctx.ns.size() != 1) throw UsageError("class takes a single --n");
  const int n = ctx.ns.front();
  note_eq1_reading(ctx);
  const LPolynomial cls = class_polynomial(n, ctx.method, ctx.options);
  const BettiTable table = to_betti_table(cls, n);

  int code = kOk;
  if (!ctx.cfg.cache.empty()) {
    TableMap cache = load_cache(ctx.cfg.cache);
    if (merge_into_cache(cache, table, ctx.findings)) {
      save_cache(ctx.cfg.cache, cache);
    } else {
      code = kInconsistent;
    }
  }

  if (ctx.cfg.format == "json") {
    Json r = table_json(table);
    r["class"] = cls.to_string();
    out << report(ctx, Json::array({r})).dump(2) << '\n';
  } else if (ctx.cfg.format == "csv") {
    out << kTableCsvHeader;
    write_table_csv(out, table);
  } else {
    out << cls.to_string() << '\n';
  }
  return code;
}

int cmd_betti(Context& ctx, std::ostream& out) {
  note_eq1_reading(ctx);
  const auto tables = compute_tables(ctx);
  if (ctx.cfg.format == "json") {
    Json results = Json::array();
    for (const auto& t : tables) results.push_back(table_json(t));
    out << report(ctx, results).dump(2) << '\n';
  } else if (ctx.cfg.format == "csv") {
    out << kTableCsvHeader;
    for (const auto& t : tables) write_table_csv(out, t);
  } else {
    for (const auto& t : tables) {
      out << t.n << ':';
      for (const auto& r : t.ranks) out << ' ' << r.get_str();
      out << '\n';
    }
  }
  return kOk;
}

// ---- checks -------------------------------------------------------------

struct CheckOutcome {
  bool holds = true;
  Json detail;
};

bool symmetric_table(const BettiTable& t) {
  const auto& r = t.ranks;
  if (static_cast<int>(r.size()) != t.n - 2 || r.empty()) return false;
  if (r.front() != 1 || r.back() != 1) return false;
  for (std::size_t l = 0; l < r.size(); ++l) {
    if (r[l] <= 0 || r[l] != r[r.size() - 1 - l]) return false;
  }
  return true;
}

CheckOutcome run_check(const std::string& kind, const BettiTable& t) {
  CheckOutcome o;
  if (kind == "symmetry") {
    o.holds = symmetric_table(t);
  } else if (kind == "unimodal") {
    o.holds = is_unimodal(t.ranks);
  } else if (kind == "realroot") {
    o.holds = is_real_rooted(to_polynomial(t));
  } else if (kind == "ulc") {
    const UlcReport r = ulc_check(t);
    o.holds = r.all_hold;
    Json per = Json::array();
    for (const auto& e : r.per_l) {
      per.push_back({{"l", e.l}, {"lhs", q(e.lhs)}, {"rhs", q(e.rhs)}, {"holds", e.holds}});
    }
    o.detail = per;
  }
  return o;
}

BettiTable parse_injected_table(const std::string& text) {
  BettiTable t;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      t.ranks.emplace_back(field, 10);
    } catch (const std::invalid_argument&) {
      throw UsageError("--table: bad entry \"" + field + "\"");
    }
  }
  if (t.ranks.empty()) throw UsageError("--table is empty");
  t.n = static_cast<int>(t.ranks.size()) + 2;
  return t;
}

int cmd_check(Context& ctx, std::ostream& out) {
  std::vector<BettiTable> tables;
  if (!ctx.cfg.table.empty()) {
    tables.push_back(parse_injected_table(ctx.cfg.table));
    ctx.ns = {tables.front().n};
  } else {
    note_eq1_reading(ctx);
    tables = compute_tables(ctx);
  }

  std::vector<CheckOutcome> outcomes(tables.size());
  parallel_for(tables.size(), ctx.cfg.jobs,
               [&](std::size_t i) { outcomes[i] = run_check(ctx.cfg.check_kind, tables[i]); });

  bool all = true;
  Json results = Json::array();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    Json r{{"n", tables[i].n}, {"check", ctx.cfg.check_kind}, {"holds", outcomes[i].holds}};
    if (!outcomes[i].detail.is_null()) r["detail"] = outcomes[i].detail;
    if (!outcomes[i].holds) {
      all = false;
      ctx.findings.push_back({{"kind", "violation"},
                              {"check", ctx.cfg.check_kind},
                              {"n", tables[i].n},
                              {"ranks", ranks_json(tables[i])}});
    }
    results.push_back(std::move(r));
  }

  if (ctx.cfg.format == "csv") {
    out << "n,check,holds\n";
    for (std::size_t i = 0; i < tables.size(); ++i) {
      out << tables[i].n << ',' << ctx.cfg.check_kind << ',' << (outcomes[i].holds ? 1 : 0) << '\n';
    }
  } else if (ctx.cfg.format == "text" && all) {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      out << "n=" << tables[i].n << ' ' << ctx.cfg.check_kind << " ok\n";
    }
  } else {
    // violations are always reported as JSON
    out << report(ctx, results).dump(2) << '\n';
  }
  return all ? kOk : kViolation;
}

// ---- asymptotic ---------------------------------------------------------

int cmd_asymptotic(Context& ctx, std::ostream& out) {
  if (ctx.cfg.l < 0) throw UsageError("asymptotic needs --l");
  note_eq1_reading(ctx);
  const RangePolicy policy =
      ctx.cfg.allow_out_of_range ? RangePolicy::Annotate : RangePolicy::Enforce;
  const AsymptoticReport rep =
      asymptotic_scan(ctx.cfg.l, ctx.ns, ctx.method, policy, ctx.cfg.jobs);

  for (const auto& e : rep.entries) {
    if (!e.in_range) {
      ctx.findings.push_back({{"kind", "outside_range"},
                              {"n", e.n},
                              {"l", e.l},
                              {"message", "l > n/(10 ln n); reported for comparison only"}});
    }
  }

  if (ctx.cfg.format == "json") {
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
      entries.push_back({{"n", e.n},
                         {"l", e.l},
                         {"rank", e.rank.get_str()},
                         {"main_term", q(e.main_term)},
                         {"ratio_minus_one", q(e.ratio_minus_one)},
                         {"abs_error", q(e.abs_error)},
                         {"scaled", q(e.scaled)},
                         {"in_range", e.in_range}});
    }
    Json r{{"l", rep.l},
           {"entries", entries},
           {"empirical_N", rep.empirical_N ? Json(*rep.empirical_N) : Json(nullptr)}};
    out << report(ctx, Json::array({r})).dump(2) << '\n';
  } else if (ctx.cfg.format == "csv") {
    out << "n,l,rank,main_term,ratio_minus_one,abs_error,scaled,in_range\n";
    for (const auto& e : rep.entries) {
      out << e.n << ',' << e.l << ',' << e.rank.get_str() << ',' << q(e.main_term) << ','
          << q(e.ratio_minus_one) << ',' << q(e.abs_error) << ',' << q(e.scaled) << ','
          << (e.in_range ? 1 : 0) << '\n';
    }
  } else {
    out << "l=" << rep.l << '\n';
    out << "n\t|ratio-1|\tn^2|ratio-1|\n";
    for (const auto& e : rep.entries) {
      out << e.n << '\t' << e.abs_error.get_d() << '\t' << e.scaled.get_d()
          << (e.in_range ? "" : "\t(outside range)") << '\n';
    }
    out << "empirical_N=" << (rep.empirical_N ? std::to_string(*rep.empirical_N) : "none") << '\n';
  }
  return kOk;
}

// ---- probe-constants ----------------------------------------------------

int cmd_probe(Context& ctx, std::ostream& out) {
  const int n_min = *std::min_element(ctx.ns.begin(), ctx.ns.end());
  const int n_max = *std::max_element(ctx.ns.begin(), ctx.ns.end());
  const int k_max = ctx.cfg.k_max;
  ProbeGrid grid{n_min, n_max, [k_max](int) { return k_max; }, ctx.cfg.i_max, ""};
  const ProbeReport probe = cnki_constant_probe(grid);

  BoundRanges ranges;
  ranges.n_min = n_min;
  ranges.n_max = n_max;
  ranges.k_max = k_max;
  ranges.i_max = ctx.cfg.i_max;
  ranges.t_max = ctx.cfg.t_max;
  const BoundCheckResult bounds = run_proof_bound_checks(ranges);
  for (const auto& f : bounds.failures) ctx.findings.push_back({{"kind", "bound_violation"}, {"message", f}});

  if (ctx.cfg.format == "json") {
    Json r{{"grid", probe.grid},
           {"points", probe.points},
           {"sup_value", q(probe.sup_value)},
           {"sup_decimal", probe.sup_value.get_d()},
           {"argmax", {{"n", probe.argmax_n}, {"k", probe.argmax_k}, {"i", probe.argmax_i}}},
           {"bound_checks", {{"checked", bounds.checked}, {"all_hold", bounds.all_hold}}}};
    out << report(ctx, Json::array({r})).dump(2) << '\n';
  } else if (ctx.cfg.format == "csv") {
    out << "sup_value,argmax_n,argmax_k,argmax_i,points,bound_checks_hold\n";
    out << q(probe.sup_value) << ',' << probe.argmax_n << ',' << probe.argmax_k << ','
        << probe.argmax_i << ',' << probe.points << ',' << (bounds.all_hold ? 1 : 0) << '\n';
  } else {
    out << "grid: " << probe.grid << " (" << probe.points << " points)\n";
    out << "sup |C_nki|/n^(i+1) = " << q(probe.sup_value) << " ~ " << probe.sup_value.get_d()
        << " at n=" << probe.argmax_n << ", k=" << probe.argmax_k << ", i=" << probe.argmax_i << '\n';
    out << "proof bounds: " << bounds.checked << " checked, "
        << (bounds.all_hold ? "all hold" : "VIOLATED") << '\n';
  }
  return bounds.all_hold ? kOk : kViolation;
}

// ---- scan ---------------------------------------------------------------

int cmd_scan(Context& ctx, std::ostream& out) {
  const auto tables = compute_tables(ctx);
  static const std::vector<std::string> kinds = {"symmetry", "unimodal", "ulc", "realroot"};
  std::vector<std::vector<CheckOutcome>> outcomes(tables.size());
  parallel_for(tables.size(), ctx.cfg.jobs, [&](std::size_t i) {
    for (const auto& kind : kinds) outcomes[i].push_back(run_check(kind, tables[i]));
  });

  int code = kOk;
  if (!ctx.cfg.cache.empty()) {
    TableMap cache = load_cache(ctx.cfg.cache);
    bool consistent = true;
    for (const auto& t : tables) consistent = merge_into_cache(cache, t, ctx.findings) && consistent;
    if (consistent) save_cache(ctx.cfg.cache, cache);
    else code = kInconsistent;
  }

  Json results = Json::array();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    Json r = table_json(tables[i]);
    for (std::size_t c = 0; c < kinds.size(); ++c) {
      r[kinds[c]] = outcomes[i][c].holds;
      if (!outcomes[i][c].holds) {
        if (code == kOk) code = kViolation;
        ctx.findings.push_back({{"kind", "violation"}, {"check", kinds[c]}, {"n", tables[i].n}});
      }
    }
    results.push_back(std::move(r));
  }

  if (ctx.cfg.format == "csv") {
    out << "n,symmetry,unimodal,ulc,realroot,ranks\n";
    for (std::size_t i = 0; i < tables.size(); ++i) {
      out << tables[i].n;
      for (const auto& o : outcomes[i]) out << ',' << (o.holds ? 1 : 0);
      out << ',';
      for (std::size_t l = 0; l < tables[i].ranks.size(); ++l) {
        out << (l ? " " : "") << tables[i].ranks[l].get_str();
      }
      out << '\n';
    }
  } else if (ctx.cfg.format == "text" && code == kOk) {
    for (const auto& t : tables) out << "n=" << t.n << " all checks hold\n";
  } else {
    out << report(ctx, results).dump(2) << '\n';
  }
  return code;
}

// ---- wiring -------------------------------------------------------------

void add_common(CLI::App* sub, RunConfig& cfg, bool with_cache) {
  sub->add_option("--method", cfg.method, "stirling | cnki | strata")
      ->check(CLI::IsMember({"stirling", "cnki", "strata"}));
  sub->add_option("--format", cfg.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--verify-margin", cfg.verify_margin, "extra degrees checked in the Stirling sum")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--n-max-oracle", cfg.n_max_oracle, "largest n the strata oracle accepts")
      ->check(CLI::Range(3, 31));
  sub->add_option("--eq1-reading", cfg.eq1_reading, "corrected | literal (C_nki expansion)")
      ->check(CLI::IsMember({"corrected", "literal"}));
  sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  if (with_cache) sub->add_option("--cache", cfg.cache, "class cache file (default $MBAR_CACHE)");
}

int dispatch(Context& ctx, std::ostream& out) {
  const std::string& c = ctx.cfg.command;
  if (c == "class") return cmd_class(ctx, out);
  if (c == "betti") return cmd_betti(ctx, out);
  if (c == "check") return cmd_check(ctx, out);
  if (c == "asymptotic") return cmd_asymptotic(ctx, out);
  if (c == "probe-constants") return cmd_probe(ctx, out);
  if (c == "scan") return cmd_scan(ctx, out);
  throw UsageError("unknown command " + c);
}

}  // namespace

std::vector<int> parse_int_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer \"" + s + "\" in \"" + text + "\"");
    }
    if (used != s.size()) throw std::invalid_argument("bad integer \"" + s + "\" in \"" + text + "\"");
    return v;
  };
  std::vector<int> out;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(to_int(part));
  } else {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.empty() || parts.size() > 3) throw std::invalid_argument("bad range \"" + text + "\"");
    const int lo = to_int(parts[0]);
    const int hi = parts.size() > 1 ? to_int(parts[1]) : lo;
    const int step = parts.size() > 2 ? to_int(parts[2]) : 1;
    if (step <= 0) throw std::invalid_argument("range step must be positive");
    for (int v = lo; v <= hi; v += step) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty range \"" + text + "\"");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  RunConfig& cfg = ctx.cfg;

  CLI::App app{"Grothendieck classes and Betti numbers of M0,n-bar"};
  app.require_subcommand(1);

  auto* cls = app.add_subcommand("class", "class polynomial of M0,n-bar");
  cls->add_option("--n", cfg.n_spec, "n")->required();
  add_common(cls, cfg, true);

  auto* betti = app.add_subcommand("betti", "Betti tables for one n or a range");
  betti->add_option("--n", cfg.n_spec, "n or range a:b[:step]");
  betti->add_option("--n-max", cfg.n_max, "range 3..n-max");
  add_common(betti, cfg, false);

  auto* check = app.add_subcommand("check", "run a structural or conjectural check");
  check->add_option("kind", cfg.check_kind, "ulc | realroot | symmetry | unimodal")
      ->required()
      ->check(CLI::IsMember({"ulc", "realroot", "symmetry", "unimodal"}));
  check->add_option("--n", cfg.n_spec, "n or range");
  check->add_option("--n-max", cfg.n_max, "range 3..n-max");
  check->add_option("--table", cfg.table, "check this comma-separated table instead");
  add_common(check, cfg, false);

  auto* asym = app.add_subcommand("asymptotic", "ratio to the main term for fixed l");
  asym->add_option("--l", cfg.l, "degree l")->required()->check(CLI::NonNegativeNumber);
  asym->add_option("--n", cfg.n_spec, "n or range")->required();
  asym->add_flag("--allow-out-of-range", cfg.allow_out_of_range,
                 "report n with l > n/(10 ln n) instead of failing");
  add_common(asym, cfg, false);

  auto* probe = app.add_subcommand("probe-constants", "empirical |C_nki|/n^(i+1) and proof bounds");
  probe->add_option("--n", cfg.n_spec, "n range (default 4:60)");
  probe->add_option("--k-max", cfg.k_max, "largest k")->check(CLI::NonNegativeNumber);
  probe->add_option("--i-max", cfg.i_max, "largest i")->check(CLI::PositiveNumber);
  probe->add_option("--t-max", cfg.t_max, "largest composition total")->check(CLI::PositiveNumber);
  add_common(probe, cfg, false);

  auto* scan = app.add_subcommand("scan", "tables, all checks and cache update over a range");
  scan->add_option("--n", cfg.n_spec, "n or range");
  scan->add_option("--n-max", cfg.n_max, "range 3..n-max");
  add_common(scan, cfg, true);

  bool method_given = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (auto* sub : app.get_subcommands()) {
      cfg.command = sub->get_name();
      method_given = sub->count("--method") > 0;
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (cfg.cache.empty() && (cfg.command == "class" || cfg.command == "scan")) {
      if (const char* env = std::getenv("MBAR_CACHE"); env && *env) cfg.cache = env;
    }
    if (!method_given) {
      // the asymptotic scan needs one rank at large n, cheapest via C_nki
      cfg.method = cfg.command == "asymptotic" ? "cnki" : "stirling";
    }
    if (cfg.command == "scan" && cfg.method != "stirling") {
      throw UsageError("scan always uses the stirling method");
    }
    ctx.method = *parse_method(cfg.method);
    ctx.options.reading = cfg.eq1_reading == "literal" ? Eq1Reading::Literal : Eq1Reading::Corrected;
    ctx.options.n_max_oracle = cfg.n_max_oracle;
    if (cfg.command == "probe-constants" && cfg.n_spec.empty()) cfg.n_spec = "4:60";
    if (!(cfg.command == "check" && !cfg.table.empty())) {
      ctx.ns = resolve_ns(cfg, 3);
    }
    if (ctx.method == Method::Strata) {
      for (int n : ctx.ns) {
        if (n > cfg.n_max_oracle) {
          throw UsageError("n=" + std::to_string(n) + " exceeds the strata oracle limit " +
                           std::to_string(cfg.n_max_oracle));
        }
      }
    }
    ctx.options.convention =
        resolve_convention(kConventionCheckN, candidate_conventions(cfg.verify_margin));
    return dispatch(ctx, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "range error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kInconsistent;
  }
}

}  // namespace mbar::cli
