#include "cli_app.hpp"

#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "catalan/bijections.hpp"
#include "catalan/identities.hpp"
#include "catalan/oracle.hpp"
#include "catalan/paths.hpp"
#include "catalan/series.hpp"
#include "catalan/table_render.hpp"
#include "json.hpp"

namespace catalan::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats = {
    {"ascii", OutputFormat::Ascii}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "ascii, csv or json")->check(CLI::IsMember({"ascii", "csv", "json"}));
}

// Range flags shared by verify and verify-all. Each maps onto one parameter
// name; the *-max flags keep the parameter's default lower bound.
struct RangeFlags {
  std::optional<long> n_max, m_max, l_max, k_max, p_min, p_max, r_min, r_max;

  void attach(CLI::App* sub) {
    sub->add_option("--n-max", n_max);
    sub->add_option("--m-max", m_max);
    sub->add_option("--l-max", l_max);
    sub->add_option("--k-max", k_max);
    sub->add_option("--p-min", p_min);
    sub->add_option("--p-max", p_max);
    sub->add_option("--r-min", r_min);
    sub->add_option("--r-max", r_max);
  }

  // Overrides for one identity; flags naming a parameter it lacks are a
  // usage error when `strict`, and skipped otherwise.
  Box overrides(const IdentityDescriptor& identity, bool strict) const {
    Box box;
    const auto spec_of = [&](const std::string& name) -> const ParamSpec* {
      for (const auto& spec : identity.params) {
        if (spec.name == name) return &spec;
      }
      return nullptr;
    };
    const auto add = [&](const std::string& name, std::optional<long> lo, std::optional<long> hi,
                         const std::string& flags) {
      if (!lo && !hi) return;
      const ParamSpec* spec = spec_of(name);
      if (!spec) {
        if (strict) throw UsageError("identity '" + identity.id + "' has no parameter " + name + " (" + flags + ")");
        return;
      }
      box.push_back({name, lo.value_or(spec->default_lo), hi.value_or(spec->default_hi)});
    };
    add("n", std::nullopt, n_max, "--n-max");
    add("m", std::nullopt, m_max, "--m-max");
    add("l", std::nullopt, l_max, "--l-max");
    add("k", std::nullopt, k_max, "--k-max");
    add("p", p_min, p_max, "--p-min/--p-max");
    add("r", r_min, r_max, "--r-min/--r-max");
    for (const auto& range : box) {
      if (strict && range.lo > range.hi) {
        throw UsageError("empty range " + range.name + "=" + std::to_string(range.lo) + ".." +
                         std::to_string(range.hi));
      }
    }
    return box;
  }
};

int report_exit(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return kExitCounterexample;
  }
  return kExitOk;
}

Rational parse_weight(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const DomainError&) {
    throw UsageError(std::string(flag) + " expects an integer or p/q literal, got '" + text + "'");
  }
}

// --- subcommands -------------------------------------------------------------

struct TableCommand {
  std::string triangle;
  long rows = 0;
  std::optional<std::string> x, y;
  std::string format = "ascii";

  int run(std::ostream& out) const {
    TableRequest request;
    request.triangle = *parse_table_triangle(triangle);
    request.rows = rows;
    const bool weighted = request.triangle == TableTriangle::M;
    if (weighted && (!x || !y)) throw UsageError("--x and --y are required for triangle M");
    if (!weighted && (x || y)) throw UsageError("--x and --y only apply to triangle M");
    if (weighted) {
      request.x = parse_weight(*x, "--x");
      request.y = parse_weight(*y, "--y");
    }
    out << render_table(request, kFormats.at(format));
    return kExitOk;
  }
};

struct VerifyCommand {
  std::string identity;
  RangeFlags ranges;
  std::string format = "ascii";

  int run(std::ostream& out) const {
    const IdentityRegistry registry;
    const IdentityDescriptor* descriptor = nullptr;
    try {
      descriptor = &registry.find(identity);
    } catch (const UnknownIdentity& e) {
      throw UsageError(e.what());
    }
    std::vector<VerificationReport> reports;
    try {
      reports.push_back(verify(*descriptor, ranges.overrides(*descriptor, true)));
    } catch (const BoxOutsideDomain& e) {
      throw UsageError(e.what());
    }
    out << format_reports(reports, kFormats.at(format));
    return report_exit(reports);
  }
};

struct VerifyAllCommand {
  RangeFlags ranges;
  std::string format = "ascii";

  int run(std::ostream& out) const {
    const IdentityRegistry registry;
    std::vector<VerificationReport> reports;
    for (const auto& identity : registry.identities()) {
      Box box = resolve_box(identity, {});
      for (const auto& o : ranges.overrides(identity, false)) {
        const auto& spec = *std::find_if(identity.params.begin(), identity.params.end(),
                                         [&](const ParamSpec& p) { return p.name == o.name; });
        for (auto& range : box) {
          if (range.name != o.name) continue;
          range.lo = std::max(o.lo, spec.domain_lo);
          range.hi = std::min(o.hi, spec.domain_hi);
        }
      }
      reports.push_back(verify(identity, box));
    }
    out << format_reports(reports, kFormats.at(format));
    return report_exit(reports);
  }
};

struct OracleCommand {
  std::string check;
  std::optional<long> n_max;
  std::string format = "ascii";

  int run(std::ostream& out) const {
    std::vector<VerificationReport> reports;
    if (check == "motzkin") {
      reports.push_back(verify_motzkin_oracle(n_max.value_or(10), designated_weight_points()));
    } else if (check == "ballot") {
      reports.push_back(verify_ballot_oracle(n_max.value_or(12)));
    } else {
      reports.push_back(verify_dyck_oracle(n_max.value_or(12)));
    }
    out << format_reports(reports, kFormats.at(format));
    return report_exit(reports);
  }
};

struct BijectionCommand {
  std::string which;
  long n = 1;
  long m = 1;
  long r = 1;
  bool list = false;
  std::string format = "ascii";

  int run(std::ostream& out) const {
    if (n < 0 || m < 0 || r < 0) throw UsageError("--n, --m and --r must be non-negative");
    if (which == "phi") return list ? list_phi(out) : check_phi_report(out);
    return list ? list_split(out) : check_split_report(out);
  }

  int check_phi_report(std::ostream& out) const {
    const BijectionCheck check = check_phi(n, m, r);
    const PhiCensus census = phi_census(n, m, r);
    VerificationReport report;
    report.id = "phi";
    report.box = {{"n", n, n}, {"m", m, m}, {"r", r, r}};
    report.cases = check.inputs + check.targets;
    report.note = "B side " + std::to_string(census.b_side) + ", A side " + std::to_string(census.a_side) +
                  ", excluded " + std::to_string(census.excluded) + ", targets " + std::to_string(census.targets);
    if (!check.ok) {
      report.pass = false;
      report.counterexample =
          Counterexample{{{"n", n}, {"m", m}, {"r", r}},
                         Rational(static_cast<long>(census.b_side + census.a_side - census.excluded)),
                         Rational(static_cast<long>(census.targets)), check.failure};
    }
    out << format_reports({report}, kFormats.at(format));
    return report_exit({report});
  }

  int list_phi(std::ostream& out) const {
    const auto inputs = enumerate_phi_domain(n, m, r);
    if (format == "json") {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& input : inputs) {
        rows.push_back({{"side", input.side == PhiSide::B ? "B" : "A-C"},
                        {"p", input.p.to_string()},
                        {"q", input.q.to_string()},
                        {"target", phi_forward(input, n, m, r).to_string()}});
      }
      out << rows.dump(2) << '\n';
    } else if (format == "csv") {
      out << "side,p,q,target\n";
      for (const auto& input : inputs) {
        out << (input.side == PhiSide::B ? "B" : "A-C") << ',' << input.p.to_string() << ','
            << input.q.to_string() << ',' << phi_forward(input, n, m, r).to_string() << '\n';
      }
    } else {
      for (const auto& input : inputs) out << to_string(input) << " -> " << phi_forward(input, n, m, r) << '\n';
    }
    return kExitOk;
  }

  int check_split_report(std::ostream& out) const {
    const PivotCounts counts = count_dyck_by_pivot(n, m);
    const ScalarHelpers helpers;
    VerificationReport report;
    report.id = "dyck_split";
    report.box = {{"n", n, n}, {"m", m, m}};
    report.cases = counts.up + counts.down;
    report.note = "pivot u " + std::to_string(counts.up) + ", pivot d " + std::to_string(counts.down);
    const Rational difference = Rational(static_cast<long>(counts.up)) - Rational(static_cast<long>(counts.down));
    const Rational expected(helpers.g(n, m, m - n + 1));
    if (difference != expected) {
      report.pass = false;
      report.counterexample = Counterexample{{{"n", n}, {"m", m}}, difference, expected, "#u - #d against G"};
    }
    out << format_reports({report}, kFormats.at(format));
    return report_exit({report});
  }

  int list_split(std::ostream& out) const {
    const auto paths = enumerate_dyck(n + m + 1);
    if (format == "json") {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& p : paths) {
        const DyckSplit s = dyck_split(p, n);
        rows.push_back({{"path", p.to_string()},
                        {"pivot", std::string(1, to_char(s.pivot))},
                        {"k", s.k},
                        {"head", s.head.to_string()},
                        {"tail_reversed", s.tail_reversed.to_string()}});
      }
      out << rows.dump(2) << '\n';
    } else if (format == "csv") {
      out << "path,pivot,k,head,tail_reversed\n";
      for (const auto& p : paths) {
        const DyckSplit s = dyck_split(p, n);
        out << p << ',' << to_char(s.pivot) << ',' << s.k << ',' << s.head << ',' << s.tail_reversed << '\n';
      }
    } else {
      for (const auto& p : paths) {
        const DyckSplit s = dyck_split(p, n);
        out << p << " -> " << to_char(s.pivot) << " k=" << s.k << ' ' << s.head << '|' << s.tail_reversed << '\n';
      }
    }
    return kExitOk;
  }
};

struct SeriesCommand {
  std::string check;
  long order = 20;
  long k_max = 12;
  std::string format = "ascii";

  int run(std::ostream& out) const {
    if (order < 0 || k_max < 0 || k_max > order) throw UsageError("need 0 <= --k-max <= --order");
    std::vector<VerificationReport> reports;
    for (const auto& [name, which] : {std::pair{"riordan_A", RiordanTriangle::A}, std::pair{"riordan_B", RiordanTriangle::B},
                                      std::pair{"riordan_C", RiordanTriangle::C}}) {
      VerificationReport report;
      report.id = name;
      report.box = {{"k", 0, k_max}, {"n", 0, order}};
      for (long k = 0; k <= k_max; ++k) {
        ++report.cases;
        if (const auto mismatch = riordan_column_mismatch(which, k, order)) {
          report.pass = false;
          report.counterexample =
              Counterexample{{{"k", k}, {"n", mismatch->n}}, mismatch->series, mismatch->entry, "[t^n] d h^k"};
          break;
        }
      }
      reports.push_back(std::move(report));
    }
    out << format_reports(reports, kFormats.at(format));
    return report_exit(reports);
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Catalan-triangle tables, identity checks and lattice-path bijections", "catalan"};
  app.require_subcommand(1);

  TableCommand table;
  auto* table_cmd = app.add_subcommand("table", "Print a triangle");
  table_cmd->add_option("--triangle", table.triangle)
      ->required()
      ->check(CLI::IsMember({"C", "B", "A", "X", "Y", "Z", "W", "M"}));
  table_cmd->add_option("--rows", table.rows)->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--x", table.x, "horizontal weight on the axis (M only)");
  table_cmd->add_option("--y", table.y, "horizontal weight above the axis (M only)");
  add_format(table_cmd, table.format);

  VerifyCommand verify_one;
  auto* verify_cmd = app.add_subcommand("verify", "Check one identity over a parameter box");
  verify_cmd->add_option("--identity", verify_one.identity)->required();
  verify_one.ranges.attach(verify_cmd);
  add_format(verify_cmd, verify_one.format);

  VerifyAllCommand verify_every;
  auto* verify_all_cmd = app.add_subcommand("verify-all", "Check every identity on its default box");
  verify_every.ranges.attach(verify_all_cmd);
  add_format(verify_all_cmd, verify_every.format);

  OracleCommand oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare closed forms with path enumeration");
  oracle_cmd->add_option("--check", oracle.check)->required()->check(CLI::IsMember({"motzkin", "ballot", "dyck"}));
  oracle_cmd->add_option("--n-max", oracle.n_max)->check(CLI::NonNegativeNumber);
  add_format(oracle_cmd, oracle.format);

  BijectionCommand bijection;
  auto* bijection_cmd = app.add_subcommand("bijection", "Check or list a path bijection");
  bijection_cmd->add_option("--which", bijection.which)->required()->check(CLI::IsMember({"phi", "dyck-split"}));
  bijection_cmd->add_option("--n", bijection.n);
  bijection_cmd->add_option("--m", bijection.m);
  bijection_cmd->add_option("--r", bijection.r, "phi only");
  bijection_cmd->add_flag("--list", bijection.list, "print every pairing");
  add_format(bijection_cmd, bijection.format);

  SeriesCommand series;
  auto* series_cmd = app.add_subcommand("series", "Check the Riordan-array columns of A, B and C");
  series_cmd->add_option("--check", series.check)->required()->check(CLI::IsMember({"riordan"}));
  series_cmd->add_option("--order", series.order);
  series_cmd->add_option("--k-max", series.k_max);
  add_format(series_cmd, series.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table_cmd) return table.run(out);
    if (*verify_cmd) return verify_one.run(out);
    if (*verify_all_cmd) return verify_every.run(out);
    if (*oracle_cmd) return oracle.run(out);
    if (*bijection_cmd) return bijection.run(out);
    return series.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace catalan::cli
