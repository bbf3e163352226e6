#include "szm/cli.hpp"

#include "szm/catalog.hpp"
#include "szm/enumeration.hpp"
#include "szm/moebius.hpp"
#include "szm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace szm::cli {

namespace {

using nlohmann::json;

constexpr unsigned max_symbolic_e = 1u << 20;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void require_symbolic_e(unsigned e) {
  if (e % 2 == 0 || e < 3 || e > max_symbolic_e) {
    throw UsageError("--e must be an odd integer in [3, 2^20], got " +
                     std::to_string(e));
  }
}

// A table of strings rendered as JSON rows, CSV or aligned text.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (char c : s) {
    quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return quoted + "\"";
}

void write_csv(Table const& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(t.columns[i]);
  }
  out << '\n';
  for (auto const& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(row[i]);
    }
    out << '\n';
  }
}

void write_text(Table const& t, std::ostream& out) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    width[i] = t.columns[i].size();
    for (auto const& row : t.rows) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto line = [&](std::vector<std::string> const& cells) {
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[i])) << cells[i] << "  ";
    }
    out << cells.back();
    out << '\n';
  };
  line(t.columns);
  for (auto const& row : t.rows) {
    line(row);
  }
}

json rows_json(Table const& t) {
  json rows = json::array();
  for (auto const& row : t.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      r[t.columns[i]] = row[i];
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

json header(std::string const& command, unsigned e) {
  return json{{"schema_version", schema_version}, {"command", command}, {"e", e}};
}

// Non-canonical spellings at level 1 and where they resolve to.
json aliases(unsigned e) {
  json a = json::object();
  for (std::uint8_t k = 0; k < 10; ++k) {
    ClassLabel const label{static_cast<Kind>(k), 1};
    ClassLabel const canon = canonicalize(label, e);
    std::string const spelled = std::string(kind_name(label.kind)) + "(1)";
    if (to_string(canon) != spelled) {
      a[spelled] = to_string(canon);
    }
  }
  return a;
}

void emit_table(std::string const& command, unsigned e, Table const& t,
                std::string const& format, std::ostream& out) {
  if (format == "csv") {
    write_csv(t, out);
  } else if (format == "text") {
    write_text(t, out);
  } else {
    json j = header(command, e);
    j["aliases"] = aliases(e);
    j["rows"] = rows_json(t);
    out << j.dump(2) << '\n';
  }
}

int cmd_table(unsigned e, std::string const& format, std::ostream& out) {
  require_symbolic_e(e);
  auto const mu = mu_table(e);
  Table t{{"label", "order", "normalizer_order", "mu"}, {}};
  for (auto const& label : support_classes(e)) {
    t.rows.push_back({to_string(label), class_order(label, e).str(),
                      normalizer_order(label, e).str(), mu[label].str()});
  }
  emit_table("table", e, t, format, out);
  return 0;
}

int cmd_mu(unsigned e, std::string const& format, std::ostream& out) {
  require_symbolic_e(e);
  auto const mu = mu_table(e);
  Table t{{"label", "mu"}, {}};
  for (auto const& label : canonical_classes(e)) {
    t.rows.push_back({to_string(label), mu[label].str()});
  }
  emit_table("mu", e, t, format, out);
  return 0;
}

int cmd_classes(unsigned e, std::string const& format, std::ostream& out) {
  require_symbolic_e(e);
  Table t{{"label", "order", "normalizer_order", "class_size"}, {}};
  for (auto const& label : canonical_classes(e)) {
    auto const d = class_data(label, e);
    t.rows.push_back({to_string(label), d.order.str(), d.normalizer_order.str(),
                      d.class_size.str()});
  }
  emit_table("classes", e, t, format, out);
  return 0;
}

int cmd_count(unsigned e, std::string const& gamma_text, std::string const& format,
              std::ostream& out) {
  require_symbolic_e(e);
  GammaDescriptor gamma{};
  try {
    gamma = parse_gamma(gamma_text);
  } catch (std::invalid_argument const& ex) {
    throw UsageError(ex.what());
  }
  std::string const value = n_gamma(gamma, e).str();
  if (format == "text") {
    out << value << '\n';
  } else if (format == "csv") {
    out << "e,gamma,value\n" << e << ',' << to_string(gamma) << ',' << value << '\n';
  } else {
    json j = header("count", e);
    j["gamma"] = to_string(gamma);
    j["value"] = value;
    out << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_verify(unsigned e, std::string const& suite, std::string const& format,
               VerifyOptions const& options, std::ostream& out) {
  if (e != 1 && e != 3 && e != 5) {
    throw UsageError("verify needs --e in {1, 3, 5}");
  }
  if (!suite_supported(suite, e)) {
    throw UsageError("suite '" + suite + "' is not available for e = " +
                     std::to_string(e));
  }
  Report const report = run_suite(suite, e, options);
  if (format == "text") {
    for (auto const& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected
          << ", actual " << c.actual << '\n';
    }
    for (auto const& note : report.notes) {
      out << "note: " << note << '\n';
    }
    out << (report.passed() ? "all checks passed" : "some checks FAILED") << '\n';
  } else if (format == "csv") {
    Table t{{"name", "expected", "actual", "pass", "elapsed_ms"}, {}};
    for (auto const& c : report.checks) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(3) << c.elapsed_ms;
      t.rows.push_back({c.name, c.expected, c.actual, c.pass ? "true" : "false",
                        ms.str()});
    }
    write_csv(t, out);
  } else {
    json j = header("verify", e);
    j["suite"] = report.suite;
    j["passed"] = report.passed();
    j["notes"] = report.notes;
    json checks = json::array();
    for (auto const& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass},
                        {"elapsed_ms", c.elapsed_ms}});
    }
    j["checks"] = std::move(checks);
    out << j.dump(2) << '\n';
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moebius function and Hall enumeration for the Suzuki groups Sz(2^e)",
               "szm"};
  app.require_subcommand(1);

  unsigned e = 0;
  std::string format = "json";
  std::string gamma;
  std::string suite = "all";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool slow = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--e", e, "odd exponent, q = 2^e")->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto* table = app.add_subcommand("table", "mu, |H| and |N(H)| for the support classes");
  add_common(table);
  auto* mu = app.add_subcommand("mu", "mu for every canonical class");
  add_common(mu);
  auto* classes = app.add_subcommand("classes", "orders and class sizes");
  add_common(classes);
  auto* count = app.add_subcommand("count", "normal subgroups of Gamma with quotient G");
  add_common(count);
  count->add_option("--gamma", gamma, "free:k, hecke:k or hecke-all:k")->required();
  auto* verify = app.add_subcommand("verify", "check the library against Sz(2) or Sz(8)");
  add_common(verify);
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--opt-in-slow", slow, "include the unoptimized pair census");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }

  try {
    if (table->parsed()) {
      return cmd_table(e, format, out);
    }
    if (mu->parsed()) {
      return cmd_mu(e, format, out);
    }
    if (classes->parsed()) {
      return cmd_classes(e, format, out);
    }
    if (count->parsed()) {
      return cmd_count(e, gamma, format, out);
    }
    return cmd_verify(e, suite, format, VerifyOptions{jobs, slow}, out);
  } catch (UsageError const& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (std::exception const& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
}

}  // namespace szm::cli
