#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "stdual/builtins.hpp"
#include "stdual/report.hpp"
#include "stdual/scenario_io.hpp"

namespace stdual::cli {

namespace {

struct Options {
  std::string scenario;
  std::string builtin;
  std::string family;
  std::string format = "table";
  std::string out;
};

void add_common(CLI::App* cmd, Options& o, bool needs_scenario) {
  if (needs_scenario) {
    auto* file = cmd->add_option("--scenario", o.scenario, "scenario document (YAML)");
    auto* name = cmd->add_option("--builtin", o.builtin, "builtin scenario name");
    file->excludes(name);
    name->excludes(file);
  }
  cmd->add_option("--family", o.family, "Levi family: arthur, all or support")
      ->check(CLI::IsMember({"arthur", "all", "support"}));
  cmd->add_option("--format", o.format, "table or machine")->check(CLI::IsMember({"table", "machine"}));
  cmd->add_option("--out", o.out, "write the report to this file");
}

Scenario load(const Options& o) {
  if (!o.scenario.empty()) return load_scenario(o.scenario);
  if (!o.builtin.empty()) return builtin(o.builtin);
  throw CLI::RequiredError("--scenario or --builtin");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of the duality operator on R-group scenarios", "stdual"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  Options o;
  struct Command {
    const char* name;
    const char* help;
    bool needs_scenario;
  };
  const std::vector<Command> commands{
      {"info", "scenario geometry: Levis, fixed spaces, regular set, strata", true},
      {"chartable", "character table of the total group and the isotypic sublist", true},
      {"dual", "matrix of the duality operator", true},
      {"steinberg", "Steinberg class function and its decomposition", true},
      {"verify", "check every duality claim on one scenario", true},
      {"scan", "verify the whole builtin library and print the claim matrix", false},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o, c.needs_scenario);
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "stdual: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string command;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) command = commands[i].name;

  try {
    const Format format = parse_format(o.format);
    const std::optional<LeviFamily> family =
        o.family.empty() ? std::nullopt : std::optional<LeviFamily>(parse_levi_family(o.family));
    std::string text;
    int status = kExitOk;
    if (command == "scan") {
      auto reports = verify_all(builtin_library(), family);
      text = render_scan(reports, family, format);
      if (!claim_matrix(reports).all_pass()) status = kExitCheckFailed;
    } else {
      const Scenario s = load(o);
      const LeviFamily f = family.value_or(s.default_family());
      if (command == "info") {
        text = render_info(s, f, format);
      } else if (command == "chartable") {
        text = render_chartable(s, format);
      } else if (command == "dual") {
        text = render_dual(s, f, format);
      } else if (command == "steinberg") {
        text = render_steinberg(s, f, format);
      } else {
        auto report = verify(s, f);
        text = render_report(s, report, format);
        if (!report.all_pass()) status = kExitCheckFailed;
      }
    }
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out);
      if (!file) {
        err << "stdual: cannot write '" << o.out << "'\n";
        return kExitUsage;
      }
      file << text;
    }
    return status;
  } catch (const CLI::RequiredError& e) {
    err << "stdual: " << command << " needs " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "stdual: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ScenarioInconsistency& e) {
    err << "stdual: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "stdual: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace stdual::cli
