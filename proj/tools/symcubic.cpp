// symcubic: command-line front end.  Every command prints one JSON report.
// Exit status: 0 ok, 1 a mathematical check failed, 2 usage error.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symcubic/report.hpp"

using namespace symcubic;

namespace {

struct Options {
  std::string field;
  int depth = kDefaultSingularDepth;
  int max_split = kDefaultMaxSplit;
  int jobs = 1;
  bool pretty = false;
  bool timing = false;
  std::uint64_t seed = 0;
  std::vector<std::string> args;
};

bool usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownName:
    case ErrorKind::UnknownCase:
    case ErrorKind::NonPrime:
    case ErrorKind::DegreeOutOfRange:
    case ErrorKind::InvalidArgument:
      return true;
    default:
      return false;
  }
}

const Field& field_of(const Options& o) {
  if (o.field.empty()) fail(ErrorKind::ParseError, "--field is required");
  return parse_field(o.field);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic surfaces over finite fields: lines, automorphisms, isomorphisms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "indent the JSON output");
  app.add_flag("--timing", o.timing, "add wall-clock timings to the report");
  app.add_option("--seed", o.seed, "reserved; has no effect on results");
  app.add_option("--jobs", o.jobs, "worker threads for automorphism search")->check(CLI::PositiveNumber);

  auto surface_cmd = [&](const std::string& name, const std::string& help, int nsurf) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("surface", o.args, "catalog name (fermat, clebsch, s_1_1, s_1_2) or a cubic form")->required()->expected(nsurf);
    c->add_option("--field", o.field, "GF(q), GF(p^k)")->required();
    c->add_option("--max-split", o.max_split, "largest splitting degree tried")->check(CLI::Range(1, 12));
    return c;
  };
  auto* field_info_cmd = app.add_subcommand("field-info", "field parameters and roots of unity");
  field_info_cmd->add_option("field", o.field)->required();
  auto* singular_cmd = surface_cmd("singular", "singular points up to residue degree D", 1);
  singular_cmd->add_option("--depth", o.depth, "D")->check(CLI::Range(1, 12));
  auto* lines_cmd = surface_cmd("lines", "the 27 lines, labelled by the marking", 1);
  auto* aut_cmd = surface_cmd("aut", "automorphism group over the base field", 1);
  auto* galois_cmd = surface_cmd("galois", "Frobenius action on the lines as a Weyl element", 1);
  auto* isom_cmd = surface_cmd("isom", "isomorphism search between two surfaces", 2);
  auto* weyl_cmd = app.add_subcommand("weyl-table", "conjugacy classes of W(E6)");
  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "all or one of: " + [] {
    std::string s;
    for (auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->required();
  verify_cmd->add_option("--max-split", o.max_split)->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Json report;
  report["toolkit_version"] = kVersion;
  int rc = 0;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto* cmd = app.get_subcommands().front();
    report["command"] = cmd->get_name();
    Json inputs = Json::object();
    if (!o.field.empty()) inputs["field"] = o.field;
    if (!o.args.empty()) inputs["surfaces"] = o.args;
    if (cmd == verify_cmd) inputs["suite"] = suite;
    report["inputs"] = inputs;
    Json bounds = Json::object();
    if (cmd == singular_cmd) bounds["depth"] = o.depth;
    if (cmd != field_info_cmd && cmd != singular_cmd && cmd != weyl_cmd) bounds["max_split"] = o.max_split;
    report["bounds"] = bounds;

    Json out;
    if (cmd == field_info_cmd) {
      out = field_info(parse_field(o.field));
    } else if (cmd == weyl_cmd) {
      out = weyl_table();
    } else if (cmd == verify_cmd) {
      auto results = run_suite(suite, {o.max_split, o.jobs});
      out = verify_report(results);
      if (o.timing)
        for (std::size_t i = 0; i < results.size(); ++i) out["suites"][i]["seconds"] = results[i].seconds;
      if (!out["passed"].get<bool>()) rc = 1;
    } else {
      const Field& f = field_of(o);
      CubicForm s = parse_cubic(f, o.args.at(0));
      if (cmd == singular_cmd) {
        out = singular_report(s, o.depth);
      } else if (cmd == lines_cmd) {
        out = lines_report(enumerate_lines(s, o.max_split));
      } else if (cmd == galois_cmd) {
        out = galois_report(enumerate_lines(s, o.max_split));
      } else if (cmd == aut_cmd) {
        out = aut_report(automorphism_group(s, o.max_split, o.jobs));
      } else if (cmd == isom_cmd) {
        CubicForm s2 = parse_cubic(f, o.args.at(1));
        auto w = isomorphism_test(s, s2, o.max_split);
        int n1 = enumerate_lines(s, o.max_split).splitting_degree();
        int n2 = enumerate_lines(s2, o.max_split).splitting_degree();
        out = isom_report(w, n1, n2);
      }
    }
    report["outputs"] = out;
  } catch (const Error& e) {
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    rc = usage_error(e.kind()) ? 2 : 1;
  }
  if (o.timing) report["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << report.dump(o.pretty ? 2 : -1) << "\n";
  return rc;
}
