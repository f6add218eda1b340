// roothk: command-line front end for the root-lattice HK quotient checks.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "roothk/report.hpp"

namespace {

constexpr int kExitUsage = 2;

struct Options {
  std::string family;
  int rank = 0;
  std::string lattice = "root";
  std::string format = "json";
  std::string group_cap;
  int max_rank = 8;
  std::string suite = "default";
  bool timing = false;
};

roothk::GroupCap resolve_cap(const std::string& flag) {
  if (!flag.empty()) return {roothk::parse_cap(flag)};
  return roothk::GroupCap::from_env();
}

roothk::RootSystemSpec resolve_spec(const Options& o) {
  roothk::RootSystemSpec spec{roothk::parse_family(o.family), o.rank};
  spec.validate();
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root-lattice constructions of holomorphic-symplectic quotients"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timing", o.timing, "Append wall time to the report");

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}));
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--group-cap", o.group_cap,
                    "Maximum group order to enumerate (overrides ROOTHK_GROUP_CAP)");
  };

  auto* analyze = app.add_subcommand("analyze", "Verdict for one (W, L) pair");
  analyze->add_option("family", o.family, "Family letter A-G")->required();
  analyze->add_option("rank", o.rank, "Rank")->required();
  analyze->add_option("--lattice", o.lattice, "root | dual | index:k");
  add_format(analyze);
  add_cap(analyze);

  auto* lemma = app.add_subcommand("lemma-check", "Invariant dimensions across the table");
  lemma->add_option("--max-rank", o.max_rank, "Largest rank to include");
  add_format(lemma);

  auto* sub = app.add_subcommand("sublattices", "W-invariant lattices between L and L*");
  sub->add_option("family", o.family, "Family letter A-G")->required();
  sub->add_option("rank", o.rank, "Rank")->required();
  add_format(sub);

  auto* report = app.add_subcommand("report", "Run a verification suite");
  report->add_option("--suite", o.suite, "Suite name");
  add_format(report);
  add_cap(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  roothk::ReportDocument doc;
  try {
    if (*analyze) {
      doc = roothk::cmd_analyze(resolve_spec(o), roothk::LatticeSelector::parse(o.lattice),
                                resolve_cap(o.group_cap));
    } else if (*lemma) {
      doc = roothk::cmd_lemma_check(o.max_rank);
    } else if (*sub) {
      doc = roothk::cmd_sublattices(resolve_spec(o));
    } else {
      doc = roothk::cmd_report(o.suite, resolve_cap(o.group_cap));
    }
  } catch (const roothk::InvalidSpec& e) {
    std::cerr << "roothk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "roothk: error: " << e.what() << '\n';
    return 1;
  }
  if (o.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    doc.timing_ms = std::to_string(ms.count());
  }
  std::cout << (o.format == "tsv" ? roothk::render_tsv(doc) : roothk::render_json(doc));
  return doc.exit_code();
}
