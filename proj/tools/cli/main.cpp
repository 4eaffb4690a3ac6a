#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace abconv;
using namespace abconv::cli;

struct Help {
  const char* name;
  const char* text;
};

constexpr Help kHelp[] = {
    {"conjugate", "Fenchel conjugate of a sampled or polyhedral function"},
    {"envelope", "H-convex envelope of FUNC relative to GENSET"},
    {"hsupport", "H-support set of FUNC relative to GENSET"},
    {"support-fn", "support function of a polytope"},
    {"polar", "polar of a cone"},
    {"nonoblate", "nonoblateness of a cone pair, direct and diagonal forms"},
    {"genpos", "general position of cones or sublinear operators"},
    {"decompose", "polar decomposition of K1 and K2; with --point, x = k1 - k2"},
    {"sandwich", "linear T with -Q <= T <= P, or a violation point"},
    {"subdiff", "subdifferential of a polyhedral function"},
    {"cop", "support hull of an operator family"},
    {"compose", "subdifferential of a composition, DIRECT against FORMULA"},
    {"epsdiff", "epsilon-subdifferential"},
    {"dsubdiff", "infinitesimal subdifferential"},
    {"convolve", "infimal convolution on a grid or of two polyhedral functions"},
    {"chainrule", "chain rule for the infimal convolution at x,y,z"},
    {"check", "run the invariant suites"},
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

void print_table(const Outcome& out, long long ms) {
  std::size_t width = 0;
  for (const auto& row : out.table) width = std::max(width, row.first.size());
  std::cout << out.report.operation << ": " << out.report.status << "\n";
  for (const auto& [key, value] : out.table) std::cout << "  " << key << std::string(width - key.size() + 2, ' ') << value << "\n";
  std::cout << "  " << "time" << std::string(width > 4 ? width - 4 + 2 : 2, ' ') << ms << " ms\n";
}

int fail(const std::string& message) {
  std::cerr << "abconv: error: " << message << "\n";
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact abstract-convexity toolkit"};
  app.require_subcommand(1);
  Options opts;
  for (const Help& h : kHelp) {
    CLI::App* sub = app.add_subcommand(h.name, h.text);
    if (std::string(h.name) != "check") sub->add_option("inputs", opts.inputs, "problem files")->check(CLI::ExistingFile);
    sub->add_option("--csv", opts.csv, "write plot data to PATH");
    sub->add_option("--json", opts.json, "write the JSON report to PATH");
    sub->add_option("--mode", opts.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", opts.tol, "absolute tolerance in float mode");
    sub->add_option("--seed", opts.seed, "seed for randomized corpora");
    sub->add_option("--max-dim", opts.max_dim, "cap on enumeration dimension");
    const std::string name = h.name;
    if (name == "conjugate" || name == "envelope" || name == "support-fn") {
      sub->add_option("--grid", opts.grid, "integer grid LO:HI for evaluation and plot data");
    }
    if (name == "conjugate") sub->add_flag("--biconjugate", opts.biconjugate, "also compute f**");
    if (name == "decompose" || name == "subdiff" || name == "epsdiff" || name == "dsubdiff" || name == "convolve" ||
        name == "chainrule") {
      sub->add_option("--point", opts.point, "comma-separated rational coordinates");
    }
    if (name == "epsdiff") sub->add_option("--eps", opts.eps, "nonnegative rational slack");
    if (name == "cop") sub->add_option("--matrix", opts.matrix, "rows separated by ';', entries by ','");
    if (name == "check") sub->add_option("--suite", opts.suite, "all or one suite name");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = run_command(command, opts);
  } catch (const HypothesisViolation& e) {
    out.report.operation = command;
    out.report.input_digest = io::input_digest(opts.inputs);
    out.report.status = "hypothesis_violation";
    out.report.certificate = {{"message", e.what()}, {"detail", e.certificate()}};
    out.table.emplace_back("hypothesis violated", e.what());
    out.table.emplace_back("certificate", e.certificate());
    out.exit_code = kViolation;
  } catch (const CapExceeded& e) {
    return fail(std::string("dimension cap exceeded (--max-dim ") + std::to_string(opts.max_dim) + "): " + e.what());
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

  try {
    if (!opts.csv.empty()) {
      if (!out.csv) throw UsageError("--csv: '" + command + "' does not produce function-valued output");
      write_file(opts.csv, *out.csv);
    }
    if (!opts.json.empty()) write_file(opts.json, io::dump_report(out.report));
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  print_table(out, ms);
  return out.exit_code;
}
