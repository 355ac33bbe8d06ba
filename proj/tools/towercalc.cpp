#include "towercalc/cli/commands.hpp"
#include "towercalc/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

const std::map<std::string, std::string> descriptions = {
    {"homology", "homology groups of a complex document"},
    {"truncate", "Postnikov section P_n X (--n)"},
    {"cover", "connective cover C_k X and its fiber sequence (--k)"},
    {"layer", "Postnikov layer C_k P_{k+1} X (--k)"},
    {"homcx", "homology of Hom(M, N) for two documents"},
    {"uct", "universal coefficient ladder for M, N (--n), or a seeded batch"},
    {"tower", "model checks for a tower document, or the Postnikov tower of a complex"},
    {"hypercomplete", "X -> lim P_n X for a document or a seeded batch"},
    {"milnor", "Milnor sequence for a tower, a complex, or a seeded batch"},
    {"fracture", "arithmetic fracture square (--primes-j, --primes-k)"},
    {"hofib", "homotopy fiber of X -> P_k X (--k)"},
    {"section", "model checks for a cospan or tower document"},
    {"generate", "seeded random complex documents"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace towercalc;
  CLI::App app{"Exact Postnikov towers, sections and fracture squares for chain complexes"};
  app.require_subcommand(1);

  cli::Options o;
  long k = 0, n = 0;
  std::uint64_t seed = 0;
  std::vector<long> primes_j, primes_k;
  std::string format = "text", report, output;

  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::map<std::string, CLI::Option*>> opts;
  for (const auto& name : cli::subcommands()) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    auto& m = opts[name];
    sub->add_option("files", o.files, "input documents");
    m["k"] = sub->add_option("--k", k, "cut degree");
    m["n"] = sub->add_option("--n", n, "truncation degree or tower length");
    m["seed"] = sub->add_option("--seed", seed, "seed of the first instance");
    sub->add_option("--count", o.count, "number of seeded instances")->check(CLI::PositiveNumber);
    m["j"] = sub->add_option("--primes-j", primes_j, "primes in J")->expected(0, -1);
    m["kk"] = sub->add_option("--primes-k", primes_k, "primes in K")->expected(0, -1);
    sub->add_option("--report", report, "write the machine-readable report to this path");
    sub->add_option("--format", format, "stdout format")->check(CLI::IsMember({"text", "machine"}));
    if (name == "generate") m["out"] = sub->add_option("--output", output, "write the document here");
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;
  auto& m = opts[command];
  if (*m["k"]) o.k = k;
  if (*m["n"]) o.n = n;
  if (*m["seed"]) o.seed = seed;
  if (*m["j"]) o.primes_j = primes_j;
  if (*m["kk"]) o.primes_k = primes_k;
  if (m.count("out") && *m["out"]) o.output = output;

  try {
    const cli::RunReport r = cli::run(command, o);
    std::cout << (format == "machine" ? r.machine() : r.text());
    if (!report.empty()) {
      std::ofstream out(report, std::ios::binary);
      if (!out) throw ParseError(report, "cannot write report");
      out << r.machine();
    }
    return r.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
