// vnum: run sessions, reproduce the worked examples, cross-check the oracle.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "vnum/oracle.hpp"
#include "vnum/session.hpp"

namespace {

struct Flags {
  unsigned jobs = 1;
  std::string out_dir;
  std::string format = "csv";
  double tail_fraction = 0.5;
  std::int64_t max_oracle_degree = 24;
  std::uint64_t seed = 1;
};

vnum::ExecConfig execConfig(const Flags& f) {
  vnum::ExecConfig c;
  c.jobs = f.jobs;
  c.out_dir = f.out_dir;
  c.format = f.format == "json" ? vnum::OutputFormat::Json : vnum::OutputFormat::Csv;
  c.tail_fraction = f.tail_fraction;
  return c;
}

bool readInput(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  text.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

int runText(const std::string& name, const std::string& text, const Flags& flags) {
  const auto parsed = vnum::parseSession(text);
  if (!parsed.ok()) {
    std::cerr << name << ':' << parsed.diagnostic->format() << '\n';
    return 1;
  }
  const auto result = vnum::execute(*parsed.ast, execConfig(flags));
  std::cout << result.output;
  std::cerr << result.errors;
  return result.exit_code;
}

int runOracle(const Flags& flags, std::size_t count) {
  vnum::OracleCorpusOptions opts;
  opts.seed = flags.seed;
  opts.count = count;
  opts.max_degree = flags.max_oracle_degree;
  opts.jobs = flags.jobs;
  std::size_t mismatched = 0, skipped = 0;
  for (const auto& c : vnum::runOracleCorpus(opts)) {
    skipped += c.skipped;
    if (c.ok()) continue;
    ++mismatched;
    std::cout << "MISMATCH " << c.module << '\n';
    for (const auto& m : c.mismatches) std::cout << "  " << m << '\n';
  }
  std::cout << "oracle: " << count << " ideals, " << mismatched << " mismatched, " << skipped
            << " skipped (bound above " << flags.max_oracle_degree << ")\n";
  return mismatched == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ass, v-numbers and asymptotic surveys of monomial module families"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--jobs,-j", flags.jobs, "Worker threads")->envname("VNUM_JOBS")->check(CLI::Range(1u, 1024u));
  app.add_option("--out", flags.out_dir, "Directory for table and model artifacts");
  app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tail-fraction", flags.tail_fraction, "Fraction of each box side used as the fit window")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--max-oracle-degree", flags.max_oracle_degree, "Largest enumeration degree for the oracle")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", flags.seed, "Seed for the random corpus");

  std::vector<std::string> files;
  auto* run = app.add_subcommand("run", "Execute session files ('-' reads stdin)");
  run->add_option("files", files, "Session files")->required();

  std::string parseFile;
  auto* parse = app.add_subcommand("parse", "Parse a session and print its canonical form");
  parse->add_option("file", parseFile, "Session file")->required();

  auto* examples = app.add_subcommand("check-examples", "Run the worked-example suites");

  std::size_t count = 200;
  auto* oracle = app.add_subcommand("oracle", "Cross-check Ass and v-numbers against witness enumeration");
  oracle->add_option("--count", count, "Number of random ideals");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      int code = 0;
      for (const auto& f : files) {
        std::string text;
        if (!readInput(f, text)) {
          std::cerr << f << ": cannot read file\n";
          return 1;
        }
        code = std::max(code == 1 ? 1 : code, runText(f, text, flags));
        if (code == 1) return 1;
      }
      return code;
    }
    if (*parse) {
      std::string text;
      if (!readInput(parseFile, text)) {
        std::cerr << parseFile << ": cannot read file\n";
        return 1;
      }
      const auto parsed = vnum::parseSession(text);
      if (!parsed.ok()) {
        std::cerr << parseFile << ':' << parsed.diagnostic->format() << '\n';
        return 1;
      }
      std::cout << vnum::printSession(*parsed.ast);
      return 0;
    }
    if (*examples) return runText("check-examples", "check-examples;", flags);
    if (*oracle) return runOracle(flags, count);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
