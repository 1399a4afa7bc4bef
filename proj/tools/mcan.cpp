// Command-line front end: evaluate queries, dump chases, analyze queries,
// check requirements and generate random instances.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mcan/chase.hpp"
#include "mcan/errors.hpp"
#include "mcan/format.hpp"
#include "mcan/harness.hpp"
#include "mcan/kb.hpp"
#include "mcan/query.hpp"
#include "mcan/semantics.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kUnsatisfiable = 3, kRequirementFailed = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string currentFile;

mcan::KnowledgeBase loadKb(const std::string& path) {
  currentFile = path;
  return mcan::parseKb(mcan::readFile(path));
}

mcan::Query loadQuery(const std::string& path) {
  currentFile = path;
  return mcan::parseQuery(mcan::readFile(path));
}

mcan::EvalOptions depthOption(int depth) {
  mcan::EvalOptions options;
  if (depth >= 0) options.depth = depth;
  return options;
}

std::vector<int> parseRequirementList(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item != "1" && item != "2" && item != "3" && item != "4" && item != "5") {
      throw UsageError("requirements are numbered 1 to 5, got '" + item + "'");
    }
    out.push_back(std::stoi(item));
  }
  return out;
}

std::string padded(std::size_t i, std::size_t width) {
  std::string s = std::to_string(i);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

void printAnalysis(const mcan::Query& q) {
  std::cout << "query: " << q.toString() << "\n";
  std::cout << "vars: " << mcan::toString(mcan::vars(q)) << "\n";
  std::cout << "adm: " << mcan::adm(q).toString() << "\n";
  const auto& all = mcan::branches(q);
  std::cout << "branches: " << all.size() << "\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    const mcan::Query& b = all[i];
    std::cout << "branch " << i + 1 << ": " << b.toString() << "\n";
    std::cout << "  adm: " << mcan::adm(b).toString() << "\n";
    if (mcan::isJo(b)) {
      std::cout << "  base: " << mcan::base(b).toString() << "\n";
    } else {
      std::cout << "  base: n/a (contains SELECT)\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SUJO query answering over DL-Lite_R knowledge bases"};
  app.require_subcommand(1);

  std::string kbPath;
  std::string queryPath;
  std::string semantics = "mcan";
  std::string format = "tsv";
  std::string requirements = "1,2,3,4,5";
  std::string outDir;
  bool allSemantics = false;
  int depth = -1;
  std::uint64_t seed = 42;
  std::size_t count = 10;

  std::vector<std::string> semanticsNames;
  for (auto s : mcan::kAllSemantics) semanticsNames.emplace_back(mcan::semanticsName(s));

  auto* eval = app.add_subcommand("eval", "Evaluate a query under one semantics");
  eval->add_option("--kb", kbPath, "knowledge base file")->required();
  eval->add_option("--query", queryPath, "query file")->required();
  eval->add_option("--semantics", semantics)->check(CLI::IsMember(semanticsNames));
  eval->add_option("--depth", depth, "chase depth (default: derived from KB and query)")->check(CLI::NonNegativeNumber);
  eval->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

  auto* chaseCmd = app.add_subcommand("chase", "Print the bounded chase of a knowledge base");
  chaseCmd->add_option("--kb", kbPath)->required();
  chaseCmd->add_option("--query", queryPath, "size the default depth for this query");
  chaseCmd->add_option("--depth", depth)->check(CLI::NonNegativeNumber);

  auto* analyze = app.add_subcommand("analyze", "Print vars, adm, branches and base of a query");
  analyze->add_option("--query", queryPath)->required();

  auto* check = app.add_subcommand("check", "Check requirements 1-5 on an instance");
  check->add_option("--kb", kbPath)->required();
  check->add_option("--query", queryPath)->required();
  check->add_option("--requirements", requirements, "comma-separated subset of 1,2,3,4,5");
  check->add_option("--semantics", semantics)->check(CLI::IsMember(semanticsNames));
  check->add_flag("--all-semantics", allSemantics, "check every semantics");
  check->add_option("--depth", depth)->check(CLI::NonNegativeNumber);

  auto* compare = app.add_subcommand("compare", "Evaluate all semantics and relate their answers");
  compare->add_option("--kb", kbPath)->required();
  compare->add_option("--query", queryPath)->required();
  compare->add_option("--depth", depth)->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("gen", "Write random instances (MCAN_SEED overrides --seed)");
  gen->add_option("--seed", seed);
  gen->add_option("--count", count);
  gen->add_option("--out", outDir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) {
      auto kb = loadKb(kbPath);
      auto q = loadQuery(queryPath);
      auto s = *mcan::parseSemantics(semantics);
      if (!mcan::isApplicable(s, q)) throw UsageError(semantics + " needs a union of conjunctive queries");
      auto answers = mcan::evaluate(s, q, kb, depthOption(depth));
      std::cout << (format == "json" ? mcan::toJson(answers) : mcan::toTsv(answers));
    } else if (chaseCmd->parsed()) {
      auto kb = loadKb(kbPath);
      int bound = depth;
      if (bound < 0) {
        bound = queryPath.empty() ? 2 * static_cast<int>(mcan::tboxRoleNames(kb.tbox()).size()) + 1
                                  : mcan::defaultBound(kb, loadQuery(queryPath));
      }
      std::cout << mcan::formatChase(mcan::chase(kb, bound));
    } else if (analyze->parsed()) {
      printAnalysis(loadQuery(queryPath));
    } else if (check->parsed()) {
      auto kb = loadKb(kbPath);
      auto q = loadQuery(queryPath);
      auto reqs = parseRequirementList(requirements);
      std::vector<mcan::Semantics> targets;
      if (allSemantics) {
        targets.assign(mcan::kAllSemantics.begin(), mcan::kAllSemantics.end());
      } else {
        targets.push_back(*mcan::parseSemantics(semantics));
      }
      bool anyFailed = false;
      for (auto s : targets) {
        for (int r : reqs) {
          auto report = mcan::checkRequirement(r, s, q, kb, kbPath, depthOption(depth));
          anyFailed = anyFailed || report.verdict == mcan::Verdict::Fail;
          std::cout << report.toJson() << "\n";
        }
      }
      return anyFailed ? kRequirementFailed : kOk;
    } else if (compare->parsed()) {
      auto kb = loadKb(kbPath);
      auto q = loadQuery(queryPath);
      std::cout << mcan::differential(q, kb, depthOption(depth)).toString();
    } else if (gen->parsed()) {
      if (const char* env = std::getenv("MCAN_SEED")) {
        try {
          seed = std::stoull(env);
        } catch (const std::exception&) {
          throw UsageError("MCAN_SEED must be an unsigned integer");
        }
      }
      std::filesystem::create_directories(outDir);
      mcan::InstanceGenerator generator(seed);
      for (std::size_t i = 0; i < count; ++i) {
        auto instance = generator.next();
        auto stem = std::filesystem::path(outDir) / ("instance_" + padded(i, 4));
        std::ofstream(stem.string() + ".kb") << "# " << instance.id << "\n" << mcan::serializeKb(instance.kb);
        std::ofstream(stem.string() + ".sq") << instance.query.toString() << "\n";
      }
      std::cout << "wrote " << count << " instances (seed " << seed << ") to " << outDir << "\n";
    }
  } catch (const mcan::ParseError& e) {
    std::cerr << currentFile << ":" << e.what() << "\n";
    return kParse;
  } catch (const mcan::UnsatisfiableKbError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsatisfiable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
