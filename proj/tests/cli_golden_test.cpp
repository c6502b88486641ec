// Each directory under golden/ is one CLI invocation: `args` (one argument
// per line), optional `stdin`, and the expected `stdout`, `stderr` (optional)
// and `exit` code. Set HYPERNORM_UPDATE_GOLDEN=1 to rewrite the expectations.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {
  std::string slurp(fs::path const& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  void spit(fs::path const& p, std::string const& text) {
    std::ofstream(p, std::ios::binary) << text;
  }

  std::vector<std::string> lines(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream       in(text);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) {
        out.push_back(line);
      }
    }
    return out;
  }

  std::vector<fs::path> cases() {
    std::vector<fs::path> out;
    for (auto const& entry : fs::directory_iterator(HYPERNORM_GOLDEN_DIR)) {
      if (entry.is_directory()) {
        out.push_back(entry.path());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
}  // namespace

TEST(CliGolden, AllCases) {
  bool update = std::getenv("HYPERNORM_UPDATE_GOLDEN") != nullptr;
  auto all    = cases();
  ASSERT_FALSE(all.empty());
  for (auto const& dir : all) {
    SCOPED_TRACE(dir.filename().string());
    std::istringstream in(fs::exists(dir / "stdin") ? slurp(dir / "stdin") : "");
    std::ostringstream out, err;
    int code = hypernorm::cli::run(lines(slurp(dir / "args")), in, out, err);
    if (update) {
      spit(dir / "stdout", out.str());
      spit(dir / "exit", std::to_string(code) + "\n");
      if (!err.str().empty()) {
        spit(dir / "stderr", err.str());
      }
      continue;
    }
    EXPECT_EQ(out.str(), slurp(dir / "stdout"));
    EXPECT_EQ(code, std::stoi(slurp(dir / "exit")));
    if (fs::exists(dir / "stderr")) {
      EXPECT_EQ(err.str(), slurp(dir / "stderr"));
    }
  }
}

TEST(Cli, SeedFromEnvironment) {
  std::istringstream in;
  std::ostringstream a, b, err;
  std::vector<std::string> args{"check", "--instance", "D", "--law",
                                "hyper.natural", "--max-carrier", "2",
                                "--max-tags", "2", "--random-cases", "20"};
  setenv("HYPERNORM_SEED", "5", 1);
  EXPECT_EQ(hypernorm::cli::run(args, in, a, err), 0);
  unsetenv("HYPERNORM_SEED");
  args.insert(args.end(), {"--seed", "5"});
  EXPECT_EQ(hypernorm::cli::run(args, in, b, err), 0);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Cli, UsageErrorsExitTwo) {
  std::istringstream in("{}");
  std::ostringstream out, err;
  EXPECT_EQ(hypernorm::cli::run({}, in, out, err), 2);
  EXPECT_EQ(hypernorm::cli::run({"hypernorm"}, in, out, err), 2);
  EXPECT_EQ(hypernorm::cli::run({"check", "--max-tags", "0"}, in, out, err), 2);
  EXPECT_EQ(hypernorm::cli::run({"phi", "--input", "/nonexistent"}, in, out, err), 2);
  EXPECT_EQ(hypernorm::cli::run({"check", "--output", "yaml"}, in, out, err), 2);
}
