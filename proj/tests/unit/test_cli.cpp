#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <initializer_list>
#include <iterator>
#include "json.hpp"
#include <sstream>
#include <string>
#include <vector>

#include "osc/cli.hpp"
#include "osc/error.hpp"

namespace {

using namespace osc;
using json = nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"osc"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SpectrumCsv) {
  const Result r = invoke({"spectrum", "--dim", "3", "--ell", "0", "--count", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,energy\n0,1.5\n1,3.5\n2,5.5\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, DegeneracyRow) {
  const Result r = invoke({"degeneracy", "--dim", "3", "--nmax", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n2,6,6,true\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.rfind("n_tilde,cartesian,spherical,ok\n", 0), 0u);
}

TEST(Cli, VerifyJson) {
  const Result r = invoke({"verify", "--dim", "2", "--ell", "1", "--nmax", "128"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["overall"], true);
  EXPECT_EQ(doc["params"]["n_max"], 128);
  EXPECT_FALSE(doc["checks"].empty());
  for (const json& c : doc["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST(Cli, VerifyAcrossParameters) {
  for (const auto& [dim, ell] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {3, 0}, {3, 2}, {5, 1}}) {
    const cli::VerifyReport report = cli::verify(make_params(dim, ell), 128, Complex(1.0, 0.0));
    for (const cli::Check& c : report.checks) EXPECT_TRUE(c.pass) << dim << ' ' << ell << ' ' << c.name << ' ' << c.value;
  }
  EXPECT_TRUE(cli::verify(make_params(3, 1), 128, Complex(0.6, -0.9)).overall());
}

TEST(Cli, Deterministic) {
  for (auto args : {std::initializer_list<const char*>{"coherent", "--dim", "3", "--k", "1.5,0.5", "--nmax", "40"},
                    std::initializer_list<const char*>{"wavefunction", "--dim", "2", "--k", "2", "--rmax", "3"},
                    std::initializer_list<const char*>{"evolve", "--dim", "3", "--frames", "3", "--rmax", "2",
                                                       "--step", "0.1"}}) {
    const Result a = invoke(args);
    const Result b = invoke(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, JsonFormat) {
  const Result r = invoke({"rep", "--dim", "3", "--nmax", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::accept(r.out));
}

TEST(Cli, ValidationExitCode) {
  for (auto args : {std::initializer_list<const char*>{"spectrum", "--dim", "0"},
                    std::initializer_list<const char*>{"coherent", "--k", "abc"},
                    std::initializer_list<const char*>{"spectrum", "--format", "xml"},
                    std::initializer_list<const char*>{"degeneracy", "--dim", "1"},
                    std::initializer_list<const char*>{"nonsense"}}) {
    const Result r = invoke(args);
    EXPECT_EQ(r.code, cli::kExitValidation) << *(args.begin() + 1);
    EXPECT_TRUE(r.out.empty());
    const json err = json::parse(r.err);
    EXPECT_EQ(err["exit_code"], 2);
  }
}

TEST(Cli, ConvergenceExitCode) {
  const Result r = invoke({"coherent", "--dim", "3", "--k", "40", "--nmax", "16"});
  EXPECT_EQ(r.code, cli::kExitConvergence);
  EXPECT_EQ(json::parse(r.err)["exit_code"], 3);
}

TEST(Cli, NMaxEnvironmentOverride) {
  ::setenv("OSC_NMAX_DEFAULT", "24", 1);
  EXPECT_EQ(cli::default_n_max(), 24);
  const Result r = invoke({"rep", "--dim", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 26);  // header + 25 rows
  ::setenv("OSC_NMAX_DEFAULT", "-3", 1);
  EXPECT_THROW(cli::default_n_max(), ValidationError);
  ::unsetenv("OSC_NMAX_DEFAULT");
  EXPECT_EQ(cli::default_n_max(), kDefaultNMax);
}

TEST(Cli, OutputFile) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "osc_cli_spectrum.csv";
  const std::string s = path.string();
  const Result r = invoke({"spectrum", "--count", "2", "--out", s.c_str()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, "n,energy\n0,1.5\n1,3.5\n");
  std::filesystem::remove(path);
}

TEST(Cli, ParseComplex) {
  EXPECT_EQ(cli::parse_complex("2"), Complex(2.0, 0.0));
  EXPECT_EQ(cli::parse_complex("0.5,-1.25"), Complex(0.5, -1.25));
  EXPECT_THROW(cli::parse_complex(""), ValidationError);
  EXPECT_THROW(cli::parse_complex("1,2,3"), ValidationError);
  EXPECT_THROW(cli::parse_complex("1x"), ValidationError);
}

}  // namespace
