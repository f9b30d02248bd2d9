#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cantorval_cli.hpp"
#include "oracles.hpp"

using namespace cantorval;

namespace {
Rational q(long p, long d = 1) { return make_rational(p, d); }

const char* kEx1 = R"({"lambda": {"prefix": [], "period": ["7/15", "5/21"]}})";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cantorval_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }
}  // namespace

TEST(Json, LambdaRoundTripAndErrors) {
  const LambdaSpec spec({q(1, 4)}, {q(7, 15), q(5, 21)});
  EXPECT_EQ(json::decode_lambda(json::encode(spec)), spec);
  EXPECT_EQ(json::encode(spec).dump(), R"({"lambda":{"period":["7/15","5/21"],"prefix":["1/4"]}})");
  try {
    json::decode_lambda(json::parse(R"({"lambda": {"prefix": ["1/5", "bad"], "period": ["1/3"]}})"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("lambda.prefix[1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(json::decode_lambda(json::parse(R"({"lambda": {"period": []}})")), ParseError);
  EXPECT_THROW(json::decode_lambda(json::parse(R"({"lambda": {"period": ["1/2"]}})")), ParseError);
  EXPECT_THROW(json::decode_lambda(json::parse(R"({"series": {}})")), ParseError);
  EXPECT_THROW(json::parse("{not json"), ParseError);
}

TEST(Json, UnionAndSeriesAndK) {
  const IntervalUnion u{ClosedInterval(q(-1), q(-1, 2)), ClosedInterval(q(1, 2), q(1))};
  EXPECT_EQ(json::encode(u).dump(), R"([["-1","-1/2"],["1/2","1"]])");
  EXPECT_EQ(json::decode_union(json::encode(u), "u"), u);
  const SeriesSpec s({}, {q(1), q(2, 3)}, q(1, 9));
  const SeriesSpec back = json::decode_series(json::encode(s));
  EXPECT_EQ(back.block(), s.block());
  EXPECT_EQ(back.ratio(), s.ratio());
  EXPECT_EQ(json::decode_k(json::parse(R"({"k": {"prefix_bits": "0", "period_bits": "10"}})")).k_indices(2).size(), 2u);
}

TEST(Json, CertificateRoundTrip) {
  for (const auto& spec : {LambdaSpec({}, {q(7, 15), q(5, 21)}), LambdaSpec({q(1, 4)}, {q(2, 5)}),
                           LambdaSpec({}, {q(7, 15), q(1, 4)})}) {
    const auto cert = classify(spec, ClassifyOptions{5});
    const auto back = json::decode_certificate(json::encode(cert));
    EXPECT_EQ(json::encode(back).dump(), json::encode(cert).dump());
    EXPECT_TRUE(verify_certificate(back).ok());
  }
}

TEST(Cli, ClassifyExampleOne) {
  const auto r = run({"classify", "--spec", kEx1});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Cantorval");
  EXPECT_EQ(j["measure"], "8/5");
  EXPECT_EQ(j["k0"], 0);
  EXPECT_EQ(run({"classify", "--spec", kEx1}).out, r.out);
}

TEST(Cli, SpecFromFileAndOutFile) {
  const std::string spec = temp_path("spec.json");
  const std::string out = temp_path("out.json");
  write_file(spec, kEx1);
  const auto r = run({"measure", "--spec", spec, "--format", "text", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, "8/5\n");
}

TEST(Cli, VerifyFreshAndTampered) {
  const std::string cert_path = temp_path("cert.json");
  const auto c = run({"classify", "--spec", kEx1, "--depth", "6", "--out", cert_path});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(run({"verify", "--spec", cert_path}).code, 0);

  std::ifstream in(cert_path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  const auto pos = text.find("\"8/5\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 5, "\"7/5\"");
  const std::string tampered = temp_path("tampered.json");
  write_file(tampered, text);
  const auto r = run({"verify", "--spec", tampered, "--format", "text"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("residual -1/5"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"classify", "--spec", "{bad json"}).code, 2);
  EXPECT_EQ(run({"classify", "--spec", R"({"lambda": {"period": ["1/2"]}})"}).code, 2);
  EXPECT_EQ(run({"classify", "--spec", "/nonexistent/spec.json"}).code, 2);
  EXPECT_EQ(run({"classify", "--spec", kEx1, "--format", "svg"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({"approx", "--spec", kEx1, "--depth", "-1"}).code, 2);

  EXPECT_EQ(run({"gaps", "--spec", R"({"lambda": {"period": ["2/5"]}})"}).code, 3);
  EXPECT_EQ(run({"gaps", "--spec", kEx1, "--k0", "1"}).code, 3);
  EXPECT_EQ(run({"series", "--spec", R"({"k": {"period_bits": "10"}})"}).code, 3);
  EXPECT_EQ(run({"measure", "--spec", R"({"lambda": {"period": ["7/15", "1/4"]}})", "--depth", "3"}).code, 3);

  EXPECT_EQ(run({"approx", "--spec", kEx1, "--depth", "12", "--budget", "1000"}).code, 4);
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("CANTORVAL_BUDGET", "100", 1);
  const int limited = run({"approx", "--spec", kEx1, "--depth", "6"}).code;
  const int override_flag = run({"approx", "--spec", kEx1, "--depth", "6", "--budget", "1000"}).code;
  ::setenv("CANTORVAL_BUDGET", "zero", 1);
  const int invalid = run({"approx", "--spec", kEx1, "--depth", "2"}).code;
  ::unsetenv("CANTORVAL_BUDGET");
  EXPECT_EQ(limited, 4);
  EXPECT_EQ(override_flag, 0);
  EXPECT_EQ(invalid, 2);
}

TEST(Cli, ApproxAndGaps) {
  const auto a = run({"approx", "--spec", kEx1, "--depth", "2"});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["measure"], "26/15");
  EXPECT_EQ(j["parts"].size(), 3u);
  const auto c = json::parse(run({"approx", "--spec", kEx1, "--depth", "2", "--cantor"}).out);
  EXPECT_EQ(c["parts"].size(), 4u);

  const auto g = run({"gaps", "--spec", kEx1, "--depth", "3"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto gj = json::parse(g.out);
  EXPECT_EQ(gj["1"].size(), 2u);
  EXPECT_EQ(gj["2"].size(), 6u);
  EXPECT_EQ(gj["3"].size(), 18u);
  EXPECT_EQ(gj["1"][0]["code"], "0");
  EXPECT_EQ(gj["1"][0]["hi"], "-29/45");
  EXPECT_EQ(run({"gaps", "--spec", kEx1, "--depth", "2", "--root", "12", "--format", "text"}).code, 0);
}

TEST(Cli, SeriesConversions) {
  const auto from_lambda = json::parse(run({"series", "--spec", kEx1}).out);
  EXPECT_EQ(from_lambda["series"]["block"][0], "8/15");
  EXPECT_EQ(from_lambda["sum"], "1");
  const auto from_series =
      json::parse(run({"series", "--spec", R"({"series": {"prefix": [], "block": ["1", "2/3"], "ratio": "1/9"}})"}).out);
  EXPECT_EQ(from_series["kakeya"], "CantorSet");
  EXPECT_EQ(from_series["lambda"]["period"], json::Json({"7/15", "5/21"}));
  const auto from_k = json::parse(run({"series", "--spec", R"({"k": {"prefix_bits": "", "period_bits": "011"}})"}).out);
  EXPECT_EQ(from_k["certificate"]["measure"], "26/17");
  EXPECT_EQ(from_k["e_measure_diff"], "3");
  EXPECT_EQ(from_k["multigeometric"]["measure"], "26/17");
}

TEST(Cli, RenderSvgAndText) {
  const auto svg = run({"render", "--spec", kEx1, "--depth", "4"});
  ASSERT_EQ(svg.code, 0) << svg.err;
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  std::size_t rows = 0;
  for (std::size_t p = svg.out.find("data-depth"); p != std::string::npos; p = svg.out.find("data-depth", p + 1)) ++rows;
  EXPECT_EQ(rows, 5u);
  EXPECT_NE(svg.out.find("#d62728"), std::string::npos);
  const auto text = run({"render", "--spec", kEx1, "--depth", "2", "--format", "text", "--columns", "30"});
  ASSERT_EQ(text.code, 0) << text.err;
  EXPECT_EQ(std::count(text.out.begin(), text.out.end(), '\n'), 3);
  EXPECT_NE(text.out.find('!'), std::string::npos);
}

TEST(Cli, ExamplesTable) {
  const auto r = run({"examples"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(7/15, 5/21)"), std::string::npos);
  EXPECT_NE(r.out.find("(8/21, 11/24, 7/33)"), std::string::npos);
  EXPECT_NE(r.out.find("(25/51, 23/75, 17/69)"), std::string::npos);
  const auto j = json::parse(run({"examples", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["measure"], "8/5");
  EXPECT_EQ(j[1]["measure"], "13/7");
  EXPECT_EQ(j[2]["measure"], "26/17");
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
}
