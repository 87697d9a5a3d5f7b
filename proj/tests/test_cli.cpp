#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/report.hpp"
#include "cli/svg.hpp"
#include "modhyp/analysis.hpp"

using namespace modhyp;
using namespace modhyp::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<std::pair<u64, u64>> h2_points(i64 a, u64 n) {
  std::vector<std::pair<u64, u64>> pts;
  for (const auto& p : enumerate_points(HyperbolaSpec::make(2, 2, a, n))) pts.emplace_back(p[0], p[1]);
  return pts;
}

}  // namespace

TEST(Run, RatioCommand) {
  const auto r = invoke({"ratio", "--a", "11", "--n", "441"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("c2 = 8/7"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("sum-dominant"), std::string::npos);

  const auto csv = invoke({"--format", "csv", "ratio", "--a", "11", "--n", "441"});
  EXPECT_NE(csv.out.find("11,441,48,42,8/7,1.142857,sum-dominant"), std::string::npos) << csv.out;

  const auto neg = invoke({"ratio", "--a", "-11", "--n", "441"});
  EXPECT_EQ(neg.code, 0);
  EXPECT_NE(neg.out.find("c2 = 7/8"), std::string::npos) << neg.out << neg.err;
}

TEST(Run, CardCommand) {
  const auto r = invoke({"card", "--a", "1", "--n", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("small-power-table"), std::string::npos);

  const auto csv = invoke({"card", "--a", "1", "--n", "45", "--format", "csv"});
  const auto rows = parse_card_csv(csv.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (CardRow{1, 45, 2, 2, 3, 2, 2, Method::closed_form_odd_p, 6}));
  EXPECT_EQ(rows[1], (CardRow{1, 45, 2, 2, 5, 1, 3, Method::closed_form_odd_p, 6}));
}

TEST(Run, VerifyCommand) {
  const auto r = invoke({"verify", "--max-pp", "1024"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("0 mismatches"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"verify", "--max-pp", "64", "--max-n", "120"}).code, 0);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"ratio", "--a", "1", "--n", "9", "--bogus"}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"ratio", "--a", "1"}).code, 1);
  EXPECT_EQ(invoke({"ratio", "--a", "3", "--n", "9"}).code, 1);
  EXPECT_EQ(invoke({"--format", "xml", "ratio", "--a", "1", "--n", "9"}).code, 1);
  EXPECT_EQ(invoke({"--budget", "0", "ratio", "--a", "1", "--n", "9"}).code, 1);
  EXPECT_EQ(invoke({"solve3", "--b", "0", "--a", "1", "--p", "7", "--t", "1"}).code, 1);
  const auto budget = invoke({"--budget", "10", "enumerate", "--d", "3", "--m", "3", "--a", "1", "--n", "101"});
  EXPECT_EQ(budget.code, 2);
  EXPECT_NE(budget.err.find("phi(n)^(d-1)"), std::string::npos);
  EXPECT_TRUE(budget.out.empty());
  EXPECT_EQ(invoke({"--budget", "10", "card", "--d", "3", "--m", "3", "--a", "1", "--n", "27"}).code, 2);
  EXPECT_EQ(invoke({"primorial", "--a", "4", "--k-max", "40"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Run, EnumerateAndCoverage) {
  const auto pts = invoke({"enumerate", "--d", "2", "--m", "2", "--a", "1", "--n", "5", "--format", "csv"});
  EXPECT_EQ(pts.out, "x1,x2\n1,1\n2,3\n3,2\n4,4\n");
  const auto sum = invoke({"enumerate", "--d", "2", "--m", "2", "--a", "4", "--n", "5", "--sumset", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(sum.out), nlohmann::json({0, 1, 4}));
  const auto cov = invoke({"coverage", "--d", "3", "--m", "3", "--a", "1", "--n", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(cov.out);
  EXPECT_EQ(j["covered"], false);
  EXPECT_EQ(j["missing"], nlohmann::json({1}));
}

TEST(Run, OtherSubcommands) {
  const auto solve = invoke({"solve3", "--b", "0", "--a", "1", "--p", "11", "--t", "3", "--format", "json"});
  ASSERT_EQ(solve.code, 0) << solve.err;
  const auto j = nlohmann::json::parse(solve.out);
  const u64 x1 = j["x1"], x2 = j["x2"], x3 = j["x3"];
  EXPECT_EQ((x1 + x2 + x3) % 1331, 0u);
  EXPECT_EQ(x1 * x2 % 1331 * x3 % 1331, 1u);

  const auto prim = invoke({"primorial", "--a", "4", "--k-max", "3", "--format", "csv"});
  EXPECT_EQ(prim.code, 0);
  EXPECT_NE(prim.out.find("4,2,2,21,8/3,"), std::string::npos) << prim.out;

  const auto dens = invoke({"density", "--a", "2", "--max-n", "500", "--format", "json"});
  EXPECT_EQ(dens.code, 0);
  EXPECT_GT(nlohmann::json::parse(dens.out)["rigorous_bound"].get<double>(), 0.97);
}

TEST(Run, ScanIsDeterministicAcrossThreads) {
  std::string reference;
  for (const char* threads : {"1", "4", "16"}) {
    const auto r = invoke({"--threads", threads, "--format", "csv", "scan", "--a", "4", "--max-n", "20000"});
    ASSERT_EQ(r.code, 0);
    if (reference.empty()) reference = r.out;
    EXPECT_EQ(r.out, reference) << threads;
  }
  const auto rows = parse_dominance_csv(reference);
  EXPECT_EQ(rows.front().n, 3u);
  EXPECT_EQ(rows.back().n, 19999u);
}

TEST(Run, PlotWritesSvg) {
  const std::string path = ::testing::TempDir() + "modhyp_plot.svg";
  const auto r = invoke({"plot", "--a", "51", "--n", "1024", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(count_of(svg, "class=\"pt\""), 512u);
  std::remove(path.c_str());
}

TEST(Reports, DominanceCsvRows) {
  std::ostringstream out;
  const std::vector<DominanceReport> reports{dominance_report(11, 441), dominance_report(2, 25)};
  write_reports(out, reports, Format::csv);
  EXPECT_EQ(out.str(),
            "a,n,c2,c2_decimal,classification\n"
            "11,441,8/7,1.142857,sum-dominant\n"
            "2,25,1/1,1.000000,balanced\n");
}

TEST(Reports, EmptyStreams) {
  std::ostringstream csv, json;
  write_reports(csv, std::span<const DominanceReport>{}, Format::csv);
  EXPECT_EQ(csv.str(), "a,n,c2,c2_decimal,classification\n");
  write_reports(json, std::span<const DominanceReport>{}, Format::json);
  EXPECT_EQ(nlohmann::json::parse(json.str()), nlohmann::json::array());
}

TEST(Reports, JsonCarriesExactAndDecimal) {
  std::ostringstream out;
  const std::vector<DominanceReport> reports{dominance_report(11, 441), dominance_report(4, 9)};
  write_reports(out, reports, Format::json);
  const auto j = nlohmann::json::parse(out.str());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["c2"], "8/7");
  EXPECT_DOUBLE_EQ(j[0]["c2_decimal"].get<double>(), 1.142857);
  EXPECT_EQ(j[1]["classification"], "difference-dominant");
  EXPECT_EQ(j[0]["factors"].size(), 2u);
}

TEST(Reports, CsvRoundTrip) {
  std::ostringstream out;
  const auto reports = dominance_scan(-7, 3000, Rational(1), 1);
  write_reports(out, reports, Format::csv);
  const auto rows = parse_dominance_csv(out.str());
  ASSERT_EQ(rows.size(), reports.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].a, reports[i].a);
    EXPECT_EQ(rows[i].n, reports[i].n);
    EXPECT_EQ(rows[i].c2, reports[i].c2);
    EXPECT_EQ(rows[i].c2_decimal, to_decimal(reports[i].c2));
    EXPECT_EQ(rows[i].classification, reports[i].classification);
  }

  for (const auto& spec : {HyperbolaSpec::make(2, 1, 7, 720), HyperbolaSpec::make(3, 1, 2, 3 * 5 * 13)}) {
    std::ostringstream c;
    const auto report = card_signed_sumset(spec);
    write_reports(c, report, Format::csv);
    const auto parsed = parse_card_csv(c.str());
    ASSERT_EQ(parsed.size(), report.per_factor.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      const auto& f = report.per_factor[i];
      EXPECT_EQ(parsed[i], (CardRow{spec.a, spec.n, spec.d, spec.m, f.p, f.t, f.count, f.method, report.total}));
    }
  }
  EXPECT_THROW(parse_dominance_csv("a,n\n1,2\n"), InvalidArgument);
  EXPECT_THROW(parse_dominance_csv("a,n,c2,c2_decimal,classification\n1,x,1/1,1.0,balanced\n"), InvalidArgument);
}

TEST(Svg, SmallExample) {
  const auto pts = h2_points(1, 5);
  ASSERT_EQ(pts, (std::vector<std::pair<u64, u64>>{{1, 1}, {2, 3}, {3, 2}, {4, 4}}));
  const auto svg = render_svg(pts, 5);
  EXPECT_NE(svg.find("viewBox=\"0 0 5 5\""), std::string::npos);
  EXPECT_EQ(count_of(svg, "class=\"pt\""), 4u);
  // (1,1) sits at the bottom-left, (4,4) at the top-right.
  EXPECT_NE(svg.find("cx=\"0.5\" cy=\"4.5\""), std::string::npos) << svg;
  EXPECT_NE(svg.find("cx=\"3.5\" cy=\"1.5\""), std::string::npos) << svg;
}

TEST(Svg, LargePlotPointCounts) {
  EXPECT_EQ(count_of(render_svg(h2_points(51, 1024), 1024), "<rect class=\"pt\""), 512u);
  EXPECT_EQ(count_of(render_svg(h2_points(1325, 2304), 2304), "<rect class=\"pt\""), 768u);
}

TEST(Svg, WellFormedAndSelfContained) {
  for (const auto& svg : {render_svg({}, 7), render_svg(h2_points(3, 100), 100)}) {
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_EQ(svg.find("href"), std::string::npos);
    // Every element opened is closed: count start tags against self-closing and end tags.
    const std::regex open_tag("<([a-z]+)[ >]"), self_close("/>"), end_tag("</[a-z]+>");
    const auto opens = std::distance(std::sregex_iterator(svg.begin(), svg.end(), open_tag), std::sregex_iterator());
    const auto selfs = std::distance(std::sregex_iterator(svg.begin(), svg.end(), self_close), std::sregex_iterator());
    const auto ends = std::distance(std::sregex_iterator(svg.begin(), svg.end(), end_tag), std::sregex_iterator());
    EXPECT_EQ(opens, selfs + ends);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
  }
  EXPECT_EQ(count_of(render_svg({}, 7), "class=\"pt\""), 0u);
  EXPECT_THROW(render_svg({{0, 1}}, 7), InvalidArgument);
  EXPECT_THROW(render_svg({{1, 7}}, 7), InvalidArgument);
}
