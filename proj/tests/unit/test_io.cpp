#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace graphon_cpd;
using testing_support::random_sequence;

namespace {

AdjacencySequence parse(const std::string& text, EdgeListShape shape = {}) {
  std::istringstream in(text);
  return parse_edge_csv(in, shape);
}

std::string data_error_message(const std::string& text, EdgeListShape shape = {}) {
  try {
    parse(text, shape);
  } catch (const data_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(EdgeCsv, HeaderOnlyWithDeclaredShape) {
  const auto seq = parse("t,i,j\n", {3, 2});
  EXPECT_EQ(seq.n(), 3u);
  EXPECT_EQ(seq.T(), 2u);
  for (const auto& s : seq.snapshots()) {
    for (auto v : s.matrix().data()) EXPECT_EQ(v, 0);
  }
  EXPECT_THROW(parse("t,i,j\n"), data_error);
}

TEST(EdgeCsv, DuplicatesAndSwapsCollapse) {
  const auto seq = parse("t,i,j\n0,0,1\n0,1,0\n");
  EXPECT_EQ(seq.n(), 2u);
  EXPECT_EQ(seq.T(), 1u);
  std::ostringstream out;
  write_edge_csv(out, seq);
  EXPECT_EQ(out.str(), "t,i,j\n0,0,1\n");
}

TEST(EdgeCsv, InfersShapeAndHonoursDeclared) {
  const auto seq = parse("t,i,j\n2,4,1\n");
  EXPECT_EQ(seq.n(), 5u);
  EXPECT_EQ(seq.T(), 3u);
  const auto wide = parse("t,i,j\n2,4,1\n", {8, 6});
  EXPECT_EQ(wide.n(), 8u);
  EXPECT_EQ(wide.T(), 6u);
  EXPECT_EQ(wide.snapshot(3)(1, 4), 1);
}

TEST(EdgeCsv, BomAndCrlf) {
  const auto seq = parse("\xEF\xBB\xBFt,i,j\r\n0,1,2\r\n\r\n");
  EXPECT_EQ(seq.snapshot(1)(2, 1), 1);
}

TEST(EdgeCsv, ErrorsCarryLineNumbers) {
  EXPECT_NE(data_error_message("t,i,j\n0,1,2\n0,1\n").find("line 3"), std::string::npos);
  EXPECT_NE(data_error_message("t,i,j\n0,1,x\n").find("line 2"), std::string::npos);
  EXPECT_NE(data_error_message("t,i,j\n0,1,-2\n").find("line 2"), std::string::npos);
  EXPECT_NE(data_error_message("t,i,j\n0,1,9\n", {5, 1}).find("line 2"), std::string::npos);
  EXPECT_NE(data_error_message("t,i,j\n4,1,2\n", {5, 3}).find("line 2"), std::string::npos);
  EXPECT_NE(data_error_message("a,b,c\n").find("line 1"), std::string::npos);
}

TEST(EdgeCsv, RoundTripIsCanonical) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto seq = random_sequence(3 + seed % 7, 1 + seed % 5, seed, 0.3);
    std::ostringstream first;
    write_edge_csv(first, seq);
    const auto back = parse(first.str(), {seq.n(), seq.T()});
    EXPECT_EQ(back, seq);
    std::ostringstream second;
    write_edge_csv(second, back);
    EXPECT_EQ(first.str(), second.str());
  }
}

TEST(FormatReal, SeventeenDigits) {
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(3.0), "3");
  EXPECT_EQ(std::stod(format_real(0.01976457223285426)), 0.01976457223285426);
}

TEST(MatrixCsv, RoundTrip) {
  const auto seq = random_sequence(12, 3, 5);
  const LinkProbMatrix p = mnbs_estimate(seq, 1, 3);
  std::stringstream io;
  write_matrix_csv(io, p);
  EXPECT_EQ(parse_matrix_csv(io), p.matrix());
}

TEST(ReportJson, RoundTripAndShape) {
  const auto [seq, truth] = scenario_sequence({"DSBM-I", 40, 36, 2});
  const ChangePointReport r = detect(seq, default_params(36, 40));
  std::stringstream io;
  write_report_json(io, r);
  const auto j = nlohmann::json::parse(io.str());
  EXPECT_EQ(j.at("scan").size(), 36u - 2 * 6 + 1);
  EXPECT_EQ(j.at("scan").front().at(0).get<std::size_t>(), 6u);
  io.seekg(0);
  const ChangePointReport back = read_report_json(io);
  EXPECT_EQ(back, r);
}

TEST(ReportJson, EmptyChangepoints) {
  const auto [seq, truth] = scenario_sequence({"DSBM-I", 30, 16, 2});
  DetectorParams p = default_params(16, 30);
  p.D0 = std::numeric_limits<double>::infinity();
  std::ostringstream out;
  write_report_json(out, detect(seq, p));
  EXPECT_NE(out.str().find("\"changepoints\": []"), std::string::npos);
}

TEST(ReportJson, MalformedInput) {
  std::istringstream in("{\"n\": 3}");
  EXPECT_THROW(read_report_json(in), data_error);
}

TEST(ScanCsv, Layout) {
  const ScanProfile s{10, 4, {0.5, 0.25, 0.0}};
  std::ostringstream out;
  write_scan_csv(out, s);
  EXPECT_EQ(out.str(), "t,D\n4,0.5\n5,0.25\n6,0\n");
}

TEST(BenchCsv, LineLayout) {
  BenchRow row{"DSBM-I", 100, 100, 1.0, 0.35, std::nullopt, 20, 20, 1};
  EXPECT_EQ(bench_csv_line(row), "DSBM-I,100,100,1,0.34999999999999998,-,20,20");
  row.mean_xi2 = 2.5;
  EXPECT_EQ(bench_csv_line(row), "DSBM-I,100,100,1,0.34999999999999998,2.5,20,20");
}

TEST(IndexList, ParsesSortedUnique) {
  EXPECT_EQ(parse_index_list("90, 48,48"), (std::vector<std::size_t>{48, 90}));
  EXPECT_TRUE(parse_index_list("").empty());
  EXPECT_THROW(parse_index_list("4,x"), parameter_error);
}
