#pragma once

// File formats.
//
//   edge CSV    header `t,i,j`, one undirected edge occurrence per row,
//               0-based snapshot index and node ids.
//   matrix CSV  n rows of n comma-separated reals.
//   report JSON change-point report (see write_report_json).
//   bench CSV   `scenario,T,n,Jhat,xi1,xi2,reps,excluded`.
//
// Change-points and scan positions are written as tau: the number of
// snapshots before the change. Read 0-based, tau is also the index of the
// first snapshot after the change. Reals use 17 significant digits.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "graphon_cpd/cpd.hpp"
#include "graphon_cpd/error.hpp"
#include "graphon_cpd/eval.hpp"
#include "graphon_cpd/netcore.hpp"

namespace graphon_cpd {

/// Locale-independent text for `v` with 17 significant digits.
inline std::string format_real(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

template <class Seq>
std::string join_ints(const Seq& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace detail

/// Declared sizes for edge-list parsing; missing values are inferred.
struct EdgeListShape {
  std::optional<std::size_t> n;
  std::optional<std::size_t> T;
};

/// Parses an edge CSV into dense snapshots. Rows with i > j are swapped and
/// duplicates collapse.
inline AdjacencySequence parse_edge_csv(std::istream& in, EdgeListShape shape = {}) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<std::array<std::uint64_t, 3>> rows;
  std::uint64_t max_t = 0;
  std::uint64_t max_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (!header_seen && line_no == 1 && view.size() >= 3 &&
        static_cast<unsigned char>(view[0]) == 0xEF) {
      view.remove_prefix(3);  // UTF-8 BOM
    }
    if (view.empty()) continue;
    const auto fields = detail::split_commas(view);
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "t" || fields[1] != "i" || fields[2] != "j") {
        throw data_error("line " + std::to_string(line_no) + ": expected header 't,i,j'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      throw data_error("line " + std::to_string(line_no) + ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    }
    std::array<std::uint64_t, 3> row{};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto v = detail::parse_uint(fields[k]);
      if (!v) {
        throw data_error("line " + std::to_string(line_no) + ": '" + std::string(fields[k]) +
                         "' is not a non-negative integer");
      }
      row[k] = *v;
    }
    if (row[1] > row[2]) std::swap(row[1], row[2]);
    if (shape.T && row[0] >= *shape.T) {
      throw data_error("line " + std::to_string(line_no) + ": t=" + std::to_string(row[0]) +
                       " outside declared T=" + std::to_string(*shape.T));
    }
    if (shape.n && row[2] >= *shape.n) {
      throw data_error("line " + std::to_string(line_no) + ": node " + std::to_string(row[2]) +
                       " outside declared n=" + std::to_string(*shape.n));
    }
    max_t = std::max(max_t, row[0]);
    max_id = std::max(max_id, row[2]);
    rows.push_back(row);
  }
  if (!header_seen) throw data_error("missing header 't,i,j'");
  if (rows.empty() && (!shape.n || !shape.T)) {
    throw data_error("empty edge list: declare both n and T");
  }
  const std::size_t n = shape.n ? *shape.n : static_cast<std::size_t>(max_id + 1);
  const std::size_t T = shape.T ? *shape.T : static_cast<std::size_t>(max_t + 1);
  if (n == 0 || T == 0) throw data_error("n and T must be positive");

  std::vector<SquareMatrix<std::uint8_t>> dense(T, SquareMatrix<std::uint8_t>(n, 0));
  for (const auto& [t, i, j] : rows) dense[t](i, j) = 1;
  std::vector<AdjacencySnapshot> snaps;
  snaps.reserve(T);
  for (auto& m : dense) snaps.push_back(AdjacencySnapshot::from_upper(std::move(m)));
  return AdjacencySequence(std::move(snaps));
}

inline AdjacencySequence read_edge_csv(const std::string& path, EdgeListShape shape = {}) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path + "'");
  return parse_edge_csv(in, shape);
}

/// Canonical edge CSV: rows sorted by (t, i, j) with i <= j.
inline void write_edge_csv(std::ostream& out, const AdjacencySequence& seq) {
  out << "t,i,j\n";
  for (std::size_t t = 1; t <= seq.T(); ++t) {
    const auto& a = seq.snapshot(t);
    for (std::size_t i = 0; i < seq.n(); ++i) {
      for (std::size_t j = i; j < seq.n(); ++j) {
        if (a(i, j) != 0) out << (t - 1) << ',' << i << ',' << j << '\n';
      }
    }
  }
}

template <DenseMatrixLike M>
void write_matrix_csv(std::ostream& out, const M& m) {
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j > 0) out << ',';
      out << format_real(static_cast<double>(m(i, j)));
    }
    out << '\n';
  }
}

/// Reads a matrix CSV back (used for round-trip checks and tooling).
inline SquareMatrix<double> parse_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = detail::trim(line);
    if (view.empty()) continue;
    std::vector<double> row;
    for (auto field : detail::split_commas(view)) {
      double v = 0.0;
      const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
      if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw data_error("line " + std::to_string(line_no) + ": bad real '" + std::string(field) +
                         "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  SquareMatrix<double> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw data_error("matrix CSV is not square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

/// Scan profile as CSV with header `t,D`.
inline void write_scan_csv(std::ostream& out, const ScanProfile& scan) {
  out << "t,D\n";
  for (std::size_t t = scan.first(); t <= scan.last(); ++t) {
    out << t << ',' << format_real(scan.at(t)) << '\n';
  }
}

/// Report JSON: n, T, h, B0, D0, delta0, threshold, scan ([t, D] pairs),
/// local_max and changepoints.
inline void write_report_json(std::ostream& out, const ChangePointReport& r) {
  out << "{\n";
  out << "  \"n\": " << r.n << ",\n";
  out << "  \"T\": " << r.T() << ",\n";
  out << "  \"h\": " << r.params.h << ",\n";
  out << "  \"B0\": " << format_real(r.params.B0) << ",\n";
  out << "  \"D0\": " << format_real(r.params.D0) << ",\n";
  out << "  \"delta0\": " << format_real(r.params.delta0) << ",\n";
  out << "  \"threshold\": " << format_real(r.threshold) << ",\n";
  out << "  \"scan\": [";
  for (std::size_t t = r.scan.first(); t <= r.scan.last() && !r.scan.values.empty(); ++t) {
    out << (t == r.scan.first() ? "" : ", ") << '[' << t << ", " << format_real(r.scan.at(t))
        << ']';
  }
  out << "],\n";
  out << "  \"local_max\": [" << detail::join_ints(r.local_max) << "],\n";
  out << "  \"changepoints\": [" << detail::join_ints(r.changepoints) << "]\n";
  out << "}\n";
}

inline void write_report_json(const std::string& path, const ChangePointReport& r) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write '" + path + "'");
  write_report_json(out, r);
  if (!out) throw data_error("write failed for '" + path + "'");
}

/// Parses a report written by write_report_json.
inline ChangePointReport read_report_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    ChangePointReport r;
    r.n = j.at("n").get<std::size_t>();
    r.params.h = j.at("h").get<std::size_t>();
    r.params.B0 = j.at("B0").get<double>();
    r.params.D0 = j.at("D0").get<double>();
    r.params.delta0 = j.at("delta0").get<double>();
    r.threshold = j.at("threshold").get<double>();
    r.scan.T = j.at("T").get<std::size_t>();
    r.scan.h = r.params.h;
    for (const auto& entry : j.at("scan")) r.scan.values.push_back(entry.at(1).get<double>());
    r.local_max = j.at("local_max").get<std::vector<std::size_t>>();
    r.changepoints = j.at("changepoints").get<std::vector<std::size_t>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("malformed report JSON: ") + e.what());
  }
}

/// {"xi1": ..., "xi2": ...}; undefined values are null.
inline std::string boysen_json(const BoysenResult& b) {
  auto field = [](const std::optional<double>& v) { return v ? format_real(*v) : "null"; };
  return "{\"xi1\":" + field(b.xi1) + ",\"xi2\":" + field(b.xi2) + "}";
}

inline std::string truth_json(const ScenarioSpec& spec, const GroundTruth& truth) {
  return "{\"scenario\":\"" + spec.id + "\",\"n\":" + std::to_string(spec.n) +
         ",\"T\":" + std::to_string(spec.T) + ",\"seed\":" + std::to_string(spec.seed) +
         ",\"changepoints\":[" + detail::join_ints(truth.changepoints) + "]}";
}

inline constexpr std::string_view bench_csv_header = "scenario,T,n,Jhat,xi1,xi2,reps,excluded";

/// One CSV line (no newline). An undefined xi2 mean is written as `-`.
inline std::string bench_csv_line(const BenchRow& row) {
  std::ostringstream out;
  out << row.scenario << ',' << row.T << ',' << row.n << ',' << format_real(row.mean_J) << ','
      << format_real(row.mean_xi1) << ',' << (row.mean_xi2 ? format_real(*row.mean_xi2) : "-")
      << ',' << row.reps << ',' << row.excluded;
  return out.str();
}

/// Comma-separated non-negative integers, e.g. "48,90". Empty text gives {}.
inline std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  text = detail::trim(text);
  if (text.empty()) return out;
  for (auto field : detail::split_commas(text)) {
    const auto v = detail::parse_uint(field);
    if (!v) throw parameter_error("'" + std::string(field) + "' is not a non-negative integer");
    out.push_back(static_cast<std::size_t>(*v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace graphon_cpd
