#include "sss/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>

namespace sss {
namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool parse_field(const std::string& field, double& out) {
  const char* s = field.c_str();
  char* end = nullptr;
  out = std::strtod(s, &end);
  if (end == s) return false;
  while (*end == ' ' || *end == '\t') ++end;
  return *end == '\0';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Matrix load_data_csv(const std::string& path) {
  const auto lines = read_lines(path);
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  bool saw_data = false;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (is_blank(lines[ln])) continue;
    const auto fields = split_csv(lines[ln]);
    std::vector<double> row(fields.size());
    bool numeric = true;
    std::size_t bad_col = 0;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (!parse_field(fields[c], row[c])) {
        numeric = false;
        bad_col = c;
        break;
      }
    }
    if (!numeric) {
      if (!saw_data && rows.empty()) continue;  // header row
      throw Error(ErrorCode::Parse, path + ":" + std::to_string(ln + 1) + ": column " +
                                        std::to_string(bad_col + 1) + " is not a number");
    }
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!std::isfinite(row[c]))
        throw Error(ErrorCode::Parse, path + ":" + std::to_string(ln + 1) + ": column " +
                                          std::to_string(c + 1) + " is not finite");
    if (saw_data && row.size() != width)
      throw Error(ErrorCode::RaggedRows, path + ":" + std::to_string(ln + 1) + ": row has " +
                                             std::to_string(row.size()) + " columns, expected " +
                                             std::to_string(width));
    width = row.size();
    saw_data = true;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::Parse, path + ": no data rows");
  // rows are points; store column-major with one point per column
  Matrix m(width, rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    double* col = m.col(j);
    for (std::size_t i = 0; i < width; ++i) col[i] = rows[j][i];
  }
  return m;
}

void save_data_csv(const std::string& path, const Matrix& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  for (std::size_t j = 0; j < data.cols(); ++j) {
    const double* col = data.col(j);
    for (std::size_t i = 0; i < data.rows(); ++i) {
      if (i) out << ',';
      out << format_double(col[i]);
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

LoadedLabels load_labels(const std::string& path) {
  const auto lines = read_lines(path);
  std::vector<long long> raw;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (is_blank(lines[ln])) continue;
    const char* s = lines[ln].c_str();
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end == s) throw Error(ErrorCode::Parse, path + ":" + std::to_string(ln + 1) + ": not an integer");
    while (*end == ' ' || *end == '\t') ++end;
    if (*end != '\0')
      throw Error(ErrorCode::Parse, path + ":" + std::to_string(ln + 1) + ": trailing junk");
    raw.push_back(v);
  }
  if (raw.empty()) throw Error(ErrorCode::Parse, path + ": no labels");

  std::vector<long long> ids = raw;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  bool contiguous = ids.front() == 0 && ids.back() == static_cast<long long>(ids.size()) - 1;

  LoadedLabels out;
  out.clustering.k = static_cast<int>(ids.size());
  out.clustering.labels.resize(raw.size());
  if (contiguous) {
    for (std::size_t i = 0; i < raw.size(); ++i)
      out.clustering.labels[i] = static_cast<int>(raw[i]);
  } else {
    std::map<long long, int> remap;
    for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < raw.size(); ++i) out.clustering.labels[i] = remap[raw[i]];
    out.remap = LabelRemap{std::move(ids)};
  }
  return out;
}

void save_labels(const std::string& path, const Clustering& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  for (int l : c.labels) out << l << '\n';
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

}  // namespace sss
