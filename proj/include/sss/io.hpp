#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sss/clustering.hpp"
#include "sss/matrix.hpp"

namespace sss {

/// CSV with one row per data point; an optional header row is auto-detected
/// (any non-numeric field in the first row). Returns the column-major d x n
/// matrix of points. Throws Io, Parse (with line:col), RaggedRows, NonFinite.
Matrix load_data_csv(const std::string& path);

/// One row per point, 17 significant digits so a round-trip is bit-exact.
void save_data_csv(const std::string& path, const Matrix& data);

struct LabelRemap {
  std::vector<long long> original_ids;  // sorted; original_ids[i] was mapped to i
};

struct LoadedLabels {
  Clustering clustering;
  std::optional<LabelRemap> remap;  // engaged when ids were not contiguous 0-based
};

/// One integer label per line. Non-contiguous or non-zero-based ids are
/// remapped (ascending id order) and the map is reported back.
LoadedLabels load_labels(const std::string& path);

void save_labels(const std::string& path, const Clustering& c);

/// "%.17g" formatting shared by every writer.
std::string format_double(double v);

}  // namespace sss
