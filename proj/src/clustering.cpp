#include "sss/clustering.hpp"

#include <string>

#include "sss/config.hpp"

namespace sss {

void validate_clustering(const Clustering& c, bool require_nonempty, const char* who) {
  if (c.k < 1) throw Error(ErrorCode::SpecInvalid, std::string(who) + ": cluster count must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(c.k), false);
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    const int l = c.labels[i];
    if (l < 0 || l >= c.k)
      throw Error(ErrorCode::SpecInvalid, std::string(who) + ": label " + std::to_string(l) +
                                              " at point " + std::to_string(i) + " outside [0, " +
                                              std::to_string(c.k) + ")");
    seen[static_cast<std::size_t>(l)] = true;
  }
  if (require_nonempty)
    for (int l = 0; l < c.k; ++l)
      if (!seen[static_cast<std::size_t>(l)])
        throw Error(ErrorCode::SpecInvalid,
                    std::string(who) + ": cluster " + std::to_string(l) + " is empty");
}

std::vector<std::size_t> cluster_sizes(const Clustering& c) {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(c.k), 0);
  for (int l : c.labels) ++sizes[static_cast<std::size_t>(l)];
  return sizes;
}

std::vector<std::size_t> indices_of_cluster(const Clustering& c, int cluster) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.labels.size(); ++i)
    if (c.labels[i] == cluster) idx.push_back(i);
  return idx;
}

void RefineConfig::validate() const {
  if (!(energy_fraction > 0.0 && energy_fraction <= 1.0))
    throw Error(ErrorCode::SpecInvalid, "energy_fraction must be in (0, 1]");
  if (!(sample_fraction > 0.0 && sample_fraction <= 1.0))
    throw Error(ErrorCode::SpecInvalid, "sample_fraction must be in (0, 1]");
  if (!(eta > 0.0 && eta <= 1.0)) throw Error(ErrorCode::SpecInvalid, "eta must be in (0, 1]");
  if (!(p_norm >= 1.0)) throw Error(ErrorCode::SpecInvalid, "p_norm must be >= 1");
  if (max_iter < 1) throw Error(ErrorCode::SpecInvalid, "max_iter must be >= 1");
  if (!(convergence_tol >= 0.0))
    throw Error(ErrorCode::SpecInvalid, "convergence_tol must be >= 0");
  if (rounds < 1) throw Error(ErrorCode::SpecInvalid, "rounds must be >= 1");
}

}  // namespace sss
