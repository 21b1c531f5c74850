#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autobva/detection.hpp"
#include "autobva/kernels.hpp"

namespace autobva {

using kernels::Point4;

enum class Validity : std::uint8_t { vv, ve, ee };

std::string_view to_string(Validity v);
std::optional<Validity> parse_validity(std::string_view name);
Validity validity_of(const BoundaryCandidate& c);

/// One column per candidate: [strlendist WD (min-max normalized), jaccard2 WD,
/// mean jaccard2 of output1 to the group, mean jaccard2 of output2 to the group].
std::vector<Point4> features(const std::vector<const BoundaryCandidate*>& group);

/// Indices kept for clustering. Groups larger than `window` go through
/// drop-the-least-diverse/refill cycles until every column has been seen.
std::vector<std::size_t> diversity_subset(const std::vector<Point4>& columns, Rng& rng,
                                          std::size_t block = 100, std::size_t window = 1000);

struct ClusteringModel {
  std::size_t k = 0;
  std::vector<Point4> centroids;
  std::vector<std::uint32_t> assignment;
  double silhouette = 0.0;
  std::vector<double> wcss_trace;  // after every Lloyd update
  std::size_t iterations = 0;
};

/// Lloyd's algorithm from k distinct random columns. Throws std::invalid_argument
/// unless 1 <= k <= columns.size().
ClusteringModel kmeans(const std::vector<Point4>& columns, std::size_t k, Rng& rng,
                       std::size_t max_iter = 200);

double wcss(const std::vector<Point4>& columns, const std::vector<Point4>& centroids,
            const std::vector<std::uint32_t>& assignment);

/// Mean silhouette; singletons contribute 0. Throws std::invalid_argument when
/// fewer than two clusters are populated.
double silhouette(const std::vector<Point4>& columns, const std::vector<std::uint32_t>& assignment);

/// numpy-style linear-interpolation percentile, q in [0, 100].
double percentile(std::vector<double> values, double q);

/// Index of the run with the most clusters among those at or above the 95th
/// silhouette percentile; ties go to higher silhouette, then lower index.
std::size_t select_model(const std::vector<ClusteringModel>& runs);

struct SummaryConfig {
  std::size_t restarts = 100;
  std::size_t max_k = 10;
  std::size_t max_iter = 200;
  std::size_t block = 100;
  std::size_t window = 1000;
  std::size_t small_group = 3;  // groups below this size are a single cluster
};

struct Cluster {
  std::vector<std::size_t> members;  // indices into the summarized candidate list
  std::size_t representative = 0;
  std::map<std::string, std::size_t> strategy_counts;
};

struct GroupSummary {
  Validity validity = Validity::vv;
  std::size_t size = 0;
  std::vector<Cluster> clusters;
  std::optional<double> silhouette;  // absent when k-means was skipped
  std::size_t clustered = 0;         // columns that went into k-means
};

struct ClusterReport {
  std::vector<GroupSummary> groups;  // VV, VE, EE order, empty groups omitted

  std::size_t cluster_count() const;
  std::size_t cluster_count(Validity v) const;
  const GroupSummary* group(Validity v) const;
};

/// Total rendered length of (input1, input2, output1, output2).
std::size_t rendered_length(const BoundaryCandidate& c);

ClusterReport summarize(const std::vector<BoundaryCandidate>& candidates, Rng& rng,
                        const SummaryConfig& config = {});

/// Fills strategy_counts: labels[i] names the strategies that found candidate i.
void count_strategies(ClusterReport& report, const std::vector<std::vector<std::string>>& labels);

}  // namespace autobva
