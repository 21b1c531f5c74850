#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "autobva/io.hpp"
#include "autobva/summarization.hpp"

namespace autobva {

/// Markdown table with one row per cluster: ID, validity, input1, output1,
/// input2, output2, cluster size, then one count column per strategy.
std::string report_markdown(const ClusterReport& report,
                            const std::vector<BoundaryCandidate>& candidates,
                            const std::vector<std::string>& strategies);

nlohmann::ordered_json report_json(const ClusterReport& report,
                                   const std::vector<BoundaryCandidate>& candidates,
                                   const std::vector<std::string>& strategies);

struct RankedRow {
  std::size_t index = 0;  // into the ranked candidate list
  Boundariness score;
  std::optional<std::size_t> cluster;  // global cluster id when ranking per cluster
};

/// Candidates by PDQ under `distance`, descending; ties by input1 then input2
/// ascending. `top` limits rows overall, or per cluster when `clusters` is given
/// (clusters[i] is the cluster id of candidate i).
std::vector<RankedRow> rank_candidates(const std::vector<BoundaryCandidate>& candidates,
                                       const OutputDistance& distance,
                                       std::optional<std::size_t> top,
                                       const std::vector<std::size_t>* clusters = nullptr);

/// Global cluster id per candidate, numbered in report order from 1.
std::vector<std::size_t> cluster_ids(const ClusterReport& report, std::size_t candidate_count);

void write_ranked_csv(std::ostream& out, const std::vector<BoundaryCandidate>& candidates,
                      const std::vector<RankedRow>& rows);

}  // namespace autobva
