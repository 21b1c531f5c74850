#include "autobva/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

namespace autobva {

namespace {

using ojson = nlohmann::ordered_json;

// Markdown cells cannot hold raw pipes or newlines.
std::string cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string report_markdown(const ClusterReport& report,
                            const std::vector<BoundaryCandidate>& candidates,
                            const std::vector<std::string>& strategies) {
  std::ostringstream out;
  out << "# Boundary candidate summary\n\n";
  out << "Candidates: " << candidates.size() << ", clusters: " << report.cluster_count() << "\n\n";
  for (const auto& g : report.groups) {
    out << "- " << to_string(g.validity) << ": " << g.size << " candidates, " << g.clusters.size()
        << " clusters";
    if (g.silhouette) out << ", silhouette " << fixed3(*g.silhouette);
    out << "\n";
  }
  out << "\n| ID | validity | input1 | output1 | input2 | output2 | size |";
  for (const auto& s : strategies) out << ' ' << cell(s) << " |";
  out << "\n|---|---|---|---|---|---|---|";
  for (std::size_t i = 0; i < strategies.size(); ++i) out << "---|";
  out << "\n";

  std::size_t id = 1;
  for (const auto& g : report.groups) {
    for (const auto& c : g.clusters) {
      const auto& rep = candidates[c.representative];
      out << "| " << id++ << " | " << to_string(g.validity) << " | " << cell(render_tuple(rep.i1))
          << " | " << cell(rep.o1.text) << " | " << cell(render_tuple(rep.i2)) << " | "
          << cell(rep.o2.text) << " | " << c.members.size() << " |";
      for (const auto& s : strategies) {
        const auto it = c.strategy_counts.find(s);
        out << ' ' << (it == c.strategy_counts.end() ? 0 : it->second) << " |";
      }
      out << "\n";
    }
  }
  return out.str();
}

ojson report_json(const ClusterReport& report, const std::vector<BoundaryCandidate>& candidates,
                  const std::vector<std::string>& strategies) {
  ojson j;
  j["candidates"] = candidates.size();
  j["strategies"] = strategies;
  ojson groups = ojson::array();
  std::size_t id = 1;
  for (const auto& g : report.groups) {
    ojson gj;
    gj["validity"] = std::string(to_string(g.validity));
    gj["size"] = g.size;
    gj["clustered"] = g.clustered;
    gj["silhouette"] = g.silhouette ? ojson(*g.silhouette) : ojson(nullptr);
    ojson clusters = ojson::array();
    for (const auto& c : g.clusters) {
      ojson cj;
      cj["id"] = id++;
      cj["size"] = c.members.size();
      cj["representative"] = candidate_to_json(candidates[c.representative]);
      ojson counts = ojson::object();
      for (const auto& s : strategies) {
        const auto it = c.strategy_counts.find(s);
        counts[s] = it == c.strategy_counts.end() ? 0 : it->second;
      }
      cj["strategy_counts"] = std::move(counts);
      ojson members = ojson::array();
      for (auto m : c.members) members.push_back(candidates[m].key());
      cj["members"] = std::move(members);
      clusters.push_back(std::move(cj));
    }
    gj["clusters"] = std::move(clusters);
    groups.push_back(std::move(gj));
  }
  j["groups"] = std::move(groups);
  return j;
}

std::vector<std::size_t> cluster_ids(const ClusterReport& report, std::size_t candidate_count) {
  std::vector<std::size_t> ids(candidate_count, 0);
  std::size_t id = 1;
  for (const auto& g : report.groups) {
    for (const auto& c : g.clusters) {
      for (auto m : c.members) ids[m] = id;
      ++id;
    }
  }
  return ids;
}

std::vector<RankedRow> rank_candidates(const std::vector<BoundaryCandidate>& candidates,
                                       const OutputDistance& distance,
                                       std::optional<std::size_t> top,
                                       const std::vector<std::size_t>* clusters) {
  std::vector<RankedRow> rows;
  rows.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    RankedRow row{i, pdq(c.i1, c.o1, c.i2, c.o2, distance), std::nullopt};
    if (clusters != nullptr) row.cluster = (*clusters)[i];
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [&](const RankedRow& a, const RankedRow& b) {
    if (a.score != b.score) return a.score > b.score;
    const auto& ca = candidates[a.index];
    const auto& cb = candidates[b.index];
    if (tuple_less(ca.i1, cb.i1)) return true;
    if (tuple_less(cb.i1, ca.i1)) return false;
    return tuple_less(ca.i2, cb.i2);
  });
  if (!top) return rows;
  if (clusters == nullptr) {
    if (rows.size() > *top) rows.resize(*top);
    return rows;
  }
  std::map<std::size_t, std::size_t> taken;
  std::vector<RankedRow> kept;
  for (auto& r : rows) {
    if (taken[*r.cluster]++ < *top) kept.push_back(std::move(r));
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const RankedRow& a, const RankedRow& b) { return *a.cluster < *b.cluster; });
  return kept;
}

void write_ranked_csv(std::ostream& out, const std::vector<BoundaryCandidate>& candidates,
                      const std::vector<RankedRow>& rows) {
  const bool per_cluster = !rows.empty() && rows.front().cluster.has_value();
  std::vector<std::string> header = {"rank",     "input1",    "input2",   "output1", "output2",
                                     "validity", "score_num", "score_den", "score"};
  if (per_cluster) header.emplace_back("cluster");
  write_csv_record(out, header);
  std::size_t rank = 1;
  for (const auto& r : rows) {
    const auto& c = candidates[r.index];
    char score[32];
    std::snprintf(score, sizeof score, "%.6g", r.score.to_double());
    std::vector<std::string> fields = {std::to_string(rank++),
                                       render_tuple(c.i1),
                                       render_tuple(c.i2),
                                       c.o1.text,
                                       c.o2.text,
                                       std::string(to_string(validity_of(c))),
                                       r.score.numerator().str(),
                                       r.score.denominator().str(),
                                       score};
    if (per_cluster) fields.push_back(std::to_string(*r.cluster));
    write_csv_record(out, fields);
  }
}

}  // namespace autobva
