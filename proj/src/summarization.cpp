#include "autobva/summarization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <unordered_map>

namespace autobva {

namespace {

std::size_t pick(std::size_t n, Rng& rng) {
  return static_cast<std::size_t>(std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng));
}

void shuffle(std::vector<std::size_t>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[pick(i, rng)]);
}

// Mean jaccard2 distance from each text to all texts of the group, evaluated
// once per distinct text.
std::vector<double> uniqueness(const std::vector<std::string_view>& texts) {
  std::unordered_map<std::string_view, std::size_t> slot;
  std::vector<std::string_view> distinct;
  std::vector<std::size_t> multiplicity;
  std::vector<std::size_t> of(texts.size());
  for (std::size_t j = 0; j < texts.size(); ++j) {
    auto [it, fresh] = slot.try_emplace(texts[j], distinct.size());
    if (fresh) {
      distinct.push_back(texts[j]);
      multiplicity.push_back(0);
    }
    ++multiplicity[it->second];
    of[j] = it->second;
  }
  std::vector<std::vector<std::string_view>> grams;
  grams.reserve(distinct.size());
  for (auto t : distinct) grams.push_back(ngram_set(t, 2));

  std::vector<double> mean(distinct.size(), 0.0);
  for (std::size_t a = 0; a < distinct.size(); ++a) {
    for (std::size_t b = a + 1; b < distinct.size(); ++b) {
      const double d = jaccard_sets(grams[a], grams[b]);
      mean[a] += d * static_cast<double>(multiplicity[b]);
      mean[b] += d * static_cast<double>(multiplicity[a]);
    }
  }
  const auto n = static_cast<double>(texts.size());
  std::vector<double> out(texts.size());
  for (std::size_t j = 0; j < texts.size(); ++j) out[j] = mean[of[j]] / n;
  return out;
}

double attribute_sum(const Point4& p) { return (p.v[0] + p.v[1]) + (p.v[2] + p.v[3]); }

std::vector<Point4> pick_initial(const std::vector<Point4>& columns, std::size_t k, Rng& rng) {
  std::vector<std::size_t> order(columns.size());
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  std::vector<Point4> centroids;
  centroids.reserve(k);
  for (auto j : order) {
    if (centroids.size() == k) break;
    if (std::find(centroids.begin(), centroids.end(), columns[j]) == centroids.end()) {
      centroids.push_back(columns[j]);
    }
  }
  // Fewer distinct columns than k: fill with repeats; empty clusters get reseeded.
  for (std::size_t i = 0; centroids.size() < k; ++i) centroids.push_back(columns[order[i]]);
  return centroids;
}

}  // namespace

std::string_view to_string(Validity v) {
  switch (v) {
    case Validity::vv: return "VV";
    case Validity::ve: return "VE";
    case Validity::ee: return "EE";
  }
  return "VV";
}

std::optional<Validity> parse_validity(std::string_view name) {
  for (const Validity v : {Validity::vv, Validity::ve, Validity::ee}) {
    if (name == to_string(v)) return v;
  }
  return std::nullopt;
}

Validity validity_of(const BoundaryCandidate& c) {
  if (c.o1.valid && c.o2.valid) return Validity::vv;
  if (c.o1.valid || c.o2.valid) return Validity::ve;
  return Validity::ee;
}

std::vector<Point4> features(const std::vector<const BoundaryCandidate*>& group) {
  const std::size_t n = group.size();
  std::vector<Point4> out(n);
  if (n == 0) return out;

  std::vector<std::string_view> first(n);
  std::vector<std::string_view> second(n);
  std::vector<double> length_gap(n);
  for (std::size_t j = 0; j < n; ++j) {
    first[j] = group[j]->o1.text;
    second[j] = group[j]->o2.text;
    length_gap[j] = static_cast<double>(strlendist(first[j], second[j]));
    out[j].v[1] = jaccard_ngram(2, first[j], second[j]);
  }
  const auto [lo, hi] = std::minmax_element(length_gap.begin(), length_gap.end());
  const double span = *hi - *lo;
  for (std::size_t j = 0; j < n; ++j) {
    out[j].v[0] = span > 0.0 ? (length_gap[j] - *lo) / span : 0.0;
  }
  const auto u1 = uniqueness(first);
  const auto u2 = uniqueness(second);
  for (std::size_t j = 0; j < n; ++j) {
    out[j].v[2] = u1[j];
    out[j].v[3] = u2[j];
  }
  return out;
}

std::vector<std::size_t> diversity_subset(const std::vector<Point4>& columns, Rng& rng,
                                          std::size_t block, std::size_t window) {
  std::vector<std::size_t> order(columns.size());
  std::iota(order.begin(), order.end(), 0);
  if (columns.size() <= window) return order;
  if (block == 0) throw std::invalid_argument("diversity block must be positive");

  shuffle(order, rng);
  std::vector<std::size_t> working(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(window));
  std::size_t next = window;
  while (next < order.size()) {
    const std::size_t drop = std::min(block, order.size() - next);
    std::stable_sort(working.begin(), working.end(), [&](std::size_t a, std::size_t b) {
      const double sa = attribute_sum(columns[a]);
      const double sb = attribute_sum(columns[b]);
      if (sa != sb) return sa < sb;
      return a < b;
    });
    working.erase(working.begin(), working.begin() + static_cast<std::ptrdiff_t>(drop));
    working.insert(working.end(), order.begin() + static_cast<std::ptrdiff_t>(next),
                   order.begin() + static_cast<std::ptrdiff_t>(next + drop));
    next += drop;
  }
  std::sort(working.begin(), working.end());
  return working;
}

double wcss(const std::vector<Point4>& columns, const std::vector<Point4>& centroids,
            const std::vector<std::uint32_t>& assignment) {
  const auto& kernel = kernels::active();
  double total = 0.0;
  double d = 0.0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    kernel.squared_distances(&columns[j], 1, centroids[assignment[j]], &d);
    total += d;
  }
  return total;
}

ClusteringModel kmeans(const std::vector<Point4>& columns, std::size_t k, Rng& rng,
                       std::size_t max_iter) {
  const std::size_t n = columns.size();
  if (k == 0 || k > n) {
    throw std::invalid_argument("k must be in 1.." + std::to_string(n) + ", got " + std::to_string(k));
  }
  const auto& kernel = kernels::active();
  ClusteringModel model;
  model.k = k;
  model.centroids = pick_initial(columns, k, rng);
  model.assignment.assign(n, 0);
  std::vector<std::uint32_t> assign(n);
  std::vector<double> dist2(n);
  std::vector<std::size_t> counts(k);

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    kernel.nearest_centroid(columns.data(), n, model.centroids.data(), k, assign.data(), dist2.data());
    const bool stable = iter > 0 && assign == model.assignment;
    model.assignment = assign;
    if (stable) break;

    std::vector<Point4> sums(k);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      auto& s = sums[assign[j]];
      for (int a = 0; a < 4; ++a) s.v[a] += columns[j].v[a];
      ++counts[assign[j]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      for (int a = 0; a < 4; ++a) {
        model.centroids[c].v[a] = sums[c].v[a] / static_cast<double>(counts[c]);
      }
    }
    // Reseed empty clusters with the point farthest from its centroid, taken
    // from a cluster that can spare it.
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      std::size_t far = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (counts[model.assignment[j]] < 2) continue;
        if (far == n || dist2[j] > dist2[far]) far = j;
      }
      if (far == n) break;
      --counts[model.assignment[far]];
      model.assignment[far] = static_cast<std::uint32_t>(c);
      model.centroids[c] = columns[far];
      counts[c] = 1;
      dist2[far] = 0.0;
    }
    // Donor centroids lost a point; recompute them from the final assignment.
    std::fill(sums.begin(), sums.end(), Point4{});
    for (std::size_t j = 0; j < n; ++j) {
      auto& s = sums[model.assignment[j]];
      for (int a = 0; a < 4; ++a) s.v[a] += columns[j].v[a];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      for (int a = 0; a < 4; ++a) {
        model.centroids[c].v[a] = sums[c].v[a] / static_cast<double>(counts[c]);
      }
    }
    model.wcss_trace.push_back(wcss(columns, model.centroids, model.assignment));
    model.iterations = iter + 1;
  }
  return model;
}

double silhouette(const std::vector<Point4>& columns, const std::vector<std::uint32_t>& assignment) {
  const std::size_t n = columns.size();
  std::uint32_t k = 0;
  for (auto a : assignment) k = std::max(k, a + 1);
  std::vector<std::size_t> sizes(k, 0);
  for (auto a : assignment) ++sizes[a];
  if (std::count_if(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 0; }) < 2) {
    throw std::invalid_argument("silhouette needs at least two populated clusters");
  }
  const auto& kernel = kernels::active();
  std::vector<double> row(n);
  std::vector<double> per_cluster(k);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t own = assignment[i];
    if (sizes[own] == 1) continue;
    kernel.squared_distances(columns.data(), n, columns[i], row.data());
    std::fill(per_cluster.begin(), per_cluster.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) per_cluster[assignment[j]] += std::sqrt(row[j]);
    const double a = per_cluster[own] / static_cast<double>(sizes[own] - 1);
    double b = 0.0;
    bool have_b = false;
    for (std::uint32_t c = 0; c < k; ++c) {
      if (c == own || sizes[c] == 0) continue;
      const double mean = per_cluster[c] / static_cast<double>(sizes[c]);
      if (!have_b || mean < b) b = mean;
      have_b = true;
    }
    const double scale = std::max(a, b);
    if (scale > 0.0) total += (b - a) / scale;
  }
  return total / static_cast<double>(n);
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("percentile of an empty set");
  std::sort(values.begin(), values.end());
  const double pos = q / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (values[hi] - values[lo]) * (pos - static_cast<double>(lo));
}

std::size_t select_model(const std::vector<ClusteringModel>& runs) {
  if (runs.empty()) throw std::invalid_argument("select_model needs at least one run");
  std::vector<double> scores;
  scores.reserve(runs.size());
  for (const auto& r : runs) scores.push_back(r.silhouette);
  const double cut = percentile(scores, 95.0);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].silhouette < cut) continue;
    if (!best || runs[i].k > runs[*best].k ||
        (runs[i].k == runs[*best].k && runs[i].silhouette > runs[*best].silhouette)) {
      best = i;
    }
  }
  // The maximum always reaches the cut, so best is set.
  return *best;
}

std::size_t ClusterReport::cluster_count() const {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.clusters.size();
  return total;
}

std::size_t ClusterReport::cluster_count(Validity v) const {
  const auto* g = group(v);
  return g == nullptr ? 0 : g->clusters.size();
}

const GroupSummary* ClusterReport::group(Validity v) const {
  for (const auto& g : groups) {
    if (g.validity == v) return &g;
  }
  return nullptr;
}

std::size_t rendered_length(const BoundaryCandidate& c) {
  return scalar_count(render_tuple(c.i1)) + scalar_count(render_tuple(c.i2)) +
         scalar_count(c.o1.text) + scalar_count(c.o2.text);
}

namespace {

std::size_t pick_representative(const std::vector<BoundaryCandidate>& all,
                                const std::vector<std::size_t>& members) {
  struct Key {
    std::size_t length;
    std::string i1, i2, o1, o2;
    auto tie() const { return std::tie(length, i1, i2, o1, o2); }
  };
  std::optional<Key> best_key;
  std::size_t best = members.front();
  for (auto m : members) {
    const auto& c = all[m];
    Key key{rendered_length(c), render_tuple(c.i1), render_tuple(c.i2), c.o1.text, c.o2.text};
    if (!best_key || key.tie() < best_key->tie()) {
      best_key = std::move(key);
      best = m;
    }
  }
  return best;
}

GroupSummary summarize_group(const std::vector<BoundaryCandidate>& all, Validity validity,
                             const std::vector<std::size_t>& indices, Rng& rng,
                             const SummaryConfig& config) {
  GroupSummary out;
  out.validity = validity;
  out.size = indices.size();
  std::vector<std::vector<std::size_t>> members;

  if (indices.size() < std::max<std::size_t>(config.small_group, 3)) {
    members.push_back(indices);
  } else {
    std::vector<const BoundaryCandidate*> group;
    group.reserve(indices.size());
    for (auto i : indices) group.push_back(&all[i]);
    const auto columns = features(group);
    const auto kept = diversity_subset(columns, rng, config.block, config.window);
    std::vector<Point4> subset;
    subset.reserve(kept.size());
    for (auto j : kept) subset.push_back(columns[j]);
    out.clustered = subset.size();

    const std::size_t max_k = std::min(config.max_k, subset.size());
    std::vector<ClusteringModel> runs;
    runs.reserve(config.restarts);
    for (std::size_t r = 0; r < std::max<std::size_t>(config.restarts, 1); ++r) {
      Rng run_rng(rng());
      const std::size_t k = 2 + r % (max_k - 1);
      auto model = kmeans(subset, k, run_rng, config.max_iter);
      model.silhouette = silhouette(subset, model.assignment);
      runs.push_back(std::move(model));
    }
    const auto& chosen = runs[select_model(runs)];
    out.silhouette = chosen.silhouette;

    std::vector<std::uint32_t> assign(columns.size());
    std::vector<double> dist2(columns.size());
    kernels::active().nearest_centroid(columns.data(), columns.size(), chosen.centroids.data(),
                                       chosen.k, assign.data(), dist2.data());
    for (std::size_t s = 0; s < kept.size(); ++s) assign[kept[s]] = chosen.assignment[s];
    members.assign(chosen.k, {});
    for (std::size_t j = 0; j < columns.size(); ++j) members[assign[j]].push_back(indices[j]);
    std::erase_if(members, [](const auto& m) { return m.empty(); });
  }

  for (auto& m : members) {
    Cluster cluster;
    cluster.representative = pick_representative(all, m);
    cluster.members = std::move(m);
    out.clusters.push_back(std::move(cluster));
  }
  std::stable_sort(out.clusters.begin(), out.clusters.end(), [&](const Cluster& a, const Cluster& b) {
    const auto& ca = all[a.representative];
    const auto& cb = all[b.representative];
    if (tuple_less(ca.i1, cb.i1)) return true;
    if (tuple_less(cb.i1, ca.i1)) return false;
    return tuple_less(ca.i2, cb.i2);
  });
  return out;
}

}  // namespace

ClusterReport summarize(const std::vector<BoundaryCandidate>& candidates, Rng& rng,
                        const SummaryConfig& config) {
  if (config.max_k < 2) throw std::invalid_argument("max_k must be at least 2");
  std::vector<std::size_t> by_group[3];
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    by_group[static_cast<int>(validity_of(candidates[i]))].push_back(i);
  }
  ClusterReport report;
  for (const Validity v : {Validity::vv, Validity::ve, Validity::ee}) {
    const auto& indices = by_group[static_cast<int>(v)];
    if (indices.empty()) continue;
    report.groups.push_back(summarize_group(candidates, v, indices, rng, config));
  }
  return report;
}

void count_strategies(ClusterReport& report, const std::vector<std::vector<std::string>>& labels) {
  for (auto& g : report.groups) {
    for (auto& c : g.clusters) {
      c.strategy_counts.clear();
      for (auto m : c.members) {
        if (m >= labels.size()) continue;
        for (const auto& label : labels[m]) ++c.strategy_counts[label];
      }
    }
  }
}

}  // namespace autobva
