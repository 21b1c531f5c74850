#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "autobva/detection.hpp"

namespace autobva {

/// Malformed input file. The message carries the source and line where known.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunManifest {
  std::string sut;
  std::string strategy;
  std::uint64_t seed = 0;
  std::string budget_kind;  // "seconds" or "iterations"
  double budget_value = 0.0;
  std::string sampling;
  bool cts = true;
  unsigned big_int_bit_cap = 128;
  std::string distance;
  std::string threshold = "0";
  std::uint64_t executions = 0;
  std::uint64_t samples = 0;
  std::uint64_t candidates = 0;
  double elapsed_seconds = 0.0;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

RunManifest make_manifest(std::string sut, const DetectionConfig& config, std::uint64_t seed,
                          const DetectionResult& result);

nlohmann::ordered_json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

// RFC 4180 records.
void write_csv_record(std::ostream& out, const std::vector<std::string>& fields);

struct CsvRecord {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

/// Throws DataError on an unterminated quote.
std::vector<CsvRecord> read_csv(std::istream& in, const std::string& source);

inline constexpr const char* kArchiveHeader =
    "input1,input2,output1,output2,validity,score_num,score_den";

void write_archive_csv(std::ostream& out, const std::vector<BoundaryCandidate>& candidates);

/// Error outcomes are recovered from the validity column and the canonical
/// error text. Throws DataError naming the offending line.
std::vector<BoundaryCandidate> read_archive_csv(std::istream& in, const std::string& source);

nlohmann::ordered_json outcome_to_json(const ExecutionOutcome& o);
nlohmann::ordered_json candidate_to_json(const BoundaryCandidate& c);

nlohmann::ordered_json archive_to_json(const std::vector<BoundaryCandidate>& candidates,
                                       const std::optional<RunManifest>& manifest);

struct LoadedArchive {
  std::vector<BoundaryCandidate> candidates;
  std::optional<RunManifest> manifest;
};

LoadedArchive archive_from_json(const nlohmann::json& j, const std::string& source);

/// Reads a .json archive, or a .csv archive plus a manifest.json beside it.
LoadedArchive load_archive(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace autobva
