#include "autobva/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "autobva/summarization.hpp"

namespace autobva {

namespace {

using ojson = nlohmann::ordered_json;

std::string big_text(const BigInt& v) { return v.str(); }

BigInt parse_big(const std::string& text, const std::string& where) {
  auto v = parse_value(text);
  if (!v || v->is_boolean()) throw DataError(where + ": not an integer: '" + text + "'");
  return v->value();
}

ExecutionOutcome recover_error(const std::string& text, const std::string& where) {
  auto e = parse_error_text(text);
  if (!e) throw DataError(where + ": output is not a recognized error: '" + text + "'");
  return *e;
}

}  // namespace

RunManifest make_manifest(std::string sut, const DetectionConfig& config, std::uint64_t seed,
                          const DetectionResult& result) {
  RunManifest m;
  m.sut = std::move(sut);
  m.strategy = std::string(to_string(config.strategy));
  m.seed = seed;
  if (config.budget.is_time()) {
    m.budget_kind = "seconds";
    m.budget_value = std::get<0>(config.budget.limit).count();
  } else {
    m.budget_kind = "iterations";
    m.budget_value = static_cast<double>(std::get<1>(config.budget.limit));
  }
  m.sampling = std::string(to_string(config.sampler.method));
  m.cts = config.sampler.cts_enabled;
  m.big_int_bit_cap = config.sampler.big_int_bit_cap;
  m.distance = config.distance.name();
  m.threshold = config.threshold.value().str();
  m.executions = result.stats.executions;
  m.samples = result.stats.samples;
  m.candidates = result.archive.size();
  m.elapsed_seconds = result.stats.elapsed.count();
  return m;
}

ojson manifest_to_json(const RunManifest& m) {
  ojson j;
  j["sut"] = m.sut;
  j["strategy"] = m.strategy;
  j["seed"] = m.seed;
  j["budget"] = {{"kind", m.budget_kind}, {"value", m.budget_value}};
  j["sampler"] = {{"method", m.sampling}, {"cts", m.cts}, {"big_int_bit_cap", m.big_int_bit_cap}};
  j["distance"] = m.distance;
  j["threshold"] = m.threshold;
  j["counts"] = {{"executions", m.executions}, {"samples", m.samples}, {"candidates", m.candidates}};
  j["elapsed_seconds"] = m.elapsed_seconds;
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  try {
    RunManifest m;
    m.sut = j.at("sut").get<std::string>();
    m.strategy = j.at("strategy").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.budget_kind = j.at("budget").at("kind").get<std::string>();
    m.budget_value = j.at("budget").at("value").get<double>();
    m.sampling = j.at("sampler").at("method").get<std::string>();
    m.cts = j.at("sampler").at("cts").get<bool>();
    m.big_int_bit_cap = j.at("sampler").at("big_int_bit_cap").get<unsigned>();
    m.distance = j.at("distance").get<std::string>();
    m.threshold = j.at("threshold").get<std::string>();
    m.executions = j.at("counts").at("executions").get<std::uint64_t>();
    m.samples = j.at("counts").at("samples").get<std::uint64_t>();
    m.candidates = j.at("counts").at("candidates").get<std::uint64_t>();
    m.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad manifest: ") + e.what());
  }
}

void write_csv_record(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out << f;
      continue;
    }
    out << '"';
    for (char c : f) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  }
  out << "\r\n";
}

std::vector<CsvRecord> read_csv(std::istream& in, const std::string& source) {
  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t quote_line = 0;
  current.line = 1;

  auto end_record = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(current));
    current = CsvRecord{};
    field_started = false;
  };

  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) throw DataError(source + ":" + std::to_string(line) + ": stray quote");
        quoted = true;
        field_started = true;
        quote_line = line;
        break;
      case ',':
        current.fields.push_back(std::move(field));
        field.clear();
        field_started = false;
        break;
      case '\r':
        if (in.peek() == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        current.line = line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) {
    throw DataError(source + ":" + std::to_string(quote_line) + ": unterminated quoted field");
  }
  if (field_started || !current.fields.empty()) end_record();
  return records;
}

void write_archive_csv(std::ostream& out, const std::vector<BoundaryCandidate>& candidates) {
  out << kArchiveHeader << "\r\n";
  for (const auto& c : candidates) {
    write_csv_record(out, {render_tuple(c.i1), render_tuple(c.i2), c.o1.text, c.o2.text,
                           std::string(to_string(validity_of(c))), big_text(c.score.numerator()),
                           big_text(c.score.denominator())});
  }
}

std::vector<BoundaryCandidate> read_archive_csv(std::istream& in, const std::string& source) {
  const auto records = read_csv(in, source);
  std::vector<BoundaryCandidate> out;
  if (records.empty()) return out;

  std::ostringstream header;
  for (std::size_t i = 0; i < records.front().fields.size(); ++i) {
    header << (i ? "," : "") << records.front().fields[i];
  }
  if (header.str() != kArchiveHeader) {
    throw DataError(source + ":1: expected header '" + kArchiveHeader + "'");
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where = source + ":" + std::to_string(rec.line);
    if (rec.fields.size() == 1 && rec.fields[0].empty()) continue;
    if (rec.fields.size() != 7) {
      throw DataError(where + ": expected 7 fields, got " + std::to_string(rec.fields.size()));
    }
    auto i1 = parse_tuple(rec.fields[0]);
    auto i2 = parse_tuple(rec.fields[1]);
    if (!i1 || !i2) throw DataError(where + ": unparsable input tuple");
    const auto validity = parse_validity(rec.fields[4]);
    if (!validity) throw DataError(where + ": unknown validity '" + rec.fields[4] + "'");

    ExecutionOutcome o1 = ExecutionOutcome::ok(rec.fields[2]);
    ExecutionOutcome o2 = ExecutionOutcome::ok(rec.fields[3]);
    if (*validity == Validity::ee) {
      o1 = recover_error(rec.fields[2], where);
      o2 = recover_error(rec.fields[3], where);
    } else if (*validity == Validity::ve) {
      const bool first = parse_error_text(rec.fields[2]).has_value();
      const bool second = parse_error_text(rec.fields[3]).has_value();
      if (first == second) throw DataError(where + ": VE row needs exactly one error output");
      (first ? o1 : o2) = recover_error(first ? rec.fields[2] : rec.fields[3], where);
    }

    const BigInt num = parse_big(rec.fields[5], where);
    const BigInt den = parse_big(rec.fields[6], where);
    if (den <= 0 || num < 0) throw DataError(where + ": invalid score");
    out.push_back(BoundaryCandidate{std::move(*i1), std::move(o1), std::move(*i2), std::move(o2),
                                    Boundariness(Rational(num, den))});
  }
  return out;
}

ojson outcome_to_json(const ExecutionOutcome& o) {
  ojson j;
  j["valid"] = o.valid;
  j["text"] = o.text;
  if (o.error_kind) {
    j["error_kind"] = std::string(to_string(*o.error_kind));
    ojson payload = ojson::object();
    for (const auto& [k, v] : o.payload) payload[k] = v;
    j["payload"] = std::move(payload);
  }
  return j;
}

ojson candidate_to_json(const BoundaryCandidate& c) {
  ojson j;
  j["input1"] = render_tuple(c.i1);
  j["input2"] = render_tuple(c.i2);
  j["output1"] = outcome_to_json(c.o1);
  j["output2"] = outcome_to_json(c.o2);
  j["validity"] = std::string(to_string(validity_of(c)));
  j["score"] = {{"num", big_text(c.score.numerator())},
                {"den", big_text(c.score.denominator())},
                {"value", c.score.to_double()}};
  return j;
}

ojson archive_to_json(const std::vector<BoundaryCandidate>& candidates,
                      const std::optional<RunManifest>& manifest) {
  ojson j;
  if (manifest) j["metadata"] = manifest_to_json(*manifest);
  ojson list = ojson::array();
  for (const auto& c : candidates) list.push_back(candidate_to_json(c));
  j["candidates"] = std::move(list);
  return j;
}

namespace {

ExecutionOutcome outcome_from_json(const nlohmann::json& j, const std::string& where) {
  const bool valid = j.at("valid").get<bool>();
  const auto text = j.at("text").get<std::string>();
  if (valid) return ExecutionOutcome::ok(text);
  ExecutionOutcome o;
  o.valid = false;
  o.text = text;
  const auto kind = parse_error_kind(j.at("error_kind").get<std::string>());
  if (!kind) throw DataError(where + ": unknown error kind");
  o.error_kind = kind;
  if (j.contains("payload")) {
    for (const auto& [k, v] : j.at("payload").items()) o.payload[k] = v.get<std::string>();
  }
  return o;
}

}  // namespace

LoadedArchive archive_from_json(const nlohmann::json& j, const std::string& source) {
  LoadedArchive out;
  try {
    if (j.contains("metadata")) out.manifest = manifest_from_json(j.at("metadata"));
    const auto& list = j.at("candidates");
    for (std::size_t n = 0; n < list.size(); ++n) {
      const auto& c = list[n];
      const std::string where = source + ": candidate " + std::to_string(n);
      auto i1 = parse_tuple(c.at("input1").get<std::string>());
      auto i2 = parse_tuple(c.at("input2").get<std::string>());
      if (!i1 || !i2) throw DataError(where + ": unparsable input tuple");
      const BigInt num = parse_big(c.at("score").at("num").get<std::string>(), where);
      const BigInt den = parse_big(c.at("score").at("den").get<std::string>(), where);
      if (den <= 0 || num < 0) throw DataError(where + ": invalid score");
      out.candidates.push_back(BoundaryCandidate{std::move(*i1),
                                                 outcome_from_json(c.at("output1"), where),
                                                 std::move(*i2),
                                                 outcome_from_json(c.at("output2"), where),
                                                 Boundariness(Rational(num, den))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(source + ": " + e.what());
  }
  return out;
}

LoadedArchive load_archive(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path.string() + ": " + e.what());
    }
    return archive_from_json(j, path.string());
  }
  LoadedArchive out;
  out.candidates = read_archive_csv(in, path.string());
  const auto manifest = path.parent_path() / "manifest.json";
  if (std::filesystem::exists(manifest)) {
    std::ifstream m(manifest);
    try {
      out.manifest = manifest_from_json(nlohmann::json::parse(m));
    } catch (const nlohmann::json::exception& e) {
      throw DataError(manifest.string() + ": " + e.what());
    }
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace autobva
