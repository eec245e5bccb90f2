#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scharc/classical.hpp"
#include "scharc/config.hpp"
#include "scharc/error.hpp"
#include "scharc/partitions.hpp"

namespace scharc {

using Json = nlohmann::json;

/// ut n q | pattern (poset + field) | uo/usp/uu n q, with n the full matrix size (even).
struct GroupSelector {
  std::string kind = "ut";
  int n = 0;
  int q = 0;
  std::vector<std::pair<int, int>> relation;  // pattern only, 1-based
  std::optional<std::vector<int>> modulus;

  Json to_json() const;
  static GroupSelector from_json(const Json& j);
};

/// Construction tags: algebra, finest, coarsest, ideal, supernormal,
/// littlegroups, star, nk, nS, classical, classical-lg.
struct ConstructionSpec {
  std::string tag = "algebra";
  int k = 0;
  std::string strategy = "maximal";  // littlegroups: minimal | maximal
  std::string side = "left";         // ideal
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> S;                // nS
  std::string reading = "block";     // classical: block | half

  Json to_json() const;
  static ConstructionSpec from_json(const Json& j);
  /// Compact form "tag[:arg[:arg]]", e.g. "nk:1", "littlegroups:2:minimal",
  /// "nS:1,2", "ideal:right:1-3,2-3".
  static ConstructionSpec parse(const std::string& s);
};

/// A built group: either an algebra group or a classical U.
struct BuiltGroup {
  MatrixGroupPtr group;
  std::optional<UGroup> classical;
};

BuiltGroup build_group(const GroupSelector& sel);
SCTheory build_sct(const BuiltGroup& G, const ConstructionSpec& c);

struct JobSpec {
  GroupSelector group;
  ConstructionSpec construction;
  bool verify = false;
  std::vector<ConstructionSpec> compare;
  std::optional<std::string> expect_relation;  // against every compare entry
  std::optional<int> expect_classes;
  std::vector<std::string> formats{"json"};

  Json to_json() const;
  /// Throws SchemaError naming the offending field.
  static JobSpec from_json(const Json& j);
};

/// Parses text as JSON; SchemaError on malformed input.
Json parse_json_text(const std::string& text);

Json export_sct_json(const SCTheory& S);
std::string export_sct_csv(const SCTheory& S);
/// Rebuilds a theory on G from export_sct_json; SchemaError on mismatch.
SCTheory import_sct_json(const Json& doc, const GroupPtr& G);

Json partition_json(const FqSetPartition& eta, const Field& F);

/// Content-addressed store of text artifacts under dir/<sha256>.
class Cache {
 public:
  static constexpr const char* kVersion = "scharc-cache-v1";

  /// dir empty: SCHARC_CACHE, else ./.scharc-cache.
  explicit Cache(std::filesystem::path dir = {}, std::string version = kVersion);
  const std::filesystem::path& dir() const { return dir_; }
  std::string key(const Json& subkey) const;
  /// Miss on absent or corrupted entries (the latter with a warning on stderr).
  std::optional<std::string> get(const std::string& key) const;
  /// Writes through a temporary file and a rename; warns and continues on IO errors.
  void put(const std::string& key, const std::string& payload) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
};

std::string sha256_hex(const std::string& data);

struct RunResult {
  int exit_code = 0;
  Json report;
  std::vector<std::pair<std::string, std::string>> artifacts;  // file name, bytes
  bool cache_hit = false;
};

/// Runs a job: builds (or loads from the cache) the theory, verifies and
/// compares as requested. Exit 0 iff every requested assertion holds.
RunResult run_job(const JobSpec& job, const Cache* cache = nullptr);

/// Writes the artifacts of a run into dir.
void write_artifacts(const RunResult& r, const std::filesystem::path& dir);

/// 2 for schema and argument errors, 3 for CapExceeded, 1 otherwise.
int exit_code_for(const Error& e);

}  // namespace scharc
