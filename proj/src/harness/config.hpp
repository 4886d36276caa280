#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/report.hpp"

namespace charsum::harness {

enum class Suite {
  Classical,
  Eisenstein,
  Hypergeometric,
  NormJacobi,
  Mellin,
  HSums,
  ZSum,
  Master,
};

inline constexpr Suite kAllSuites[] = {Suite::Classical, Suite::Eisenstein, Suite::Hypergeometric, Suite::NormJacobi,
                                       Suite::Mellin,    Suite::HSums,      Suite::ZSum,           Suite::Master};

std::string_view suite_name(Suite s);
/// nullopt when the name is unknown.
std::optional<Suite> parse_suite(std::string_view name);

enum class FieldClass { Any, ThreeModFour, OneModFour };
FieldClass suite_requirement(Suite s);
bool suite_supports(Suite s, std::uint64_t q);

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t t = 0;
  std::uint64_t q() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// "27" or "3^3". Rejects p = 2 and non prime powers.
FieldSpec parse_field(std::string_view text);

struct ASweep {
  enum class Kind { Auto, All, Sample } kind = Kind::Auto;
  std::uint32_t sample = 8;
};

struct RunConfig {
  std::vector<FieldSpec> fields;
  std::vector<Suite> suites;  // empty means all compatible suites
  ASweep a_sweep;
  TolerancePolicy tolerance;
  std::string json_out;
  std::string csv_out;
  std::string gauss_cache_dir;
  unsigned threads = 0;  // 0: hardware concurrency
  bool octic_variants = false;
  bool oracle = false;
  bool verbose = false;

  /// Applies one key/value pair; keys match the config-file format.
  void set(std::string_view key, std::string_view value);
  /// Parses "key = value" lines; '#' starts a comment.
  void load_text(std::string_view text);
  void load_file(const std::string& path);
  /// Rejects missing fields and explicitly requested suites a field cannot run.
  void validate() const;

  std::vector<Suite> suites_for(const FieldSpec& f) const;
  /// CSV path: csv_out, or json_out with its extension replaced by .csv.
  std::string csv_path() const;
};

/// Default field set for CI runs.
std::vector<FieldSpec> default_fields();

}  // namespace charsum::harness
