#include "harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "core/finite_field.hpp"

namespace charsum::harness {

namespace {

struct SuiteName {
  std::string_view name;
  Suite suite;
};

constexpr SuiteName kSuiteNames[] = {
    {"classical", Suite::Classical}, {"eisenstein", Suite::Eisenstein}, {"hypergeometric", Suite::Hypergeometric},
    {"norm-jacobi", Suite::NormJacobi}, {"mellin", Suite::Mellin}, {"h-sums", Suite::HSums},
    {"z-sum", Suite::ZSum}, {"master", Suite::Master},
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(std::exchange(cur, {}));
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

template <class T>
T parse_num(std::string_view s, std::string_view what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::Parse, "invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

bool parse_bool(std::string_view s, std::string_view key) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw Error(ErrorCode::Parse, "invalid boolean for " + std::string(key) + ": '" + std::string(s) + "'");
}

}  // namespace

std::string_view suite_name(Suite s) {
  for (const auto& n : kSuiteNames)
    if (n.suite == s) return n.name;
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& n : kSuiteNames)
    if (n.name == name) return n.suite;
  return std::nullopt;
}

FieldClass suite_requirement(Suite s) {
  switch (s) {
    case Suite::Classical:
    case Suite::Hypergeometric:
      return FieldClass::Any;
    case Suite::ZSum:
      return FieldClass::OneModFour;
    default:
      return FieldClass::ThreeModFour;
  }
}

bool suite_supports(Suite s, std::uint64_t q) {
  switch (suite_requirement(s)) {
    case FieldClass::Any:
      return true;
    case FieldClass::ThreeModFour:
      return q % 4 == 3;
    case FieldClass::OneModFour:
      return q % 4 == 1;
  }
  return false;
}

std::uint64_t FieldSpec::q() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < t; ++i) q *= p;
  return q;
}

FieldSpec parse_field(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty field specification");
  if (const auto caret = s.find('^'); caret != std::string::npos) {
    const auto p = parse_num<std::uint32_t>(std::string_view(s).substr(0, caret), "prime");
    const auto t = parse_num<std::uint32_t>(std::string_view(s).substr(caret + 1), "exponent");
    if (p == 2) throw Error(ErrorCode::Parse, "q = " + s + ": characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(ErrorCode::Parse, "q = " + s + ": " + std::to_string(p) + " is not prime");
    if (t < 1) throw Error(ErrorCode::Parse, "q = " + s + ": exponent must be at least 1");
    return {p, t};
  }
  const auto q = parse_num<std::uint64_t>(s, "field order");
  const auto factors = prime_factors(q);
  if (q < 3 || factors.size() != 1) throw Error(ErrorCode::Parse, "q = " + s + " is not an odd prime power");
  if (factors[0] == 2) throw Error(ErrorCode::Parse, "q = " + s + ": characteristic 2 is not supported");
  FieldSpec f{static_cast<std::uint32_t>(factors[0]), 0};
  for (std::uint64_t r = q; r > 1; r /= f.p) ++f.t;
  return f;
}

std::vector<FieldSpec> default_fields() {
  std::vector<FieldSpec> out;
  for (const char* q : {"3", "5", "7", "9", "11", "13", "17", "19", "23", "25", "27"}) out.push_back(parse_field(q));
  return out;
}

void RunConfig::set(std::string_view key_in, std::string_view value_in) {
  const std::string key = trim(key_in);
  const std::string value = trim(value_in);
  if (key == "fields" || key == "q") {
    std::vector<FieldSpec> parsed;
    for (const auto& item : split_list(value)) parsed.push_back(parse_field(item));
    fields = std::move(parsed);
  } else if (key == "suites" || key == "suite") {
    std::vector<Suite> parsed;
    bool all = false;
    for (const auto& item : split_list(value)) {
      if (item == "all") {
        all = true;
        continue;
      }
      const auto s = parse_suite(item);
      if (!s) throw Error(ErrorCode::Parse, "unknown suite '" + item + "'");
      if (std::find(parsed.begin(), parsed.end(), *s) == parsed.end()) parsed.push_back(*s);
    }
    suites = all ? std::vector<Suite>{} : std::move(parsed);
  } else if (key == "a") {
    if (value == "all") {
      a_sweep = {ASweep::Kind::All, 0};
    } else if (value == "auto") {
      a_sweep = {ASweep::Kind::Auto, 8};
    } else if (value.rfind("sample-", 0) == 0) {
      const auto n = parse_num<std::uint32_t>(std::string_view(value).substr(7), "sample size");
      if (n == 0) throw Error(ErrorCode::Parse, "a sample size must be positive");
      a_sweep = {ASweep::Kind::Sample, n};
    } else {
      throw Error(ErrorCode::Parse, "a must be all, auto or sample-N, got '" + value + "'");
    }
  } else if (key == "tol_floor") {
    tolerance.floor = parse_num<double>(value, "tol_floor");
  } else if (key == "tol_scale") {
    tolerance.scale = parse_num<double>(value, "tol_scale");
  } else if (key == "out") {
    json_out = value;
  } else if (key == "csv") {
    csv_out = value;
  } else if (key == "gauss_cache") {
    gauss_cache_dir = value;
  } else if (key == "threads") {
    threads = parse_num<unsigned>(value, "threads");
  } else if (key == "octic_variants") {
    octic_variants = parse_bool(value, key);
  } else if (key == "oracle") {
    oracle = parse_bool(value, key);
  } else if (key == "verbose") {
    verbose = parse_bool(value, key);
  } else {
    throw Error(ErrorCode::Parse, "unknown config key '" + key + "'");
  }
}

void RunConfig::load_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 'key = value'");
    try {
      set(std::string_view(line).substr(0, eq), std::string_view(line).substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_text(ss.str());
}

void RunConfig::validate() const {
  if (fields.empty()) throw Error(ErrorCode::Parse, "no fields configured");
  if (tolerance.floor < 0 || tolerance.scale < 0) throw Error(ErrorCode::Parse, "tolerances must be non-negative");
  for (Suite s : suites)
    for (const auto& f : fields)
      if (!suite_supports(s, f.q())) {
        const char* need = suite_requirement(s) == FieldClass::OneModFour ? "q = 1 (mod 4)" : "q = 3 (mod 4)";
        throw Error(ErrorCode::Unsupported, "suite '" + std::string(suite_name(s)) + "' needs " + need +
                                                ", but q = " + std::to_string(f.q()));
      }
}

std::vector<Suite> RunConfig::suites_for(const FieldSpec& f) const {
  std::vector<Suite> out;
  if (suites.empty()) {
    for (Suite s : kAllSuites)
      if (suite_supports(s, f.q())) out.push_back(s);
  } else {
    out = suites;
  }
  return out;
}

std::string RunConfig::csv_path() const {
  if (!csv_out.empty()) return csv_out;
  if (json_out.empty()) return {};
  const auto slash = json_out.find_last_of('/');
  const auto dot = json_out.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return json_out.substr(0, dot) + ".csv";
  return json_out + ".csv";
}

}  // namespace charsum::harness
