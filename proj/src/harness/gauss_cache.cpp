#include "harness/gauss_cache.hpp"

#include <fstream>

#include "core/report.hpp"

namespace charsum::harness {

void cache_gauss_tables(const GaussTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write Gauss cache '" + path + "'");
  write_gauss_csv(out, table);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed for Gauss cache '" + path + "'");
}

std::size_t load_gauss_tables(const GaussTable& table, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open Gauss cache '" + path + "'");
  std::vector<GaussRow> rows;
  try {
    rows = read_gauss_csv(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }

  const CharGroup& group = table.group();
  const std::uint64_t order = group.field().size();
  for (const auto& r : rows) {
    if (r.field_order != order)
      throw Error(ErrorCode::FieldMismatch, path + ": table is for q = " + std::to_string(r.field_order) +
                                                ", field has q = " + std::to_string(order));
    if (r.char_index >= group.order())
      throw Error(ErrorCode::Corrupt, path + ": character index " + std::to_string(r.char_index) + " out of range");
  }

  const TolerancePolicy tol;
  const double limit = tol.abs_tol(order, order);
  // Every row must have the right magnitude: |G(A)|^2 = q for A nontrivial, G(eps) = -1.
  for (const auto& r : rows) {
    const bool ok = r.char_index == 0 ? std::abs(r.value + 1.0) <= limit
                                      : std::abs(std::norm(r.value) - static_cast<double>(order)) <= limit * order;
    if (!ok) throw Error(ErrorCode::Corrupt, path + ": bad magnitude for character " + std::to_string(r.char_index));
  }
  if (!rows.empty()) {
    const std::size_t n = rows.size();
    for (std::size_t s = 0; s < 5; ++s) {
      const auto& r = rows[n == 1 ? 0 : s * (n - 1) / 4];
      const Complex fresh = gauss(group.character(r.char_index));
      if (!(std::abs(fresh - r.value) <= limit))
        throw Error(ErrorCode::Corrupt, path + ": spot check failed for character " + std::to_string(r.char_index));
    }
  }
  for (const auto& r : rows) table.insert(r.char_index, r.value);
  return rows.size();
}

std::string gauss_cache_file(const std::string& dir, std::uint64_t field_order) {
  std::string d = dir;
  if (!d.empty() && d.back() != '/') d.push_back('/');
  return d + "gauss_" + std::to_string(field_order) + ".csv";
}

}  // namespace charsum::harness
