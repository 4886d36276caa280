#include "core/classical_sums.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

namespace charsum {

Complex gauss(const MultChar& a) {
  const CharGroup& grp = a.group();
  const Field& f = grp.field();
  Complex acc{};
  for (std::uint32_t y = 1; y < f.size(); ++y) acc += a(Elem{y}) * grp.psi(Elem{y});
  return acc;
}

Complex jacobi(const MultChar& a, const MultChar& b) {
  if (&a.group() != &b.group()) throw Error(ErrorCode::FieldMismatch, "Jacobi sum of characters on different fields");
  const Field& f = a.group().field();
  Complex acc{};
  for (std::uint32_t y = 0; y < f.size(); ++y) acc += a(Elem{y}) * b(f.sub(f.one(), Elem{y}));
  return acc;
}

MultChar restrict_to_base(const TowerChars& tc, const MultChar& beta) {
  if (&beta.group() != &tc.top()) throw Error(ErrorCode::FieldMismatch, "character is not on F_{q^2}");
  return tc.base().character(beta.index() % tc.base().order());
}

Complex eisenstein_E2(const TowerChars& tc, const MultChar& beta) {
  const Tower& t = tc.tower();
  const Field& top = t.top();
  Complex acc{};
  for (std::uint32_t z = 0; z < top.size(); ++z)
    if (t.relative_trace(Elem{z}) == t.base().one()) acc += beta(Elem{z});
  return acc;
}

Complex eisenstein_E(const TowerChars& tc, const MultChar& beta) {
  const Tower& t = tc.tower();
  if (!t.q_is_3_mod_4()) throw Error(ErrorCode::Unsupported, "E(beta) needs q = 3 (mod 4)");
  const Field& top = t.top();
  Complex acc{};
  for (std::uint32_t y = 0; y < t.q(); ++y)
    acc += beta(top.add(top.one(), top.mul(t.i_elem(), t.embed(Elem{y}))));
  return acc;
}

double hasse_davenport_product_deviation(const MultChar& a) {
  const CharGroup& grp = a.group();
  const Field& f = grp.field();
  const MultChar phi = grp.quadratic();
  const Complex lhs = a(f.from_int(4)) * gauss(a) * gauss(a * phi);
  const Complex rhs = gauss(a.pow(2)) * gauss(phi);
  return std::abs(lhs - rhs);
}

bool check_hasse_davenport_product(const MultChar& a, double tol) { return hasse_davenport_product_deviation(a) <= tol; }

double frobenius_gauss_deviation(const TowerChars& tc, const MultChar& beta) {
  return std::abs(gauss(beta) - gauss(beta.pow(static_cast<std::int64_t>(tc.q()))));
}

double lifted_gauss_deviation(const TowerChars& tc, const MultChar& c) {
  const MultChar cn = tc.norm_compose(c);
  const Complex g = gauss(c);
  return std::max(std::abs(gauss(cn) + g * g), frobenius_gauss_deviation(tc, cn));
}

bool check_lifted_gauss(const TowerChars& tc, const MultChar& c, double tol) { return lifted_gauss_deviation(tc, c) <= tol; }

double quartic_gauss_deviation(const TowerChars& tc, const MultChar& c) {
  if (!tc.tower().q_is_3_mod_4()) throw Error(ErrorCode::Unsupported, "quartic Gauss relation needs q = 3 (mod 4)");
  const MultChar m4 = tc.octic().pow(2);
  const MultChar cn = tc.norm_compose(c);
  const MultChar phi = tc.base().quadratic();
  const Field& f = tc.tower().base();
  const Complex rhs = -(c.conj().pow(2) * phi)(f.from_int(2)) * gauss(c.pow(2) * phi) * gauss(phi);
  const Complex lhs1 = gauss(cn * m4);
  const Complex lhs2 = gauss(cn * m4.conj());
  return std::max(std::abs(lhs1 - rhs), std::abs(lhs2 - rhs));
}

bool check_quartic_gauss(const TowerChars& tc, const MultChar& c, double tol) { return quartic_gauss_deviation(tc, c) <= tol; }

Complex GaussTable::operator()(const MultChar& a) const {
  if (&a.group() != group_) throw Error(ErrorCode::FieldMismatch, "Gauss table belongs to a different field");
  {
    std::shared_lock lock(mu_);
    if (auto it = memo_.find(a.index()); it != memo_.end()) return it->second;
  }
  const Complex v = gauss(a);
  std::unique_lock lock(mu_);
  memo_[a.index()] = v;
  return v;
}

void GaussTable::fill() const {
  for (std::uint64_t k = 0; k < group_->order(); ++k) (*this)(group_->character(k));
}

void GaussTable::insert(std::uint64_t index, Complex value) const {
  if (index >= group_->order()) throw Error(ErrorCode::InvalidArgument, "character index out of range");
  std::unique_lock lock(mu_);
  memo_[index] = value;
}

std::vector<std::pair<std::uint64_t, Complex>> GaussTable::entries() const {
  std::shared_lock lock(mu_);
  return {memo_.begin(), memo_.end()};
}

std::size_t GaussTable::size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

void write_gauss_csv(std::ostream& out, const GaussTable& table) {
  out << "field_order,char_index,re,im\n";
  const std::uint64_t order = table.group().field().size();
  char buf[64];
  for (const auto& [index, v] : table.entries()) {
    out << order << ',' << index << ',';
    std::snprintf(buf, sizeof buf, "%.17g", v.real());
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", v.imag());
    out << buf << '\n';
  }
}

namespace {

template <class T>
T parse_number(const std::string& s, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::Corrupt, "line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

}  // namespace

std::vector<GaussRow> read_gauss_csv(std::istream& in) {
  std::vector<GaussRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("field_order", 0) == 0) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string col; std::getline(ss, col, ',');) cols.push_back(col);
    if (cols.size() != 4)
      throw Error(ErrorCode::Corrupt, "line " + std::to_string(lineno) + ": expected 4 columns");
    rows.push_back({parse_number<std::uint64_t>(cols[0], lineno), parse_number<std::uint64_t>(cols[1], lineno),
                    Complex{parse_number<double>(cols[2], lineno), parse_number<double>(cols[3], lineno)}});
  }
  return rows;
}

}  // namespace charsum
