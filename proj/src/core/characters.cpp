#include "core/characters.hpp"

#include <numbers>
#include <string>
#include <utility>

namespace charsum {

MultChar::MultChar(const CharGroup& group, std::uint64_t index) : group_(&group), index_(index) {
  if (index >= group.order())
    throw Error(ErrorCode::InvalidArgument, "character index " + std::to_string(index) + " out of range");
}

MultChar MultChar::operator*(const MultChar& other) const {
  if (group_ != other.group_) throw Error(ErrorCode::FieldMismatch, "characters live on different fields");
  return MultChar(*group_, (index_ + other.index_) % modulus());
}

MultChar MultChar::pow(std::int64_t e) const {
  const auto n = static_cast<std::int64_t>(modulus());
  const auto r = static_cast<std::int64_t>((static_cast<__int128>(index_) * e) % n);
  return MultChar(*group_, static_cast<std::uint64_t>((r + n) % n));
}

MultChar MultChar::conj() const { return MultChar(*group_, (modulus() - index_) % modulus()); }

bool MultChar::is_odd() const {
  // log(-1) = n/2, so chi(-1) = (-1)^index.
  return index_ % 2 == 1;
}

std::uint64_t MultChar::order() const {
  const std::uint64_t n = modulus();
  std::uint64_t a = index_, b = n;
  while (b != 0) a = std::exchange(b, a % b);
  return n / a;
}

CharGroup::CharGroup(std::shared_ptr<const Field> field) : field_(std::move(field)) {
  const std::uint64_t n = field_->unit_order();
  roots_.resize(n);
  for (std::uint64_t k = 0; k < n; ++k)
    roots_[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  const std::uint32_t p = field_->p();
  std::vector<Complex> prime_roots(p);
  for (std::uint32_t k = 0; k < p; ++k)
    prime_roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
  psi_.resize(field_->size());
  for (std::uint64_t y = 0; y < field_->size(); ++y)
    psi_[y] = prime_roots[field_->trace_to_prime(Elem{static_cast<std::uint32_t>(y)})];
}

MultChar CharGroup::character(std::uint64_t index) const { return MultChar(*this, index); }

std::vector<MultChar> CharGroup::all() const {
  std::vector<MultChar> out;
  out.reserve(order());
  for (std::uint64_t k = 0; k < order(); ++k) out.emplace_back(*this, k);
  return out;
}

std::shared_ptr<const TowerChars> TowerChars::build(std::uint32_t p, std::uint32_t t) {
  return std::make_shared<const TowerChars>(Tower::build(p, t));
}

TowerChars::TowerChars(std::shared_ptr<const Tower> tower)
    : tower_(std::move(tower)), base_(tower_->base_ptr()), top_(tower_->top_ptr()) {}

MultChar TowerChars::octic(unsigned odd_multiple) const {
  if (odd_multiple % 2 == 0 || odd_multiple > 7)
    throw Error(ErrorCode::InvalidArgument, "octic variant must be one of 1, 3, 5, 7");
  return top_.character(odd_multiple * (top_.order() / 8));
}

MultChar TowerChars::norm_compose(const MultChar& c) const {
  if (&c.group() != &base_) throw Error(ErrorCode::FieldMismatch, "character is not on the base field");
  return top_.character(c.index() * (q() + 1));
}

MultChar decompose_odd(const MultChar& chi) {
  const std::uint64_t n = chi.modulus();
  if (n % 4 != 2) throw Error(ErrorCode::Unsupported, "odd-character decomposition needs q = 3 (mod 4)");
  if (!chi.is_odd()) throw Error(ErrorCode::InvalidArgument, "character is even");
  const std::uint64_t target = (chi.index() + n - n / 2) % n;
  for (std::uint64_t k = 0; k < n; ++k)
    if (4 * k % n == target) return chi.group().character(k);
  throw Error(ErrorCode::Internal, "no fourth root found for odd character");
}

}  // namespace charsum
