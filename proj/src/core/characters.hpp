#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "core/finite_field.hpp"

namespace charsum {

using Complex = std::complex<double>;

inline bool approx_equal(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

class CharGroup;

/// Multiplicative character x -> exp(2 pi i * index * log(x) / (|F|-1)), with 0 -> 0.
///
/// Holds a non-owning pointer to its group; the group must outlive it.
class MultChar {
 public:
  MultChar(const CharGroup& group, std::uint64_t index);

  const CharGroup& group() const { return *group_; }
  std::uint64_t index() const { return index_; }
  std::uint64_t modulus() const;

  Complex operator()(Elem x) const;

  MultChar operator*(const MultChar& other) const;
  MultChar pow(std::int64_t e) const;
  MultChar conj() const;
  MultChar inverse() const { return conj(); }

  bool is_trivial() const { return index_ == 0; }
  /// chi(-1) = -1
  bool is_odd() const;
  std::uint64_t order() const;

  friend bool operator==(const MultChar& a, const MultChar& b) {
    return a.group_ == b.group_ && a.index_ == b.index_;
  }

 private:
  const CharGroup* group_;
  std::uint64_t index_;
};

/// Character group of one field: the table of (|F|-1)-th roots of unity and
/// the canonical additive character y -> exp(2 pi i Tr(y) / p).
class CharGroup {
 public:
  explicit CharGroup(std::shared_ptr<const Field> field);
  CharGroup(const CharGroup&) = delete;
  CharGroup& operator=(const CharGroup&) = delete;

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  std::uint64_t order() const { return field_->unit_order(); }

  MultChar character(std::uint64_t index) const;
  MultChar trivial() const { return MultChar(*this, 0); }
  MultChar quadratic() const { return MultChar(*this, order() / 2); }
  std::vector<MultChar> all() const;

  Complex root(std::uint64_t k) const { return roots_[k % roots_.size()]; }
  /// Additive character psi(y).
  Complex psi(Elem y) const { return psi_[y.v]; }

 private:
  std::shared_ptr<const Field> field_;
  std::vector<Complex> roots_;
  std::vector<Complex> psi_;
};

inline std::uint64_t MultChar::modulus() const { return group_->order(); }

inline Complex MultChar::operator()(Elem x) const {
  if (x.v == 0) return Complex{0.0, 0.0};
  return group_->root(index_ * group_->field().log(x));
}

/// delta(A): 1 when A is trivial.
inline int delta(const MultChar& chi) { return chi.is_trivial() ? 1 : 0; }
inline int delta(Elem j, Elem k) { return j == k ? 1 : 0; }

/// Character groups of F_q and F_{q^2} over a shared tower.
class TowerChars {
 public:
  static std::shared_ptr<const TowerChars> build(std::uint32_t p, std::uint32_t t);
  explicit TowerChars(std::shared_ptr<const Tower> tower);
  TowerChars(const TowerChars&) = delete;
  TowerChars& operator=(const TowerChars&) = delete;

  const Tower& tower() const { return *tower_; }
  std::shared_ptr<const Tower> tower_ptr() const { return tower_; }
  const CharGroup& base() const { return base_; }
  const CharGroup& top() const { return top_; }
  std::uint64_t q() const { return tower_->q(); }

  /// Octic character on F_{q^2} of index odd_multiple * (q^2-1)/8; odd_multiple in {1,3,5,7}.
  /// The default (1) is the canonical M8; M4 is its square.
  MultChar octic(unsigned odd_multiple = 1) const;

  /// C composed with the norm map: index C.index * (q+1) on F_{q^2}.
  MultChar norm_compose(const MultChar& c) const;

 private:
  std::shared_ptr<const Tower> tower_;
  CharGroup base_;
  CharGroup top_;
};

/// Writes odd chi as phi * nu^4 with the smallest index n solving
/// 4n = index(chi) - (q-1)/2 (mod q-1). Requires q = 3 (mod 4).
MultChar decompose_odd(const MultChar& chi);

}  // namespace charsum
