#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace charsum {

enum class ErrorCode {
  InvalidArgument = 1,
  NotPrime,
  EvenCharacteristic,
  TooLarge,
  Unsupported,
  FieldMismatch,
  Parse,
  Io,
  Corrupt,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Element of a prime-power field. The coefficient vector (c_0, ..., c_{m-1})
/// over F_p is packed as the base-p integer c_0 + c_1 p + ... + c_{m-1} p^{m-1},
/// so the constants 0..p-1 coincide with the prime subfield.
struct Elem {
  std::uint32_t v = 0;
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Largest field order whose log/antilog tables we are willing to build.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// F_{p^m} in a polynomial basis with eager discrete-log tables.
///
/// The modulus is the lexicographically smallest monic irreducible when its
/// coefficients are compared as (c_0, ..., c_{m-1}); the default generator is
/// the primitive element with the smallest packed integer.
class Field {
 public:
  static std::shared_ptr<const Field> construct(std::uint32_t p, std::uint32_t m);

  /// Same field (same modulus and packing) with discrete logs taken to base `g`.
  std::shared_ptr<const Field> with_generator(Elem g) const;

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t unit_order() const { return size_ - 1; }
  std::span<const std::uint32_t> modulus() const { return modulus_; }
  Elem generator() const { return Elem{exp_[1]}; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(std::int64_t c) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;
  bool contains(Elem x) const { return x.v < size_; }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const {
    if (x.v == 0 || y.v == 0) return Elem{0};
    return Elem{exp_[log_[x.v] + log_[y.v]]};
  }
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem square(Elem x) const { return mul(x, x); }
  Elem pow(Elem x, std::uint64_t e) const;

  /// Index of x in <g>; x must be nonzero.
  std::uint64_t log(Elem x) const { return log_[x.v]; }
  Elem exp(std::uint64_t k) const { return Elem{exp_[k % unit_order()]}; }

  /// x^(p^k)
  Elem frobenius(Elem x, std::uint32_t k = 1) const;

  /// y^p + y^(p^2) + ... + y^(p^m), an element of F_p returned as 0..p-1.
  std::uint32_t trace_to_prime(Elem y) const { return trace_[y.v]; }

  /// Polynomial multiplication mod the modulus, independent of the log tables.
  Elem mul_poly(Elem x, Elem y) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  Field() = default;
  void build_tables(Elem g);

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> modulus_;  // low degree first, monic term omitted
  std::vector<std::uint32_t> pow_p_;    // p^i for packing
  std::vector<std::uint32_t> exp_;      // length 2(size-1), g^k for k < 2(size-1)
  std::vector<std::uint32_t> log_;      // log_[0] unused
  std::vector<std::uint32_t> trace_;
};

/// F_q inside F_{q^2}, with q = p^t.
///
/// The top field is one degree-2t extension of F_p. The base field keeps its
/// own canonical modulus but takes discrete logs to g = N(g2), so that a
/// character of index k on F_q composed with the norm is the character of
/// index k(q+1) on F_{q^2}.
class Tower {
 public:
  static std::shared_ptr<const Tower> build(std::uint32_t p, std::uint32_t t);

  const Field& base() const { return *base_; }
  const Field& top() const { return *top_; }
  std::shared_ptr<const Field> base_ptr() const { return base_; }
  std::shared_ptr<const Field> top_ptr() const { return top_; }

  std::uint64_t q() const { return base_->size(); }
  std::uint32_t p() const { return base_->p(); }
  bool q_is_3_mod_4() const { return q() % 4 == 3; }

  Elem embed(Elem x) const { return Elem{embed_[x.v]}; }
  std::optional<Elem> pullback(Elem z) const;
  bool in_base(Elem z) const { return pullback_[z.v] >= 0; }

  /// z * z^q pulled back to F_q.
  Elem norm(Elem z) const;
  /// z + z^q pulled back to F_q.
  Elem relative_trace(Elem z) const;
  Elem conj(Elem z) const { return top_->frobenius(z, base_->degree()); }

  Elem g2() const { return top_->generator(); }
  Elem g() const { return base_->generator(); }
  /// g2^((q^2-1)/4); a square root of -1, outside F_q when q = 3 (mod 4).
  Elem i_elem() const { return i_elem_; }

 private:
  Tower() = default;

  std::shared_ptr<const Field> base_;
  std::shared_ptr<const Field> top_;
  std::vector<std::uint32_t> embed_;
  std::vector<std::int32_t> pullback_;
  Elem i_elem_;
};

}  // namespace charsum
