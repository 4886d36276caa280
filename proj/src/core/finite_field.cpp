#include "core/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace charsum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Dense polynomials over F_p, low degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t qt = r / nr;
    t = std::exchange(nt, t - qt * nt);
    r = std::exchange(nr, r - qt * nr);
  }
  return static_cast<std::uint32_t>((t % p + p) % p);
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < f.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f | x^(p^m) - x and gcd(x^(p^(m/r)) - x, f) = 1 for primes r | m.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  const Poly x{0, 1};
  auto x_pow_p_k = [&](std::size_t k) {
    Poly r = x;
    for (std::size_t i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  if (!poly_sub(x_pow_p_k(m), x, p).empty()) return false;
  for (std::uint64_t r : prime_factors(m)) {
    Poly g = poly_gcd(f, poly_sub(x_pow_p_k(m / r), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::construct(std::uint32_t p, std::uint32_t m) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    size *= p;
    if (size > kMaxFieldOrder)
      throw Error(ErrorCode::TooLarge, "field order " + std::to_string(p) + "^" +
                                           std::to_string(m) + " exceeds 2^20");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->size_ = size;
  f->pow_p_.resize(m + 1);
  f->pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= m; ++i) f->pow_p_[i] = f->pow_p_[i - 1] * p;

  // Enumerate (c_0, ..., c_{m-1}) in lexicographic order, c_0 most significant.
  if (m == 1) {
    f->modulus_ = {0};
  } else {
    for (std::uint64_t n = 0; n < size && f->modulus_.empty(); ++n) {
      Poly cand(m + 1, 0);
      std::uint64_t rest = n;
      for (std::uint32_t i = 0; i < m; ++i) {
        cand[m - 1 - i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      cand[m] = 1;
      if (cand[0] != 0 && is_irreducible(cand, p)) f->modulus_.assign(cand.begin(), cand.end() - 1);
    }
    if (f->modulus_.empty()) throw Error(ErrorCode::Internal, "no irreducible modulus found");
  }

  // Smallest primitive element, by order test against each prime divisor of size-1.
  const auto factors = prime_factors(size - 1);
  for (std::uint32_t c = 1; c < size; ++c) {
    const Elem cand{c};
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
      Elem acc = f->one();
      Elem b = cand;
      for (std::uint64_t e = (size - 1) / r; e > 0; e >>= 1) {
        if (e & 1) acc = f->mul_poly(acc, b);
        b = f->mul_poly(b, b);
      }
      return acc != f->one();
    });
    if (primitive) {
      f->build_tables(cand);
      return f;
    }
  }
  throw Error(ErrorCode::Internal, "no generator found");
}

std::shared_ptr<const Field> Field::with_generator(Elem g) const {
  if (g.v == 0 || !contains(g)) throw Error(ErrorCode::InvalidArgument, "generator must be a nonzero element");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p_;
  f->m_ = m_;
  f->size_ = size_;
  f->modulus_ = modulus_;
  f->pow_p_ = pow_p_;
  f->build_tables(g);
  return f;
}

void Field::build_tables(Elem g) {
  const std::uint64_t n = size_ - 1;
  exp_.assign(2 * n, 0);
  log_.assign(size_, 0);
  std::vector<bool> seen(size_, false);
  Elem cur = one();
  for (std::uint64_t k = 0; k < n; ++k) {
    if (seen[cur.v])
      throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(g.v) + " is not a generator");
    seen[cur.v] = true;
    exp_[k] = exp_[k + n] = cur.v;
    log_[cur.v] = static_cast<std::uint32_t>(k);
    cur = mul_poly(cur, g);
  }
  if (cur != one()) throw Error(ErrorCode::Internal, "generator order mismatch");

  trace_.assign(size_, 0);
  for (std::uint64_t y = 0; y < size_; ++y) {
    Elem acc = zero();
    Elem term{static_cast<std::uint32_t>(y)};
    for (std::uint32_t i = 0; i < m_; ++i) {
      term = pow(term, p_);
      acc = add(acc, term);
    }
    if (acc.v >= p_) throw Error(ErrorCode::Internal, "trace left the prime field");
    trace_[y] = acc.v;
  }
}

Elem Field::from_int(std::int64_t c) const {
  const std::int64_t r = ((c % p_) + p_) % p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) throw Error(ErrorCode::InvalidArgument, "coefficient vector has wrong length");
  std::uint32_t v = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (coeffs[i] >= p_) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
    v += coeffs[i] * pow_p_[i];
  }
  return Elem{v};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = x.v % p_;
    x.v /= p_;
  }
  return out;
}

Elem Field::add(Elem x, Elem y) const {
  if (m_ == 1) return Elem{(x.v + y.v) % p_};
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((x.v % p_ + y.v % p_) % p_) * pow_p_[i];
    x.v /= p_;
    y.v /= p_;
  }
  return Elem{out};
}

Elem Field::neg(Elem x) const {
  if (m_ == 1) return Elem{(p_ - x.v) % p_};
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - x.v % p_) % p_) * pow_p_[i];
    x.v /= p_;
  }
  return Elem{out};
}

Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem Field::inv(Elem x) const {
  if (x.v == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  const std::uint64_t n = unit_order();
  return Elem{exp_[(n - log_[x.v]) % n]};
}

Elem Field::pow(Elem x, std::uint64_t e) const {
  if (e == 0) return one();
  if (x.v == 0) return zero();
  const std::uint64_t n = unit_order();
  const std::uint64_t k = static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[x.v]) * e) % n);
  return Elem{exp_[k]};
}

Elem Field::frobenius(Elem x, std::uint32_t k) const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < k % m_; ++i) e *= p_;
  return pow(x, e);
}

Elem Field::mul_poly(Elem x, Elem y) const {
  if (m_ == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{x.v} * y.v % p_)};
  Poly f(modulus_.begin(), modulus_.end());
  f.push_back(1);
  Poly a = coeffs(x), b = coeffs(y);
  trim(a);
  trim(b);
  Poly r = poly_mulmod(a, b, f, p_);
  r.resize(m_, 0);
  return from_coeffs(r);
}

std::shared_ptr<const Tower> Tower::build(std::uint32_t p, std::uint32_t t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  auto tower = std::shared_ptr<Tower>(new Tower());
  tower->top_ = Field::construct(p, 2 * t);
  auto canonical_base = Field::construct(p, t);
  const Field& top = *tower->top_;
  const std::uint64_t q = canonical_base->size();

  // Root of the base modulus in the top field, smallest packed value.
  Elem alpha{0};
  if (t > 1) {
    std::vector<std::uint32_t> f(canonical_base->modulus().begin(), canonical_base->modulus().end());
    f.push_back(1);
    bool found = false;
    for (std::uint32_t z = 0; z < top.size() && !found; ++z) {
      Elem acc = top.zero();
      for (std::size_t i = f.size(); i-- > 0;) acc = top.add(top.mul(acc, Elem{z}), top.from_int(f[i]));
      if (acc == top.zero()) {
        alpha = Elem{z};
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::Internal, "base modulus has no root in the top field");
  }

  tower->embed_.assign(q, 0);
  tower->pullback_.assign(top.size(), -1);
  for (std::uint32_t x = 0; x < q; ++x) {
    const auto c = canonical_base->coeffs(Elem{x});
    Elem acc = top.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = top.add(top.mul(acc, alpha), top.from_int(c[i]));
    if (tower->pullback_[acc.v] >= 0) throw Error(ErrorCode::Internal, "embedding is not injective");
    tower->embed_[x] = acc.v;
    tower->pullback_[acc.v] = static_cast<std::int32_t>(x);
  }
  for (std::uint32_t z = 0; z < top.size(); ++z) {
    const bool fixed = top.frobenius(Elem{z}, t) == Elem{z};
    if (fixed != (tower->pullback_[z] >= 0))
      throw Error(ErrorCode::Internal, "embedded image differs from the Frobenius fixed field");
  }

  const Elem n_g2 = top.pow(top.generator(), q + 1);
  tower->base_ = canonical_base->with_generator(Elem{static_cast<std::uint32_t>(tower->pullback_[n_g2.v])});
  tower->i_elem_ = top.exp((top.size() - 1) / 4);
  return tower;
}

std::optional<Elem> Tower::pullback(Elem z) const {
  const auto v = pullback_[z.v];
  if (v < 0) return std::nullopt;
  return Elem{static_cast<std::uint32_t>(v)};
}

Elem Tower::norm(Elem z) const {
  if (z.v == 0) return Elem{0};
  return base_->exp(top_->log(z));
}

Elem Tower::relative_trace(Elem z) const {
  const Elem s = top_->add(z, conj(z));
  return Elem{static_cast<std::uint32_t>(pullback_[s.v])};
}

}  // namespace charsum
