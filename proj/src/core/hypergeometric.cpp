#include "core/hypergeometric.hpp"

#include "core/classical_sums.hpp"

namespace charsum {

namespace {

void require_same_group(const MultChar& a, const MultChar& b) {
  if (&a.group() != &b.group()) throw Error(ErrorCode::FieldMismatch, "characters live on different fields");
}

void require_q_3_mod_4(const TowerChars& tc) {
  if (!tc.tower().q_is_3_mod_4()) throw Error(ErrorCode::Unsupported, "norm-restricted Jacobi sums need q = 3 (mod 4)");
}

}  // namespace

Complex hyp2f1(const MultChar& a, const MultChar& b, const MultChar& c, Elem x) {
  require_same_group(a, b);
  require_same_group(a, c);
  const Field& f = a.group().field();
  if (!f.contains(x)) throw Error(ErrorCode::FieldMismatch, "argument is not an element of the characters' field");
  if (x.v == 0) return {};
  const MultChar b_bar_c = b.conj() * c;
  const MultChar a_bar = a.conj();
  Complex acc{};
  for (std::uint32_t y = 1; y < f.size(); ++y) {
    const Elem ye{y};
    acc += b(ye) * b_bar_c(f.sub(ye, f.one())) * a_bar(f.sub(f.one(), f.mul(x, ye)));
  }
  return acc / static_cast<double>(f.size());
}

Complex binom(const MultChar& a, const MultChar& b) {
  require_same_group(a, b);
  const Field& f = a.group().field();
  return b(f.neg(f.one())) / static_cast<double>(f.size()) * jacobi(a, b.conj());
}

std::vector<Elem> norm_fiber(const Tower& t, Elem c) {
  if (c.v == 0) throw Error(ErrorCode::InvalidArgument, "norm fiber of zero is {0}, not enumerated here");
  const Field& top = t.top();
  const std::uint64_t q = t.q();
  const std::uint64_t start = t.base().log(c);
  std::vector<Elem> out;
  out.reserve(q + 1);
  for (std::uint64_t s = 0; s <= q; ++s) out.push_back(top.exp(start + s * (q - 1)));
  return out;
}

std::vector<Elem> norm_fiber_scan(const Tower& t, Elem c) {
  std::vector<Elem> out;
  for (std::uint32_t z = 1; z < t.top().size(); ++z)
    if (t.norm(Elem{z}) == c) out.push_back(Elem{z});
  return out;
}

namespace {

template <class Fiber>
Complex r_sum(const TowerChars& tc, const MultChar& m8, const MultChar& d, Elem j, Fiber&& fiber) {
  require_q_3_mod_4(tc);
  if (j.v == 0) throw Error(ErrorCode::InvalidArgument, "R(D,j) needs j != 0");
  if (&m8.group() != &tc.top()) throw Error(ErrorCode::FieldMismatch, "M8 must live on F_{q^2}");
  const Tower& t = tc.tower();
  const Field& top = t.top();
  const MultChar dn_bar = tc.norm_compose(d.conj());
  Complex acc{};
  for (Elem z : fiber(t, t.base().pow(j, 4))) acc += m8(z) * dn_bar(top.sub(top.one(), z));
  return acc;
}

}  // namespace

Complex norm_restricted_jacobi(const TowerChars& tc, const MultChar& m8, const MultChar& d, Elem j) {
  return r_sum(tc, m8, d, j, norm_fiber);
}

Complex norm_restricted_jacobi_scan(const TowerChars& tc, const MultChar& m8, const MultChar& d, Elem j) {
  return r_sum(tc, m8, d, j, norm_fiber_scan);
}

Complex norm_restricted_jacobi_closed(const TowerChars& tc, const MultChar& d, Elem j) {
  require_q_3_mod_4(tc);
  if (j.v == 0) throw Error(ErrorCode::InvalidArgument, "R(D,j) needs j != 0");
  const Field& f = tc.tower().base();
  const MultChar phi = tc.base().quadratic();
  const MultChar d_bar = d.conj();
  const Elem one = f.one();
  if (j == one || j == f.neg(one)) return -d_bar(f.from_int(4)) * jacobi(phi * d.pow(2), phi);
  const Elem jm1 = f.sub(j, one);
  const Elem ratio = f.div(f.add(j, one), jm1);
  const Elem x = f.neg(f.square(ratio));
  const double q = static_cast<double>(f.size());
  return -phi(j) * q * d_bar.pow(4)(jm1) * hyp2f1(d, d.pow(2) * phi, d * phi, x);
}

double norm_jacobi_identity_deviation(const TowerChars& tc, const MultChar& m8, const MultChar& d, Elem j) {
  return std::abs(norm_restricted_jacobi(tc, m8, d, j) - norm_restricted_jacobi_closed(tc, d, j));
}

bool check_norm_jacobi_identity(const TowerChars& tc, const MultChar& m8, const MultChar& d, Elem j, double tol) {
  return norm_jacobi_identity_deviation(tc, m8, d, j) <= tol;
}

}  // namespace charsum
