#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "core/characters.hpp"
#include "core/classical_sums.hpp"
#include "core/report.hpp"

namespace charsum {

/// Gauss-sum memos for both levels of a tower, shareable across contexts.
struct TowerGauss {
  explicit TowerGauss(const TowerChars& tc) : base(tc.base()), top(tc.top()) {}
  GaussTable base;
  GaussTable top;
};

/// A tower with q = 3 (mod 4), a parameter a in F_q^*, a fixed octic
/// character M8 on F_{q^2}, and tau = -sqrt(q M8(-a)).
///
/// The square root takes the argument of q M8(-a) in [0, 2 pi) and halves it.
class KatzContext {
 public:
  KatzContext(std::shared_ptr<const TowerChars> tc, Elem a, unsigned octic_variant = 1,
              std::shared_ptr<const TowerGauss> gauss = nullptr);

  const TowerChars& chars() const { return *tc_; }
  std::shared_ptr<const TowerChars> chars_ptr() const { return tc_; }
  const Tower& tower() const { return tc_->tower(); }
  const Field& base_field() const { return tc_->tower().base(); }
  const Field& top_field() const { return tc_->tower().top(); }
  const CharGroup& base() const { return tc_->base(); }
  const CharGroup& top() const { return tc_->top(); }
  std::uint64_t q() const { return tc_->q(); }

  Elem a() const { return a_; }
  std::uint64_t a_index() const { return base_field().log(a_); }
  unsigned octic_variant() const { return octic_variant_; }
  const MultChar& m8() const { return m8_; }
  Complex tau() const { return tau_; }

  /// Memoized Gauss sum on whichever level the character lives.
  Complex gauss_sum(const MultChar& chi) const;

 private:
  std::shared_ptr<const TowerChars> tc_;
  std::shared_ptr<const TowerGauss> gauss_;
  Elem a_;
  unsigned octic_variant_;
  MultChar m8_;
  Complex tau_;
};

/// P(j,k) = delta(j,k) + phi(-1) delta(j,-k)
///          + G(phi)^-1 sum_{x != 0} phi(a/x - x) psi(x(j+k)^2 + (a/x)(j-k)^2)
Complex katz_P(const KatzContext& ctx, Elem j, Elem k);

/// V(j) = tau^-1 phi(j) sum_{N z = a} M8(z) psi2(j^2 z)
Complex katz_V(const KatzContext& ctx, Elem j);
/// V(j) with the norm fiber found by scanning F_{q^2}.
Complex katz_V_scan(const KatzContext& ctx, Elem j);

/// V(j) for every j, indexed by the packed element value.
std::vector<Complex> katz_V_table(const KatzContext& ctx);

/// P(j,k) for every pair, row-major by packed values.
class PTable {
 public:
  explicit PTable(const KatzContext& ctx);
  std::uint64_t q() const { return q_; }
  Complex operator()(Elem j, Elem k) const { return values_[j.v * q_ + k.v]; }

 private:
  std::uint64_t q_;
  std::vector<Complex> values_;
};

/// S(chi) = sum_{j != 0} chi(j) V(j)
Complex mellin_S(const KatzContext& ctx, const MultChar& chi);
Complex mellin_S(const std::vector<Complex>& v_table, const Field& f, const MultChar& chi);
/// Gauss-sum evaluation of S(chi): zero for even chi, otherwise
/// conj(nu)(a) tau^-1 G2(nuN M8) + (phi conj(nu))(a) tau^-1 G2(nuN M8^5) with chi = phi nu^4.
Complex mellin_S_closed(const KatzContext& ctx, const MultChar& chi);

/// S(chi1, chi2) computed as S(chi1) S(chi2).
Complex double_mellin_S(const KatzContext& ctx, const MultChar& chi1, const MultChar& chi2);
/// sum_{j,k != 0} chi1(j) chi2(k) V(j) V(k), literally.
Complex double_mellin_S_literal(const std::vector<Complex>& v_table, const Field& f, const MultChar& chi1,
                                const MultChar& chi2);
/// Jacobi-sum evaluation of S(chi1, chi2); zero when either character is even.
Complex double_mellin_S_closed(const KatzContext& ctx, const MultChar& chi1, const MultChar& chi2);

/// h(D,j) = sum_{x != 0} D(x) phi(1-x) (phi conj(D)^2)(x(j+1)^2 + (j-1)^2), j != 0.
Complex katz_h(const MultChar& d, Elem j);
/// Closed forms: j = +-1 gives -phi(j) conj(D)(16) J(D,phi); trivial D gives 0;
/// otherwise G(phi) G(D)^2 / G(phi D^2) conj(D)^4(j-1) 2F1(D, D^2 phi; D phi | -((j+1)/(j-1))^2).
Complex katz_h_closed(const MultChar& d, Elem j);

/// T(chi1, chi2) = sum_{j,k != 0} chi1(j) chi2(k) P(j,k), literally from a P table.
Complex double_mellin_T(const PTable& p, const Field& f, const MultChar& chi1, const MultChar& chi2);
Complex double_mellin_T(const KatzContext& ctx, const MultChar& chi1, const MultChar& chi2);
/// Evaluation of T through h and delta terms; zero when either character is even.
Complex double_mellin_T_closed(const KatzContext& ctx, const MultChar& chi1, const MultChar& chi2);

/// W(D) = sum_{j != 0} (phi nu1^4)(j) h(D,j)
Complex katz_W(const MultChar& d, const MultChar& nu1);
/// W(eps) = 2; otherwise -G(phi) G(D)^2 / (q G(phi D^2)) * Y(D).
Complex katz_W_closed(const KatzContext& ctx, const MultChar& d, const MultChar& nu1);

/// Y(D) = sum_{j != 0} nu1^4(j) R(D,j)
Complex katz_Y(const KatzContext& ctx, const MultChar& d, const MultChar& nu1);
/// J2(nu1N M8, conj(D)N) + J2(nu1N M8^5, conj(D)N)
Complex katz_Y_closed(const KatzContext& ctx, const MultChar& d, const MultChar& nu1);

/// sum_{j,x != 0} (phi nu^4)(j) phi(x) phi(1-x) phi(x(j+1)^2 + (j-1)^2)
Complex weighted_h_double_sum(const MultChar& nu);
/// J2(nuN M8, phiN) + J2(nuN M8^5, phiN)
Complex weighted_h_double_sum_closed(const KatzContext& ctx, const MultChar& nu);

struct UV {
  std::int64_t u;
  std::int64_t v;
};
/// q^2 = u^2 + 2 v^2 with v > 0, p not dividing u, and u = -1 (mod 8). Requires q = 3 (mod 8).
UV uv_decomposition(std::uint64_t q, std::uint64_t p);
/// Value of the weighted h double sum at nu = eps: 2q when q = 7 (mod 8), 2u when q = 3 (mod 8).
std::int64_t weighted_h_double_sum_expected(std::uint64_t q, std::uint64_t p);

/// q = c^2 + 2 d^2 with c, d >= 0 and p not dividing c.
UV cd_decomposition(std::uint64_t q, std::uint64_t p);

/// Z = sum_{j != 0} phi(j) h(phi, j), over the field the group lives on.
Complex z_sum(const CharGroup& base);
/// Z for q = 1 (mod 4): 0 if q = 5 (mod 8); 4q if p = 5, 7 (mod 8); 4c^2 if p = 1, 3 (mod 8).
std::int64_t z_sum_expected(std::uint64_t q, std::uint64_t p);

/// Both sides of the S = T reduction for D = mu phi^i:
/// q / G2(conj(D)N) * Y(D)  and  G(phi D^2)/G(phi) * (W(D) + 2(q-1) delta(D)).
Complex mellin_bridge_lhs(const KatzContext& ctx, const MultChar& d, const MultChar& nu1);
Complex mellin_bridge_rhs(const KatzContext& ctx, const MultChar& d, const MultChar& nu1);

/// P(j,k) = V(j)V(k) at every (j,k) in F_q^2, plus S(chi1,chi2) = T(chi1,chi2)
/// for every pair of characters.
VerificationReport verify_master_identity(const KatzContext& ctx, const TolerancePolicy& tol);

/// The reduced S = T equality for every D = mu phi^i arising from odd pairs. Independent of a.
VerificationReport verify_mellin_bridge(const KatzContext& ctx, const TolerancePolicy& tol);

}  // namespace charsum
