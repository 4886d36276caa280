#pragma once

#include <vector>

#include "core/katz.hpp"
#include "core/report.hpp"
#include "harness/config.hpp"

namespace charsum::harness {

/// Values of a swept by a policy: every a in F_q^* (ordered by discrete log)
/// or the first n powers of the generator. Auto is exhaustive up to q = 50.
std::vector<Elem> a_values(const Tower& t, const ASweep& sweep);

// Each suite returns one report. Gauss tables are shared memos (see gauss_cache).
// Suites that do not depend on a leave a_index unset.

/// Gauss/Jacobi relations over F_q and F_{q^2}.
VerificationReport run_classical(const TowerChars& tc, const TowerGauss& gauss, const TolerancePolicy& tol);
/// Eisenstein sums over every character of F_{q^2}. Needs q = 3 (mod 4).
VerificationReport run_eisenstein(const TowerChars& tc, const TowerGauss& gauss, const TolerancePolicy& tol);
/// Binomial coefficients, 2F1 sanity bounds, norm fibers; R symmetry when q = 3 (mod 4).
VerificationReport run_hypergeometric(const TowerChars& tc, const TolerancePolicy& tol, bool oracle);
/// R(D,j) against its Jacobi/2F1 closed form for every (D, j).
VerificationReport run_norm_jacobi(const KatzContext& ctx, const TolerancePolicy& tol, bool oracle);
/// Single and double Mellin transforms of V and P at one a.
VerificationReport run_mellin(const KatzContext& ctx, const TolerancePolicy& tol, bool oracle);
/// h, W, Y and the weighted h double sums.
VerificationReport run_h_sums(const KatzContext& ctx, const TolerancePolicy& tol);
/// Z = sum phi(j) h(phi, j) against its closed value. Needs q = 1 (mod 4).
VerificationReport run_z_sum(const CharGroup& base, const TolerancePolicy& tol);
/// P = VV pointwise and S = T for all character pairs, at one a.
VerificationReport run_master(const KatzContext& ctx, const TolerancePolicy& tol);
/// The a-independent reduced S = T equality.
VerificationReport run_master_bridge(const KatzContext& ctx, const TolerancePolicy& tol);

}  // namespace charsum::harness
