#pragma once

#include <vector>

#include "core/characters.hpp"

namespace charsum {

/// 2F1(A,B;C | x) = (eps(x)/q) sum_y B(y) (conj(B)C)(y-1) conj(A)(1-xy); zero at x = 0.
Complex hyp2f1(const MultChar& a, const MultChar& b, const MultChar& c, Elem x);

/// Binomial coefficient (A over B) = (B(-1)/q) J(A, conj(B)).
Complex binom(const MultChar& a, const MultChar& b);

/// {z in F_{q^2} : N(z) = c} for c != 0, enumerated as g2^(log c) times the
/// norm-one subgroup <g2^(q-1)>; always q+1 points.
std::vector<Elem> norm_fiber(const Tower& t, Elem c);
/// Same fiber by scanning all of F_{q^2}.
std::vector<Elem> norm_fiber_scan(const Tower& t, Elem c);

/// R(D,j) = sum_{N(z) = j^4} M8(z) (conj(D)N)(1-z). Requires q = 3 (mod 4), j != 0.
Complex norm_restricted_jacobi(const TowerChars& tc, const MultChar& m8, const MultChar& d, Elem j);
/// R(D,j) by a full scan of F_{q^2} instead of fiber enumeration.
Complex norm_restricted_jacobi_scan(const TowerChars& tc, const MultChar& m8, const MultChar& d, Elem j);

/// Closed form of R(D,j): -conj(D)(4) J(phi D^2, phi) for j = +-1, otherwise
/// -phi(j) q conj(D)^4(j-1) 2F1(D, D^2 phi; D phi | -((j+1)/(j-1))^2).
Complex norm_restricted_jacobi_closed(const TowerChars& tc, const MultChar& d, Elem j);

double norm_jacobi_identity_deviation(const TowerChars& tc, const MultChar& m8, const MultChar& d, Elem j);
bool check_norm_jacobi_identity(const TowerChars& tc, const MultChar& m8, const MultChar& d, Elem j, double tol);

}  // namespace charsum
