#pragma once

#include <iosfwd>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "core/characters.hpp"

namespace charsum {

/// G(A) = sum_y A(y) psi(y), over the field A lives on.
Complex gauss(const MultChar& a);

/// J(A,B) = sum_y A(y) B(1-y).
Complex jacobi(const MultChar& a, const MultChar& b);

/// Restriction of a character of F_{q^2} to F_q (index mod q-1).
MultChar restrict_to_base(const TowerChars& tc, const MultChar& beta);

/// E_2(beta): sum of beta over the affine line z + z^q = 1.
Complex eisenstein_E2(const TowerChars& tc, const MultChar& beta);

/// E(beta) = sum_{y in F_q} beta(1 + iy). Requires q = 3 (mod 4).
Complex eisenstein_E(const TowerChars& tc, const MultChar& beta);

// Deviation of each closed-form relation; the bool forms compare against tol.

/// |A(4) G(A) G(A phi) - G(A^2) G(phi)|
double hasse_davenport_product_deviation(const MultChar& a);
bool check_hasse_davenport_product(const MultChar& a, double tol);

/// max of |G2(CN) + G(C)^2| and |G2(CN) - G2((CN)^q)|.
double lifted_gauss_deviation(const TowerChars& tc, const MultChar& c);
bool check_lifted_gauss(const TowerChars& tc, const MultChar& c, double tol);

/// |G2(beta) - G2(beta^q)|
double frobenius_gauss_deviation(const TowerChars& tc, const MultChar& beta);

/// G2(CN M4) = G2(CN conj(M4)) = -(conj(C)^2 phi)(2) G(C^2 phi) G(phi). Requires q = 3 (mod 4).
double quartic_gauss_deviation(const TowerChars& tc, const MultChar& c);
bool check_quartic_gauss(const TowerChars& tc, const MultChar& c, double tol);

/// Memo of Gauss sums keyed by character index. Safe for concurrent use;
/// concurrent writers of the same key store identical values.
class GaussTable {
 public:
  explicit GaussTable(const CharGroup& group) : group_(&group) {}
  GaussTable(const GaussTable&) = delete;
  GaussTable& operator=(const GaussTable&) = delete;

  const CharGroup& group() const { return *group_; }
  Complex operator()(const MultChar& a) const;
  void fill() const;
  void insert(std::uint64_t index, Complex value) const;
  std::vector<std::pair<std::uint64_t, Complex>> entries() const;
  std::size_t size() const;

 private:
  const CharGroup* group_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::uint64_t, Complex> memo_;
};

/// CSV rows "field_order,char_index,re,im" with a header line.
void write_gauss_csv(std::ostream& out, const GaussTable& table);

struct GaussRow {
  std::uint64_t field_order;
  std::uint64_t char_index;
  Complex value;
};
/// Parses the CSV written above; throws Error(Corrupt) on malformed rows.
std::vector<GaussRow> read_gauss_csv(std::istream& in);

}  // namespace charsum
