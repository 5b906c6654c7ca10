#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "redlab/ring.hpp"

namespace redlab {

/// Monomial ideal in a polynomial ring with a fixed number of variables,
/// represented by its unique minimal monomial generating set (sorted lex
/// ascending).  An empty generating set is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

  /// Minimal generators of the ideal spanned by `raw`.
  static MonomialIdeal minimalize(std::span<const ExponentVector> raw, std::size_t nvars);
  static MonomialIdeal minimalize(std::initializer_list<ExponentVector> raw, std::size_t nvars) {
    return minimalize(std::span<const ExponentVector>(raw.begin(), raw.size()), nvars);
  }
  static MonomialIdeal unit(std::size_t nvars);
  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars); }
  /// The maximal ideal (x_1, ..., x_d).
  static MonomialIdeal maximal(std::size_t nvars);
  /// m^k
  static MonomialIdeal maximal_power(std::size_t nvars, unsigned k);

  std::size_t nvars() const { return nvars_; }
  const std::vector<ExponentVector>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool operator==(const MonomialIdeal& other) const = default;

  /// Generators as polynomials with coefficient 1.
  std::vector<PolyElement> as_polys() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned k);
/// I_1^{n_1} ... I_s^{n_s}
MonomialIdeal multi_power(std::span<const MonomialIdeal> ideals, const MultiIndex& n);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

std::size_t mu(const MonomialIdeal& a);
/// m-adic order: minimum generator degree.  Throws HypothesisError for the
/// zero ideal.
std::uint64_t order(const MonomialIdeal& a);

bool contains_monomial(const MonomialIdeal& a, const ExponentVector& u);
/// a ⊇ b
bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

/// Index of a variable with no pure power in `a`, if any.
std::optional<std::size_t> missing_pure_power(const MonomialIdeal& a);
bool is_m_primary(const MonomialIdeal& a);
/// Smallest d0 with m^{d0} ⊆ a.  Throws HypothesisError naming a variable
/// without pure power when a is not m-primary.
unsigned m_power_inside(const MonomialIdeal& a);

/// Whether e lies in the Newton polyhedron conv(gens) + R_{>=0}^d, decided
/// by exact rational linear feasibility.
bool np_membership(const MonomialIdeal& a, const ExponentVector& e);
MonomialIdeal integral_closure(const MonomialIdeal& a);

/// (x^r, x^{r-1} y^{b_1}, ..., x^{r-p} y^{b_p}) in two variables.
MonomialIdeal lexsegment_ideal(unsigned r, std::span<const unsigned> b);
/// mu(I) == order(I) + 1 for an m-primary ideal of k[x,y].
bool is_contracted(const MonomialIdeal& a);

std::string to_string(const MonomialIdeal& a, const std::vector<std::string>& names);

}  // namespace redlab
