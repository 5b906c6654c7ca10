#include "redlab/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "redlab/kernels.hpp"
#include "redlab/linear_feasibility.hpp"

namespace redlab {

namespace {

void check_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("ideals in " + std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
}

// Keeps every candidate not divisible by an earlier one.  Candidates are
// visited by increasing total degree, so a proper divisor is always seen
// before anything it divides.
std::vector<ExponentVector> minimal_subset(std::vector<ExponentVector> candidates, std::size_t nvars) {
  std::sort(candidates.begin(), candidates.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto da = a.total(), db = b.total();
    return da != db ? da < db : a < b;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  kernels::PackedMonomials kept(nvars, candidates.size());
  std::vector<ExponentVector> out;
  for (const auto& c : candidates) {
    if (kernels::any_divides(kept, c)) continue;
    kept.push_back(c);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::minimalize(std::span<const ExponentVector> raw, std::size_t nvars) {
  for (const auto& e : raw)
    if (e.size() != nvars)
      throw DimensionError("generator of length " + std::to_string(e.size()) + " in " +
                           std::to_string(nvars) + " variables");
  MonomialIdeal out(nvars);
  out.gens_ = minimal_subset(std::vector<ExponentVector>(raw.begin(), raw.end()), nvars);
  return out;
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  MonomialIdeal out(nvars);
  out.gens_.emplace_back(nvars);
  return out;
}

MonomialIdeal MonomialIdeal::maximal(std::size_t nvars) { return maximal_power(nvars, 1); }

MonomialIdeal MonomialIdeal::maximal_power(std::size_t nvars, unsigned k) {
  auto mons = monomials_of_degree(nvars, k);
  return minimalize(mons, nvars);
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().total() == 0;
}

std::vector<PolyElement> MonomialIdeal::as_polys() const {
  std::vector<PolyElement> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(PolyElement::monomial(g));
  return out;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.nvars());
  const kernels::PackedMonomials packed_b(b.gens());
  std::vector<ExponentVector> raw;
  raw.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens()) {
    auto shifted = kernels::multiply_all(packed_b, g);
    for (std::size_t j = 0; j < shifted.size(); ++j) raw.push_back(shifted.at(j));
  }
  return MonomialIdeal::minimalize(raw, a.nvars());
}

MonomialIdeal power(const MonomialIdeal& a, unsigned k) {
  MonomialIdeal out = MonomialIdeal::unit(a.nvars());
  for (unsigned i = 0; i < k; ++i) out = product(out, a);
  return out;
}

MonomialIdeal multi_power(std::span<const MonomialIdeal> ideals, const MultiIndex& n) {
  if (ideals.size() != n.size())
    throw DimensionError(std::to_string(ideals.size()) + " ideals but multi-index of length " +
                         std::to_string(n.size()));
  if (ideals.empty()) throw DimensionError("multi_power of an empty family");
  MonomialIdeal out = MonomialIdeal::unit(ideals.front().nvars());
  for (std::size_t i = 0; i < ideals.size(); ++i) out = product(out, power(ideals[i], n[i]));
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  std::vector<ExponentVector> raw(a.gens());
  raw.insert(raw.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::minimalize(raw, a.nvars());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.nvars());
  const kernels::PackedMonomials packed_b(b.gens());
  std::vector<ExponentVector> raw;
  for (const auto& g : a.gens()) {
    auto l = kernels::lcm_all(packed_b, g);
    for (std::size_t j = 0; j < l.size(); ++j) raw.push_back(l.at(j));
  }
  return MonomialIdeal::minimalize(raw, a.nvars());
}

std::size_t mu(const MonomialIdeal& a) { return a.gens().size(); }

std::uint64_t order(const MonomialIdeal& a) {
  if (a.is_zero()) throw HypothesisError("order of the zero ideal is undefined");
  std::uint64_t best = UINT64_MAX;
  for (const auto& g : a.gens()) best = std::min(best, g.total());
  return best;
}

bool contains_monomial(const MonomialIdeal& a, const ExponentVector& u) {
  if (u.size() != a.nvars()) throw DimensionError("monomial length mismatch");
  if (a.is_zero()) return false;
  return kernels::any_divides(kernels::PackedMonomials(a.gens()), u);
}

bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  const kernels::PackedMonomials packed(a.gens());
  return std::all_of(b.gens().begin(), b.gens().end(),
                     [&](const ExponentVector& g) { return kernels::any_divides(packed, g); });
}

std::optional<std::size_t> missing_pure_power(const MonomialIdeal& a) {
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    bool found = false;
    for (const auto& g : a.gens()) {
      bool pure = true;
      for (std::size_t w = 0; w < a.nvars(); ++w)
        if (w != v && g[w] != 0) pure = false;
      if (pure) found = true;
    }
    if (!found) return v;
  }
  return std::nullopt;
}

bool is_m_primary(const MonomialIdeal& a) { return !a.is_zero() && !missing_pure_power(a); }

unsigned m_power_inside(const MonomialIdeal& a) {
  if (a.is_zero()) throw HypothesisError("the zero ideal is not m-primary");
  if (auto v = missing_pure_power(a))
    throw HypothesisError("ideal is not m-primary: no pure power of variable " +
                          default_variable_names(a.nvars())[*v]);
  // With x_i^{k_i} in a, every monomial of degree sum(k_i - 1) + 1 lies in a,
  // so the scan terminates.
  const kernels::PackedMonomials packed(a.gens());
  for (unsigned d0 = 0;; ++d0) {
    auto mons = monomials_of_degree(a.nvars(), d0);
    bool all = std::all_of(mons.begin(), mons.end(),
                           [&](const ExponentVector& u) { return kernels::any_divides(packed, u); });
    if (all) return d0;
  }
}

bool np_membership(const MonomialIdeal& a, const ExponentVector& e) {
  if (a.is_zero()) throw HypothesisError("Newton polyhedron of the zero ideal is empty");
  if (e.size() != a.nvars()) throw DimensionError("exponent length mismatch");
  // Divisibility by a generator settles most points without the LP.
  if (contains_monomial(a, e)) return true;
  return in_upper_hull(a.gens(), e);
}

MonomialIdeal integral_closure(const MonomialIdeal& a) {
  if (a.is_zero()) throw HypothesisError("integral closure of the zero ideal");
  // Candidate box.  If u lies in conv(G) + R_{>=0}^d, write u = p + s with
  // p in conv(G); every p_i <= max_i := max_g g_i.  Lowering any u_i > max_i
  // to max_i keeps u >= p, so the lowered point is still in the polyhedron
  // and divides u.  Hence every minimal generator of the closure has
  // u_i <= max_i for all i.
  const std::size_t d = a.nvars();
  ExponentVector box(d);
  for (const auto& g : a.gens())
    for (std::size_t i = 0; i < d; ++i) box[i] = std::max(box[i], g[i]);

  std::vector<ExponentVector> members;
  ExponentVector cur(d);
  bool done = false;
  while (!done) {
    if (np_membership(a, cur)) members.push_back(cur);
    // odometer step over the box, last variable fastest
    done = true;
    for (std::size_t i = d; i-- > 0;) {
      if (cur[i] < box[i]) {
        ++cur[i];
        done = false;
        break;
      }
      cur[i] = 0;
    }
  }
  return MonomialIdeal::minimalize(members, d);
}

MonomialIdeal lexsegment_ideal(unsigned r, std::span<const unsigned> b) {
  if (b.size() > r)
    throw HypothesisError("lexsegment data needs p <= r (p = " + std::to_string(b.size()) +
                          ", r = " + std::to_string(r) + ")");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) throw HypothesisError("lexsegment exponents must be positive");
    if (i > 0 && b[i] <= b[i - 1]) throw HypothesisError("lexsegment exponents must be strictly increasing");
  }
  std::vector<ExponentVector> raw{ExponentVector{r, 0}};
  for (std::size_t i = 0; i < b.size(); ++i)
    raw.push_back(ExponentVector{static_cast<unsigned>(r - (i + 1)), b[i]});
  return MonomialIdeal::minimalize(raw, 2);
}

bool is_contracted(const MonomialIdeal& a) {
  if (a.nvars() != 2) throw HypothesisError("contractedness test needs a two-variable ring");
  if (!is_m_primary(a)) throw HypothesisError("contractedness test needs an m-primary ideal");
  return mu(a) == order(a) + 1;
}

std::string to_string(const MonomialIdeal& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "(0)";
  std::ostringstream os;
  os << '(';
  // Descending lex reads like x^3, x^2*y, ...
  for (auto it = a.gens().rbegin(); it != a.gens().rend(); ++it)
    os << (it == a.gens().rbegin() ? "" : ", ") << monomial_string(*it, names);
  os << ')';
  return os.str();
}

}  // namespace redlab
