#include "redlab/ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace redlab {

ExponentVector mono_mul(const ExponentVector& a, const ExponentVector& b) { return a + b; }

std::uint64_t total_degree(const ExponentVector& a) { return a.total(); }

std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b) {
  a.check_length(b);
  return a <=> b;
}

bool divides(const ExponentVector& a, const ExponentVector& b) { return a.dominated_by(b); }

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  a.check_length(b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

namespace {

void fill_degree(std::size_t nvars, std::size_t pos, unsigned remaining, ExponentVector& cur,
                 std::vector<ExponentVector>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[pos] = k;
    fill_degree(nvars, pos + 1, remaining - k, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<ExponentVector> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  ExponentVector cur(nvars);
  fill_degree(nvars, 0, degree, cur, out);
  return out;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : e) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

PolyElement PolyElement::constant(std::size_t nvars, const Rational& c) {
  PolyElement p(nvars);
  p.add_term(ExponentVector(nvars), c);
  return p;
}

PolyElement PolyElement::monomial(const ExponentVector& e, const Rational& c) {
  PolyElement p(e.size());
  p.add_term(e, c);
  return p;
}

PolyElement PolyElement::from_terms(std::size_t nvars,
                                    const std::vector<std::pair<ExponentVector, Rational>>& terms) {
  PolyElement p(nvars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Rational PolyElement::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational PolyElement::constant_term() const { return coefficient(ExponentVector(nvars_)); }

std::uint64_t PolyElement::order() const {
  std::uint64_t best = UINT64_MAX;
  for (const auto& [e, c] : terms_) best = std::min(best, e.total());
  return best;
}

bool PolyElement::is_monomial() const {
  return terms_.size() == 1 && terms_.begin()->second == 1;
}

void PolyElement::add_term(const ExponentVector& e, const Rational& c) {
  if (e.size() != nvars_)
    throw DimensionError("term has " + std::to_string(e.size()) + " variables, ring has " +
                         std::to_string(nvars_));
  // Accept non-canonical input such as mpq_class(2, -4).
  Rational v(c);
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

void PolyElement::check_dims(const PolyElement& other) const {
  if (nvars_ != other.nvars_)
    throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " variables");
}

PolyElement PolyElement::operator+(const PolyElement& other) const {
  check_dims(other);
  PolyElement out(*this);
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

PolyElement PolyElement::operator-(const PolyElement& other) const {
  check_dims(other);
  PolyElement out(*this);
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

PolyElement PolyElement::operator-() const { return scaled(-1); }

PolyElement PolyElement::operator*(const PolyElement& other) const {
  check_dims(other);
  PolyElement out(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

PolyElement PolyElement::scaled(const Rational& c) const {
  PolyElement out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

PolyElement PolyElement::shifted(const ExponentVector& shift) const {
  if (shift.size() != nvars_) throw DimensionError("shift length mismatch");
  PolyElement out(nvars_);
  for (const auto& [e, v] : terms_) out.terms_.emplace(e + shift, v);
  return out;
}

PolyElement poly_mul(const PolyElement& p, const PolyElement& q) { return p * q; }

std::vector<std::string> default_variable_names(std::size_t nvars) {
  static const char* small[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i)
    names.push_back(nvars <= 6 ? std::string(small[i]) : "x" + std::to_string(i + 1));
  return names;
}

std::string monomial_string(const ExponentVector& e, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
    if (e[i] > 1) os << '^' << e[i];
  }
  return first ? "1" : os.str();
}

std::string to_string(const PolyElement& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex term first reads most naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit_exponent = e.total() == 0;
    if (mag != 1 || unit_exponent) {
      os << mag.get_str();
      if (!unit_exponent) os << '*';
    }
    if (!unit_exponent) os << monomial_string(e, names);
  }
  return os.str();
}

}  // namespace redlab
