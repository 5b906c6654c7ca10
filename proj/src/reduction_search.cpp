#include "redlab/reduction_search.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "redlab/es_bounds.hpp"

namespace redlab {

namespace {

std::string show(const MultiIndex& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

PolyElement combine(const std::vector<Integer>& coeffs, const std::vector<PolyElement>& gens, std::size_t nvars) {
  PolyElement out(nvars);
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (coeffs[j] != 0) out = out + gens[j].scaled(Rational(coeffs[j]));
  return out;
}

std::vector<Summand> as_summands(const std::vector<CertificateSummand>& parts) {
  std::vector<Summand> out;
  for (const auto& p : parts) {
    Summand s;
    for (const auto& e : p.elements) s.elements.push_back(e.element);
    s.ideal_gens = p.ideal_gens;
    out.push_back(std::move(s));
  }
  return out;
}

// Bound for the given 1-based attempt: B, 2B, 4B, ... saturating.
std::int64_t attempt_bound(std::int64_t base, unsigned attempt) {
  std::int64_t b = base;
  for (unsigned i = 1; i < attempt; ++i) {
    if (b > std::numeric_limits<std::int64_t>::max() / 2) return std::numeric_limits<std::int64_t>::max() / 2;
    b *= 2;
  }
  return b;
}

}  // namespace

GeneralElementSampler::GeneralElementSampler(std::uint64_t seed, std::int64_t coeff_bound, unsigned max_attempts)
    : seed_(seed), coeff_bound_(coeff_bound), max_attempts_(max_attempts), engine_(seed) {
  if (coeff_bound <= 0) throw ConfigurationError("coefficient bound must be positive");
  if (max_attempts == 0) throw ConfigurationError("at least one sampling attempt is required");
}

std::vector<Integer> GeneralElementSampler::draw(std::size_t k, std::int64_t bound) {
  if (k == 0) throw HypothesisError("cannot draw a non-zero coefficient vector of length 0");
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<Integer> out(k);
  while (true) {
    bool nonzero = false;
    for (auto& c : out) {
      const std::int64_t v = dist(engine_);
      c = static_cast<long>(v);
      nonzero = nonzero || v != 0;
    }
    if (nonzero) return out;
  }
}

std::vector<SampledElement> sample_elements(const std::vector<PolyElement>& gens, std::size_t r,
                                            GeneralElementSampler& sampler, std::int64_t bound) {
  std::vector<SampledElement> out;
  if (r == 0) return out;
  if (gens.empty()) throw HypothesisError("cannot sample elements of an ideal with no generators");
  if (std::all_of(gens.begin(), gens.end(), [](const PolyElement& g) { return g.is_zero(); }))
    throw HypothesisError("cannot sample non-zero elements of the zero ideal");
  const std::size_t nvars = gens.front().nvars();
  while (out.size() < r) {
    auto coeffs = sampler.draw(gens.size(), bound);
    auto element = combine(coeffs, gens, nvars);
    // Linearly dependent generators can cancel; such draws are discarded.
    if (element.is_zero()) continue;
    out.push_back({std::move(coeffs), std::move(element)});
  }
  return out;
}

std::string to_string(EquationKind kind) {
  switch (kind) {
    case EquationKind::reduction: return "reduction";
    case EquationKind::joint_reduction: return "joint-reduction";
    case EquationKind::reduction_number: return "reduction-number";
  }
  return "reduction";
}

EquationKind equation_kind_from_string(const std::string& s) {
  if (s == "reduction") return EquationKind::reduction;
  if (s == "joint-reduction") return EquationKind::joint_reduction;
  if (s == "reduction-number") return EquationKind::reduction_number;
  throw ParseError("unknown equation kind '" + s + "'");
}

// ---------------------------------------------------------------------------
// Searches
// ---------------------------------------------------------------------------

ReductionCertificate find_joint_reduction(const Filtration& f, const MultiIndex& n, const MultiIndex& r,
                                          GeneralElementSampler& sampler, const SearchOptions& options) {
  if (n.size() != f.rank() || r.size() != f.rank())
    throw DimensionError("n and r must have one entry per filtration index (" + std::to_string(f.rank()) + ")");
  if (n.total() == 0) throw DimensionError("the degree n must satisfy |n| >= 1");

  ReductionCertificate cert;
  cert.kind = f.rank() == 1 ? EquationKind::reduction : EquationKind::joint_reduction;
  cert.nvars = f.ring().nvars;
  cert.names = f.ring().names;
  cert.relation = f.ring().relation;
  cert.n = n;
  cert.r = r;
  cert.seed = sampler.seed();
  cert.forced = options.force;
  cert.user_assertions = options.user_assertions;

  auto refuse = [&](const std::string& gate, const std::string& why) {
    if (!options.force) throw GateRefusedError(gate, why);
    cert.gate_notes.push_back(gate + ": " + why + " (bypassed by --force)");
  };

  const auto report = es_check(f.mu(n), n, r);
  {
    std::string text = "mu(I_" + show(n) + ") = " + report.mu_value.get_str() +
                       (report.triggered ? " < " : " >= ") + report.bound.get_str();
    if (report.triggered)
      cert.gate_notes.push_back("generator-count bound: " + text);
    else
      refuse("generator-count bound", text + ", bound not beaten");
  }

  if (f.kind() != Filtration::Kind::powers) {
    const MultiIndex box = options.fibercone_box.value_or(n);
    const auto fc = fibercone_gen_degrees(f, box);
    MultiIndex needed = fc.a_bar;
    for (std::size_t i = 0; i < needed.size(); ++i) ++needed[i];
    std::string text = "a = " + show(fc.a_bar) + " from degrees scanned in [0, " + show(box) + "], need n = " +
                       show(n) + " >= " + show(needed);
    if (fc.boundary_warning) text += "; generator on the scan boundary, a may be underestimated";
    if (needed.dominated_by(n))
      cert.gate_notes.push_back("fiber-cone degree bound: " + text);
    else
      refuse("fiber-cone degree bound", text);
  }

  if (r.total() == 0) throw GateRefusedError("shape", "r = 0 requests no elements, so no equation can be formed");

  const Piece& target = f.piece(n);
  const unsigned d0 = f.m_power_degree(n);
  const TruncatedAlgebra& algebra = f.algebra(d0 + 1);
  cert.target_gens = target.gens;
  cert.truncation_order = algebra.truncation_order();
  cert.d0 = d0;

  for (unsigned attempt = 1; attempt <= sampler.max_attempts(); ++attempt) {
    const std::int64_t bound = attempt_bound(sampler.coeff_bound(), attempt);
    cert.summands.clear();
    for (std::size_t i = 0; i < f.rank(); ++i) {
      if (r[i] == 0) continue;
      CertificateSummand part;
      part.source_gens = f.piece(MultiIndex::unit(f.rank(), i)).gens;
      part.elements = sample_elements(part.source_gens, r[i], sampler, bound);
      part.ideal_gens = f.shifted_piece(n, i).gens;
      cert.summands.push_back(std::move(part));
    }
    const auto verdict = verify_reduction_equation(algebra, cert.target_gens, as_summands(cert.summands), d0);
    cert.attempt = attempt;
    cert.coeff_bound = bound;
    cert.verified = verdict.holds;
    cert.unreached = verdict.unreached;
    if (verdict.holds) break;
  }
  return cert;
}

ReductionCertificate find_reduction(const Filtration& f, unsigned n, unsigned r, GeneralElementSampler& sampler,
                                    const SearchOptions& options) {
  if (f.rank() != 1) throw DimensionError("find_reduction needs a filtration indexed by N");
  auto cert = find_joint_reduction(f, MultiIndex{n}, MultiIndex{r}, sampler, options);
  cert.kind = EquationKind::reduction;
  return cert;
}

ReductionCertificate check_reduction_step(const Filtration& f, const std::vector<PolyElement>& j_elements,
                                          unsigned m) {
  if (f.rank() != 1) throw DimensionError("reduction steps need a filtration indexed by N");
  if (m == 0) throw DimensionError("reduction step degree must be at least 1");
  const MultiIndex n{m};
  ReductionCertificate cert;
  cert.kind = EquationKind::reduction_number;
  cert.nvars = f.ring().nvars;
  cert.names = f.ring().names;
  cert.relation = f.ring().relation;
  cert.n = n;
  cert.r = MultiIndex{static_cast<std::uint32_t>(j_elements.size())};
  cert.target_gens = f.piece(n).gens;

  CertificateSummand part;
  for (const auto& x : j_elements) part.elements.push_back({{}, x});
  part.ideal_gens = f.piece(MultiIndex{m - 1}).gens;
  cert.summands.push_back(std::move(part));

  cert.d0 = f.m_power_degree(n);
  const TruncatedAlgebra& algebra = f.algebra(cert.d0 + 1);
  cert.truncation_order = algebra.truncation_order();
  const auto verdict = verify_reduction_equation(algebra, cert.target_gens, as_summands(cert.summands), cert.d0);
  cert.verified = verdict.holds;
  cert.unreached = verdict.unreached;
  return cert;
}

const std::vector<std::string>& reduction_number_hypotheses() {
  static const std::vector<std::string> ids{"good-filtration", "equimultiple", "grade-gr", "cm-fiber-cone"};
  return ids;
}

ReductionNumberReport reduction_number(const Filtration& f, const std::vector<PolyElement>& j_elements,
                                       unsigned n_max, const std::vector<std::string>& user_assertions) {
  if (f.rank() != 1) throw DimensionError("reduction numbers need a filtration indexed by N");
  if (n_max == 0) throw ConfigurationError("n_max must be at least 1");
  if (j_elements.empty()) throw HypothesisError("the reduction J needs at least one element");
  for (const auto& a : user_assertions) {
    const auto& known = reduction_number_hypotheses();
    if (std::find(known.begin(), known.end(), a) == known.end())
      throw ConfigurationError("unknown hypothesis '" + a + "'");
  }

  const MultiIndex one{1};
  const unsigned d0_1 = f.m_power_degree(one);
  const auto inside = verify_containment_in_primary(f.algebra(std::max(d0_1, 1u)), j_elements, f.piece(one).gens, d0_1);
  if (!inside.holds) throw HypothesisError("J is not contained in I_1");

  ReductionNumberReport report;
  report.n_max = n_max;
  bool seen_hold = false;
  for (unsigned m = 1; m <= n_max; ++m) {
    auto step = check_reduction_step(f, j_elements, m);
    step.user_assertions = user_assertions;
    if (step.verified) {
      seen_hold = true;
    } else {
      report.failing.push_back(m);
      if (seen_hold) report.monotone = false;
    }
    report.steps.push_back(std::move(step));
  }
  if (report.failing.empty())
    report.value = 0;
  else if (report.failing.back() < n_max)
    report.value = report.failing.back();

  for (const auto& h : reduction_number_hypotheses()) {
    const bool asserted = std::find(user_assertions.begin(), user_assertions.end(), h) != user_assertions.end();
    report.hypothesis_notes.push_back(h + (asserted ? ": asserted by user (unchecked)" : ": NOT asserted"));
  }
  return report;
}

Verdict replay(const ReductionCertificate& cert) {
  for (const auto& part : cert.summands) {
    for (const auto& e : part.elements) {
      if (e.coefficients.empty()) continue;
      if (e.coefficients.size() != part.source_gens.size())
        throw InvalidSummandError("stored coefficient vector does not match its generator list");
      if (combine(e.coefficients, part.source_gens, cert.nvars) != e.element)
        throw InvalidSummandError("stored element disagrees with its coefficients");
    }
  }
  const auto algebra = TruncatedAlgebra::build(cert.nvars, cert.truncation_order, cert.relation);
  return verify_reduction_equation(algebra, cert.target_gens, as_summands(cert.summands), cert.d0);
}

}  // namespace redlab
