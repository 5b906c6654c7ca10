#pragma once

// Randomized realization of "general elements" and the searches for
// reductions, joint reductions and reduction numbers.  Every positive answer
// comes with a certificate that replays through verify_reduction_equation.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "redlab/filtration.hpp"
#include "redlab/truncated_algebra.hpp"

namespace redlab {

inline constexpr std::int64_t kDefaultCoeffBound = 101;
inline constexpr unsigned kDefaultAttempts = 3;

/// Seeded stream of integer coefficient vectors, uniform in [-B, B]^k with
/// the zero vector rejected.
class GeneralElementSampler {
 public:
  explicit GeneralElementSampler(std::uint64_t seed, std::int64_t coeff_bound = kDefaultCoeffBound,
                                 unsigned max_attempts = kDefaultAttempts);

  std::uint64_t seed() const { return seed_; }
  std::int64_t coeff_bound() const { return coeff_bound_; }
  unsigned max_attempts() const { return max_attempts_; }

  std::vector<Integer> draw(std::size_t k, std::int64_t bound);

 private:
  std::uint64_t seed_;
  std::int64_t coeff_bound_;
  unsigned max_attempts_;
  std::mt19937_64 engine_;
};

/// A sampled element together with its coefficients over the generators it
/// was drawn from.
struct SampledElement {
  std::vector<Integer> coefficients;
  PolyElement element;

  bool operator==(const SampledElement&) const = default;
};

/// r independent combinations of gens with coefficients in [-bound, bound].
/// Throws HypothesisError when r > 0 and gens is empty.
std::vector<SampledElement> sample_elements(const std::vector<PolyElement>& gens, std::size_t r,
                                            GeneralElementSampler& sampler, std::int64_t bound);

enum class EquationKind { reduction, joint_reduction, reduction_number };
std::string to_string(EquationKind kind);
EquationKind equation_kind_from_string(const std::string& s);

/// One summand (x_{i1}, ..., x_{ir_i}) * I_{n - e_i}.  `source_gens` are the
/// generators of I_{e_i} that the sampled coefficients refer to.
struct CertificateSummand {
  std::vector<PolyElement> source_gens;
  std::vector<SampledElement> elements;
  std::vector<PolyElement> ideal_gens;

  bool operator==(const CertificateSummand&) const = default;
};

/// Self-contained record of one reduction equation check.
struct ReductionCertificate {
  EquationKind kind = EquationKind::reduction;
  std::size_t nvars = 0;
  std::vector<std::string> names;
  std::optional<PolyElement> relation;
  MultiIndex n;
  MultiIndex r;
  std::vector<PolyElement> target_gens;
  std::vector<CertificateSummand> summands;
  unsigned truncation_order = 0;
  unsigned d0 = 0;
  bool verified = false;
  std::vector<std::size_t> unreached;
  std::uint64_t seed = 0;
  unsigned attempt = 0;            // 1-based attempt that produced this record; 0 when not sampled
  std::int64_t coeff_bound = 0;    // bound used on that attempt
  bool forced = false;             // gates were bypassed
  std::vector<std::string> gate_notes;
  std::vector<std::string> user_assertions;  // hypotheses asserted, never checked

  bool operator==(const ReductionCertificate&) const = default;
};

struct SearchOptions {
  bool force = false;
  /// Box for the fiber-cone scan of non-power filtrations; defaults to n.
  std::optional<MultiIndex> fibercone_box;
  std::vector<std::string> user_assertions;
};

/// Searches for sum_i (x_{i1}..x_{ir_i}) I_{n-e_i} = I_n with x_{ij} general
/// in I_{e_i}.  Throws GateRefusedError when the generator-count bound is not
/// beaten or (for non-power filtrations) n is not >= a + 1, unless forced.
/// After max_attempts failures returns a certificate with verified = false.
ReductionCertificate find_joint_reduction(const Filtration& f, const MultiIndex& n, const MultiIndex& r,
                                          GeneralElementSampler& sampler, const SearchOptions& options = {});

/// Rank-one case: (x_1..x_r) I_{n-1} = I_n.
ReductionCertificate find_reduction(const Filtration& f, unsigned n, unsigned r, GeneralElementSampler& sampler,
                                    const SearchOptions& options = {});

/// Certificate for J I_{m-1} = I_m with the given elements of I_1.
ReductionCertificate check_reduction_step(const Filtration& f, const std::vector<PolyElement>& j_elements,
                                          unsigned m);

struct ReductionNumberReport {
  std::optional<unsigned> value;       // least n0 with J I_{m-1} = I_m for all m in [n0+1, n_max]
  unsigned n_max = 0;
  std::vector<unsigned> failing;       // degrees m where the equation fails
  bool monotone = true;                // once the equation holds it keeps holding in the window
  std::vector<ReductionCertificate> steps;  // one per m = 1..n_max
  /// One line per depth/equimultiplicity hypothesis under which a bound on
  /// the reduction number is predicted, saying whether the user asserted it.
  std::vector<std::string> hypothesis_notes;
};

/// Identifiers accepted in user assertions for reduction-number runs.
const std::vector<std::string>& reduction_number_hypotheses();

/// Reduction number of a rank-one filtration with respect to (j_elements),
/// exact only up to n_max.  Throws HypothesisError unless (j_elements) ⊆ I_1.
ReductionNumberReport reduction_number(const Filtration& f, const std::vector<PolyElement>& j_elements,
                                       unsigned n_max, const std::vector<std::string>& user_assertions = {});

/// Re-runs the equation check recorded in a certificate.  Throws
/// InvalidSummandError if a stored element disagrees with its coefficients.
Verdict replay(const ReductionCertificate& cert);

}  // namespace redlab
