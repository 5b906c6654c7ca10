#pragma once

// Built-in worked examples: contracted ideals, lexsegment ideals, an
// integral-closure filtration and three hypersurface filtrations.  Each
// example recomputes its expected values from scratch and reports PASS/FAIL
// per value, quoting the statement it reproduces.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redlab/io.hpp"
#include "redlab/reduction_search.hpp"

namespace redlab {

struct RegistryOptions {
  std::uint64_t seed = 1;
  std::int64_t coeff_bound = kDefaultCoeffBound;
  unsigned attempts = kDefaultAttempts;
};

struct CheckResult {
  std::string label;
  std::string source;  // the statement being reproduced
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ExampleRun {
  std::vector<CheckResult> checks;
  /// Every reduction equation certified while running (for replay tests).
  std::vector<ReductionCertificate> certificates;
  bool all_passed() const;
};

struct ExampleRecord {
  std::string id;
  std::string title;
  std::string location;
  /// Default filtration (with reduction ideal when one is attached).
  std::function<FiltrationFile()> filtration;
  std::function<ExampleRun(const RegistryOptions&)> run;
};

const std::vector<ExampleRecord>& registry();
/// nullptr for an unknown id.
const ExampleRecord* find_example(const std::string& id);
std::vector<std::string> example_ids();

// Builders shared with the command line and the tests.

/// I = (x, y^2), J = (y, x^2) in Q[x,y].
std::pair<MonomialIdeal, MonomialIdeal> counter_ideals();
/// Lexsegment I = (x, y^2) (p = 1) and J = (x^2, xy, y^3) (q = 2).
std::pair<MonomialIdeal, MonomialIdeal> lexsegment_ideals();
/// (x^2, y^2, u) in Q[x,y,u].
MonomialIdeal closure_example_ideal();

/// {(I^k)* = m^{k+1} + I^k}, I = (y,z), in Q[x,y,z]/(x^3+y^3+z^3), J = (y,z).
FiltrationFile tight_cubic_filtration(unsigned n_max);
/// {m̄^n = I^n + z I^{n-2}}, I = (x,y), in Q[x,y,z]/(x^4+y^4+z^2), J = (x,y).
FiltrationFile quartic_z2_filtration(unsigned n_max);
/// {m̄^n = (x^n, x^{n-2} y)} (m̄ = m), in Q[x,y]/(x^4+y^2), J = (x).
FiltrationFile quartic_y2_filtration(unsigned n_max);

}  // namespace redlab
