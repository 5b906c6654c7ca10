#pragma once

// JSON file formats for rings, ideals, filtrations and certificates.
//
//   ring        {"vars": ["x","y"], "hypersurface": <poly>}      (hypersurface optional)
//   poly        [[num, den, [e_1..e_d]], ...]
//   ideal       {"monomial": [[e_1..e_d], ...]}  or  {"poly": [<poly>, ...]}
//   ideal file  {"ring": <ring>, "ideal": <ideal>}
//   filtration  {"ring": <ring>, "filtration": <body>, "reduction": <ideal>}  (reduction optional)
//     body      {"kind": "powers", "ideals": [<ideal>, ...]}
//               {"kind": "closure_powers", "ideal": <ideal>}
//               {"kind": "table", "limit": [..], "pieces": [{"n": [..], "ideal": <ideal>}, ...]}
//
// Integers of magnitude above 2^53 are written as decimal strings.  Input
// accepts strings of any length, or bare numbers that fit in 64 bits.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "redlab/filtration.hpp"
#include "redlab/monomial_ideal.hpp"
#include "redlab/reduction_search.hpp"
#include "redlab/ring.hpp"

namespace redlab {

/// Generators as written in a file.  Monomial lists are kept verbatim (not
/// minimalized) so that reading and writing round-trips exactly.
struct IdealSpec {
  enum class Form { monomial, poly };
  Form form = Form::monomial;
  std::vector<ExponentVector> exponents;  // Form::monomial
  std::vector<PolyElement> polys;         // Form::poly

  std::vector<PolyElement> generators(std::size_t nvars) const;
  /// Minimal monomial ideal when the form is monomial.
  std::optional<MonomialIdeal> as_monomial(std::size_t nvars) const;
  static IdealSpec from_monomial(const MonomialIdeal& ideal);
  static IdealSpec from_polys(std::vector<PolyElement> polys);

  bool operator==(const IdealSpec&) const = default;
};

struct IdealFile {
  Ring ring;
  IdealSpec ideal;

  bool operator==(const IdealFile&) const = default;
};

struct FiltrationFile {
  Ring ring;
  Filtration::Kind kind = Filtration::Kind::powers;
  std::vector<IdealSpec> ideals;          // powers; closure_powers uses ideals[0]
  std::optional<MultiIndex> limit;        // table
  std::map<MultiIndex, IdealSpec> pieces; // table
  std::optional<IdealSpec> reduction;

  /// Builds (and, for tables, validates) the filtration.
  Filtration build(unsigned m_power_cap = kDefaultMPowerCap) const;

  bool operator==(const FiltrationFile&) const = default;
};

IdealFile parse_ideal_file(const std::string& text);
std::string serialize(const IdealFile& file);

FiltrationFile parse_filtration_file(const std::string& text);
std::string serialize(const FiltrationFile& file);

ReductionCertificate parse_certificate(const std::string& text);
std::string serialize(const ReductionCertificate& cert);

/// Report files hold the verdict plus every per-degree certificate.
std::string serialize(const ReductionNumberReport& report);
ReductionNumberReport parse_reduction_number_report(const std::string& text);

/// True when the text is a reduction-number report rather than a single
/// certificate.
bool is_report_document(const std::string& text);

/// Whole file as a string; Error when it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace redlab
