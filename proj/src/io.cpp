#include "redlab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace redlab {

using nlohmann::json;

namespace {

// 2^53: integers beyond this magnitude are not exact in IEEE doubles, so
// they travel as strings.
const Integer kExactLimit("9007199254740992");

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("at top level") : "at " + path) + ": " + what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

// --- integers --------------------------------------------------------------

json integer_json(const Integer& v) {
  if (abs(v) <= kExactLimit) {
    if (v.fits_slong_p()) return json(v.get_si());
  }
  return json(v.get_str());
}

json integer_json(std::uint64_t v) {
  if (v <= 9007199254740992ULL) return json(v);
  return json(std::to_string(v));
}

Integer parse_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                    s != "-";
    if (!ok) fail(path, "'" + s + "' is not an integer");
    return Integer(s);
  }
  fail(path, "expected an integer");
}

std::uint64_t parse_u64(const json& j, const std::string& path) {
  const Integer v = parse_integer(j, path);
  if (v < 0 || v > Integer("18446744073709551615")) fail(path, "expected a non-negative 64-bit integer");
  return std::stoull(v.get_str());
}

unsigned parse_unsigned(const json& j, const std::string& path) {
  const Integer v = parse_integer(j, path);
  if (v < 0 || !v.fits_uint_p()) fail(path, "expected a non-negative integer");
  return static_cast<unsigned>(v.get_ui());
}

std::int64_t parse_i64(const json& j, const std::string& path) {
  const Integer v = parse_integer(j, path);
  if (!v.fits_slong_p()) fail(path, "integer out of range");
  return v.get_si();
}

bool parse_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::string parse_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> parse_strings(const json& j, const std::string& path) {
  std::vector<std::string> out;
  const auto& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(parse_string(a[i], path + "/" + std::to_string(i)));
  return out;
}

// --- index vectors and polynomials ----------------------------------------

template <class V>
V parse_index_vector(const json& j, const std::string& path, std::optional<std::size_t> length) {
  const auto& a = array_at(j, path);
  if (length && a.size() != *length)
    fail(path, "expected " + std::to_string(*length) + " entries, found " + std::to_string(a.size()));
  std::vector<std::uint32_t> entries;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned v = parse_unsigned(a[i], path + "/" + std::to_string(i));
    entries.push_back(v);
  }
  return V(std::move(entries));
}

template <class V>
json index_vector_json(const V& v) {
  json a = json::array();
  for (auto e : v) a.push_back(e);
  return a;
}

json poly_json(const PolyElement& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms())
    a.push_back(json::array({integer_json(Integer(c.get_num())), integer_json(Integer(c.get_den())),
                             index_vector_json(e)}));
  return a;
}

PolyElement parse_poly(const json& j, std::size_t nvars, const std::string& path) {
  const auto& a = array_at(j, path);
  PolyElement p(nvars);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string tp = path + "/" + std::to_string(i);
    const auto& t = array_at(a[i], tp);
    if (t.size() != 3) fail(tp, "a term is [numerator, denominator, exponents]");
    const Integer num = parse_integer(t[0], tp + "/0");
    const Integer den = parse_integer(t[1], tp + "/1");
    if (den == 0) fail(tp + "/1", "denominator is zero");
    Rational c(num, den);
    c.canonicalize();
    p.add_term(parse_index_vector<ExponentVector>(t[2], tp + "/2", nvars), c);
  }
  return p;
}

json polys_json(const std::vector<PolyElement>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(poly_json(p));
  return a;
}

std::vector<PolyElement> parse_polys(const json& j, std::size_t nvars, const std::string& path) {
  std::vector<PolyElement> out;
  const auto& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(parse_poly(a[i], nvars, path + "/" + std::to_string(i)));
  return out;
}

// --- rings and ideals -----------------------------------------------------

json ring_json(const std::vector<std::string>& names, const std::optional<PolyElement>& relation) {
  json r = {{"vars", names}};
  if (relation) r["hypersurface"] = poly_json(*relation);
  return r;
}

Ring parse_ring(const json& j, const std::string& path) {
  Ring ring;
  ring.names = parse_strings(field(j, "vars", path), path + "/vars");
  ring.nvars = ring.names.size();
  if (ring.nvars == 0) fail(path + "/vars", "at least one variable is required");
  if (const json* h = optional_field(j, "hypersurface")) ring.relation = parse_poly(*h, ring.nvars, path + "/hypersurface");
  try {
    ring.validate();
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return ring;
}

json ideal_json(const IdealSpec& spec) {
  if (spec.form == IdealSpec::Form::monomial) {
    json a = json::array();
    for (const auto& e : spec.exponents) a.push_back(index_vector_json(e));
    return {{"monomial", a}};
  }
  return {{"poly", polys_json(spec.polys)}};
}

IdealSpec parse_ideal(const json& j, std::size_t nvars, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with 'monomial' or 'poly'");
  const json* mono = optional_field(j, "monomial");
  const json* poly = optional_field(j, "poly");
  if ((mono != nullptr) == (poly != nullptr)) fail(path, "exactly one of 'monomial' and 'poly' is required");
  IdealSpec spec;
  if (mono) {
    spec.form = IdealSpec::Form::monomial;
    const auto& a = array_at(*mono, path + "/monomial");
    for (std::size_t i = 0; i < a.size(); ++i)
      spec.exponents.push_back(
          parse_index_vector<ExponentVector>(a[i], path + "/monomial/" + std::to_string(i), nvars));
  } else {
    spec.form = IdealSpec::Form::poly;
    spec.polys = parse_polys(*poly, nvars, path + "/poly");
  }
  return spec;
}

const char* kind_name(Filtration::Kind k) {
  switch (k) {
    case Filtration::Kind::powers: return "powers";
    case Filtration::Kind::closure_powers: return "closure_powers";
    case Filtration::Kind::table: return "table";
  }
  return "powers";
}

// --- certificates ---------------------------------------------------------

json certificate_json(const ReductionCertificate& c) {
  json summands = json::array();
  for (const auto& s : c.summands) {
    json elements = json::array();
    for (const auto& e : s.elements) {
      json coeffs = json::array();
      for (const auto& v : e.coefficients) coeffs.push_back(integer_json(v));
      elements.push_back({{"coefficients", coeffs}, {"element", poly_json(e.element)}});
    }
    summands.push_back({{"source", polys_json(s.source_gens)}, {"elements", elements}, {"ideal", polys_json(s.ideal_gens)}});
  }
  return {
      {"kind", to_string(c.kind)},
      {"ring", ring_json(c.names, c.relation)},
      {"n", index_vector_json(c.n)},
      {"r", index_vector_json(c.r)},
      {"target", polys_json(c.target_gens)},
      {"summands", summands},
      {"truncation_order", c.truncation_order},
      {"d0", c.d0},
      {"verified", c.verified},
      {"unreached", c.unreached},
      {"seed", integer_json(c.seed)},
      {"attempt", c.attempt},
      {"coeff_bound", integer_json(Integer(static_cast<long>(c.coeff_bound)))},
      {"forced", c.forced},
      {"gate_notes", c.gate_notes},
      {"user_assertions", c.user_assertions},
  };
}

ReductionCertificate parse_certificate_json(const json& j, const std::string& path) {
  ReductionCertificate c;
  try {
    c.kind = equation_kind_from_string(parse_string(field(j, "kind", path), path + "/kind"));
  } catch (const ParseError& e) {
    fail(path + "/kind", e.what());
  }
  const Ring ring = parse_ring(field(j, "ring", path), path + "/ring");
  c.nvars = ring.nvars;
  c.names = ring.names;
  c.relation = ring.relation;
  c.n = parse_index_vector<MultiIndex>(field(j, "n", path), path + "/n", std::nullopt);
  c.r = parse_index_vector<MultiIndex>(field(j, "r", path), path + "/r", c.n.size());
  c.target_gens = parse_polys(field(j, "target", path), c.nvars, path + "/target");
  const auto& summands = array_at(field(j, "summands", path), path + "/summands");
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const std::string sp = path + "/summands/" + std::to_string(i);
    CertificateSummand s;
    s.source_gens = parse_polys(field(summands[i], "source", sp), c.nvars, sp + "/source");
    s.ideal_gens = parse_polys(field(summands[i], "ideal", sp), c.nvars, sp + "/ideal");
    const auto& elements = array_at(field(summands[i], "elements", sp), sp + "/elements");
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const std::string ep = sp + "/elements/" + std::to_string(k);
      SampledElement e;
      const auto& coeffs = array_at(field(elements[k], "coefficients", ep), ep + "/coefficients");
      for (std::size_t q = 0; q < coeffs.size(); ++q)
        e.coefficients.push_back(parse_integer(coeffs[q], ep + "/coefficients/" + std::to_string(q)));
      e.element = parse_poly(field(elements[k], "element", ep), c.nvars, ep + "/element");
      s.elements.push_back(std::move(e));
    }
    c.summands.push_back(std::move(s));
  }
  c.truncation_order = parse_unsigned(field(j, "truncation_order", path), path + "/truncation_order");
  c.d0 = parse_unsigned(field(j, "d0", path), path + "/d0");
  c.verified = parse_bool(field(j, "verified", path), path + "/verified");
  const auto& unreached = array_at(field(j, "unreached", path), path + "/unreached");
  for (std::size_t i = 0; i < unreached.size(); ++i)
    c.unreached.push_back(parse_unsigned(unreached[i], path + "/unreached/" + std::to_string(i)));
  c.seed = parse_u64(field(j, "seed", path), path + "/seed");
  c.attempt = parse_unsigned(field(j, "attempt", path), path + "/attempt");
  c.coeff_bound = parse_i64(field(j, "coeff_bound", path), path + "/coeff_bound");
  c.forced = parse_bool(field(j, "forced", path), path + "/forced");
  c.gate_notes = parse_strings(field(j, "gate_notes", path), path + "/gate_notes");
  c.user_assertions = parse_strings(field(j, "user_assertions", path), path + "/user_assertions");
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// IdealSpec
// ---------------------------------------------------------------------------

std::vector<PolyElement> IdealSpec::generators(std::size_t nvars) const {
  if (form == Form::poly) return polys;
  std::vector<PolyElement> out;
  for (const auto& e : exponents) {
    if (e.size() != nvars) throw DimensionError("monomial generator has the wrong length");
    out.push_back(PolyElement::monomial(e));
  }
  return out;
}

std::optional<MonomialIdeal> IdealSpec::as_monomial(std::size_t nvars) const {
  if (form != Form::monomial) return std::nullopt;
  return MonomialIdeal::minimalize(exponents, nvars);
}

IdealSpec IdealSpec::from_monomial(const MonomialIdeal& ideal) {
  IdealSpec s;
  s.form = Form::monomial;
  s.exponents = ideal.gens();
  return s;
}

IdealSpec IdealSpec::from_polys(std::vector<PolyElement> polys) {
  IdealSpec s;
  s.form = Form::poly;
  s.polys = std::move(polys);
  return s;
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

IdealFile parse_ideal_file(const std::string& text) {
  const json j = parse_json(text);
  IdealFile f;
  f.ring = parse_ring(field(j, "ring", ""), "/ring");
  f.ideal = parse_ideal(field(j, "ideal", ""), f.ring.nvars, "/ideal");
  return f;
}

std::string serialize(const IdealFile& file) {
  json j = {{"ring", ring_json(file.ring.names, file.ring.relation)}, {"ideal", ideal_json(file.ideal)}};
  return j.dump(2) + "\n";
}

FiltrationFile parse_filtration_file(const std::string& text) {
  const json j = parse_json(text);
  FiltrationFile f;
  f.ring = parse_ring(field(j, "ring", ""), "/ring");
  const std::size_t d = f.ring.nvars;
  const json& spec = field(j, "filtration", "");
  const std::string kind = parse_string(field(spec, "kind", "/filtration"), "/filtration/kind");
  if (kind == "powers") {
    f.kind = Filtration::Kind::powers;
    const auto& a = array_at(field(spec, "ideals", "/filtration"), "/filtration/ideals");
    if (a.empty()) fail("/filtration/ideals", "at least one ideal is required");
    for (std::size_t i = 0; i < a.size(); ++i)
      f.ideals.push_back(parse_ideal(a[i], d, "/filtration/ideals/" + std::to_string(i)));
  } else if (kind == "closure_powers") {
    f.kind = Filtration::Kind::closure_powers;
    f.ideals.push_back(parse_ideal(field(spec, "ideal", "/filtration"), d, "/filtration/ideal"));
  } else if (kind == "table") {
    f.kind = Filtration::Kind::table;
    const auto& pieces = array_at(field(spec, "pieces", "/filtration"), "/filtration/pieces");
    std::optional<std::size_t> rank;
    if (const json* lim = optional_field(spec, "limit")) {
      f.limit = parse_index_vector<MultiIndex>(*lim, "/filtration/limit", std::nullopt);
      rank = f.limit->size();
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const std::string pp = "/filtration/pieces/" + std::to_string(i);
      auto n = parse_index_vector<MultiIndex>(field(pieces[i], "n", pp), pp + "/n", rank);
      rank = n.size();
      if (n.total() == 0) fail(pp + "/n", "degree 0 is always the unit ideal and cannot be given");
      if (f.pieces.count(n)) fail(pp + "/n", "duplicate degree");
      f.pieces.emplace(n, parse_ideal(field(pieces[i], "ideal", pp), d, pp + "/ideal"));
    }
    if (!f.limit) {
      if (!rank) fail("/filtration/pieces", "a table needs at least one piece or an explicit limit");
      MultiIndex lim(*rank);
      for (const auto& [n, _] : f.pieces)
        for (std::size_t i = 0; i < *rank; ++i) lim[i] = std::max(lim[i], n[i]);
      f.limit = lim;
    }
  } else {
    fail("/filtration/kind", "unknown kind '" + kind + "' (expected powers, closure_powers or table)");
  }
  if (const json* red = optional_field(j, "reduction")) f.reduction = parse_ideal(*red, d, "/reduction");
  return f;
}

std::string serialize(const FiltrationFile& file) {
  json spec = {{"kind", kind_name(file.kind)}};
  switch (file.kind) {
    case Filtration::Kind::powers: {
      json a = json::array();
      for (const auto& i : file.ideals) a.push_back(ideal_json(i));
      spec["ideals"] = a;
      break;
    }
    case Filtration::Kind::closure_powers:
      spec["ideal"] = ideal_json(file.ideals.at(0));
      break;
    case Filtration::Kind::table: {
      if (file.limit) spec["limit"] = index_vector_json(*file.limit);
      json a = json::array();
      for (const auto& [n, ideal] : file.pieces) a.push_back({{"n", index_vector_json(n)}, {"ideal", ideal_json(ideal)}});
      spec["pieces"] = a;
      break;
    }
  }
  json j = {{"ring", ring_json(file.ring.names, file.ring.relation)}, {"filtration", spec}};
  if (file.reduction) j["reduction"] = ideal_json(*file.reduction);
  return j.dump(2) + "\n";
}

Filtration FiltrationFile::build(unsigned m_power_cap) const {
  const std::size_t d = ring.nvars;
  switch (kind) {
    case Filtration::Kind::powers: {
      std::vector<MonomialIdeal> ideals;
      for (const auto& spec : this->ideals) {
        auto m = spec.as_monomial(d);
        if (!m) throw UnsupportedError("power filtrations take monomial ideals");
        ideals.push_back(*m);
      }
      auto f = Filtration::powers(ring, std::move(ideals));
      f.set_m_power_cap(m_power_cap);
      return f;
    }
    case Filtration::Kind::closure_powers: {
      auto m = ideals.at(0).as_monomial(d);
      if (!m) throw UnsupportedError("integral closure is computed only for monomial ideals");
      return Filtration::closure_powers(ring, *m);
    }
    case Filtration::Kind::table: {
      std::map<MultiIndex, std::vector<PolyElement>> table;
      for (const auto& [n, spec] : pieces) table.emplace(n, spec.generators(d));
      return Filtration::table(ring, std::move(table), *limit, m_power_cap);
    }
  }
  throw UnsupportedError("unknown filtration kind");
}

ReductionCertificate parse_certificate(const std::string& text) { return parse_certificate_json(parse_json(text), ""); }

std::string serialize(const ReductionCertificate& cert) { return certificate_json(cert).dump(2) + "\n"; }

std::string serialize(const ReductionNumberReport& report) {
  json steps = json::array();
  for (const auto& s : report.steps) steps.push_back(certificate_json(s));
  json j = {
      {"document", "reduction-number-report"},
      {"value", report.value ? json(*report.value) : json(nullptr)},
      {"n_max", report.n_max},
      {"failing", report.failing},
      {"monotone", report.monotone},
      {"hypothesis_notes", report.hypothesis_notes},
      {"steps", steps},
  };
  return j.dump(2) + "\n";
}

ReductionNumberReport parse_reduction_number_report(const std::string& text) {
  const json j = parse_json(text);
  if (!is_report_document(text)) fail("", "not a reduction-number report");
  ReductionNumberReport r;
  if (const json* v = optional_field(j, "value")) r.value = parse_unsigned(*v, "/value");
  r.n_max = parse_unsigned(field(j, "n_max", ""), "/n_max");
  const auto& failing = array_at(field(j, "failing", ""), "/failing");
  for (std::size_t i = 0; i < failing.size(); ++i)
    r.failing.push_back(parse_unsigned(failing[i], "/failing/" + std::to_string(i)));
  r.monotone = parse_bool(field(j, "monotone", ""), "/monotone");
  r.hypothesis_notes = parse_strings(field(j, "hypothesis_notes", ""), "/hypothesis_notes");
  const auto& steps = array_at(field(j, "steps", ""), "/steps");
  for (std::size_t i = 0; i < steps.size(); ++i)
    r.steps.push_back(parse_certificate_json(steps[i], "/steps/" + std::to_string(i)));
  return r;
}

bool is_report_document(const std::string& text) {
  const json j = parse_json(text);
  const json* doc = j.is_object() ? optional_field(j, "document") : nullptr;
  return doc && doc->is_string() && doc->get<std::string>() == "reduction-number-report";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace redlab
