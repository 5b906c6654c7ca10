#include "redlab/registry.hpp"

#include <sstream>

#include "redlab/es_bounds.hpp"

namespace redlab {

namespace {

MonomialIdeal mono(std::size_t nvars, std::initializer_list<ExponentVector> gens) {
  std::vector<ExponentVector> raw(gens);
  return MonomialIdeal::minimalize(raw, nvars);
}

PolyElement poly(std::size_t nvars, std::initializer_list<std::pair<ExponentVector, int>> terms) {
  std::vector<std::pair<ExponentVector, Rational>> t;
  for (const auto& [e, c] : terms) t.emplace_back(e, Rational(c));
  return PolyElement::from_terms(nvars, t);
}

std::string show(const MultiIndex& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

std::string show(const MonomialIdeal& a, const std::vector<std::string>& names) { return to_string(a, names); }

std::string show_value(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "none in window"; }

/// Accumulates checks; an exception inside a check becomes a FAIL line.
class Recorder {
 public:
  template <class Fn>
  void check(std::string label, std::string source, std::string expected, Fn&& fn) {
    CheckResult r{std::move(label), std::move(source), std::move(expected), "", false};
    try {
      auto [actual, pass] = fn();
      r.actual = std::move(actual);
      r.pass = pass;
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
      r.pass = false;
    }
    run.checks.push_back(std::move(r));
  }
  void keep(const ReductionCertificate& c) { run.certificates.push_back(c); }
  void keep(const ReductionNumberReport& rep) {
    for (const auto& s : rep.steps) run.certificates.push_back(s);
  }

  ExampleRun run;
};

std::string certificate_summary(const ReductionCertificate& c, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << (c.verified ? "verified" : "not verified") << " on attempt " << c.attempt << " (B = " << c.coeff_bound
     << ", N = " << c.truncation_order << ")";
  for (const auto& s : c.summands)
    for (const auto& e : s.elements) os << "; " << to_string(e.element, names);
  return os.str();
}

std::string report_summary(const ReductionNumberReport& r) {
  std::ostringstream os;
  os << show_value(r.value) << " (window 1.." << r.n_max << ", failing degrees:";
  if (r.failing.empty()) os << " none";
  for (auto m : r.failing) os << ' ' << m;
  os << ')';
  return os.str();
}

std::vector<PolyElement> reduction_gens(const FiltrationFile& file) {
  return file.reduction->generators(file.ring.nvars);
}

// ---------------------------------------------------------------------------
// Contracted ideals
// ---------------------------------------------------------------------------

FiltrationFile counter_file() {
  auto [i, j] = counter_ideals();
  FiltrationFile f;
  f.ring = Ring::polynomial(2);
  f.kind = Filtration::Kind::powers;
  f.ideals = {IdealSpec::from_monomial(i), IdealSpec::from_monomial(j)};
  return f;
}

ExampleRun run_counter(const RegistryOptions& opt) {
  Recorder rec;
  const auto names = default_variable_names(2);
  const auto [i, j] = counter_ideals();

  const auto ij_expected = mono(2, {{1, 1}, {3, 0}, {0, 3}});
  rec.check("IJ minimal generators", "IJ=(xy,x^3,y^3)", show(ij_expected, names), [&] {
    const auto ij = product(i, j);
    return std::pair{show(ij, names), ij == ij_expected};
  });

  rec.check("mu(IJ) against C(1+2,2)", "\\mu(IJ)=3 \\nless \\binom{1+2}{2}=3", "3, bound 3 not beaten", [&] {
    const auto rep = es_check(Integer(static_cast<unsigned long>(mu(product(i, j)))), MultiIndex{1}, MultiIndex{2});
    return std::pair{rep.mu_value.get_str() + ", bound " + rep.bound.get_str() +
                         (rep.triggered ? " beaten" : " not beaten"),
                     rep.mu_value == 3 && rep.bound == 3 && !rep.triggered};
  });

  const auto i2j2_expected = mono(2, {{2, 2}, {4, 1}, {1, 4}, {6, 0}, {0, 6}});
  rec.check("I^2 J^2 minimal generators", "I^2J^2 = (x^2y^2,x^4y,xy^4,x^6,y^6)", show(i2j2_expected, names), [&] {
    const std::vector<MonomialIdeal> fam{i, j};
    const auto p = multi_power(fam, MultiIndex{2, 2});
    return std::pair{show(p, names), p == i2j2_expected};
  });

  rec.check("mu(I^2 J^2) against C(2+2,2)", "\\mu(I^2J^2)=5 < \\binom{2+2}{2}=6", "5 < 6", [&] {
    const std::vector<MonomialIdeal> fam{i, j};
    const auto m = mu(multi_power(fam, MultiIndex{2, 2}));
    const auto rep = es_check(Integer(static_cast<unsigned long>(m)), MultiIndex{2}, MultiIndex{2});
    return std::pair{rep.mu_value.get_str() + (rep.triggered ? " < " : " >= ") + rep.bound.get_str(),
                     m == 5 && rep.triggered && rep.bound == 6};
  });

  rec.check("joint reduction at n=(1,1), r=(1,1)", "IJ=xJ+yI",
            "certified within " + std::to_string(opt.attempts) + " attempts", [&] {
              const auto f = counter_file().build();
              GeneralElementSampler sampler(opt.seed, opt.coeff_bound, opt.attempts);
              const auto cert = find_joint_reduction(f, MultiIndex{1, 1}, MultiIndex{1, 1}, sampler);
              rec.keep(cert);
              return std::pair{certificate_summary(cert, names), cert.verified};
            });

  rec.check("contracted joint reduction vector", "the joint reduction vector of $(I,J)$ with respect to $(x,y)$ is $(1,1)$",
            "(1,1)", [&] {
              const auto jrv = contracted_jrv(i, j);
              return std::pair{show(jrv.vector), jrv.vector == MultiIndex{1, 1}};
            });
  return rec.run;
}

// ---------------------------------------------------------------------------
// Lexsegment ideals
// ---------------------------------------------------------------------------

FiltrationFile lexsegment_file() {
  auto [i, j] = lexsegment_ideals();
  FiltrationFile f;
  f.ring = Ring::polynomial(2);
  f.kind = Filtration::Kind::powers;
  f.ideals = {IdealSpec::from_monomial(i), IdealSpec::from_monomial(j)};
  return f;
}

ExampleRun run_lexsegment(const RegistryOptions& opt) {
  Recorder rec;
  const auto names = default_variable_names(2);
  const auto f = lexsegment_file().build();

  rec.check("mu(I^n J^m) = pn + qm + 1 with p=1, q=2", "\\mu(I^nJ^m)= pn+qm+1", "n + 2m + 1 for 1 <= n,m <= 4", [&] {
    std::string bad;
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned m = 1; m <= 4; ++m)
        if (f.mu(MultiIndex{n, m}) != n + 2 * m + 1)
          bad += " (" + std::to_string(n) + "," + std::to_string(m) + ")=" + f.mu(MultiIndex{n, m}).get_str();
    return std::pair{bad.empty() ? std::string("n + 2m + 1 for 1 <= n,m <= 4") : "mismatch at" + bad, bad.empty()};
  });

  rec.check("generator-count bound at (2,1), r=(1,1)", "if $p=1$ and $q=2$, then the above equation is satisfied for $n=2,m=1$",
            "5 < 6", [&] {
              const auto rep = es_check(f.mu(MultiIndex{2, 1}), MultiIndex{2, 1}, MultiIndex{1, 1});
              return std::pair{rep.mu_value.get_str() + (rep.triggered ? " < " : " >= ") + rep.bound.get_str(),
                               rep.triggered && rep.mu_value == 5 && rep.bound == 6};
            });

  rec.check("joint reduction at (2,1)", "hence joint reduction vector is $(2,1)$", "certified", [&] {
    GeneralElementSampler sampler(opt.seed, opt.coeff_bound, opt.attempts);
    const auto cert = find_joint_reduction(f, MultiIndex{2, 1}, MultiIndex{1, 1}, sampler);
    rec.keep(cert);
    return std::pair{certificate_summary(cert, names), cert.verified};
  });

  rec.check("first diagonal degree beating (n+1)^2", "the minimum choice of $n$ such that $n<n^2$ is $2$", "2", [&] {
    std::optional<unsigned> first;
    for (unsigned n = 1; n <= 4 && !first; ++n)
      if (es_check(f.mu(MultiIndex{n, n}), MultiIndex{n, n}, MultiIndex{1, 1}).triggered) first = n;
    return std::pair{show_value(first), first == 2u};
  });

  rec.check("single-ideal diagonal check at n=m=2", "\\mu(I^2J^2)=7 \\nless \\binom{2+2}{2}=6", "7, bound 6 not beaten",
            [&] {
              const auto rep = es_check(f.mu(MultiIndex{2, 2}), MultiIndex{2}, MultiIndex{2});
              return std::pair{rep.mu_value.get_str() + ", bound " + rep.bound.get_str() +
                                   (rep.triggered ? " beaten" : " not beaten"),
                               rep.mu_value == 7 && rep.bound == 6 && !rep.triggered};
            });
  return rec.run;
}

// ---------------------------------------------------------------------------
// Integral closure filtration
// ---------------------------------------------------------------------------

FiltrationFile closure_file() {
  FiltrationFile f;
  f.ring = Ring::polynomial(3);
  f.ring.names = {"x", "y", "u"};
  f.kind = Filtration::Kind::closure_powers;
  f.ideals = {IdealSpec::from_monomial(closure_example_ideal())};
  f.reduction = IdealSpec::from_monomial(closure_example_ideal());
  return f;
}

ExampleRun run_closure(const RegistryOptions& opt) {
  Recorder rec;
  const std::vector<std::string> names{"x", "y", "u"};
  const auto i = closure_example_ideal();
  const auto i_bar_expected = mono(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 1}});
  const auto i_ibar_expected = mono(3, {{0, 0, 2}, {0, 2, 1}, {1, 1, 1}, {2, 0, 1}, {0, 4, 0}, {1, 3, 0}, {2, 2, 0},
                                        {3, 1, 0}, {4, 0, 0}});

  rec.check("closure of (x^2, y^2, u)", "\\overline{I}=(X^2,XY,Y^2,U)", show(i_bar_expected, names), [&] {
    const auto c = integral_closure(i);
    return std::pair{show(c, names), c == i_bar_expected};
  });

  rec.check("I * closure(I) is integrally closed with 9 generators",
            "I \\overline{I}= (U^2,Y^2U, XYU, X^2U, Y^4, XY^3, X^2Y^2, X^3Y, X^4)", "9 generators, closed", [&] {
              const auto p = product(i, integral_closure(i));
              const bool closed = integral_closure(p) == p;
              return std::pair{std::to_string(mu(p)) + " generators" + (closed ? ", closed" : ", not closed"),
                               p == i_ibar_expected && closed};
            });

  rec.check("closure(I^2) = I * closure(I), both containments certified", "In order to show $I \\overline{I}=\\overline{I^2}$",
            "equal", [&] {
              const auto a = product(i, integral_closure(i));
              const auto b = integral_closure(power(i, 2));
              const auto ag = a.as_polys(), bg = b.as_polys();
              const auto alg_a = TruncatedAlgebra::build(3, m_power_inside(a) + 1);
              const auto alg_b = TruncatedAlgebra::build(3, m_power_inside(b) + 1);
              const bool ab = verify_containment(alg_a, ag, bg, m_power_inside(a)).holds;
              const bool ba = verify_containment(alg_b, bg, ag, m_power_inside(b)).holds;
              return std::pair{std::string(ab && ba ? "equal" : "not equal"), ab && ba && a == b};
            });

  const auto f = closure_file().build();
  rec.check("mu(closure(I^2)) against C(2+3,3)", "\\mu(\\overline{I^2})=9< \\binom{2+3}{3}= 10", "9 < 10", [&] {
    const auto rep = es_check(f.mu(MultiIndex{2}), MultiIndex{2}, MultiIndex{3});
    return std::pair{rep.mu_value.get_str() + (rep.triggered ? " < " : " >= ") + rep.bound.get_str(),
                     rep.triggered && rep.mu_value == 9 && rep.bound == 10};
  });

  rec.check("reduction generated by 3 general elements at n=2", "it follows that $r_{I}(\\mathcal{F}) \\leq 1.$",
            "certified", [&] {
              GeneralElementSampler sampler(opt.seed, opt.coeff_bound, opt.attempts);
              const auto cert = find_reduction(f, 2, 3, sampler);
              rec.keep(cert);
              return std::pair{certificate_summary(cert, names), cert.verified};
            });

  rec.check("reduction number with respect to I", "Hence $r_I(\\mathcal{F})=1.$", "1", [&] {
    const auto rep = reduction_number(f, i.as_polys(), 4);
    rec.keep(rep);
    return std::pair{report_summary(rep), rep.value == 1u};
  });
  return rec.run;
}

// ---------------------------------------------------------------------------
// Hypersurface examples
// ---------------------------------------------------------------------------

ExampleRun run_tight_cubic(const RegistryOptions&) {
  Recorder rec;
  const unsigned n_max = 5;
  const auto file = tight_cubic_filtration(n_max);
  const auto names = file.ring.names;
  const auto f = file.build();

  rec.check("(I^2)* = (x^2y, x^2z, y^2, yz, z^2) in the quotient ring",
            "(I^2)^* = I^2 + \\mathfrak{m} ^3 =(x^2y,x^2z,y^2,yz,z^2)", "equal", [&] {
              const auto listed = mono(3, {{2, 1, 0}, {2, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}).as_polys();
              const auto& piece = f.piece(MultiIndex{2}).gens;
              const unsigned d0 = f.m_power_degree(MultiIndex{2});
              const auto d0_listed = find_m_power(3, f.ring().relation, listed, f.m_power_cap());
              if (!d0_listed) return std::pair{std::string("listed ideal is not m-primary"), false};
              const bool fwd = verify_containment_in_primary(f.algebra(std::max(d0, 1u)), listed, piece, d0).holds;
              const bool back =
                  verify_containment_in_primary(f.algebra(std::max(*d0_listed, 1u)), piece, listed, *d0_listed).holds;
              return std::pair{std::string(fwd && back ? "equal" : "not equal"), fwd && back};
            });

  rec.check("mu((I^2)*) in the quotient ring", "\\mu((I^2)^*) = 5 < \\binom{2+2}{2} = 6", "5 < 6", [&] {
    const auto rep = es_check(f.mu(MultiIndex{2}), MultiIndex{2}, MultiIndex{2});
    return std::pair{rep.mu_value.get_str() + (rep.triggered ? " < " : " >= ") + rep.bound.get_str(),
                     rep.mu_value == 5 && rep.triggered};
  });

  rec.check("reduction number with respect to (y,z)", "hence $r(\\mathcal{F})=1$ as $I \\neq I^*$", "1", [&] {
    const auto rep = reduction_number(f, reduction_gens(file), n_max);
    rec.keep(rep);
    return std::pair{report_summary(rep) + (rep.monotone ? ", monotone" : ", NOT monotone"),
                     rep.value == 1u && rep.monotone};
  });
  return rec.run;
}

ExampleRun run_quartic_z2(const RegistryOptions&) {
  Recorder rec;
  const unsigned n_max = 5;
  const auto file = quartic_z2_filtration(n_max);
  const auto f = file.build();

  rec.check("mu(closure(m^2)) in the quotient ring", "\\mu(\\overline{\\mathfrak{m} ^2})=4 < \\binom{2+2}{2}=6", "4 < 6",
            [&] {
              const auto rep = es_check(f.mu(MultiIndex{2}), MultiIndex{2}, MultiIndex{2});
              return std::pair{rep.mu_value.get_str() + (rep.triggered ? " < " : " >= ") + rep.bound.get_str(),
                               rep.mu_value == 4 && rep.triggered};
            });

  rec.check("reduction number with respect to (x,y)", "whereas $r(\\mathcal{F}) =2.$", "2", [&] {
    const auto rep = reduction_number(f, reduction_gens(file), n_max);
    rec.keep(rep);
    return std::pair{report_summary(rep) + (rep.monotone ? ", monotone" : ", NOT monotone"),
                     rep.value == 2u && rep.monotone};
  });

  rec.check("Cohen-Macaulay fiber cone recorded as not asserted",
            "without the assumption of the Cohen-Macaulay property of $F(\\mathcal{F})$",
            "cm-fiber-cone: NOT asserted", [&] {
              const auto rep = reduction_number(f, reduction_gens(file), 3);
              std::string note;
              for (const auto& h : rep.hypothesis_notes)
                if (h.rfind("cm-fiber-cone", 0) == 0) note = h;
              return std::pair{note, note == "cm-fiber-cone: NOT asserted"};
            });
  return rec.run;
}

ExampleRun run_quartic_y2(const RegistryOptions& opt) {
  Recorder rec;
  const unsigned n_max = 6;
  const auto file = quartic_y2_filtration(n_max);
  const auto names = file.ring.names;
  const auto f = file.build();

  rec.check("reduction number with respect to (x)", "This implies that $r_{(x)}(\\mathcal{F})=2.$", "2", [&] {
    const auto rep = reduction_number(f, reduction_gens(file), n_max);
    rec.keep(rep);
    return std::pair{report_summary(rep) + (rep.monotone ? ", monotone" : ", NOT monotone"),
                     rep.value == 2u && rep.monotone};
  });

  rec.check("fiber-cone generator degrees", "Thus $a=\\max\\{\\deg 1, \\deg \\overline{y} \\} = 2.$",
            "degrees {0, 2}, a = 2", [&] {
              const auto fc = fibercone_gen_degrees(f, MultiIndex{n_max});
              std::string degs;
              for (const auto& d : fc.degrees) degs += (degs.empty() ? "" : ", ") + std::to_string(d[0]);
              const bool ok = fc.degrees == std::vector<MultiIndex>{MultiIndex{0}, MultiIndex{2}} &&
                              fc.a_bar == MultiIndex{2} && !fc.boundary_warning;
              return std::pair{"degrees {" + degs + "}, a = " + std::to_string(fc.a_bar[0]), ok};
            });

  rec.check("mu(closure(m^2)) against C(2+1,1)", "$\\mu(\\overline{\\mathfrak{m} ^2}) = 2 < (2+1)=3.$", "2 < 3", [&] {
    const auto rep = es_check(f.mu(MultiIndex{2}), MultiIndex{2}, MultiIndex{1});
    return std::pair{rep.mu_value.get_str() + (rep.triggered ? " < " : " >= ") + rep.bound.get_str(),
                     rep.mu_value == 2 && rep.triggered};
  });

  rec.check("reduction search refused at n=2", "But as $2 \\ngeq a+1$, we cannot use",
            "refused by the fiber-cone degree bound", [&] {
              GeneralElementSampler sampler(opt.seed, opt.coeff_bound, opt.attempts);
              try {
                (void)find_reduction(f, 2, 1, sampler);
              } catch (const GateRefusedError& e) {
                return std::pair{std::string("refused by the ") + e.gate(), e.gate() == "fiber-cone degree bound"};
              }
              return std::pair{std::string("not refused"), false};
            });

  rec.check("reduction by one element at n = 3..6", "$\\overline{\\mathfrak{m} ^n} = (x)\\overline{\\mathfrak{m} ^{n-1}}$, for all $n \\geq 3.$",
            "certified at 3, 4, 5, 6", [&] {
              GeneralElementSampler sampler(opt.seed, opt.coeff_bound, opt.attempts);
              std::string done;
              bool all = true;
              for (unsigned n = 3; n <= n_max; ++n) {
                const auto cert = find_reduction(f, n, 1, sampler);
                rec.keep(cert);
                all = all && cert.verified;
                if (cert.verified) done += (done.empty() ? "" : ", ") + std::to_string(n);
              }
              return std::pair{"certified at " + done, all};
            });
  return rec.run;
}

std::vector<ExampleRecord> make_registry() {
  return {
      {"counter", "Contracted ideals I=(x,y^2), J=(y,x^2)", "contracted ideals in k[[x,y]], comparison with the single-ideal diagonal bound",
       counter_file, run_counter},
      {"lexsegment", "Lexsegment ideals with p=1, q=2", "lexsegment ideals in k[x,y]", lexsegment_file, run_lexsegment},
      {"ex2", "Integral closure filtration of (x^2,y^2,u)", "integral closure filtration in k[x,y,u]", closure_file, run_closure},
      {"tight-cubic", "Tight closure filtration in k[[x,y,z]]/(x^3+y^3+z^3)", "tight closure of powers of (y,z)",
       [] { return tight_cubic_filtration(5); }, run_tight_cubic},
      {"quartic-z2", "Integral closure of powers of m in k[[x,y,z]]/(x^4+y^4+z^2)",
       "depth hypotheses cannot be dropped", [] { return quartic_z2_filtration(5); }, run_quartic_z2},
      {"quartic-y2", "Integral closure of powers of m in k[[x,y]]/(x^4+y^2)", "fiber-cone degree gate",
       [] { return quartic_y2_filtration(6); }, run_quartic_y2},
  };
}

}  // namespace

bool ExampleRun::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

const std::vector<ExampleRecord>& registry() {
  static const std::vector<ExampleRecord> records = make_registry();
  return records;
}

const ExampleRecord* find_example(const std::string& id) {
  for (const auto& r : registry())
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<std::string> example_ids() {
  std::vector<std::string> out;
  for (const auto& r : registry()) out.push_back(r.id);
  return out;
}

std::pair<MonomialIdeal, MonomialIdeal> counter_ideals() {
  return {mono(2, {{1, 0}, {0, 2}}), mono(2, {{0, 1}, {2, 0}})};
}

std::pair<MonomialIdeal, MonomialIdeal> lexsegment_ideals() {
  const unsigned b[] = {2};
  const unsigned a[] = {1, 3};
  return {lexsegment_ideal(1, b), lexsegment_ideal(2, a)};
}

MonomialIdeal closure_example_ideal() { return mono(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}); }

FiltrationFile tight_cubic_filtration(unsigned n_max) {
  FiltrationFile f;
  f.ring = Ring::hypersurface(3, poly(3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}}));
  f.kind = Filtration::Kind::table;
  f.limit = MultiIndex{n_max};
  const auto i = mono(3, {{0, 1, 0}, {0, 0, 1}});
  for (unsigned k = 1; k <= n_max; ++k)
    f.pieces.emplace(MultiIndex{k}, IdealSpec::from_monomial(sum(MonomialIdeal::maximal_power(3, k + 1), power(i, k))));
  f.reduction = IdealSpec::from_monomial(i);
  return f;
}

FiltrationFile quartic_z2_filtration(unsigned n_max) {
  FiltrationFile f;
  f.ring = Ring::hypersurface(3, poly(3, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 2}, 1}}));
  f.kind = Filtration::Kind::table;
  f.limit = MultiIndex{n_max};
  const auto i = mono(3, {{1, 0, 0}, {0, 1, 0}});
  const auto z = mono(3, {{0, 0, 1}});
  for (unsigned n = 1; n <= n_max; ++n) {
    // I^{n-2} is the unit ideal for n < 2.
    const auto tail = n >= 2 ? power(i, n - 2) : MonomialIdeal::unit(3);
    f.pieces.emplace(MultiIndex{n}, IdealSpec::from_monomial(sum(power(i, n), product(z, tail))));
  }
  f.reduction = IdealSpec::from_monomial(i);
  return f;
}

FiltrationFile quartic_y2_filtration(unsigned n_max) {
  FiltrationFile f;
  f.ring = Ring::hypersurface(2, poly(2, {{{4, 0}, 1}, {{0, 2}, 1}}));
  f.kind = Filtration::Kind::table;
  f.limit = MultiIndex{n_max};
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto piece = n == 1 ? MonomialIdeal::maximal(2) : mono(2, {{n, 0}, {n - 2, 1}});
    f.pieces.emplace(MultiIndex{n}, IdealSpec::from_monomial(piece));
  }
  f.reduction = IdealSpec::from_monomial(mono(2, {{1, 0}}));
  return f;
}

}  // namespace redlab
