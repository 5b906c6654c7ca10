// reduction-lab: command-line front end.
//
// Exit codes: 0 verified / triggered, 1 input error, 2 hypothesis or gate
// refused (or bound not beaten), 3 search or verification did not succeed.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "redlab/es_bounds.hpp"
#include "redlab/io.hpp"
#include "redlab/kernels.hpp"
#include "redlab/registry.hpp"

namespace {

using namespace redlab;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kRefused = 2;
constexpr int kNotVerified = 3;

struct Options {
  std::uint64_t seed = 1;
  std::int64_t coeff_bound = kDefaultCoeffBound;
  unsigned attempts = kDefaultAttempts;
  unsigned nmax = 0;
  unsigned m_power_cap = kDefaultMPowerCap;
  bool force = false;
  std::string out;
  std::string example;
  std::string file;
  std::string file2;
  std::vector<unsigned> n;
  std::vector<unsigned> r;
  std::vector<unsigned> box;
  std::vector<std::string> assertions;
  std::string mu_value;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("REDUCTION_LAB_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring unparsable REDUCTION_LAB_SEED='" << env << "'\n";
  }
  return 1;
}

MultiIndex to_index(const std::vector<unsigned>& v) { return MultiIndex(std::vector<std::uint32_t>(v.begin(), v.end())); }

std::string show(const MultiIndex& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

FiltrationFile load_filtration(const Options& o) {
  if (!o.example.empty()) {
    const auto* rec = find_example(o.example);
    if (!rec) throw ParseError("unknown example '" + o.example + "'");
    return rec->filtration();
  }
  if (o.file.empty()) throw ParseError("give a filtration file or --example <id>");
  return parse_filtration_file(read_text_file(o.file));
}

void print_certificate(const ReductionCertificate& c) {
  std::cout << "equation: " << to_string(c.kind) << " at n = " << show(c.n) << ", r = " << show(c.r) << '\n';
  for (const auto& note : c.gate_notes) std::cout << "gate: " << note << '\n';
  for (std::size_t i = 0; i < c.summands.size(); ++i) {
    const auto& els = c.summands[i].elements;
    for (std::size_t j = 0; j < els.size(); ++j)
      std::cout << "x[" << i + 1 << "," << j + 1 << "] = " << to_string(els[j].element, c.names) << '\n';
  }
  std::cout << "truncation: N = " << c.truncation_order << ", d0 = " << c.d0 << '\n';
  if (c.attempt > 0) std::cout << "attempt: " << c.attempt << " (coefficient bound " << c.coeff_bound << ")\n";
  if (c.forced) std::cout << "forced: hypotheses bypassed, result is exploratory\n";
  std::cout << "verdict: " << (c.verified ? "VERIFIED" : "NOT VERIFIED") << '\n';
}

void maybe_write(const Options& o, const std::string& text) {
  if (o.out.empty()) return;
  write_text_file(o.out, text);
  std::cout << "wrote " << o.out << '\n';
}

// --- commands ---------------------------------------------------------------

int cmd_mu(const Options& o) {
  // With --n the input is a filtration (file or example); otherwise an ideal file.
  if (!o.example.empty() || !o.n.empty()) {
    if (o.n.empty()) throw ParseError("mu --example needs --n <degree>");
    auto f = load_filtration(o).build(o.m_power_cap);
    const auto n = to_index(o.n);
    const auto& p = f.piece(n);
    std::cout << "mu = " << f.mu(n).get_str() << '\n';
    std::cout << "generators:";
    for (const auto& g : p.gens) std::cout << ' ' << to_string(g, f.ring().names);
    std::cout << '\n';
    return kOk;
  }
  if (o.file.empty()) throw ParseError("give an ideal file, or a filtration (file or --example <id>) with --n");
  const auto file = parse_ideal_file(read_text_file(o.file));
  const auto& ring = file.ring;
  if (!ring.relation) {
    if (auto m = file.ideal.as_monomial(ring.nvars)) {
      std::cout << "mu = " << mu(*m) << '\n';
      if (m->is_zero())
        std::cout << "order = undefined (zero ideal)\n";
      else
        std::cout << "order = " << order(*m) << '\n';
      std::cout << "minimal generators: " << to_string(*m, ring.names) << '\n';
      return kOk;
    }
  }
  const auto gens = file.ideal.generators(ring.nvars);
  const auto d0 = find_m_power(ring.nvars, ring.relation, gens, o.m_power_cap);
  if (!d0)
    throw HypothesisError("ideal is not m-primary within m-power cap " + std::to_string(o.m_power_cap) +
                          "; generator counts are computed for m-primary ideals");
  const auto algebra = TruncatedAlgebra::build(ring.nvars, *d0 + 2, ring.relation);
  std::cout << "mu = " << mu_in_quotient(algebra, gens, *d0) << '\n';
  std::cout << "m-power inside: m^" << *d0 << '\n';
  std::cout << "generators:";
  for (const auto& g : gens) std::cout << ' ' << to_string(g, ring.names);
  std::cout << '\n';
  return kOk;
}

int cmd_closure(const Options& o) {
  if (o.file.empty()) throw ParseError("closure needs an ideal file");
  const auto file = parse_ideal_file(read_text_file(o.file));
  if (file.ring.relation) throw UnsupportedError("integral closure is computed only in polynomial rings");
  auto m = file.ideal.as_monomial(file.ring.nvars);
  if (!m) throw UnsupportedError("integral closure is computed only for monomial ideals");
  const auto c = integral_closure(*m);
  std::cout << "closure: " << to_string(c, file.ring.names) << '\n';
  std::cout << "mu = " << mu(c) << '\n';
  IdealFile outfile{file.ring, IdealSpec::from_monomial(c)};
  maybe_write(o, serialize(outfile));
  return kOk;
}

int cmd_es_check(const Options& o) {
  if (o.mu_value.empty() || o.n.empty() || o.r.empty()) throw ParseError("es-check needs --mu, --n and --r");
  Integer mu_v;
  if (mu_v.set_str(o.mu_value, 10) != 0 || mu_v < 0) throw ParseError("--mu must be a non-negative integer");
  const auto rep = es_check(mu_v, to_index(o.n), to_index(o.r));
  std::cout << "mu = " << rep.mu_value.get_str() << ", bound = " << rep.bound.get_str() << " -> "
            << (rep.triggered ? "triggered" : "not triggered") << '\n';
  return rep.triggered ? kOk : kRefused;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.force = o.force;
  if (!o.box.empty()) s.fibercone_box = to_index(o.box);
  s.user_assertions = o.assertions;
  return s;
}

int finish_search(const Options& o, const ReductionCertificate& cert) {
  print_certificate(cert);
  maybe_write(o, serialize(cert));
  if (!cert.verified) {
    std::cout << "attempts exhausted after " << cert.attempt << " tries\n";
    return kNotVerified;
  }
  return kOk;
}

int cmd_find_reduction(const Options& o) {
  if (o.n.size() != 1 || o.r.size() != 1) throw ParseError("find-reduction needs scalar --n and --r");
  const auto f = load_filtration(o).build(o.m_power_cap);
  GeneralElementSampler sampler(o.seed, o.coeff_bound, o.attempts);
  return finish_search(o, find_reduction(f, o.n[0], o.r[0], sampler, search_options(o)));
}

int cmd_joint_reduction(const Options& o) {
  if (o.n.empty() || o.r.empty()) throw ParseError("joint-reduction needs --n and --r");
  const auto f = load_filtration(o).build(o.m_power_cap);
  GeneralElementSampler sampler(o.seed, o.coeff_bound, o.attempts);
  return finish_search(o, find_joint_reduction(f, to_index(o.n), to_index(o.r), sampler, search_options(o)));
}

int cmd_reduction_number(const Options& o) {
  const auto file = load_filtration(o);
  if (!file.reduction) throw ParseError("the filtration file has no \"reduction\" ideal");
  const unsigned nmax = o.nmax ? o.nmax : (file.limit ? (*file.limit)[0] : 0);
  if (nmax == 0) throw ParseError("reduction-number needs --nmax");
  const auto f = file.build(o.m_power_cap);
  const auto rep = reduction_number(f, file.reduction->generators(file.ring.nvars), nmax, o.assertions);
  for (unsigned m = 1; m <= rep.n_max; ++m)
    std::cout << "J I_" << (m - 1) << " = I_" << m << ": " << (rep.steps[m - 1].verified ? "holds" : "fails") << '\n';
  for (const auto& h : rep.hypothesis_notes) std::cout << "hypothesis " << h << '\n';
  if (!rep.monotone) std::cout << "warning: the equation fails again after holding\n";
  maybe_write(o, serialize(rep));
  if (!rep.value) {
    std::cout << "reduction number: not reached within n_max = " << rep.n_max << '\n';
    return kNotVerified;
  }
  std::cout << "reduction number = " << *rep.value << " (exact up to n_max = " << rep.n_max << ")\n";
  return kOk;
}

int cmd_jrv_contracted(const Options& o) {
  MonomialIdeal i, j;
  std::vector<std::string> names;
  if (!o.file.empty() && !o.file2.empty()) {
    const auto a = parse_ideal_file(read_text_file(o.file));
    const auto b = parse_ideal_file(read_text_file(o.file2));
    if (a.ring.relation || b.ring.relation) throw UnsupportedError("contracted ideals live in a polynomial ring");
    auto am = a.ideal.as_monomial(a.ring.nvars), bm = b.ideal.as_monomial(b.ring.nvars);
    if (!am || !bm) throw UnsupportedError("jrv-contracted takes monomial ideals");
    i = *am;
    j = *bm;
    names = a.ring.names;
  } else {
    const auto file = load_filtration(o);
    if (file.kind != Filtration::Kind::powers || file.ideals.size() != 2)
      throw UnsupportedError("jrv-contracted needs two ideals (two files, or a power filtration of rank 2)");
    i = *file.ideals[0].as_monomial(file.ring.nvars);
    j = *file.ideals[1].as_monomial(file.ring.nvars);
    names = file.ring.names;
  }
  const auto res = contracted_jrv(i, j);
  std::cout << "I = " << to_string(i, names) << ", J = " << to_string(j, names) << '\n';
  std::cout << "joint reduction vector = " << show(res.vector) << '\n';
  std::cout << "mu(I^m J^n) = " << res.report.mu_value.get_str() << " < " << res.report.bound.get_str() << '\n';
  // The formula gives one valid vector; list the minimal triggers at or below it.
  const std::vector<MonomialIdeal> pair{i, j};
  const auto triggers = first_n_for_r(
      [&](const MultiIndex& n) { return Integer(mu(multi_power(pair, n))); }, MultiIndex{1, 1}, res.vector);
  std::cout << "minimal triggers in [0, " << show(res.vector) << "]:";
  for (const auto& n : triggers) std::cout << ' ' << show(n);
  std::cout << '\n';
  return kOk;
}

int cmd_fiber_degrees(const Options& o) {
  const auto f = load_filtration(o).build(o.m_power_cap);
  MultiIndex box = o.box.empty() ? (f.limit() ? *f.limit() : MultiIndex()) : to_index(o.box);
  if (box.size() == 0) throw ParseError("fiber-degrees needs --box for this filtration");
  const auto fc = fibercone_gen_degrees(f, box);
  std::cout << "generator degrees:";
  for (const auto& d : fc.degrees) std::cout << ' ' << show(d);
  std::cout << "\na = " << show(fc.a_bar) << '\n';
  if (fc.boundary_warning) std::cout << "warning: a generator lies on the boundary of the scanned box\n";
  return kOk;
}

int cmd_reproduce(const Options& o) {
  std::vector<const ExampleRecord*> todo;
  if (o.example == "all") {
    for (const auto& r : registry()) todo.push_back(&r);
  } else if (const auto* r = find_example(o.example)) {
    todo.push_back(r);
  } else {
    std::cout << "unknown example '" << o.example << "'; known ids:";
    for (const auto& id : example_ids()) std::cout << ' ' << id;
    std::cout << " all\n";
    return kInputError;
  }
  RegistryOptions ro{o.seed, o.coeff_bound, o.attempts};
  bool all = true;
  for (const auto* rec : todo) {
    std::cout << "== " << rec->id << ": " << rec->title << '\n';
    const auto run = rec->run(ro);
    std::size_t passed = 0;
    for (const auto& c : run.checks) {
      passed += c.pass;
      std::cout << (c.pass ? "PASS " : "FAIL ") << rec->id << " | " << c.label << " | expected " << c.expected
                << " | got " << c.actual << '\n';
      std::cout << "     source: " << c.source << '\n';
    }
    std::cout << rec->id << ": " << passed << "/" << run.checks.size() << " passed\n";
    all = all && run.all_passed();
  }
  return all ? kOk : kInputError;
}

int cmd_replay(const Options& o) {
  if (o.file.empty()) throw ParseError("replay needs a certificate or report file");
  const auto text = read_text_file(o.file);
  std::vector<ReductionCertificate> certs;
  if (is_report_document(text))
    certs = parse_reduction_number_report(text).steps;
  else
    certs.push_back(parse_certificate(text));
  bool agree = true;
  for (const auto& c : certs) {
    const auto v = replay(c);
    const bool same = v.holds == c.verified && v.unreached == c.unreached && v.truncation_order == c.truncation_order;
    std::cout << "n = " << show(c.n) << ": recorded " << (c.verified ? "holds" : "fails") << ", replayed "
              << (v.holds ? "holds" : "fails") << (same ? " (reproduced)" : " (MISMATCH)") << '\n';
    agree = agree && same;
  }
  return agree ? kOk : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduction-lab: reductions, joint reductions and reduction numbers with exact certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.seed = default_seed();

  app.add_option("--seed", o.seed, "sampler seed (default from REDUCTION_LAB_SEED, else 1)");
  app.add_option("--coeff-bound", o.coeff_bound, "initial coefficient bound B")->check(CLI::PositiveNumber);
  app.add_option("--attempts", o.attempts, "sampling attempts, B doubles on each retry")->check(CLI::PositiveNumber);
  app.add_option("--nmax", o.nmax, "upper end of the reduction-number window");
  app.add_option("--m-power-cap", o.m_power_cap, "largest d tried when searching m^d inside an ideal");
  app.add_flag("--force", o.force, "run searches even when a theorem gate refuses (marked in the certificate)");
  app.add_option("--out", o.out, "write the certificate / result as JSON");
  app.add_flag_callback("--kernels", [] {
    std::cout << "active kernels: " << kernels::isa_name(kernels::active_isa()) << '\n';
  }, "print the selected monomial kernel variant");

  auto* mu_cmd = app.add_subcommand("mu", "minimal number of generators of an ideal or a filtration piece");
  mu_cmd->add_option("file", o.file, "ideal file, or filtration file with --n");
  mu_cmd->add_option("--example", o.example, "registry example id");
  mu_cmd->add_option("--n", o.n, "filtration degree")->delimiter(',');

  auto* closure_cmd = app.add_subcommand("closure", "integral closure of a monomial ideal");
  closure_cmd->add_option("file", o.file, "ideal file")->required();

  auto* es_cmd = app.add_subcommand("es-check", "compare mu with prod C(n_i + r_i, r_i)");
  es_cmd->add_option("--mu", o.mu_value, "generator count")->required();
  es_cmd->add_option("--n", o.n, "degree vector, e.g. 2,2")->required()->delimiter(',');
  es_cmd->add_option("--r", o.r, "element counts, e.g. 1,1")->required()->delimiter(',');

  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "filtration file");
    cmd->add_option("--example", o.example, "registry example id");
    cmd->add_option("--n", o.n, "degree")->required()->delimiter(',');
    cmd->add_option("--r", o.r, "number of general elements")->required()->delimiter(',');
    cmd->add_option("--box", o.box, "fiber-cone scan box (default n)")->delimiter(',');
    cmd->add_option("--assert", o.assertions, "record a user-asserted hypothesis");
  };
  auto* fr_cmd = app.add_subcommand("find-reduction", "reduction (x_1..x_r) I_{n-1} = I_n");
  add_search(fr_cmd);
  auto* jr_cmd = app.add_subcommand("joint-reduction", "joint reduction sum_i (x_i) I_{n-e_i} = I_n");
  add_search(jr_cmd);

  auto* rn_cmd = app.add_subcommand("reduction-number", "reduction number of a filtration w.r.t. its reduction ideal");
  rn_cmd->add_option("file", o.file, "filtration file with a \"reduction\" ideal");
  rn_cmd->add_option("--example", o.example, "registry example id");
  rn_cmd->add_option("--assert", o.assertions, "record a user-asserted hypothesis");

  auto* jrv_cmd = app.add_subcommand("jrv-contracted", "joint reduction vector (2 o(J) - 1, 2 o(I) - 1)");
  jrv_cmd->add_option("file", o.file, "ideal file for I");
  jrv_cmd->add_option("file2", o.file2, "ideal file for J");
  jrv_cmd->add_option("--example", o.example, "registry example id");

  auto* fd_cmd = app.add_subcommand("fiber-degrees", "fiber-cone generator degrees in a box");
  fd_cmd->add_option("file", o.file, "filtration file");
  fd_cmd->add_option("--example", o.example, "registry example id");
  fd_cmd->add_option("--box", o.box, "scan box")->delimiter(',');

  auto* rep_cmd = app.add_subcommand("reproduce", "run registry examples and print PASS/FAIL per expected value");
  rep_cmd->add_option("id", o.example, "example id or 'all'")->required();

  auto* replay_cmd = app.add_subcommand("replay", "re-verify a certificate or reduction-number report");
  replay_cmd->add_option("file", o.file, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*mu_cmd) return cmd_mu(o);
    if (*closure_cmd) return cmd_closure(o);
    if (*es_cmd) return cmd_es_check(o);
    if (*fr_cmd) return cmd_find_reduction(o);
    if (*jr_cmd) return cmd_joint_reduction(o);
    if (*rn_cmd) return cmd_reduction_number(o);
    if (*jrv_cmd) return cmd_jrv_contracted(o);
    if (*fd_cmd) return cmd_fiber_degrees(o);
    if (*rep_cmd) return cmd_reproduce(o);
    if (*replay_cmd) return cmd_replay(o);
  } catch (const GateRefusedError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis not satisfied: " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
