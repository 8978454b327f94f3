#include "jordanlab/cli.hpp"

#include "jordanlab/commutation.hpp"
#include "jordanlab/counterexamples.hpp"
#include "jordanlab/document.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/families.hpp"
#include "jordanlab/sea.hpp"
#include "jordanlab/spectral.hpp"
#include "jordanlab/suite.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <optional>
#include <sstream>

namespace jordanlab::cli {

namespace {

enum class Format { Human, Records };

struct Settings {
  double tol = tol::kCommute;
  Format format = Format::Human;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join_coords(const Vector& v, const char* sep) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += format_double(v(i));
  }
  return s;
}

struct Loaded {
  Family family;
  Element element;
};

Loaded load(const std::string& path) {
  ElementDocument doc = read_document_file(path);
  Family family = make_family(doc.algebra);
  doc.algebra = family.algebra->name();
  Element x = to_element(doc, family.algebra);
  return {std::move(family), std::move(x)};
}

std::pair<Element, Element> load_pair(const std::string& path_a, const std::string& path_b) {
  Loaded a = load(path_a);
  Loaded b = load(path_b);
  if (a.family.algebra->name() != b.family.algebra->name()) {
    throw Error(ErrorCode::AlgebraMismatch,
                "'" + a.family.algebra->name() + "' vs '" + b.family.algebra->name() + "'");
  }
  // Re-home b in a's algebra so both share one descriptor.
  return {a.element, a.family.algebra->element(b.element.coords())};
}

void print_element(std::ostream& out, const Settings& s, const char* record, const Element& x,
                   const std::string& label) {
  if (s.format == Format::Records) {
    out << fmt::format("record={} algebra={} coords={}\n", record, x.algebra()->name(),
                       join_coords(x.coords(), ","));
  } else {
    write_document(out, to_document(x, label));
  }
}

int cmd_describe(const std::string& spec, const Settings& s, std::ostream& out) {
  const Family f = make_family(spec);
  const Algebra& alg = *f.algebra;
  const ValidationReport& v = alg.validation();
  std::string labels;
  for (const auto& l : alg.basis_labels()) labels += (labels.empty() ? "" : ",") + l;
  if (s.format == Format::Records) {
    out << fmt::format(
        "record=describe algebra={} dim={} special={} basis={} commutativity={:.6e} unit_law={:.6e} "
        "jordan_identity={:.6e} self_adjointness={:.6e} probes={}\n",
        alg.name(), alg.dim(), yes_no(f.ambient.has_value()), labels, v.commutativity, v.unit_law,
        v.jordan_identity, v.self_adjointness, v.probes);
  } else {
    out << fmt::format("algebra   {}\ndim       {}\nspecial   {}\nbasis     {}\n", alg.name(), alg.dim(),
                       yes_no(f.ambient.has_value()), labels);
    out << fmt::format("validation ({} random probes)\n", v.probes);
    out << fmt::format("  commutativity     {:.3e}\n  unit law          {:.3e}\n", v.commutativity, v.unit_law);
    out << fmt::format("  Jordan identity   {:.3e}\n  self-adjointness  {:.3e}\n", v.jordan_identity,
                       v.self_adjointness);
  }
  return kOk;
}

int cmd_mul(const std::string& a, const std::string& b, const Settings& s, std::ostream& out) {
  const auto [x, y] = load_pair(a, b);
  print_element(out, s, "mul", jordan_mul(x, y), "a*b");
  return kOk;
}

int cmd_spectrum(const std::string& a, const Settings& s, std::ostream& out) {
  const Element x = load(a).element;
  const SpectralDecomposition sd = spectral_decompose(x);
  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    if (s.format == Format::Records) {
      out << fmt::format("record=eigen index={} value={} coords={}\n", i, format_double(sd.eigenvalues[i]),
                         join_coords(sd.idempotents[i].coords(), ","));
    } else {
      out << fmt::format("lambda[{}] = {}\n  idempotent: {}\n", i, format_double(sd.eigenvalues[i]),
                         join_coords(sd.idempotents[i].coords(), " "));
    }
  }
  if (s.format == Format::Records) {
    out << fmt::format("record=spectrum distinct={} order_unit_norm={} positive={}\n", sd.eigenvalues.size(),
                       format_double(order_unit_norm(x)), yes_no(is_positive(x)));
  } else {
    out << fmt::format("order-unit norm {}\npositive {}\n", format_double(order_unit_norm(x)),
                       yes_no(is_positive(x)));
  }
  return kOk;
}

int cmd_commute(const std::string& a, const std::string& b, const Settings& s, std::ostream& out) {
  const auto [x, y] = load_pair(a, b);
  const double r = commute_residual(x, y);
  if (s.format == Format::Records) {
    out << fmt::format("record=commute operator_commute={} residual={:.6e} tol={:.6e}\n", yes_no(r <= s.tol), r,
                       s.tol);
  } else {
    out << fmt::format("operator commute: {} (residual {:.3e}, tol {:.1e})\n", yes_no(r <= s.tol), r, s.tol);
  }
  return kOk;
}

int cmd_report(const std::string& a, const std::string& b, const Settings& s, std::ostream& out) {
  const auto [x, y] = load_pair(a, b);
  const TheoremReport r = theorem_report(x, y, s.tol);
  if (s.format == Format::Records) {
    out << fmt::format(
        "record=theorem_report op_commute={} assoc={} assoc_mutual={} squares_commute={} "
        "positivity_applicable={} q_identity={} subalgebra_dim={} borderline={} verdict={}\n",
        yes_no(r.op_commute), yes_no(r.assoc), yes_no(r.assoc_mutual), yes_no(r.squares_commute),
        yes_no(r.positivity.applicable), r.positivity.applicable ? yes_no(r.positivity.q_identity) : "n/a",
        r.subalgebra_dim, yes_no(r.borderline()), to_string(r.verdict));
    for (const auto& res : r.residuals) {
      out << fmt::format("record=residual name={} value={:.6e} borderline={}\n", res.name, res.value,
                         yes_no(res.borderline));
    }
  } else {
    out << fmt::format("(a) operator commute              {}\n", yes_no(r.op_commute));
    out << fmt::format("(b) generate associative algebra  {}  (dim {})\n", yes_no(r.assoc), r.subalgebra_dim);
    out << fmt::format("(c) ... mutually operator commute {}\n", yes_no(r.assoc_mutual));
    out << fmt::format("(d) a, a^2 commute with b, b^2    {}\n", yes_no(r.squares_commute));
    if (r.positivity.applicable) {
      out << fmt::format("    Q_a b^2 = Q_b a^2             {}\n", yes_no(r.positivity.q_identity));
    } else {
      out << "    Q_a b^2 = Q_b a^2             n/a (neither element positive)\n";
    }
    out << "residuals\n";
    for (const auto& res : r.residuals) {
      out << fmt::format("  {:<12} {:.3e}{}\n", res.name, res.value, res.borderline ? "  BORDERLINE" : "");
    }
    out << fmt::format("verdict: {}\n", to_string(r.verdict));
  }
  return r.verdict == Verdict::Consistent ? kOk : kInconsistent;
}

int cmd_seq(const std::string& a, const std::string& b, const Settings& s, std::ostream& out) {
  const auto [x, y] = load_pair(a, b);
  const Effect result = seq_product(Effect(x), Effect(y));
  print_element(out, s, "seq", result.element(), "a&b");
  return kOk;
}

int cmd_counterexample(const std::string& name, const Settings& s, std::ostream& out) {
  const CounterexampleResult r = counterexample(name, s.tol);
  for (const auto& p : r.pairs) {
    if (s.format == Format::Records) {
      out << fmt::format(
          "record=counterexample name={} qq_commute={} q_cross_identity={} operator_commute={} "
          "full_commute={} expected=\"{}\" matches={}\n",
          r.name, yes_no(p.a_holds), yes_no(p.b_holds), yes_no(p.c_holds), yes_no(p.panel.full_commute),
          p.expected, yes_no(p.matches));
    } else {
      out << p.description << '\n';
      out << fmt::format("  (a) Q_a Q_b = Q_b Q_a       {}  (residual {:.3e})\n", yes_no(p.a_holds),
                         p.panel.qq_residual);
      out << fmt::format("  (b) Q_a b^2 = Q_b a^2       {}  (residual {:.3e})\n", yes_no(p.b_holds),
                         p.panel.q_cross_residual);
      out << fmt::format("  (c) a, b operator commute   {}  (residual {:.3e})\n", yes_no(p.c_holds),
                         p.panel.full_residual);
      out << fmt::format("  expected: {}  ->  {}\n", p.expected, p.matches ? "confirmed" : "NOT confirmed");
    }
  }
  return r.matches() ? kOk : kInconsistent;
}

int cmd_suite(const std::string& spec, int trials, std::uint64_t seed, const Settings& s, std::ostream& out,
              std::ostream& err) {
  if (trials < 1) throw Error(ErrorCode::ParseError, "--trials must be >= 1");
  const Family f = make_family(spec);
  SuiteOptions options;
  options.tol = s.tol;
  const SuiteReport report = run_suite(f, trials, seed, options);
  out << format_records(report);
  if (s.format == Format::Human) err << format_human(report);
  err << fmt::format("elapsed {:.2f} s\n", report.elapsed_seconds);
  return report.failures() == 0 ? kOk : kInconsistent;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::AlgebraMismatch:
      return kUsage;
    default:
      return kDomain;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical toolkit for Euclidean Jordan algebras", "jordanlab"};
  app.require_subcommand(1);

  std::optional<double> tol_flag;
  std::string format = "human";
  std::uint64_t seed = 0;
  int trials = 100;
  app.add_option("--tol", tol_flag, "Commutation tolerance (default 1e-8, env JORDANLAB_TOL)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "records"}));
  app.add_option("--seed", seed, "Master seed for randomized suites");
  app.add_option("--trials", trials, "Trials per property");

  std::string spec, file_a, file_b, name;
  auto* describe = app.add_subcommand("describe", "Summarize an algebra family");
  describe->add_option("family", spec, "sym_r:N, herm_c:N, herm_q:N, spin:N or albert")->required();
  auto* mul = app.add_subcommand("mul", "Jordan product of two element files");
  mul->add_option("a", file_a)->required();
  mul->add_option("b", file_b)->required();
  auto* spectrum = app.add_subcommand("spectrum", "Spectral decomposition of an element file");
  spectrum->add_option("a", file_a)->required();
  auto* commute = app.add_subcommand("commute", "Operator-commutation test");
  commute->add_option("a", file_a)->required();
  commute->add_option("b", file_b)->required();
  auto* report = app.add_subcommand("report", "Equivalence-theorem report for a pair");
  report->add_option("a", file_a)->required();
  report->add_option("b", file_b)->required();
  auto* seq = app.add_subcommand("seq", "Sequential product a & b of two effects");
  seq->add_option("a", file_a)->required();
  seq->add_option("b", file_b)->required();
  auto* demo = app.add_subcommand("counterexample", "Pauli counterexample demonstrations");
  demo->add_option("name", name, "pauli-q-identity or pauli-qq-commute")->required();
  auto* suite = app.add_subcommand("suite", "Seeded randomized property suite");
  suite->add_option("family", spec)->required();
  for (auto* sub : {describe, mul, spectrum, commute, report, seq, demo, suite}) sub->fallthrough();

  std::vector<std::string> argv_storage = {"jordanlab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Settings settings;
  settings.format = format == "records" ? Format::Records : Format::Human;
  if (tol_flag) {
    settings.tol = *tol_flag;
  } else if (const char* env = std::getenv("JORDANLAB_TOL")) {
    try {
      std::size_t used = 0;
      settings.tol = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: JORDANLAB_TOL is not a number: '" << env << "'\n";
      return kUsage;
    }
  }
  if (!(settings.tol > 0.0)) {
    err << "error: tolerance must be positive\n";
    return kUsage;
  }

  try {
    if (*describe) return cmd_describe(spec, settings, out);
    if (*mul) return cmd_mul(file_a, file_b, settings, out);
    if (*spectrum) return cmd_spectrum(file_a, settings, out);
    if (*commute) return cmd_commute(file_a, file_b, settings, out);
    if (*report) return cmd_report(file_a, file_b, settings, out);
    if (*seq) return cmd_seq(file_a, file_b, settings, out);
    if (*demo) return cmd_counterexample(name, settings, out);
    if (*suite) return cmd_suite(spec, trials, seed, settings, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace jordanlab::cli
