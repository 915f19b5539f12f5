#include "surfsing/cli.hpp"

#include "surfsing/cycles.hpp"
#include "surfsing/equising.hpp"
#include "surfsing/errors.hpp"
#include "surfsing/family_io.hpp"
#include "surfsing/graph_io.hpp"
#include "surfsing/ideal_io.hpp"
#include "surfsing/monomial.hpp"
#include "surfsing/nashideal.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace surfsing::cli {

namespace {

// Collects `key=value` lines. Detail lines are dropped under --quiet,
// which otherwise prints bare values.
class Report {
public:
  Report(std::ostream& out, bool quiet) : out_(out), quiet_(quiet) {}

  void value(const std::string& key, const std::string& v) {
    if (quiet_) out_ << v << '\n';
    else out_ << key << '=' << v << '\n';
  }
  void detail(const std::string& key, const std::string& v) {
    if (!quiet_) out_ << key << '=' << v << '\n';
  }
  void text(const std::string& line) {
    if (!quiet_) out_ << line << '\n';
  }
  void raw(const std::string& line) { out_ << line << '\n'; }

private:
  std::ostream& out_;
  bool quiet_;
};

std::string join(const std::vector<std::string>& items, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

std::string render(const Cycle& z) {
  std::vector<std::string> parts;
  for (const Rational& a : z.coefficients) parts.push_back(to_string(a));
  return join(parts);
}

std::string render(const DegreeVector& d) {
  std::vector<std::string> parts;
  for (auto v : d.values) parts.push_back(std::to_string(v));
  return join(parts);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Domain errors raised while evaluating a file get the file name prefixed.
template <typename Fn>
auto in_file(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const InconclusiveError&) {
    throw;
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

std::pair<MonomialIdeal, MonomialIdeal> read_pair(const std::string& path) {
  auto ideals = parse_ideals_text(read_file(path), path);
  if (ideals.size() != 2)
    throw ParseError(path, 0, 0,
                     "expected exactly two ideal blocks (J, then J' inside J), got " +
                         std::to_string(ideals.size()));
  return {ideals[0], ideals[1]};
}

void emit_growth(Report& rep, const PairGrowth& g) {
  rep.detail("n0", std::to_string(g.threshold));
  rep.detail("c2", to_string(g.c2));
  rep.detail("c1", to_string(g.c1));
  rep.detail("c0", to_string(g.c0));
}

void emit_report(Report& rep, const EquisingularityReport& r) {
  const char* tag = r.criterion == Criterion::NashFiberDimension ? "nash" : "whitney";
  rep.text(std::string("== ") + r.theorem);
  for (const InvariantVerdict& v : r.invariants)
    rep.text("  " + v.name + ": " +
             (v.constant ? std::string("constant") : "varies at t=" + join(v.offending)));
  for (const std::string& c : r.consequences) rep.text("  consequence: " + c);
  rep.detail("criterion", tag);
  rep.value("verdict", r.verdict ? "positive" : "negative");
  rep.detail("failed", join(r.failed()));
}

struct Options {
  bool quiet = false;
  std::string file;
  std::uint32_t n_max = StabilizationPolicy{}.n_max;
  std::uint32_t window = StabilizationPolicy{}.window;
  std::string criterion = "auto";
  std::size_t index = 0;
};

int graph_invariants(const Options& o, Report& rep, std::ostream& err) {
  const GraphFile file = parse_graph_text(read_file(o.file), o.file);
  const bool negdef = is_negative_definite(intersection_matrix(file.graph));
  rep.value("negdef", negdef ? "true" : "false");
  rep.value("chiE", std::to_string(euler_characteristic(file.graph)));
  if (!negdef) {
    err << "error: " << o.file
        << ": precondition violated: intersection matrix is not negative definite; "
           "Z_K and K^2 are undefined\n";
    return kExitDomain;
  }
  rep.value("ZK", render(canonical_cycle(file.graph)));
  rep.value("K2", to_string(k_squared(file.graph)));
  return kExitOk;
}

int cycle(const Options& o, Report& rep, std::ostream&) {
  const GraphFile file = parse_graph_text(read_file(o.file), o.file);
  in_file(o.file, [&] {
    const Cycle z = numerical_cycle(file.graph, file.degrees);
    const Rational zz = pair_product(file.graph, z, z);
    rep.detail("degrees", render(file.degrees));
    rep.value("z", render(z));
    rep.value("zz", to_string(zz));
    rep.value("e", to_string(-zz));
    return 0;
  });
  return kExitOk;
}

int canonical(const Options& o, Report& rep, std::ostream&) {
  const GraphFile file = parse_graph_text(read_file(o.file), o.file);
  in_file(o.file, [&] {
    rep.value("KE", render(adjunction_degrees(file.graph)));
    rep.value("ZK", render(canonical_cycle(file.graph)));
    rep.value("K2", to_string(k_squared(file.graph)));
    return 0;
  });
  return kExitOk;
}

int pair_mult(const Options& o, Report& rep, std::ostream&) {
  const auto [big, small] = read_pair(o.file);
  const StabilizationPolicy policy{o.n_max, o.window};
  const auto result = in_file(o.file, [&] { return pair_multiplicity(big, small, policy); });
  rep.detail("J", describe(big));
  rep.detail("J'", describe(small));
  rep.value("pairmult", to_string(result.value));
  emit_growth(rep, result.growth);
  return kExitOk;
}

int hs_mult(const Options& o, Report& rep, std::ostream&) {
  const auto ideals = parse_ideals_text(read_file(o.file), o.file);
  const StabilizationPolicy policy{o.n_max, o.window};
  for (const MonomialIdeal& ideal : ideals) {
    const auto growth = in_file(o.file, [&] { return hilbert_samuel_growth(ideal, policy); });
    const auto e = in_file(o.file, [&] { return hilbert_samuel_multiplicity(ideal, policy); });
    rep.detail("ideal", describe(ideal));
    rep.value("hsmult", std::to_string(e));
    emit_growth(rep, growth);
  }
  return kExitOk;
}

int closure(const Options& o, Report& rep, std::ostream&) {
  const auto ideals = parse_ideals_text(read_file(o.file), o.file);
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    if (k > 0) rep.raw("---");
    std::ostringstream block;
    write_ideal(block, integral_closure(ideals[k]));
    std::string text = block.str();
    text.pop_back();
    rep.raw(text);
  }
  return kExitOk;
}

int reduction(const Options& o, Report& rep, std::ostream&) {
  const auto [big, small] = read_pair(o.file);
  const StabilizationPolicy policy{o.n_max, o.window};
  const bool reduces = in_file(o.file, [&] { return is_reduction(small, big, policy); });
  rep.value("reduction", reduces ? "true" : "false");
  rep.detail("pairmult", to_string(pair_multiplicity(big, small, policy).value));
  return kExitOk;
}

int nash_ideal(const Options& o, Report& rep, std::ostream&) {
  const GeneratorFile file = parse_generators_text(read_file(o.file), o.file);
  const auto minors = in_file(o.file, [&] { return nash_ideal_generators(file.generators); });
  for (const Minor& minor : minors) {
    std::vector<std::string> cols;
    for (std::size_t c : minor.columns) cols.push_back(std::to_string(c + 1));
    rep.text("# columns " + join(cols));
    rep.raw(to_string(minor.value));
  }
  return kExitOk;
}

int check_family(const Options& o, Report& rep, std::ostream&) {
  const Family family = parse_family_text(read_file(o.file), o.file);
  in_file(o.file, [&] {
    validate_family(family);
    const auto all_have = [&](auto pred) { return std::all_of(family.begin(), family.end(), pred); };
    bool nash = o.criterion == "nash" || o.criterion == "all";
    bool whitney = o.criterion == "whitney" || o.criterion == "all";
    if (o.criterion == "auto") {
      nash = all_have([](const FiberRecord& r) { return r.khat2.has_value(); });
      whitney = all_have([](const FiberRecord& r) { return r.k2 && r.chiE; });
      if (!nash && !whitney)
        throw DomainError(
            "family supplies neither khat2 for every fiber nor k2 and chiE for every fiber");
    }
    if (nash) emit_report(rep, check_nash_criterion(family));
    if (whitney) emit_report(rep, check_whitney_criterion(family));

    for (const FiberRecord& r : family) {
      rep.text("fiber t=" + r.label + ": Eu = 1 - mu2 = " + std::to_string(euler_obstruction(r.mu2)));
      if (r.chiX && r.chiXtilde && r.chiE) {
        const auto chi = check_chi_relation(r);
        rep.text("fiber t=" + r.label + ": " + chi.message +
                 (chi.chi_is_one ? "; chi(X) = 1" : "; chi(X) != 1"));
        rep.detail("chirelation[" + r.label + "]", chi.passed ? "pass" : "fail");
      }
    }
    return 0;
  });
  return kExitOk;
}

int check_semi(const Options& o, Report& rep, std::ostream&) {
  const Family family = parse_family_text(read_file(o.file), o.file);
  const auto result = in_file(o.file, [&] { return check_semicontinuity(family, o.index); });
  rep.text(result.message);
  rep.value("semicontinuity", result.passed ? "pass" : "fail");
  rep.detail("violations", join(result.violations));
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of normal surface singularities and equisingularity checks",
               "surfsing"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("-q,--quiet", o.quiet, "Print only result values, one per line");

  using Handler = std::function<int(const Options&, Report&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Input file")->required();
    sub->add_flag("-q,--quiet", o.quiet, "Print only result values, one per line");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto stabilization = [&](CLI::App* sub) {
    sub->add_option("--nmax", o.n_max, "Largest power n sampled")->check(CLI::PositiveNumber);
    sub->add_option("--window", o.window, "Equal trailing second differences required")
        ->check(CLI::PositiveNumber);
  };

  add("graph-invariants", "Negative definiteness, chi(E), Z_K and K^2 of a graph file",
      graph_invariants);
  add("cycle", "Numerical cycle z with z.E_i = degree_i, z.z and e = -z.z", cycle);
  add("canonical", "Adjunction degrees, canonical cycle Z_K and K^2", canonical);
  stabilization(add("pair-mult", "Pair multiplicity of J' inside J (two ideal blocks)", pair_mult));
  stabilization(add("hs-mult", "Hilbert-Samuel multiplicity of each ideal block", hs_mult));
  add("closure", "Integral closure of each ideal block", closure);
  stabilization(add("reduction", "Whether J' (second block) is a reduction of J (first)", reduction));
  add("nash-ideal", "Maximal minors of the Jacobian of g_1..g_{N-2}", nash_ideal);
  add("check-family", "Equisingularity criteria for a family manifest", check_family)
      ->add_option("--criterion", o.criterion, "auto, nash, whitney or all")
      ->check(CLI::IsMember({"auto", "nash", "whitney", "all"}));
  add("check-semicontinuity", "Semicontinuity e(J1(t)) <= e(J1(0)) of a family manifest",
      check_semi)
      ->add_option("--index", o.index, "Which e-value of each record to compare (0-based)");

  std::vector<std::string> argv_store{"surfsing"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    if (app.get_subcommands().empty()) err << app.help();
    return kExitParse;
  }

  Report rep(out, o.quiet);
  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(o, rep, err);
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kExitParse;
    } catch (const InconclusiveError& e) {
      err << "error: " << o.file << ": " << e.what() << "\nsamples (n, value):";
      for (const auto& [n, v] : e.samples()) err << ' ' << n << ':' << v;
      err << '\n';
      return kExitDomain;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kExitDomain;
    } catch (const InternalError& e) {
      err << "internal error: " << e.what() << '\n';
      return kExitDomain;
    }
  }
  return kExitParse;
}

} // namespace surfsing::cli
