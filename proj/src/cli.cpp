#include "opdet/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <sstream>

#include "opdet/dets.hpp"
#include "opdet/errors.hpp"
#include "opdet/measures.hpp"
#include "opdet/opoly.hpp"
#include "opdet/report_json.hpp"
#include "opdet/verify.hpp"

namespace opdet::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  return out;
}

std::vector<Rational> rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) out.push_back(Rational::parse(s));
  return out;
}

std::vector<unsigned> unsigneds(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& s : split(text)) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size() || s.front() == '-') throw std::invalid_argument("not a multiplicity: '" + s + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

json poly_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  if (out.empty()) out.push_back("0");
  return out;
}

// Flags shared by the subcommands; each subcommand registers the ones it takes.
struct Flags {
  std::string measure;
  std::string kind;
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::size_t upto = 0;
  std::string nodes;
  std::string mults;
  std::string x;
  std::string format = "json";
  std::string id;
  bool all = false;
  unsigned n_max = 3;
  unsigned m_max = 3;
  std::size_t jensen_m_max = 64;
  std::size_t trials = 200;
  std::uint64_t seed = SamplePlan::kDefaultSeed;

  MeasureSpec spec() const { return parse_measure(measure); }
  Rational at() const { return Rational::parse(x); }

  std::size_t need_m(const char* what) const {
    if (!m) throw std::invalid_argument(std::string(what) + " needs --m");
    return *m;
  }

  NodeSet node_set() const {
    if (nodes.empty()) throw std::invalid_argument("--nodes is required here");
    const auto t = rationals(nodes);
    if (mults.empty()) return NodeSet::simple(t);
    const auto ms = unsigneds(mults);
    if (ms.size() != t.size()) throw std::invalid_argument("--nodes and --mults differ in length");
    std::vector<NodeEntry> entries;
    for (std::size_t i = 0; i < t.size(); ++i) entries.push_back({t[i], ms[i]});
    return NodeSet(std::move(entries));
  }
};

void add_format(CLI::App* sub, Flags& f, bool csv) {
  auto* opt = sub->add_option("--format", f.format, "output format");
  opt->check(csv ? CLI::IsMember({"json", "csv"}) : CLI::IsMember({"json"}));
}

int run_moments(const Flags& f, std::ostream& out) {
  const MeasureSpec spec = f.spec();
  std::vector<Rational> mu;
  for (std::size_t k = 0; k <= f.upto; ++k) mu.push_back(moment(spec, k));
  if (f.format == "csv") {
    out << "k,moment\n";
    for (std::size_t k = 0; k < mu.size(); ++k) out << k << ',' << mu[k] << '\n';
  } else {
    json arr = json::array();
    for (const auto& v : mu) arr.push_back(v.to_string());
    out << arr.dump() << '\n';
  }
  return kOk;
}

int run_poly(const Flags& f, std::ostream& out) {
  const MeasureSpec spec = f.spec();
  UniPoly p;
  if (f.kind == "p") {
    p = orth_poly(spec, f.n);
  } else if (f.kind == "monic") {
    p = monic_orth_poly(spec, f.n);
  } else if (f.kind == "q") {
    p = q_poly(spec, f.n);
  } else if (f.kind == "r") {
    p = r_poly(spec, f.need_m("poly r"), f.n);
  } else if (f.kind == "q-nodes") {
    p = q_nodes(spec, f.node_set(), f.n);
  } else if (f.kind == "classical") {
    p = classical_poly(spec, f.n);
  } else {
    // g_{n,k} with k = --m
    const std::size_t k = f.m.value_or(0);
    p = jensen(JensenSeq::from_measure(spec, f.n + k + 1), f.n, k);
  }
  if (!f.x.empty()) {
    out << json(p(f.at()).to_string()).dump() << '\n';
  } else {
    out << poly_json(p).dump() << '\n';
  }
  return kOk;
}

int run_det(const Flags& f, std::ostream& out) {
  const MeasureSpec spec = f.spec();
  Rational v;
  if (f.kind == "slater") {
    if (!f.mults.empty()) throw std::invalid_argument("det slater takes simple nodes; use det general for --mults");
    v = slater(spec, f.n, rationals(f.nodes));
  } else if (f.kind == "general") {
    const NodeSet set = f.node_set();
    v = slater_general(spec, f.n, set, RowPlan::standard(set));
  } else if (f.kind == "symmetrized") {
    v = symmetrized(spec, f.n, f.node_set());
  } else if (f.kind == "wronskian") {
    if (f.x.empty()) throw std::invalid_argument("det wronskian needs --x");
    v = wronskian(spec, f.n, f.need_m("det wronskian"), f.at());
  } else if (f.kind == "hankel") {
    v = hankel_det(spec, static_cast<long>(f.n));
  } else if (f.kind == "hankel-q") {
    v = hankel_q_det(spec, f.n, f.node_set());
  } else if (f.kind == "hankel-r") {
    v = hankel_r_det(spec, f.n, f.node_set());
  } else if (f.kind == "selberg") {
    const NodeSet set = f.nodes.empty() ? NodeSet{} : f.node_set();
    v = selberg_integral(spec, f.n, set, f.x.empty() ? std::nullopt : std::optional(f.at()));
  } else {
    const bool vec = f.kind == "BVec" || f.kind == "CVec";
    const StructureKind kind = f.kind == "B"     ? StructureKind::B
                               : f.kind == "C"   ? StructureKind::C
                               : f.kind == "BVec" ? StructureKind::BVec
                                                  : StructureKind::CVec;
    std::vector<unsigned> ms;
    if (vec) {
      if (f.mults.empty()) throw std::invalid_argument("det " + f.kind + " needs --mults");
      ms = unsigneds(f.mults);
    } else {
      ms = {static_cast<unsigned>(f.need_m(f.kind.c_str()))};
    }
    v = structure_constant(kind, spec, f.n, ms).value;
  }
  out << json(v.to_string()).dump() << '\n';
  return kOk;
}

int run_verify(const Flags& f, std::ostream& out) {
  if (f.all == !f.id.empty()) throw std::invalid_argument("verify takes exactly one of --id and --all");
  SamplePlan plan;
  plan.seed = f.seed;
  plan.n_max = f.n_max;
  plan.m_max = f.m_max;
  std::optional<MeasureSpec> only;
  if (!f.measure.empty()) only = f.spec();

  if (f.all) {
    const auto reports = verify_all(plan, only);
    out << suite_json(reports).dump(2) << '\n';
    return suite_passed(reports) ? kOk : kFailed;
  }
  const IdentityId id = parse_identity(f.id);
  if (only) {
    const auto report = verify_identity(id, *only, plan);
    out << report_json(report).dump(2) << '\n';
    return report.passed() || report.conjecture ? kOk : kFailed;
  }
  std::vector<VerifyReport> reports;
  for (const auto& spec : default_specs(id)) reports.push_back(verify_identity(id, spec, plan));
  out << suite_json(reports).dump(2) << '\n';
  return suite_passed(reports) ? kOk : kFailed;
}

int run_positivity(const Flags& f, std::ostream& out) {
  const auto ms = unsigneds(f.mults);
  const auto t = f.nodes.empty() ? std::vector<Rational>{} : rationals(f.nodes);
  const auto report = positivity_scan(f.spec(), f.n, ms, f.trials, f.seed, t);
  out << report_json(report).dump(2) << '\n';
  return report.passed() ? kOk : kFailed;
}

int run_jensen(const Flags& f, std::ostream& out) {
  const auto table = jensen_convergence(f.spec(), f.at(), f.jensen_m_max);
  if (f.format == "csv") {
    out << table_csv(table);
  } else {
    out << table_json(table).dump(2) << '\n';
  }
  return kOk;
}

// help for the subcommand on the command line, if one got that far
std::string usage(CLI::App& app) {
  const auto subs = app.get_subcommands();
  return subs.empty() ? app.help() : subs.front()->help();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Exact determinant identities for orthogonal polynomials", "opdet"};
  app.require_subcommand(1);

  auto* moments = app.add_subcommand("moments", "moments mu_0..mu_K of a measure");
  moments->add_option("--measure", f.measure, "measure spec")->required();
  moments->add_option("--upto", f.upto, "largest moment order")->required();
  add_format(moments, f, true);

  auto* poly = app.add_subcommand("poly", "a polynomial as ascending coefficients, or its value at --x");
  poly->add_option("kind", f.kind, "p | monic | q | r | q-nodes | classical | jensen")
      ->required()
      ->check(CLI::IsMember({"p", "monic", "q", "r", "q-nodes", "classical", "jensen"}));
  poly->add_option("--measure", f.measure, "measure spec")->required();
  poly->add_option("--n", f.n, "degree index")->required();
  poly->add_option("--m", f.m, "r: the m of r_{m,n}; jensen: the shift k");
  poly->add_option("--nodes", f.nodes, "q-nodes: r1,r2,...");
  poly->add_option("--mults", f.mults, "q-nodes: m1,m2,...");
  poly->add_option("--x", f.x, "evaluate at this rational");
  add_format(poly, f, false);

  auto* det = app.add_subcommand("det", "a determinant or structure constant");
  det->add_option("kind", f.kind,
                  "slater | general | symmetrized | wronskian | hankel | hankel-q | hankel-r | selberg | B | C | BVec | CVec")
      ->required()
      ->check(CLI::IsMember({"slater", "general", "symmetrized", "wronskian", "hankel", "hankel-q", "hankel-r",
                             "selberg", "B", "C", "BVec", "CVec"}));
  det->add_option("--measure", f.measure, "measure spec")->required();
  det->add_option("--n", f.n, "first polynomial index / matrix size")->required();
  det->add_option("--m", f.m, "wronskian order, or m for B and C");
  det->add_option("--nodes", f.nodes, "r1,r2,...");
  det->add_option("--mults", f.mults, "m1,m2,...");
  det->add_option("--x", f.x, "evaluation point");
  add_format(det, f, false);

  auto* verify = app.add_subcommand("verify", "run identity checks and print reports");
  auto* id_opt = verify->add_option("--id", f.id, "identity id");
  verify->add_flag("--all", f.all, "every identity over its default measures")->excludes(id_opt);
  verify->add_option("--measure", f.measure, "restrict to one measure spec");
  verify->add_option("--n-max", f.n_max, "largest n")->check(CLI::Range(1u, 6u));
  verify->add_option("--m-max", f.m_max, "largest m")->check(CLI::Range(1u, 6u));
  verify->add_option("--seed", f.seed, "sampling seed");
  add_format(verify, f, false);

  auto* scan = app.add_subcommand("scan-positivity", "sign scan of confluent Slater determinants");
  scan->add_option("--measure", f.measure, "measure spec")->required();
  scan->add_option("--n", f.n, "first polynomial index")->required();
  scan->add_option("--mults", f.mults, "even multiplicities m1,m2,...")->required();
  scan->add_option("--nodes", f.nodes, "fixed nodes instead of random trials");
  scan->add_option("--trials", f.trials, "number of random node tuples");
  scan->add_option("--seed", f.seed, "sampling seed");
  add_format(scan, f, false);

  auto* jc = app.add_subcommand("jensen-converge", "g_m(x/m) against the limit function");
  jc->add_option("--measure", f.measure, "laguerre or moments spec")->required();
  jc->add_option("--x", f.x, "point x >= 0")->required();
  jc->add_option("--m-max", f.jensen_m_max, "largest m")->check(CLI::Range(std::size_t{1}, std::size_t{512}));
  add_format(jc, f, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << usage(app);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "opdet: " << e.what() << "\n\n" << usage(app);
    return kUsage;
  }

  try {
    if (moments->parsed()) return run_moments(f, out);
    if (poly->parsed()) return run_poly(f, out);
    if (det->parsed()) return run_det(f, out);
    if (verify->parsed()) return run_verify(f, out);
    if (scan->parsed()) return run_positivity(f, out);
    return run_jensen(f, out);
  } catch (const std::invalid_argument& e) {
    err << "opdet: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "opdet: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "opdet: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace opdet::cli
