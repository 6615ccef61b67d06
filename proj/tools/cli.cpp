#include "cli.hpp"

#include "cmreg/betti.hpp"
#include "cmreg/families.hpp"
#include "cmreg/groebner.hpp"
#include "cmreg/monomial_ideal.hpp"
#include "cmreg/parse.hpp"
#include "cmreg/regularity.hpp"
#include "cmreg/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cmreg::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::optional<int> d;
  std::optional<int> n;
  std::optional<int> i;
  std::optional<int> j;
  std::string input;
  std::string order = "degrevlex";
  std::string method = "auto";
  unsigned power = 1;
  std::optional<int> dmin;
  std::optional<int> dmax;
  double timeout = 0;
  bool json = false;
  bool verbose = false;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Source {
  Json input;
  Ring ring;
  std::vector<Polynomial> generators;
  Prediction predicted;
  std::string label;
};

FamilyParams params_of(const Options& o) { return {o.d, o.n, o.i, o.j}; }

Json params_json(const FamilyParams& p) {
  Json out = Json::object();
  if (p.d) out["d"] = *p.d;
  if (p.n) out["n"] = *p.n;
  if (p.i) out["i"] = *p.i;
  if (p.j) out["j"] = *p.j;
  return out;
}

/// Stored prediction for the power-th power of a family ideal.
Prediction prediction_for_power(const FamilyInstance& f, unsigned power) {
  if (power == 1) return f.predicted;
  if (power == 2) return f.predicted_square;
  return Prediction::unknown();
}

std::string power_suffix(unsigned power) { return power > 1 ? "^" + std::to_string(power) : ""; }

Source load(const Options& o) {
  if (o.family.empty() == o.input.empty()) throw UsageError("give exactly one of --family and --input");
  if (o.family.empty()) {
    IdealFile file = read_ideal_file(o.input);
    Json input = {{"file", o.input}, {"power", o.power}};
    std::vector<Polynomial> gens =
        o.power > 1 ? ideal_power(file.generators, o.power) : std::move(file.generators);
    return {std::move(input), std::move(file.ring), std::move(gens), Prediction::unknown(),
            o.input + power_suffix(o.power)};
  }
  FamilyInstance f = make_family(o.family, params_of(o));
  Json input = {{"family", f.name}, {"params", params_json(f.params)}, {"power", o.power}};
  std::vector<Polynomial> gens = o.power > 1 ? ideal_power(f.generators, o.power) : std::move(f.generators);
  return {std::move(input), f.ring, std::move(gens), prediction_for_power(f, o.power),
          f.label() + power_suffix(o.power)};
}

BuchbergerOptions groebner_options(const Options& o) {
  BuchbergerOptions opts;
  if (o.timeout > 0) {
    opts.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(o.timeout));
  }
  return opts;
}

Json prediction_json(const Prediction& p) {
  switch (p.kind) {
    case Prediction::Kind::none:
      return nullptr;
    case Prediction::Kind::exact:
      return {{"kind", "exact"}, {"value", p.value}, {"source", p.source}};
    case Prediction::Kind::lower_bound:
      return {{"kind", "lower_bound"}, {"value", p.value}, {"source", p.source}};
  }
  return nullptr;
}

Json optional_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

void emit(std::ostream& out, const std::string& command, Json input, Json result, const Prediction& predicted,
          const std::optional<bool>& match, Json timings) {
  Json doc = {{"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)},
              {"predicted", prediction_json(predicted)},
              {"match", optional_json(match)},
              {"timings", std::move(timings)}};
  out << doc.dump(2) << '\n';
}

std::vector<Polynomial> as_polynomials(const MonomialIdeal& ideal) {
  std::vector<Polynomial> out;
  out.reserve(ideal.size());
  for (const auto& m : ideal.gens()) out.push_back(Polynomial::monomial(m));
  return out;
}

Json monomial_list(const MonomialIdeal& ideal, const Ring& ring) {
  Json out = Json::array();
  for (const auto& m : ideal.gens()) out.push_back(to_string(m, ring.names()));
  return out;
}

Json polynomial_list(const std::vector<Polynomial>& polys, const Ring& ring) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(to_string(p, ring));
  return out;
}

std::string match_word(const std::optional<bool>& match) {
  if (!match) return "n/a";
  return *match ? "MATCH" : "MISMATCH";
}

int exit_for(const std::optional<bool>& match) { return match == false ? kExitMismatch : kExitMatch; }

int cmd_family(const Options& o, std::ostream& out) {
  Stopwatch clock;
  const Source s = load(o);
  if (o.json) {
    Json result = {{"ring", s.ring.names()}, {"generators", polynomial_list(s.generators, s.ring)}};
    emit(out, "family", s.input, std::move(result), s.predicted, std::nullopt, {{"total_seconds", clock.seconds()}});
    return kExitMatch;
  }
  out << "# " << s.label;
  if (s.predicted.known()) out << ", predicted reg " << s.predicted.describe();
  out << '\n' << format_ideal_file(s.ring, s.generators);
  return kExitMatch;
}

int cmd_gb(const Options& o, std::ostream& out) {
  const Source s = load(o);
  Stopwatch clock;
  const GroebnerBasis gb = buchberger(s.generators, MonomialOrder::degrevlex, groebner_options(o));
  const double elapsed = clock.seconds();
  if (o.json) {
    const auto& st = gb.stats();
    Json result = {{"order", "degrevlex"},
                   {"elements", polynomial_list(gb.elements(), s.ring)},
                   {"stats",
                    {{"pairs_created", st.pairs_created},
                     {"pairs_reduced", st.pairs_reduced},
                     {"zero_reductions", st.zero_reductions},
                     {"max_basis_size", st.max_basis_size}}}};
    emit(out, "gb", s.input, std::move(result), s.predicted, std::nullopt, {{"groebner_seconds", elapsed}});
    return kExitMatch;
  }
  out << "# reduced degrevlex Groebner basis of " << s.label << ": " << gb.size() << " elements\n"
      << format_ideal_file(s.ring, gb.elements());
  if (o.verbose) out << "# groebner " << elapsed << " s\n";
  return kExitMatch;
}

int cmd_initial(const Options& o, std::ostream& out) {
  const Source s = load(o);
  Stopwatch clock;
  std::size_t gb_size = 0;
  const MonomialIdeal initial = initial_ideal_of(s.generators, groebner_options(o), &gb_size);
  const double elapsed = clock.seconds();
  if (o.json) {
    Json result = {{"generators", monomial_list(initial, s.ring)}, {"groebner_size", gb_size}};
    emit(out, "initial", s.input, std::move(result), s.predicted, std::nullopt, {{"groebner_seconds", elapsed}});
    return kExitMatch;
  }
  out << "# in(" << s.label << ") under degrevlex: " << initial.size() << " minimal generators\n"
      << format_ideal_file(s.ring, as_polynomials(initial));
  return kExitMatch;
}

int cmd_weakly_stable(const Options& o, std::ostream& out) {
  const Source s = load(o);
  Stopwatch clock;
  const MonomialIdeal initial = initial_ideal_of(s.generators, groebner_options(o));
  const double gb_seconds = clock.seconds();
  const WeakStabilityReport report = weak_stability(initial);
  const double total = clock.seconds();
  const auto& names = s.ring.names();
  if (o.json) {
    Json failures = Json::array();
    for (const auto& f : report.failures) {
      failures.push_back({{"generator", to_string(initial.gens()[f.generator], names)},
                          {"variable", names[f.variable - 1]}});
    }
    Json result = {{"weakly_stable", report.stable}, {"failures", std::move(failures)}};
    emit(out, "weakly-stable", s.input, std::move(result), s.predicted, std::nullopt,
         {{"groebner_seconds", gb_seconds}, {"stability_seconds", total - gb_seconds}});
    return kExitMatch;
  }
  out << "in(" << s.label << ") is " << (report.stable ? "" : "not ") << "weakly stable\n";
  for (const auto& f : report.failures) {
    const Monomial& u = initial.gens()[f.generator];
    out << "  " << to_string(u, names) << ": no power of " << names[f.variable - 1] << " times "
        << to_string(strip_max(u), names) << " lies in in(I)\n";
  }
  return kExitMatch;
}

std::string method_phrase(RegularityMethod m) {
  return m == RegularityMethod::caviglia ? "caviglia formula" : "betti oracle";
}

Json regularity_result(const RegularityReport& r, const Ring& ring) {
  Json result = {{"value", r.value},
                 {"exact", r.exact},
                 {"method", to_string(r.method)},
                 {"weakly_stable", r.weakly_stable},
                 {"monomial_input", r.monomial_input},
                 {"groebner_size", r.groebner_size},
                 {"initial", monomial_list(r.initial, ring)}};
  if (r.caviglia) {
    const CavigliaTerm& t = r.caviglia->terms[r.caviglia->attaining];
    result["attained_at"] = {{"generator", to_string(t.generator, ring.names())},
                             {"escape_degree", t.escape},
                             {"witness", to_string(t.witness, ring.names())}};
  }
  return result;
}

Json timings_json(const PhaseTimings& t) {
  return {{"groebner_seconds", t.groebner_seconds},
          {"stability_seconds", t.stability_seconds},
          {"regularity_seconds", t.regularity_seconds}};
}

int cmd_reg(const Options& o, std::ostream& out) {
  const Source s = load(o);
  const RegularityReport r = analyze_regularity(s.generators, {parse_method(o.method), groebner_options(o)});
  const std::optional<bool> match = s.predicted.matches(r.value);
  if (o.json) {
    emit(out, "reg", s.input, regularity_result(r, s.ring), s.predicted, match, timings_json(r.timings));
    return exit_for(match);
  }
  out << "reg = " << r.value << " (" << method_phrase(r.method) << " on " << (r.monomial_input ? "I" : "in(I)");
  if (!r.exact) out << "; upper bound, in(I) not weakly stable";
  out << "); ";
  if (s.predicted.known()) {
    out << "predicted " << s.predicted.describe() << "; " << match_word(match) << '\n';
  } else {
    out << "no prediction\n";
  }
  if (o.verbose) {
    const auto& names = s.ring.names();
    out << "  input: " << s.label << '\n'
        << "  in(I): " << r.initial.size() << " minimal generators, Groebner basis size " << r.groebner_size
        << ", " << (r.weakly_stable ? "weakly stable" : "not weakly stable") << '\n';
    if (r.caviglia) {
      const CavigliaTerm& t = r.caviglia->terms[r.caviglia->attaining];
      out << "  attained at " << to_string(t.generator, names) << " with C = " << t.escape << " (witness "
          << to_string(t.witness, names) << ")\n";
    }
    if (s.predicted.known()) out << "  claim: " << s.predicted.source << '\n';
    out << "  timings: groebner " << r.timings.groebner_seconds << " s, stability " << r.timings.stability_seconds
        << " s, regularity " << r.timings.regularity_seconds << " s\n";
  }
  return exit_for(match);
}

using GradedBetti = std::map<std::pair<std::size_t, std::uint64_t>, std::size_t>;

/// Rows j - i, columns i; zero entries shown as '.', empty rows skipped.
void print_diagram(std::ostream& out, const GradedBetti& graded) {
  std::size_t columns = 0;
  std::map<std::int64_t, std::map<std::size_t, std::size_t>> rows;
  std::map<std::size_t, std::size_t> totals;
  std::size_t width = 1;
  for (const auto& [key, rank] : graded) {
    const auto [i, j] = key;
    rows[static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i)][i] += rank;
    totals[i] += rank;
    columns = std::max(columns, i + 1);
  }
  for (const auto& [i, t] : totals) width = std::max(width, std::to_string(t).size());
  std::size_t label = std::string("total").size();
  for (const auto& [r, _] : rows) label = std::max(label, std::to_string(r).size());
  out << std::setw(static_cast<int>(label + 1)) << "";
  for (std::size_t i = 0; i < columns; ++i) out << ' ' << std::setw(static_cast<int>(width)) << i;
  out << '\n' << std::setw(static_cast<int>(label)) << "total" << ':';
  for (std::size_t i = 0; i < columns; ++i) out << ' ' << std::setw(static_cast<int>(width)) << totals[i];
  out << '\n';
  for (const auto& [r, entries] : rows) {
    out << std::setw(static_cast<int>(label)) << r << ':';
    for (std::size_t i = 0; i < columns; ++i) {
      const auto it = entries.find(i);
      out << ' ' << std::setw(static_cast<int>(width));
      if (it == entries.end()) {
        out << '.';
      } else {
        out << it->second;
      }
    }
    out << '\n';
  }
}

Json graded_json(const GradedBetti& graded) {
  Json out = Json::array();
  for (const auto& [key, rank] : graded) out.push_back({{"i", key.first}, {"j", key.second}, {"beta", rank}});
  return out;
}

int cmd_betti(const Options& o, std::ostream& out) {
  const Source s = load(o);
  Stopwatch clock;
  const MonomialIdeal initial = initial_ideal_of(s.generators, groebner_options(o));
  const double gb_seconds = clock.seconds();
  const BettiTable table = betti_table(initial);
  const std::int64_t reg = regularity_from_betti(table);
  const double total = clock.seconds();
  const bool monomial = std::all_of(s.generators.begin(), s.generators.end(),
                                    [](const Polynomial& g) { return g.size() <= 1; });
  const std::string of = monomial ? "I" : "in(I)";
  if (o.json) {
    Json entries = Json::array();
    for (const auto& e : table.entries()) {
      entries.push_back({{"i", e.homological},
                         {"multidegree", to_string(e.multidegree, s.ring.names())},
                         {"rank", e.rank}});
    }
    Json result = {{"of", of},
                   {"regularity", reg},
                   {"projective_dimension", table.projective_dimension()},
                   {"ideal", graded_json(table.graded())},
                   {"quotient", graded_json(table.graded_quotient())},
                   {"multigraded", std::move(entries)}};
    emit(out, "betti", s.input, std::move(result), s.predicted, std::nullopt,
         {{"groebner_seconds", gb_seconds}, {"betti_seconds", total - gb_seconds}});
    return kExitMatch;
  }
  out << "# Betti numbers of " << of << " for " << s.label << '\n';
  out << "beta_{i,j}(" << of << "), rows j - i:\n";
  print_diagram(out, table.graded());
  out << "beta_{i,j}(S/" << of << "), rows j - i:\n";
  print_diagram(out, table.graded_quotient());
  out << "reg(" << of << ") = " << reg << '\n';
  return kExitMatch;
}

std::string variable_list(const std::vector<std::size_t>& vars) {
  if (vars.empty()) return "(none)";
  std::string out;
  for (std::size_t v : vars) out += (out.empty() ? "x" : " x") + std::to_string(v);
  return out;
}

int cmd_jump_check(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("jump-check needs --n");
  Stopwatch clock;
  const WitnessReport r = jump_check(*o.n, groebner_options(o));
  const double elapsed = clock.seconds();
  const Ring ring = Ring::standard(static_cast<std::size_t>(jump_ring_size(*o.n)));
  const bool failed = r.conclusion == WitnessConclusion::failed;
  if (o.json) {
    Json identities = Json::array();
    for (const auto& c : r.identities) {
      identities.push_back({{"claim", c.description}, {"polynomial", to_string(c.polynomial, ring)}, {"holds", c.holds}});
    }
    Json result = {{"conclusion", to_string(r.conclusion)},
                   {"initial_ideal_matches", r.initial_ideal_matches},
                   {"initial_weakly_stable", r.initial_weakly_stable},
                   {"ideal_regularity", r.ideal_regularity},
                   {"alpha_nonzero", r.alpha_nonzero},
                   {"annihilating_variables", r.annihilating_variables},
                   {"surviving_variables", r.surviving_variables},
                   {"h0_complete", r.h0_complete ? Json(*r.h0_complete) : Json(nullptr)},
                   {"torsion_exponent", r.torsion_exponent ? Json(*r.torsion_exponent) : Json(nullptr)},
                   {"identities", std::move(identities)},
                   {"notes", r.notes}};
    const FamilyInstance f = jump(*o.n);
    emit(out, "jump-check", {{"family", "jump"}, {"params", {{"n", *o.n}}}, {"power", 2}}, std::move(result),
         f.predicted_square, !failed, {{"total_seconds", elapsed}});
    return failed ? kExitMismatch : kExitMatch;
  }
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "jump(n=" << r.n << "): J = I^2 in " << ring.size() << " variables, alpha = x1*x2*x3*x4\n"
      << "in(I) is the list of quadrics in x1..x" << r.n + 1 << ": " << yes(r.initial_ideal_matches) << '\n'
      << "in(I) weakly stable: " << yes(r.initial_weakly_stable) << ", reg(I) = " << r.ideal_regularity << '\n';
  for (const auto& c : r.identities) out << (c.holds ? "[ok]   " : "[FAIL] ") << c.description << '\n';
  out << "alpha not in J: " << yes(r.alpha_nonzero) << '\n'
      << "annihilating variables: " << variable_list(r.annihilating_variables) << '\n'
      << "surviving variables: " << variable_list(r.surviving_variables) << '\n';
  if (r.torsion_exponent) out << "torsion exponent N = " << *r.torsion_exponent << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  out << "conclusion: " << to_string(r.conclusion) << '\n';
  return failed ? kExitMismatch : kExitMatch;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.family.empty() || !o.input.empty()) throw UsageError("table needs --family and no --input");
  if (!o.dmin || !o.dmax) throw UsageError("table needs --dmin and --dmax");
  if (*o.dmin > *o.dmax) throw UsageError("--dmin exceeds --dmax");
  if (o.family == "terai" || o.family == "jump") throw UsageError("family " + o.family + " has no parameter d");
  const RegularityMethod method = parse_method(o.method);

  Stopwatch clock;
  Json rows = Json::array();
  std::ostringstream text;
  bool all_match = true;
  FamilyParams fixed = params_of(o);
  fixed.d.reset();
  text << "# " << o.family << power_suffix(o.power);
  if (const Json p = params_json(fixed); !p.empty()) {
    for (const auto& [k, v] : p.items()) text << ' ' << k << '=' << v.get<int>();
  }
  text << ", method " << o.method << '\n';
  text << std::left << std::setw(6) << "d" << std::setw(12) << "computed" << std::setw(12) << "predicted"
       << "match\n";
  for (int d = *o.dmin; d <= *o.dmax; ++d) {
    FamilyParams p = fixed;
    p.d = d;
    const FamilyInstance f = make_family(o.family, p);
    const std::vector<Polynomial> gens = o.power > 1 ? ideal_power(f.generators, o.power) : f.generators;
    const Prediction predicted = prediction_for_power(f, o.power);
    const RegularityReport r = analyze_regularity(gens, {method, groebner_options(o)});
    const std::optional<bool> match = predicted.matches(r.value);
    all_match = all_match && match != false;
    rows.push_back({{"d", d},
                    {"computed", r.value},
                    {"exact", r.exact},
                    {"method", to_string(r.method)},
                    {"predicted", prediction_json(predicted)},
                    {"match", optional_json(match)},
                    {"seconds", r.timings.groebner_seconds + r.timings.stability_seconds +
                                    r.timings.regularity_seconds}});
    text << std::setw(6) << d << std::setw(12) << r.value << std::setw(12)
         << (predicted.known() ? predicted.describe() : "-") << match_word(match);
    if (!r.exact) text << " (upper bound)";
    text << '\n';
  }
  if (o.json) {
    Json input = {{"family", o.family}, {"params", params_json(fixed)}, {"dmin", *o.dmin}, {"dmax", *o.dmax},
                  {"power", o.power}};
    emit(out, "table", std::move(input), {{"rows", std::move(rows)}}, Prediction::unknown(), all_match,
         {{"total_seconds", clock.seconds()}});
  } else {
    out << text.str();
  }
  return all_match ? kExitMatch : kExitMismatch;
}

void add_source_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "family name")->check(CLI::IsMember(family_names()));
  cmd->add_option("--d", o.d, "degree parameter d");
  cmd->add_option("--n", o.n, "size parameter n");
  cmd->add_option("--i", o.i, "exponent parameter i (caviglia-ij)");
  cmd->add_option("--j", o.j, "exponent parameter j (caviglia-ij)");
  cmd->add_option("--input", o.input, "ideal file")->check(CLI::ExistingFile);
  cmd->add_option("--power", o.power, "analyze the K-th power of the ideal")->check(CLI::Range(1u, 64u));
  cmd->add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"degrevlex"}));
}

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "machine-readable output");
  cmd->add_flag("-v,--verbose", o.verbose, "extra detail");
  cmd->add_option("--timeout", o.timeout, "Groebner basis time limit in seconds (0 = none)")
      ->check(CLI::NonNegativeNumber);
}

void add_method_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "regularity method")->check(CLI::IsMember({"caviglia", "betti", "auto"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Castelnuovo-Mumford regularity of polynomial ideals through degrevlex initial ideals", "cmreg"};
  app.require_subcommand(1);
  Options o;

  CLI::App* family = app.add_subcommand("family", "print the generators of a family instance");
  CLI::App* gb = app.add_subcommand("gb", "reduced degrevlex Groebner basis");
  CLI::App* initial = app.add_subcommand("initial", "minimal generators of in(I)");
  CLI::App* stable = app.add_subcommand("weakly-stable", "weak stability test of in(I)");
  CLI::App* reg = app.add_subcommand("reg", "regularity with predicted value and MATCH/MISMATCH");
  CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers of in(I)");
  CLI::App* jumpc = app.add_subcommand("jump-check", "membership and H^0 witness checks for jump(n) at k = 2");
  CLI::App* table = app.add_subcommand("table", "regularity over a range of d");

  for (CLI::App* cmd : {family, gb, initial, stable, reg, betti, table}) {
    add_source_options(cmd, o);
    add_common_options(cmd, o);
  }
  add_method_option(reg, o);
  add_method_option(table, o);
  table->add_option("--dmin", o.dmin, "first d")->required();
  table->add_option("--dmax", o.dmax, "last d")->required();
  jumpc->add_option("--n", o.n, "n >= 3")->required();
  add_common_options(jumpc, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitMatch : kExitUsage;
  }

  try {
    if (*family) return cmd_family(o, out);
    if (*gb) return cmd_gb(o, out);
    if (*initial) return cmd_initial(o, out);
    if (*stable) return cmd_weakly_stable(o, out);
    if (*reg) return cmd_reg(o, out);
    if (*betti) return cmd_betti(o, out);
    if (*jumpc) return cmd_jump_check(o, out);
    if (*table) return cmd_table(o, out);
  } catch (const GroebnerTimeout& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cmreg::cli
