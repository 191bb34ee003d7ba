#include <nielsen/cli.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/decision.hpp>
#include <nielsen/errors.hpp>
#include <nielsen/reid_graph.hpp>
#include <nielsen/serialize.hpp>
#include <nielsen/smooth_real.hpp>
#include <nielsen/spectrum.hpp>
#include <nielsen/validators.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace nielsen::cli {

namespace {

struct Options {
  std::string input = "-";
  std::optional<std::uint64_t> n;
  std::optional<int> dimension;
  std::string format = "text";
  std::uint64_t max_exponent = default_max_exponent;
  std::optional<std::uint64_t> seed;  // reserved for randomized harnesses
};

std::string read_input(const Options& o, std::istream& in) {
  std::ostringstream buf;
  if (o.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(o.input);
    if (!f) throw InvalidInput("cannot open input file '" + o.input + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Model load_model(const Options& o, std::istream& in, std::ostream& err) {
  Model m = parse_model(parse_json(read_input(o, in)));
  if (o.dimension) {
    if (*o.dimension < 3) throw InvalidInput("--dimension must be >= 3");
    m.dimension = *o.dimension;
  }
  for (const auto& w : model_warnings(m)) err << "warning: " << w << "\n";
  return m;
}

std::uint64_t horizon_or_period(const Options& o, const Model& m) {
  if (o.n) return *o.n;
  return minimal_period_lcm(classify_spectrum(m.matrix));
}

void print_sequence(std::ostream& out, const char* name, const DivisorSequence& s) {
  for (const auto& [k, v] : s.values()) out << name << "(" << k << ") = " << to_string(v) << "\n";
}

void print_validators(std::ostream& out, const ValidatorReport& r) {
  out << "validators (n = " << r.horizon << ", d = " << r.period_lcm << "):\n";
  for (const auto& v : r.results) {
    out << "  " << v.id << " " << to_string(v.status) << "  " << v.name;
    if (!v.detail.empty()) out << " [" << v.detail << "]";
    out << "\n";
  }
}

void print_verdict(std::ostream& out, const RealizabilityVerdict& v) {
  out << "realizable: " << (v.realizable ? "yes" : "no") << "\n";
  if (v.witness) {
    out << "witness: s = " << v.witness->s << ", d_set = {";
    bool first = true;
    for (auto d : v.witness->d_set) {
      out << (first ? "" : ",") << d;
      first = false;
    }
    out << "}, case " << to_string(v.witness->restriction_case)
        << (v.witness->used_plain_lcm ? ", via LCM" : "") << "\n";
  } else {
    out << "reason: " << v.failure_reason << "\n";
  }
}

int cmd_lefschetz(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Model m = load_model(o, in, err);
  const auto seq = lefschetz_sequence(m.matrix, horizon_or_period(o, m));
  if (o.format == "json") out << to_json(seq).dump(2) << "\n";
  else print_sequence(out, "L", seq);
  return ok;
}

int cmd_dold(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Model m = load_model(o, in, err);
  const auto seq = lefschetz_sequence(m.matrix, horizon_or_period(o, m));
  const auto ex = expand(seq);
  const bool dold = check_dold(seq);
  if (o.format == "json") {
    out << Json{{"lefschetz", to_json(seq)}, {"expansion", to_json(ex)}, {"dold", dold}}.dump(2) << "\n";
    return ok;
  }
  print_sequence(out, "L", seq);
  for (const auto& [k, a] : ex.coefficients) out << "a(" << k << ") = " << a.get_str() << "\n";
  out << "dold congruences: " << (dold ? "hold" : "FAIL") << "\n";
  return ok;
}

int cmd_spectrum(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Model m = load_model(o, in, err);
  const auto c = classify_spectrum(m.matrix);
  if (o.format == "json") {
    out << to_json(c).dump(2) << "\n";
    return ok;
  }
  out << "characteristic polynomial: " << c.characteristic.to_string() << "\n";
  out << "nilpotent multiplicity: " << c.nilpotent_multiplicity << "\n";
  out << "unity periods:";
  for (const auto& [d, mult] : c.unity_periods) out << " " << d << (mult > 1 ? "^" + std::to_string(mult) : "");
  out << "\nremainder: " << c.remainder.to_string() << "\n";
  out << "all moduli <= 1: " << (c.all_moduli_le_one ? "yes" : "no") << "\n";
  out << "eigenvalue 1: " << (c.has_eigenvalue_one ? "yes" : "no") << "\n";
  out << "d = " << minimal_period_lcm(c) << "\n";
  return ok;
}

int cmd_realizable(const Options& o, std::istream& in, std::ostream& out, std::ostream&) {
  const Json j = parse_json(read_input(o, in));
  std::optional<int> dim = o.dimension;
  if (!dim && j.is_object() && j.contains("dimension")) {
    const BigInt v = parse_bigint(j.at("dimension"), "dimension");
    if (!v.fits_sint_p()) throw InvalidInput("dimension: out of range");
    dim = static_cast<int>(v.get_si());
  }
  if (!dim) throw InvalidInput("realizable: --dimension is required");
  DivisorSequence seq = parse_sequence(j);
  if (seq.kind() == SequenceKind::values) {
    const auto ex = expand(seq);
    if (!ex.integral())
      throw InvalidInput("sequence violates the Dold congruences at k = " +
                         std::to_string(ex.non_integral.front()));
    seq = ex.as_sequence();
  }
  const auto v = decide_sequence_realizable(seq, *dim);
  if (o.format == "json") out << to_json(v).dump(2) << "\n";
  else print_verdict(out, v);
  return ok;
}

int cmd_graph(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Model m = load_model(o, in, err);
  const auto g = build_graph(m, horizon_or_period(o, m));
  if (o.format == "dot") {
    out << dot_export(g);
  } else if (o.format == "json") {
    out << graph_to_json(g).dump(2) << "\n";
  } else {
    const auto cls = classify(g);
    for (std::size_t id = 0; id < g.vertex_count(); ++id)
      out << g.vertex(id).to_string() << " idx=" << to_string(g.index(id))
          << (cls.flags[id].essential ? " essential" : "")
          << (cls.flags[id].irreducible ? " irreducible" : "") << "\n";
  }
  return ok;
}

int cmd_nf(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Model m = load_model(o, in, err);
  const auto n = horizon_or_period(o, m);
  const auto nf = nf_number(build_graph(m, n));
  if (o.format == "json") out << Json{{"horizon", std::to_string(n)}, {"nf", to_string(nf)}}.dump(2) << "\n";
  else out << "NF_" << n << " = " << to_string(nf) << "\n";
  return ok;
}

int cmd_decide(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Model m = load_model(o, in, err);
  const auto v = decide_equality(m, o.n, o.max_exponent);
  const auto n = o.n.value_or(minimal_period_lcm(v.spectrum));
  const auto summary = nf_njd_summary(m, n, o.max_exponent);
  if (o.format == "json") {
    Json j = to_json(v);
    j["summary"] = to_json(summary);
    out << j.dump(2) << "\n";
  } else {
    out << "status: " << to_string(v.status) << "\n";
    out << "n = " << n << "\n";
    out << "nf = " << to_string(summary.nf) << "\n";
    if (summary.njd) out << "njd = " << to_string(*summary.njd) << "\n";
    else out << "njd >= " << to_string(summary.nf) << " (strictly greater at some horizon)\n";
    if (v.equality) {
      const auto& c = *v.equality;
      out << "certificate: horizon " << c.horizon << ", d = " << c.period_lcm << ", "
          << c.attachments.size() << " attachment(s), verified = "
          << (c.report.verified ? "yes" : "no") << "\n";
      for (const auto& a : c.attachments) {
        out << "  C" << a.base.to_string() << " =";
        bool any = false;
        for (const auto& [l, x] : a.coefficients) {
          if (x == 0) continue;
          out << " " << (x < 0 ? "- " : (any ? "+ " : "")) << to_string(abs(x)) << "*reg_" << l;
          any = true;
        }
        if (!any) out << " 0";
        out << "\n";
      }
    }
    if (v.inequality) {
      const auto& c = *v.inequality;
      out << "witness exponents:";
      for (auto r : c.exponents) out << " " << r;
      out << "\nindex values:";
      for (const auto& x : c.index_values) out << " " << to_string(x);
      out << "\ndistinct values: " << c.distinct_count << " (bound " << c.bound << ")\n";
      if (c.complete) out << "witness n* = " << to_string(c.witness_horizon) << "\n";
      else out << "witness search exhausted max exponent " << c.max_exponent << "\n";
    }
    print_validators(out, v.diagnostics);
  }
  return v.certificate_incomplete ? search_cap_exceeded : ok;
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Model m = load_model(o, in, err);
  const auto r = run_validators(m, horizon_or_period(o, m));
  if (o.format == "json") out << to_json(r).dump(2) << "\n";
  else print_validators(out, r);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Periodic points of self-maps of Lie groups with f_# = id"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const Options&, std::istream&, std::ostream&, std::ostream&);
  const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> commands = {
      {"lefschetz", {"L(f^k) = det(I - A^k) for k | n", cmd_lefschetz}},
      {"dold", {"Lefschetz sequence and its periodic expansion", cmd_dold}},
      {"spectrum", {"cyclotomic classification of the characteristic polynomial", cmd_spectrum}},
      {"realizable", {"smooth realizability of a coefficient sequence", cmd_realizable}},
      {"graph", {"Reidemeister orbit graph (text, json or dot)", cmd_graph}},
      {"nf", {"least number of n-periodic points NF_n", cmd_nf}},
      {"decide", {"NF_n = NJD_n verdict with certificate", cmd_decide}},
      {"validate", {"structural checks on the model", cmd_validate}},
  };
  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, info] : commands) {
    auto* sub = app.add_subcommand(name, info.first);
    sub->add_option("--input,-i", o.input, "model or sequence JSON (default: stdin)");
    sub->add_option("--n,-n", o.n, "horizon n (default: d)")->check(CLI::PositiveNumber);
    sub->add_option("--dimension,-m", o.dimension, "override the manifold dimension");
    sub->add_option("--format,-f", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--max-exponent", o.max_exponent, "witness search cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "seed for randomized harnesses");
    handlers.emplace(sub, info.second);
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (o.format == "dot" && chosen->get_name() != "graph") {
    err << "error: --format dot is only available for graph\n";
    return invalid_input;
  }
  try {
    return handlers.at(chosen)(o, in, out, err);
  } catch (const ModelInconsistency& e) {
    err << "model inconsistency: " << e.what() << "\n";
    return model_inconsistency;
  } catch (const SearchCapExceeded& e) {
    err << "search cap exceeded: " << e.what() << "\n";
    return search_cap_exceeded;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return invalid_input;
  }
}

}  // namespace nielsen::cli
