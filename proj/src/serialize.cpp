#include <nielsen/serialize.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/errors.hpp>

#include <limits>
#include <sstream>

namespace nielsen {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::uint64_t parse_positive(const Json& j, const std::string& path) {
  const BigInt v = parse_bigint(j, path);
  if (v < 1 || !v.fits_ulong_p())
    throw InvalidInput(path + ": expected a positive integer, got " + to_string(v));
  return v.get_ui();
}

Json element_json(const GroupElement& x) {
  Json a = Json::array();
  for (auto r : x.residues) a.push_back(str(r));
  return a;
}

}  // namespace

BigInt parse_bigint(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw InvalidInput(path + ": integers beyond 2^63-1 must be given as strings");
      return from_u64(u);
    }
    return from_i64(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    BigInt v;
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') ok = false;
    if (!ok || v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
      throw InvalidInput(path + ": '" + s + "' is not a decimal integer");
    return v;
  }
  throw InvalidInput(path + ": expected an integer, got " + std::string(j.type_name()));
}

Model parse_model(const Json& j) {
  if (!j.is_object()) throw InvalidInput("model: expected a JSON object");
  Model m;
  if (!j.contains("matrix")) throw InvalidInput("matrix: missing");
  const auto& mat = j.at("matrix");
  if (!mat.is_array()) throw InvalidInput("matrix: expected an array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = 0; i < mat.size(); ++i) {
    const std::string rp = "matrix[" + std::to_string(i) + "]";
    if (!mat[i].is_array()) throw InvalidInput(rp + ": expected an array");
    if (mat[i].size() != mat.size())
      throw InvalidInput(rp + ": matrix is not square (row has " +
                         std::to_string(mat[i].size()) + " entries, expected " +
                         std::to_string(mat.size()) + ")");
    std::vector<BigInt> row;
    for (std::size_t k = 0; k < mat[i].size(); ++k)
      row.push_back(parse_bigint(mat[i][k], rp + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  m.matrix = IntMatrix::from_rows(rows);

  if (!j.contains("group")) throw InvalidInput("group: missing");
  const auto& grp = j.at("group");
  if (!grp.is_array()) throw InvalidInput("group: expected an array of prime powers");
  std::vector<std::uint64_t> factors;
  for (std::size_t i = 0; i < grp.size(); ++i) {
    const std::string gp = "group[" + std::to_string(i) + "]";
    const auto q = parse_positive(grp[i], gp);
    if (!is_prime_power(q))
      throw InvalidInput(gp + ": " + std::to_string(q) + " is not a prime power > 1");
    factors.push_back(q);
  }
  m.group = FiniteAbelianGroup(std::move(factors));

  if (!j.contains("dimension")) throw InvalidInput("dimension: missing");
  const BigInt dim = parse_bigint(j.at("dimension"), "dimension");
  if (dim < 3 || !dim.fits_sint_p())
    throw InvalidInput("dimension: must be an integer >= 3, got " + to_string(dim));
  m.dimension = static_cast<int>(dim.get_si());

  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw InvalidInput("label: expected a string");
    m.label = j.at("label").get<std::string>();
  }
  return m;
}

Model parse_model(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return parse_model(j);
}

std::vector<std::string> model_warnings(const Model& m) {
  std::vector<std::string> out;
  const auto r = m.matrix.size();
  if (static_cast<std::uint64_t>(m.dimension) < 3 * r)
    out.push_back("dimension " + std::to_string(m.dimension) + " < 3 * rank " +
                  std::to_string(r) +
                  ": generators of odd degree >= 3 cannot fit; not a semi-simple model");
  return out;
}

Json to_json(const DivisorSequence& s) {
  Json vals = Json::object();
  for (const auto& [k, v] : s.values()) vals[str(k)] = to_string(v);
  return {{"horizon", str(s.horizon())}, {"kind", to_string(s.kind())}, {"values", vals}};
}

DivisorSequence parse_sequence(const Json& j) {
  if (!j.is_object()) throw InvalidInput("sequence: expected a JSON object");
  if (!j.contains("horizon")) throw InvalidInput("horizon: missing");
  const auto h = parse_positive(j.at("horizon"), "horizon");
  SequenceKind kind = SequenceKind::values;
  if (j.contains("kind")) {
    const auto& k = j.at("kind");
    if (k == "values") kind = SequenceKind::values;
    else if (k == "coefficients") kind = SequenceKind::coefficients;
    else throw InvalidInput("kind: expected \"values\" or \"coefficients\"");
  }
  if (!j.contains("values") || !j.at("values").is_object())
    throw InvalidInput("values: expected an object keyed by divisors");
  std::map<std::uint64_t, BigInt> vals;
  for (const auto& [key, v] : j.at("values").items()) {
    const std::string p = "values." + key;
    const auto k = parse_positive(Json(key), p);
    if (h % k != 0) throw InvalidInput(p + ": " + key + " does not divide the horizon");
    vals[k] = parse_bigint(v, p);
  }
  // unspecified divisors are zero
  for (auto k : divisors(h)) vals.emplace(k, 0);
  return DivisorSequence(h, kind, std::move(vals));
}

Json to_json(const Expansion& e) {
  Json coeffs = Json::object();
  for (const auto& [k, q] : e.coefficients) coeffs[str(k)] = q.get_str();
  Json bad = Json::array();
  for (auto k : e.non_integral) bad.push_back(str(k));
  return {{"horizon", str(e.horizon)},
          {"kind", "coefficients"},
          {"values", coeffs},
          {"integral", e.integral()},
          {"non_integral", bad}};
}

Json to_json(const IntPolynomial& p) {
  Json c = Json::array();
  for (const auto& v : p.coefficients()) c.push_back(to_string(v));
  return {{"coefficients", c}, {"text", p.to_string()}};
}

Json to_json(const SpectrumClassification& c) {
  Json periods = Json::object();
  for (const auto& [d, mult] : c.unity_periods) periods[str(d)] = str(mult);
  return {{"characteristic_polynomial", to_json(c.characteristic)},
          {"unity_periods", periods},
          {"nilpotent_multiplicity", str(c.nilpotent_multiplicity)},
          {"remainder", to_json(c.remainder)},
          {"all_moduli_le_one", c.all_moduli_le_one},
          {"has_eigenvalue_one", c.has_eigenvalue_one},
          {"period_lcm", str(minimal_period_lcm(c))}};
}

Json to_json(const RealizabilityVerdict& v) {
  Json j = {{"realizable", v.realizable}};
  if (v.witness) {
    Json ds = Json::array();
    for (auto d : v.witness->d_set) ds.push_back(str(d));
    j["witness"] = {{"s", str(v.witness->s)},
                    {"d_set", ds},
                    {"restriction_case", to_string(v.witness->restriction_case)},
                    {"used_plain_lcm", v.witness->used_plain_lcm}};
  } else {
    j["witness"] = nullptr;
  }
  if (!v.failure_reason.empty()) j["failure_reason"] = v.failure_reason;
  return j;
}

Json to_json(const Vertex& v) {
  return {{"level", str(v.level)}, {"class", element_json(v.cls)}};
}

Json to_json(const Attachment& a) {
  Json c = Json::object();
  for (const auto& [l, v] : a.coefficients) c[str(l)] = to_string(v);
  return {{"base", to_json(a.base)}, {"coefficients", c}};
}

Json to_json(const RealizationReport& r, const ReidemeisterGraph& g) {
  Json nonzero = Json::array();
  for (std::size_t id = 0; id < r.residuals.size(); ++id)
    if (r.residuals[id] != 0)
      nonzero.push_back({{"vertex", to_json(g.vertex(id))}, {"residual", to_string(r.residuals[id])}});
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"verified", r.verified},
          {"indices_match", r.indices_match},
          {"all_realizable", r.all_realizable},
          {"nonzero_residuals", nonzero},
          {"attachment_verdicts", verdicts}};
}

Json to_json(const ValidatorReport& r) {
  Json items = Json::array();
  for (const auto& v : r.results)
    items.push_back({{"id", v.id}, {"name", v.name}, {"status", to_string(v.status)}, {"detail", v.detail}});
  return {{"horizon", str(r.horizon)}, {"period_lcm", str(r.period_lcm)},
          {"all_passed", r.all_passed()}, {"validators", items}};
}

Json to_json(const EqualityVerdict& v) {
  Json j = {{"status", to_string(v.status)},
            {"spectrum", to_json(v.spectrum)},
            {"certificate_incomplete", v.certificate_incomplete},
            {"diagnostics", to_json(v.diagnostics)}};
  if (v.equality) {
    const auto& c = *v.equality;
    Json ats = Json::array();
    for (const auto& a : c.attachments) ats.push_back(to_json(a));
    Json verdicts = Json::array();
    for (const auto& x : c.report.verdicts) verdicts.push_back(to_json(x));
    j["equality_certificate"] = {{"horizon", str(c.horizon)},
                                 {"period_lcm", str(c.period_lcm)},
                                 {"nf", to_string(c.nf)},
                                 {"attachments", ats},
                                 {"verified", c.report.verified},
                                 {"indices_match", c.report.indices_match},
                                 {"all_realizable", c.report.all_realizable},
                                 {"attachment_verdicts", verdicts}};
  }
  if (v.inequality) {
    const auto& c = *v.inequality;
    Json ex = Json::array(), vals = Json::array(), avoid = Json::array();
    for (auto r : c.exponents) ex.push_back(str(r));
    for (const auto& x : c.index_values) vals.push_back(to_string(x));
    for (auto p : c.avoided_primes) avoid.push_back(str(p));
    j["inequality_certificate"] = {{"exponents", ex},
                                   {"index_values", vals},
                                   {"distinct_count", str(c.distinct_count)},
                                   {"bound", str(c.bound)},
                                   {"witness_horizon", to_string(c.witness_horizon)},
                                   {"avoided_primes", avoid},
                                   {"max_exponent", str(c.max_exponent)},
                                   {"complete", c.complete}};
  }
  return j;
}

Json to_json(const NfNjdSummary& s) {
  Json j = {{"horizon", str(s.horizon)}, {"nf", to_string(s.nf)}, {"status", to_string(s.status)}};
  if (s.njd) {
    j["njd"] = to_string(*s.njd);
  } else {
    j["njd"] = {{"lower_bound", to_string(s.nf)}, {"strictly_greater_at_some_horizon", true}};
  }
  j["witness_horizon"] = s.witness_horizon ? Json(to_string(*s.witness_horizon)) : Json(nullptr);
  j["certificate_incomplete"] = s.certificate_incomplete;
  return j;
}

namespace {

template <typename F>
void for_each_prime_edge(const ReidemeisterGraph& g, F&& emit) {
  for (auto l : g.levels())
    for (auto k : g.levels()) {
      if (k <= l || k % l != 0 || !is_prime(k / l)) continue;
      for (std::uint64_t x = 0; x < g.group().order(); ++x) {
        const Vertex from{l, g.group().element_at(x)};
        emit(from, g.boost(from, k));
      }
    }
}

}  // namespace

Json graph_to_json(const ReidemeisterGraph& g) {
  const auto cls = classify(g);
  Json factors = Json::array();
  for (auto q : g.group().factors()) factors.push_back(str(q));
  Json levels = Json::array(), lef = Json::object();
  for (auto k : g.levels()) {
    levels.push_back(str(k));
    lef[str(k)] = to_string(g.lefschetz().at(k));
  }
  Json verts = Json::array();
  for (std::size_t id = 0; id < g.vertex_count(); ++id) {
    Json v = to_json(g.vertex(id));
    v["index"] = to_string(g.index(id));
    v["essential"] = cls.flags[id].essential;
    v["irreducible"] = cls.flags[id].irreducible;
    verts.push_back(std::move(v));
  }
  Json edges = Json::array();
  for_each_prime_edge(g, [&](const Vertex& a, const Vertex& b) {
    edges.push_back({{"from", to_json(a)}, {"to", to_json(b)}});
  });
  return {{"horizon", str(g.horizon())}, {"group", factors},   {"levels", levels},
          {"lefschetz", lef},            {"vertices", verts}, {"edges", edges}};
}

std::string dot_export(const ReidemeisterGraph& g) {
  const auto cls = classify(g);
  auto node = [](const Vertex& v) { return "\"" + v.to_string() + "\""; };
  std::ostringstream os;
  os << "digraph reidemeister {\n  rankdir=LR;\n";
  for (auto k : g.levels()) {
    os << "  subgraph cluster_" << k << " {\n    label=\"k=" << k << "\";\n";
    const auto pos = g.level_position(k);
    for (std::uint64_t x = 0; x < g.group().order(); ++x) {
      const auto id = pos * g.group().order() + x;
      const auto v = g.vertex(id);
      os << "    " << node(v) << " [label=\"" << v.to_string() << " idx=" << to_string(g.index(id))
         << "\", shape=" << (cls.flags[id].essential ? "doublecircle" : "circle");
      if (cls.flags[id].irreducible) os << ", style=bold";
      os << "];\n";
    }
    os << "  }\n";
  }
  for_each_prime_edge(g, [&](const Vertex& a, const Vertex& b) {
    os << "  " << node(a) << " -> " << node(b) << ";\n";
  });
  os << "}\n";
  return os.str();
}

}  // namespace nielsen
