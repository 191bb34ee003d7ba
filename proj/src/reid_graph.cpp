#include <nielsen/reid_graph.hpp>

#include <nielsen/arith.hpp>
#include <nielsen/errors.hpp>
#include <nielsen/int_matrix.hpp>

#include <sstream>

namespace nielsen {

std::string Vertex::to_string() const {
  return std::to_string(level) + ":" + cls.to_string();
}

// --- ReidemeisterGraph -------------------------------------------------------

ReidemeisterGraph::ReidemeisterGraph(Model model, std::uint64_t horizon)
    : model_(std::move(model)),
      horizon_(horizon),
      group_order_(model_.group.order()),
      levels_(divisors(horizon)),
      lefschetz_(horizon, SequenceKind::values) {
  for (std::size_t i = 0; i < levels_.size(); ++i) level_pos_.emplace(levels_[i], i);
}

std::size_t ReidemeisterGraph::level_position(std::uint64_t level) const {
  auto it = level_pos_.find(level);
  if (it == level_pos_.end())
    throw InvalidInput("level " + std::to_string(level) + " does not divide horizon " +
                       std::to_string(horizon_));
  return it->second;
}

bool ReidemeisterGraph::contains(const Vertex& v) const {
  if (!level_pos_.count(v.level)) return false;
  const auto& f = group().factors();
  if (v.cls.residues.size() != f.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (v.cls.residues[i] >= f[i]) return false;
  return true;
}

std::size_t ReidemeisterGraph::id_of(const Vertex& v) const {
  return level_position(v.level) * group_order_ + group().index_of(v.cls);
}

Vertex ReidemeisterGraph::vertex(std::size_t id) const {
  return Vertex{levels_.at(id / group_order_), group().element_at(id % group_order_)};
}

std::vector<Vertex> ReidemeisterGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count());
  for (std::size_t id = 0; id < vertex_count(); ++id) out.push_back(vertex(id));
  return out;
}

const BigInt& ReidemeisterGraph::index(const Vertex& v) const {
  return level_index_[level_position(v.level)];
}

const BigInt& ReidemeisterGraph::level_index(std::uint64_t level) const {
  return level_index_[level_position(level)];
}

Vertex ReidemeisterGraph::boost(const Vertex& v, std::uint64_t target_level) const {
  if (target_level % v.level != 0 || !level_pos_.count(target_level))
    throw InvalidInput("cannot boost " + v.to_string() + " to level " +
                       std::to_string(target_level));
  return Vertex{target_level,
                multiply_by(group(), static_cast<std::int64_t>(target_level / v.level), v.cls)};
}

std::size_t ReidemeisterGraph::boost_id(std::size_t id, std::uint64_t target_level) const {
  return id_of(boost(vertex(id), target_level));
}

ReidemeisterGraph build_graph(const Model& model, std::uint64_t n, std::uint64_t cap) {
  model.validate();
  if (model.group.order() > cap)
    throw CapExceeded("group of order " + std::to_string(model.group.order()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  ReidemeisterGraph g(model, n);
  g.lefschetz_ = lefschetz_sequence(model.matrix, n);
  const BigInt order = from_u64(model.group.order());
  for (auto k : g.levels_) {
    const BigInt& l = g.lefschetz_.at(k);
    if (!mpz_divisible_p(l.get_mpz_t(), order.get_mpz_t()))
      throw ModelInconsistency("|G| = " + to_string(order) + " does not divide L(f^" +
                               std::to_string(k) + ") = " + to_string(l) +
                               "; no Jiang map with f_# = id has this data");
    BigInt idx;
    mpz_divexact(idx.get_mpz_t(), l.get_mpz_t(), order.get_mpz_t());
    g.level_index_.push_back(std::move(idx));
  }
  return g;
}

// --- relations ------------------------------------------------------------

bool precedes(const ReidemeisterGraph& g, const Vertex& a, const Vertex& b) {
  if (!g.contains(a) || !g.contains(b)) return false;
  if (b.level % a.level != 0) return false;
  return multiply_by(g.group(), static_cast<std::int64_t>(b.level / a.level), a.cls) == b.cls;
}

namespace {

// Element-index image of multiplication by h, as a lookup table.
std::vector<std::size_t> multiplication_table(const FiniteAbelianGroup& grp, std::uint64_t h) {
  std::vector<std::size_t> t(grp.order());
  for (std::uint64_t i = 0; i < grp.order(); ++i)
    t[i] = grp.index_of(multiply_by(grp, static_cast<std::int64_t>(h), grp.element_at(i)));
  return t;
}

}  // namespace

GraphClassification classify(const ReidemeisterGraph& g) {
  GraphClassification c;
  c.flags.resize(g.vertex_count());
  const auto order = g.group().order();
  for (std::size_t pos = 0; pos < g.levels().size(); ++pos) {
    const auto k = g.levels()[pos];
    std::vector<bool> reducible(order, false);
    // a proper predecessor exists iff one exists at some level k/p
    for (auto p : prime_factors(k)) {
      const auto table = multiplication_table(g.group(), p);
      for (std::uint64_t y = 0; y < order; ++y) reducible[table[y]] = true;
    }
    const bool essential = g.level_index(k) != 0;
    for (std::uint64_t x = 0; x < order; ++x) {
      auto& f = c.flags[pos * order + x];
      f.essential = essential;
      f.irreducible = !reducible[x];
    }
  }
  for (std::size_t id = 0; id < g.vertex_count(); ++id)
    if (c.in_ieor(id)) c.ieor.push_back(g.vertex(id));
  return c;
}

bool check_essential_reducibility(const ReidemeisterGraph& g) {
  // Predecessor chains factor through prime steps, and every class at level
  // k/p precedes some class at level k, which shares the level's index. So
  // it suffices that k essential implies k/p essential for primes p | k.
  for (auto k : g.levels()) {
    if (g.level_index(k) == 0) continue;
    for (auto p : prime_factors(k))
      if (g.level_index(k / p) == 0) return false;
  }
  return true;
}

std::vector<BigInt> graph_dold_coefficients(const ReidemeisterGraph& g) {
  const auto order = g.group().order();
  const auto& levels = g.levels();
  std::vector<BigInt> a(g.vertex_count());
  std::vector<BigInt> below(g.vertex_count());  // sum over proper predecessors of c * a_C
  for (std::size_t pos = 0; pos < levels.size(); ++pos) {
    const auto b = levels[pos];
    const BigInt bb = from_u64(b);
    for (std::uint64_t x = 0; x < order; ++x) {
      const auto id = pos * order + x;
      BigInt t = g.index(id) - below[id];
      if (!mpz_divisible_p(t.get_mpz_t(), bb.get_mpz_t()))
        throw ModelInconsistency("graph Dold congruence fails at vertex " +
                                 g.vertex(id).to_string() + ": " + to_string(t) +
                                 " is not divisible by " + std::to_string(b));
      mpz_divexact(a[id].get_mpz_t(), t.get_mpz_t(), bb.get_mpz_t());
    }
    for (std::size_t up = pos + 1; up < levels.size(); ++up) {
      const auto k = levels[up];
      if (k % b != 0) continue;
      const auto table = multiplication_table(g.group(), k / b);
      for (std::uint64_t x = 0; x < order; ++x) {
        const auto& ax = a[pos * order + x];
        if (ax != 0) below[up * order + table[x]] += bb * ax;
      }
    }
  }
  return a;
}

BigInt reg_value(const ReidemeisterGraph& g, const Vertex& a, std::uint64_t r,
                 const Vertex& b) {
  const auto target = a.level * r;
  if (r == 0 || g.horizon() % target != 0) return 0;
  if (!precedes(g, g.boost(a, target), b)) return 0;
  return from_u64(target);
}

// --- attachments ------------------------------------------------------------

DivisorSequence Attachment::as_sequence() const {
  const std::uint64_t h = coefficients.empty() ? 1 : coefficients.rbegin()->first;
  return DivisorSequence(h, SequenceKind::coefficients, coefficients);
}

std::vector<Attachment> attach_expressions(const ReidemeisterGraph& g,
                                           std::optional<std::uint64_t> period) {
  if (!check_essential_reducibility(g))
    throw ModelInconsistency("graph is not essentially reducible");
  const auto order = g.group().order();
  const auto& levels = g.levels();
  const auto coeff = graph_dold_coefficients(g);
  const auto cls = classify(g);
  const std::size_t none = static_cast<std::size_t>(-1);

  // Vert': vertices reached from an essential vertex.
  std::vector<bool> in_vert(g.vertex_count(), false);
  // Chosen IEOR predecessor; levels ascend and classes ascend within a level,
  // so the first assignment is the tie-break winner.
  std::vector<std::size_t> chosen(g.vertex_count(), none);
  for (std::size_t pos = 0; pos < levels.size(); ++pos) {
    const auto e = levels[pos];
    for (std::size_t up = pos; up < levels.size(); ++up) {
      const auto k = levels[up];
      if (k % e != 0) continue;
      const auto table = multiplication_table(g.group(), k / e);
      for (std::uint64_t x = 0; x < order; ++x) {
        const auto id = pos * order + x;
        const auto target = up * order + table[x];
        if (cls.flags[id].essential) in_vert[target] = true;
        if (cls.in_ieor(id) && chosen[target] == none) chosen[target] = id;
      }
    }
  }

  std::map<std::size_t, Attachment> by_base;
  for (const auto& v : cls.ieor) {
    Attachment at;
    at.base = v;
    for (auto l : divisors(g.horizon() / v.level)) at.coefficients.emplace(l, 0);
    by_base.emplace(g.id_of(v), std::move(at));
  }
  for (std::size_t id = 0; id < g.vertex_count(); ++id) {
    if (!in_vert[id]) continue;
    if (chosen[id] == none)
      throw ModelInconsistency("vertex " + g.vertex(id).to_string() +
                               " reduces to an essential vertex but has no "
                               "irreducible essential predecessor");
    const auto b = levels[id / order];
    if (period && *period % b != 0) continue;
    auto& at = by_base.at(chosen[id]);
    at.coefficients.at(b / at.base.level) += coeff[id];
  }
  std::vector<Attachment> out;
  for (auto& [id, at] : by_base) out.push_back(std::move(at));
  return out;
}

BigInt evaluate_attachments(const ReidemeisterGraph& g,
                            const std::vector<Attachment>& attachments,
                            const Vertex& b) {
  BigInt sum = 0;
  for (const auto& at : attachments)
    for (const auto& [l, a] : at.coefficients)
      if (a != 0) sum += a * reg_value(g, at.base, l, b);
  return sum;
}

RealizationReport verify_smooth_realization(const ReidemeisterGraph& g,
                                            const std::vector<Attachment>& attachments) {
  RealizationReport r;
  const auto& levels = g.levels();
  std::vector<BigInt> total(g.vertex_count());
  // Push each summand a(l) Reg_A^l onto every vertex its boosted class precedes.
  for (const auto& at : attachments) {
    for (const auto& [l, a] : at.coefficients) {
      if (a == 0) continue;
      const auto t = at.base.level * l;
      if (g.horizon() % t != 0) continue;
      const Vertex start = g.boost(at.base, t);
      const BigInt contribution = a * from_u64(t);
      for (auto k : levels) {
        if (k % t != 0) continue;
        total[g.id_of(g.boost(start, k))] += contribution;
      }
    }
  }
  r.residuals.resize(g.vertex_count());
  r.indices_match = true;
  for (std::size_t id = 0; id < g.vertex_count(); ++id) {
    r.residuals[id] = g.index(id) - total[id];
    if (r.residuals[id] != 0) r.indices_match = false;
  }
  r.all_realizable = true;
  for (const auto& at : attachments) {
    r.verdicts.push_back(decide_sequence_realizable(at.as_sequence(), g.model().dimension));
    if (!r.verdicts.back().realizable) r.all_realizable = false;
  }
  r.verified = r.indices_match && r.all_realizable;
  return r;
}

BigInt nf_number(const ReidemeisterGraph& g) {
  if (!check_essential_reducibility(g))
    throw ModelInconsistency("graph is not essentially reducible");
  const auto cls = classify(g);
  BigInt nf = 0;
  for (const auto& v : cls.ieor) nf += from_u64(v.level);
  return nf;
}

}  // namespace nielsen
