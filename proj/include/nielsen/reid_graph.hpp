#pragma once

#include <nielsen/bigint.hpp>
#include <nielsen/divisor_sequence.hpp>
#include <nielsen/fund_group.hpp>
#include <nielsen/model.hpp>
#include <nielsen/smooth_real.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace nielsen {

/// A Reidemeister class (= orbit, since f_# = id) of f^level.
struct Vertex {
  std::uint64_t level = 1;
  GroupElement cls;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  std::string to_string() const;
};

/// Orbit graph over the levels k | n. Every level carries a copy of pi_1;
/// the edge map i_{kl} is multiplication by k/l. Vertex ids run level by
/// level (ascending), and within a level in lexicographic class order.
class ReidemeisterGraph {
 public:
  std::uint64_t horizon() const { return horizon_; }
  const Model& model() const { return model_; }
  const FiniteAbelianGroup& group() const { return model_.group; }
  const std::vector<std::uint64_t>& levels() const { return levels_; }
  const DivisorSequence& lefschetz() const { return lefschetz_; }

  std::size_t vertex_count() const { return levels_.size() * group_order_; }
  std::size_t level_position(std::uint64_t level) const;
  bool contains(const Vertex& v) const;
  std::size_t id_of(const Vertex& v) const;
  Vertex vertex(std::size_t id) const;
  std::vector<Vertex> vertices() const;

  /// Jiang index: L(f^k) / |G| for every class at level k.
  const BigInt& index(const Vertex& v) const;
  const BigInt& index(std::size_t id) const { return level_index_[id / group_order_]; }
  const BigInt& level_index(std::uint64_t level) const;

  /// i_{target, level(v)}(v); target must be a multiple of level(v) dividing
  /// the horizon.
  Vertex boost(const Vertex& v, std::uint64_t target_level) const;
  /// Same on element indices.
  std::size_t boost_id(std::size_t id, std::uint64_t target_level) const;

 private:
  friend ReidemeisterGraph build_graph(const Model&, std::uint64_t, std::uint64_t);
  ReidemeisterGraph(Model model, std::uint64_t horizon);

  Model model_;
  std::uint64_t horizon_;
  std::uint64_t group_order_;
  std::vector<std::uint64_t> levels_;
  std::map<std::uint64_t, std::size_t> level_pos_;
  DivisorSequence lefschetz_;
  std::vector<BigInt> level_index_;
};

/// Throws ModelInconsistency when |G| does not divide some L(f^k), and
/// CapExceeded when |G| exceeds `cap`.
ReidemeisterGraph build_graph(const Model& model, std::uint64_t n,
                              std::uint64_t cap = FiniteAbelianGroup::default_enumeration_cap);

/// a precedes b: level(a) | level(b) and i_{level(b), level(a)}(a) = b.
bool precedes(const ReidemeisterGraph& g, const Vertex& a, const Vertex& b);

struct VertexFlags {
  bool essential = false;
  bool irreducible = false;
};

struct GraphClassification {
  std::vector<VertexFlags> flags;  // by vertex id
  std::vector<Vertex> ieor;        // irreducible essential, in id order

  bool in_ieor(std::size_t id) const { return flags[id].essential && flags[id].irreducible; }
};

GraphClassification classify(const ReidemeisterGraph& g);

/// Every predecessor of an essential vertex is essential.
bool check_essential_reducibility(const ReidemeisterGraph& g);

/// The unique a_B with ind(f^b; B) = sum_{C precedes B} c * a_C, by vertex
/// id. Throws ModelInconsistency when some a_B is not an integer.
std::vector<BigInt> graph_dold_coefficients(const ReidemeisterGraph& g);

/// Reg_A^r(B) = level(A) * r when i_{r level(A), level(A)}(A) precedes B,
/// else 0 (also 0 when r * level(A) does not divide the horizon).
BigInt reg_value(const ReidemeisterGraph& g, const Vertex& a, std::uint64_t r,
                 const Vertex& b);

/// An expression sum_l a(l) Reg_A^l attached at an irreducible essential
/// vertex A. Coefficients are keyed by every l with l * level(A) | horizon.
struct Attachment {
  Vertex base;
  std::map<std::uint64_t, BigInt> coefficients;

  /// The coefficients as a sequence on the divisors of horizon / level.
  DivisorSequence as_sequence() const;
};

/// Realizes the index function by expressions attached at IEOR. Each vertex
/// reducing to an essential one is assigned the IEOR predecessor of minimal
/// level (then lexicographically least class). With `period` set, summands
/// from levels not dividing it are dropped. Throws ModelInconsistency when
/// the graph is not essentially reducible.
std::vector<Attachment> attach_expressions(const ReidemeisterGraph& g,
                                           std::optional<std::uint64_t> period = std::nullopt);

/// sum_A C_A(b).
BigInt evaluate_attachments(const ReidemeisterGraph& g,
                            const std::vector<Attachment>& attachments,
                            const Vertex& b);

struct RealizationReport {
  bool verified = false;
  bool indices_match = false;
  bool all_realizable = false;
  std::vector<BigInt> residuals;  // ind - sum_A C_A, by vertex id
  std::vector<RealizabilityVerdict> verdicts;  // per attachment
};

RealizationReport verify_smooth_realization(const ReidemeisterGraph& g,
                                            const std::vector<Attachment>& attachments);

/// NF_n = sum_{k|n} k * #IEOR(k). Throws ModelInconsistency when the graph is
/// not essentially reducible.
BigInt nf_number(const ReidemeisterGraph& g);

}  // namespace nielsen
