#include <doctest.h>

#include <nielsen/arith.hpp>
#include <nielsen/divisor_sequence.hpp>
#include <nielsen/errors.hpp>
#include <nielsen/reid_graph.hpp>
#include <nielsen/spectrum.hpp>
#include <nielsen/validators.hpp>

#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace nielsen;

namespace {

Model model(IntMatrix a, std::vector<std::uint64_t> group, int m = 3) {
  Model out;
  out.matrix = std::move(a);
  out.group = FiniteAbelianGroup(std::move(group));
  out.dimension = m;
  return out;
}

Vertex v(std::uint64_t k, std::vector<std::uint64_t> r) { return Vertex{k, GroupElement{std::move(r)}}; }

const IntMatrix rotation{{0, -1}, {1, 0}};

// sum of k * #IEOR(k), computed from the group alone
BigInt nf_by_counting(const ReidemeisterGraph& g) {
  BigInt s = 0;
  for (auto k : g.levels())
    if (g.lefschetz().at(k) != 0) s += from_u64(k) * from_u64(irreducible_class_count(g.group(), k));
  return s;
}

}  // namespace

TEST_CASE("build_graph") {
  const auto g = build_graph(model(IntMatrix{{-1}}, {2}), 2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.index(v(1, {0})) == 1);
  CHECK(g.index(v(1, {1})) == 1);
  CHECK(g.index(v(2, {0})) == 0);
  CHECK(g.index(v(2, {1})) == 0);

  for (std::uint64_t n : {1, 4, 6}) {
    const auto id1 = build_graph(model(IntMatrix{{1}}, {3}), n);
    for (std::size_t id = 0; id < id1.vertex_count(); ++id) CHECK(id1.index(id) == 0);
  }

  CHECK_THROWS_AS(build_graph(model(IntMatrix{{2}}, {2}), 1), ModelInconsistency);
  CHECK_THROWS_AS(build_graph(model(IntMatrix{{-1}}, {2, 2}), 1, 2), CapExceeded);

  const auto t = build_graph(model(rotation, {}), 4);
  CHECK(t.index(v(2, {})) == 4);
  CHECK(t.vertices().size() == 3);
}

TEST_CASE("vertex ids") {
  const auto g = build_graph(model(IntMatrix{{1}}, {2, 3}), 6);
  const auto all = g.vertices();
  REQUIRE(all.size() == g.vertex_count());
  for (std::size_t id = 0; id < all.size(); ++id) {
    REQUIRE(g.id_of(all[id]) == id);
    REQUIRE(g.vertex(id) == all[id]);
    if (id) REQUIRE(all[id - 1] < all[id]);
  }
  CHECK_FALSE(g.contains(v(4, {0, 0})));
}

TEST_CASE("precedes") {
  const auto g = build_graph(model(IntMatrix{{-1}}, {2}), 2);
  CHECK(precedes(g, v(1, {0}), v(2, {0})));
  CHECK(precedes(g, v(1, {1}), v(2, {0})));
  CHECK_FALSE(precedes(g, v(1, {1}), v(2, {1})));
  CHECK(precedes(g, v(2, {1}), v(2, {1})));
  CHECK_FALSE(precedes(g, v(2, {0}), v(1, {0})));
}

TEST_CASE("classify") {
  const auto g = build_graph(model(IntMatrix{{-1}}, {2}), 2);
  const auto c = classify(g);
  CHECK(c.ieor == std::vector<Vertex>{v(1, {0}), v(1, {1})});
  const auto f = c.flags[g.id_of(v(2, {1}))];
  CHECK(f.irreducible);
  CHECK_FALSE(f.essential);
  CHECK(classify(build_graph(model(IntMatrix{{1}}, {2}), 6)).ieor.empty());
}

TEST_CASE("essential reducibility") {
  CHECK(check_essential_reducibility(build_graph(model(IntMatrix{{-1}}, {2}), 2)));
  CHECK(check_essential_reducibility(build_graph(model(rotation, {2}), 4)));
  CHECK(check_essential_reducibility(build_graph(model(IntMatrix{{1}}, {4}), 12)));
  // L(f^k) = 0 propagates to multiples of k, so matrices never violate it
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto g = build_graph(model(testing_support::random_matrix(rng, 4, -2, 2), {}), 12);
    REQUIRE(check_essential_reducibility(g));
  }
}

TEST_CASE("graph_dold_coefficients") {
  const auto g = build_graph(model(IntMatrix{{-1}}, {2}), 2);
  const auto a = graph_dold_coefficients(g);
  CHECK(a[g.id_of(v(1, {0}))] == 1);
  CHECK(a[g.id_of(v(1, {1}))] == 1);
  CHECK(a[g.id_of(v(2, {0}))] == -1);
  CHECK(a[g.id_of(v(2, {1}))] == 0);

  for (const auto& x : graph_dold_coefficients(build_graph(model(IntMatrix{{1}}, {2}), 12))) CHECK(x == 0);

  const auto t = build_graph(model(rotation, {}), 4);
  const auto at = graph_dold_coefficients(t);
  CHECK(at == std::vector<BigInt>{2, 1, -1});
}

TEST_CASE("reg_value") {
  const auto g = build_graph(model(IntMatrix{{-1}}, {2}), 2);
  CHECK(reg_value(g, v(1, {0}), 2, v(2, {0})) == 2);
  CHECK(reg_value(g, v(1, {0}), 1, v(1, {1})) == 0);
  CHECK(reg_value(g, v(1, {1}), 1, v(2, {0})) == 1);
  CHECK(reg_value(g, v(1, {0}), 4, v(2, {0})) == 0);
}

TEST_CASE("attach_expressions") {
  const auto g = build_graph(model(IntMatrix{{-1}}, {2}), 2);
  const auto at = attach_expressions(g);
  REQUIRE(at.size() == 2);
  CHECK(at[0].base == v(1, {0}));
  CHECK(at[0].coefficients == std::map<std::uint64_t, BigInt>{{1, 1}, {2, -1}});
  CHECK(at[1].base == v(1, {1}));
  CHECK(at[1].coefficients == std::map<std::uint64_t, BigInt>{{1, 1}, {2, 0}});

  CHECK(attach_expressions(build_graph(model(IntMatrix{{1}}, {2}), 6)).empty());

  const auto t = build_graph(model(rotation, {}), 4);
  const auto att = attach_expressions(t);
  REQUIRE(att.size() == 1);
  CHECK(att[0].base == v(1, {}));
  CHECK(att[0].coefficients == std::map<std::uint64_t, BigInt>{{1, 2}, {2, 1}, {4, -1}});
}

TEST_CASE("evaluate and verify") {
  const auto g = build_graph(model(IntMatrix{{-1}}, {2}), 2);
  auto at = attach_expressions(g);
  CHECK(evaluate_attachments(g, at, v(2, {0})) == 0);
  CHECK(evaluate_attachments(g, at, v(1, {0})) == 1);
  CHECK(evaluate_attachments(g, at, v(2, {1})) == 0);

  const auto rep = verify_smooth_realization(g, at);
  CHECK(rep.verified);
  CHECK(rep.indices_match);
  CHECK(rep.all_realizable);
  REQUIRE(rep.verdicts.size() == 2);

  const auto triv = build_graph(model(IntMatrix{{1}}, {2}), 4);
  CHECK(verify_smooth_realization(triv, {}).verified);

  at[0].coefficients[1] += 1;
  const auto bad = verify_smooth_realization(g, at);
  CHECK_FALSE(bad.verified);
  CHECK_FALSE(bad.indices_match);
  CHECK(bad.residuals[g.id_of(v(1, {0}))] != 0);
}

TEST_CASE("nf_number") {
  for (std::uint64_t n = 1; n <= 12; ++n) CHECK(nf_number(build_graph(model(IntMatrix{{-1}}, {2}), n)) == 2);
  CHECK(nf_number(build_graph(model(IntMatrix{{1}}, {2}), 6)) == 0);
  CHECK(nf_number(build_graph(model(rotation, {}), 4)) == 1);
}

TEST_CASE("graph properties on random cyclotomic models") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const auto m = testing_support::random_cyclotomic_model(rng);
    const auto d = minimal_period_lcm(classify_spectrum(m.matrix));
    for (std::uint64_t n : {d, 2 * d, 12ul}) {
      const auto g = build_graph(m, n);
      const auto& f = g.group().factors();
      // level sums
      for (auto k : g.levels()) {
        BigInt s = 0;
        for (std::size_t id = 0; id < g.vertex_count(); ++id)
          if (g.vertex(id).level == k) s += g.index(id);
        REQUIRE(s == g.lefschetz().at(k));
      }
      // functoriality
      for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        const auto x = g.vertex(id);
        REQUIRE(g.boost(x, x.level) == x);
        for (auto l : g.levels()) {
          if (l % x.level) continue;
          for (auto k : g.levels()) {
            if (k % l) continue;
            REQUIRE(g.boost(g.boost(x, l), k) == g.boost(x, k));
            REQUIRE(g.boost_id(id, k) == g.id_of(g.boost(x, k)));
          }
        }
      }
      // edge maps bijective iff gcd(k/l, |G|) = 1
      for (auto l : g.levels())
        for (auto k : g.levels()) {
          if (k % l) continue;
          std::set<GroupElement> img;
          for (const auto& x : oracle::all_elements(f)) img.insert(g.boost(Vertex{l, GroupElement{x}}, k).cls);
          REQUIRE((img.size() == g.group().order()) == (std::gcd(k / l, g.group().order()) == 1));
        }
      // reconstruction
      const auto a = graph_dold_coefficients(g);
      for (std::size_t id = 0; id < g.vertex_count(); ++id)
        REQUIRE(oracle::predecessor_sum(g, a, id) == g.index(id));
      REQUIRE(check_essential_reducibility(g));
      REQUIRE(nf_number(g) == nf_by_counting(g));
      REQUIRE(verify_smooth_realization(g, attach_expressions(g)).verified);
    }
  }
}

TEST_CASE("validators") {
  const auto ok = run_validators(model(IntMatrix{{-1}}, {2}), 6);
  CHECK(ok.all_passed());
  CHECK(ok.period_lcm == 2);

  const auto z3 = run_validators(model(IntMatrix{{-1}}, {3}), 6);
  CHECK(z3.result("V1").status == CheckStatus::fail);
  CHECK_FALSE(z3.all_passed());

  const auto id = run_validators(model(IntMatrix{{1}}, {2}), 6);
  CHECK(id.result("V1").status == CheckStatus::pass);
  CHECK(id.result("V1").detail.find("vacuous") != std::string::npos);
  CHECK(id.all_passed());

  const auto big = run_validators(model(IntMatrix{{3}}, {2}), 6);
  CHECK(big.result("V4").status == CheckStatus::skipped);

  const auto g = build_graph(model(rotation, {2}), 8);
  CHECK(run_validators(g).all_passed());
}
