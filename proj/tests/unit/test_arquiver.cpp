#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grq/arquiver/arquiver.hpp"
#include "grq/error.hpp"
#include "grq/grmod/ops.hpp"
#include "grq/polynomial/polynomial.hpp"

using namespace grq;

namespace {

GradedModule lab(const std::string& s) { return build(parse_label(s), 3); }

std::set<std::string> labels(const ARQuiver& q, const std::vector<int>& idx) {
  std::set<std::string> out;
  for (int v : idx) out.insert(q.vertices[v].label);
  return out;
}

}  // namespace

TEST_CASE("templates") {
  auto t1 = template_quiver(1, 1);
  CHECK(t1.size == 1);
  CHECK(arrow_count(t1) == 0);
  CHECK(t1.tau[0] == 0);
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m) {
      auto t = template_quiver(n, m);
      CHECK(t.size == n * m);
      CHECK(arrow_count(t) == 2 * (n - 1) * m);
    }
  CHECK(arrow_count(template_quiver(3, 3)) == 12);
  CHECK_THROWS_AS(template_quiver(0, 2), UsageError);
}

TEST_CASE("exploring a tube-like component") {
  ARQuiver q = explore_component(lab("W(6)"), {3, 3});
  CHECK(mesh_violations(q).empty());
  // tau acts as the shift by (3,-3) on every recorded pair
  for (auto [v, t] : q.tau) CHECK(is_isomorphic(q.vertices[t].module, shift(q.vertices[v].module, {3, -3})));
  auto s = q.find(lab("W(6)"));
  REQUIRE(s);
  CHECK(q.vertices[*s].ql == 2);
  CHECK(q.vertices[*q.find(lab("W(3)+(3,0)"))].ql == 1);
  // degree constancy
  for (const auto& v : q.vertices) CHECK(is_polynomial(v.module).degree == 6);
  auto w = wing(q, *s);
  CHECK(labels(q, w) == std::set<std::string>{"W(6)", "W(3)+(3,0)", "W(3)+(0,3)"});
  for (int v : w) CHECK(q.vertices[v].polynomial);
  auto qs = q.find(lab("W(3)+(0,3)"));
  CHECK(wing(q, *qs) == std::vector<int>{*qs});
  CHECK_THROWS_AS(explore_component(projective_indec(Algebra::sl2r1(3), 0), {1, 1}), PreconditionError);
}

TEST_CASE("exploring the component of V(3)") {
  ARQuiver q = explore_component(lab("V(3)"), {2, 1});
  CHECK(mesh_violations(q).empty());
  for (const auto& v : q.vertices) CHECK_FALSE(v.ql.has_value());  // no quasi-simples
  // every processed vertex has two non-projective neighbours on each side
  for (auto [v, t] : q.tau) CHECK(q.predecessors(v).size() == 2);
  auto pp = polynomial_part(q);
  CHECK(pp.shape == PolyShape::BetweenDuals);
  CHECK(pp.connected);
  std::set<std::string> names;
  for (const auto& v : pp.quiver.vertices) names.insert(v.label);
  CHECK(names == std::set<std::string>{"V(3)", "Vo(3)", "L(0)+(3,0)", "L(0)+(0,3)"});
  auto col = column_symmetry_check(q);
  CHECK(col.applicable);
  CHECK(col.ok);
  CHECK(col.column_size >= 2);
  for (const auto& v : q.vertices)
    if (v.simple) CHECK(is_isomorphic(v.module, contravariant_dual(v.module)));
}

TEST_CASE("polynomial parts of W components are wings") {
  for (int a : {0, 1})
    for (int s = 1; s <= 3; ++s)
      for (bool tw : {false, true}) {
        int d = 3 * s + a;
        std::string label = (tw ? "W(" + std::to_string(d) + ")w0" : "W(" + std::to_string(d) + ")");
        CAPTURE(label);
        ARQuiver q = explore_component(lab(label), {s + 1, s + 1});
        auto pp = polynomial_part(q);
        CHECK(pp.shape == PolyShape::Wing);
        CHECK(pp.connected);
        CHECK(pp.quiver.size() == s * (s + 1) / 2);
        REQUIRE(pp.top);
        CHECK(q.vertices[*pp.top].label == label);
        auto scan = tau_orbit_scan(lab(label), 50);
        REQUIRE(scan.step);
        CHECK(*scan.step == Weight{tw ? -3 : 3, tw ? 3 : -3});
        CHECK(scan.polynomial == std::vector<int>{0});
        CHECK(scan.contiguous);
      }
  // every tau-shift of W(3)+(1,-2) has a weight with a negative coordinate
  GradedModule off = shift(lab("W(3)"), {1, -2});
  CHECK(tau_orbit_scan(off, 50).polynomial.empty());
  ARQuiver none = explore_component(off, {1, 1});
  CHECK(polynomial_part(none).shape == PolyShape::Empty);
}

TEST_CASE("schur blocks") {
  for (int d = 0; d <= 2; ++d) {
    CHECK(non_semisimple_block_count(3, d) == 0);
    for (const auto& b : polynomial_blocks(3, d)) CHECK(b.size() == 1);
  }
  for (int d = 3; d <= 8; ++d) CHECK(non_semisimple_block_count(3, d) == 1);
  auto small = schur_block_quiver(3, 2, parse_label("L(2)"));
  CHECK(small.semisimple);
  CHECK(small.quiver.arrows.empty());

  auto b3 = schur_block_quiver(3, 3, parse_label("V(3)"));
  CHECK(b3.injective_arrows_consistent);
  CHECK(mesh_violations(b3.quiver).empty());
  ARQuiver st = stable_part(b3.quiver);
  CHECK(st.size() == 9);
  CHECK(template_match(st, 3, 3).has_value());
  CHECK_FALSE(template_match(st, 9, 1).has_value());
  CHECK_FALSE(template_match(st, 1, 9).has_value());

  auto b6 = schur_block_quiver(3, 6, parse_label("V(6)"));
  CHECK(b6.injective_arrows_consistent);
  CHECK(mesh_violations(b6.quiver).empty());
  ARQuiver st6 = stable_part(b6.quiver);
  CHECK(st6.size() == 25);
  CHECK(template_match(st6, 5, 5).has_value());
  CHECK_FALSE(template_match(st6, 3, 3).has_value());
  // all vertices are polynomial of the right degree
  for (const auto& v : b6.quiver.vertices) CHECK(is_polynomial(v.module).degree == 6);

  CHECK_THROWS_AS(schur_block_quiver(3, 4, parse_label("V(3)")), PreconditionError);
}

TEST_CASE("morita shifts") {
  auto same = morita_shift_compare(3, 3, 0);
  CHECK(same.isomorphic);
  auto r = morita_shift_compare(3, 3, 1);
  CHECK(r.isomorphic);
  CHECK(r.dims_preserved);
  CHECK(r.vertices == 10);
  CHECK_THROWS_AS(morita_shift_compare(3, 4, 1), PreconditionError);
}

TEST_CASE("column check without self-dual vertices") {
  ARQuiver q = explore_component(lab("W(6)"), {1, 1});
  auto c = column_symmetry_check(q);
  CHECK_FALSE(c.applicable);
}

TEST_CASE("output is deterministic") {
  auto a = schur_block_quiver(3, 3, parse_label("V(3)")).quiver;
  auto b = schur_block_quiver(3, 3, parse_label("Vo(3)")).quiver;
  CHECK(to_dot(a) == to_dot(b));
  CHECK(quiver_to_json(a).dump() == quiver_to_json(b).dump());
  auto j = quiver_to_json(a);
  CHECK(j.begin().key() == "vertices");
  CHECK(j["vertices"].size() == 10);
  std::string dot = to_dot(a, "block");
  CHECK(dot.rfind("digraph \"block\" {", 0) == 0);
  CHECK(dot.back() == '\n');
}
