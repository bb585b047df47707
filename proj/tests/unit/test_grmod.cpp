#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "grq/constructions/constructions.hpp"
#include "grq/error.hpp"
#include "grq/grmod/hom.hpp"
#include "grq/grmod/json.hpp"
#include "grq/grmod/ops.hpp"

using namespace grq;
using gf::Matrix;

namespace {

AlgebraPtr A3() { return Algebra::sl2r1(3); }

gf::Vector unit(int n, int i) {
  gf::Vector v(n, 0);
  v[i] = 1;
  return v;
}

std::set<Weight> wset(const GradedModule& m) { return {m.weights().begin(), m.weights().end()}; }

// all subsets of F_p^n enumerated; counts vectors killed by m
int brute_kernel_size(const Matrix& m) {
  const int n = m.cols();
  const unsigned p = m.p();
  int total = 1;
  for (int i = 0; i < n; ++i) total *= int(p);
  int hits = 0;
  for (int code = 0; code < total; ++code) {
    gf::Vector v(n);
    int c = code;
    for (int i = 0; i < n; ++i) v[i] = gf::Residue(c % p), c /= int(p);
    if (gf::is_zero(m * v)) ++hits;
  }
  return hits;
}

}  // namespace

TEST_CASE("algebra: PBW regular representation satisfies the defining relations") {
  for (unsigned p : {3u, 5u}) {
    auto alg = Algebra::sl2r1(p);
    const auto& L = alg->left_regular();
    const auto& f = alg->field();
    const Matrix &e = L[0], &fm = L[1], &h = L[2];
    const Matrix zero(f, e.rows(), e.cols());
    CHECK(gf::power(e, p) == zero);
    CHECK(gf::power(fm, p) == zero);
    CHECK(gf::power(h, p) == h);
    CHECK(h * e - e * h == e.scaled(2));
    CHECK(h * fm - fm * h == fm.scaled(f.neg(2)));
    CHECK(e * fm - fm * e == h);
  }
}

TEST_CASE("algebra: radical dimension is p^3 minus the sum of squares of simple dimensions") {
  // oracle: dim J = dim U0 - sum_a (a+1)^2
  for (unsigned p : {3u, 5u}) {
    auto alg = Algebra::sl2r1(p);
    int expect = int(p * p * p);
    for (int a = 0; a < int(p); ++a) expect -= (a + 1) * (a + 1);
    CHECK(alg->radical_dimension() == expect);
  }
  CHECK(Algebra::sl2r1(3)->radical_dimension() == 13);
  auto b = Algebra::borel(3, 2);
  CHECK(b->radical_dimension() == 8);
}

TEST_CASE("algebra: multiplication is associative on basis triples") {
  auto alg = A3();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, alg->dimension() - 1);
  for (int t = 0; t < 30; ++t) {
    auto x = alg->basis_element(pick(rng)), y = alg->basis_element(pick(rng)), z = alg->basis_element(pick(rng));
    CHECK(alg->multiply(alg->multiply(x, y), z) == alg->multiply(x, alg->multiply(y, z)));
  }
}

TEST_CASE("validate: Weyl module, perturbed weight, zero module") {
  auto alg = A3();
  GradedModule v = weyl_hat(alg, 3);
  CHECK(validate(v).empty());
  // e.v2 = 3 v3 = 0
  CHECK(v.action(0)(3, 2) == 0);
  auto w = v.weights();
  w[1] = {5, 5};
  GradedModule bad(alg, w, v.actions());
  auto rep = validate(bad);
  REQUIRE_FALSE(rep.empty());
  bool grading = false;
  for (const auto& s : rep) grading |= s.rfind("grading", 0) == 0;
  CHECK(grading);
  CHECK(validate(GradedModule::zero(alg)).empty());
  CHECK_THROWS_AS(require_valid(bad, "test"), InvariantViolation);
}

TEST_CASE("shift and support") {
  auto alg = A3();
  GradedModule w3 = w_hat(alg, 3);
  CHECK(shift(w3, {0, 0}) == w3);
  CHECK(wset(shift(w3, {3, 0})) == std::set<Weight>{{4, 2}, {5, 1}, {6, 0}});
  CHECK(shift(shift(w3, {3, -3}), {-3, 3}) == w3);
  CHECK(shift(w3, {6, 3}).actions() == w3.actions());
  CHECK(support(simple_hat(alg, 0)) == std::vector<Weight>{{0, 0}});
  CHECK(support(weyl_hat(alg, 3)) == std::vector<Weight>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
}

TEST_CASE("degree_decompose splits by degree") {
  auto alg = A3();
  GradedModule m = direct_sum(weyl_hat(alg, 3), shift(simple_hat(alg, 0), {1, 0}));
  auto parts = degree_decompose(m);
  REQUIRE(parts.size() == 2);
  CHECK(parts.count(3) == 1);
  CHECK(parts.count(1) == 1);
  CHECK(parts.at(3).dim() == 4);
  CHECK(parts.at(1).dim() == 1);
  CHECK(is_isomorphic(direct_sum(parts.at(1), parts.at(3)), m));
}

TEST_CASE("contravariant dual") {
  auto alg = A3();
  for (int a = 0; a < 3; ++a) {
    GradedModule l = simple_hat(alg, a);
    CHECK(is_isomorphic(contravariant_dual(l), l));
  }
  GradedModule w3 = w_hat(alg, 3);
  CHECK(contravariant_dual(contravariant_dual(w3)) == w3);
  GradedModule v3 = weyl_hat(alg, 3), v3o = contravariant_dual(v3);
  CHECK(validate(v3o).empty());
  CHECK(v3o.sorted_weights() == v3.sorted_weights());
  // ungraded: V(3)^o and the linear dual V(3)* are isomorphic U0-modules
  GradedModule lin = linear_dual(v3);
  CHECK(validate(lin).empty());
  auto hom = ungraded_hom_space(alg, v3o.actions(), lin.actions());
  bool found_iso = false;
  for (const auto& b : hom.basis) found_iso |= gf::rank(b) == 4;
  // search over 2-dim spaces is cheap; fall back to all combinations
  if (!found_iso && hom.dim() <= 4) {
    const int n = hom.dim();
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 1; code < total && !found_iso; ++code) {
      gf::Vector c(n);
      int x = code;
      for (int i = 0; i < n; ++i) c[i] = gf::Residue(x % 3), x /= 3;
      found_iso = gf::rank(combine(hom.basis, c, 4, 4, alg->field())) == 4;
    }
  }
  CHECK(found_iso);
}

TEST_CASE("weyl twist") {
  auto alg = A3();
  GradedModule w3 = w_hat(alg, 3);
  CHECK(weyl_twist(weyl_twist(w3)) == w3);
  CHECK(wset(weyl_twist(w3)) == std::set<Weight>{{2, 1}, {1, 2}, {0, 3}});
  CHECK(weyl_twist(shift(w3, {3, 0})) == shift(weyl_twist(w3), {0, 3}));
  CHECK(validate(weyl_twist(weyl_hat(alg, 7))).empty());
}

TEST_CASE("submodule_span") {
  auto alg = A3();
  // socle of V(p+a): generated by v_{a+1}, spanned by v_{a+1}..v_{p-1}
  for (int a : {0, 1}) {
    GradedModule v = weyl_hat(alg, 3 + a);
    Submodule s = submodule_span(v, {unit(v.dim(), a + 1)});
    CHECK(s.module.dim() == 3 - 1 - a);
    Submodule soc = socle(v);
    CHECK(soc.module.dim() == s.module.dim());
    CHECK(gf::rank(Matrix::hstack(soc.inclusion.matrix, s.inclusion.matrix)) == s.module.dim());
  }
  GradedModule v3 = weyl_hat(alg, 3);
  std::vector<gf::Vector> all;
  for (int i = 0; i < 4; ++i) all.push_back(unit(4, i));
  CHECK(submodule_span(v3, all).module.dim() == 4);
  // V(6) at p=3: v1 only reaches v2 (f.v1 = 6 v0 = 0, e.v2 = 3 v3 = 0)
  GradedModule v6 = weyl_hat(alg, 6);
  CHECK(submodule_span(v6, {unit(7, 1)}).module.dim() == 2);
  // the W(6) submodule needs v3 and v6 as well
  CHECK(submodule_span(v6, {unit(7, 3), unit(7, 6)}).module.dim() == 6);
  gf::Vector mixed = unit(7, 0);
  mixed[1] = 1;
  CHECK_THROWS_AS(submodule_span(v6, {mixed}), UsageError);
}

TEST_CASE("quotient") {
  auto alg = A3();
  GradedModule v3 = weyl_hat(alg, 3);
  Quotient q0 = quotient(v3, Matrix(alg->field(), 4, 0));
  CHECK(is_isomorphic(q0.module, v3));
  Quotient qall = quotient(v3, Matrix::identity(alg->field(), 4));
  CHECK(qall.module.dim() == 0);
  for (int a : {0, 1}) {
    GradedModule v = weyl_hat(alg, 3 + a);
    Quotient q = quotient(socle(v));
    CHECK(q.module.dim() == v.dim() - socle(v).module.dim());
    CHECK(is_module_map(v, q.module, q.projection.matrix));
    GradedModule expect = direct_sum(shift(simple_hat(alg, a), {3, 0}), shift(simple_hat(alg, a), {0, 3}));
    CHECK(is_isomorphic(q.module, expect));
  }
  // not a submodule
  CHECK_THROWS_AS(quotient(v3, Matrix::from_columns(alg->field(), 4, {unit(4, 0)})), PreconditionError);
}

TEST_CASE("socle, radical, top") {
  auto alg = A3();
  for (int a = 0; a < 3; ++a) {
    GradedModule l = shift(simple_hat(alg, a), {3, 0});
    CHECK(socle(l).module.dim() == l.dim());
    CHECK(radical(l).module.dim() == 0);
  }
  GradedModule w = w_hat(alg, 4);  // a = 1: socle v2
  Submodule s = socle(w);
  CHECK(s.module.dim() == 1);
  CHECK(s.module.weights() == std::vector<Weight>{{2, 2}});
  GradedModule w3 = w_hat(alg, 3);  // a = 0: socle v1, v2
  CHECK(wset(socle(w3).module) == std::set<Weight>{{1, 2}, {2, 1}});
  // Borel: top of the free module is one-dimensional
  auto b = Algebra::borel(3, 2);
  GradedModule z = borel_projective(b, {4, 0});
  Quotient t = top(z);
  CHECK(t.module.dim() == 1);
  CHECK(t.module.weights() == std::vector<Weight>{{4, 0}});
  CHECK(radical(z).module.dim() == 8);
}

TEST_CASE("hom spaces") {
  auto alg = A3();
  for (int a = 0; a < 3; ++a) {
    GradedModule l = simple_hat(alg, a);
    CHECK(hom_space(l, l).dim() == 1);
    CHECK(hom_space(l, shift(l, {3, 0})).dim() == 0);
  }
  GradedModule v3 = weyl_hat(alg, 3);
  HomSpace end = hom_space(v3, v3);
  REQUIRE(end.dim() >= 1);
  for (const auto& phi : end.basis) CHECK(is_module_map(v3, v3, phi));
  // brute-force oracle: count weight-preserving intertwiners by enumeration
  // of diagonal matrices (V(3) has one-dimensional weight spaces)
  int count = 0;
  for (int code = 0; code < 81; ++code) {
    gf::Vector d(4);
    int c = code;
    for (int i = 0; i < 4; ++i) d[i] = gf::Residue(c % 3), c /= 3;
    if (is_module_map(v3, v3, Matrix::diagonal(alg->field(), d))) ++count;
  }
  int expect = 1;
  for (int i = 0; i < end.dim(); ++i) expect *= 3;
  CHECK(count == expect);
  CHECK_NOTHROW(radical_endomorphisms(v3));
  // shift invariance of Hom dimensions
  GradedModule w6 = w_hat(alg, 6);
  CHECK(hom_space(w6, w6).dim() == hom_space(shift(w6, {3, -3}), shift(w6, {3, -3})).dim());
}

TEST_CASE("isomorphism tests") {
  auto alg = A3();
  GradedModule w3 = w_hat(alg, 3);
  auto self = is_isomorphic(w3, w3);
  REQUIRE(self);
  CHECK(is_module_map(w3, w3, self.iso->matrix));
  CHECK_FALSE(is_isomorphic(w3, weyl_twist(w3)));
  GradedModule v3 = weyl_hat(alg, 3), v3o = contravariant_dual(v3);
  CHECK_FALSE(is_isomorphic(v3, v3o));
  // socle comparison oracle: V(3) has socle on the middle weights, V(3)^o on the ends
  CHECK(wset(socle(v3).module) == std::set<Weight>{{1, 2}, {2, 1}});
  CHECK(wset(socle(v3o).module) == std::set<Weight>{{0, 3}, {3, 0}});
  CHECK(is_indecomposable(v3));
  CHECK(is_indecomposable(v3o));
  // a base-changed copy is recognised
  std::mt19937 rng(3);
  Matrix g = Matrix::identity(alg->field(), 4);
  GradedModule perm(alg, {v3.weight(3), v3.weight(2), v3.weight(1), v3.weight(0)},
                    {v3.action(0).select({3, 2, 1, 0}, {3, 2, 1, 0}), v3.action(1).select({3, 2, 1, 0}, {3, 2, 1, 0}),
                     v3.action(2).select({3, 2, 1, 0}, {3, 2, 1, 0})});
  CHECK(is_isomorphic(perm, v3));
}

TEST_CASE("decompose") {
  auto alg = A3();
  for (int a = 0; a < 3; ++a) {
    GradedModule l = simple_hat(alg, a);
    auto d = decompose(direct_sum(l, l));
    REQUIRE(d.size() == 1);
    CHECK(d[0].multiplicity == 2);
    CHECK(is_isomorphic(d[0].module, l));
  }
  auto d = decompose(weyl_hat(alg, 3));
  REQUIRE(d.size() == 1);
  CHECK(d[0].multiplicity == 1);
  // completeness: reassembled sum is isomorphic to the input
  GradedModule m = direct_sum({w_hat(alg, 3), shift(weyl_hat(alg, 4), {3, -3}), shift(simple_hat(alg, 1), {0, 3}),
                               w_hat(alg, 3)});
  auto parts = decompose(m);
  std::vector<GradedModule> again;
  int total = 0;
  for (const auto& e : parts) {
    CHECK(validate(e.module).empty());
    for (int i = 0; i < e.multiplicity; ++i) again.push_back(e.module);
    total += e.multiplicity;
  }
  CHECK(total == 4);
  CHECK(is_isomorphic(direct_sum(again), m));
}

TEST_CASE("indecomposables have only trivial idempotents") {
  auto alg = A3();
  for (const GradedModule& m : {weyl_hat(alg, 3), w_hat(alg, 6), contravariant_dual(weyl_hat(alg, 4))}) {
    HomSpace end = hom_space(m, m);
    if (end.dim() > 4) continue;
    int total = 1;
    for (int i = 0; i < end.dim(); ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      gf::Vector c(end.dim());
      int x = code;
      for (int i = 0; i < end.dim(); ++i) c[i] = gf::Residue(x % 3), x /= 3;
      Matrix e = combine(end.basis, c, m.dim(), m.dim(), alg->field());
      if (e * e == e) CHECK((e.is_zero() || e.is_identity()));
    }
  }
}

TEST_CASE("forgetful functor: isomorphic after forgetting means a unique shift") {
  auto alg = A3();
  GradedModule w = w_hat(alg, 6);
  GradedModule ws = shift(w, {3, -3});
  // ungraded intertwiners exist and the grading difference is a single weight
  auto hom = ungraded_hom_space(alg, w.actions(), ws.actions());
  CHECK(hom.dim() >= 1);
  std::set<Weight> diffs;
  for (int i = 0; i < w.dim(); ++i) diffs.insert(ws.weight(i) - w.weight(i));
  CHECK(diffs.size() == 1);
  CHECK(is_isomorphic(shift(w, *diffs.begin()), ws));
}

TEST_CASE("json round trip") {
  auto alg = A3();
  for (const GradedModule& m : {weyl_hat(alg, 3), shift(w_hat(alg, 6), {3, -3}), GradedModule::zero(alg)}) {
    std::string s = module_to_string(m);
    CHECK(module_from_string(s) == m);
    CHECK(module_to_string(module_from_string(s)) == s);
  }
  auto b = Algebra::borel(3, 1, 2);
  GradedModule z = borel_projective(b, {1, 1});
  std::string s = module_to_string(z);
  CHECK(s.find("\"first\":2") != std::string::npos);
  CHECK(module_from_string(s) == z);
  CHECK_THROWS_AS(module_from_string("{\"algebra\":"), ParseError);
  CHECK_THROWS_AS(module_from_string("{\"algebra\":{\"kind\":\"sl2r1\",\"p\":3},\"dim\":1,\"weights\":[[0,0]],\"action\":{}}"),
                  UsageError);
  CHECK(s.rfind("{\"algebra\":", 0) == 0);
}

TEST_CASE("brute kernel size agrees with kernel_basis") {
  auto alg = A3();
  GradedModule v = weyl_hat(alg, 4);
  Matrix e = v.action(0);
  int k = gf::kernel_basis(e).cols();
  int expect = 1;
  for (int i = 0; i < k; ++i) expect *= 3;
  CHECK(brute_kernel_size(e) == expect);
}
