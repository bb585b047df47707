#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "grq/grmod/module.hpp"

namespace grq {

// Weyl module V(d) with v_i of weight (i, d-i)
GradedModule weyl_hat(const AlgebraPtr& alg, int d);
// W(sp+a): the submodule on v_{a+1}..v_d, s >= 1, 0 <= a <= p-2
GradedModule w_hat(const AlgebraPtr& alg, int d);
GradedModule w_hat_twisted(const AlgebraPtr& alg, int d);
GradedModule simple_hat(const AlgebraPtr& alg, int r);

// The regular module as a graded G1T-module: sum over c of U0 e_c placed so
// that the generator e_c has weight (c, 0); e_c is the H-eigenidempotent.
// Borel: the free module of rank one generated in weight 0.
GradedModule regular_graded(const AlgebraPtr& alg);
// U0 e_c with generator in weight (c,0); graded projective, dim p^2
GradedModule induced_from_torus(const AlgebraPtr& alg, int c);
// Q(a): projective indecomposable with top L(a) (generator weight (a,0))
const GradedModule& projective_indec(const AlgebraPtr& alg, int a);

// Borel side
GradedModule borel_projective(const AlgebraPtr& alg, Weight lambda);  // Z_r(lambda)
GradedModule borel_trivial(const AlgebraPtr& alg, Weight lambda);     // k_lambda
// m over X_f..X_{f+r-1}, n over the next block of variables
GradedModule outer_tensor(const GradedModule& m, const GradedModule& n);

std::map<Weight, int> character(const GradedModule& m);

enum class Family { V, Vo, W, Wwo, L, Q, Z, K };

struct FamilyLabel {
  Family family = Family::V;
  int d = 0;              // highest weight integer (unused for Z, K)
  Weight lambda{};        // Z/K base weight
  int r = 1, first = 1;   // Z/K algebra
  Weight shift{};

  std::string str() const;  // canonical: zero shifts omitted
  // W families: s in d = sp + a
  std::optional<int> quasi_length(unsigned p) const;
  bool operator==(const FamilyLabel&) const = default;
};

FamilyLabel parse_label(const std::string& text);
// algebra chosen from the label and p; Z/K labels pick their own Borel ring
AlgebraPtr label_algebra(const FamilyLabel& l, unsigned p);
GradedModule build(const FamilyLabel& l, unsigned p);

struct Identification {
  std::string label;  // canonical family label, or "#<hash>" when nothing matched
  std::optional<FamilyLabel> family;
};
// m should be indecomposable; certified by an explicit isomorphism
Identification identify(const GradedModule& m, std::uint64_t seed = 0);
std::string opaque_label(const GradedModule& m);

}  // namespace grq
