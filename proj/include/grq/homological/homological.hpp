#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grq/grmod/hom.hpp"
#include "grq/grmod/json.hpp"
#include "grq/grmod/module.hpp"

namespace grq {

struct ProjectivePiece {
  int a = 0;        // sl2: top L(a); borel: unused
  Weight shift{};   // sl2: Q(a)[shift]; borel: Z(shift)
};

struct ProjectiveCover {
  GradedModule module;
  ModuleMap epi;
  std::vector<ProjectivePiece> pieces;
};

// 0 -> omega -> cover -> m -> 0
struct Presentation {
  ProjectiveCover cover;
  GradedModule omega;
  ModuleMap inclusion;  // omega -> cover.module
};

ProjectiveCover projective_cover(const GradedModule& m);
Presentation presentation(const GradedModule& m);
bool is_projective(const GradedModule& m);

GradedModule omega(const GradedModule& m);
GradedModule omega_inv(const GradedModule& m);
GradedModule omega_pow(const GradedModule& m, int k);

// identity for sl2; shift by +(p^r - 1) alpha for the Borel ring
GradedModule nakayama(const GradedModule& m);
GradedModule nakayama_inv(const GradedModule& m);
Weight nakayama_shift(const Algebra& alg);
// half the positive root of the Borel ring, in the convention where the
// generators have negative weight: rho_B = -alpha/2, stored doubled
Weight borel_two_rho(const Algebra& alg);
GradedModule tau(const GradedModule& m);
GradedModule tau_inv(const GradedModule& m);

// Hom(omega v, w) modulo maps through the projective cover of w
struct Ext1 {
  int dim = 0;
  Presentation pres;             // of v
  std::vector<gf::Matrix> classes;  // representatives omega v -> w of a basis
};
Ext1 ext1(const GradedModule& v, const GradedModule& w);

struct ShortExact {
  GradedModule left, middle, right;
  ModuleMap inj, surj;
};
ojson short_exact_to_json(const ShortExact& s);
// empty iff inj injective, surj surjective, im inj = ker surj, maps intertwine
std::vector<std::string> check_exact(const ShortExact& s);
bool splits(const ShortExact& s);           // graded section exists
bool splits_ungraded(const ShortExact& s);  // section after forgetting weights

// Pushout of 0 -> omega v -> P -> v -> 0 along theta: omega v -> left
ShortExact pushout_extension(const Presentation& pres, const GradedModule& left, const gf::Matrix& theta);

struct AlmostSplitInfo {
  int socle_dim = 0;  // dim of the radical-annihilated part of Ext(v, tau v) mod R
  int ext_dim = 0;
};
// requires v indecomposable, non-projective, End(v)/rad = F_p
ShortExact almost_split_sequence(const GradedModule& v, AlmostSplitInfo* info = nullptr);

// lift an endomorphism of v through the cover: returns phi~ with epi phi~ = phi epi
gf::Matrix lift_to_cover(const ProjectiveCover& c, const GradedModule& v, const gf::Matrix& phi);

std::vector<int> betti(const GradedModule& m, int n_terms);
// 0, 1, 2, or nullopt (bounded-window heuristic)
std::optional<int> complexity_estimate(const GradedModule& m, int window = 12);

struct RankProbe {
  bool free = false;
  int rank = 0;
  int free_rank = 0;  // dim (p-1)/p, or -1 when p does not divide dim
};
// x = aE + bF + cH, must be nilpotent as a 2x2 matrix
RankProbe rank_probe(const GradedModule& m, int a, int b, int c);

// forgetful functor: same action matrices, weights erased
GradedModule forget(const GradedModule& m);
// term dimensions of the minimal resolution computed without using weights
std::vector<int> ungraded_betti(const GradedModule& m, int n_terms);

}  // namespace grq
