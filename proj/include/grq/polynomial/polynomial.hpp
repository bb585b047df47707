#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grq/grmod/ops.hpp"
#include "grq/homological/homological.hpp"

namespace grq {

struct PolyVerdict {
  bool is_polynomial = true;
  std::vector<Weight> offending;   // sorted, distinct
  std::optional<int> degree;       // when all weights share one degree
};
PolyVerdict is_polynomial(const GradedModule& m);

// largest submodule with polynomial weights
Submodule t_poly(const GradedModule& m);
// largest polynomial quotient
Quotient u_poly(const GradedModule& m);

bool ext_projective_in_poly(const GradedModule& v);
bool ext_injective_in_poly(const GradedModule& v);

// t applied to the left and middle terms of the ambient sequence
ShortExact almost_split_in_poly(const GradedModule& v);
// t(f) for f: m -> n, as a map t(m) -> t(n)
ModuleMap t_map(const ModuleMap& f, const Submodule& tm, const Submodule& tn);

struct InjectiveHull {
  GradedModule module;
  ModuleMap mono;
};
InjectiveHull injective_hull(const GradedModule& m);

struct Resolution {
  std::vector<GradedModule> terms;
  bool terminated = false;  // last syzygy / cosyzygy was zero
};
Resolution poly_projective_resolution(const GradedModule& v, int n_terms);
Resolution poly_injective_resolution(const GradedModule& v, int n_terms);
// ambient minimal injective resolution with its differentials
struct Coresolution {
  std::vector<GradedModule> terms;
  std::vector<ModuleMap> maps;  // maps[0]: v -> I0, maps[k]: I_{k-1} -> I_k
};
Coresolution injective_coresolution(const GradedModule& v, int n_terms);
// is t(0 -> v -> I0 -> I1 -> ...) exact in the first n_terms places
bool t_acyclic(const GradedModule& v, int n_terms);
// projective dimension inside the polynomial category, nullopt when >= cap
std::optional<int> pd_in_poly(const GradedModule& v, int cap = 10);

struct StandardReport {
  Weight lambda;
  bool one_dim_top_space = false;
  bool lower_weights_only = false;
  bool scalar_endomorphisms = false;
  int dim = 0;
  bool ok() const { return one_dim_top_space && lower_weights_only && scalar_endomorphisms; }
};
std::vector<StandardReport> quasi_hereditary_check(unsigned p, int r, int d);

}  // namespace grq
