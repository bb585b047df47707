#pragma once

#include <map>
#include <vector>

#include "grq/grmod/module.hpp"

namespace grq {

GradedModule shift(const GradedModule& m, Weight lambda);
std::vector<Weight> support(const GradedModule& m);
std::map<int, GradedModule> degree_decompose(const GradedModule& m);

// m^o: transpose anti-automorphism E <-> F, weights kept (sl2 only)
GradedModule contravariant_dual(const GradedModule& m);
// Hom_k(m, k) via the antipode: weights negated, generators act by -g^T
GradedModule linear_dual(const GradedModule& m);
// m^{w0}: coordinates swapped, E <-> F, H -> -H (sl2 only)
GradedModule weyl_twist(const GradedModule& m);
// Dual in the sense appropriate to the algebra: m^o for sl2, linear dual otherwise.
GradedModule standard_dual(const GradedModule& m);
// dual of f : m -> n as a map n* -> m* under standard_dual
ModuleMap dual_map(const ModuleMap& f);

GradedModule direct_sum(const std::vector<GradedModule>& parts);
GradedModule direct_sum(const GradedModule& x, const GradedModule& y);

struct Submodule {
  GradedModule module;
  ModuleMap inclusion;
};

struct Quotient {
  GradedModule module;
  ModuleMap projection;
  gf::Matrix section;  // linear (not module) right inverse of the projection
};

Submodule submodule_span(const GradedModule& m, const std::vector<gf::Vector>& generators);
// basis columns must be homogeneous and span a submodule
Submodule submodule_from_basis(const GradedModule& m, const gf::Matrix& basis);
Quotient quotient(const GradedModule& m, const gf::Matrix& sub_basis);
Quotient quotient(const Submodule& n);

Submodule socle(const GradedModule& m);
Submodule radical(const GradedModule& m);
Quotient top(const GradedModule& m);

// kernel and image of a module map as submodules
Submodule kernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);

}  // namespace grq
