#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grq/grmod/module.hpp"

namespace grq {

struct HomSpace {
  std::vector<gf::Matrix> basis;
  int dim() const { return int(basis.size()); }
};

HomSpace hom_space(const GradedModule& m, const GradedModule& n);
// intertwiners of the underlying ungraded modules
HomSpace ungraded_hom_space(const AlgebraPtr& alg, const std::vector<gf::Matrix>& m_action,
                            const std::vector<gf::Matrix>& n_action);
gf::Matrix combine(const std::vector<gf::Matrix>& basis, const gf::Vector& coeffs,
                   int rows, int cols, const gf::PrimeField& f);

struct IsoResult {
  std::optional<ModuleMap> iso;
  std::string reason;  // why it was refused, or how it was found
  explicit operator bool() const { return iso.has_value(); }
};

IsoResult is_isomorphic(const GradedModule& m, const GradedModule& n, std::uint64_t seed = 0);

struct Summand {
  GradedModule module;
  ModuleMap inclusion;
  ModuleMap projection;
};

// Fitting splitting down to summands with certified local endomorphism rings.
std::vector<Summand> split_indecomposables(const GradedModule& m, std::uint64_t seed = 0);

struct DecompositionEntry {
  GradedModule module;
  int multiplicity = 1;
};
std::vector<DecompositionEntry> decompose(const GradedModule& m, std::uint64_t seed = 0);
bool is_indecomposable(const GradedModule& m, std::uint64_t seed = 0);

// Basis of rad End(v) for v with End(v)/rad = F_p. Throws InvariantViolation
// when some endomorphism is not scalar + nilpotent.
std::vector<gf::Matrix> radical_endomorphisms(const GradedModule& v);

// Exact test for two modules with local endomorphism rings: an iso exists
// iff some g_i f_j (g in Hom(n,m), f in Hom(m,n)) is not nilpotent.
std::optional<gf::Matrix> pairing_iso(const GradedModule& m, const GradedModule& n);

}  // namespace grq
