#pragma once

#include <string>
#include <vector>

#include "grq/gf/matrix.hpp"
#include "grq/grmod/algebra.hpp"
#include "grq/grmod/weight.hpp"

namespace grq {

// Finite-dimensional graded module: one weight per basis vector plus one
// matrix per algebra generator. Basis vectors are always weight vectors.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(AlgebraPtr alg, std::vector<Weight> weights, std::vector<gf::Matrix> action);
  static GradedModule zero(AlgebraPtr alg);

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const gf::PrimeField& field() const { return alg_->field(); }
  int dim() const { return int(weights_.size()); }
  bool is_zero() const { return weights_.empty(); }

  const std::vector<Weight>& weights() const { return weights_; }
  Weight weight(int i) const { return weights_[i]; }
  const gf::Matrix& action(int g) const { return action_[g]; }
  const std::vector<gf::Matrix>& actions() const { return action_; }

  std::vector<Weight> support() const;  // sorted, distinct
  std::vector<int> indices_of(Weight w) const;
  std::vector<Weight> sorted_weights() const;  // multiset, sorted
  // weight of a nonzero homogeneous vector; throws UsageError otherwise
  Weight weight_of(const gf::Vector& v) const;

  bool operator==(const GradedModule& o) const;

 private:
  AlgebraPtr alg_;
  std::vector<Weight> weights_;
  std::vector<gf::Matrix> action_;
};

// Degree-0 homogeneous intertwiner. matrix is target.dim x source.dim.
struct ModuleMap {
  GradedModule source;
  GradedModule target;
  gf::Matrix matrix;
};

ModuleMap identity_map(const GradedModule& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
bool is_module_map(const GradedModule& src, const GradedModule& tgt, const gf::Matrix& f);

// Empty iff every invariant holds.
std::vector<std::string> validate(const GradedModule& m);
// throws InvariantViolation listing the problems
void require_valid(const GradedModule& m, const std::string& context);

void require_same_algebra(const GradedModule& m, const GradedModule& n);

}  // namespace grq
