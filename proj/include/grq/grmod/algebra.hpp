#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "grq/gf/matrix.hpp"
#include "grq/grmod/weight.hpp"

namespace grq {

enum class AlgebraKind { Sl2R1, Borel };

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;
class GradedModule;

// U_0(sl2) with generators E, F, H, or the truncated polynomial ring
// k[X_first..X_{first+r-1}]/(X^p). Instances are interned: equal parameters
// give the same pointer.
//
// Elements are dense coordinate vectors in the PBW basis. For sl2 the
// monomial with exponents (i, j, k) is f^i h^j e^k; for the Borel ring it is
// the product of X powers.
class Algebra {
 public:
  using Element = gf::Vector;

  static AlgebraPtr sl2r1(unsigned p);
  static AlgebraPtr borel(unsigned p, int r, int first = 1);

  AlgebraKind kind() const { return kind_; }
  unsigned p() const { return field_.p(); }
  const gf::PrimeField& field() const { return field_; }
  int r() const { return r_; }
  int first() const { return first_; }
  std::string describe() const;

  int generator_count() const { return int(names_.size()); }
  const std::string& generator_name(int g) const { return names_[g]; }
  int generator_index(std::string_view name) const;  // -1 if absent
  // how the generator moves the weight of a module vector
  Weight generator_shift(int g) const { return shifts_[g]; }
  // shifts under which G1T-compatibility survives
  bool is_admissible_shift(Weight w) const;

  // PBW data
  int dimension() const { return int(monomials_.size()); }
  const std::vector<int>& word() const { return word_; }  // generator index per slot
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }
  int monomial_index(const std::vector<int>& exps) const;
  Weight monomial_shift(int idx) const { return mono_shift_[idx]; }
  Element unit() const;
  Element basis_element(int idx) const;

  // left multiplication by each generator on the regular module
  const std::vector<gf::Matrix>& left_regular() const;
  Element multiply(const Element& x, const Element& y) const;

  // action of an element on a module given by generator matrices
  gf::Matrix evaluate(const Element& x, const std::vector<gf::Matrix>& action) const;
  gf::Matrix evaluate_monomial(int idx, const std::vector<gf::Matrix>& action) const;

  // simple modules: p of them for sl2 (L(0..p-1)), one (k) for Borel.
  int simple_count() const;
  // highest-weight normalized graded simple: L(a) with weights (i, a-i)
  const GradedModule& simple(int s) const;

  // homogeneous generators of the Jacobson radical as a left ideal
  const std::vector<Element>& radical_generators() const;
  int radical_dimension() const;

  bool operator==(const Algebra& o) const {
    return kind_ == o.kind_ && p() == o.p() && r_ == o.r_ && first_ == o.first_;
  }

 private:
  Algebra(AlgebraKind kind, unsigned p, int r, int first);
  void build_regular() const;
  void build_radical() const;

  AlgebraKind kind_;
  gf::PrimeField field_;
  int r_, first_;
  std::vector<std::string> names_;
  std::vector<Weight> shifts_;
  std::vector<int> word_;
  std::vector<std::vector<int>> monomials_;
  std::vector<Weight> mono_shift_;
  std::vector<int> radix_;

  mutable std::once_flag regular_once_, radical_once_, simple_once_;
  mutable std::vector<gf::Matrix> left_;
  mutable std::vector<Element> radical_gens_;
  mutable int radical_dim_ = 0;
  mutable std::vector<std::shared_ptr<GradedModule>> simples_;
};

}  // namespace grq
