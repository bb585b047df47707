#include "grq/grmod/module.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "grq/error.hpp"

namespace grq {

GradedModule::GradedModule(AlgebraPtr alg, std::vector<Weight> weights,
                           std::vector<gf::Matrix> action)
    : alg_(std::move(alg)), weights_(std::move(weights)), action_(std::move(action)) {
  if (!alg_) throw UsageError("module without algebra");
  if (int(action_.size()) != alg_->generator_count())
    throw DimensionError("expected " + std::to_string(alg_->generator_count()) +
                         " action matrices, got " + std::to_string(action_.size()));
  const int n = dim();
  for (const auto& m : action_) {
    if (m.rows() != n || m.cols() != n)
      throw DimensionError("action matrix is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", module dim " + std::to_string(n));
    if (m.p() != alg_->p()) throw DimensionError("action matrix over the wrong field");
  }
}

GradedModule GradedModule::zero(AlgebraPtr alg) {
  std::vector<gf::Matrix> act(alg->generator_count(), gf::Matrix(alg->field(), 0, 0));
  return GradedModule(alg, {}, std::move(act));
}

std::vector<Weight> GradedModule::support() const {
  std::set<Weight> s(weights_.begin(), weights_.end());
  return {s.begin(), s.end()};
}

std::vector<int> GradedModule::indices_of(Weight w) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (weights_[i] == w) out.push_back(i);
  return out;
}

std::vector<Weight> GradedModule::sorted_weights() const {
  std::vector<Weight> w = weights_;
  std::sort(w.begin(), w.end());
  return w;
}

Weight GradedModule::weight_of(const gf::Vector& v) const {
  if (int(v.size()) != dim()) throw DimensionError("vector length does not match module");
  std::optional<Weight> w;
  for (int i = 0; i < dim(); ++i) {
    if (!v[i]) continue;
    if (w && *w != weights_[i]) throw UsageError("vector is not homogeneous");
    w = weights_[i];
  }
  if (!w) throw UsageError("zero vector has no weight");
  return *w;
}

bool GradedModule::operator==(const GradedModule& o) const {
  return *alg_ == *o.alg_ && weights_ == o.weights_ && action_ == o.action_;
}

ModuleMap identity_map(const GradedModule& m) {
  return {m, m, gf::Matrix::identity(m.field(), m.dim())};
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  return {f.source, g.target, g.matrix * f.matrix};
}

bool is_module_map(const GradedModule& src, const GradedModule& tgt, const gf::Matrix& f) {
  if (f.rows() != tgt.dim() || f.cols() != src.dim()) return false;
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (f(i, j) && tgt.weight(i) != src.weight(j)) return false;
  for (int g = 0; g < src.algebra().generator_count(); ++g)
    if (!(tgt.action(g) * f == f * src.action(g))) return false;
  return true;
}

void require_same_algebra(const GradedModule& m, const GradedModule& n) {
  if (!(m.algebra() == n.algebra()))
    throw UsageError("modules over different algebras: " + m.algebra().describe() + " vs " +
                     n.algebra().describe());
}

std::vector<std::string> validate(const GradedModule& m) {
  std::vector<std::string> report;
  const Algebra& alg = m.algebra();
  const auto& f = m.field();
  const int n = m.dim();
  if (n == 0) return report;

  // grading: generator g sends weight w into w + shift(g)
  for (int g = 0; g < alg.generator_count(); ++g) {
    const gf::Matrix& x = m.action(g);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (x(i, j) && m.weight(i) != m.weight(j) + alg.generator_shift(g)) {
          std::ostringstream s;
          s << "grading: " << alg.generator_name(g) << " maps basis vector " << j << " of weight "
            << m.weight(j).str() << " into vector " << i << " of weight " << m.weight(i).str();
          report.push_back(s.str());
        }
  }

  auto relation = [&](const gf::Matrix& lhs, const gf::Matrix& rhs, const std::string& name) {
    if (!(lhs == rhs)) report.push_back("relation " + name + " fails");
  };
  const unsigned p = alg.p();
  const gf::Matrix zero(f, n, n);
  if (alg.kind() == AlgebraKind::Sl2R1) {
    const gf::Matrix &e = m.action(0), &fm = m.action(1), &h = m.action(2);
    relation(gf::power(e, p), zero, "E^p = 0");
    relation(gf::power(fm, p), zero, "F^p = 0");
    relation(gf::power(h, p), h, "H^p = H");
    relation(h * e - e * h, e.scaled(2), "HE - EH = 2E");
    relation(h * fm - fm * h, fm.scaled(f.neg(2)), "HF - FH = -2F");
    relation(e * fm - fm * e, h, "EF - FE = H");
    // torus compatibility: H is the scalar a - b on weight (a, b)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        gf::Residue want = i == j ? f.reduce(m.weight(j).a - m.weight(j).b) : 0;
        if (h(i, j) != want)
          report.push_back("H cell (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is " + std::to_string(h(i, j)) + ", expected " + std::to_string(want));
      }
  } else {
    for (int g = 0; g < alg.generator_count(); ++g) {
      relation(gf::power(m.action(g), p), zero, alg.generator_name(g) + "^p = 0");
      for (int k = g + 1; k < alg.generator_count(); ++k)
        relation(m.action(g) * m.action(k), m.action(k) * m.action(g),
                 alg.generator_name(g) + alg.generator_name(k) + " = " + alg.generator_name(k) +
                     alg.generator_name(g));
    }
  }
  return report;
}

void require_valid(const GradedModule& m, const std::string& context) {
  auto r = validate(m);
  if (r.empty()) return;
  std::string msg = context + ": invalid module (" + std::to_string(r.size()) + " problems)";
  for (std::size_t i = 0; i < r.size() && i < 5; ++i) msg += "\n  " + r[i];
  throw InvariantViolation(msg);
}

}  // namespace grq
