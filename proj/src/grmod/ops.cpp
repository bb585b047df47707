#include "grq/grmod/ops.hpp"

#include <algorithm>
#include <deque>

#include "grq/error.hpp"

namespace grq {

namespace {

void require_sl2(const GradedModule& m, const char* op) {
  if (m.algebra().kind() != AlgebraKind::Sl2R1)
    throw UsageError(std::string(op) + " is only defined for sl2r1 modules");
}

}  // namespace

GradedModule shift(const GradedModule& m, Weight lambda) {
  std::vector<Weight> w = m.weights();
  for (auto& x : w) x += lambda;
  return GradedModule(m.algebra_ptr(), std::move(w), m.actions());
}

std::vector<Weight> support(const GradedModule& m) { return m.support(); }

std::map<int, GradedModule> degree_decompose(const GradedModule& m) {
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < m.dim(); ++i) by_degree[m.weight(i).degree()].push_back(i);
  std::map<int, GradedModule> out;
  for (const auto& [d, idx] : by_degree) {
    std::vector<Weight> w;
    for (int i : idx) w.push_back(m.weight(i));
    std::vector<gf::Matrix> act;
    for (const auto& g : m.actions()) act.push_back(g.select(idx, idx));
    out.emplace(d, GradedModule(m.algebra_ptr(), std::move(w), std::move(act)));
  }
  return out;
}

GradedModule contravariant_dual(const GradedModule& m) {
  require_sl2(m, "contravariant_dual");
  return GradedModule(m.algebra_ptr(), m.weights(),
                      {m.action(1).transpose(), m.action(0).transpose(), m.action(2).transpose()});
}

GradedModule linear_dual(const GradedModule& m) {
  std::vector<Weight> w = m.weights();
  for (auto& x : w) x = -x;
  std::vector<gf::Matrix> act;
  for (const auto& g : m.actions()) act.push_back(g.transpose().negated());
  return GradedModule(m.algebra_ptr(), std::move(w), std::move(act));
}

GradedModule weyl_twist(const GradedModule& m) {
  require_sl2(m, "weyl_twist");
  std::vector<Weight> w = m.weights();
  for (auto& x : w) x = x.swapped();
  return GradedModule(m.algebra_ptr(), std::move(w), {m.action(1), m.action(0), m.action(2).negated()});
}

GradedModule standard_dual(const GradedModule& m) {
  return m.algebra().kind() == AlgebraKind::Sl2R1 ? contravariant_dual(m) : linear_dual(m);
}

ModuleMap dual_map(const ModuleMap& f) {
  return {standard_dual(f.target), standard_dual(f.source), f.matrix.transpose()};
}

GradedModule direct_sum(const std::vector<GradedModule>& parts) {
  if (parts.empty()) throw UsageError("direct_sum of nothing: algebra unknown");
  std::vector<Weight> w;
  for (const auto& x : parts) {
    require_same_algebra(parts[0], x);
    w.insert(w.end(), x.weights().begin(), x.weights().end());
  }
  const auto& alg = parts[0].algebra();
  std::vector<gf::Matrix> act;
  for (int g = 0; g < alg.generator_count(); ++g) {
    std::vector<gf::Matrix> blocks;
    for (const auto& x : parts) blocks.push_back(x.action(g));
    gf::Matrix b = gf::Matrix::block_diagonal(blocks);
    if (b.rows() == 0) b = gf::Matrix(alg.field(), 0, 0);
    act.push_back(b);
  }
  return GradedModule(parts[0].algebra_ptr(), std::move(w), std::move(act));
}

GradedModule direct_sum(const GradedModule& x, const GradedModule& y) { return direct_sum({x, y}); }

Submodule submodule_from_basis(const GradedModule& m, const gf::Matrix& basis) {
  if (basis.rows() != m.dim()) throw DimensionError("submodule basis has wrong length");
  const int k = basis.cols();
  std::vector<Weight> w;
  for (int t = 0; t < k; ++t) w.push_back(m.weight_of(basis.column(t)));
  gf::Coordinates coords(basis);
  std::vector<gf::Matrix> act;
  for (const auto& g : m.actions()) {
    gf::Matrix img = g * basis;
    gf::Matrix a(m.field(), k, k);
    for (int t = 0; t < k; ++t) {
      auto x = coords.of(img.column(t));
      if (!x) throw PreconditionError("subspace is not closed under the action");
      for (int i = 0; i < k; ++i) a.set(i, t, (*x)[i]);
    }
    act.push_back(std::move(a));
  }
  GradedModule sub(m.algebra_ptr(), std::move(w), std::move(act));
  return {sub, ModuleMap{sub, m, basis}};
}

Submodule submodule_span(const GradedModule& m, const std::vector<gf::Vector>& generators) {
  gf::RowSpace span(m.field(), m.dim());
  std::vector<gf::Vector> basis;
  std::deque<gf::Vector> queue;
  for (const auto& v : generators) {
    if (int(v.size()) != m.dim()) throw DimensionError("generator has wrong length");
    if (gf::is_zero(v)) continue;
    m.weight_of(v);  // throws when not homogeneous
    queue.push_back(v);
  }
  while (!queue.empty()) {
    gf::Vector v = std::move(queue.front());
    queue.pop_front();
    if (!span.add(v)) continue;
    for (const auto& g : m.actions()) {
      gf::Vector gv = g * v;
      if (!gf::is_zero(gv)) queue.push_back(std::move(gv));
    }
    basis.push_back(std::move(v));
  }
  return submodule_from_basis(m, gf::Matrix::from_columns(m.field(), m.dim(), basis));
}

Quotient quotient(const GradedModule& m, const gf::Matrix& sub_basis) {
  const auto& f = m.field();
  const int n = m.dim();
  if (sub_basis.rows() != n) throw DimensionError("quotient: basis has wrong length");
  gf::Rref r = gf::rref(sub_basis.transpose());
  std::vector<int> pivot_row(n, -1);
  for (int i = 0; i < r.rank; ++i) pivot_row[r.pivots[i]] = i;
  std::vector<int> keep;
  for (int j = 0; j < n; ++j)
    if (pivot_row[j] < 0) keep.push_back(j);
  const int q = int(keep.size());
  std::vector<int> pos(n, -1);
  for (int t = 0; t < q; ++t) pos[keep[t]] = t;

  gf::Matrix proj(f, q, n), section(f, n, q);
  for (int t = 0; t < q; ++t) {
    proj.set(t, keep[t], 1);
    section.set(keep[t], t, 1);
  }
  // a pivot coordinate is congruent to minus the rest of its row
  for (int j = 0; j < n; ++j) {
    if (pivot_row[j] < 0) continue;
    for (int t = 0; t < q; ++t) proj.set(t, j, f.neg(r.reduced(pivot_row[j], keep[t])));
  }
  std::vector<Weight> w;
  for (int j : keep) w.push_back(m.weight(j));
  std::vector<gf::Matrix> act;
  for (const auto& g : m.actions()) {
    if (!(proj * g * sub_basis).is_zero())
      throw PreconditionError("quotient: subspace is not a submodule");
    act.push_back(proj * g * section);
  }
  GradedModule qm(m.algebra_ptr(), std::move(w), std::move(act));
  return {qm, ModuleMap{m, qm, proj}, section};
}

Quotient quotient(const Submodule& n) { return quotient(n.inclusion.target, n.inclusion.matrix); }

Submodule socle(const GradedModule& m) {
  const auto& gens = m.algebra().radical_generators();
  if (m.dim() == 0 || gens.empty())
    return submodule_from_basis(m, gf::Matrix::identity(m.field(), m.dim()));
  gf::Matrix stacked(m.field(), 0, m.dim());
  for (const auto& x : gens) stacked = gf::Matrix::vstack(stacked, m.algebra().evaluate(x, m.actions()));
  return submodule_from_basis(m, gf::kernel_basis(stacked));
}

Submodule radical(const GradedModule& m) {
  std::vector<gf::Vector> vecs;
  for (const auto& x : m.algebra().radical_generators()) {
    gf::Matrix g = m.algebra().evaluate(x, m.actions());
    for (int c = 0; c < g.cols(); ++c) vecs.push_back(g.column(c));
  }
  return submodule_span(m, vecs);
}

Quotient top(const GradedModule& m) { return quotient(radical(m)); }

Submodule kernel(const ModuleMap& f) {
  return submodule_from_basis(f.source, gf::kernel_basis(f.matrix));
}

Submodule image(const ModuleMap& f) {
  return submodule_from_basis(f.target, gf::column_space_basis(f.matrix));
}

}  // namespace grq
