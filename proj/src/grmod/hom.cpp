#include "grq/grmod/hom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "grq/error.hpp"
#include "grq/grmod/ops.hpp"

namespace grq {

namespace {

using gf::Matrix;
using gf::Residue;

HomSpace hom_impl(const gf::PrimeField& f, const std::vector<Weight>& wm,
                  const std::vector<Matrix>& am, const std::vector<Weight>& wn,
                  const std::vector<Matrix>& an, const std::vector<Weight>& shifts) {
  const int dm = int(wm.size()), dn = int(wn.size());
  std::map<Weight, std::vector<int>> mb, nb;
  for (int j = 0; j < dm; ++j) mb[wm[j]].push_back(j);
  for (int i = 0; i < dn; ++i) nb[wn[i]].push_back(i);
  auto block = [](const std::map<Weight, std::vector<int>>& b, Weight w) -> const std::vector<int>& {
    static const std::vector<int> empty;
    auto it = b.find(w);
    return it == b.end() ? empty : it->second;
  };

  std::vector<int> uid(std::size_t(dn) * dm, -1);
  int u = 0;
  for (int j = 0; j < dm; ++j)
    for (int i : block(nb, wm[j])) uid[std::size_t(i) * dm + j] = u++;
  HomSpace out;
  if (u == 0) return out;

  int rows = 0;
  for (std::size_t g = 0; g < shifts.size(); ++g)
    for (int j = 0; j < dm; ++j) rows += int(block(nb, wm[j] + shifts[g]).size());
  Matrix sys(f, rows, u);
  int r = 0;
  for (std::size_t g = 0; g < shifts.size(); ++g) {
    const Matrix &xm = am[g], &xn = an[g];
    for (int j = 0; j < dm; ++j) {
      const auto& src = block(nb, wm[j]);        // phi(k, j) unknowns
      const auto& mid = block(mb, wm[j] + shifts[g]);  // l with x_m(l, j) possibly nonzero
      for (int i : block(nb, wm[j] + shifts[g])) {
        // (x_n phi)(i, j) - (phi x_m)(i, j) = 0
        for (int k : src)
          if (Residue c = xn(i, k)) {
            int id = uid[std::size_t(k) * dm + j];
            sys.set(r, id, f.add(sys(r, id), c));
          }
        for (int l : mid)
          if (Residue c = xm(l, j)) {
            int id = uid[std::size_t(i) * dm + l];
            sys.set(r, id, f.sub(sys(r, id), c));
          }
        ++r;
      }
    }
  }
  Matrix ker = gf::kernel_basis(sys);
  for (int c = 0; c < ker.cols(); ++c) {
    Matrix phi(f, dn, dm);
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dm; ++j) {
        int id = uid[std::size_t(i) * dm + j];
        if (id >= 0) phi.set(i, j, ker(id, c));
      }
    out.basis.push_back(std::move(phi));
  }
  return out;
}

bool invertible(const Matrix& m) { return m.rows() == m.cols() && gf::rank(m) == m.rows(); }

// ranks of every generator block M_w -> M_{w+shift}
std::map<std::pair<int, Weight>, int> rank_profile(const GradedModule& m) {
  std::map<std::pair<int, Weight>, int> out;
  for (int g = 0; g < m.algebra().generator_count(); ++g)
    for (Weight w : m.support()) {
      auto cols = m.indices_of(w);
      auto rows = m.indices_of(w + m.algebra().generator_shift(g));
      if (rows.empty()) continue;
      out[{g, w}] = gf::rank(m.action(g).select(rows, cols));
    }
  return out;
}

Matrix random_combination(const std::vector<Matrix>& basis, std::mt19937_64& rng, int rows,
                          int cols, const gf::PrimeField& f) {
  std::uniform_int_distribution<int> d(0, int(f.p()) - 1);
  gf::Vector c(basis.size());
  for (auto& x : c) x = Residue(d(rng));
  return combine(basis, c, rows, cols, f);
}

// Calls visit on every nonzero coefficient vector; stops when visit returns true.
template <class Visit>
bool enumerate_coefficients(int dim, unsigned p, Visit&& visit) {
  gf::Vector c(dim, 0);
  while (true) {
    int t = 0;
    while (t < dim && c[t] == p - 1) c[t++] = 0;
    if (t == dim) return false;
    ++c[t];
    if (visit(c)) return true;
  }
}

enum class FittingKind { ScalarPlusNilpotent, Split, NoEigenvalue };
struct Fitting {
  FittingKind kind;
  Residue scalar = 0;
  Matrix power;  // (phi - c)^N for the splitting c
};

Fitting fitting(const Matrix& phi) {
  const auto& f = phi.field();
  const int n = phi.rows();
  const Matrix id = Matrix::identity(f, n);
  for (unsigned c = 0; c < f.p(); ++c) {
    Matrix psi = phi - id.scaled(Residue(c));
    Matrix big = psi;
    for (int k = 1; k < n; k *= 2) big = big * big;
    if (big.is_zero()) return {FittingKind::ScalarPlusNilpotent, Residue(c), big};
    if (gf::rank(big) < n) return {FittingKind::Split, Residue(c), big};
  }
  return {FittingKind::NoEigenvalue, 0, Matrix()};
}

// products of the given nilpotents eventually vanish on everything
bool generates_nilpotent_algebra(const std::vector<Matrix>& nil, int n, const gf::PrimeField& f) {
  Matrix span = Matrix::identity(f, n);
  for (int step = 0; step <= n; ++step) {
    if (span.cols() == 0) return true;
    Matrix next(f, n, 0);
    for (const auto& x : nil) next = Matrix::hstack(next, x * span);
    next = gf::column_space_basis(next);
    if (next.cols() == span.cols()) return next.cols() == 0;
    span = next;
  }
  return span.cols() == 0;
}

struct Piece {
  GradedModule module;
  Matrix inclusion;  // into the original module
};

void split_rec(const GradedModule& m, const Matrix& into, std::mt19937_64& rng,
               std::vector<Piece>& out) {
  const auto& f = m.field();
  const int n = m.dim();
  if (n == 0) return;
  if (n == 1) {
    out.push_back({m, into});
    return;
  }
  HomSpace end = hom_space(m, m);
  auto split_by = [&](const Fitting& fit) {
    Submodule k = submodule_from_basis(m, gf::kernel_basis(fit.power));
    Submodule i = submodule_from_basis(m, gf::column_space_basis(fit.power));
    split_rec(k.module, into * k.inclusion.matrix, rng, out);
    split_rec(i.module, into * i.inclusion.matrix, rng, out);
  };
  auto try_split = [&](const Matrix& phi) -> bool {
    Fitting fit = fitting(phi);
    if (fit.kind != FittingKind::Split) return false;
    split_by(fit);
    return true;
  };
  if (end.dim() > 1) {
    std::vector<Matrix> nil;
    bool all_local = true;
    for (const auto& phi : end.basis) {
      Fitting fit = fitting(phi);
      if (fit.kind == FittingKind::Split) {
        split_by(fit);
        return;
      }
      if (fit.kind != FittingKind::ScalarPlusNilpotent) {
        all_local = false;
        continue;
      }
      nil.push_back(phi - Matrix::identity(f, n).scaled(fit.scalar));
    }
    if (all_local && generates_nilpotent_algebra(nil, n, f)) {
      out.push_back({m, into});
      return;
    }
    for (int t = 0; t < 64; ++t)
      if (try_split(random_combination(end.basis, rng, n, n, f))) return;
    double space = std::pow(double(f.p()), end.dim());
    if (space > 4e5)
      throw InvariantViolation("decompose: could not certify a local endomorphism ring (dim End = " +
                               std::to_string(end.dim()) + ")");
    bool done = enumerate_coefficients(end.dim(), f.p(), [&](const gf::Vector& c) {
      return try_split(combine(end.basis, c, n, n, f));
    });
    if (done) return;
    throw InvariantViolation("decompose: End is neither local nor split by any element");
  }
  out.push_back({m, into});
}

}  // namespace

HomSpace hom_space(const GradedModule& m, const GradedModule& n) {
  require_same_algebra(m, n);
  std::vector<Weight> shifts;
  for (int g = 0; g < m.algebra().generator_count(); ++g) shifts.push_back(m.algebra().generator_shift(g));
  return hom_impl(m.field(), m.weights(), m.actions(), n.weights(), n.actions(), shifts);
}

HomSpace ungraded_hom_space(const AlgebraPtr& alg, const std::vector<Matrix>& m_action,
                            const std::vector<Matrix>& n_action) {
  const int dm = m_action.empty() ? 0 : m_action[0].rows();
  const int dn = n_action.empty() ? 0 : n_action[0].rows();
  std::vector<Weight> wm(dm), wn(dn), shifts(alg->generator_count());
  return hom_impl(alg->field(), wm, m_action, wn, n_action, shifts);
}

gf::Matrix combine(const std::vector<Matrix>& basis, const gf::Vector& coeffs, int rows, int cols,
                   const gf::PrimeField& f) {
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i]) out.add_scaled(basis[i], coeffs[i]);
  return out;
}

std::optional<Matrix> pairing_iso(const GradedModule& m, const GradedModule& n) {
  if (m.sorted_weights() != n.sorted_weights()) return std::nullopt;
  HomSpace fwd = hom_space(m, n);
  if (fwd.dim() == 0) return std::nullopt;
  HomSpace back = hom_space(n, m);
  for (const auto& fj : fwd.basis)
    for (const auto& gi : back.basis)
      if (!gf::is_nilpotent(gi * fj)) {
        if (!invertible(fj)) throw InvariantViolation("pairing test: endomorphism ring is not local");
        return fj;
      }
  return std::nullopt;
}

IsoResult is_isomorphic(const GradedModule& m, const GradedModule& n, std::uint64_t seed) {
  require_same_algebra(m, n);
  IsoResult res;
  if (m.sorted_weights() != n.sorted_weights()) {
    res.reason = "graded dimensions differ";
    return res;
  }
  if (m.dim() == 0) {
    res.iso = ModuleMap{m, n, Matrix(m.field(), 0, 0)};
    res.reason = "zero modules";
    return res;
  }
  if (rank_profile(m) != rank_profile(n)) {
    res.reason = "generator rank profiles differ";
    return res;
  }
  HomSpace hom = hom_space(m, n);
  const auto& f = m.field();
  const int d = m.dim();
  if (hom.dim() == 0) {
    res.reason = "no nonzero homomorphism";
    return res;
  }
  auto accept = [&](const Matrix& phi, const char* how) {
    res.iso = ModuleMap{m, n, phi};
    res.reason = how;
  };
  if (hom.dim() <= 4) {
    bool found = enumerate_coefficients(hom.dim(), f.p(), [&](const gf::Vector& c) {
      Matrix phi = combine(hom.basis, c, d, d, f);
      if (!invertible(phi)) return false;
      accept(phi, "exhaustive search");
      return true;
    });
    if (!found) res.reason = "exhaustive search: no invertible homomorphism";
    return res;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 64; ++t) {
    Matrix phi = random_combination(hom.basis, rng, d, d, f);
    if (invertible(phi)) {
      accept(phi, "random sampling");
      return res;
    }
  }
  // Certified fallback: split both sides and pair summands.
  auto sm = split_indecomposables(m, seed);
  auto sn = split_indecomposables(n, seed);
  if (sm.size() != sn.size()) {
    res.reason = "different numbers of indecomposable summands";
    return res;
  }
  std::vector<bool> used(sn.size(), false);
  Matrix phi(f, d, d);
  for (const auto& x : sm) {
    bool matched = false;
    for (std::size_t j = 0; j < sn.size() && !matched; ++j) {
      if (used[j]) continue;
      auto iso = pairing_iso(x.module, sn[j].module);
      if (!iso) continue;
      used[j] = true;
      matched = true;
      phi.add_scaled(sn[j].inclusion.matrix * *iso * x.projection.matrix, 1);
    }
    if (!matched) {
      res.reason = "summand multisets differ (pairing test)";
      return res;
    }
  }
  if (!invertible(phi) || !is_module_map(m, n, phi))
    throw InvariantViolation("is_isomorphic: assembled summand isomorphism is not an isomorphism");
  accept(phi, "summand pairing");
  return res;
}

std::vector<Summand> split_indecomposables(const GradedModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Piece> pieces;
  // degree pieces first: they are always direct summands
  for (const auto& [deg, part] : degree_decompose(m)) {
    std::vector<int> idx;
    for (int i = 0; i < m.dim(); ++i)
      if (m.weight(i).degree() == deg) idx.push_back(i);
    Matrix into(m.field(), m.dim(), int(idx.size()));
    for (int t = 0; t < int(idx.size()); ++t) into.set(idx[t], t, 1);
    split_rec(part, into, rng, pieces);
  }
  std::vector<Summand> out;
  if (pieces.empty()) return out;
  Matrix all(m.field(), m.dim(), 0);
  for (const auto& pc : pieces) all = Matrix::hstack(all, pc.inclusion);
  auto inv = gf::inverse(all);
  if (!inv) throw InvariantViolation("decompose: summands do not span the module");
  int row = 0;
  for (const auto& pc : pieces) {
    const int k = pc.module.dim();
    require_valid(pc.module, "decompose summand");
    Matrix proj = inv->block(row, 0, k, m.dim());
    row += k;
    out.push_back({pc.module, ModuleMap{pc.module, m, pc.inclusion}, ModuleMap{m, pc.module, proj}});
  }
  return out;
}

std::vector<DecompositionEntry> decompose(const GradedModule& m, std::uint64_t seed) {
  std::vector<DecompositionEntry> out;
  for (const auto& s : split_indecomposables(m, seed)) {
    bool merged = false;
    for (auto& e : out)
      if (is_isomorphic(e.module, s.module, seed)) {
        ++e.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({s.module, 1});
  }
  return out;
}

bool is_indecomposable(const GradedModule& m, std::uint64_t seed) {
  return m.dim() > 0 && split_indecomposables(m, seed).size() == 1;
}

std::vector<Matrix> radical_endomorphisms(const GradedModule& v) {
  const auto& f = v.field();
  const int n = v.dim();
  HomSpace end = hom_space(v, v);
  std::vector<Matrix> nil;
  for (const auto& phi : end.basis) {
    Fitting fit = fitting(phi);
    if (fit.kind != FittingKind::ScalarPlusNilpotent)
      throw InvariantViolation("End(v) is not local with residue field F_p");
    nil.push_back(phi - Matrix::identity(f, n).scaled(fit.scalar));
  }
  gf::RowSpace span(f, n * n);
  std::vector<Matrix> basis;
  for (const auto& x : nil)
    if (span.add(x.entries())) basis.push_back(x);
  if (int(basis.size()) != end.dim() - 1 || !generates_nilpotent_algebra(basis, n, f))
    throw InvariantViolation("End(v)/rad(End(v)) is not F_p (dim End " + std::to_string(end.dim()) +
                             ", rad " + std::to_string(basis.size()) + ")");
  return basis;
}

}  // namespace grq
