#include "grq/polynomial/polynomial.hpp"

#include <set>

#include "grq/constructions/constructions.hpp"
#include "grq/error.hpp"

namespace grq {

namespace {

using gf::Matrix;

Matrix coordinates_in(const Matrix& basis, const Matrix& vectors, const char* what) {
  gf::Coordinates c(basis);
  Matrix out(basis.field(), basis.cols(), vectors.cols());
  for (int j = 0; j < vectors.cols(); ++j) {
    auto x = c.of(vectors.column(j));
    if (!x) throw InvariantViolation(std::string(what) + ": vector outside the expected subspace");
    for (int i = 0; i < basis.cols(); ++i) out.set(i, j, (*x)[i]);
  }
  return out;
}

void require_polynomial(const GradedModule& v, const char* what) {
  if (!is_polynomial(v).is_polynomial) throw PreconditionError(std::string(what) + ": module is not polynomial");
}

}  // namespace

PolyVerdict is_polynomial(const GradedModule& m) {
  PolyVerdict v;
  std::set<Weight> bad;
  std::set<int> degrees;
  for (Weight w : m.weights()) {
    if (!w.is_polynomial()) bad.insert(w);
    degrees.insert(w.degree());
  }
  v.offending.assign(bad.begin(), bad.end());
  v.is_polynomial = bad.empty();
  if (degrees.size() == 1) v.degree = *degrees.begin();
  return v;
}

Submodule t_poly(const GradedModule& m) {
  const auto& f = m.field();
  std::vector<gf::Vector> cols;
  for (int i = 0; i < m.dim(); ++i)
    if (m.weight(i).is_polynomial()) {
      gf::Vector v(m.dim(), 0);
      v[i] = 1;
      cols.push_back(std::move(v));
    }
  Matrix u = Matrix::from_columns(f, m.dim(), cols);
  // shrink U to {x in U : g x in U for all g} until stable
  while (u.cols() > 0) {
    Matrix ann = gf::kernel_basis(u.transpose()).transpose();  // rows vanish exactly on U
    Matrix sys(f, 0, u.cols());
    for (const auto& g : m.actions()) sys = Matrix::vstack(sys, ann * g * u);
    Matrix k = gf::kernel_basis(sys);
    if (k.cols() == u.cols()) break;
    u = u * k;
  }
  return submodule_from_basis(m, u);
}

Quotient u_poly(const GradedModule& m) {
  std::vector<gf::Vector> gens;
  for (int i = 0; i < m.dim(); ++i)
    if (!m.weight(i).is_polynomial()) {
      gf::Vector v(m.dim(), 0);
      v[i] = 1;
      gens.push_back(std::move(v));
    }
  return quotient(submodule_span(m, gens));
}

bool ext_projective_in_poly(const GradedModule& v) {
  if (is_projective(v)) return true;
  return t_poly(tau(v)).module.dim() == 0;
}

bool ext_injective_in_poly(const GradedModule& v) {
  if (is_projective(v)) return true;
  return u_poly(tau_inv(v)).module.dim() == 0;
}

ModuleMap t_map(const ModuleMap& f, const Submodule& tm, const Submodule& tn) {
  Matrix img = f.matrix * tm.inclusion.matrix;
  return {tm.module, tn.module, coordinates_in(tn.inclusion.matrix, img, "t_map")};
}

ShortExact almost_split_in_poly(const GradedModule& v) {
  require_polynomial(v, "almost_split_in_poly");
  if (ext_projective_in_poly(v))
    throw PreconditionError("almost_split_in_poly: module is Ext-projective in the polynomial category");
  ShortExact amb = almost_split_sequence(v);
  Submodule tl = t_poly(amb.left), tm = t_poly(amb.middle);
  ShortExact s;
  s.left = tl.module;
  s.middle = tm.module;
  s.right = v;
  s.inj = t_map(amb.inj, tl, tm);
  s.surj = ModuleMap{tm.module, v, amb.surj.matrix * tm.inclusion.matrix};
  auto bad = check_exact(s);
  if (!bad.empty()) throw InvariantViolation("almost_split_in_poly: " + bad.front());
  if (splits(s)) throw InvariantViolation("almost_split_in_poly: sequence splits");
  if (!is_indecomposable(s.left)) throw InvariantViolation("almost_split_in_poly: left term decomposes");
  return s;
}

InjectiveHull injective_hull(const GradedModule& m) {
  ProjectiveCover c = projective_cover(standard_dual(m));
  ModuleMap d = dual_map(c.epi);
  return {d.target, ModuleMap{m, d.target, d.matrix}};
}

Resolution poly_projective_resolution(const GradedModule& v, int n_terms) {
  require_polynomial(v, "poly_projective_resolution");
  Resolution r;
  GradedModule x = v;
  for (int i = 0; i < n_terms; ++i) {
    if (x.dim() == 0) {
      r.terminated = true;
      break;
    }
    ProjectiveCover c = projective_cover(x);
    Quotient up = u_poly(c.module);
    // the cover factors through u(P) because x is polynomial
    Matrix induced = c.epi.matrix * up.section;
    if (!(c.epi.matrix == induced * up.projection.matrix))
      throw InvariantViolation("poly_projective_resolution: cover does not factor through u");
    r.terms.push_back(up.module);
    x = kernel(ModuleMap{up.module, x, induced}).module;
  }
  if (x.dim() == 0) r.terminated = true;
  return r;
}

Coresolution injective_coresolution(const GradedModule& v, int n_terms) {
  Coresolution c;
  GradedModule x = v;
  Matrix to_x;  // I_{k-1} -> x (cokernel projection), empty at the start
  for (int k = 0; k < n_terms; ++k) {
    if (x.dim() == 0) break;
    InjectiveHull h = injective_hull(x);
    c.terms.push_back(h.module);
    if (k == 0)
      c.maps.push_back(h.mono);
    else
      c.maps.push_back(ModuleMap{c.terms[k - 1], h.module, h.mono.matrix * to_x});
    Quotient q = quotient(h.module, h.mono.matrix);
    to_x = q.projection.matrix;
    x = q.module;
  }
  return c;
}

bool t_acyclic(const GradedModule& v, int n_terms) {
  Coresolution c = injective_coresolution(v, n_terms + 1);
  Submodule tv = t_poly(v);
  std::vector<Submodule> ts;
  for (const auto& m : c.terms) ts.push_back(t_poly(m));
  // t(v) -> t(I0) injective; then ker t(d_k) = im t(d_{k-1})
  std::vector<Matrix> d;
  d.push_back(t_map(c.maps[0], tv, ts[0]).matrix);
  for (std::size_t k = 1; k < c.maps.size(); ++k) d.push_back(t_map(c.maps[k], ts[k - 1], ts[k]).matrix);
  if (gf::rank(d[0]) != tv.module.dim()) return false;
  for (int k = 0; k < n_terms && k + 1 < int(d.size()); ++k) {
    int ker = d[k + 1].cols() - gf::rank(d[k + 1]);
    if (ker != gf::rank(d[k])) return false;
  }
  return true;
}

Resolution poly_injective_resolution(const GradedModule& v, int n_terms) {
  require_polynomial(v, "poly_injective_resolution");
  Resolution r;
  GradedModule x = v;
  for (int i = 0; i < n_terms; ++i) {
    if (x.dim() == 0) {
      r.terminated = true;
      break;
    }
    InjectiveHull h = injective_hull(x);
    Submodule th = t_poly(h.module);
    Matrix into = coordinates_in(th.inclusion.matrix, h.mono.matrix, "poly_injective_resolution");
    r.terms.push_back(th.module);
    x = quotient(th.module, into).module;
  }
  if (x.dim() == 0) r.terminated = true;
  return r;
}

std::optional<int> pd_in_poly(const GradedModule& v, int cap) {
  Resolution r = poly_projective_resolution(v, cap + 1);
  if (!r.terminated) return std::nullopt;
  return int(r.terms.size()) - 1;
}

std::vector<StandardReport> quasi_hereditary_check(unsigned p, int r, int d) {
  if (d < 0) throw UsageError("quasi_hereditary_check: d must be >= 0");
  AlgebraPtr alg = Algebra::borel(p, r);
  std::vector<StandardReport> out;
  for (int a = d; a >= 0; --a) {
    StandardReport rep;
    rep.lambda = {a, d - a};
    GradedModule delta = u_poly(borel_projective(alg, rep.lambda)).module;
    rep.dim = delta.dim();
    rep.one_dim_top_space = delta.indices_of(rep.lambda).size() == 1;
    rep.lower_weights_only = true;
    for (Weight w : delta.weights()) {
      if (w == rep.lambda) continue;
      Weight diff = rep.lambda - w;  // must be a positive multiple of alpha
      if (!(diff.a > 0 && diff.a == -diff.b)) rep.lower_weights_only = false;
    }
    rep.scalar_endomorphisms = hom_space(delta, delta).dim() == 1;
    out.push_back(rep);
  }
  return out;
}

}  // namespace grq
