#include "grq/homological/homological.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "grq/constructions/constructions.hpp"
#include "grq/error.hpp"
#include "grq/grmod/ops.hpp"

namespace grq {

namespace {

using gf::Matrix;
using gf::Residue;

struct Candidate {
  GradedModule q;
  ProjectivePiece piece;
  int mult = 0;
};

using HomFn = std::function<HomSpace(const GradedModule&, const GradedModule&)>;

// Greedy choice of maps Q -> m whose images in top(m) are independent.
ProjectiveCover cover_impl(const GradedModule& m, const Quotient& t, const std::vector<Candidate>& cands,
                           const HomFn& hom) {
  const auto& f = m.field();
  ProjectiveCover out;
  std::vector<GradedModule> parts;
  Matrix epi(f, m.dim(), 0);
  Matrix img(f, t.module.dim(), 0);
  int img_rank = 0;
  for (const auto& c : cands) {
    int picked = 0;
    HomSpace hs = hom(c.q, m);
    for (const auto& h : hs.basis) {
      if (picked == c.mult) break;
      Matrix next = Matrix::hstack(img, t.projection.matrix * h);
      int r = gf::rank(next);
      if (r == img_rank) continue;
      img = std::move(next);
      img_rank = r;
      epi = Matrix::hstack(epi, h);
      parts.push_back(c.q);
      out.pieces.push_back(c.piece);
      ++picked;
    }
    if (picked != c.mult) throw InvariantViolation("projective_cover: could not lift a top summand");
  }
  if (img_rank != t.module.dim()) throw InvariantViolation("projective_cover: tops do not match");
  out.module = parts.empty() ? GradedModule::zero(m.algebra_ptr()) : direct_sum(parts);
  if (gf::rank(epi) != m.dim()) throw InvariantViolation("projective_cover: map is not onto");
  out.epi = ModuleMap{out.module, m, epi};
  return out;
}

int kernel_dim(const Matrix& m) { return m.cols() - gf::rank(m); }

std::vector<int> all_rows(int n) {
  std::vector<int> r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

gf::Vector flatten(const Matrix& m) { return m.entries(); }

// solve sum_k c_k A_k = B for c; nullopt if impossible
std::optional<gf::Vector> solve_combination(const std::vector<Matrix>& as, const Matrix& b) {
  const auto& f = b.field();
  const int n = int(b.entries().size());
  Matrix sys(f, n, int(as.size()));
  for (int k = 0; k < int(as.size()); ++k) {
    const auto& e = as[k].entries();
    for (int i = 0; i < n; ++i) sys.set(i, k, e[i]);
  }
  return gf::solve(sys, b.entries());
}

}  // namespace

GradedModule forget(const GradedModule& m) {
  return GradedModule(m.algebra_ptr(), std::vector<Weight>(m.dim()), m.actions());
}

ProjectiveCover projective_cover(const GradedModule& m) {
  const Algebra& alg = m.algebra();
  const auto& f = m.field();
  if (m.dim() == 0) {
    ProjectiveCover c;
    c.module = GradedModule::zero(m.algebra_ptr());
    c.epi = ModuleMap{c.module, m, Matrix(f, 0, 0)};
    return c;
  }
  Quotient t = top(m);
  std::vector<Candidate> cands;
  if (alg.kind() == AlgebraKind::Sl2R1) {
    // highest weight vectors of the semisimple top
    const Matrix& e = t.module.action(0);
    for (Weight w : t.module.support()) {
      auto idx = t.module.indices_of(w);
      int k = kernel_dim(e.select(all_rows(t.module.dim()), idx));
      if (!k) continue;
      int a = int(f.reduce(w.a - w.b));
      Weight mu = w - Weight{a, 0};
      cands.push_back({shift(projective_indec(m.algebra_ptr(), a), mu), {a, mu}, k});
    }
  } else {
    for (Weight w : t.module.support())
      cands.push_back({borel_projective(m.algebra_ptr(), w), {0, w}, int(t.module.indices_of(w).size())});
  }
  return cover_impl(m, t, cands, [](const GradedModule& q, const GradedModule& x) { return hom_space(q, x); });
}

Presentation presentation(const GradedModule& m) {
  Presentation p;
  p.cover = projective_cover(m);
  Submodule k = kernel(p.cover.epi);
  p.omega = k.module;
  p.inclusion = k.inclusion;
  return p;
}

bool is_projective(const GradedModule& m) { return projective_cover(m).module.dim() == m.dim(); }

GradedModule omega(const GradedModule& m) { return presentation(m).omega; }

GradedModule omega_inv(const GradedModule& m) { return standard_dual(omega(standard_dual(m))); }

GradedModule omega_pow(const GradedModule& m, int k) {
  GradedModule x = m;
  for (int i = 0; i < k; ++i) x = omega(x);
  for (int i = 0; i > k; --i) x = omega_inv(x);
  return x;
}

Weight nakayama_shift(const Algebra& alg) {
  if (alg.kind() == AlgebraKind::Sl2R1) return {0, 0};
  // socle of Z(lambda) sits at lambda + sum of generator shifts times (p-1)
  Weight s{0, 0};
  for (int g = 0; g < alg.generator_count(); ++g) s += alg.generator_shift(g) * (int(alg.p()) - 1);
  return -s;
}

Weight borel_two_rho(const Algebra& alg) {
  // the root carried by the generators (they lower weights by p^{i-1} alpha)
  Weight root = alg.generator_count() ? alg.generator_shift(0) : Weight{0, 0};
  if (alg.first() != 1) {
    int scale = 1;
    for (int i = 1; i < alg.first(); ++i) scale *= int(alg.p());
    root = Weight{root.a / scale, root.b / scale};
  }
  return root;  // 2 rho_B
}

GradedModule nakayama(const GradedModule& m) { return shift(m, nakayama_shift(m.algebra())); }
GradedModule nakayama_inv(const GradedModule& m) { return shift(m, -nakayama_shift(m.algebra())); }

GradedModule tau(const GradedModule& m) { return nakayama(omega_pow(m, 2)); }
GradedModule tau_inv(const GradedModule& m) { return omega_pow(nakayama_inv(m), -2); }

Ext1 ext1(const GradedModule& v, const GradedModule& w) {
  require_same_algebra(v, w);
  Ext1 out;
  out.pres = presentation(v);
  const auto& f = v.field();
  HomSpace h = hom_space(out.pres.omega, w);
  if (h.dim() == 0) return out;
  ProjectiveCover cw = projective_cover(w);
  HomSpace through = hom_space(out.pres.omega, cw.module);
  gf::RowSpace r(f, w.dim() * out.pres.omega.dim());
  for (const auto& g : through.basis) r.add(flatten(cw.epi.matrix * g));
  gf::RowSpace acc = r;
  for (const auto& x : h.basis)
    if (acc.add(flatten(x))) out.classes.push_back(x);
  out.dim = int(out.classes.size());
  return out;
}

ojson short_exact_to_json(const ShortExact& s) {
  ojson j;
  j["left"] = module_to_json(s.left);
  j["middle"] = module_to_json(s.middle);
  j["right"] = module_to_json(s.right);
  j["inj"] = map_to_json(s.inj);
  j["surj"] = map_to_json(s.surj);
  return j;
}

std::vector<std::string> check_exact(const ShortExact& s) {
  std::vector<std::string> rep;
  if (!is_module_map(s.left, s.middle, s.inj.matrix)) rep.push_back("inj is not a module map");
  if (!is_module_map(s.middle, s.right, s.surj.matrix)) rep.push_back("surj is not a module map");
  if (gf::rank(s.inj.matrix) != s.left.dim()) rep.push_back("inj is not injective");
  if (gf::rank(s.surj.matrix) != s.right.dim()) rep.push_back("surj is not surjective");
  if (!(s.surj.matrix * s.inj.matrix).is_zero()) rep.push_back("surj . inj != 0");
  if (s.middle.dim() != s.left.dim() + s.right.dim()) rep.push_back("dimensions do not add up");
  return rep;
}

namespace {

bool has_section(const std::vector<Matrix>& homs, const Matrix& surj, int n) {
  if (n == 0) return true;
  std::vector<Matrix> comp;
  for (const auto& h : homs) comp.push_back(surj * h);
  return solve_combination(comp, Matrix::identity(surj.field(), n)).has_value();
}

}  // namespace

bool splits(const ShortExact& s) {
  return has_section(hom_space(s.right, s.middle).basis, s.surj.matrix, s.right.dim());
}

bool splits_ungraded(const ShortExact& s) {
  auto h = ungraded_hom_space(s.right.algebra_ptr(), s.right.actions(), s.middle.actions());
  return has_section(h.basis, s.surj.matrix, s.right.dim());
}

ShortExact pushout_extension(const Presentation& pres, const GradedModule& left, const Matrix& theta) {
  const auto& f = left.field();
  const GradedModule& p = pres.cover.module;
  const int nl = left.dim(), np = p.dim();
  GradedModule big = direct_sum(left, p);
  // relations (theta x, -iota x)
  Matrix rel = Matrix::vstack(theta, pres.inclusion.matrix.negated());
  Quotient q = quotient(big, gf::column_space_basis(rel));
  Matrix into_left(f, nl + np, nl);
  for (int i = 0; i < nl; ++i) into_left.set(i, i, 1);
  Matrix onto(f, pres.cover.epi.target.dim(), nl + np);
  onto.set_block(0, nl, pres.cover.epi.matrix);
  Matrix inj = q.projection.matrix * into_left;
  Matrix surj = onto * q.section;
  // normal form: basis sorted by weight, ties by position
  const GradedModule& e = q.module;
  std::vector<int> order(e.dim());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return e.weight(x) < e.weight(y); });
  std::vector<Weight> w;
  for (int i : order) w.push_back(e.weight(i));
  std::vector<Matrix> act;
  for (const auto& g : e.actions()) act.push_back(g.select(order, order));
  GradedModule mid(e.algebra_ptr(), std::move(w), std::move(act));
  ShortExact s{left, mid, pres.cover.epi.target, {}, {}};
  s.inj = ModuleMap{left, mid, inj.select(order, all_rows(nl))};
  s.surj = ModuleMap{mid, s.right, surj.select(all_rows(s.right.dim()), order)};
  return s;
}

Matrix lift_to_cover(const ProjectiveCover& c, const GradedModule& v, const Matrix& phi) {
  HomSpace end = hom_space(c.module, c.module);
  std::vector<Matrix> comp;
  for (const auto& b : end.basis) comp.push_back(c.epi.matrix * b);
  auto x = solve_combination(comp, phi * c.epi.matrix);
  if (!x) throw InvariantViolation("lift_to_cover: endomorphism does not lift (cover not projective?)");
  return combine(end.basis, *x, c.module.dim(), c.module.dim(), v.field());
}

ShortExact almost_split_sequence(const GradedModule& v, AlmostSplitInfo* info) {
  const auto& f = v.field();
  Presentation pres = presentation(v);
  if (pres.omega.dim() == 0 || pres.cover.module.dim() == v.dim())
    throw PreconditionError("almost_split_sequence: module is projective");
  GradedModule left = nakayama(omega(pres.omega));
  const int no = pres.omega.dim(), nl = left.dim();
  HomSpace h = hom_space(pres.omega, left);
  // R: maps omega v -> tau v that extend over the cover
  HomSpace ext = hom_space(pres.cover.module, left);
  gf::RowSpace r(f, nl * no);
  for (const auto& k : ext.basis) r.add(flatten(k * pres.inclusion.matrix));

  // radical endomorphisms of v acting through omega
  std::vector<Matrix> rad = radical_endomorphisms(v);
  gf::Coordinates coords(pres.inclusion.matrix);
  std::vector<Matrix> omega_phi;
  for (const auto& phi : rad) {
    Matrix lifted = lift_to_cover(pres.cover, v, phi);
    Matrix img = lifted * pres.inclusion.matrix;
    Matrix o(f, no, no);
    for (int c = 0; c < no; ++c) {
      auto x = coords.of(img.column(c));
      if (!x) throw InvariantViolation("almost_split_sequence: lifted map leaves omega");
      for (int i = 0; i < no; ++i) o.set(i, c, (*x)[i]);
    }
    omega_phi.push_back(std::move(o));
  }
  const int hd = h.dim();
  // N: x -> class of sum x_i H_i modulo R;  M: also all x . Omega(phi_j) modulo R
  auto reduce = [&](const Matrix& m) { return r.reduce(flatten(m)); };
  const int flat = nl * no;
  Matrix nmat(f, flat, hd);
  Matrix mmat(f, flat * int(omega_phi.size()), hd);
  for (int i = 0; i < hd; ++i) {
    auto col = reduce(h.basis[i]);
    for (int t = 0; t < flat; ++t) nmat.set(t, i, col[t]);
    for (std::size_t j = 0; j < omega_phi.size(); ++j) {
      auto c2 = reduce(h.basis[i] * omega_phi[j]);
      for (int t = 0; t < flat; ++t) mmat.set(int(j) * flat + t, i, c2[t]);
    }
  }
  Matrix s_basis = gf::kernel_basis(mmat);
  const int ext_dim = gf::rank(nmat);  // dim H - dim (H cap R)
  const int r_in_h = hd - ext_dim;
  const int soc = s_basis.cols() - r_in_h;
  if (info) {
    info->socle_dim = soc;
    info->ext_dim = ext_dim;
  }
  if (soc != 1)
    throw InvariantViolation("almost_split_sequence: socle of Ext(v, tau v) has dimension " +
                             std::to_string(soc) + " (expected 1)");
  Matrix theta;
  for (int c = 0; c < s_basis.cols(); ++c) {
    gf::Vector x = s_basis.column(c);
    if (gf::is_zero(nmat * x)) continue;
    theta = combine(h.basis, x, nl, no, f);
    break;
  }
  ShortExact s = pushout_extension(pres, left, theta);
  auto bad = check_exact(s);
  if (!bad.empty()) throw InvariantViolation("almost_split_sequence: " + bad.front());
  if (splits(s)) throw InvariantViolation("almost_split_sequence: constructed sequence splits");
  return s;
}

std::vector<int> betti(const GradedModule& m, int n_terms) {
  std::vector<int> out;
  GradedModule x = m;
  for (int i = 0; i < n_terms; ++i) {
    if (x.dim() == 0) {
      out.push_back(0);
      continue;
    }
    Presentation p = presentation(x);
    out.push_back(p.cover.module.dim());
    x = p.omega;
  }
  return out;
}

std::optional<int> complexity_estimate(const GradedModule& m, int window) {
  if (window < 4) throw UsageError("complexity_estimate: window must be >= 4");
  auto b = betti(m, window);
  if (std::find(b.begin(), b.end(), 0) != b.end()) return 0;
  const int h = window / 2;
  auto max_of = [](auto first, auto last) { return *std::max_element(first, last); };
  if (max_of(b.begin() + h, b.end()) <= max_of(b.begin(), b.begin() + h)) return 1;
  std::vector<int> d;
  for (int i = 0; i + 1 < window; ++i) d.push_back(std::abs(b[i + 1] - b[i]));
  const int hd = int(d.size()) / 2;
  if (max_of(d.begin() + hd, d.end()) <= max_of(d.begin(), d.begin() + hd)) return 2;
  return std::nullopt;
}

RankProbe rank_probe(const GradedModule& m, int a, int b, int c) {
  if (m.algebra().kind() != AlgebraKind::Sl2R1) throw UsageError("rank_probe needs an sl2r1 module");
  const auto& f = m.field();
  // [[c, a], [b, -c]] nilpotent iff c^2 + ab = 0
  if (f.reduce((long long)c * c + (long long)a * b) != 0 || (f.reduce(a) == 0 && f.reduce(b) == 0 && f.reduce(c) == 0))
    throw PreconditionError("rank_probe: element is not a nonzero nilpotent");
  Matrix x = m.action(0).scaled(f.reduce(a));
  x.add_scaled(m.action(1), f.reduce(b));
  x.add_scaled(m.action(2), f.reduce(c));
  RankProbe out;
  out.rank = gf::rank(x);
  const int p = int(f.p());
  out.free_rank = m.dim() % p == 0 ? m.dim() / p * (p - 1) : -1;
  out.free = out.free_rank >= 0 && out.rank == out.free_rank;
  return out;
}

std::vector<int> ungraded_betti(const GradedModule& m, int n_terms) {
  const Algebra& alg = m.algebra();
  const auto& f = m.field();
  auto hom = [&](const GradedModule& q, const GradedModule& x) {
    return ungraded_hom_space(x.algebra_ptr(), q.actions(), x.actions());
  };
  std::vector<int> out;
  GradedModule x = forget(m);
  for (int step = 0; step < n_terms; ++step) {
    if (x.dim() == 0) {
      out.push_back(0);
      continue;
    }
    Quotient t = top(x);
    std::vector<Candidate> cands;
    const int nt = t.module.dim();
    if (alg.kind() == AlgebraKind::Sl2R1) {
      for (int a = 0; a < int(f.p()); ++a) {
        Matrix hs = t.module.action(2) - Matrix::identity(f, nt).scaled(Residue(a));
        int k = kernel_dim(Matrix::vstack(t.module.action(0), hs));
        if (k) cands.push_back({forget(projective_indec(m.algebra_ptr(), a)), {a, {0, 0}}, k});
      }
    } else {
      cands.push_back({forget(borel_projective(m.algebra_ptr(), {0, 0})), {0, {0, 0}}, nt});
    }
    ProjectiveCover c = cover_impl(x, t, cands, hom);
    out.push_back(c.module.dim());
    x = kernel(c.epi).module;
  }
  return out;
}

}  // namespace grq
