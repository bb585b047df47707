#include "grq/constructions/constructions.hpp"

#include <cctype>
#include <cstdio>
#include <mutex>

#include "grq/error.hpp"
#include "grq/grmod/hom.hpp"
#include "grq/grmod/json.hpp"
#include "grq/grmod/ops.hpp"

namespace grq {

namespace {

using gf::Matrix;
using gf::Residue;

void require_sl2(const AlgebraPtr& alg, const char* what) {
  if (!alg || alg->kind() != AlgebraKind::Sl2R1)
    throw UsageError(std::string(what) + " needs the sl2r1 algebra");
}

void require_borel(const AlgebraPtr& alg, const char* what) {
  if (!alg || alg->kind() != AlgebraKind::Borel)
    throw UsageError(std::string(what) + " needs a borel algebra");
}

// U0 acting on itself, weights shifted so that 1 sits at `base`. Not a G1T
// module (H is not diagonal here); only used as an ambient space.
GradedModule ambient_regular(const AlgebraPtr& alg, Weight base) {
  std::vector<Weight> w;
  for (int i = 0; i < alg->dimension(); ++i) w.push_back(base + alg->monomial_shift(i));
  return GradedModule(alg, std::move(w), alg->left_regular());
}

// prod_{t != c} (h - t)/(c - t), as an algebra element
Algebra::Element h_eigen_idempotent(const Algebra& alg, int c) {
  const auto& f = alg.field();
  const int p = int(alg.p());
  std::vector<Residue> poly{1};  // coefficients in h, low degree first
  for (int t = 0; t < p; ++t) {
    if (t == c) continue;
    Residue scale = f.inv(f.reduce(c - t));
    std::vector<Residue> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      Residue q = f.mul(poly[k], scale);
      next[k + 1] = f.add(next[k + 1], q);
      next[k] = f.sub(next[k], f.mul(q, f.reduce(t)));
    }
    poly = std::move(next);
  }
  Algebra::Element e(alg.dimension(), 0);
  for (int j = 0; j < int(poly.size()); ++j) {
    if (!poly[j]) continue;
    int jj = j >= p ? (j - 1) % (p - 1) + 1 : j;  // h^p = h
    int idx = alg.monomial_index({0, jj, 0});
    e[idx] = f.add(e[idx], poly[j]);
  }
  return e;
}

gf::Vector column_of(const GradedModule& m, int i) {
  gf::Vector v(m.dim(), 0);
  v[i] = 1;
  return v;
}

struct QCache {
  std::mutex mu;
  std::map<std::pair<unsigned, int>, std::shared_ptr<GradedModule>> table;
};
QCache& q_cache() {
  static QCache c;
  return c;
}

GradedModule build_projective_indec(const AlgebraPtr& alg, int a) {
  const auto& f = alg->field();
  const Weight base{a, 0};
  GradedModule amb = ambient_regular(alg, base);
  Algebra::Element ea = h_eigen_idempotent(*alg, a);
  Submodule pa = submodule_span(amb, {ea});
  // the summand of U0 e_a whose top is L(a) at weight (a,0)
  const GradedModule& target_top = alg->simple(a);
  auto pieces = split_indecomposables(pa.module);
  const Summand* chosen = nullptr;
  for (const auto& s : pieces) {
    Quotient t = top(s.module);
    if (t.module.dim() != a + 1) continue;
    if (is_isomorphic(t.module, target_top)) {
      if (chosen) throw InvariantViolation("projective_indec: two summands with top L(a)");
      chosen = &s;
    }
  }
  if (!chosen) throw InvariantViolation("projective_indec: no summand of U0 e_a has top L(a)");
  // the degree-0 idempotent epsilon = (iota pi)(e_a), as an element of U0
  Matrix proj = chosen->inclusion.matrix * chosen->projection.matrix;
  gf::Coordinates coords(pa.inclusion.matrix);
  auto ca = coords.of(ea);
  if (!ca) throw InvariantViolation("projective_indec: generator outside its own span");
  Algebra::Element eps = pa.inclusion.matrix * (proj * *ca);
  for (int i = 0; i < alg->dimension(); ++i)
    if (eps[i] && !(alg->monomial_shift(i) == Weight{0, 0}))
      throw InvariantViolation("projective_indec: idempotent is not homogeneous of degree 0");
  // polish: e <- 3e^2 - 2e^3 (fixed on idempotents, converges on near-idempotents)
  for (int it = 0; it < 16; ++it) {
    Algebra::Element e2 = alg->multiply(eps, eps);
    if (e2 == eps) break;
    Algebra::Element e3 = alg->multiply(e2, eps);
    for (int i = 0; i < alg->dimension(); ++i)
      eps[i] = f.sub(f.mul(3, e2[i]), f.mul(2, e3[i]));
    if (it == 15) throw InvariantViolation("projective_indec: idempotent lifting did not converge");
  }
  Submodule q = submodule_span(amb, {eps});
  require_valid(q.module, "projective_indec");
  return q.module;
}

int parse_int(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError(pos, "expected an integer");
  long long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos++] - '0');
    if (v > 1000000) throw ParseError(start, "integer out of range");
  }
  return int(neg ? -v : v);
}

void expect(const std::string& s, std::size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c) throw ParseError(pos, std::string("expected '") + c + "'");
  ++pos;
}

Weight parse_pair(const std::string& s, std::size_t& pos) {
  expect(s, pos, '(');
  int a = parse_int(s, pos);
  expect(s, pos, ',');
  int b = parse_int(s, pos);
  expect(s, pos, ')');
  return {a, b};
}

std::string pair_str(Weight w) { return w.str(); }

}  // namespace

GradedModule weyl_hat(const AlgebraPtr& alg, int d) {
  require_sl2(alg, "weyl_hat");
  if (d < 0) throw PreconditionError("weyl_hat: d must be >= 0");
  const auto& f = alg->field();
  Matrix e(f, d + 1, d + 1), fm(f, d + 1, d + 1), h(f, d + 1, d + 1);
  std::vector<Weight> w;
  for (int i = 0; i <= d; ++i) {
    if (i < d) e.set_int(i + 1, i, i + 1);
    if (i > 0) fm.set_int(i - 1, i, d - i + 1);
    h.set_int(i, i, 2 * i - d);
    w.push_back({i, d - i});
  }
  return GradedModule(alg, std::move(w), {e, fm, h});
}

GradedModule w_hat(const AlgebraPtr& alg, int d) {
  require_sl2(alg, "w_hat");
  const int p = int(alg->p());
  const int a = d >= 0 ? d % p : -1;
  if (d < p || a > p - 2)
    throw PreconditionError("W(" + std::to_string(d) + "): need d = sp + a with s >= 1 and 0 <= a <= p-2");
  GradedModule v = weyl_hat(alg, d);
  std::vector<gf::Vector> gens;
  for (int i = a + 1; i <= d; ++i) gens.push_back(column_of(v, i));
  Submodule s = submodule_span(v, gens);
  // closure check: the span must be exactly v_{a+1}..v_d
  if (s.module.dim() != d - a)
    throw InvariantViolation("W(" + std::to_string(d) + "): v_{a+1}..v_d is not closed");
  // rebuild on the natural basis order v_{a+1}..v_d
  std::vector<int> idx;
  for (int i = a + 1; i <= d; ++i) idx.push_back(i);
  std::vector<Weight> w;
  for (int i : idx) w.push_back(v.weight(i));
  std::vector<Matrix> act;
  for (const auto& g : v.actions()) act.push_back(g.select(idx, idx));
  return GradedModule(alg, std::move(w), std::move(act));
}

GradedModule w_hat_twisted(const AlgebraPtr& alg, int d) { return weyl_twist(w_hat(alg, d)); }

GradedModule simple_hat(const AlgebraPtr& alg, int r) {
  require_sl2(alg, "simple_hat");
  if (r < 0 || r >= int(alg->p()))
    throw PreconditionError("L(" + std::to_string(r) + "): need 0 <= r <= p-1");
  return weyl_hat(alg, r);
}

GradedModule induced_from_torus(const AlgebraPtr& alg, int c) {
  require_sl2(alg, "induced_from_torus");
  if (c < 0 || c >= int(alg->p())) throw PreconditionError("induced_from_torus: c out of range");
  GradedModule amb = ambient_regular(alg, {c, 0});
  Submodule s = submodule_span(amb, {h_eigen_idempotent(*alg, c)});
  return s.module;
}

GradedModule regular_graded(const AlgebraPtr& alg) {
  if (alg->kind() == AlgebraKind::Borel) return borel_projective(alg, {0, 0});
  std::vector<GradedModule> parts;
  for (int c = 0; c < int(alg->p()); ++c) parts.push_back(induced_from_torus(alg, c));
  return direct_sum(parts);
}

const GradedModule& projective_indec(const AlgebraPtr& alg, int a) {
  require_sl2(alg, "projective_indec");
  if (a < 0 || a >= int(alg->p())) throw PreconditionError("Q(" + std::to_string(a) + "): need 0 <= a <= p-1");
  auto& cache = q_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.table.find({alg->p(), a});
    if (it != cache.table.end()) return *it->second;
  }
  auto built = std::make_shared<GradedModule>(build_projective_indec(alg, a));
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.table[{alg->p(), a}];
  if (!slot) slot = built;
  return *slot;
}

GradedModule borel_projective(const AlgebraPtr& alg, Weight lambda) {
  require_borel(alg, "borel_projective");
  std::vector<Weight> w;
  for (int i = 0; i < alg->dimension(); ++i) w.push_back(lambda + alg->monomial_shift(i));
  return GradedModule(alg, std::move(w), alg->left_regular());
}

GradedModule borel_trivial(const AlgebraPtr& alg, Weight lambda) {
  require_borel(alg, "borel_trivial");
  return GradedModule(alg, {lambda}, std::vector<Matrix>(alg->generator_count(), Matrix(alg->field(), 1, 1)));
}

GradedModule outer_tensor(const GradedModule& m, const GradedModule& n) {
  const Algebra &am = m.algebra(), &an = n.algebra();
  if (am.kind() != AlgebraKind::Borel || an.kind() != AlgebraKind::Borel)
    throw UsageError("outer_tensor needs borel modules");
  if (am.p() != an.p()) throw UsageError("outer_tensor: different primes");
  if (an.first() != am.first() + am.r())
    throw UsageError("outer_tensor: variable ranges X" + std::to_string(am.first()) + ".. and X" +
                     std::to_string(an.first()) + ".. are not consecutive");
  AlgebraPtr alg = Algebra::borel(am.p(), am.r() + an.r(), am.first());
  const auto& f = alg->field();
  const int dm = m.dim(), dn = n.dim(), d = dm * dn;
  std::vector<Weight> w;
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dn; ++j) w.push_back(m.weight(i) + n.weight(j));
  std::vector<Matrix> act;
  for (int g = 0; g < am.r(); ++g) {
    Matrix x(f, d, d);
    const Matrix& a = m.action(g);
    for (int i = 0; i < dm; ++i)
      for (int k = 0; k < dm; ++k)
        if (Residue c = a(i, k))
          for (int j = 0; j < dn; ++j) x.set(i * dn + j, k * dn + j, c);
    act.push_back(std::move(x));
  }
  for (int g = 0; g < an.r(); ++g) {
    Matrix x(f, d, d);
    const Matrix& b = n.action(g);
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j)
        for (int l = 0; l < dn; ++l)
          if (Residue c = b(j, l)) x.set(i * dn + j, i * dn + l, c);
    act.push_back(std::move(x));
  }
  return GradedModule(alg, std::move(w), std::move(act));
}

std::map<Weight, int> character(const GradedModule& m) {
  std::map<Weight, int> out;
  for (Weight w : m.weights()) ++out[w];
  return out;
}

std::string FamilyLabel::str() const {
  std::string s;
  switch (family) {
    case Family::V: s = "V(" + std::to_string(d) + ")"; break;
    case Family::Vo: s = "Vo(" + std::to_string(d) + ")"; break;
    case Family::W: s = "W(" + std::to_string(d) + ")"; break;
    case Family::Wwo: s = "W(" + std::to_string(d) + ")w0"; break;
    case Family::L: s = "L(" + std::to_string(d) + ")"; break;
    case Family::Q: s = "Q(" + std::to_string(d) + ")"; break;
    case Family::Z:
    case Family::K: {
      s = (family == Family::Z ? "Z" : "k") + pair_str(lambda + shift) + "@r=" + std::to_string(r);
      if (first != 1) s += ",first=" + std::to_string(first);
      return s;
    }
  }
  if (shift != Weight{0, 0}) s += "+" + pair_str(shift);
  return s;
}

std::optional<int> FamilyLabel::quasi_length(unsigned p) const {
  if (family != Family::W && family != Family::Wwo) return std::nullopt;
  const int ip = int(p);
  if (d < ip || d % ip > ip - 2) return std::nullopt;
  return d / ip;
}

FamilyLabel parse_label(const std::string& text) {
  std::size_t pos = 0;
  FamilyLabel l;
  auto starts = [&](const char* w) { return text.compare(pos, std::char_traits<char>::length(w), w) == 0; };
  if (text.empty()) throw ParseError(0, "empty label");
  if (starts("Z") || starts("k")) {
    l.family = text[pos] == 'Z' ? Family::Z : Family::K;
    ++pos;
    l.lambda = parse_pair(text, pos);
    if (pos < text.size() && text[pos] == '+') {
      ++pos;
      l.lambda = l.lambda + parse_pair(text, pos);
    }
    if (pos < text.size()) {
      if (!starts("@r=")) throw ParseError(pos, "expected '@r='");
      pos += 3;
      l.r = parse_int(text, pos);
      if (pos < text.size()) {
        if (!starts(",first=")) throw ParseError(pos, "expected ',first='");
        pos += 7;
        l.first = parse_int(text, pos);
      }
    }
    if (pos != text.size()) throw ParseError(pos, "trailing characters");
    if (l.r < 1 || l.first < 1) throw ParseError(0, "r and first must be positive");
    return l;
  }
  if (starts("Vo")) {
    l.family = Family::Vo;
    pos += 2;
  } else if (starts("Wwo")) {
    l.family = Family::Wwo;
    pos += 3;
  } else if (starts("V")) {
    l.family = Family::V;
    ++pos;
  } else if (starts("W")) {
    l.family = Family::W;
    ++pos;
  } else if (starts("L")) {
    l.family = Family::L;
    ++pos;
  } else if (starts("Q")) {
    l.family = Family::Q;
    ++pos;
  } else {
    throw ParseError(0, "unknown family (expected V, Vo, W, Wwo, L, Q, Z or k)");
  }
  expect(text, pos, '(');
  l.d = parse_int(text, pos);
  expect(text, pos, ')');
  if (l.family == Family::W && starts("w0")) {
    l.family = Family::Wwo;
    pos += 2;
  }
  if (pos < text.size()) {
    expect(text, pos, '+');
    l.shift = parse_pair(text, pos);
  }
  if (pos != text.size()) throw ParseError(pos, "trailing characters");
  return l;
}

AlgebraPtr label_algebra(const FamilyLabel& l, unsigned p) {
  if (l.family == Family::Z || l.family == Family::K) return Algebra::borel(p, l.r, l.first);
  return Algebra::sl2r1(p);
}

GradedModule build(const FamilyLabel& l, unsigned p) {
  if (!gf::is_supported_prime(p)) throw UsageError("unsupported prime " + std::to_string(p));
  AlgebraPtr alg = label_algebra(l, p);
  GradedModule m;
  switch (l.family) {
    case Family::V: m = weyl_hat(alg, l.d); break;
    case Family::Vo: m = contravariant_dual(weyl_hat(alg, l.d)); break;
    case Family::W: m = w_hat(alg, l.d); break;
    case Family::Wwo: m = w_hat_twisted(alg, l.d); break;
    case Family::L: m = simple_hat(alg, l.d); break;
    case Family::Q: m = projective_indec(alg, l.d); break;
    case Family::Z: return borel_projective(alg, l.lambda + l.shift);
    case Family::K: return borel_trivial(alg, l.lambda + l.shift);
  }
  if (!alg->is_admissible_shift(l.shift))
    throw PreconditionError("shift " + l.shift.str() + " is not admissible: need a = b mod p");
  return shift(m, l.shift);
}

std::string opaque_label(const GradedModule& m) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : module_to_string(m)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "#%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Identification identify(const GradedModule& m, std::uint64_t seed) {
  Identification out;
  const Algebra& alg = m.algebra();
  const unsigned p = alg.p();
  const int ip = int(p);
  const int n = m.dim();
  auto fallback = [&] {
    out.label = opaque_label(m);
    return out;
  };
  if (n == 0) return fallback();
  auto sorted = m.sorted_weights();
  const int degree = sorted.front().degree();
  for (Weight w : sorted)
    if (w.degree() != degree) return fallback();

  std::vector<FamilyLabel> cands;
  if (alg.kind() == AlgebraKind::Borel) {
    FamilyLabel l;
    l.r = alg.r();
    l.first = alg.first();
    l.lambda = sorted.back();
    int full = 1;
    for (int i = 0; i < alg.r(); ++i) full *= ip;
    if (n == 1) l.family = Family::K, cands.push_back(l);
    if (n == full) l.family = Family::Z, cands.push_back(l);
  } else {
    auto add = [&](Family fam, int d) {
      FamilyLabel l;
      l.family = fam;
      l.d = d;
      cands.push_back(l);
    };
    if (n <= ip) add(Family::L, n - 1);
    if (n == ip) add(Family::Q, ip - 1);
    if (n == 2 * ip)
      for (int a = 0; a <= ip - 2; ++a) add(Family::Q, a);
    if (n - 1 >= ip) {
      add(Family::V, n - 1);
      add(Family::Vo, n - 1);
    }
    if (n % ip == 0)
      for (int a = 0; a <= ip - 2; ++a) {
        add(Family::W, n + a);
        add(Family::Wwo, n + a);
      }
  }
  for (FamilyLabel l : cands) {
    GradedModule base;
    try {
      base = build(l, p);
    } catch (const UsageError&) {
      continue;
    }
    if (alg.kind() == AlgebraKind::Sl2R1) {
      l.shift = sorted.front() - base.sorted_weights().front();
      if (!alg.is_admissible_shift(l.shift)) continue;
      base = shift(base, l.shift);
    }
    if (base.sorted_weights() != sorted) continue;
    if (!(base.algebra() == alg)) continue;
    if (is_isomorphic(base, m, seed)) {
      out.label = l.str();
      out.family = l;
      return out;
    }
  }
  return fallback();
}

}  // namespace grq
