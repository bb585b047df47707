#include "grq/grmod/algebra.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "grq/error.hpp"
#include "grq/grmod/module.hpp"

namespace grq {

using gf::Residue;

namespace {

std::mutex g_intern_mutex;
std::map<std::tuple<int, unsigned, int, int>, AlgebraPtr>& intern_table() {
  static std::map<std::tuple<int, unsigned, int, int>, AlgebraPtr> table;
  return table;
}

// A * B, with a cheap path when A is diagonal (H on weight bases)
gf::Matrix mul(const gf::Matrix& a, const gf::Matrix& b, bool a_diag) {
  if (!a_diag) return a * b;
  gf::Matrix out = b;
  const auto& f = b.field();
  for (int i = 0; i < out.rows(); ++i) {
    Residue d = a(i, i);
    Residue* row = out.row(i);
    for (int j = 0; j < out.cols(); ++j) row[j] = f.mul(row[j], d);
  }
  return out;
}

// weyl-module matrices for d <= p-1, weights (i, d-i)
std::vector<gf::Matrix> weyl_matrices(const gf::PrimeField& f, int d) {
  gf::Matrix e(f, d + 1, d + 1), fm(f, d + 1, d + 1), h(f, d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    if (i < d) e.set_int(i + 1, i, i + 1);
    if (i > 0) fm.set_int(i - 1, i, d - i + 1);
    h.set_int(i, i, 2 * i - d);
  }
  return {e, fm, h};
}

}  // namespace

using gf::Residue;

AlgebraPtr Algebra::sl2r1(unsigned p) {
  std::lock_guard<std::mutex> lock(g_intern_mutex);
  auto& slot = intern_table()[{0, p, 1, 1}];
  if (!slot) slot.reset(new Algebra(AlgebraKind::Sl2R1, p, 1, 1));
  return slot;
}

AlgebraPtr Algebra::borel(unsigned p, int r, int first) {
  if (r < 1 || first < 1) throw UsageError("borel algebra needs r >= 1 and first >= 1");
  if (r + first - 1 > 6) throw UsageError("borel algebra: too many variables");
  std::lock_guard<std::mutex> lock(g_intern_mutex);
  auto& slot = intern_table()[{1, p, r, first}];
  if (!slot) slot.reset(new Algebra(AlgebraKind::Borel, p, r, first));
  return slot;
}

Algebra::Algebra(AlgebraKind kind, unsigned p, int r, int first)
    : kind_(kind), field_(p), r_(r), first_(first) {
  const int ip = int(p);
  if (kind == AlgebraKind::Sl2R1) {
    names_ = {"E", "F", "H"};
    shifts_ = {kAlpha, -kAlpha, Weight{0, 0}};
    word_ = {1, 2, 0};  // f^i h^j e^k
    radix_ = {ip * ip, ip, 1};
    for (int i = 0; i < ip; ++i)
      for (int j = 0; j < ip; ++j)
        for (int k = 0; k < ip; ++k) {
          monomials_.push_back({i, j, k});
          mono_shift_.push_back(kAlpha * (k - i));
        }
  } else {
    int scale = 1;
    for (int i = 1; i < first; ++i) scale *= ip;
    for (int g = 0; g < r; ++g) {
      names_.push_back("X" + std::to_string(first + g));
      shifts_.push_back(-kAlpha * scale);
      word_.push_back(g);
      scale *= ip;
    }
    radix_.assign(r, 1);
    for (int g = r - 2; g >= 0; --g) radix_[g] = radix_[g + 1] * ip;
    int total = radix_[0] * ip;
    for (int idx = 0; idx < total; ++idx) {
      std::vector<int> c(r);
      Weight w{0, 0};
      for (int g = 0; g < r; ++g) {
        c[g] = (idx / radix_[g]) % ip;
        w += shifts_[g] * c[g];
      }
      monomials_.push_back(c);
      mono_shift_.push_back(w);
    }
  }
}

std::string Algebra::describe() const {
  if (kind_ == AlgebraKind::Sl2R1) return "sl2r1(p=" + std::to_string(p()) + ")";
  std::string s = "borel(p=" + std::to_string(p()) + ",r=" + std::to_string(r_);
  if (first_ != 1) s += ",first=" + std::to_string(first_);
  return s + ")";
}

int Algebra::generator_index(std::string_view name) const {
  for (int g = 0; g < generator_count(); ++g)
    if (names_[g] == name) return g;
  return -1;
}

bool Algebra::is_admissible_shift(Weight w) const {
  if (kind_ == AlgebraKind::Borel) return true;
  return field_.reduce(w.a - w.b) == 0;
}

int Algebra::monomial_index(const std::vector<int>& exps) const {
  if (exps.size() != word_.size()) throw DimensionError("monomial exponent length");
  int idx = 0;
  for (std::size_t t = 0; t < exps.size(); ++t) {
    if (exps[t] < 0 || exps[t] >= int(p())) throw DimensionError("monomial exponent range");
    idx += exps[t] * radix_[t];
  }
  return idx;
}

Algebra::Element Algebra::unit() const { return basis_element(0); }

Algebra::Element Algebra::basis_element(int idx) const {
  Element e(dimension(), 0);
  e[idx] = 1;
  return e;
}

const std::vector<gf::Matrix>& Algebra::left_regular() const {
  std::call_once(regular_once_, [this] { build_regular(); });
  return left_;
}

void Algebra::build_regular() const {
  const int n = dimension();
  const int ip = int(p());
  std::vector<gf::Matrix> left(generator_count(), gf::Matrix(field_, n, n));
  if (kind_ == AlgebraKind::Borel) {
    for (int idx = 0; idx < n; ++idx)
      for (int g = 0; g < r_; ++g) {
        if (monomials_[idx][g] + 1 >= ip) continue;
        left[g].set(idx + radix_[g], idx, 1);
      }
    left_ = std::move(left);
    return;
  }
  // binomials mod p
  std::vector<std::vector<long long>> binom(ip, std::vector<long long>(ip, 0));
  for (int a = 0; a < ip; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = (binom[a - 1][b - 1] + binom[a - 1][b]) % ip;
  }
  auto hred = [ip](int j) { return j == ip ? 1 : j; };  // h^p = h
  auto id = [&](int i, int j, int k) { return (i * ip + j) * ip + k; };
  gf::Matrix& le = left[0];
  gf::Matrix& lf = left[1];
  gf::Matrix& lh = left[2];
  auto bump = [&](gf::Matrix& m, int row, int col, long long v) {
    m.set(row, col, field_.add(m(row, col), field_.reduce(v)));
  };
  for (int i = 0; i < ip; ++i)
    for (int j = 0; j < ip; ++j)
      for (int k = 0; k < ip; ++k) {
        const int col = id(i, j, k);
        // f . f^i h^j e^k
        if (i + 1 < ip) bump(lf, id(i + 1, j, k), col, 1);
        // h . f^i h^j e^k = f^i (h - 2i) h^j e^k
        bump(lh, id(i, hred(j + 1), k), col, 1);
        bump(lh, col, col, -2LL * i);
        // e . f^i h^j e^k = f^i (h-2)^j e^{k+1} + i f^{i-1} (h - i + 1) h^j e^k
        if (k + 1 < ip) {
          long long pw = 1;  // (-2)^{j-t}, built from t = j downwards
          for (int t = j; t >= 0; --t) {
            bump(le, id(i, t, k + 1), col, binom[j][t] * pw);
            pw = pw * -2 % ip;
          }
        }
        if (i >= 1) {
          bump(le, id(i - 1, hred(j + 1), k), col, i);
          bump(le, id(i - 1, j, k), col, -1LL * i * (i - 1));
        }
      }
  left_ = std::move(left);
}

Algebra::Element Algebra::multiply(const Element& x, const Element& y) const {
  const auto& left = left_regular();
  Element out(dimension(), 0);
  for (int idx = 0; idx < dimension(); ++idx) {
    if (!x[idx]) continue;
    Element v = y;
    // rightmost word letter acts first
    for (int t = int(word_.size()) - 1; t >= 0; --t)
      for (int e = 0; e < monomials_[idx][t]; ++e) v = left[word_[t]] * v;
    for (int i = 0; i < dimension(); ++i) out[i] = field_.add(out[i], field_.mul(x[idx], v[i]));
  }
  return out;
}

gf::Matrix Algebra::evaluate_monomial(int idx, const std::vector<gf::Matrix>& action) const {
  const int n = action.empty() ? 0 : action[0].rows();
  gf::Matrix out = gf::Matrix::identity(field_, n);
  for (std::size_t t = 0; t < word_.size(); ++t) {
    const gf::Matrix& g = action[word_[t]];
    for (int e = 0; e < monomials_[idx][t]; ++e) out = out * g;
  }
  return out;
}

gf::Matrix Algebra::evaluate(const Element& x, const std::vector<gf::Matrix>& action) const {
  if (int(x.size()) != dimension()) throw DimensionError("algebra element length");
  if (int(action.size()) != generator_count()) throw DimensionError("action generator count");
  const int n = action.empty() ? 0 : action[0].rows();
  const int slots = int(word_.size());
  const int ip = int(p());
  // powers of each slot's generator
  std::vector<std::vector<gf::Matrix>> pw(slots);
  std::vector<bool> diag(slots);
  for (int t = 0; t < slots; ++t) {
    const gf::Matrix& g = action[word_[t]];
    diag[t] = g.is_diagonal();
    pw[t].push_back(gf::Matrix::identity(field_, n));
    for (int e = 1; e < ip; ++e) pw[t].push_back(mul(pw[t].back(), g, diag[t]));
  }
  auto any_nonzero = [&](int base, int len) {
    for (int i = base; i < base + len; ++i)
      if (x[i]) return true;
    return false;
  };
  // sum over the subtree of monomials sharing the exponents of slots < t
  auto term = [&](auto&& self, int t, int base) -> std::optional<gf::Matrix> {
    if (!any_nonzero(base, radix_[t] * ip)) return std::nullopt;
    gf::Matrix acc(field_, n, n);
    if (t == slots - 1) {
      for (int e = 0; e < ip; ++e)
        if (Residue c = x[base + e * radix_[t]]) acc.add_scaled(pw[t][e], c);
      return acc;
    }
    for (int e = 0; e < ip; ++e) {
      auto sub = self(self, t + 1, base + e * radix_[t]);
      if (sub) acc.add_scaled(mul(pw[t][e], *sub, diag[t]), 1);
    }
    return acc;
  };
  auto r = term(term, 0, 0);
  return r ? *r : gf::Matrix(field_, n, n);
}

int Algebra::simple_count() const { return kind_ == AlgebraKind::Sl2R1 ? int(p()) : 1; }

const GradedModule& Algebra::simple(int s) const {
  std::call_once(simple_once_, [this] {
    // the interned pointer for this algebra
    AlgebraPtr self = kind_ == AlgebraKind::Sl2R1 ? Algebra::sl2r1(p()) : Algebra::borel(p(), r_, first_);
    if (kind_ == AlgebraKind::Sl2R1) {
      for (int a = 0; a < int(p()); ++a) {
        std::vector<Weight> w;
        for (int i = 0; i <= a; ++i) w.push_back({i, a - i});
        simples_.push_back(std::make_shared<GradedModule>(self, w, weyl_matrices(field_, a)));
      }
    } else {
      simples_.push_back(std::make_shared<GradedModule>(
          self, std::vector<Weight>{{0, 0}}, std::vector<gf::Matrix>(r_, gf::Matrix(field_, 1, 1))));
    }
  });
  if (s < 0 || s >= simple_count()) throw DimensionError("simple index out of range");
  return *simples_[s];
}

const std::vector<Algebra::Element>& Algebra::radical_generators() const {
  std::call_once(radical_once_, [this] { build_radical(); });
  return radical_gens_;
}

int Algebra::radical_dimension() const {
  radical_generators();
  return radical_dim_;
}

void Algebra::build_radical() const {
  const int n = dimension();
  // J is the joint annihilator of the simples; the equations split by degree
  std::map<Weight, std::vector<int>> classes;
  for (int idx = 0; idx < n; ++idx) classes[mono_shift_[idx]].push_back(idx);
  int eq_rows = 0;
  for (int s = 0; s < simple_count(); ++s) eq_rows += simple(s).dim() * simple(s).dim();

  std::vector<Element> jbasis;
  for (const auto& [shift, idxs] : classes) {
    gf::Matrix sys(field_, eq_rows, int(idxs.size()));
    for (int c = 0; c < int(idxs.size()); ++c) {
      int row = 0;
      for (int s = 0; s < simple_count(); ++s) {
        gf::Matrix m = evaluate_monomial(idxs[c], simple(s).actions());
        for (Residue v : m.entries()) sys.set(row++, c, v);
      }
    }
    gf::Matrix ker = gf::kernel_basis(sys);
    for (int c = 0; c < ker.cols(); ++c) {
      Element x(n, 0);
      for (int t = 0; t < int(idxs.size()); ++t) x[idxs[t]] = ker(t, c);
      jbasis.push_back(std::move(x));
    }
  }
  radical_dim_ = int(jbasis.size());

  const auto& left = left_regular();
  gf::RowSpace ideal(field_, n);
  for (const Element& x : jbasis) {
    if (ideal.contains(x)) continue;
    radical_gens_.push_back(x);
    std::deque<Element> queue{x};
    while (!queue.empty()) {
      Element v = std::move(queue.front());
      queue.pop_front();
      if (!ideal.add(v)) continue;
      for (const auto& l : left) queue.push_back(l * v);
    }
  }
  if (ideal.rank() != radical_dim_)
    throw InvariantViolation("radical is not a left ideal for " + describe());
}

}  // namespace grq
