#include "grq/arquiver/arquiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "grq/error.hpp"
#include "grq/grmod/hom.hpp"
#include "grq/grmod/ops.hpp"
#include "grq/polynomial/polynomial.hpp"

namespace grq {

namespace {

bool same_character(const GradedModule& x, const GradedModule& y) {
  return x.dim() == y.dim() && x.sorted_weights() == y.sorted_weights();
}

bool is_simple(const GradedModule& m) { return m.dim() > 0 && socle(m).module.dim() == m.dim(); }

// nonprojective indecomposable summands, grouped by vertex
std::map<int, int> summand_vertices(ARQuiver& q, const GradedModule& m, bool skip_projective) {
  std::map<int, int> out;
  if (m.dim() == 0) return out;
  for (const auto& s : split_indecomposables(m)) {
    if (skip_projective && is_projective(s.module)) continue;
    ++out[q.add(s.module)];
  }
  return out;
}

// almost split sequence ending at v in mod G1T; returns the number of
// nonprojective middle summands
int attach_sequence(ARQuiver& q, int v) {
  GradedModule mv = q.vertices[v].module;
  ShortExact s = almost_split_sequence(mv);
  int t = q.add(s.left);
  q.tau[v] = t;
  auto parts = summand_vertices(q, s.middle, true);
  int n = 0;
  for (auto [c, k] : parts) {
    q.set_arrow(c, v, k);
    q.set_arrow(t, c, k);
    n += k;
  }
  return n;
}

std::vector<std::vector<int>> undirected(const ARQuiver& q) {
  std::vector<std::vector<int>> adj(q.size());
  for (const auto& a : q.arrows) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  return adj;
}

}  // namespace

// ---- ARQuiver

std::optional<int> ARQuiver::find(const GradedModule& m) const {
  for (int i = 0; i < size(); ++i)
    if (same_character(vertices[i].module, m) && is_isomorphic(vertices[i].module, m)) return i;
  return std::nullopt;
}

std::optional<int> ARQuiver::find_label(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (vertices[i].label == label) return i;
  return std::nullopt;
}

int ARQuiver::add(const GradedModule& m) {
  if (auto i = find(m)) return *i;
  Vertex v;
  v.label = identify(m).label;
  v.module = m;
  v.simple = is_simple(m);
  v.polynomial = is_polynomial(m).is_polynomial;
  vertices.push_back(std::move(v));
  return size() - 1;
}

void ARQuiver::set_arrow(int s, int t, int mult) {
  for (auto& a : arrows)
    if (a.source == s && a.target == t) {
      a.multiplicity = std::max(a.multiplicity, mult);
      return;
    }
  arrows.push_back({s, t, mult});
}

int ARQuiver::multiplicity(int s, int t) const {
  for (const auto& a : arrows)
    if (a.source == s && a.target == t) return a.multiplicity;
  return 0;
}

std::vector<int> ARQuiver::predecessors(int v) const {
  std::vector<int> out;
  for (const auto& a : arrows)
    if (a.target == v) out.push_back(a.source);
  return out;
}

std::vector<int> ARQuiver::successors(int v) const {
  std::vector<int> out;
  for (const auto& a : arrows)
    if (a.source == v) out.push_back(a.target);
  return out;
}

std::optional<int> ARQuiver::tau_inv(int v) const {
  for (auto [x, y] : tau)
    if (y == v) return x;
  return std::nullopt;
}

std::vector<std::string> mesh_violations(const ARQuiver& q) {
  std::vector<std::string> bad;
  for (auto [v, t] : q.tau) {
    std::map<int, int> in, out;
    for (const auto& a : q.arrows) {
      if (a.target == v) in[a.source] += a.multiplicity;
      if (a.source == t) out[a.target] += a.multiplicity;
    }
    if (in != out) bad.push_back("mesh fails at " + q.vertices[v].label);
  }
  return bad;
}

// ---- exploration

ARQuiver explore_component(const GradedModule& seed, ExploreBounds b) {
  if (seed.dim() == 0 || is_projective(seed))
    throw PreconditionError("explore_component: seed must be nonzero and non-projective");
  if (!is_indecomposable(seed)) throw PreconditionError("explore_component: seed must be indecomposable");
  if (b.max_ql < 0 || b.max_tau < 0) throw UsageError("explore_component: negative bounds");
  ARQuiver q;
  int s = q.add(seed);
  // (arrow distance, position)
  std::map<int, std::pair<int, int>> state{{s, {0, 0}}};
  std::deque<int> todo{s};
  std::set<int> done;
  std::vector<int> quasi_simple;
  auto offer = [&](int v, int dist, int pos) {
    if (dist > b.max_ql || std::abs(pos) > 2 * b.max_tau + 1) return;
    auto it = state.find(v);
    if (it != state.end() && it->second.first <= dist) return;
    state[v] = {dist, pos};
    todo.push_back(v);
  };
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    if (done.count(v)) continue;
    done.insert(v);
    auto [dist, pos] = state[v];
    if (attach_sequence(q, v) == 1) quasi_simple.push_back(v);
    offer(q.tau[v], dist, pos - 2);
    for (int c : q.predecessors(v)) offer(c, dist + 1, pos - 1);
    int u;
    if (auto known = q.tau_inv(v)) {
      u = *known;
    } else {
      u = q.add(tau_inv(q.vertices[v].module));
      q.tau[u] = v;
    }
    offer(u, dist, pos + 2);
  }
  // the translate of an unprocessed vertex was only recorded from the
  // inverse side; drop it so mesh checks only see complete meshes
  for (auto it = q.tau.begin(); it != q.tau.end();)
    it = done.count(it->first) ? std::next(it) : q.tau.erase(it);
  // quasi-length: one more than the distance to the nearest quasi-simple
  if (!quasi_simple.empty()) {
    auto adj = undirected(q);
    std::vector<int> dist(q.size(), -1);
    std::deque<int> bfs;
    for (int v : quasi_simple) {
      dist[v] = 0;
      bfs.push_back(v);
    }
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      for (int w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          bfs.push_back(w);
        }
    }
    // only vertices with a computed mesh; the rim of the patch is unreliable
    for (int v : done)
      if (dist[v] >= 0) q.vertices[v].ql = dist[v] + 1;
  }
  return q;
}

std::map<int, int> positions(const ARQuiver& q, int anchor) {
  std::map<int, int> pos{{anchor, 0}};
  std::deque<int> bfs{anchor};
  auto visit = [&](int w, int p) {
    if (pos.count(w)) return;
    pos[w] = p;
    bfs.push_back(w);
  };
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop_front();
    int p = pos[v];
    for (const auto& a : q.arrows) {
      if (a.source == v) visit(a.target, p + 1);
      if (a.target == v) visit(a.source, p - 1);
    }
    for (auto [x, t] : q.tau) {
      if (x == v) visit(t, p - 2);
      if (t == v) visit(x, p + 2);
    }
  }
  return pos;
}

std::vector<int> wing(ARQuiver& q, int v) {
  if (!q.vertices.at(v).ql) throw PreconditionError("wing: quasi-length of " + q.vertices[v].label + " unknown");
  int m = *q.vertices[v].ql;
  if (m == 1) return {v};
  if (!q.tau.count(v)) attach_sequence(q, v);
  std::vector<int> preds = q.predecessors(v);
  if (preds.empty() || preds.size() > 2) throw PreconditionError("wing: " + q.vertices[v].label + " is not in a tube-like patch");
  int c1 = -1;
  for (int c : preds)
    if (q.vertices[c].ql == m - 1) c1 = c;
  if (c1 < 0) {
    // no quasi-length recorded: the quasi-socle side is the smaller summand
    c1 = preds.front();
    for (int c : preds)
      if (q.vertices[c].module.dim() < q.vertices[c1].module.dim()) c1 = c;
  }
  q.vertices[c1].ql = m - 1;
  int c2;
  if (auto known = q.tau_inv(c1)) {
    c2 = *known;
  } else {
    c2 = q.add(tau_inv(q.vertices[c1].module));
    q.tau[c2] = c1;
  }
  q.vertices[c2].ql = m - 1;
  std::set<int> out{v};
  for (int x : wing(q, c1)) out.insert(x);
  for (int x : wing(q, c2)) out.insert(x);
  return {out.begin(), out.end()};
}

OrbitScan tau_orbit_scan(const GradedModule& v, int range) {
  OrbitScan r;
  GradedModule t = tau(v);
  Weight step = t.sorted_weights().front() - v.sorted_weights().front();
  if (is_isomorphic(t, shift(v, step))) r.step = step;
  if (r.step) {
    for (int i = -range; i <= range; ++i)
      if (is_polynomial(shift(v, step * i)).is_polynomial) r.polynomial.push_back(i);
  } else {
    if (is_polynomial(v).is_polynomial) r.polynomial.push_back(0);
    GradedModule up = v, down = v;
    for (int i = 1; i <= range; ++i) {
      up = tau(up);
      down = tau_inv(down);
      if (is_polynomial(up).is_polynomial) r.polynomial.push_back(i);
      if (is_polynomial(down).is_polynomial) r.polynomial.push_back(-i);
    }
    std::sort(r.polynomial.begin(), r.polynomial.end());
  }
  for (std::size_t k = 1; k < r.polynomial.size(); ++k)
    if (r.polynomial[k] != r.polynomial[k - 1] + 1) r.contiguous = false;
  return r;
}

ARQuiver induced(const ARQuiver& q, const std::vector<int>& keep) {
  ARQuiver out;
  std::map<int, int> idx;
  for (int v : keep) {
    idx[v] = out.size();
    out.vertices.push_back(q.vertices[v]);
  }
  for (const auto& a : q.arrows)
    if (idx.count(a.source) && idx.count(a.target)) out.arrows.push_back({idx[a.source], idx[a.target], a.multiplicity});
  for (auto [x, t] : q.tau)
    if (idx.count(x) && idx.count(t)) out.tau[idx[x]] = idx[t];
  return out;
}

ARQuiver stable_part(const ARQuiver& q) {
  std::vector<int> keep;
  for (int v = 0; v < q.size(); ++v)
    if (!(q.vertices[v].projective && q.vertices[v].injective)) keep.push_back(v);
  return induced(q, keep);
}

namespace {

std::set<int> reach(const ARQuiver& q, int from, bool forward) {
  std::set<int> seen{from};
  std::deque<int> bfs{from};
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop_front();
    for (int w : forward ? q.successors(v) : q.predecessors(v))
      if (seen.insert(w).second) bfs.push_back(w);
  }
  return seen;
}

bool connected(const ARQuiver& q) {
  if (q.size() == 0) return true;
  auto adj = undirected(q);
  std::set<int> seen{0};
  std::deque<int> bfs{0};
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop_front();
    for (int w : adj[v])
      if (seen.insert(w).second) bfs.push_back(w);
  }
  return int(seen.size()) == q.size();
}

}  // namespace

PolyPart polynomial_part(ARQuiver& q) {
  PolyPart out;
  std::vector<int> keep;
  for (int v = 0; v < q.size(); ++v)
    if (q.vertices[v].polynomial) keep.push_back(v);
  out.quiver = induced(q, keep);
  out.connected = connected(out.quiver);
  if (keep.empty()) return out;
  out.shape = PolyShape::Other;
  // unique vertex of maximal quasi-length
  int best = -1, count = 0;
  for (int v : keep)
    if (q.vertices[v].ql) {
      int l = *q.vertices[v].ql;
      if (best < 0 || l > *q.vertices[best].ql) {
        best = v;
        count = 1;
      } else if (l == *q.vertices[best].ql) {
        ++count;
      }
    }
  if (best >= 0 && count == 1) {
    out.top = best;
    std::vector<int> w = wing(q, best);
    if (w == keep) {
      out.shape = PolyShape::Wing;
      return out;
    }
  }
  std::set<int> keep_set(keep.begin(), keep.end());
  for (int x : keep) {
    auto d = q.find(contravariant_dual(q.vertices[x].module));
    if (!d || *d == x) continue;
    std::set<int> f = reach(q, x, true), g = reach(q, *d, false), both;
    std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::inserter(both, both.begin()));
    if (both == keep_set) {
      out.shape = PolyShape::BetweenDuals;
      break;
    }
  }
  return out;
}

// ---- polynomial blocks

std::vector<GradedModule> polynomial_indecomposables(unsigned p, int d) {
  if (d < 0) throw UsageError("polynomial_indecomposables: d must be >= 0");
  AlgebraPtr alg = Algebra::sl2r1(p);
  const int P = int(p);
  std::vector<GradedModule> bases;
  for (int k = 0; k <= d; ++k) {
    bases.push_back(weyl_hat(alg, k));
    if (k >= P) bases.push_back(contravariant_dual(weyl_hat(alg, k)));
    if (k >= P && k % P != P - 1) {
      bases.push_back(w_hat(alg, k));
      bases.push_back(w_hat_twisted(alg, k));
    }
  }
  for (int a = 0; a < P; ++a) bases.push_back(projective_indec(alg, a));
  ARQuiver seen;  // used only for iso-deduplication
  std::vector<GradedModule> out;
  for (const auto& base : bases) {
    int d0 = base.weights().front().degree();
    int rest = d - d0;
    if (rest < 0) continue;
    for (int x = -d - P; x <= d + P; ++x) {
      int y = rest - x;
      if (((x - y) % P + P) % P != 0) continue;
      GradedModule m = shift(base, {x, y});
      if (!is_polynomial(m).is_polynomial) continue;
      for (const auto& s : split_indecomposables(m)) {
        if (seen.find(s.module)) continue;
        Vertex v;
        v.module = s.module;
        seen.vertices.push_back(std::move(v));
        out.push_back(s.module);
      }
    }
  }
  return out;
}

std::vector<std::vector<GradedModule>> polynomial_blocks(unsigned p, int d) {
  auto mods = polynomial_indecomposables(p, d);
  int n = int(mods.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (root(i) == root(j)) continue;
      if (hom_space(mods[i], mods[j]).dim() > 0 || hom_space(mods[j], mods[i]).dim() > 0) parent[root(i)] = root(j);
    }
  std::map<int, std::vector<GradedModule>> groups;
  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    int r = root(i);
    if (!groups.count(r)) order.push_back(r);
    groups[r].push_back(mods[i]);
  }
  std::vector<std::vector<GradedModule>> out;
  for (int r : order) out.push_back(groups[r]);
  return out;
}

int non_semisimple_block_count(unsigned p, int d) {
  int n = 0;
  for (const auto& b : polynomial_blocks(p, d))
    if (b.size() > 1 || !is_simple(b.front())) ++n;
  return n;
}

SchurBlock schur_block_quiver(unsigned p, int d, const FamilyLabel& seed) {
  GradedModule s = build(seed, p);
  if (!is_polynomial(s).is_polynomial) throw PreconditionError("schur_block_quiver: seed is not polynomial");
  if (is_polynomial(s).degree != d) throw PreconditionError("schur_block_quiver: seed is not of degree " + std::to_string(d));
  auto blocks = polynomial_blocks(p, d);
  SchurBlock out;
  out.blocks = int(blocks.size());
  for (const auto& b : blocks) out.candidates += int(b.size());
  const std::vector<GradedModule>* mine = nullptr;
  for (const auto& b : blocks)
    for (const auto& m : b)
      if (!mine && same_character(m, s) && is_isomorphic(m, s)) mine = &b;
  if (!mine) throw InvariantViolation("schur_block_quiver: seed not among the enumerated modules");
  ARQuiver& q = out.quiver;
  auto add_flagged = [&](const GradedModule& m) {
    int before = q.size();
    int v = q.add(m);
    if (v == before) {
      q.vertices[v].projective = ext_projective_in_poly(m);
      q.vertices[v].injective = ext_injective_in_poly(m);
    }
    return v;
  };
  for (const auto& m : *mine) add_flagged(m);
  out.semisimple = q.size() == 1 && q.vertices[0].simple;

  auto attach = [&](const GradedModule& m) {
    std::map<int, int> parts;
    if (m.dim() == 0) return parts;
    for (const auto& x : split_indecomposables(m)) ++parts[add_flagged(x.module)];
    return parts;
  };
  std::set<int> done;
  const int max_rounds = 3;
  for (;;) {
    int before = q.size();
    for (int v = 0; v < q.size(); ++v) {
      if (done.count(v)) continue;
      done.insert(v);
      GradedModule m = q.vertices[v].module;
      if (!q.vertices[v].projective) {
        ShortExact e = almost_split_in_poly(m);
        int t = add_flagged(e.left);
        q.tau[v] = t;
        for (auto [c, k] : attach(e.middle)) {
          q.set_arrow(c, v, k);
          q.set_arrow(t, c, k);
        }
      } else {
        for (auto [c, k] : attach(radical(m).module)) q.set_arrow(c, v, k);
      }
    }
    ++out.closure_rounds;
    if (q.size() == before) break;
    if (out.closure_rounds >= max_rounds)
      throw InvariantViolation("schur_block_quiver: enumeration not closed under almost split sequences");
  }
  // arrows out of injectives read off I/soc I must already be present
  for (int v = 0; v < q.size(); ++v) {
    if (!q.vertices[v].injective) continue;
    const GradedModule& m = q.vertices[v].module;
    Quotient top_part = quotient(m, socle(m).inclusion.matrix);
    if (top_part.module.dim() == 0) continue;
    for (const auto& x : split_indecomposables(top_part.module)) {
      auto c = q.find(x.module);
      if (!c || q.multiplicity(v, *c) == 0) out.injective_arrows_consistent = false;
    }
  }
  return out;
}

// ---- templates

TranslationGraph template_quiver(int n, int m) {
  if (n < 1 || m < 1) throw UsageError("template_quiver: n and m must be positive");
  TranslationGraph g;
  g.size = n * m;
  g.out.assign(g.size, {});
  g.tau.assign(g.size, std::nullopt);
  auto at = [&](int k, int i) { return ((k % m + m) % m) * n + (i - 1); };
  for (int k = 0; k < m; ++k)
    for (int i = 1; i <= n; ++i) {
      g.tau[at(k, i)] = at(k - 1, i);
      if (i < n) {
        ++g.out[at(k, i)][at(k, i + 1)];
        ++g.out[at(k, i + 1)][at(k + 1, i)];
      }
    }
  return g;
}

TranslationGraph as_graph(const ARQuiver& q) {
  TranslationGraph g;
  g.size = q.size();
  g.out.assign(g.size, {});
  g.tau.assign(g.size, std::nullopt);
  for (const auto& a : q.arrows) g.out[a.source][a.target] += a.multiplicity;
  for (auto [x, t] : q.tau) g.tau[x] = t;
  return g;
}

int arrow_count(const TranslationGraph& g) {
  int n = 0;
  for (const auto& o : g.out)
    for (auto [t, k] : o) n += k;
  return n;
}

std::optional<std::vector<int>> template_match(const ARQuiver& q, int n, int m) {
  TranslationGraph t = template_quiver(n, m), g = as_graph(q);
  if (g.size != t.size || arrow_count(g) != arrow_count(t)) return std::nullopt;
  auto mult = [](const TranslationGraph& x, int a, int b) {
    auto it = x.out[a].find(b);
    return it == x.out[a].end() ? 0 : it->second;
  };
  auto signature = [](const TranslationGraph& x) {
    std::vector<std::pair<int, int>> sig(x.size, {0, 0});
    for (int a = 0; a < x.size; ++a)
      for (auto [b, k] : x.out[a]) {
        sig[a].second += k;
        sig[b].first += k;
      }
    return sig;
  };
  auto gs = signature(g), ts = signature(t);
  // search order: breadth first from a vertex of least degree
  std::vector<std::vector<int>> adj(g.size);
  for (int a = 0; a < g.size; ++a)
    for (auto [b, k] : g.out[a]) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  std::vector<int> order;
  std::vector<bool> queued(g.size, false);
  std::vector<int> starts(g.size);
  std::iota(starts.begin(), starts.end(), 0);
  std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) {
    return gs[a].first + gs[a].second < gs[b].first + gs[b].second;
  });
  for (int s : starts) {
    if (queued[s]) continue;
    std::deque<int> bfs{s};
    queued[s] = true;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      order.push_back(v);
      for (int w : adj[v])
        if (!queued[w]) {
          queued[w] = true;
          bfs.push_back(w);
        }
    }
  }
  std::vector<int> phi(g.size, -1);
  std::vector<bool> used(t.size, false);
  std::function<bool(int)> go = [&](int k) -> bool {
    if (k == g.size) return true;
    int v = order[k];
    for (int c = 0; c < t.size; ++c) {
      if (used[c] || ts[c] != gs[v]) continue;
      bool ok = mult(g, v, v) == mult(t, c, c);
      for (int j = 0; j < k && ok; ++j) {
        int u = order[j];
        ok = mult(g, u, v) == mult(t, phi[u], c) && mult(g, v, u) == mult(t, c, phi[u]);
        if (ok && g.tau[u] == v) ok = t.tau[phi[u]] == c;
        if (ok && g.tau[v] == u) ok = t.tau[c] == phi[u];
      }
      if (ok && g.tau[v] == v) ok = t.tau[c] == c;
      if (!ok) continue;
      phi[v] = c;
      used[c] = true;
      if (go(k + 1)) return true;
      used[c] = false;
      phi[v] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return phi;
}

// ---- symmetry checks

ColumnReport column_symmetry_check(const ARQuiver& q) {
  ColumnReport r;
  std::vector<int> self;
  std::vector<std::optional<int>> dual_of(q.size());
  for (int v = 0; v < q.size(); ++v) {
    dual_of[v] = q.find(contravariant_dual(q.vertices[v].module));
    if (dual_of[v] == v) self.push_back(v);
  }
  r.self_dual = int(self.size());
  if (self.empty()) return r;
  r.applicable = true;
  auto pos = positions(q, self.front());
  int axis = 0;
  for (int v : self)
    if (pos.count(v) && pos[v] != axis) r.failures.push_back("self-dual " + q.vertices[v].label + " off the axis");
  for (auto [v, x] : pos) {
    if (x == axis) {
      ++r.column_size;
      if (dual_of[v] != v) r.failures.push_back(q.vertices[v].label + " in the column but not self-dual");
    }
    if (!dual_of[v] || !pos.count(*dual_of[v])) continue;
    ++r.mirrored;
    if (pos[*dual_of[v]] != 2 * axis - x)
      r.failures.push_back("dual of " + q.vertices[v].label + " not mirrored");
  }
  for (const auto& a : q.arrows) {
    auto ds = dual_of[a.source], dt = dual_of[a.target];
    // arrows into a vertex are all known once its mesh has been computed
    if (!ds || !dt || !q.tau.count(a.target) || !q.tau.count(*ds)) continue;
    ++r.arrows_checked;
    if (q.multiplicity(*dt, *ds) != a.multiplicity)
      r.failures.push_back("arrow " + q.vertices[a.source].label + " -> " + q.vertices[a.target].label + " not reversed");
  }
  r.ok = r.failures.empty();
  return r;
}

MoritaReport morita_shift_compare(unsigned p, int d, int i) {
  int a = d % int(p);
  if (i < 0 || (i > 0 && (i > int(p) - a - 2)))
    throw PreconditionError("morita_shift_compare: need 1 <= i <= p - a - 2 (or i = 0)");
  FamilyLabel l1{Family::V, d};
  FamilyLabel l2{Family::V, d};
  l2.shift = {i, i};
  SchurBlock b1 = schur_block_quiver(p, d, l1), b2 = schur_block_quiver(p, d + 2 * i, l2);
  const ARQuiver &x = b1.quiver, &y = b2.quiver;
  MoritaReport r;
  r.vertices = x.size();
  r.arrows = int(x.arrows.size());
  if (x.size() != y.size()) r.failures.push_back("vertex counts differ");
  if (x.arrows.size() != y.arrows.size()) r.failures.push_back("arrow counts differ");
  std::vector<int> map(x.size(), -1);
  r.dims_preserved = true;
  for (int v = 0; v < x.size(); ++v) {
    auto w = y.find(shift(x.vertices[v].module, {i, i}));
    if (!w) {
      r.failures.push_back("no image for " + x.vertices[v].label);
      continue;
    }
    map[v] = *w;
    if (y.vertices[*w].module.dim() != x.vertices[v].module.dim()) r.dims_preserved = false;
    if (y.vertices[*w].projective != x.vertices[v].projective || y.vertices[*w].injective != x.vertices[v].injective)
      r.failures.push_back("flags differ at " + x.vertices[v].label);
  }
  if (r.failures.empty()) {
    for (const auto& ar : x.arrows)
      if (y.multiplicity(map[ar.source], map[ar.target]) != ar.multiplicity)
        r.failures.push_back("arrow " + x.vertices[ar.source].label + " -> " + x.vertices[ar.target].label + " lost");
    for (auto [v, t] : x.tau) {
      auto it = y.tau.find(map[v]);
      if (it == y.tau.end() || it->second != map[t]) r.failures.push_back("tau differs at " + x.vertices[v].label);
    }
  }
  r.isomorphic = r.failures.empty();
  return r;
}

// ---- output

namespace {

std::string quoted(const std::string& s) {
  std::string o = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o + "\"";
}

std::vector<int> label_order(const ARQuiver& q) {
  std::vector<int> idx(q.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return q.vertices[a].label < q.vertices[b].label; });
  return idx;
}

std::vector<Arrow> sorted_arrows(const ARQuiver& q) {
  std::vector<Arrow> a = q.arrows;
  std::stable_sort(a.begin(), a.end(), [&](const Arrow& x, const Arrow& y) {
    return std::tie(q.vertices[x.source].label, q.vertices[x.target].label) <
           std::tie(q.vertices[y.source].label, q.vertices[y.target].label);
  });
  return a;
}

}  // namespace

std::string to_dot(const ARQuiver& q, const std::string& name) {
  std::ostringstream o;
  o << "digraph " << quoted(name) << " {\n";
  for (int v : label_order(q)) {
    const auto& x = q.vertices[v];
    std::vector<std::string> attr;
    if (x.projective) attr.push_back("shape=box");
    if (x.injective) attr.push_back("peripheries=2");
    if (x.simple) attr.push_back("style=bold");
    o << "  " << quoted(x.label);
    if (!attr.empty()) {
      o << " [";
      for (std::size_t k = 0; k < attr.size(); ++k) o << (k ? ", " : "") << attr[k];
      o << "]";
    }
    o << ";\n";
  }
  for (const auto& a : sorted_arrows(q)) {
    o << "  " << quoted(q.vertices[a.source].label) << " -> " << quoted(q.vertices[a.target].label);
    if (a.multiplicity > 1) o << " [label=\"" << a.multiplicity << "\"]";
    o << ";\n";
  }
  std::vector<std::pair<std::string, std::string>> taus;
  for (auto [v, t] : q.tau) taus.emplace_back(q.vertices[v].label, q.vertices[t].label);
  std::sort(taus.begin(), taus.end());
  for (const auto& [v, t] : taus)
    o << "  " << quoted(v) << " -> " << quoted(t) << " [style=dashed, constraint=false];\n";
  o << "}\n";
  return o.str();
}

ojson quiver_to_json(const ARQuiver& q) {
  ojson j;
  j["vertices"] = ojson::array();
  for (int v : label_order(q)) {
    const auto& x = q.vertices[v];
    ojson e;
    e["label"] = x.label;
    e["dim"] = x.module.dim();
    e["projective"] = x.projective;
    e["injective"] = x.injective;
    e["simple"] = x.simple;
    e["polynomial"] = x.polynomial;
    if (x.ql)
      e["ql"] = *x.ql;
    else
      e["ql"] = nullptr;
    j["vertices"].push_back(e);
  }
  j["arrows"] = ojson::array();
  for (const auto& a : sorted_arrows(q))
    j["arrows"].push_back(ojson{{"source", q.vertices[a.source].label},
                                {"target", q.vertices[a.target].label},
                                {"multiplicity", a.multiplicity}});
  std::vector<std::pair<std::string, std::string>> taus;
  for (auto [v, t] : q.tau) taus.emplace_back(q.vertices[v].label, q.vertices[t].label);
  std::sort(taus.begin(), taus.end());
  j["tau"] = ojson::array();
  for (const auto& [v, t] : taus) j["tau"].push_back(ojson{{"from", v}, {"to", t}});
  return j;
}

}  // namespace grq
