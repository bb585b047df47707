#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grq/constructions/constructions.hpp"
#include "grq/grmod/json.hpp"
#include "grq/homological/homological.hpp"

namespace grq {

struct Vertex {
  std::string label;
  GradedModule module;
  bool projective = false;  // in whichever category the quiver lives
  bool injective = false;
  bool simple = false;
  bool polynomial = false;
  std::optional<int> ql;
};

struct Arrow {
  int source = 0, target = 0, multiplicity = 1;
};

struct ARQuiver {
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;
  std::map<int, int> tau;  // v -> tau v, where known

  int size() const { return int(vertices.size()); }
  std::optional<int> find(const GradedModule& m) const;
  std::optional<int> find_label(const std::string& label) const;
  // existing vertex isomorphic to m, or a new one
  int add(const GradedModule& m);
  void set_arrow(int s, int t, int multiplicity);
  int multiplicity(int s, int t) const;
  std::vector<int> predecessors(int v) const;
  std::vector<int> successors(int v) const;
  std::optional<int> tau_inv(int v) const;
};

// mesh condition at every vertex whose translate is known; returns violations
std::vector<std::string> mesh_violations(const ARQuiver& q);

struct ExploreBounds {
  int max_ql = 3;   // arrow steps away from the seed
  int max_tau = 3;  // tau steps away from the seed
};
// patch of the stable AR quiver of graded modules around seed
ARQuiver explore_component(const GradedModule& seed, ExploreBounds b);
// arrow-position: pos(tau v) = pos(v) - 2, pos(target) = pos(source) + 1
std::map<int, int> positions(const ARQuiver& q, int anchor);

// vertex indices of the wing of v; extends q when a needed vertex is missing
std::vector<int> wing(ARQuiver& q, int v);

enum class PolyShape { Empty, Wing, BetweenDuals, Other };
struct PolyPart {
  ARQuiver quiver;
  bool connected = false;
  PolyShape shape = PolyShape::Empty;
  std::optional<int> top;  // unique vertex of maximal quasi-length, in q's indexing
};
PolyPart polynomial_part(ARQuiver& q);

// polynomial members tau^i(v), |i| <= range
struct OrbitScan {
  std::optional<Weight> step;  // tau(v) = v[step], when tau acts as a shift
  std::vector<int> polynomial; // exponents i with tau^i(v) polynomial, ascending
  bool contiguous = true;
};
OrbitScan tau_orbit_scan(const GradedModule& v, int range);

ARQuiver induced(const ARQuiver& q, const std::vector<int>& keep);
ARQuiver stable_part(const ARQuiver& q);  // drop projective-injective vertices

// --- blocks of the polynomial category in a fixed degree (sl2, graded)
std::vector<GradedModule> polynomial_indecomposables(unsigned p, int d);
std::vector<std::vector<GradedModule>> polynomial_blocks(unsigned p, int d);
int non_semisimple_block_count(unsigned p, int d);

struct SchurBlock {
  ARQuiver quiver;
  int candidates = 0;  // indecomposables of degree d
  int blocks = 0;
  int closure_rounds = 0;
  bool injective_arrows_consistent = true;
  bool semisimple = false;
};
SchurBlock schur_block_quiver(unsigned p, int d, const FamilyLabel& seed);

// Z[A_n]/<tau^m>: vertex (k, i), k mod m, 1 <= i <= n, index k*n + i - 1
struct TranslationGraph {
  int size = 0;
  std::vector<std::map<int, int>> out;  // target -> multiplicity
  std::vector<std::optional<int>> tau;
};
TranslationGraph template_quiver(int n, int m);
TranslationGraph as_graph(const ARQuiver& q);
int arrow_count(const TranslationGraph& g);
// q-vertex -> template vertex
std::optional<std::vector<int>> template_match(const ARQuiver& q, int n, int m);

struct ColumnReport {
  bool applicable = false;
  bool ok = false;
  int self_dual = 0;     // self-dual vertices found
  int column_size = 0;   // vertices in their columns
  int mirrored = 0;      // vertices whose dual lies in the patch
  int arrows_checked = 0;
  std::vector<std::string> failures;
};
ColumnReport column_symmetry_check(const ARQuiver& q);

struct MoritaReport {
  bool isomorphic = false;
  int vertices = 0;
  int arrows = 0;
  bool dims_preserved = false;
  std::vector<std::string> failures;
};
MoritaReport morita_shift_compare(unsigned p, int d, int i);

std::string to_dot(const ARQuiver& q, const std::string& name = "Q");
ojson quiver_to_json(const ARQuiver& q);

}  // namespace grq
