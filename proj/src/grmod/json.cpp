#include "grq/grmod/json.hpp"

#include "grq/error.hpp"

namespace grq {

namespace {

ojson matrix_json(const gf::Matrix& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

gf::Matrix matrix_from(const ojson& j, const gf::PrimeField& f, int n, const std::string& name) {
  if (!j.is_array() || int(j.size()) != n)
    throw UsageError("action " + name + ": expected " + std::to_string(n) + " rows");
  gf::Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || int(row.size()) != n)
      throw UsageError("action " + name + ": row " + std::to_string(i) + " has wrong length");
    for (int c = 0; c < n; ++c) {
      if (!row[c].is_number_integer()) throw UsageError("action " + name + ": non-integer entry");
      m.set_int(i, c, row[c].get<long long>());
    }
  }
  return m;
}

}  // namespace

ojson module_to_json(const GradedModule& m) {
  const Algebra& alg = m.algebra();
  ojson a;
  a["kind"] = alg.kind() == AlgebraKind::Sl2R1 ? "sl2r1" : "borel";
  a["p"] = alg.p();
  if (alg.kind() == AlgebraKind::Borel) {
    a["r"] = alg.r();
    if (alg.first() != 1) a["first"] = alg.first();
  }
  ojson j;
  j["algebra"] = a;
  j["dim"] = m.dim();
  ojson w = ojson::array();
  for (Weight x : m.weights()) w.push_back(ojson::array({x.a, x.b}));
  j["weights"] = w;
  ojson act = ojson::object();
  for (int g = 0; g < alg.generator_count(); ++g) act[alg.generator_name(g)] = matrix_json(m.action(g));
  j["action"] = act;
  return j;
}

std::string module_to_string(const GradedModule& m) { return module_to_json(m).dump(); }

GradedModule module_from_json(const ojson& j) {
  try {
    const auto& a = j.at("algebra");
    std::string kind = a.at("kind").get<std::string>();
    unsigned p = a.at("p").get<unsigned>();
    AlgebraPtr alg;
    if (kind == "sl2r1") {
      alg = Algebra::sl2r1(p);
    } else if (kind == "borel") {
      int r = a.at("r").get<int>();
      int first = a.contains("first") ? a.at("first").get<int>() : 1;
      alg = Algebra::borel(p, r, first);
    } else {
      throw UsageError("unknown algebra kind '" + kind + "'");
    }
    const int n = j.at("dim").get<int>();
    const auto& wj = j.at("weights");
    if (!wj.is_array() || int(wj.size()) != n) throw UsageError("weights: expected " + std::to_string(n) + " entries");
    std::vector<Weight> w;
    for (const auto& x : wj) {
      if (!x.is_array() || x.size() != 2) throw UsageError("weights: each entry must be [a,b]");
      w.push_back({x[0].get<int>(), x[1].get<int>()});
    }
    const auto& act = j.at("action");
    if (!act.is_object() || int(act.size()) != alg->generator_count())
      throw UsageError("action: expected exactly the generators of " + alg->describe());
    std::vector<gf::Matrix> mats;
    for (int g = 0; g < alg->generator_count(); ++g) {
      const std::string& name = alg->generator_name(g);
      if (!act.contains(name)) throw UsageError("action: missing generator " + name);
      mats.push_back(matrix_from(act.at(name), alg->field(), n, name));
    }
    return GradedModule(alg, std::move(w), std::move(mats));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("module json: ") + e.what());
  }
}

GradedModule module_from_string(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte ? e.byte - 1 : 0, e.what());
  }
  return module_from_json(j);
}

ojson map_to_json(const ModuleMap& f) {
  ojson j;
  j["source_dim"] = f.source.dim();
  j["target_dim"] = f.target.dim();
  j["matrix"] = matrix_json(f.matrix);
  return j;
}

}  // namespace grq
