#include "hha/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hha {

namespace {

using nlohmann::json;

void reject_floats(const json& j, const std::string& path) {
  if (j.is_number_float())
    throw Error("float literal at " + path + "; rationals must be exact strings \"p/q\"");
  if (j.is_array()) {
    int i = 0;
    for (const auto& x : j) reject_floats(x, path + "/" + std::to_string(i++));
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) reject_floats(it.value(), path + "/" + it.key());
  }
}

// scalar forms: exact integer, "p/q" string, or {"1,3": "p/q", ...} with keys
// listing 1-based indices into the declared roots array ("" = rational part)
ExtScalar parse_scalar(const json& j, const FieldPtr& field,
                       const std::vector<Integer>& declared_roots, const std::string& where) {
  if (j.is_number_integer()) return ExtScalar(Rational(long(j.get<std::int64_t>())));
  if (j.is_string()) return ExtScalar(parse_rational(j.get<std::string>()));
  if (j.is_object()) {
    ExtScalar r;
    for (auto it = j.begin(); it != j.end(); ++it) {
      Rational coeff = it.value().is_string() ? parse_rational(it.value().get<std::string>())
                       : it.value().is_number_integer()
                           ? Rational(long(it.value().get<std::int64_t>()))
                           : throw Error("bad coefficient at " + where);
      std::uint32_t mask = 0;
      std::stringstream ss(it.key());
      std::string part;
      while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        std::size_t idx = std::stoul(part);
        if (idx == 0 || idx > declared_roots.size())
          throw Error("root index " + part + " out of range at " + where);
        const Integer& root = declared_roots[idx - 1];
        if (!field) throw Error("scalar uses roots but no field is declared at " + where);
        bool found = false;
        for (std::size_t fi = 0; fi < field->roots().size(); ++fi)
          if (field->roots()[fi] == root) {
            mask |= (1u << fi);
            found = true;
            break;
          }
        if (!found) throw Error("internal: declared root missing from field");
      }
      r += ExtScalar(field, mask, coeff);
    }
    return r;
  }
  throw Error("bad scalar at " + where);
}

Matrix parse_matrix(const json& j, const FieldPtr& field, const std::vector<Integer>& roots,
                    const std::string& where) {
  if (!j.is_array() || j.empty()) throw Error("expected matrix at " + where);
  int rows = int(j.size());
  int cols = int(j[0].size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || int(j[i].size()) != cols)
      throw Error("ragged matrix at " + where);
    for (int c = 0; c < cols; ++c)
      m(i, c) = parse_scalar(j[i][c], field, roots, where + "[" + std::to_string(i) + "][" +
                                                       std::to_string(c) + "]");
  }
  return m;
}

struct MaterializeResult {
  std::shared_ptr<const OrthogonalRep> rep;
  OrthoBasisPtr basis;
};

MaterializeResult materialize_rep(const json& j, const FieldPtr& field,
                                  const std::vector<Integer>& roots, const FiniteGroup& group) {
  auto rep = std::make_shared<OrthogonalRep>();
  rep->group = group;
  rep->gram = parse_matrix(j.at("gram"), field, roots, "gram");
  rep->dim = rep->gram.rows();
  const json& mats = j.at("representation");
  if (!mats.is_array() || int(mats.size()) != group.order())
    throw Error("representation needs one matrix per group element");
  for (int g = 0; g < group.order(); ++g)
    rep->rho.push_back(parse_matrix(mats[g], field, roots, "representation[" +
                                                               std::to_string(g) + "]"));
  rep->validate_structure();
  auto orth = rep->validate_orthogonality();
  if (!orth.ok) throw Error("representation not orthogonal: " + orth.witness);
  MaterializeResult res;
  res.rep = rep;
  res.basis = orthogonalize(field, rep->gram);
  return res;
}

}  // namespace

Scenario scenario_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, true, true);  // allow comments
  reject_floats(j, "");

  Scenario sc;
  sc.name = j.value("name", "unnamed");

  std::vector<Integer> declared_roots;
  if (j.contains("roots"))
    for (const auto& r : j.at("roots")) {
      if (!r.is_number_integer()) throw Error("roots must be integers");
      declared_roots.emplace_back(long(r.get<std::int64_t>()));
    }

  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("group")) table.push_back(row.get<std::vector<int>>());
  FiniteGroup group = FiniteGroup::build(table);

  // pass A: materialize over the declared field, factor every rho(g) and
  // collect the reflection norms the pin lift will need
  FieldPtr field0 = declared_roots.empty() ? nullptr : QuadraticField::make(declared_roots);
  MaterializeResult pass_a = materialize_rep(j, field0, declared_roots, group);
  FieldBuilder builder;
  for (const auto& r : declared_roots) builder.require_root(r);
  for (int i = 0; i < pass_a.basis->dim(); ++i) {
    auto q = pass_a.basis->q[i].as_rational();
    if (q) builder.require_sqrt(*q);
  }
  for (int g = 0; g < group.order(); ++g) {
    for (const auto& v : reflection_factorization(*pass_a.basis, pass_a.rep->rho[g])) {
      ExtScalar norm = pass_a.basis->form(v, v);
      if (auto r = norm.as_rational()) builder.require_sqrt(*r);
      // non-rational norms must already be perfect squares in the final field;
      // pin_lift reports them otherwise
    }
  }
  sc.field = builder.build();

  // pass B: re-materialize everything over the final field
  MaterializeResult pass_b = materialize_rep(j, sc.field, declared_roots, group);
  sc.rep = pass_b.rep;
  sc.basis = pass_b.basis;

  Kappa kappa = Kappa::zero(sc.rep->dim, group.order());
  if (j.contains("kappa")) {
    for (const auto& entry : j.at("kappa")) {
      int a = entry.at("i").get<int>();
      int b = entry.at("j").get<int>();
      if (a == b) throw Error("kappa entry with i == j");
      int i = std::min(a, b), jj = std::max(a, b);
      GroupAlgebraElement val(group.order());
      for (auto it = entry.at("value").begin(); it != entry.at("value").end(); ++it) {
        int g = std::stoi(it.key());
        if (g < 0 || g >= group.order()) throw Error("kappa group index out of range");
        val[g] = parse_scalar(it.value(), sc.field, declared_roots, "kappa");
      }
      if (a > b)
        for (auto& c : val) c = -c;
      kappa.vals[kappa.pair_index(i, jj)] = val;
    }
  }
  sc.kappa_report = validate_kappa(*sc.rep, kappa);
  sc.algebra = std::make_shared<HeckeAlgebra>(sc.rep, kappa);

  if (j.contains("modules")) {
    for (auto it = j.at("modules").begin(); it != j.at("modules").end(); ++it) {
      ModuleAction m;
      const json& jm = it.value();
      for (int g = 0; g < group.order(); ++g)
        m.group_mats.push_back(parse_matrix(jm.at("group")[g], sc.field, declared_roots,
                                            "modules/" + it.key() + "/group"));
      for (int i = 0; i < sc.rep->dim; ++i)
        m.vector_mats.push_back(parse_matrix(jm.at("vectors")[i], sc.field, declared_roots,
                                             "modules/" + it.key() + "/vectors"));
      m.dim = m.group_mats[0].rows();
      sc.module_reports[it.key()] = validate_module(*sc.algebra, m);
      sc.modules[it.key()] = std::move(m);
    }
  }

  if (j.contains("isotropic_subspace"))
    sc.isotropic_w =
        parse_matrix(j.at("isotropic_subspace"), sc.field, declared_roots, "isotropic_subspace");

  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    sc.bounds.center_max_degree = b.value("center_max_degree", sc.bounds.center_max_degree);
    sc.bounds.homology_max_degree = b.value("homology_max_degree", sc.bounds.homology_max_degree);
    sc.bounds.zeta_retry_limit = b.value("zeta_retry_limit", sc.bounds.zeta_retry_limit);
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scenario file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return scenario_from_json_text(ss.str());
}

}  // namespace hha
