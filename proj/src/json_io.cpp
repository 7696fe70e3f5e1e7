#include "gkit/json_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace gkit {
namespace io {

using nlohmann::json;

namespace {

Rational coeff_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw structural_error("coefficient must be an integer or an \"n/d\" string");
}

json sparse_to_json(const SparseVec& v) {
  json out = json::object();
  for (const auto& [l, c] : v.entries()) out[l] = rational_to_string(c);
  return out;
}

SparseVec sparse_from_json(const json& j) {
  SparseVec out;
  if (!j.is_object()) throw structural_error("sparse vector must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) out.add(it.key(), coeff_from_json(it.value()));
  return out;
}

json structconst_to_json(const FiniteDimAlgebra& a) {
  json out = json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const IVec& p = a.prod(i, j);
      if (p.empty()) continue;
      json val = json::object();
      for (const auto& [t, c] : p) val[a.label(t)] = rational_to_string(c);
      out.push_back(json::array({a.label(i), a.label(j), val}));
    }
  return out;
}

std::map<std::pair<Label, Label>, SparseVec> structconst_from_json(const json& j) {
  std::map<std::pair<Label, Label>, SparseVec> out;
  if (!j.is_array()) throw structural_error("structconst must be an array of [x, y, {z: c}] triples");
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3)
      throw structural_error("structconst entry must be [x, y, {z: c}]");
    out[{entry[0].get<std::string>(), entry[1].get<std::string>()}] = sparse_from_json(entry[2]);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupoidPtr groupoid_from_json_value(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return load_groupoid_file(base_dir / j.get<std::string>());
  // inline object: validate exactly like the file loader
  std::vector<Label> arrows;
  for (const auto& a : j.at("arrows")) arrows.push_back(a.get<std::string>());
  std::map<std::pair<Label, Label>, Label> compose;
  for (const auto& t : j.at("compose")) {
    if (!t.is_array() || t.size() != 3) throw structural_error("compose entries must be [g,h,gh]");
    compose[{t[0].get<std::string>(), t[1].get<std::string>()}] = t[2].get<std::string>();
  }
  std::map<Label, Label> inv;
  for (auto it = j.at("inv").begin(); it != j.at("inv").end(); ++it)
    inv[it.key()] = it.value().get<std::string>();
  auto g = std::make_shared<Groupoid>(Groupoid::from_tables(std::move(arrows), std::move(compose),
                                                            std::move(inv)));
  GroupoidReport rep = validate(*g);
  if (!rep.ok) {
    std::string msg = "invalid groupoid:";
    for (const auto& v : rep.violations) msg += " [" + v.rule + " at " + v.witness + "]";
    throw validation_error(msg);
  }
  return g;
}

}  // namespace

std::string groupoid_to_json(const Groupoid& g) {
  json out;
  out["arrows"] = g.arrows();
  json compose = json::array();
  for (const auto& a : g.arrows())
    for (const auto& b : g.arrows())
      if (g.composable(a, b)) compose.push_back(json::array({a, b, g.compose(a, b)}));
  out["compose"] = compose;
  json inv = json::object();
  for (const auto& a : g.arrows()) inv[a] = g.inv(a);
  out["inv"] = inv;
  return out.dump(2);
}

GroupoidPtr parse_groupoid_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<Label> arrows;
  for (const auto& a : j.at("arrows")) arrows.push_back(a.get<std::string>());
  std::map<std::pair<Label, Label>, Label> compose;
  for (const auto& t : j.at("compose"))
    compose[{t[0].get<std::string>(), t[1].get<std::string>()}] = t[2].get<std::string>();
  std::map<Label, Label> inv;
  for (auto it = j.at("inv").begin(); it != j.at("inv").end(); ++it)
    inv[it.key()] = it.value().get<std::string>();
  return std::make_shared<Groupoid>(
      Groupoid::from_tables(std::move(arrows), std::move(compose), std::move(inv)));
}

GroupoidPtr load_groupoid_file(const std::filesystem::path& path) {
  json j = json::parse(read_file(path));
  return groupoid_from_json_value(j, path.parent_path());
}

std::string algebra_to_json(const FiniteDimAlgebra& a, const std::map<Label, Label>* grade) {
  json out;
  out["basis"] = a.basis().labels();
  out["structconst"] = structconst_to_json(a);
  if (a.has_unit()) out["unit"] = sparse_to_json(a.unit());
  if (grade) {
    json g = json::object();
    for (const auto& [l, arrow] : *grade) g[l] = arrow;
    out["grade"] = g;
  }
  return out.dump(2);
}

AlgebraPtr parse_algebra_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<Label> basis;
  for (const auto& b : j.at("basis")) basis.push_back(b.get<std::string>());
  auto sc = structconst_from_json(j.at("structconst"));
  std::optional<SparseVec> unit;
  if (j.contains("unit")) unit = sparse_from_json(j.at("unit"));
  return std::make_shared<FiniteDimAlgebra>(std::move(basis), sc, std::move(unit));
}

GroupoidAction parse_action_json(const std::string& text, const std::filesystem::path& base_dir) {
  json j = json::parse(text);
  GroupoidPtr g = groupoid_from_json_value(j.at("groupoid"), base_dir);

  // assemble R as the direct sum of the per-identity component algebras
  std::vector<Label> basis;
  std::map<std::pair<Label, Label>, SparseVec> sc;
  std::map<Label, std::vector<Label>> components;
  const json& comps = j.at("components");
  for (const auto& e : g->identities()) {
    if (!comps.contains(e)) continue;
    const json& cj = comps.at(e);
    std::vector<Label> cbasis;
    for (const auto& b : cj.at("basis")) cbasis.push_back(b.get<std::string>());
    for (const auto& b : cbasis) basis.push_back(b);
    components[e] = cbasis;
    if (cj.contains("structconst"))
      for (auto& [key, val] : structconst_from_json(cj.at("structconst"))) sc[key] = val;
  }
  // unit of R = Σ 1_e, once every component has one (decided after assembly)
  FiniteDimAlgebra r_nounit(basis, sc, std::nullopt);
  SparseVec r_unit;
  bool all_unital = true;
  for (const auto& [e, cbasis] : components) {
    if (cbasis.empty()) continue;
    FiniteDimAlgebra sub = restrict_to_labels(r_nounit, cbasis, std::nullopt);
    auto u = find_unit_iv(sub);
    if (!u) {
      all_unital = false;
      break;
    }
    r_unit += sub.basis().to_sparse(*u);
  }
  std::optional<SparseVec> unit;
  if (all_unital) unit = r_unit;
  auto r = std::make_shared<FiniteDimAlgebra>(basis, sc, std::move(unit));

  std::map<Label, LinMap> beta;
  if (j.contains("beta")) {
    for (auto it = j.at("beta").begin(); it != j.at("beta").end(); ++it) {
      const Label arrow = it.key();
      g->index_of(arrow);
      Basis dom{components.at(g->d(arrow))};
      Basis cod{components.at(g->r(arrow))};
      const json& m = it.value();
      if (!m.is_array() || static_cast<int>(m.size()) != cod.dim())
        throw structural_error("beta matrix for '" + arrow + "' has wrong row count");
      LinMap b(dom, cod);
      for (int col = 0; col < dom.dim(); ++col) {
        IVec image;
        for (int row = 0; row < cod.dim(); ++row) {
          const json& rj = m.at(row);
          if (!rj.is_array() || static_cast<int>(rj.size()) != dom.dim())
            throw structural_error("beta matrix for '" + arrow + "' has wrong column count");
          Rational c = coeff_from_json(rj.at(col));
          if (c != 0) image.emplace_back(row, c);
        }
        b.set_column_iv(col, std::move(image));
      }
      beta.emplace(arrow, std::move(b));
    }
  }
  GroupoidAction a = make_action(g, r, std::move(components), std::move(beta));
  ActionReport rep = validate_action(a, /*require_unital_components=*/true);
  if (!rep.ok) {
    std::string msg = "invalid action:";
    for (const auto& itv : rep.items)
      if (!itv.ok) msg += " [" + itv.name + (itv.witness.empty() ? "" : " at " + itv.witness) + "]";
    throw validation_error(msg);
  }
  return a;
}

GroupoidAction load_action_file(const std::filesystem::path& path) {
  return parse_action_json(read_file(path), path.parent_path());
}

std::string action_to_json(const GroupoidAction& a) {
  json out;
  out["groupoid"] = json::parse(groupoid_to_json(*a.groupoid));
  json comps = json::object();
  for (const auto& [e, labels] : a.components) {
    json cj;
    cj["basis"] = labels;
    // induced structconst of the component
    if (!labels.empty()) {
      FiniteDimAlgebra sub = restrict_to_labels(*a.total, labels, std::nullopt);
      cj["structconst"] = json::parse(algebra_to_json(sub)).at("structconst");
    } else {
      cj["structconst"] = json::array();
    }
    comps[e] = cj;
  }
  out["components"] = comps;
  json beta = json::object();
  for (const auto& [arrow, m] : a.beta) {
    if (a.groupoid->is_identity(arrow)) continue;
    json rows = json::array();
    for (int row = 0; row < m.codomain().dim(); ++row) {
      json r = json::array();
      for (int col = 0; col < m.domain().dim(); ++col) {
        Rational c = 0;
        for (const auto& [i, v] : m.column_iv(col))
          if (i == row) c = v;
        r.push_back(rational_to_string(c));
      }
      rows.push_back(r);
    }
    beta[arrow] = rows;
  }
  out["beta"] = beta;
  return out.dump(2);
}

GradedAlgebra parse_graded_json(const std::string& text, const std::filesystem::path& base_dir) {
  json j = json::parse(text);
  GroupoidPtr g = groupoid_from_json_value(j.at("groupoid"), base_dir);
  const json& aj = j.at("algebra");
  std::vector<Label> basis;
  for (const auto& b : aj.at("basis")) basis.push_back(b.get<std::string>());
  auto sc = structconst_from_json(aj.at("structconst"));
  if (!aj.contains("unit")) throw structural_error("graded algebra file must declare a unit");
  auto a = std::make_shared<FiniteDimAlgebra>(std::move(basis), sc,
                                              sparse_from_json(aj.at("unit")));
  std::map<Label, Label> grade;
  for (auto it = j.at("grade").begin(); it != j.at("grade").end(); ++it)
    grade[it.key()] = it.value().get<std::string>();
  GradedAlgebra graded = make_graded(g, a, std::move(grade));
  GradingReport rep = validate_grading(graded);
  if (!rep.ok) {
    std::string msg = "invalid grading:";
    for (const auto& itv : rep.items)
      if (!itv.ok) msg += " [" + itv.name + (itv.witness.empty() ? "" : " at " + itv.witness) + "]";
    throw validation_error(msg);
  }
  return graded;
}

GradedAlgebra load_graded_file(const std::filesystem::path& path) {
  return parse_graded_json(read_file(path), path.parent_path());
}

std::string graded_to_json(const GradedAlgebra& a) {
  json out;
  out["groupoid"] = json::parse(groupoid_to_json(*a.groupoid));
  out["algebra"] = json::parse(algebra_to_json(*a.algebra));
  json g = json::object();
  for (const auto& [l, arrow] : a.grade) g[l] = arrow;
  out["grade"] = g;
  return out.dump(2);
}

std::string groupoid_report_to_json(const GroupoidReport& rep) {
  json out;
  out["status"] = rep.ok ? "ok" : "violated";
  json v = json::array();
  for (const auto& viol : rep.violations)
    v.push_back(json{{"rule", viol.rule}, {"witness", viol.witness}});
  out["violations"] = v;
  return out.dump(2);
}

std::string duality_report_to_json(const DualityReport& rep, bool emit_iso_matrices) {
  json out;
  out["status"] = rep.ok ? "ok" : "violated";
  out["theorem"] = rep.theorem;
  json blocks = json::array();
  for (const auto& b : rep.blocks)
    blocks.push_back(json{{"e", b.e},
                          {"rep", b.rep},
                          {"n", b.n},
                          {"corner_dim", b.corner_dim},
                          {"verified", b.verified}});
  out["blocks"] = blocks;
  out["ledger"] = json{{"dim_decomposed", rep.dim_decomposed},
                       {"dim_target", rep.dim_target},
                       {"balanced", rep.ledger_balanced}};
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}});
  out["checks"] = checks;
  if (emit_iso_matrices && rep.decomposed && rep.target) {
    json iso;
    iso["target_basis"] = rep.target->basis().labels();
    json cols = json::object();
    for (int j = 0; j < rep.decomposed->dim(); ++j) {
      json col = json::object();
      for (const auto& [i, c] : rep.global_iso.column_iv(j))
        col[rep.target->label(i)] = rational_to_string(c);
      cols[rep.decomposed->label(j)] = col;
    }
    iso["columns"] = cols;
    out["iso"] = iso;
  }
  return out.dump(2);
}

std::string exactness_report_to_json(const Theorem52Result& result) {
  json out;
  out["status"] = result.ok ? "ok" : "violated";
  out["theorem"] = "5.2";
  out["dims"] = json{{"B", result.exact.dim_B},
                     {"C", result.exact.dim_C},
                     {"D", result.exact.dim_D},
                     {"ker_phi", result.exact.dim_ker},
                     {"image", result.exact.dim_image},
                     {"double_smash", result.ds.quotient->dim()}};
  json checks = json::array();
  auto add = [&](const std::vector<CheckItem>& items) {
    for (const auto& c : items)
      checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}});
  };
  add(result.splitting.checks);
  add(result.ds.checks);
  add(result.phi_data.checks);
  add(result.exact.checks);
  out["checks"] = checks;
  return out.dump(2);
}

}  // namespace io
}  // namespace gkit
