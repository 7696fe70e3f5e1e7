#include "gkit/action.hpp"

#include <algorithm>
#include <set>

namespace gkit {

const std::vector<Label>& GroupoidAction::component(const Label& e) const {
  auto it = components.find(e);
  if (it == components.end()) throw structural_error("no component for identity '" + e + "'");
  return it->second;
}

const std::vector<Label>& GroupoidAction::component_of_arrow(const Label& g) const {
  return component(groupoid->r(g));
}

bool GroupoidAction::components_unital() const {
  for (const auto& [e, labels] : components)
    if (!component_units.count(e)) return false;
  return true;
}

SparseVec GroupoidAction::unit_of(const Label& e) const {
  auto it = component_units.find(e);
  if (it == component_units.end())
    throw validation_error("component E_" + e + " has no identity element");
  return it->second;
}

GroupoidAction make_action(GroupoidPtr g, AlgebraPtr total,
                           std::map<Label, std::vector<Label>> components,
                           std::map<Label, LinMap> beta) {
  GroupoidAction a;
  a.groupoid = std::move(g);
  a.total = std::move(total);

  // components must be indexed by the identities and partition R's basis
  std::set<Label> ids(a.groupoid->identities().begin(), a.groupoid->identities().end());
  std::vector<char> covered(a.total->dim(), 0);
  for (auto& [e, labels] : components) {
    if (!ids.count(e)) throw structural_error("component key '" + e + "' is not an identity");
    std::sort(labels.begin(), labels.end(), [&](const Label& x, const Label& y) {
      return a.total->index_of(x) < a.total->index_of(y);
    });
    for (const auto& l : labels) {
      int i = a.total->index_of(l);
      if (covered[i]) throw structural_error("component bases not disjoint at '" + l + "'");
      covered[i] = 1;
    }
  }
  for (const auto& e : a.groupoid->identities())
    if (!components.count(e)) components[e] = {};
  for (int i = 0; i < a.total->dim(); ++i)
    if (!covered[i])
      throw structural_error("component bases do not span: '" + a.total->label(i) +
                             "' belongs to no E_e");
  a.components = std::move(components);

  // beta maps: right bases; identity arrows default to the identity map
  for (const auto& arrow : a.groupoid->arrows()) {
    Basis dom{a.component(a.groupoid->d(arrow))};
    Basis cod{a.component(a.groupoid->r(arrow))};
    auto it = beta.find(arrow);
    if (it == beta.end()) {
      if (!a.groupoid->is_identity(arrow))
        throw structural_error("missing beta for arrow '" + arrow + "'");
      a.beta.emplace(arrow, LinMap::identity(dom));
      continue;
    }
    if (!(it->second.domain() == dom) || !(it->second.codomain() == cod))
      throw structural_error("beta for '" + arrow + "' has wrong component bases");
    a.beta.emplace(arrow, it->second);
  }

  // component units, where they exist
  for (const auto& [e, labels] : a.components) {
    if (labels.empty()) {
      a.component_units[e] = SparseVec{};  // zero component: unit is 0
      continue;
    }
    try {
      FiniteDimAlgebra sub = restrict_to_labels(*a.total, labels, std::nullopt);
      if (auto u = find_unit_iv(sub)) a.component_units[e] = sub.basis().to_sparse(*u);
    } catch (const internal_error&) {
      // not multiplicatively closed; validate_action will flag the ideal law
    }
  }
  return a;
}

namespace {

bool support_inside(const SparseVec& v, const std::set<Label>& allowed) {
  for (const auto& [l, c] : v.entries())
    if (!allowed.count(l)) return false;
  return true;
}

}  // namespace

ActionReport validate_action(const GroupoidAction& a, bool require_unital_components) {
  ActionReport rep;
  const Groupoid& G = *a.groupoid;
  const FiniteDimAlgebra& R = *a.total;
  auto item = [&](const std::string& name, bool ok, const std::string& witness) {
    rep.items.push_back({name, ok, ok ? "" : witness});
  };

  std::map<Label, std::set<Label>> comp_sets;
  for (const auto& [e, labels] : a.components) comp_sets[e] = {labels.begin(), labels.end()};

  // each E_e is a two-sided ideal of R
  for (const auto& [e, labels] : a.components) {
    bool ok = true;
    std::string w;
    for (const auto& y : labels) {
      SparseVec ey = SparseVec::basis(y);
      for (const auto& x : R.basis().labels()) {
        SparseVec ex = SparseVec::basis(x);
        if (!support_inside(R.mul(ex, ey), comp_sets[e]) ||
            !support_inside(R.mul(ey, ex), comp_sets[e])) {
          ok = false;
          w = "(" + x + ", " + y + ")";
          break;
        }
      }
      if (!ok) break;
    }
    item("E_" + e + " ideal", ok, w);
  }

  // direct sum: cross products vanish (partition is structural)
  {
    bool ok = true;
    std::string w;
    for (const auto& [e, le] : a.components) {
      for (const auto& [f, lf] : a.components) {
        if (e == f) continue;
        for (const auto& y : le)
          for (const auto& z : lf)
            if (!R.mul(SparseVec::basis(y), SparseVec::basis(z)).is_zero()) {
              ok = false;
              w = "(" + y + ", " + z + ")";
            }
      }
    }
    item("E_e E_f = 0 for e != f", ok, w);
  }

  // unitality of components
  rep.components_unital = true;
  for (const auto& [e, labels] : a.components) {
    bool has = a.component_units.count(e) > 0;
    if (!has) rep.components_unital = false;
    if (require_unital_components) item("E_" + e + " unital", has, "no identity element found");
  }
  if (require_unital_components && rep.components_unital && R.has_unit()) {
    SparseVec sum;
    for (const auto& [e, u] : a.component_units) sum += u;
    item("Σ 1_e = 1_R", sum == R.unit(), sum.to_string());
  }

  // beta_g: ring isomorphism E_{g^{-1}} -> E_g
  for (const auto& g : G.arrows()) {
    const LinMap& b = a.beta.at(g);
    bool bij = b.is_bijective();
    item("beta_" + g + " bijective", bij, "rank deficient");
    bool mult = true;
    std::string w;
    const auto& dom_labels = a.component(G.d(g));
    Basis dom{dom_labels};
    for (const auto& y : dom_labels) {
      for (const auto& z : dom_labels) {
        SparseVec prod = R.mul(SparseVec::basis(y), SparseVec::basis(z));
        // product of component elements stays in the component when the ideal
        // law holds; guard anyway so invalid inputs report rather than throw
        bool inside = support_inside(prod, comp_sets.at(G.d(g)));
        SparseVec lhs = inside ? b.apply(prod) : SparseVec{};
        SparseVec rhs = R.mul(b.apply(SparseVec::basis(y)), b.apply(SparseVec::basis(z)));
        // rhs lives in E_{r(g)} as a subspace of R; lhs is over component labels
        if (!inside || !(lhs == rhs)) {
          mult = false;
          w = "(" + y + ", " + z + ")";
          break;
        }
      }
      if (!mult) break;
    }
    item("beta_" + g + " multiplicative", mult, w);
    if (a.component_units.count(G.d(g)) && a.component_units.count(G.r(g))) {
      item("beta_" + g + " unit-preserving", b.apply(a.unit_of(G.d(g))) == a.unit_of(G.r(g)), "");
    }
  }

  // condition (i)
  for (const auto& e : G.identities()) {
    Basis dom{a.component(e)};
    item("condition(i) beta_" + e + " = id", a.beta.at(e) == LinMap::identity(dom), "");
  }

  // condition (ii) on all composable pairs
  {
    bool ok = true;
    std::string w;
    for (const auto& g : G.arrows())
      for (const auto& h : G.arrows()) {
        if (!G.composable(g, h)) continue;
        if (!(a.beta.at(g).compose(a.beta.at(h)) == a.beta.at(G.compose(g, h)))) {
          ok = false;
          w = "(" + g + ", " + h + ")";
        }
      }
    item("condition(ii) beta_g beta_h = beta_gh", ok, w);
  }

  rep.ok = true;
  for (const auto& it : rep.items) rep.ok = rep.ok && it.ok;
  return rep;
}

bool actions_equal(const GroupoidAction& a, const GroupoidAction& b) {
  if (a.components != b.components) return false;
  for (const auto& [g, m] : a.beta) {
    auto it = b.beta.find(g);
    if (it == b.beta.end() || !(m == it->second)) return false;
  }
  return a.beta.size() == b.beta.size();
}

ModuleReport check_module(const ModuleAlgebra& m) {
  ModuleReport rep;
  const Groupoid& G = *m.groupoid;
  const FiniteDimAlgebra& R = *m.algebra;
  auto item = [&](const std::string& name, bool ok, const std::string& witness) {
    rep.items.push_back({name, ok, ok ? "" : witness});
  };

  // 1_KG acts as the identity
  {
    LinMap sum(R.basis(), R.basis());
    bool first = true;
    for (const auto& e : G.identities()) {
      if (first) {
        sum = m.action.at(e);
        first = false;
      } else {
        LinMap next(R.basis(), R.basis());
        for (int j = 0; j < R.dim(); ++j) {
          IVec col = sum.column_iv(j);
          ivec_add_scaled(col, m.action.at(e).column_iv(j), Rational(1));
          next.set_column_iv(j, std::move(col));
        }
        sum = std::move(next);
      }
    }
    item("1_KG · r = r", sum == LinMap::identity(R.basis()), "");
  }

  // u_g (u_h r) = (u_g u_h) r
  {
    bool ok = true;
    std::string w;
    for (const auto& g : G.arrows())
      for (const auto& h : G.arrows()) {
        LinMap lhs = m.action.at(g).compose(m.action.at(h));
        if (G.composable(g, h)) {
          if (!(lhs == m.action.at(G.compose(g, h)))) {
            ok = false;
            w = "(" + g + ", " + h + ")";
          }
        } else {
          if (!(lhs == LinMap::zero(R.basis(), R.basis()))) {
            ok = false;
            w = "(" + g + ", " + h + ") should act as 0";
          }
        }
      }
    item("u_g(u_h·r) = (u_g u_h)·r", ok, w);
  }

  // u_g (xy) = (u_g x)(u_g y)
  {
    bool ok = true;
    std::string w;
    for (const auto& g : G.arrows()) {
      const LinMap& act = m.action.at(g);
      for (int i = 0; i < R.dim() && ok; ++i)
        for (int j = 0; j < R.dim(); ++j) {
          IVec lhs = act.apply_iv(R.prod(i, j));
          IVec rhs = R.mul_iv(act.column_iv(i), act.column_iv(j));
          if (lhs != rhs) {
            ok = false;
            w = "(" + g + "; " + R.label(i) + ", " + R.label(j) + ")";
            break;
          }
        }
      if (!ok) break;
    }
    item("u_g·(xy) = (u_g·x)(u_g·y)", ok, w);
  }

  // u_g 1_R = u_{r(g)} 1_R
  {
    bool ok = true;
    std::string w;
    for (const auto& g : G.arrows()) {
      IVec lhs = m.action.at(g).apply_iv(R.unit_iv());
      IVec rhs = m.action.at(G.r(g)).apply_iv(R.unit_iv());
      if (lhs != rhs) {
        ok = false;
        w = g;
      }
    }
    item("u_g·1_R = u_{r(g)}·1_R", ok, w);
  }

  rep.ok = true;
  for (const auto& it : rep.items) rep.ok = rep.ok && it.ok;
  return rep;
}

ModuleAlgebra action_to_module(const GroupoidAction& a) {
  if (!a.components_unital())
    throw validation_error("action_to_module requires unital components");
  const Groupoid& G = *a.groupoid;
  const FiniteDimAlgebra& R = *a.total;
  ModuleAlgebra m;
  m.groupoid = a.groupoid;
  m.algebra = a.total;
  for (const auto& g : G.arrows()) {
    const LinMap& b = a.beta.at(g);
    Basis dom{a.component(G.d(g))};
    SparseVec one_inv = a.unit_of(G.d(g));  // 1_{g^{-1}} = 1_{d(g)}
    LinMap act(R.basis(), R.basis());
    for (int i = 0; i < R.dim(); ++i) {
      SparseVec proj = R.mul(SparseVec::basis(R.label(i)), one_inv);  // r 1_{g^{-1}}
      act.set_column_iv(i, R.basis().to_ivec(b.apply(proj)));
    }
    m.action.emplace(g, std::move(act));
  }
  ModuleReport chk = check_module(m);
  if (!chk.ok) throw internal_error("action_to_module produced an invalid module structure");
  return m;
}

GroupoidAction module_to_action(const ModuleAlgebra& m) {
  const Groupoid& G = *m.groupoid;
  const FiniteDimAlgebra& R = *m.algebra;
  // 1_g = u_g · 1_R must form central orthogonal idempotents summing to 1_R
  std::map<Label, IVec> ones;
  for (const auto& g : G.arrows()) ones[g] = m.action.at(g).apply_iv(R.unit_iv());
  IVec total;
  for (const auto& e : G.identities()) {
    const IVec& oe = ones[e];
    if (R.mul_iv(oe, oe) != oe)
      throw validation_error("u_" + e + "·1_R is not idempotent");
    if (find_noncentral_witness(R, oe))
      throw validation_error("u_" + e + "·1_R is not central");
    for (const auto& f : G.identities()) {
      if (e == f) continue;
      if (!R.mul_iv(oe, ones[f]).empty())
        throw validation_error("u_e·1_R family not orthogonal at (" + e + ", " + f + ")");
    }
    ivec_add_scaled(total, oe, Rational(1));
  }
  if (total != R.unit_iv()) throw validation_error("Σ_e u_e·1_R != 1_R");

  // E_e = R 1_e by exact column reduction of r ↦ r 1_e
  std::map<Label, std::vector<Label>> components;
  for (const auto& e : G.identities()) {
    EchelonSpace span(R.dim());
    for (int i = 0; i < R.dim(); ++i) span.insert(R.mul_iv({{i, Rational(1)}}, ones[e]));
    std::vector<Label> labels;
    for (const auto& [p, row] : span.rows()) {
      if (row.size() != 1 || row.front().second != 1)
        throw validation_error(
            "component span of E_" + e +
            " is not aligned with R's basis labels; the action type needs an adapted basis");
      labels.push_back(R.label(p));
    }
    components[e] = std::move(labels);
  }

  // beta_g = restriction of u_g · (-) to E_{g^{-1}}
  std::map<Label, LinMap> beta;
  for (const auto& g : G.arrows()) {
    Basis dom{components[G.d(g)]};
    Basis cod{components[G.r(g)]};
    LinMap b(dom, cod);
    for (int j = 0; j < dom.dim(); ++j) {
      SparseVec img = m.action.at(g).apply(SparseVec::basis(dom.label(j)));
      b.set_column_iv(j, cod.to_ivec(img));
    }
    beta.emplace(g, std::move(b));
  }
  GroupoidAction a = make_action(m.groupoid, m.algebra, std::move(components), std::move(beta));
  ActionReport rep = validate_action(a, true);
  if (!rep.ok) throw validation_error("module_to_action: derived action fails validation");
  return a;
}

SkewGroupoidRing skew_ring(const GroupoidAction& a) {
  const Groupoid& G = *a.groupoid;
  const FiniteDimAlgebra& R = *a.total;
  SkewGroupoidRing out;
  out.groupoid = a.groupoid;
  out.total_R = a.total;

  std::vector<Label> labels;
  std::vector<std::pair<int, int>> parts;

  for (int gi = 0; gi < G.size(); ++gi) {
    const Label& g = G.arrow(gi);
    for (const auto& x : a.component_of_arrow(g)) {
      labels.push_back(delta_label(x, g));
      parts.emplace_back(R.index_of(x), gi);
      out.grade[labels.back()] = g;
    }
  }
  Basis basis{labels};
  const int n = basis.dim();
  std::vector<IVec> prod(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto [xi, gi] = parts[i];
    const Label& g = G.arrow(gi);
    for (int j = 0; j < n; ++j) {
      auto [yj, hj] = parts[j];
      int ghi = G.comp_i(gi, hj);
      if (ghi < 0) continue;
      const Label& gh = G.arrow(ghi);
      // y lives in E_h = E_{d(g)}; beta_g(y) in E_g; x beta_g(y) in E_g = E_{gh}
      SparseVec by = a.beta.at(g).apply(SparseVec::basis(R.label(yj)));
      SparseVec xby = R.mul(SparseVec::basis(R.label(xi)), by);
      IVec out_iv;
      for (const auto& [t, c] : xby.entries()) {
        int k = basis.try_index(delta_label(t, gh));
        if (k < 0)
          throw internal_error("skew ring product left E_{gh} at (" + basis.label(i) + ")(" +
                               basis.label(j) + ")");
        out_iv.emplace_back(k, c);
      }
      std::sort(out_iv.begin(), out_iv.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      prod[static_cast<std::size_t>(i) * n + j] = std::move(out_iv);
    }
  }
  std::optional<IVec> unit;
  if (a.components_unital()) {
    SparseVec u;
    for (const auto& e : G.identities()) {
      SparseVec one_e = a.unit_of(e);
      for (const auto& [x, c] : one_e.entries()) u.add(delta_label(x, e), c);
    }
    unit = basis.to_ivec(u);
  }
  out.algebra = std::make_shared<FiniteDimAlgebra>(std::move(basis), std::move(prod), std::move(unit));
  out.parts = std::move(parts);
  return out;
}

}  // namespace gkit
