#include "gkit/groupoid.hpp"

#include <algorithm>
#include <set>

namespace gkit {

namespace {

std::string tuple_str(std::initializer_list<Label> ls) {
  std::string s = "(";
  bool first = true;
  for (const auto& l : ls) {
    if (!first) s += ", ";
    first = false;
    s += l;
  }
  return s + ")";
}

}  // namespace

Groupoid::Groupoid(std::vector<Label> arrows, std::map<std::pair<Label, Label>, Label> compose,
                   std::map<Label, Label> inv, std::map<Label, Label> dmap,
                   std::map<Label, Label> rmap, std::vector<Label> identities)
    : arrows_(std::move(arrows)) {
  const int n = arrows_.dim();
  comp_.assign(static_cast<std::size_t>(n) * n, -1);
  inv_.assign(n, -1);
  d_.assign(n, -1);
  r_.assign(n, -1);
  is_id_.assign(n, 0);
  for (const auto& [key, val] : compose) {
    int i = arrows_.index_of(key.first);
    int j = arrows_.index_of(key.second);
    comp_[static_cast<std::size_t>(i) * n + j] = arrows_.index_of(val);
  }
  auto fill = [&](const std::map<Label, Label>& m, std::vector<int>& out, const char* what) {
    for (const auto& [k, v] : m) out[arrows_.index_of(k)] = arrows_.index_of(v);
    for (int i = 0; i < n; ++i)
      if (out[i] < 0)
        throw structural_error(std::string(what) + " not total: missing entry for '" +
                               arrows_.label(i) + "'");
  };
  fill(inv, inv_, "inv");
  fill(dmap, d_, "dmap");
  fill(rmap, r_, "rmap");
  std::set<Label> seen;
  for (const auto& e : identities) {
    int i = arrows_.index_of(e);
    if (seen.insert(e).second) {
      is_id_[i] = 1;
    }
  }
  // keep identity list in arrow order
  for (int i = 0; i < n; ++i)
    if (is_id_[i]) identities_.push_back(arrows_.label(i));
}

Groupoid Groupoid::from_tables(std::vector<Label> arrows,
                               std::map<std::pair<Label, Label>, Label> compose,
                               std::map<Label, Label> inv) {
  std::map<Label, Label> dmap, rmap;
  std::set<Label> ids;
  for (const auto& g : arrows) {
    auto it = inv.find(g);
    if (it == inv.end()) throw structural_error("inv not total: missing entry for '" + g + "'");
    const Label& gi = it->second;
    auto dit = compose.find({gi, g});
    auto rit = compose.find({g, gi});
    if (dit == compose.end() || rit == compose.end())
      throw structural_error("cannot derive d/r for '" + g + "': g^{-1}g or g g^{-1} missing");
    dmap[g] = dit->second;
    rmap[g] = rit->second;
    ids.insert(dit->second);
    ids.insert(rit->second);
  }
  std::vector<Label> identities(ids.begin(), ids.end());
  return Groupoid(std::move(arrows), std::move(compose), std::move(inv), std::move(dmap),
                  std::move(rmap), std::move(identities));
}

Label Groupoid::compose(const Label& g, const Label& h) const {
  int k = comp_i(index_of(g), index_of(h));
  if (k < 0) throw argument_error("composition undefined: " + tuple_str({g, h}));
  return arrow(k);
}

std::vector<int> Groupoid::identity_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_id_[i]) out.push_back(i);
  return out;
}

GroupoidReport validate(const Groupoid& g) {
  GroupoidReport rep;
  auto flag = [&](const std::string& rule, const std::string& witness) {
    if (rep.violations.size() < 200) rep.violations.push_back({rule, witness});
  };
  const int n = g.size();
  auto L = [&](int i) { return g.arrow(i); };

  // axioms (i), (ii): existence coherence and associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.comp_i(a, b);
      for (int c = 0; c < n; ++c) {
        int bc = g.comp_i(b, c);
        int lhs = (ab >= 0) ? g.comp_i(ab, c) : -1;   // (ab)c
        int rhs = (bc >= 0) ? g.comp_i(a, bc) : -1;   // a(bc)
        if ((lhs >= 0) != (rhs >= 0))
          flag("axiom(i)", tuple_str({L(a), L(b), L(c)}) + ": one association defined, other not");
        else if (lhs >= 0 && lhs != rhs)
          flag("axiom(i)", tuple_str({L(a), L(b), L(c)}) + ": (gh)l=" + L(lhs) + " != g(hl)=" + L(rhs));
        bool both = ab >= 0 && bc >= 0;
        if ((rhs >= 0) != both)
          flag("axiom(ii)", tuple_str({L(a), L(b), L(c)}));
      }
    }

  // axiom (iii): g d(g) = g = r(g) g, with uniqueness
  for (int a = 0; a < n; ++a) {
    int da = g.d_i(a), ra = g.r_i(a);
    if (g.comp_i(a, da) != a) flag("axiom(iii)", L(a) + ": g d(g) != g");
    if (g.comp_i(ra, a) != a) flag("axiom(iii)", L(a) + ": r(g) g != g");
    for (int x = 0; x < n; ++x) {
      if (g.comp_i(a, x) == a && x != da)
        flag("axiom(iii)", tuple_str({L(a), L(x)}) + ": second right identity");
      if (g.comp_i(x, a) == a && x != ra)
        flag("axiom(iii)", tuple_str({L(a), L(x)}) + ": second left identity");
    }
  }

  // axiom (iv): declared inverses produce d and r
  for (int a = 0; a < n; ++a) {
    int ai = g.inv_i(a);
    if (g.comp_i(ai, a) != g.d_i(a)) flag("axiom(iv)", L(a) + ": g^{-1}g != d(g)");
    if (g.comp_i(a, ai) != g.r_i(a)) flag("axiom(iv)", L(a) + ": g g^{-1} != r(g)");
  }

  // derived law (i): uniqueness of the inverse
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      if (g.comp_i(x, a) == g.d_i(a) && g.comp_i(a, x) == g.r_i(a) && x != g.inv_i(a))
        flag("derived(i)", tuple_str({L(a), L(x)}) + ": second inverse");

  // (ii), (iii)
  for (int a = 0; a < n; ++a) {
    int ai = g.inv_i(a);
    if (g.d_i(ai) != g.r_i(a) || g.r_i(ai) != g.d_i(a)) flag("derived(ii)", L(a));
    if (g.inv_i(ai) != a) flag("derived(iii)", L(a));
  }

  // (iv): composability criterion
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((g.comp_i(a, b) >= 0) != (g.d_i(a) == g.r_i(b)))
        flag("derived(iv)", tuple_str({L(a), L(b)}));

  // (v): inverse of a product
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool ab = g.comp_i(a, b) >= 0;
      bool ba = g.comp_i(g.inv_i(b), g.inv_i(a)) >= 0;
      if (ab != ba) {
        flag("derived(v)", tuple_str({L(a), L(b)}) + ": composability mismatch");
      } else if (ab && g.inv_i(g.comp_i(a, b)) != g.comp_i(g.inv_i(b), g.inv_i(a))) {
        flag("derived(v)", tuple_str({L(a), L(b)}) + ": (gh)^{-1} != h^{-1}g^{-1}");
      }
    }

  // (vi)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.comp_i(a, b);
      if (ab >= 0 && (g.d_i(ab) != g.d_i(b) || g.r_i(ab) != g.r_i(a)))
        flag("derived(vi)", tuple_str({L(a), L(b)}));
    }

  // (vii)
  for (int e = 0; e < n; ++e)
    if (g.is_identity_i(e) &&
        (g.d_i(e) != e || g.r_i(e) != e || g.inv_i(e) != e))
      flag("derived(vii)", L(e));

  // (viii)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.comp_i(a, b);
      if (ab >= 0 && (g.is_identity_i(ab) != (a == g.inv_i(b))))
        flag("derived(viii)", tuple_str({L(a), L(b)}));
    }

  // (ix), (x): solvability, found by search and verified
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool found_right = false, found_left = false;
      for (int l = 0; l < n; ++l) {
        if (g.comp_i(b, l) == a) found_right = true;
        if (g.comp_i(l, b) == a) found_left = true;
      }
      if (found_right != (g.r_i(a) == g.r_i(b))) flag("derived(ix)", tuple_str({L(a), L(b)}));
      if (found_left != (g.d_i(a) == g.d_i(b))) flag("derived(x)", tuple_str({L(a), L(b)}));
    }

  // identities = {d(g)} ∪ {r(g)}
  {
    std::set<int> derived;
    for (int a = 0; a < n; ++a) {
      derived.insert(g.d_i(a));
      derived.insert(g.r_i(a));
    }
    for (int i = 0; i < n; ++i) {
      bool declared = g.is_identity_i(i);
      bool actual = derived.count(i) > 0;
      if (declared != actual) flag("identities", L(i));
    }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

ArrowSets arrow_sets(const Groupoid& g) {
  ArrowSets out;
  for (const auto& e : g.identities()) {
    out.isotropy[e] = {};
    out.sources[e] = {};
    out.ranges[e] = {};
  }
  for (const auto& a : g.arrows()) {
    out.sources[g.d(a)].push_back(a);
    out.ranges[g.r(a)].push_back(a);
    if (g.d(a) == g.r(a)) out.isotropy[g.d(a)].push_back(a);
  }
  for (const auto& a : g.arrows())
    for (const auto& b : g.arrows())
      if (g.composable(a, b)) out.composable.emplace_back(a, b);
  return out;
}

Groupoid from_group(const std::vector<Label>& elements,
                    const std::map<std::pair<Label, Label>, Label>& mult_table) {
  // The table must define a group: total, closed, associative, with identity
  // and inverses.
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw validation_error("from_group: empty element set");
  Basis b{elements};
  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
  for (const auto& [key, val] : mult_table) {
    int i = b.index_of(key.first), j = b.index_of(key.second);
    t[static_cast<std::size_t>(i) * n + j] = b.index_of(val);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t[static_cast<std::size_t>(i) * n + j] < 0)
        throw validation_error("from_group: multiplication table not total");
  auto T = [&](int i, int j) { return t[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (T(T(i, j), k) != T(i, T(j, k)))
          throw validation_error("from_group: table not associative at " +
                                 tuple_str({elements[i], elements[j], elements[k]}));
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool is_id = true;
    for (int i = 0; i < n; ++i) is_id = is_id && T(e, i) == i && T(i, e) == i;
    if (is_id) {
      id = e;
      break;
    }
  }
  if (id < 0) throw validation_error("from_group: no identity element");
  std::map<Label, Label> inv;
  for (int i = 0; i < n; ++i) {
    int ii = -1;
    for (int j = 0; j < n; ++j)
      if (T(i, j) == id && T(j, i) == id) {
        ii = j;
        break;
      }
    if (ii < 0) throw validation_error("from_group: '" + elements[i] + "' has no inverse");
    inv[elements[i]] = elements[ii];
  }
  std::map<std::pair<Label, Label>, Label> compose;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) compose[{elements[i], elements[j]}] = elements[T(i, j)];
  std::map<Label, Label> dmap, rmap;
  for (int i = 0; i < n; ++i) {
    dmap[elements[i]] = elements[id];
    rmap[elements[i]] = elements[id];
  }
  return Groupoid(elements, std::move(compose), std::move(inv), std::move(dmap), std::move(rmap),
                  {elements[id]});
}

Groupoid pair_groupoid(int n) {
  if (n < 1) throw argument_error("pair_groupoid: n must be >= 1");
  // Arrow (j,i) means i -> j; compose((k,j),(j,i)) = (k,i).
  auto name = [](int j, int i) {
    return "(" + std::to_string(j) + "," + std::to_string(i) + ")";
  };
  std::vector<Label> arrows;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) arrows.push_back(name(j, i));
  std::map<std::pair<Label, Label>, Label> compose;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i) compose[{name(k, j), name(j, i)}] = name(k, i);
  std::map<Label, Label> inv, dmap, rmap;
  std::vector<Label> identities;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      inv[name(j, i)] = name(i, j);
      dmap[name(j, i)] = name(i, i);
      rmap[name(j, i)] = name(j, j);
    }
  for (int i = 1; i <= n; ++i) identities.push_back(name(i, i));
  return Groupoid(std::move(arrows), std::move(compose), std::move(inv), std::move(dmap),
                  std::move(rmap), std::move(identities));
}

Groupoid disjoint_union(const Groupoid& g1, const Groupoid& g2, const std::string& tag1,
                        const std::string& tag2) {
  if (tag1 == tag2) throw argument_error("disjoint_union: tags must differ");
  auto t1 = [&](const Label& l) { return tag1 + ":" + l; };
  auto t2 = [&](const Label& l) { return tag2 + ":" + l; };
  std::vector<Label> arrows;
  for (const auto& a : g1.arrows()) arrows.push_back(t1(a));
  for (const auto& a : g2.arrows()) arrows.push_back(t2(a));
  std::map<std::pair<Label, Label>, Label> compose;
  std::map<Label, Label> inv, dmap, rmap;
  std::vector<Label> identities;
  for (const auto& a : g1.arrows())
    for (const auto& b : g1.arrows())
      if (g1.composable(a, b)) compose[{t1(a), t1(b)}] = t1(g1.compose(a, b));
  for (const auto& a : g2.arrows())
    for (const auto& b : g2.arrows())
      if (g2.composable(a, b)) compose[{t2(a), t2(b)}] = t2(g2.compose(a, b));
  for (const auto& a : g1.arrows()) {
    inv[t1(a)] = t1(g1.inv(a));
    dmap[t1(a)] = t1(g1.d(a));
    rmap[t1(a)] = t1(g1.r(a));
  }
  for (const auto& a : g2.arrows()) {
    inv[t2(a)] = t2(g2.inv(a));
    dmap[t2(a)] = t2(g2.d(a));
    rmap[t2(a)] = t2(g2.r(a));
  }
  for (const auto& e : g1.identities()) identities.push_back(t1(e));
  for (const auto& e : g2.identities()) identities.push_back(t2(e));
  return Groupoid(std::move(arrows), std::move(compose), std::move(inv), std::move(dmap),
                  std::move(rmap), std::move(identities));
}

}  // namespace gkit
