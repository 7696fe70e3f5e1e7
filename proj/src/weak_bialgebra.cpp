#include "gkit/weak_bialgebra.hpp"

namespace gkit {

namespace {

void t2_add(Tensor2& dst, const std::pair<int, int>& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = dst.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

void t3_add(Tensor3& dst, const std::array<int, 3>& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = dst.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

std::string t2_str(const FiniteDimAlgebra& a, const Tensor2& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += rational_to_string(c) + "*";
    s += a.label(k.first) + "⊗" + a.label(k.second);
  }
  return s;
}

}  // namespace

Tensor2 WeakBialgebra::comult_of(const IVec& x) const {
  Tensor2 out;
  for (const auto& [i, c] : x)
    for (const auto& [k, d] : comult[i]) t2_add(out, k, c * d);
  return out;
}

Rational WeakBialgebra::counit_of(const IVec& x) const {
  Rational out = 0;
  for (const auto& [i, c] : x) out += c * counit[i];
  return out;
}

Tensor2 tensor2_mul(const FiniteDimAlgebra& a, const Tensor2& x, const Tensor2& y) {
  Tensor2 out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      const IVec& left = a.prod(kx.first, ky.first);
      const IVec& right = a.prod(kx.second, ky.second);
      if (left.empty() || right.empty()) continue;
      Rational c = cx * cy;
      for (const auto& [i, ci] : left)
        for (const auto& [j, cj] : right) t2_add(out, {i, j}, c * ci * cj);
    }
  return out;
}

Tensor3 tensor3_mul(const FiniteDimAlgebra& a, const Tensor3& x, const Tensor3& y) {
  Tensor3 out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      const IVec& t0 = a.prod(kx[0], ky[0]);
      const IVec& t1 = a.prod(kx[1], ky[1]);
      const IVec& t2 = a.prod(kx[2], ky[2]);
      if (t0.empty() || t1.empty() || t2.empty()) continue;
      Rational c = cx * cy;
      for (const auto& [i, ci] : t0)
        for (const auto& [j, cj] : t1)
          for (const auto& [k, ck] : t2) t3_add(out, {i, j, k}, c * ci * cj * ck);
    }
  return out;
}

GroupoidAlgebra build_kg(const GroupoidPtr& g) {
  const int n = g->size();
  std::vector<Label> labels;
  labels.reserve(n);
  for (const auto& a : g->arrows()) labels.push_back(u_label(a));
  Basis basis{labels};
  std::vector<IVec> prod(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = g->comp_i(i, j);
      if (k >= 0) prod[static_cast<std::size_t>(i) * n + j] = {{k, Rational(1)}};
    }
  IVec unit;
  for (int e : g->identity_indices()) unit.emplace_back(e, Rational(1));
  GroupoidAlgebra out;
  out.groupoid = g;
  out.algebra = std::make_shared<FiniteDimAlgebra>(std::move(basis), std::move(prod), std::move(unit));
  out.comult.resize(n);
  out.counit.assign(n, Rational(1));
  for (int i = 0; i < n; ++i) out.comult[i] = Tensor2{{{i, i}, Rational(1)}};
  out.antipode = LinMap(out.algebra->basis(), out.algebra->basis());
  for (int i = 0; i < n; ++i) out.antipode.set_column_iv(i, {{g->inv_i(i), Rational(1)}});
  out.kind = "KG";
  return out;
}

DualGroupoidAlgebra build_kgdual(const GroupoidPtr& g) {
  const int n = g->size();
  std::vector<Label> labels;
  labels.reserve(n);
  for (const auto& a : g->arrows()) labels.push_back(v_label(a));
  Basis basis{labels};
  std::vector<IVec> prod(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) prod[static_cast<std::size_t>(i) * n + i] = {{i, Rational(1)}};
  IVec unit;
  for (int i = 0; i < n; ++i) unit.emplace_back(i, Rational(1));
  DualGroupoidAlgebra out;
  out.groupoid = g;
  out.algebra = std::make_shared<FiniteDimAlgebra>(std::move(basis), std::move(prod), std::move(unit));
  out.comult.resize(n);
  // Δ(v_g) = Σ_{hl=g} v_h ⊗ v_l
  for (int h = 0; h < n; ++h)
    for (int l = 0; l < n; ++l) {
      int hl = g->comp_i(h, l);
      if (hl >= 0) t2_add(out.comult[hl], {h, l}, Rational(1));
    }
  out.counit.assign(n, Rational(0));
  for (int e : g->identity_indices()) out.counit[e] = 1;
  out.antipode = LinMap(out.algebra->basis(), out.algebra->basis());
  for (int i = 0; i < n; ++i) out.antipode.set_column_iv(i, {{g->inv_i(i), Rational(1)}});
  out.kind = "KG*";
  return out;
}

WeakAxiomsReport weak_axioms(const WeakBialgebra& h, ExecPolicy policy) {
  (void)policy;  // scans below are cheap at desk scale; kernels handle the big ones
  WeakAxiomsReport rep;
  const FiniteDimAlgebra& A = *h.algebra;
  const int n = A.dim();

  // axiom (i): Δ multiplicative, checked on all basis pairs
  {
    WeakAxiomItem item{"axiom(i) Δ(xy)=Δ(x)Δ(y)", true, ""};
    for (int i = 0; i < n && item.ok; ++i)
      for (int j = 0; j < n && item.ok; ++j) {
        Tensor2 lhs = h.comult_of(A.prod(i, j));
        Tensor2 rhs = tensor2_mul(A, h.comult[i], h.comult[j]);
        if (lhs != rhs) {
          item.ok = false;
          item.witness = "(" + A.label(i) + ", " + A.label(j) + ")";
        }
      }
    rep.items.push_back(std::move(item));
  }

  // axiom (ii): Δ²(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)
  {
    WeakAxiomItem item{"axiom(ii) Δ²(1) compatibility", true, ""};
    Tensor2 d1 = h.comult_unit();
    Tensor3 d2;  // (Δ⊗I)Δ(1)
    for (const auto& [k, c] : d1)
      for (const auto& [k2, c2] : h.comult[k.first]) t3_add(d2, {k2.first, k2.second, k.second}, c * c2);
    Tensor3 left, right;  // Δ(1)⊗1 and 1⊗Δ(1)
    for (const auto& [k, c] : d1)
      for (const auto& [i, ci] : A.unit_iv()) {
        t3_add(left, {k.first, k.second, i}, c * ci);
        t3_add(right, {i, k.first, k.second}, c * ci);
      }
    Tensor3 p1 = tensor3_mul(A, left, right);
    Tensor3 p2 = tensor3_mul(A, right, left);
    if (d2 != p1) {
      item.ok = false;
      item.witness = "Δ²(1) != (Δ(1)⊗1)(1⊗Δ(1))";
    } else if (d2 != p2) {
      item.ok = false;
      item.witness = "Δ²(1) != (1⊗Δ(1))(Δ(1)⊗1)";
    }
    rep.items.push_back(std::move(item));
  }

  // axiom (iii): ε(xyz) = Σ ε(xy₁)ε(y₂z) = Σ ε(xy₂)ε(y₁z); both sides are
  // trilinear in (x,y,z), so basis triples decide the general case
  {
    WeakAxiomItem item{"axiom(iii) ε(xyz) expansions", true, ""};
    for (int x = 0; x < n && item.ok; ++x)
      for (int y = 0; y < n && item.ok; ++y)
        for (int z = 0; z < n && item.ok; ++z) {
          Rational lhs = h.counit_of(A.mul_iv(A.prod(x, y), {{z, Rational(1)}}));
          Rational s12 = 0, s21 = 0;
          IVec ex = {{x, Rational(1)}};
          IVec ez = {{z, Rational(1)}};
          for (const auto& [k, c] : h.comult[y]) {
            IVec y1 = {{k.first, Rational(1)}};
            IVec y2 = {{k.second, Rational(1)}};
            s12 += c * h.counit_of(A.mul_iv(ex, y1)) * h.counit_of(A.mul_iv(y2, ez));
            s21 += c * h.counit_of(A.mul_iv(ex, y2)) * h.counit_of(A.mul_iv(y1, ez));
          }
          if (lhs != s12 || lhs != s21) {
            item.ok = false;
            item.witness = "(" + A.label(x) + ", " + A.label(y) + ", " + A.label(z) + ")";
          }
        }
    rep.items.push_back(std::move(item));
  }

  // coalgebra laws: coassociativity and the counit law, per basis element
  {
    WeakAxiomItem item{"coassociativity", true, ""};
    for (int x = 0; x < n && item.ok; ++x) {
      Tensor3 lhs, rhs;
      for (const auto& [k, c] : h.comult[x]) {
        for (const auto& [k2, c2] : h.comult[k.first]) t3_add(lhs, {k2.first, k2.second, k.second}, c * c2);
        for (const auto& [k2, c2] : h.comult[k.second]) t3_add(rhs, {k.first, k2.first, k2.second}, c * c2);
      }
      if (lhs != rhs) {
        item.ok = false;
        item.witness = A.label(x);
      }
    }
    rep.items.push_back(std::move(item));
  }
  {
    WeakAxiomItem item{"counit law", true, ""};
    for (int x = 0; x < n && item.ok; ++x) {
      IVec left, right;
      for (const auto& [k, c] : h.comult[x]) {
        ivec_add_scaled(left, {{k.second, Rational(1)}}, c * h.counit[k.first]);
        ivec_add_scaled(right, {{k.first, Rational(1)}}, c * h.counit[k.second]);
      }
      IVec ex = {{x, Rational(1)}};
      if (left != ex || right != ex) {
        item.ok = false;
        item.witness = A.label(x);
      }
    }
    rep.items.push_back(std::move(item));
  }

  // Δ(1) vs 1⊗1: KG and KG* are weak bialgebras but not bialgebras once
  // |G₀| > 1 (confirmed, not assumed).
  {
    Tensor2 d1 = h.comult_unit();
    Tensor2 unit_sq;
    for (const auto& [i, ci] : A.unit_iv())
      for (const auto& [j, cj] : A.unit_iv()) t2_add(unit_sq, {i, j}, ci * cj);
    rep.is_bialgebra = d1 == unit_sq;
    if (h.groupoid->identities().size() > 1) {
      rep.checked_not_bialgebra = !rep.is_bialgebra;
      if (rep.is_bialgebra)
        rep.items.push_back({"Δ(1) != 1⊗1 for |G₀|>1", false, t2_str(A, d1)});
    }
  }

  rep.ok = true;
  for (const auto& it : rep.items) rep.ok = rep.ok && it.ok;
  return rep;
}

LinMap epsilon_t_map(const WeakBialgebra& h) {
  const FiniteDimAlgebra& A = *h.algebra;
  const int n = A.dim();
  Tensor2 d1 = h.comult_unit();
  LinMap m(A.basis(), A.basis());
  for (int x = 0; x < n; ++x) {
    IVec img;
    IVec ex = {{x, Rational(1)}};
    for (const auto& [k, c] : d1) {
      Rational e = h.counit_of(A.mul_iv({{k.first, Rational(1)}}, ex));
      if (e != 0) ivec_add_scaled(img, {{k.second, Rational(1)}}, c * e);
    }
    m.set_column_iv(x, std::move(img));
  }
  return m;
}

SparseVec epsilon_t(const WeakBialgebra& h, const SparseVec& x) {
  return epsilon_t_map(h).apply(x);
}

TargetSubalgebra target_subalgebra(const WeakBialgebra& h) {
  const FiniteDimAlgebra& A = *h.algebra;
  const int n = A.dim();
  LinMap et = epsilon_t_map(h);
  // fixed space = kernel of (ε_t − id)
  LinMap diff(A.basis(), A.basis());
  for (int j = 0; j < n; ++j) {
    IVec col = et.column_iv(j);
    ivec_add_scaled(col, {{j, Rational(1)}}, Rational(-1));
    diff.set_column_iv(j, std::move(col));
  }
  TargetSubalgebra out;
  out.parent_kind = h.kind;
  out.basis = diff.kernel();
  out.fixed_pointwise = true;
  for (const auto& v : out.basis)
    if (!(et.apply(v) == v)) out.fixed_pointwise = false;

  // closed forms of the lemma describing KG_t and KG*_t
  EchelonSpace computed(n), closed(n);
  for (const auto& v : out.basis) computed.insert(A.basis().to_ivec(v));
  const Groupoid& G = *h.groupoid;
  for (int e : G.identity_indices()) {
    if (h.kind == "KG") {
      closed.insert({{e, Rational(1)}});
    } else {
      IVec sum;
      for (int a = 0; a < G.size(); ++a)
        if (G.r_i(a) == e) sum.emplace_back(a, Rational(1));
      closed.insert(std::move(sum));
    }
  }
  out.matches_closed_form = computed.dim() == closed.dim();
  if (out.matches_closed_form)
    for (const auto& row : closed.basis())
      if (!computed.contains(row)) out.matches_closed_form = false;
  return out;
}

Rational dual_pairing(const DualGroupoidAlgebra& dual, const SparseVec& f, const SparseVec& x) {
  // v_g(u_h) = δ_{g,h}; both vectors are over the same arrow indexing.
  const Groupoid& G = *dual.groupoid;
  Rational out = 0;
  for (const auto& [lv, cv] : f.entries()) {
    // strip "v(" ... ")"
    for (const auto& [lu, cu] : x.entries()) {
      Label g = lv.substr(2, lv.size() - 3);
      Label h = lu.substr(2, lu.size() - 3);
      if (g == h) {
        (void)G;
        out += cv * cu;
      }
    }
  }
  return out;
}

}  // namespace gkit
