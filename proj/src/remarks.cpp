#include "gkit/remarks.hpp"

#include "gkit/check_kernels.hpp"

#include <algorithm>
#include <set>

namespace gkit {

Splitting split(const ActionDualityContext& ctx) {
  Splitting out;
  const Groupoid& G = *ctx.action.groupoid;
  const FiniteDimAlgebra& B = *ctx.B.algebra;
  for (int i = 0; i < B.dim(); ++i) {
    const auto& p = ctx.parts[i];
    if (G.d_i(p.g_arrow) == G.r_i(p.h_arrow))
      out.c_basis.push_back(B.label(i));
    else
      out.d_basis.push_back(B.label(i));
  }
  // unit of C: w = Σ_e 1_e δ_e # Σ_{g∈T_e} v_g (also the unit of B0)
  for (const auto& e : G.identities()) {
    SparseVec one_e = ctx.action.unit_of(e);
    for (const auto& g : G.arrows()) {
      if (G.r(g) != e) continue;
      for (const auto& [x, c] : one_e.entries()) out.c_unit.add(smash_label(delta_label(x, e), g), c);
    }
  }
  out.C = std::make_shared<FiniteDimAlgebra>(restrict_to_labels(B, out.c_basis, out.c_unit));
  out.checks.push_back({"C unital with Σ 1_e δ_e # Σ_{T_e} v_g",
                        is_unit_element(*out.C, out.C->unit_iv()), ""});
  // BD = DB = 0, all basis pairs (makes D a two-sided ideal killing B)
  {
    bool zero = true;
    std::string w;
    for (const auto& d : out.d_basis) {
      int di = B.index_of(d);
      for (int i = 0; i < B.dim() && zero; ++i) {
        if (!B.prod(i, di).empty() || !B.prod(di, i).empty()) {
          zero = false;
          w = "(" + B.label(i) + ", " + d + ")";
        }
      }
      if (!zero) break;
    }
    out.checks.push_back({"BD = DB = 0", zero, w});
  }
  // B0 ⊆ C
  {
    std::set<Label> cset(out.c_basis.begin(), out.c_basis.end());
    bool inside = true;
    for (int i = 0; i < B.dim(); ++i) {
      const auto& p = ctx.parts[i];
      if (G.d_i(p.g_arrow) == G.r_i(p.g_arrow) && G.r_i(p.g_arrow) == G.r_i(p.h_arrow))
        inside = inside && cset.count(B.label(i)) > 0;
    }
    out.checks.push_back({"B0 ⊆ C", inside, ""});
  }
  out.ok = true;
  for (const auto& c : out.checks) out.ok = out.ok && c.ok;
  return out;
}

namespace {

struct FullSpace {
  // index = (r_idx * |G| + g) * |G| + h
  const FiniteDimAlgebra* R;
  const Groupoid* G;
  int nR, nG;
  Basis basis;

  int idx(int x, int g, int h) const { return (x * nG + g) * nG + h; }
};

FullSpace make_full(const ActionDualityContext& ctx) {
  FullSpace fs;
  fs.R = ctx.action.total.get();
  fs.G = ctx.action.groupoid.get();
  fs.nR = fs.R->dim();
  fs.nG = fs.G->size();
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(fs.nR) * fs.nG * fs.nG);
  for (int x = 0; x < fs.nR; ++x)
    for (int g = 0; g < fs.nG; ++g)
      for (int h = 0; h < fs.nG; ++h)
        labels.push_back(tensor_label(fs.R->label(x), fs.G->arrow(g), fs.G->arrow(h)));
  fs.basis = Basis{labels};
  return fs;
}

// (x⊗u_g⊗v_a)(y⊗u_l⊗v_b) =
//   [d(a)=d(b)][a b^{-1} = l][d(g)=r(l)] (x β_g(y 1_{d(g)})) ⊗ u_{gl} ⊗ v_b
IVec full_mul(const ActionDualityContext& ctx, const FullSpace& fs, int x, int g, int a, int y,
              int l, int b) {
  const Groupoid& G = *fs.G;
  if (G.d_i(a) != G.d_i(b)) return {};
  int abinv = G.comp_i(a, G.inv_i(b));
  if (abinv != l) return {};
  int gl = G.comp_i(g, l);
  if (gl < 0) return {};
  const FiniteDimAlgebra& R = *fs.R;
  const Label garr = G.arrow(g);
  SparseVec y_proj = R.mul(SparseVec::basis(R.label(y)), ctx.action.unit_of(G.d(garr)));
  if (y_proj.is_zero()) return {};
  SparseVec moved = ctx.action.beta.at(garr).apply(y_proj);
  SparseVec prod = R.mul(SparseVec::basis(R.label(x)), moved);
  IVec out;
  for (const auto& [t, c] : prod.entries()) out.emplace_back(fs.idx(R.index_of(t), gl, b), c);
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
  return out;
}

IVec full_mul_vec(const ActionDualityContext& ctx, const FullSpace& fs, const IVec& u,
                  const IVec& v) {
  IVec out;
  for (const auto& [i, c] : u) {
    int h1 = i % fs.nG, g1 = (i / fs.nG) % fs.nG, x1 = i / (fs.nG * fs.nG);
    for (const auto& [j, d] : v) {
      int h2 = j % fs.nG, g2 = (j / fs.nG) % fs.nG, x2 = j / (fs.nG * fs.nG);
      IVec p = full_mul(ctx, fs, x1, g1, h1, x2, g2, h2);
      ivec_add_scaled(out, p, c * d);
    }
  }
  return out;
}

}  // namespace

DoubleSmash double_smash(const ActionDualityContext& ctx) {
  DoubleSmash out;
  const Groupoid& G = *ctx.action.groupoid;
  const FiniteDimAlgebra& R = *ctx.action.total;
  const int nG = G.size();
  FullSpace fs = make_full(ctx);
  out.full = fs.basis;

  // stage 1: R ⊗ KG over KG_t = ⊕_e K u_e, relations (x·u_e)⊗u_g − x⊗(u_e u_g);
  // the right action is x·z = S(z)·x with S(u_e) = u_e, so x·u_e = x 1_e.
  std::vector<Label> x1_labels;
  for (int x = 0; x < R.dim(); ++x)
    for (int g = 0; g < nG; ++g)
      x1_labels.push_back("(" + R.label(x) + ")@u(" + G.arrow(g) + ")");
  Basis x1{x1_labels};
  auto x1_idx = [&](int x, int g) { return x * nG + g; };
  std::vector<SparseVec> rel1;
  for (const auto& e : G.identity_indices()) {
    SparseVec one_e = ctx.action.unit_of(G.arrow(e));
    for (int x = 0; x < R.dim(); ++x) {
      SparseVec xproj = R.mul(SparseVec::basis(R.label(x)), one_e);
      for (int g = 0; g < nG; ++g) {
        SparseVec rel;
        for (const auto& [t, c] : xproj.entries())
          rel.add(x1.label(x1_idx(R.index_of(t), g)), c);
        if (G.r_i(g) == e) rel.add(x1.label(x1_idx(x, g)), Rational(-1));
        if (!rel.is_zero()) rel1.push_back(std::move(rel));
      }
    }
  }
  QuotientSpace q1 = quotient_space(x1, rel1);

  // stage 2: Q1 ⊗ KG* over KG*_t = Σ_e K(Σ_{l∈T_e} v_l);
  // w·z_e = S(z_e)·w = [d(g)=e] w on a class w = [x⊗u_g], z_e·v_h = [r(h)=e] v_h.
  std::vector<Label> y_labels;
  for (const auto& q : q1.quotient_basis)
    for (int h = 0; h < nG; ++h) y_labels.push_back(q + "@v(" + G.arrow(h) + ")");
  Basis ybasis{y_labels};
  auto y_idx = [&](int q, int h) { return q * nG + h; };
  std::vector<SparseVec> rel2;
  for (const auto& e : G.identity_indices()) {
    for (std::size_t q = 0; q < q1.quotient_basis.size(); ++q) {
      // section labels are pure x ⊗ u_g tensors; read g back off the label
      int g = x1.index_of(q1.quotient_basis[q]) % nG;
      for (int h = 0; h < nG; ++h) {
        int lhs = G.d_i(g) == e ? 1 : 0;
        int rhs = G.r_i(h) == e ? 1 : 0;
        if (lhs == rhs) continue;
        SparseVec rel;
        rel.add(ybasis.label(y_idx(static_cast<int>(q), h)), Rational(lhs - rhs));
        rel2.push_back(std::move(rel));
      }
    }
  }
  QuotientSpace q2 = quotient_space(ybasis, rel2);

  // composed projection full -> Q
  Basis qbasis{q2.quotient_basis};
  LinMap proj(fs.basis, qbasis);
  for (int x = 0; x < R.dim(); ++x)
    for (int g = 0; g < nG; ++g) {
      SparseVec s1 = q1.projection.apply(SparseVec::basis(x1.label(x1_idx(x, g))));
      for (int h = 0; h < nG; ++h) {
        SparseVec lifted;
        for (const auto& [ql, c] : s1.entries()) lifted.add(ql + "@v(" + G.arrow(h) + ")", c);
        proj.set_column_iv(fs.idx(x, g, h), qbasis.to_ivec(q2.projection.apply(lifted)));
      }
    }
  out.projection = proj;

  // the relation space must be a two-sided multiplicative congruence
  std::vector<IVec> rel_total = proj.kernel_iv();
  {
    bool stable = true;
    std::string w;
    for (const auto& rho : rel_total) {
      for (int b = 0; b < fs.basis.dim() && stable; ++b) {
        IVec eb = {{b, Rational(1)}};
        if (!proj.apply_iv(full_mul_vec(ctx, fs, rho, eb)).empty() ||
            !proj.apply_iv(full_mul_vec(ctx, fs, eb, rho)).empty()) {
          stable = false;
          w = fs.basis.label(b);
        }
      }
      if (!stable) break;
    }
    out.checks.push_back({"balancing relations form a multiplicative congruence", stable, w});
    if (!stable) throw internal_error("double smash: relation space is not multiplication-stable");
  }

  // induced structure constants on the quotient sections
  const int qd = qbasis.dim();
  std::vector<IVec> qprod(static_cast<std::size_t>(qd) * qd);
  for (int i = 0; i < qd; ++i) {
    IVec si = {{fs.basis.index_of(qbasis.label(i)), Rational(1)}};
    for (int j = 0; j < qd; ++j) {
      IVec sj = {{fs.basis.index_of(qbasis.label(j)), Rational(1)}};
      qprod[static_cast<std::size_t>(i) * qd + j] = proj.apply_iv(full_mul_vec(ctx, fs, si, sj));
    }
  }
  // unit: image of 1_R ⊗ 1_KG ⊗ 1_KG*
  SparseVec eta;
  {
    SparseVec one_r = R.unit();
    for (const auto& [x, c] : one_r.entries())
      for (int f : G.identity_indices())
        for (int g = 0; g < nG; ++g)
          eta.add(tensor_label(x, G.arrow(f), G.arrow(g)), c);
  }
  IVec unit_q = proj.apply_iv(fs.basis.to_ivec(eta));
  out.quotient = std::make_shared<FiniteDimAlgebra>(qbasis, std::move(qprod), unit_q);
  {
    bool unital = is_unit_element(*out.quotient, out.quotient->unit_iv());
    out.checks.push_back({"double smash unital with the image of 1⊗1⊗1", unital, ""});
    auto assoc = alg_check(*out.quotient);
    out.checks.push_back({"double smash associative", assoc.associative, ""});
  }
  // closed form Σ_e 1_e ⊗ u_e ⊗ Σ_g v_g from the Theorem 5.2 proof
  for (int e : G.identity_indices()) {
    SparseVec one_e = ctx.action.unit_of(G.arrow(e));
    for (const auto& [x, c] : one_e.entries())
      for (int g = 0; g < nG; ++g) out.unit_closed_form.add(tensor_label(x, G.arrow(e), G.arrow(g)), c);
  }
  out.unit_matches_closed_form =
      proj.apply_iv(fs.basis.to_ivec(out.unit_closed_form)) == out.quotient->unit_iv();
  out.checks.push_back({"unit matches the closed form Σ 1_e ⊗ u_e ⊗ Σ v_g",
                        out.unit_matches_closed_form, ""});

  out.ok = true;
  for (const auto& c : out.checks) out.ok = out.ok && c.ok;
  return out;
}

PhiData phi(const ActionDualityContext& ctx, const DoubleSmash& ds) {
  PhiData out;
  const Groupoid& G = *ctx.action.groupoid;
  const FiniteDimAlgebra& B = *ctx.B.algebra;
  const FiniteDimAlgebra& R = *ctx.action.total;
  LinMap m(B.basis(), ds.quotient->basis());
  for (int i = 0; i < B.dim(); ++i) {
    const auto& p = ctx.parts[i];
    Label full = tensor_label(R.label(p.r_idx), G.arrow(p.g_arrow), G.arrow(p.h_arrow));
    m.set_column_iv(i, ds.projection.column_iv(ds.projection.domain().index_of(full)));
  }
  out.phi = m;
  // φ is an algebra map on all of B (not only on C)
  auto viol = find_hom_violation(B, *ds.quotient, out.phi, ExecPolicy::Parallel);
  out.multiplicative_on_B = !viol.has_value();
  out.checks.push_back({"φ multiplicative on B", out.multiplicative_on_B,
                        viol ? B.label((*viol)[0]) + ", " + B.label((*viol)[1]) : ""});
  out.preunit_to_unit =
      out.phi.apply_iv(B.basis().to_ivec(ctx.B.preunit)) == ds.quotient->unit_iv();
  out.checks.push_back({"φ(preunit) = 1 of the double smash", out.preunit_to_unit, ""});
  out.kernel = out.phi.kernel();
  return out;
}

ExactnessReport exactness(const ActionDualityContext& ctx, const DoubleSmash& ds,
                          const PhiData& p, const Splitting& s) {
  ExactnessReport out;
  const FiniteDimAlgebra& B = *ctx.B.algebra;
  out.dim_B = B.dim();
  out.dim_C = static_cast<int>(s.c_basis.size());
  out.dim_D = static_cast<int>(s.d_basis.size());
  out.dim_ker = static_cast<int>(p.kernel.size());
  out.dim_image = p.phi.rank();

  // ker φ = D: both inclusions, exactly
  {
    EchelonSpace ker_space(B.dim());
    for (const auto& v : p.kernel) ker_space.insert(B.basis().to_ivec(v));
    EchelonSpace d_space(B.dim());
    for (const auto& d : s.d_basis) d_space.insert({{B.index_of(d), Rational(1)}});
    bool d_in_ker = true;
    for (const auto& d : s.d_basis)
      d_in_ker = d_in_ker && ker_space.contains({{B.index_of(d), Rational(1)}});
    bool ker_in_d = true;
    for (const auto& v : p.kernel) ker_in_d = ker_in_d && d_space.contains(B.basis().to_ivec(v));
    out.kernel_equals_D = d_in_ker && ker_in_d && out.dim_ker == out.dim_D;
    out.checks.push_back({"D ⊆ ker φ", d_in_ker, ""});
    out.checks.push_back({"ker φ ⊆ D", ker_in_d, ""});
    out.checks.push_back({"dim ker φ = dim D", out.dim_ker == out.dim_D, ""});
  }

  // φ(B) = φ(C)
  {
    EchelonSpace image_b(ds.quotient->dim()), image_c(ds.quotient->dim());
    for (int i = 0; i < B.dim(); ++i) image_b.insert(p.phi.column_iv(i));
    for (const auto& c : s.c_basis) image_c.insert(p.phi.column_iv(B.index_of(c)));
    bool equal = image_b.dim() == image_c.dim();
    if (equal)
      for (const auto& row : image_b.basis()) equal = equal && image_c.contains(row);
    out.image_equals_phi_C = equal;
    out.checks.push_back({"φ(B) = φ(C)", equal, ""});
  }

  // φ(C) ≅ B/D via the induced map; by the splitting, the section of B/D is C
  {
    std::vector<SparseVec> images;
    for (const auto& c : s.c_basis)
      images.push_back(ds.quotient->basis().to_sparse(p.phi.column_iv(B.index_of(c))));
    SubAlgebra phi_c = subalg_span(*ds.quotient, images);
    std::vector<IVec> cols;
    for (int j = 0; j < phi_c.alg.dim(); ++j) cols.push_back(phi_c.embedding.column_iv(j));
    LinMap induced(s.C->basis(), phi_c.alg.basis());
    bool expressible = true;
    for (int j = 0; j < s.C->dim(); ++j) {
      IVec coords;
      if (!solve_columns(cols, ds.quotient->dim(), p.phi.column_iv(B.index_of(s.C->label(j))),
                         coords)) {
        expressible = false;
        break;
      }
      induced.set_column_iv(j, std::move(coords));
    }
    if (expressible) {
      auto phi_c_ptr = std::make_shared<FiniteDimAlgebra>(std::move(phi_c.alg));
      AlgebraHom h{s.C, phi_c_ptr, std::move(induced)};
      HomCheckReport hrep = hom_check(h);
      out.induced_iso_ok = hrep.multiplicative && hrep.unital && hrep.bijective;
    }
    out.checks.push_back({"B/D ≅ φ(C) via the induced map (hom_check)", out.induced_iso_ok, ""});
  }

  // B0 embeds into the double smash: φ injective on B0
  {
    std::vector<IVec> cols;
    for (int i = 0; i < B.dim(); ++i) {
      const auto& part = ctx.parts[i];
      const Groupoid& G = *ctx.action.groupoid;
      if (G.d_i(part.g_arrow) == G.r_i(part.g_arrow) &&
          G.r_i(part.g_arrow) == G.r_i(part.h_arrow))
        cols.push_back(p.phi.column_iv(i));
    }
    out.b0_embeds = rank_of(cols, ds.quotient->dim()) == static_cast<int>(cols.size());
    out.checks.push_back({"B0 embeds into the double smash", out.b0_embeds, ""});
  }

  out.checks.push_back({"dim B = dim C + dim D", out.dim_B == out.dim_C + out.dim_D, ""});
  out.ok = true;
  for (const auto& c : out.checks) out.ok = out.ok && c.ok;
  return out;
}

Theorem52Result theorem52(const GroupoidAction& action) {
  Theorem52Result out;
  out.ctx = action_duality_context(action);
  out.splitting = split(out.ctx);
  out.ds = double_smash(out.ctx);
  out.phi_data = phi(out.ctx, out.ds);
  out.exact = exactness(out.ctx, out.ds, out.phi_data, out.splitting);
  out.ok = out.splitting.ok && out.ds.ok && out.exact.ok && out.phi_data.multiplicative_on_B &&
           out.phi_data.preunit_to_unit;
  return out;
}

}  // namespace gkit
