#include "gkit/algebra.hpp"

#include "gkit/check_kernels.hpp"

#include <algorithm>

namespace gkit {

FiniteDimAlgebra::FiniteDimAlgebra(std::vector<Label> basis_labels,
                                   const std::map<std::pair<Label, Label>, SparseVec>& structconst,
                                   std::optional<SparseVec> unit)
    : basis_(std::move(basis_labels)) {
  const int n = basis_.dim();
  prod_.assign(static_cast<std::size_t>(n) * n, {});
  for (const auto& [key, val] : structconst) {
    int i = basis_.index_of(key.first);
    int j = basis_.index_of(key.second);
    prod_[static_cast<std::size_t>(i) * n + j] = basis_.to_ivec(val);
  }
  if (unit) unit_ = basis_.to_ivec(*unit);
}

FiniteDimAlgebra::FiniteDimAlgebra(Basis basis, std::vector<IVec> prod, std::optional<IVec> unit)
    : basis_(std::move(basis)), prod_(std::move(prod)), unit_(std::move(unit)) {
  if (prod_.size() != static_cast<std::size_t>(basis_.dim()) * basis_.dim())
    throw structural_error("structure constant table has wrong shape");
}

IVec FiniteDimAlgebra::mul_iv(const IVec& a, const IVec& b) const {
  IVec out;
  for (const auto& [i, c] : a)
    for (const auto& [j, d] : b) ivec_add_scaled(out, prod(i, j), c * d);
  return out;
}

SparseVec FiniteDimAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  return basis_.to_sparse(mul_iv(basis_.to_ivec(a), basis_.to_ivec(b)));
}

const IVec& FiniteDimAlgebra::unit_iv() const {
  if (!unit_) throw structural_error("algebra has no declared unit");
  return *unit_;
}

bool FiniteDimAlgebra::is_commutative() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (prod(i, j) != prod(j, i)) return false;
  return true;
}

bool is_unit_element(const FiniteDimAlgebra& a, const IVec& u) {
  for (int i = 0; i < a.dim(); ++i) {
    IVec x = {{i, Rational(1)}};
    if (a.mul_iv(u, x) != x || a.mul_iv(x, u) != x) return false;
  }
  return true;
}

AlgCheckReport alg_check(const FiniteDimAlgebra& a, ExecPolicy policy) {
  AlgCheckReport rep;
  auto w = find_assoc_violation(a, policy);
  rep.associative = !w.has_value();
  if (w) rep.assoc_witness = {a.label((*w)[0]), a.label((*w)[1]), a.label((*w)[2])};
  rep.unit_declared = a.has_unit();
  if (a.has_unit()) {
    const IVec& u = a.unit_iv();
    rep.unital = true;
    for (int i = 0; i < a.dim(); ++i) {
      IVec x = {{i, Rational(1)}};
      if (a.mul_iv(u, x) != x || a.mul_iv(x, u) != x) {
        rep.unital = false;
        rep.unit_witness = a.label(i);
        break;
      }
    }
  }
  return rep;
}

HomCheckReport hom_check(const AlgebraHom& h, ExecPolicy policy) {
  if (!(h.map.domain() == h.dom->basis()) || !(h.map.codomain() == h.cod->basis()))
    throw structural_error("hom_check: map bases do not match the two algebras");
  HomCheckReport rep;
  auto w = find_hom_violation(*h.dom, *h.cod, h.map, policy);
  rep.multiplicative = !w.has_value();
  if (w) rep.mult_witness = {h.dom->label((*w)[0]), h.dom->label((*w)[1])};
  rep.units_present = h.dom->has_unit() && h.cod->has_unit();
  if (rep.units_present)
    rep.unital = h.map.apply_iv(h.dom->unit_iv()) == h.cod->unit_iv();
  rep.bijective = h.map.is_bijective();
  return rep;
}

SubAlgebra subalg_span(const FiniteDimAlgebra& a, const std::vector<SparseVec>& gens) {
  const int n = a.dim();
  EchelonSpace span(n);
  std::vector<IVec> gen_iv;
  for (const auto& g : gens) {
    IVec v = a.basis().to_ivec(g);
    span.insert(v);
    gen_iv.push_back(std::move(v));
  }
  // Close under products with the generators, both sides, until stable.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IVec> current = span.basis();
    for (const auto& b : current) {
      for (const auto& g : gen_iv) {
        if (span.insert(a.mul_iv(b, g))) grew = true;
        if (span.insert(a.mul_iv(g, b))) grew = true;
      }
    }
  }
  // Label each echelon row by its pivot label in the parent algebra.
  std::vector<Label> labels;
  std::vector<IVec> rows;
  for (const auto& [p, row] : span.rows()) {
    labels.push_back(a.label(p));
    rows.push_back(row);
  }
  Basis sub_basis{labels};
  const int d = sub_basis.dim();

  LinMap embedding(sub_basis, a.basis());
  for (int j = 0; j < d; ++j) embedding.set_column_iv(j, rows[j]);

  // Induced structure constants: products expressed in the echelon basis.
  std::vector<IVec> prod(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      IVec p = a.mul_iv(rows[i], rows[j]);
      IVec expr;
      if (!solve_columns(rows, n, p, expr))
        throw internal_error("subalg_span: closure produced a product outside the span");
      prod[static_cast<std::size_t>(i) * d + j] = std::move(expr);
    }
  }
  FiniteDimAlgebra probe(sub_basis, prod, std::nullopt);
  std::optional<IVec> unit = find_unit_iv(probe);
  FiniteDimAlgebra sub(std::move(sub_basis), std::move(prod), std::move(unit));
  return SubAlgebra{std::move(sub), std::move(embedding)};
}

std::optional<IVec> find_unit_iv(const FiniteDimAlgebra& a) {
  const int n = a.dim();
  if (n == 0) return IVec{};
  // Unknown u = sum c_j b_j with u*b_x = b_x and b_x*u = b_x for all x.
  // Stack both equation blocks into a 2*n*n-dimensional codomain.
  std::vector<IVec> cols(n);
  auto enc = [n](int block, int x, int i) { return (block * n + x) * n + i; };
  for (int j = 0; j < n; ++j) {
    IVec col;
    for (int x = 0; x < n; ++x) {
      for (const auto& [i, c] : a.prod(j, x)) col.emplace_back(enc(0, x, i), c);
    }
    for (int x = 0; x < n; ++x) {
      for (const auto& [i, c] : a.prod(x, j)) col.emplace_back(enc(1, x, i), c);
    }
    std::sort(col.begin(), col.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    cols[j] = std::move(col);
  }
  IVec target;
  for (int x = 0; x < n; ++x) target.emplace_back(enc(0, x, x), Rational(1));
  for (int x = 0; x < n; ++x) target.emplace_back(enc(1, x, x), Rational(1));
  std::sort(target.begin(), target.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  IVec sol;
  if (!solve_columns(cols, 2 * n * n, target, sol)) return std::nullopt;
  return sol;
}

QuotientSpace quotient_space(const Basis& space, const std::vector<SparseVec>& relations) {
  EchelonSpace rel(space.dim());
  for (const auto& r : relations) rel.insert(space.to_ivec(r));
  const auto& rows = rel.rows();
  std::vector<Label> quotient;
  std::vector<int> qindex(space.dim(), -1);
  for (int i = 0; i < space.dim(); ++i) {
    if (rows.find(i) == rows.end()) {
      qindex[i] = static_cast<int>(quotient.size());
      quotient.push_back(space.label(i));
    }
  }
  Basis qbasis{quotient};
  LinMap proj(space, qbasis);
  for (int i = 0; i < space.dim(); ++i) {
    auto it = rows.find(i);
    if (it == rows.end()) {
      proj.set_column_iv(i, {{qindex[i], Rational(1)}});
    } else {
      // pivot label: x_i = -(rest of row) modulo relations
      IVec img;
      for (const auto& [j, c] : it->second) {
        if (j == i) continue;
        img.emplace_back(qindex[j], -c);  // non-pivot entries only, RREF rows
      }
      std::sort(img.begin(), img.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      proj.set_column_iv(i, std::move(img));
    }
  }
  return QuotientSpace{std::move(quotient), std::move(proj)};
}

FiniteDimAlgebra restrict_to_labels(const FiniteDimAlgebra& a, const std::vector<Label>& subset,
                                    std::optional<SparseVec> unit) {
  Basis sub{subset};
  const int d = sub.dim();
  std::vector<IVec> prod(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    int ai = a.index_of(sub.label(i));
    for (int j = 0; j < d; ++j) {
      int aj = a.index_of(sub.label(j));
      IVec out;
      for (const auto& [t, c] : a.prod(ai, aj)) {
        int k = sub.try_index(a.label(t));
        if (k < 0)
          throw internal_error("restrict_to_labels: subset not multiplicatively closed at (" +
                               sub.label(i) + ", " + sub.label(j) + ")");
        out.emplace_back(k, c);
      }
      std::sort(out.begin(), out.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      prod[static_cast<std::size_t>(i) * d + j] = std::move(out);
    }
  }
  std::optional<IVec> u;
  if (unit) u = sub.to_ivec(*unit);
  return FiniteDimAlgebra(std::move(sub), std::move(prod), std::move(u));
}

FiniteDimAlgebra matrix_algebra(int n, const FiniteDimAlgebra& coeff) {
  if (!coeff.has_unit()) throw structural_error("matrix_algebra: coefficient algebra must be unital");
  const int d = coeff.dim();
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(n) * n * d);
  auto name = [&](int i, int j, int c) {
    return "E[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "](" + coeff.label(c) + ")";
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < d; ++c) labels.push_back(name(i, j, c));
  Basis basis{labels};
  auto idx = [&](int i, int j, int c) { return (i * n + j) * d + c; };
  const std::size_t N = basis.dim();
  std::vector<IVec> prod(N * N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < d; ++c)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            for (int e = 0; e < d; ++e) {
              if (j != k) continue;
              IVec out;
              for (const auto& [t, x] : coeff.prod(c, e)) out.emplace_back(idx(i, l, t), x);
              std::sort(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; });
              prod[static_cast<std::size_t>(idx(i, j, c)) * N + idx(k, l, e)] = std::move(out);
            }
  IVec unit;
  for (int i = 0; i < n; ++i)
    for (const auto& [t, x] : coeff.unit_iv()) unit.emplace_back(idx(i, i, t), x);
  std::sort(unit.begin(), unit.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return FiniteDimAlgebra(std::move(basis), std::move(prod), std::move(unit));
}

FiniteDimAlgebra direct_sum(const std::vector<std::pair<std::string, const FiniteDimAlgebra*>>& blocks) {
  std::vector<Label> labels;
  bool all_unital = true;
  for (const auto& [tag, alg] : blocks) {
    for (const auto& l : alg->basis().labels()) labels.push_back(tag + ":" + l);
    all_unital = all_unital && alg->has_unit();
  }
  Basis basis{labels};
  const std::size_t N = basis.dim();
  std::vector<IVec> prod(N * N);
  int offset = 0;
  IVec unit;
  for (const auto& [tag, alg] : blocks) {
    const int d = alg->dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        IVec out;
        for (const auto& [t, c] : alg->prod(i, j)) out.emplace_back(offset + t, c);
        prod[static_cast<std::size_t>(offset + i) * N + (offset + j)] = std::move(out);
      }
    if (all_unital)
      for (const auto& [t, c] : alg->unit_iv()) unit.emplace_back(offset + t, c);
    offset += d;
  }
  std::sort(unit.begin(), unit.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::optional<IVec> u;
  if (all_unital) u = std::move(unit);
  return FiniteDimAlgebra(std::move(basis), std::move(prod), std::move(u));
}

std::optional<int> find_noncentral_witness(const FiniteDimAlgebra& a, const IVec& elem) {
  for (int i = 0; i < a.dim(); ++i) {
    IVec x = {{i, Rational(1)}};
    if (a.mul_iv(elem, x) != a.mul_iv(x, elem)) return i;
  }
  return std::nullopt;
}

}  // namespace gkit
