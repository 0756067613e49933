#include "qhom/homology.hpp"

namespace qhom {

Resolution resolve(const Rep& x, int length) {
  Resolution r;
  r.target = x;
  Rep current = x;
  for (int i = 0; i <= length; ++i) {
    if (current.total_dim() == 0) break;
    Cover c = projective_cover(current);
    if (i == 0) {
      r.terms.push_back(c.proj);
      r.diffs.push_back(c.epi);
    } else {
      // differential P_i -> P_{i-1} through the syzygy inclusion
      r.terms.push_back(c.proj);
      r.diffs.push_back(compose(r.syzygies.back().map, c.epi));
    }
    r.syzygies.push_back(kernel(c.epi));
    // inclusion of Omega^{i+1} into P_i is with respect to the cover source
    current = r.syzygies.back().rep;
  }
  return r;
}

ExtGroup ext_group(const Rep& x, const Rep& y, int degree) {
  require(degree >= 0, "ext degree");
  ExtGroup e;
  e.degree = degree;
  e.source = x;
  e.target = y;
  if (degree == 0) {
    e.hom_basis = hom_space(x, y);
    e.cocycles = e.hom_basis;
    e.dim = static_cast<int>(e.cocycles.size());
    e.syzygy = x;
    e.quot_pi = Matrix::identity(x.cat->field(), e.dim);
    return e;
  }

  Resolution r = resolve(x, degree);
  if (!r.terms.empty()) e.augmentation = r.diffs[0];
  else e.augmentation = zero_morph(zero_rep(x.cat), x);

  if (static_cast<int>(r.syzygies.size()) < degree) {
    // projective dimension < degree
    e.syzygy = zero_rep(x.cat);
    e.syz_incl = zero_morph(e.syzygy, r.terms.empty() ? x : r.terms.back());
    e.dim = 0;
    e.quot_pi = Matrix(x.cat->field(), 0, 0);
    return e;
  }

  e.syzygy = r.syzygies[degree - 1].rep;
  e.syz_incl = r.syzygies[degree - 1].map;
  e.hom_basis = hom_space(e.syzygy, y);
  int n = static_cast<int>(e.hom_basis.size());

  // restrictions of Hom(P_{degree-1}, y) along the syzygy inclusion
  const Rep& prev = r.terms[degree - 1];
  auto lifts = hom_space(prev, y);
  Matrix span(x.cat->field(), n, static_cast<int>(lifts.size()));
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    auto coords = morph_coords(compose(lifts[k], e.syz_incl), e.hom_basis);
    require(coords.has_value(), "ext: restriction outside hom space");
    span.paste(0, static_cast<int>(k), *coords);
  }

  // quotient of the hom coordinate space by the restriction image
  auto rt = span.transpose().rref();
  std::vector<bool> piv(n, false);
  for (int c : rt.pivots) piv[c] = true;
  std::vector<int> comp;
  for (int j = 0; j < n; ++j)
    if (!piv[j]) comp.push_back(j);
  e.dim = static_cast<int>(comp.size());

  Matrix basis_cols(x.cat->field(), n, rt.rank);
  for (int k = 0; k < rt.rank; ++k)
    for (int j = 0; j < n; ++j) basis_cols.set(j, k, rt.reduced.get_q(k, j));
  Matrix sigma(x.cat->field(), n, e.dim);
  for (int k = 0; k < e.dim; ++k) sigma.set(comp[k], k, 1);
  Matrix full = Matrix::hcat(basis_cols, sigma);
  auto inv = full.inverse();
  require(inv.has_value(), "ext quotient split failed");
  e.quot_pi = inv->block(rt.rank, 0, e.dim, n);

  for (int k = 0; k < e.dim; ++k) {
    Morph c = zero_morph(e.syzygy, y);
    c = add(c, e.hom_basis[comp[k]]);
    e.cocycles.push_back(std::move(c));
  }
  return e;
}

int ext_dim(const Rep& x, const Rep& y, int degree) { return ext_group(x, y, degree).dim; }

std::vector<int> ext_dims_upto(const Rep& x, const Rep& y, int bound) {
  Resolution r = resolve(x, bound + 1);
  // cochain complex C^i = Hom(P_i, y) with differentials by precomposition
  std::vector<std::vector<Morph>> bases;
  for (const auto& term : r.terms) bases.push_back(hom_space(term, y));
  auto delta_rank = [&](int i) {  // rank of C^i -> C^{i+1}
    if (i + 1 >= static_cast<int>(r.terms.size())) return 0;
    Matrix m(x.cat->field(), static_cast<int>(bases[i + 1].size()),
             static_cast<int>(bases[i].size()));
    for (std::size_t k = 0; k < bases[i].size(); ++k) {
      auto coords = morph_coords(compose(bases[i][k], r.diffs[i + 1]), bases[i + 1]);
      require(coords.has_value(), "ext_dims_upto coordinates");
      m.paste(0, static_cast<int>(k), *coords);
    }
    return m.rank();
  };
  std::vector<int> ranks;
  for (int i = 0; i < static_cast<int>(r.terms.size()); ++i) ranks.push_back(delta_rank(i));
  std::vector<int> out;
  for (int i = 1; i <= bound; ++i) {
    if (i >= static_cast<int>(r.terms.size())) {
      out.push_back(0);
      continue;
    }
    int ci = static_cast<int>(bases[i].size());
    int null_i = ci - ranks[i];
    out.push_back(null_i - ranks[i - 1]);
  }
  return out;
}

Matrix ext_class_coords(const ExtGroup& e, const Morph& cocycle) {
  if (e.dim == 0) return Matrix(e.source.cat->field(), 0, 1);
  auto coords = morph_coords(cocycle, e.hom_basis);
  require(coords.has_value(), "cocycle outside hom space");
  return e.quot_pi * *coords;
}

Pushout pushout(const Morph& f, const Morph& g) {
  require(f.src.same_shape(g.src), "pushout legs must share a source");
  SumData sum = direct_sum({f.tgt, g.tgt});
  Morph u = into_summands(sum, {f, negate(g)}, f.src);
  SubQuot q = cokernel(u);
  Pushout out;
  out.rep = q.rep;
  out.from_a = compose(q.map, sum.incl[0]);
  out.from_b = compose(q.map, sum.incl[1]);
  return out;
}

ShortExact realize_extension(const ExtGroup& e, const Morph& cocycle) {
  require(e.degree == 1, "realize_extension wants a 1-cocycle");
  const Rep& a = e.target;
  const Rep& c = e.source;

  // pushout of  A <-cocycle- Omega -incl-> P0
  Pushout po = pushout(cocycle, e.syz_incl);
  ShortExact s;
  s.i = po.from_a;
  // the quotient map E -> C satisfies p . from_b = augmentation
  SumData sum = direct_sum({a, e.augmentation.src});
  Morph w = from_summands(sum, {zero_morph(a, c), e.augmentation}, c);
  Morph quo = from_summands(sum, {po.from_a, po.from_b}, po.rep);
  auto p = cofactor_through(w, quo);
  require(p.has_value(), "realize_extension: projection did not descend");
  s.p = *p;
  require(ses_is_exact(s), "realize_extension produced an inexact sequence");
  return s;
}

Matrix ext_class_of(const ExtGroup& e, const ShortExact& s) {
  require(e.degree == 1, "ext_class_of wants degree 1");
  // lift the augmentation P0 -> C through E -> C, then restrict to the syzygy
  auto sigma = factor_through(e.augmentation, s.p);
  require(sigma.has_value(), "ext_class_of: no lift through the epi");
  Morph restricted = compose(*sigma, e.syz_incl);  // Omega -> E, lands in A
  auto g = factor_through(restricted, s.i);
  require(g.has_value(), "ext_class_of: restriction not through the kernel");
  return ext_class_coords(e, *g);
}

namespace {

// glue two extensions of the same kernel k into one with cokernel C_a + C_b
ShortExact glue_over_kernel(const ShortExact& sa, const ShortExact& sb) {
  Pushout po = pushout(sa.i, sb.i);
  ShortExact out;
  out.i = compose(po.from_a, sa.i);  // equals po.from_b . sb.i in the quotient
  SumData cs = direct_sum({sa.p.tgt, sb.p.tgt});
  // descend (p_a, p_b) along the quotient (E_a + E_b) -> W
  SumData es = direct_sum({sa.i.tgt, sb.i.tgt});
  Morph quo = from_summands(es, {po.from_a, po.from_b}, po.rep);
  Morph w = from_summands(es, {compose(cs.incl[0], sa.p), compose(cs.incl[1], sb.p)}, cs.rep);
  auto p = cofactor_through(w, quo);
  require(p.has_value(), "glue_over_kernel: projection did not descend");
  out.p = *p;
  require(ses_is_exact(out), "glue_over_kernel: inexact result");
  return out;
}

}  // namespace

UniversalExt universal_extension(const std::vector<Rep>& targets, const Rep& k) {
  UniversalExt out;
  // start from 0 -> k -> k -> 0 -> 0
  ShortExact acc;
  acc.i = identity_morph(k);
  acc.p = zero_morph(k, zero_rep(k.cat));

  for (const auto& t : targets) {
    ExtGroup e = ext_group(t, k, 1);
    out.mults.push_back(e.dim);
    for (int c = 0; c < e.dim; ++c)
      acc = glue_over_kernel(acc, realize_extension(e, e.cocycles[c]));
  }
  out.ses = acc;
  out.middle = acc.i.tgt;

  // the pushforward of every basis class must die in Ext^1(t, W)
  for (const auto& t : targets) {
    ExtGroup back = ext_group(t, out.middle, 1);
    ExtGroup orig = ext_group(t, k, 1);
    for (const auto& c : orig.cocycles) {
      Morph pushed = compose(acc.i, c);
      require(ext_class_coords(back, pushed).is_zero(),
              "universal extension failed to kill a class");
    }
  }
  return out;
}

std::optional<int> homological_dimension(const Rep& x, DimKind kind, int cap) {
  require(cap >= 0, "dimension cap");
  if (kind == DimKind::Injective) return homological_dimension(dual_k(x), DimKind::Projective, cap);
  if (x.total_dim() == 0) return 0;
  Resolution r = resolve(x, cap);
  // syzygies[d] = Omega^{d+1}; the first vanishing one pins pd = d
  for (std::size_t d = 0; d < r.syzygies.size(); ++d)
    if (r.syzygies[d].rep.total_dim() == 0) return static_cast<int>(d);
  return std::nullopt;
}

}  // namespace qhom
