#include "qhom/bimodule.hpp"

namespace qhom {

void Bimodule::validate() const {
  int nu = left->n_vertices(), nv = right->n_vertices();
  require(static_cast<int>(dims.size()) == nu, "bimodule grading rows");
  for (const auto& row : dims) require(static_cast<int>(row.size()) == nv, "bimodule grading cols");

  const auto& ra = left->algebra();
  const auto& sa = right->algebra();
  require(static_cast<int>(left_act.size()) == ra.n_arrows(), "left action count");
  require(static_cast<int>(right_act.size()) == sa.n_arrows(), "right action count");
  for (int a = 0; a < ra.n_arrows(); ++a) {
    const auto& ar = ra.quiver().arrows[a];
    for (int v = 0; v < nv; ++v) {
      const Matrix& m = left_act[a][v];
      if (m.rows() != dims[ar.tgt][v] || m.cols() != dims[ar.src][v])
        fail(ErrorKind::Input, "left action '" + ar.name + "' has a bad shape");
    }
  }
  for (int b = 0; b < sa.n_arrows(); ++b) {
    const auto& br = sa.quiver().arrows[b];
    for (int u = 0; u < nu; ++u) {
      const Matrix& m = right_act[b][u];
      if (m.rows() != dims[u][br.src] || m.cols() != dims[u][br.tgt])
        fail(ErrorKind::Input, "right action '" + br.name + "' has a bad shape");
    }
  }

  // left relations act as zero
  for (const auto& rel : ra.relations())
    for (int v = 0; v < nv; ++v) {
      Matrix m = left_act[rel[0]][v];
      for (std::size_t i = 1; i < rel.size(); ++i) m = left_act[rel[i]][v] * m;
      if (!m.is_zero()) fail(ErrorKind::Input, "left relation acts nonzero on bimodule");
    }
  // right relations: apply the last arrow first
  for (const auto& rel : sa.relations())
    for (int u = 0; u < nu; ++u) {
      Matrix m = right_act[rel.back()][u];
      for (int i = static_cast<int>(rel.size()) - 2; i >= 0; --i)
        m = right_act[rel[i]][u] * m;
      if (!m.is_zero()) fail(ErrorKind::Input, "right relation acts nonzero on bimodule");
    }

  // the two actions commute
  for (int a = 0; a < ra.n_arrows(); ++a) {
    const auto& ar = ra.quiver().arrows[a];
    for (int b = 0; b < sa.n_arrows(); ++b) {
      const auto& br = sa.quiver().arrows[b];
      Matrix lhs = left_act[a][br.src] * right_act[b][ar.src];
      Matrix rhs = right_act[b][ar.tgt] * left_act[a][br.tgt];
      if (!(lhs == rhs)) fail(ErrorKind::Input, "bimodule actions do not commute");
    }
  }
}

int Bimodule::total_dim() const {
  int t = 0;
  for (const auto& row : dims)
    for (int d : row) t += d;
  return t;
}

Rep Bimodule::as_left_module() const {
  int nu = left->n_vertices(), nv = right->n_vertices();
  std::vector<int> d(nu, 0);
  for (int u = 0; u < nu; ++u)
    for (int v = 0; v < nv; ++v) d[u] += dims[u][v];
  Rep r(std::static_pointer_cast<const Cat>(left), d);
  for (int a = 0; a < left->algebra().n_arrows(); ++a) {
    const auto& ar = left->algebra().quiver().arrows[a];
    int roff = 0, coff = 0;
    for (int v = 0; v < nv; ++v) {
      r.gen[a].paste(roff, coff, left_act[a][v]);
      roff += dims[ar.tgt][v];
      coff += dims[ar.src][v];
    }
  }
  validate_rep(r);
  return r;
}

Rep Bimodule::as_right_module() const {
  auto sop = right->opposite();
  int nu = left->n_vertices(), nv = right->n_vertices();
  std::vector<int> d(nv, 0);
  for (int v = 0; v < nv; ++v)
    for (int u = 0; u < nu; ++u) d[v] += dims[u][v];
  Rep r(sop, d);
  for (int b = 0; b < right->algebra().n_arrows(); ++b) {
    const auto& br = right->algebra().quiver().arrows[b];
    // the opposite arrow runs tgt -> src; right multiplication does the same
    int roff = 0, coff = 0;
    for (int u = 0; u < nu; ++u) {
      r.gen[right->op_gen(b)].paste(roff, coff, right_act[b][u]);
      roff += dims[u][br.src];
      coff += dims[u][br.tgt];
    }
  }
  validate_rep(r);
  return r;
}

Bimodule Bimodule::transposed() const {
  Bimodule t;
  t.name = name + "^t";
  t.left = std::static_pointer_cast<const AlgebraCat>(right->opposite());
  t.right = std::static_pointer_cast<const AlgebraCat>(left->opposite());
  int nu = left->n_vertices(), nv = right->n_vertices();
  t.dims.assign(nv, std::vector<int>(nu, 0));
  for (int u = 0; u < nu; ++u)
    for (int v = 0; v < nv; ++v) t.dims[v][u] = dims[u][v];
  t.left_act = right_act;
  t.right_act = left_act;
  t.validate();
  return t;
}

Bimodule Bimodule::regular(const std::shared_ptr<const AlgebraCat>& a) {
  const auto& alg = a->algebra();
  int n = alg.n_vertices();
  Bimodule m;
  m.name = alg.name() + "_reg";
  m.left = a;
  m.right = a;
  m.dims.assign(n, std::vector<int>(n, 0));

  // graded piece (u, v) = paths v -> u, in basis order
  std::vector<std::vector<std::vector<int>>> piece(n, std::vector<std::vector<int>>(n));
  const auto& basis = alg.path_basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    piece[basis[i].tgt][basis[i].src].push_back(static_cast<int>(i));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) m.dims[u][v] = static_cast<int>(piece[u][v].size());

  auto local = [&](int u, int v, int path_idx) {
    const auto& lst = piece[u][v];
    for (std::size_t k = 0; k < lst.size(); ++k)
      if (lst[k] == path_idx) return static_cast<int>(k);
    return -1;
  };

  int na = alg.n_arrows();
  m.left_act.assign(na, {});
  m.right_act.assign(na, {});
  for (int ar = 0; ar < na; ++ar) {
    const auto& arr = alg.quiver().arrows[ar];
    for (int v = 0; v < n; ++v) {
      Matrix act(alg.field(), m.dims[arr.tgt][v], m.dims[arr.src][v]);
      for (std::size_t k = 0; k < piece[arr.src][v].size(); ++k) {
        Path ext = basis[piece[arr.src][v][k]];
        ext.arrows.push_back(ar);
        ext.tgt = arr.tgt;
        int bi = alg.basis_index(ext);
        if (bi >= 0) act.set(local(arr.tgt, v, bi), static_cast<int>(k), 1);
      }
      m.left_act[ar].push_back(std::move(act));
    }
    for (int u = 0; u < n; ++u) {
      // right multiplication prepends the arrow to the path
      Matrix act(alg.field(), m.dims[u][arr.src], m.dims[u][arr.tgt]);
      for (std::size_t k = 0; k < piece[u][arr.tgt].size(); ++k) {
        const Path& p = basis[piece[u][arr.tgt][k]];
        Path ext{arr.src, u, {ar}};
        ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
        int bi = alg.basis_index(ext);
        if (bi >= 0) act.set(local(u, arr.src, bi), static_cast<int>(k), 1);
      }
      m.right_act[ar].push_back(std::move(act));
    }
  }
  m.validate();
  return m;
}

Bimodule Bimodule::zero(const std::shared_ptr<const AlgebraCat>& l,
                        const std::shared_ptr<const AlgebraCat>& r) {
  Bimodule m;
  m.name = "zero";
  m.left = l;
  m.right = r;
  m.dims.assign(l->n_vertices(), std::vector<int>(r->n_vertices(), 0));
  for (int a = 0; a < l->algebra().n_arrows(); ++a) {
    const auto& ar = l->algebra().quiver().arrows[a];
    std::vector<Matrix> acts;
    for (int v = 0; v < r->n_vertices(); ++v)
      acts.emplace_back(l->field(), m.dims[ar.tgt][v], m.dims[ar.src][v]);
    m.left_act.push_back(std::move(acts));
  }
  for (int b = 0; b < r->algebra().n_arrows(); ++b) {
    const auto& br = r->algebra().quiver().arrows[b];
    std::vector<Matrix> acts;
    for (int u = 0; u < l->n_vertices(); ++u)
      acts.emplace_back(l->field(), m.dims[u][br.src], m.dims[u][br.tgt]);
    m.right_act.push_back(std::move(acts));
  }
  m.validate();
  return m;
}

// ------------------------------------------------------------------ tensor

namespace {

struct QuotPair {
  Matrix pi, sigma;
};

// quotient of k^n by the column span of rel
QuotPair quotient_of(Field f, int n, const Matrix& rel) {
  auto rt = rel.transpose().rref();
  std::vector<bool> piv(n, false);
  for (int c : rt.pivots) piv[c] = true;
  std::vector<int> comp;
  for (int j = 0; j < n; ++j)
    if (!piv[j]) comp.push_back(j);
  int codim = static_cast<int>(comp.size());
  Matrix basis(f, n, rt.rank);
  for (int k = 0; k < rt.rank; ++k)
    for (int j = 0; j < n; ++j) basis.set(j, k, rt.reduced.get_q(k, j));
  Matrix sigma(f, n, codim);
  for (int k = 0; k < codim; ++k) sigma.set(comp[k], k, 1);
  Matrix full = Matrix::hcat(basis, sigma);
  auto inv = full.inverse();
  require(inv.has_value(), "tensor quotient split failed");
  return {inv->block(rt.rank, 0, codim, n), sigma};
}

}  // namespace

TApplied TensorFunctor::apply(const Rep& n) const {
  require(n.cat == std::static_pointer_cast<const Cat>(m_.right), "tensor: module over the wrong algebra");
  Field f = m_.left->field();
  int nu = m_.left->n_vertices(), nv = m_.right->n_vertices();

  TApplied out;
  out.slot_off.assign(nu, std::vector<int>(nv + 1, 0));
  std::vector<int> big(nu, 0);
  for (int u = 0; u < nu; ++u) {
    for (int v = 0; v < nv; ++v) {
      out.slot_off[u][v] = big[u];
      big[u] += m_.dims[u][v] * n.dims[v];
    }
    out.slot_off[u][nv] = big[u];
  }

  const auto& sa = m_.right->algebra();
  std::vector<int> tdims(nu, 0);
  out.proj.resize(nu);
  out.sect.resize(nu);
  for (int u = 0; u < nu; ++u) {
    // relations (mu.b (x) x) - (mu (x) b.x) over all S-arrows b
    std::vector<Matrix> rels;
    int count = 0;
    for (int b = 0; b < sa.n_arrows(); ++b) {
      const auto& br = sa.quiver().arrows[b];
      count += m_.dims[u][br.tgt] * n.dims[br.src];
    }
    Matrix rel(f, big[u], count);
    int col = 0;
    for (int b = 0; b < sa.n_arrows(); ++b) {
      const auto& br = sa.quiver().arrows[b];
      int v = br.src, vp = br.tgt;
      for (int mi = 0; mi < m_.dims[u][vp]; ++mi)
        for (int nj = 0; nj < n.dims[v]; ++nj) {
          for (int l = 0; l < m_.dims[u][v]; ++l) {
            mpq_class cv = m_.right_act[b][u].get_q(l, mi);
            if (cv != 0)
              rel.set(out.slot_off[u][v] + l * n.dims[v] + nj, col,
                      rel.get_q(out.slot_off[u][v] + l * n.dims[v] + nj, col) + cv);
          }
          for (int k = 0; k < n.dims[vp]; ++k) {
            mpq_class cv = n.gen[b].get_q(k, nj);
            if (cv != 0)
              rel.set(out.slot_off[u][vp] + mi * n.dims[vp] + k, col,
                      rel.get_q(out.slot_off[u][vp] + mi * n.dims[vp] + k, col) - cv);
          }
          ++col;
        }
    }
    QuotPair q = quotient_of(f, big[u], rel);
    tdims[u] = q.pi.rows();
    out.proj[u] = q.pi;
    out.sect[u] = q.sigma;
  }

  Rep t(std::static_pointer_cast<const Cat>(m_.left), tdims);
  const auto& ra = m_.left->algebra();
  for (int a = 0; a < ra.n_arrows(); ++a) {
    const auto& ar = ra.quiver().arrows[a];
    Matrix lift(f, big[ar.tgt], big[ar.src]);
    for (int v = 0; v < nv; ++v)
      for (int mi = 0; mi < m_.dims[ar.src][v]; ++mi)
        for (int nj = 0; nj < n.dims[v]; ++nj)
          for (int l = 0; l < m_.dims[ar.tgt][v]; ++l) {
            mpq_class cv = m_.left_act[a][v].get_q(l, mi);
            if (cv != 0)
              lift.set(out.slot_off[ar.tgt][v] + l * n.dims[v] + nj,
                       out.slot_off[ar.src][v] + mi * n.dims[v] + nj, cv);
          }
    t.gen[a] = out.proj[ar.tgt] * lift * out.sect[ar.src];
    require(out.proj[ar.tgt] * lift == t.gen[a] * out.proj[ar.src],
            "tensor action not well defined on the quotient");
  }
  validate_rep(t);
  out.rep = std::move(t);
  return out;
}

Morph TensorFunctor::apply_morph(const Morph& fm, const TApplied& of_src, const TApplied& of_tgt) const {
  Field f = m_.left->field();
  int nu = m_.left->n_vertices(), nv = m_.right->n_vertices();
  Morph out(of_src.rep, of_tgt.rep);
  for (int u = 0; u < nu; ++u) {
    int big_src = of_src.slot_off[u][nv], big_tgt = of_tgt.slot_off[u][nv];
    Matrix lift(f, big_tgt, big_src);
    for (int v = 0; v < nv; ++v)
      for (int mi = 0; mi < m_.dims[u][v]; ++mi)
        for (int nj = 0; nj < fm.src.dims[v]; ++nj)
          for (int k = 0; k < fm.tgt.dims[v]; ++k) {
            mpq_class cv = fm.maps[v].get_q(k, nj);
            if (cv != 0)
              lift.set(of_tgt.slot_off[u][v] + mi * fm.tgt.dims[v] + k,
                       of_src.slot_off[u][v] + mi * fm.src.dims[v] + nj, cv);
          }
    out.maps[u] = of_tgt.proj[u] * lift * of_src.sect[u];
    require(of_tgt.proj[u] * lift == out.maps[u] * of_src.proj[u],
            "tensor of a morphism not well defined");
  }
  validate_morph(out);
  return out;
}

Morph TensorFunctor::apply_morph(const Morph& f) const {
  return apply_morph(f, apply(f.src), apply(f.tgt));
}

int TensorFunctor::tor_dim(const Rep& n, int degree) const {
  require(degree >= 0, "tor degree");
  if (degree == 0) return apply(n).rep.total_dim();
  Resolution r = resolve(n, degree + 1);
  auto term = [&](int i) -> std::optional<TApplied> {
    if (i >= static_cast<int>(r.terms.size())) return std::nullopt;
    return apply(r.terms[i]);
  };
  auto t_i = term(degree);
  if (!t_i) return 0;
  auto t_prev = term(degree - 1);
  auto t_next = term(degree + 1);

  Morph d_in = apply_morph(r.diffs[degree], *t_i, *t_prev);
  std::optional<Morph> d_out;
  if (t_next) d_out = apply_morph(r.diffs[degree + 1], *t_next, *t_i);

  int total = 0;
  int nu = m_.left->n_vertices();
  for (int u = 0; u < nu; ++u) {
    int nullity = t_i->rep.dims[u] - d_in.maps[u].rank();
    int rk = d_out ? d_out->maps[u].rank() : 0;
    total += nullity - rk;
  }
  return total;
}

int tor_dim(const Rep& m_right, const Rep& n, int degree) {
  auto s_cat = std::dynamic_pointer_cast<const AlgebraCat>(n.cat);
  require(static_cast<bool>(s_cat), "tor_dim wants modules over an algebra");
  require(m_right.cat == n.cat->opposite(), "the right module must live over the opposite");

  Quiver point;
  point.vertices = {"*"};
  auto triv = AlgebraCat::make(std::make_shared<MonomialAlgebra>(
      "k", point, s_cat->field(), std::vector<std::vector<std::string>>{}));

  Bimodule bm;
  bm.name = "right-module";
  bm.left = triv;
  bm.right = s_cat;
  bm.dims.assign(1, std::vector<int>(s_cat->n_vertices(), 0));
  for (int v = 0; v < s_cat->n_vertices(); ++v) bm.dims[0][v] = m_right.dims[v];
  for (int b = 0; b < s_cat->algebra().n_arrows(); ++b)
    bm.right_act.push_back({m_right.gen[b]});
  bm.validate();
  return TensorFunctor(std::move(bm)).tor_dim(n, degree);
}

YExactReport check_Y_exact(const TensorFunctor& t, const std::vector<Rep>& y_members) {
  YExactReport rep;
  for (std::size_t i = 0; i < y_members.size(); ++i) {
    int tor1 = t.tor_dim(y_members[i], 1);
    if (tor1 != 0) {
      rep.ok = false;
      rep.bad_member = static_cast<int>(i);
      rep.tor1_dim = tor1;
      Cover c = projective_cover(y_members[i]);
      SubQuot k = kernel(c.epi);
      ShortExact w;
      w.i = k.map;
      w.p = c.epi;
      rep.witness = w;
      return rep;
    }
  }
  return rep;
}

bool ses_level_y_exact(const TensorFunctor& t, const std::vector<Rep>& y_members,
                       const std::vector<Rep>& ambient) {
  for (const auto& y : y_members) {
    for (const auto& b : ambient) {
      ExtGroup e = ext_group(y, b, 1);
      // every class, including zero, yields a test sequence
      std::vector<Morph> classes = e.cocycles;
      classes.push_back(zero_morph(e.syzygy, b));
      for (const auto& c : classes) {
        ShortExact s = realize_extension(e, c);
        TApplied tb = t.apply(s.i.src), te = t.apply(s.i.tgt), ty = t.apply(s.p.tgt);
        Morph ti = t.apply_morph(s.i, tb, te);
        Morph tp = t.apply_morph(s.p, te, ty);
        if (!is_mono(ti) || !is_epi(tp)) return false;
        if (!compose(tp, ti).is_zero_morph()) return false;
        for (int u = 0; u < t.target()->n_vertices(); ++u)
          if (tb.rep.dims[u] + ty.rep.dims[u] != te.rep.dims[u]) return false;
      }
    }
  }
  return true;
}

}  // namespace qhom
