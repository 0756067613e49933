#include "qhom/comma.hpp"

#include <algorithm>

namespace qhom {

namespace {

std::vector<std::string> comma_vertices(const Bimodule& m) {
  std::vector<std::string> out;
  for (const auto& v : m.left->vertex_names()) out.push_back("r." + v);
  for (const auto& v : m.right->vertex_names()) out.push_back("s." + v);
  return out;
}

std::vector<Cat::Gen> comma_gens(const Bimodule& m) {
  std::vector<Cat::Gen> gs;
  int nr = m.left->n_vertices();
  for (const auto& a : m.left->algebra().quiver().arrows)
    gs.push_back({"r." + a.name, a.src, a.tgt});
  for (const auto& b : m.right->algebra().quiver().arrows)
    gs.push_back({"s." + b.name, nr + b.src, nr + b.tgt});
  for (int u = 0; u < m.left->n_vertices(); ++u)
    for (int v = 0; v < m.right->n_vertices(); ++v)
      for (int k = 0; k < m.dims[u][v]; ++k)
        gs.push_back({"m." + std::to_string(u) + "." + std::to_string(v) + "." + std::to_string(k),
                      nr + v, u});
  return gs;
}

}  // namespace

CommaCat::CommaCat(Bimodule m, std::string name)
    : Cat(std::move(name), m.left->field(), comma_vertices(m), comma_gens(m)),
      m_(m), t_(std::move(m)) {
  require(m_.left->field() == m_.right->field(), "bimodule sides over different fields");
  m_off_.assign(nR(), std::vector<int>(nS(), -1));
  int idx = 0;
  for (int u = 0; u < nR(); ++u)
    for (int v = 0; v < nS(); ++v) {
      m_off_[u][v] = idx;
      for (int k = 0; k < m_.dims[u][v]; ++k) m_gens_.push_back({u, v, k});
      idx += m_.dims[u][v];
    }
}

std::shared_ptr<const CommaCat> CommaCat::make(Bimodule m, std::string name) {
  m.validate();
  return std::shared_ptr<const CommaCat>(new CommaCat(std::move(m), std::move(name)));
}

int CommaCat::gen_of_m(int u, int v, int k) const {
  return n_r_arrows() + n_s_arrows() + m_off_[u][v] + k;
}

std::string CommaCat::check_rep(const Rep& r) const {
  const auto& ra = m_.left->algebra();
  const auto& sa = m_.right->algebra();

  for (const auto& rel : ra.relations()) {
    Matrix m = r.gen[gen_of_r_arrow(rel[0])];
    for (std::size_t i = 1; i < rel.size(); ++i) m = r.gen[gen_of_r_arrow(rel[i])] * m;
    if (!m.is_zero()) return "left relation acts nonzero";
  }
  for (const auto& rel : sa.relations()) {
    Matrix m = r.gen[gen_of_s_arrow(rel[0])];
    for (std::size_t i = 1; i < rel.size(); ++i) m = r.gen[gen_of_s_arrow(rel[i])] * m;
    if (!m.is_zero()) return "right relation acts nonzero";
  }

  // left compatibility: action of (alpha . mu) = A_alpha . X_mu
  for (int a = 0; a < ra.n_arrows(); ++a) {
    const auto& ar = ra.quiver().arrows[a];
    for (int v = 0; v < nS(); ++v) {
      for (int mi = 0; mi < m_.dims[ar.src][v]; ++mi) {
        Matrix lhs(field_, r.dims[r_vertex(ar.tgt)], r.dims[s_vertex(v)]);
        for (int l = 0; l < m_.dims[ar.tgt][v]; ++l) {
          mpq_class c = m_.left_act[a][v].get_q(l, mi);
          if (c != 0) lhs = lhs + r.gen[gen_of_m(ar.tgt, v, l)].scaled(c);
        }
        Matrix rhs = r.gen[gen_of_r_arrow(a)] * r.gen[gen_of_m(ar.src, v, mi)];
        if (!(lhs == rhs)) return "left bimodule compatibility fails";
      }
    }
  }
  // right compatibility: action of (mu . beta) = X_mu . B_beta
  for (int b = 0; b < sa.n_arrows(); ++b) {
    const auto& br = sa.quiver().arrows[b];
    for (int u = 0; u < nR(); ++u) {
      for (int mi = 0; mi < m_.dims[u][br.tgt]; ++mi) {
        Matrix lhs(field_, r.dims[r_vertex(u)], r.dims[s_vertex(br.src)]);
        for (int l = 0; l < m_.dims[u][br.src]; ++l) {
          mpq_class c = m_.right_act[b][u].get_q(l, mi);
          if (c != 0) lhs = lhs + r.gen[gen_of_m(u, br.src, l)].scaled(c);
        }
        Matrix rhs = r.gen[gen_of_m(u, br.tgt, mi)] * r.gen[gen_of_s_arrow(b)];
        if (!(lhs == rhs)) return "right bimodule compatibility fails";
      }
    }
  }
  return {};
}

Cat::ProjData CommaCat::build_projective(int i) const {
  auto self = std::static_pointer_cast<const CommaCat>(shared_from_this());
  ProjData pd;
  if (is_r_vertex(i)) {
    const auto& inner = m_.left->projective(i);
    std::vector<int> dims(n_vertices(), 0);
    for (int u = 0; u < nR(); ++u) dims[r_vertex(u)] = inner.rep->dims[u];
    auto rep = std::make_shared<Rep>(self, dims);
    for (int a = 0; a < n_r_arrows(); ++a) rep->gen[gen_of_r_arrow(a)] = inner.rep->gen[a];
    pd.rep = rep;
    pd.words.resize(n_vertices());
    for (int u = 0; u < nR(); ++u) {
      for (const auto& w : inner.words[u]) {
        std::vector<int> mapped;
        for (int a : w) mapped.push_back(gen_of_r_arrow(a));
        pd.words[r_vertex(u)].push_back(std::move(mapped));
      }
    }
    pd.e_vertex = r_vertex(i);
    pd.e_index = inner.e_index;
    return pd;
  }

  int j = i - nR();
  const auto& inner = m_.right->projective(j);
  std::vector<int> dims(n_vertices(), 0);
  for (int u = 0; u < nR(); ++u) dims[r_vertex(u)] = m_.dims[u][j];
  for (int v = 0; v < nS(); ++v) dims[s_vertex(v)] = inner.rep->dims[v];
  auto rep = std::make_shared<Rep>(self, dims);

  for (int b = 0; b < n_s_arrows(); ++b) rep->gen[gen_of_s_arrow(b)] = inner.rep->gen[b];
  for (int a = 0; a < n_r_arrows(); ++a) {
    const auto& ar = m_.left->algebra().quiver().arrows[a];
    rep->gen[gen_of_r_arrow(a)] = m_.left_act[a][j];
    (void)ar;
  }
  // m-generator action: path q from j, basis element mu -> mu . q
  const auto& s_paths = m_.right->algebra().path_basis();
  for (const auto& mg : m_gens_) {
    Matrix act(field_, m_.dims[mg.u][j], inner.rep->dims[mg.v]);
    int col = 0;
    for (const auto& p : s_paths) {
      if (p.src != j || p.tgt != mg.v) continue;
      // mu . q : apply right_act along the path, last arrow first
      Matrix vec(field_, m_.dims[mg.u][mg.v], 1);
      vec.set(mg.k, 0, 1);
      for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
        vec = m_.right_act[*it][mg.u] * vec;
      act.paste(0, col, vec);
      ++col;
    }
    rep->gen[gen_of_m(mg.u, mg.v, mg.k)] = act;
  }

  pd.rep = rep;
  pd.words.resize(n_vertices());
  for (int u = 0; u < nR(); ++u)
    for (int k = 0; k < m_.dims[u][j]; ++k)
      pd.words[r_vertex(u)].push_back({gen_of_m(u, j, k)});
  for (int v = 0; v < nS(); ++v)
    for (const auto& w : inner.words[v]) {
      std::vector<int> mapped;
      for (int b : w) mapped.push_back(gen_of_s_arrow(b));
      pd.words[s_vertex(v)].push_back(std::move(mapped));
    }
  pd.e_vertex = s_vertex(j);
  pd.e_index = inner.e_index;
  validate_rep(*pd.rep);
  return pd;
}

std::shared_ptr<const Cat> CommaCat::build_opposite() const {
  return std::shared_ptr<const Cat>(new CommaCat(m_.transposed(), name_ + "^op"));
}

int CommaCat::op_vertex(int i) const {
  return is_r_vertex(i) ? nS() + i : i - nR();
}

int CommaCat::op_gen(int g) const {
  int nra = n_r_arrows(), nsa = n_s_arrows();
  if (g < nra) return nsa + g;
  if (g < nra + nsa) return g - nra;
  const MGen& mg = m_gens_[g - nra - nsa];
  // opposite m-generators are ordered (v, u, k) with v major
  int idx = 0;
  for (int v = 0; v < nS(); ++v)
    for (int u = 0; u < nR(); ++u) {
      if (v == mg.v && u == mg.u) return nra + nsa + idx + mg.k;
      idx += m_.dims[u][v];
    }
  require(false, "op_gen: m generator not found");
  return -1;
}

std::vector<int> CommaCat::unit_perm(int i, int w) const {
  if (is_r_vertex(i) && is_r_vertex(w)) return m_.left->unit_perm(i, w);
  if (!is_r_vertex(i) && !is_r_vertex(w)) return m_.right->unit_perm(i - nR(), w - nR());
  if (is_r_vertex(i) && !is_r_vertex(w)) {
    // the graded piece M(i, w) maps to itself on the opposite side
    std::vector<int> perm(m_.dims[i][w - nR()]);
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
    return perm;
  }
  return {};  // e_s Lambda e_r = 0
}

// ------------------------------------------------------------ triple views

Triple rep_to_triple(const Rep& x) {
  auto cc = std::dynamic_pointer_cast<const CommaCat>(x.cat);
  require(static_cast<bool>(cc), "rep_to_triple wants a comma representation");

  Triple t;
  std::vector<int> adims(cc->nR()), bdims(cc->nS());
  for (int u = 0; u < cc->nR(); ++u) adims[u] = x.dims[cc->r_vertex(u)];
  for (int v = 0; v < cc->nS(); ++v) bdims[v] = x.dims[cc->s_vertex(v)];
  t.a = Rep(std::static_pointer_cast<const Cat>(cc->left_cat()), adims);
  t.b = Rep(std::static_pointer_cast<const Cat>(cc->right_cat()), bdims);
  for (int a = 0; a < cc->n_r_arrows(); ++a) t.a.gen[a] = x.gen[cc->gen_of_r_arrow(a)];
  for (int b = 0; b < cc->n_s_arrows(); ++b) t.b.gen[b] = x.gen[cc->gen_of_s_arrow(b)];
  validate_rep(t.a);
  validate_rep(t.b);

  t.tb = cc->functor().apply(t.b);
  const Bimodule& m = cc->bimodule();
  t.phi.resize(cc->nR());
  for (int u = 0; u < cc->nR(); ++u) {
    int big = t.tb.slot_off[u][cc->nS()];
    Matrix g(cc->field(), adims[u], big);
    for (int v = 0; v < cc->nS(); ++v)
      for (int mi = 0; mi < m.dims[u][v]; ++mi)
        for (int nj = 0; nj < bdims[v]; ++nj) {
          const Matrix& xm = x.gen[cc->gen_of_m(u, v, mi)];
          for (int r = 0; r < adims[u]; ++r)
            g.set(r, t.tb.slot_off[u][v] + mi * bdims[v] + nj, xm.get_q(r, nj));
        }
    t.phi[u] = g * t.tb.sect[u];
    require(t.phi[u] * t.tb.proj[u] == g, "phi not well defined on the tensor quotient");
  }
  return t;
}

Morph phi_morph(const Triple& t) {
  Morph f(t.tb.rep, t.a);
  f.maps = t.phi;
  validate_morph(f);
  return f;
}

Rep triple_to_rep(const CommaPtr& cc, const Rep& a, const Rep& b, const std::vector<Matrix>& phi) {
  validate_rep(a);
  validate_rep(b);
  TApplied tb = cc->functor().apply(b);
  std::vector<int> dims(cc->n_vertices(), 0);
  for (int u = 0; u < cc->nR(); ++u) dims[cc->r_vertex(u)] = a.dims[u];
  for (int v = 0; v < cc->nS(); ++v) dims[cc->s_vertex(v)] = b.dims[v];
  Rep x(std::static_pointer_cast<const Cat>(cc), dims);
  for (int ar = 0; ar < cc->n_r_arrows(); ++ar) x.gen[cc->gen_of_r_arrow(ar)] = a.gen[ar];
  for (int br = 0; br < cc->n_s_arrows(); ++br) x.gen[cc->gen_of_s_arrow(br)] = b.gen[br];

  const Bimodule& m = cc->bimodule();
  for (int u = 0; u < cc->nR(); ++u) {
    require(phi[u].rows() == a.dims[u] && phi[u].cols() == tb.rep.dims[u],
            "phi has the wrong shape");
    Matrix g = phi[u] * tb.proj[u];
    for (int v = 0; v < cc->nS(); ++v)
      for (int mi = 0; mi < m.dims[u][v]; ++mi) {
        Matrix xm(cc->field(), a.dims[u], b.dims[v]);
        for (int nj = 0; nj < b.dims[v]; ++nj)
          for (int r = 0; r < a.dims[u]; ++r)
            xm.set(r, nj, g.get_q(r, tb.slot_off[u][v] + mi * b.dims[v] + nj));
        x.gen[cc->gen_of_m(u, v, mi)] = xm;
      }
  }
  validate_rep(x);
  return x;
}

Morph a_component(const Morph& f) {
  auto cc = std::dynamic_pointer_cast<const CommaCat>(f.src.cat);
  require(static_cast<bool>(cc), "a_component wants a comma morphism");
  Triple ts = rep_to_triple(f.src), tt = rep_to_triple(f.tgt);
  Morph out(ts.a, tt.a);
  for (int u = 0; u < cc->nR(); ++u) out.maps[u] = f.maps[cc->r_vertex(u)];
  validate_morph(out);
  return out;
}

Morph b_component(const Morph& f) {
  auto cc = std::dynamic_pointer_cast<const CommaCat>(f.src.cat);
  require(static_cast<bool>(cc), "b_component wants a comma morphism");
  Triple ts = rep_to_triple(f.src), tt = rep_to_triple(f.tgt);
  Morph out(ts.b, tt.b);
  for (int v = 0; v < cc->nS(); ++v) out.maps[v] = f.maps[cc->s_vertex(v)];
  validate_morph(out);
  return out;
}

Rep apply_p(const CommaPtr& cc, const Rep& a, const Rep& b) {
  TApplied tb = cc->functor().apply(b);
  std::vector<Matrix> phi(cc->nR());
  std::vector<int> adims(cc->nR());
  for (int u = 0; u < cc->nR(); ++u) adims[u] = a.dims[u] + tb.rep.dims[u];

  // A-part = a + T(b); phi = inclusion of the second summand
  Rep asum(std::static_pointer_cast<const Cat>(cc->left_cat()), adims);
  for (int ar = 0; ar < cc->n_r_arrows(); ++ar) {
    const auto& arr = cc->left_cat()->algebra().quiver().arrows[ar];
    asum.gen[ar].paste(0, 0, a.gen[ar]);
    asum.gen[ar].paste(a.dims[arr.tgt], a.dims[arr.src], tb.rep.gen[ar]);
  }
  for (int u = 0; u < cc->nR(); ++u) {
    Matrix m(cc->field(), adims[u], tb.rep.dims[u]);
    for (int k = 0; k < tb.rep.dims[u]; ++k) m.set(a.dims[u] + k, k, 1);
    phi[u] = m;
  }
  return triple_to_rep(cc, asum, b, phi);
}

Morph apply_p_morph(const CommaPtr& cc, const Morph& fa, const Morph& fb) {
  Rep src = apply_p(cc, fa.src, fb.src);
  Rep tgt = apply_p(cc, fa.tgt, fb.tgt);
  TApplied tsrc = cc->functor().apply(fb.src);
  TApplied ttgt = cc->functor().apply(fb.tgt);
  Morph tf = cc->functor().apply_morph(fb, tsrc, ttgt);

  Morph out(src, tgt);
  for (int u = 0; u < cc->nR(); ++u) {
    Matrix m(cc->field(), tgt.dims[cc->r_vertex(u)], src.dims[cc->r_vertex(u)]);
    m.paste(0, 0, fa.maps[u]);
    m.paste(fa.tgt.dims[u], fa.src.dims[u], tf.maps[u]);
    out.maps[cc->r_vertex(u)] = m;
  }
  for (int v = 0; v < cc->nS(); ++v) out.maps[cc->s_vertex(v)] = fb.maps[v];
  validate_morph(out);
  return out;
}

// ------------------------------------------------------- triangular splits

TriangularSplit split_triangular(const std::shared_ptr<const AlgebraCat>& lambda,
                                 const std::vector<int>& r_verts_in) {
  const auto& alg = lambda->algebra();
  int n = alg.n_vertices();
  std::vector<bool> is_r(n, false);
  for (int v : r_verts_in) {
    require(v >= 0 && v < n, "split: vertex out of range");
    is_r[v] = true;
  }
  TriangularSplit sp;
  sp.lambda = lambda;
  for (int v = 0; v < n; ++v) (is_r[v] ? sp.r_verts : sp.s_verts).push_back(v);
  if (sp.r_verts.empty() || sp.s_verts.empty())
    fail(ErrorKind::Input, "split needs vertices on both sides");

  for (const auto& a : alg.quiver().arrows)
    if (is_r[a.src] && !is_r[a.tgt])
      fail(ErrorKind::NotTriangular,
           "arrow '" + a.name + "' runs from the R-side into the S-side");

  auto induced = [&](const std::vector<int>& verts, const std::string& suffix) {
    std::vector<int> vpos(n, -1);
    Quiver q;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      vpos[verts[i]] = static_cast<int>(i);
      q.vertices.push_back(alg.quiver().vertices[verts[i]]);
    }
    std::vector<int> arrow_pos(alg.n_arrows(), -1);
    for (int a = 0; a < alg.n_arrows(); ++a) {
      const auto& ar = alg.quiver().arrows[a];
      if (vpos[ar.src] >= 0 && vpos[ar.tgt] >= 0) {
        arrow_pos[a] = static_cast<int>(q.arrows.size());
        q.arrows.push_back({ar.name, vpos[ar.src], vpos[ar.tgt]});
      }
    }
    std::vector<std::vector<std::string>> rels;
    for (const auto& rel : alg.relations()) {
      bool inside = true;
      for (int a : rel)
        if (arrow_pos[a] < 0) { inside = false; break; }
      if (!inside) continue;
      std::vector<std::string> names;
      for (int a : rel) names.push_back(alg.quiver().arrows[a].name);
      rels.push_back(std::move(names));
    }
    return AlgebraCat::make(std::make_shared<MonomialAlgebra>(
        alg.name() + suffix, std::move(q), alg.field(), std::move(rels)));
  };

  auto rc = induced(sp.r_verts, ".R");
  auto sc = induced(sp.s_verts, ".S");

  // the bimodule: basis paths from an s-vertex to an r-vertex
  Bimodule m;
  m.name = alg.name() + ".M";
  m.left = rc;
  m.right = sc;
  int nr = rc->n_vertices(), ns = sc->n_vertices();
  m.dims.assign(nr, std::vector<int>(ns, 0));

  std::vector<int> rpos(n, -1), spos(n, -1);
  for (std::size_t i = 0; i < sp.r_verts.size(); ++i) rpos[sp.r_verts[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < sp.s_verts.size(); ++i) spos[sp.s_verts[i]] = static_cast<int>(i);

  const auto& basis = alg.path_basis();
  std::vector<std::vector<std::vector<int>>> piece(nr, std::vector<std::vector<int>>(ns));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Path& p = basis[i];
    if (spos[p.src] >= 0 && rpos[p.tgt] >= 0)
      piece[rpos[p.tgt]][spos[p.src]].push_back(static_cast<int>(i));
  }
  for (int u = 0; u < nr; ++u)
    for (int v = 0; v < ns; ++v) m.dims[u][v] = static_cast<int>(piece[u][v].size());

  auto local = [&](int u, int v, int pidx) {
    const auto& lst = piece[u][v];
    for (std::size_t k = 0; k < lst.size(); ++k)
      if (lst[k] == pidx) return static_cast<int>(k);
    return -1;
  };

  for (int a = 0; a < rc->algebra().n_arrows(); ++a) {
    const auto& arr = rc->algebra().quiver().arrows[a];
    int la = alg.quiver().arrow_index(arr.name);
    std::vector<Matrix> acts;
    for (int v = 0; v < ns; ++v) {
      Matrix act(alg.field(), m.dims[arr.tgt][v], m.dims[arr.src][v]);
      for (std::size_t k = 0; k < piece[arr.src][v].size(); ++k) {
        Path ext = basis[piece[arr.src][v][k]];
        ext.arrows.push_back(la);
        ext.tgt = alg.quiver().arrows[la].tgt;
        int bi = alg.basis_index(ext);
        if (bi >= 0) act.set(local(arr.tgt, v, bi), static_cast<int>(k), 1);
      }
      acts.push_back(std::move(act));
    }
    m.left_act.push_back(std::move(acts));
  }
  for (int b = 0; b < sc->algebra().n_arrows(); ++b) {
    const auto& brr = sc->algebra().quiver().arrows[b];
    int lb = alg.quiver().arrow_index(brr.name);
    std::vector<Matrix> acts;
    for (int u = 0; u < nr; ++u) {
      Matrix act(alg.field(), m.dims[u][brr.src], m.dims[u][brr.tgt]);
      for (std::size_t k = 0; k < piece[u][brr.tgt].size(); ++k) {
        const Path& p = basis[piece[u][brr.tgt][k]];
        Path ext{alg.quiver().arrows[lb].src, p.tgt, {lb}};
        ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
        int bi = alg.basis_index(ext);
        if (bi >= 0) act.set(local(u, brr.src, bi), static_cast<int>(k), 1);
      }
      acts.push_back(std::move(act));
    }
    m.right_act.push_back(std::move(acts));
  }

  sp.comma = CommaCat::make(std::move(m), alg.name() + ".comma");
  return sp;
}

int TriangularSplit::lambda_vertex_of_comma(int i) const {
  return comma->is_r_vertex(i) ? r_verts[i] : s_verts[i - comma->nR()];
}

int TriangularSplit::comma_vertex_of_lambda(int lv) const {
  for (std::size_t i = 0; i < r_verts.size(); ++i)
    if (r_verts[i] == lv) return comma->r_vertex(static_cast<int>(i));
  for (std::size_t i = 0; i < s_verts.size(); ++i)
    if (s_verts[i] == lv) return comma->s_vertex(static_cast<int>(i));
  require(false, "comma_vertex_of_lambda");
  return -1;
}

Rep TriangularSplit::module_to_triple(const Rep& mrep) const {
  require(mrep.cat == std::static_pointer_cast<const Cat>(lambda), "module over the wrong algebra");
  const auto& alg = lambda->algebra();
  std::vector<int> dims(comma->n_vertices(), 0);
  for (int lv = 0; lv < alg.n_vertices(); ++lv)
    dims[comma_vertex_of_lambda(lv)] = mrep.dims[lv];
  Rep x(std::static_pointer_cast<const Cat>(comma), dims);

  for (int a = 0; a < comma->n_r_arrows(); ++a) {
    int la = alg.quiver().arrow_index(comma->left_cat()->algebra().quiver().arrows[a].name);
    x.gen[comma->gen_of_r_arrow(a)] = mrep.gen[la];
  }
  for (int b = 0; b < comma->n_s_arrows(); ++b) {
    int lb = alg.quiver().arrow_index(comma->right_cat()->algebra().quiver().arrows[b].name);
    x.gen[comma->gen_of_s_arrow(b)] = mrep.gen[lb];
  }
  // m-generators act by their path
  const auto& basis = alg.path_basis();
  for (const auto& mg : comma->m_gens()) {
    // find the path for (u, v, k): k-th basis path from s_verts[v] to r_verts[u]
    int count = 0;
    for (const auto& p : basis) {
      if (p.src != s_verts[mg.v] || p.tgt != r_verts[mg.u]) continue;
      if (count == mg.k) {
        x.gen[comma->gen_of_m(mg.u, mg.v, mg.k)] = AlgebraCat::path_action(mrep, p);
        break;
      }
      ++count;
    }
  }
  validate_rep(x);
  return x;
}

Rep TriangularSplit::triple_to_module(const Rep& t) const {
  require(t.cat == std::static_pointer_cast<const Cat>(comma), "triple over the wrong comma category");
  const auto& alg = lambda->algebra();
  std::vector<int> dims(alg.n_vertices(), 0);
  for (int i = 0; i < comma->n_vertices(); ++i) dims[lambda_vertex_of_comma(i)] = t.dims[i];
  Rep m(std::static_pointer_cast<const Cat>(lambda), dims);

  for (int a = 0; a < alg.n_arrows(); ++a) {
    const auto& ar = alg.quiver().arrows[a];
    bool src_r = std::find(r_verts.begin(), r_verts.end(), ar.src) != r_verts.end();
    bool tgt_r = std::find(r_verts.begin(), r_verts.end(), ar.tgt) != r_verts.end();
    if (src_r && tgt_r) {
      int ra = comma->left_cat()->algebra().quiver().arrow_index(ar.name);
      m.gen[a] = t.gen[comma->gen_of_r_arrow(ra)];
    } else if (!src_r && !tgt_r) {
      int sb = comma->right_cat()->algebra().quiver().arrow_index(ar.name);
      m.gen[a] = t.gen[comma->gen_of_s_arrow(sb)];
    } else {
      // a crossing arrow is itself a length-one path in the bimodule basis
      const auto& basis = alg.path_basis();
      int u = -1, v = -1, k = -1, count = 0;
      for (std::size_t i = 0; i < r_verts.size(); ++i)
        if (r_verts[i] == ar.tgt) u = static_cast<int>(i);
      for (std::size_t i = 0; i < s_verts.size(); ++i)
        if (s_verts[i] == ar.src) v = static_cast<int>(i);
      for (const auto& p : basis) {
        if (p.src != ar.src || p.tgt != ar.tgt) continue;
        if (p.arrows.size() == 1 && p.arrows[0] == a) { k = count; break; }
        ++count;
      }
      require(u >= 0 && v >= 0 && k >= 0, "crossing arrow not found in the bimodule basis");
      m.gen[a] = t.gen[comma->gen_of_m(u, v, k)];
    }
  }
  validate_rep(m);
  return m;
}

// ------------------------------------------------------------- membership

ProjTripleReport is_projective_triple(const Rep& x) {
  Triple t = rep_to_triple(x);
  ProjTripleReport rep;
  rep.b_projective = is_projective(t.b);
  Morph phi = phi_morph(t);
  rep.phi_monic = is_mono(phi);
  if (rep.phi_monic) {
    SubQuot ck = cokernel(phi);
    rep.coker_projective = is_projective(ck.rep);
  }
  rep.verdict = rep.b_projective && rep.phi_monic && rep.coker_projective;
  return rep;
}

bool in_additive_closure(const Rep& x, const std::vector<Rep>& members) {
  if (x.total_dim() == 0) return true;
  Decomposition d = decompose(x);
  for (const auto& s : d.summands)
    if (find_in_list(s.rep, members) < 0) return false;
  return true;
}

MembershipReport membership_BXY(const Rep& x, const std::vector<Rep>& x_class,
                                const std::vector<Rep>& y_class) {
  Triple t = rep_to_triple(x);
  MembershipReport rep;
  rep.b_in_y = in_additive_closure(t.b, y_class);
  Morph phi = phi_morph(t);
  rep.phi_monic = is_mono(phi);
  if (rep.phi_monic) {
    SubQuot ck = cokernel(phi);
    rep.coker_in_x = in_additive_closure(ck.rep, x_class);
  }
  rep.member = rep.b_in_y && rep.phi_monic && rep.coker_in_x;
  return rep;
}

}  // namespace qhom
