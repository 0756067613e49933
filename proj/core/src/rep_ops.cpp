#include "qhom/rep_ops.hpp"

#include <algorithm>
#include <random>

namespace qhom {

namespace {

// Basis of the column space: the pivot columns of m, in column order.
Matrix column_basis(const Matrix& m) {
  auto r = m.rref();
  Matrix b(m.field(), m.rows(), r.rank);
  for (int k = 0; k < r.rank; ++k)
    b.paste(0, k, m.block(0, r.pivots[k], m.rows(), 1));
  return b;
}

// Quotient of k^n by the span of the columns of basis (full column rank):
// a projection pi (codim x n) and section sigma (n x codim) with pi.sigma = id,
// pi.basis = 0.  The complement consists of standard basis vectors at the
// non-pivot coordinates of the row space of basis^T.
struct QuotData {
  Matrix pi, sigma;
};
QuotData quotient_data(Field f, int n, const Matrix& basis) {
  auto rt = basis.transpose().rref();
  std::vector<bool> piv(n, false);
  for (int c : rt.pivots) piv[c] = true;
  std::vector<int> comp;
  for (int j = 0; j < n; ++j)
    if (!piv[j]) comp.push_back(j);
  int codim = static_cast<int>(comp.size());
  require(codim == n - basis.cols(), "quotient_data: basis not independent");

  Matrix sigma(f, n, codim);
  for (int k = 0; k < codim; ++k) sigma.set(comp[k], k, 1);

  Matrix full = Matrix::hcat(basis, sigma);
  auto inv = full.inverse();
  require(inv.has_value(), "quotient_data: complement is not complementary");
  QuotData q;
  q.pi = inv->block(basis.cols(), 0, codim, n);
  q.sigma = sigma;
  return q;
}

}  // namespace

// ----------------------------------------------------------------- sums

SumData direct_sum(const std::vector<Rep>& parts) {
  require(!parts.empty(), "direct_sum of nothing");
  CatPtr cat = parts[0].cat;
  int nv = cat->n_vertices();
  std::vector<int> dims(nv, 0);
  for (const auto& p : parts) {
    require(p.cat == cat, "direct_sum across categories");
    for (int v = 0; v < nv; ++v) dims[v] += p.dims[v];
  }
  Rep sum(cat, dims);
  std::vector<int> off(nv, 0);
  std::vector<std::vector<int>> offs;  // per part, per vertex
  for (const auto& p : parts) {
    offs.push_back(off);
    for (int v = 0; v < nv; ++v) off[v] += p.dims[v];
  }
  for (int g = 0; g < cat->n_gens(); ++g) {
    const auto& gd = cat->gens()[g];
    for (std::size_t k = 0; k < parts.size(); ++k)
      sum.gen[g].paste(offs[k][gd.tgt], offs[k][gd.src], parts[k].gen[g]);
  }
  SumData out;
  out.rep = sum;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Morph in(parts[k], sum), pr(sum, parts[k]);
    for (int v = 0; v < nv; ++v) {
      for (int j = 0; j < parts[k].dims[v]; ++j) {
        in.maps[v].set(offs[k][v] + j, j, 1);
        pr.maps[v].set(j, offs[k][v] + j, 1);
      }
    }
    out.incl.push_back(std::move(in));
    out.proj.push_back(std::move(pr));
  }
  return out;
}

Morph from_summands(const SumData& sum, const std::vector<Morph>& fs, const Rep& tgt) {
  require(fs.size() == sum.incl.size(), "from_summands arity");
  Morph out = zero_morph(sum.rep, tgt);
  for (std::size_t k = 0; k < fs.size(); ++k)
    out = add(out, compose(fs[k], sum.proj[k]));
  return out;
}

Morph into_summands(const SumData& sum, const std::vector<Morph>& gs, const Rep& src) {
  require(gs.size() == sum.incl.size(), "into_summands arity");
  Morph out = zero_morph(src, sum.rep);
  for (std::size_t k = 0; k < gs.size(); ++k)
    out = add(out, compose(sum.incl[k], gs[k]));
  return out;
}

// ------------------------------------------------------------ hom spaces

std::vector<Morph> hom_space(const Rep& x, const Rep& y) {
  require(x.cat == y.cat, "hom across categories");
  const Cat& cat = *x.cat;
  Field f = cat.field();
  int nv = cat.n_vertices();

  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + y.dims[v] * x.dims[v];
  int unknowns = off[nv];

  int rows = 0;
  for (int g = 0; g < cat.n_gens(); ++g) {
    const auto& gd = cat.gens()[g];
    rows += y.dims[gd.tgt] * x.dims[gd.src];
  }

  Matrix eq(f, rows, unknowns);
  int row = 0;
  for (int g = 0; g < cat.n_gens(); ++g) {
    const auto& gd = cat.gens()[g];
    int s = gd.src, t = gd.tgt;
    for (int i = 0; i < y.dims[t]; ++i)
      for (int j = 0; j < x.dims[s]; ++j) {
        // sum_c f_t(i,c) Xg(c,j) - sum_r Yg(i,r) f_s(r,j) = 0
        for (int c = 0; c < x.dims[t]; ++c) {
          mpq_class v = x.gen[g].get_q(c, j);
          if (v != 0) {
            int u = off[t] + i * x.dims[t] + c;
            eq.set(row, u, eq.get_q(row, u) + v);
          }
        }
        for (int r = 0; r < y.dims[s]; ++r) {
          mpq_class v = y.gen[g].get_q(i, r);
          if (v != 0) {
            int u = off[s] + r * x.dims[s] + j;
            eq.set(row, u, eq.get_q(row, u) - v);
          }
        }
        ++row;
      }
  }

  Matrix ker = eq.kernel_basis();
  std::vector<Morph> basis;
  for (int k = 0; k < ker.cols(); ++k) {
    Morph m(x, y);
    for (int v = 0; v < nv; ++v)
      for (int i = 0; i < y.dims[v]; ++i)
        for (int j = 0; j < x.dims[v]; ++j)
          m.maps[v].set(i, j, ker.get_q(off[v] + i * x.dims[v] + j, k));
    basis.push_back(std::move(m));
  }
  return basis;
}

int hom_dim(const Rep& x, const Rep& y) { return static_cast<int>(hom_space(x, y).size()); }

Matrix morph_flatten(const Morph& f) {
  Matrix out(f.src.cat->field(), 0, 1);
  for (const auto& m : f.maps) out = Matrix::vcat(out, m.vectorize());
  return out;
}

std::optional<Matrix> morph_coords(const Morph& f, const std::vector<Morph>& basis) {
  Matrix flat = morph_flatten(f);
  Matrix a(f.src.cat->field(), flat.rows(), static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    a.paste(0, static_cast<int>(k), morph_flatten(basis[k]));
  return a.solve(flat);
}

Morph morph_combine(const std::vector<Morph>& basis, const Matrix& coords, const Rep& src, const Rep& tgt) {
  Morph out = zero_morph(src, tgt);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    mpq_class c = coords.get_q(static_cast<int>(k), 0);
    if (c != 0) out = add(out, scale(basis[k], c));
  }
  return out;
}

std::optional<Morph> factor_through(const Morph& f, const Morph& e) {
  require(f.tgt.same_shape(e.tgt), "factor_through targets differ");
  auto basis = hom_space(f.src, e.src);
  Matrix a(f.src.cat->field(), morph_flatten(f).rows(), static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    a.paste(0, static_cast<int>(k), morph_flatten(compose(e, basis[k])));
  auto sol = a.solve(morph_flatten(f));
  if (!sol) return std::nullopt;
  return morph_combine(basis, *sol, f.src, e.src);
}

std::optional<Morph> cofactor_through(const Morph& f, const Morph& m) {
  require(f.src.same_shape(m.src), "cofactor_through sources differ");
  auto basis = hom_space(m.tgt, f.tgt);
  Matrix a(f.src.cat->field(), morph_flatten(f).rows(), static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    a.paste(0, static_cast<int>(k), morph_flatten(compose(basis[k], m)));
  auto sol = a.solve(morph_flatten(f));
  if (!sol) return std::nullopt;
  return morph_combine(basis, *sol, m.tgt, f.tgt);
}

// -------------------------------------------------------- factorization

SubQuot sub_from_columns(const Rep& x, const std::vector<Matrix>& cols) {
  const Cat& cat = *x.cat;
  int nv = cat.n_vertices();
  std::vector<Matrix> incl(nv);
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) {
    incl[v] = column_basis(cols[v]);
    dims[v] = incl[v].cols();
  }
  Rep sub(x.cat, dims);
  for (int g = 0; g < cat.n_gens(); ++g) {
    const auto& gd = cat.gens()[g];
    auto sol = solve_unique(incl[gd.tgt], x.gen[g] * incl[gd.src]);
    require(sol.has_value(), "sub_from_columns: span is not invariant");
    sub.gen[g] = *sol;
  }
  SubQuot out{std::move(sub), Morph()};
  out.map = Morph(out.rep, x);
  out.map.maps = std::move(incl);
  return out;
}

SubQuot quotient_by(const Rep& x, const Morph& incl) {
  const Cat& cat = *x.cat;
  int nv = cat.n_vertices();
  std::vector<QuotData> q(nv);
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) {
    q[v] = quotient_data(cat.field(), x.dims[v], column_basis(incl.maps[v]));
    dims[v] = q[v].pi.rows();
  }
  Rep quot(x.cat, dims);
  for (int g = 0; g < cat.n_gens(); ++g) {
    const auto& gd = cat.gens()[g];
    quot.gen[g] = q[gd.tgt].pi * x.gen[g] * q[gd.src].sigma;
    require((q[gd.tgt].pi * x.gen[g] * incl.maps[gd.src]).is_zero(),
            "quotient_by: subspace not invariant");
  }
  SubQuot out{std::move(quot), Morph()};
  out.map = Morph(x, out.rep);
  for (int v = 0; v < nv; ++v) out.map.maps[v] = q[v].pi;
  return out;
}

SubQuot kernel(const Morph& f) {
  std::vector<Matrix> cols;
  for (const auto& m : f.maps) cols.push_back(m.kernel_basis());
  return sub_from_columns(f.src, cols);
}

SubQuot cokernel(const Morph& f) {
  std::vector<Matrix> cols(f.maps.begin(), f.maps.end());
  SubQuot img = sub_from_columns(f.tgt, cols);
  return quotient_by(f.tgt, img.map);
}

Factorization factorize(const Morph& f) {
  Factorization out;
  out.kernel = kernel(f);
  std::vector<Matrix> cols(f.maps.begin(), f.maps.end());
  out.image = sub_from_columns(f.tgt, cols);
  out.to_image = Morph(f.src, out.image.rep);
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    auto sol = solve_unique(out.image.map.maps[v], f.maps[v]);
    require(sol.has_value(), "factorize: image coordinates");
    out.to_image.maps[v] = *sol;
  }
  out.cokernel = quotient_by(f.tgt, out.image.map);
  return out;
}

SubQuot radical(const Rep& x) {
  const Cat& cat = *x.cat;
  int nv = cat.n_vertices();
  std::vector<Matrix> cols(nv);
  for (int v = 0; v < nv; ++v) cols[v] = Matrix(cat.field(), x.dims[v], 0);
  for (int g = 0; g < cat.n_gens(); ++g)
    cols[cat.gens()[g].tgt] = Matrix::hcat(cols[cat.gens()[g].tgt], x.gen[g]);
  return sub_from_columns(x, cols);
}

SubQuot top(const Rep& x) { return quotient_by(x, radical(x).map); }

bool ses_is_exact(const ShortExact& s) {
  if (!is_mono(s.i) || !is_epi(s.p)) return false;
  if (!compose(s.p, s.i).is_zero_morph()) return false;
  for (std::size_t v = 0; v < s.i.maps.size(); ++v)
    if (s.i.src.dims[v] + s.p.tgt.dims[v] != s.i.tgt.dims[v]) return false;
  return true;
}

// ------------------------------------------------------------ projectives

Rep projective_rep(const CatPtr& cat, int v) { return *cat->projective(v).rep; }

Rep injective_rep(const CatPtr& cat, int v) {
  auto op = cat->opposite();
  return dual_k(*op->projective(cat->op_vertex(v)).rep);
}

Morph universal_from_projective(const CatPtr& cat, int v, const Rep& x, const Matrix& vec) {
  const auto& pd = cat->projective(v);
  require(vec.rows() == x.dims[v] && vec.cols() == 1, "universal map: bad vector");
  Morph f(*pd.rep, x);
  for (int u = 0; u < cat->n_vertices(); ++u) {
    for (std::size_t k = 0; k < pd.words[u].size(); ++k) {
      Matrix col = vec;
      for (int g : pd.words[u][k]) col = x.gen[g] * col;
      f.maps[u].paste(0, static_cast<int>(k), col);
    }
  }
  validate_morph(f);
  return f;
}

Cover projective_cover(const Rep& x) {
  const CatPtr& cat = x.cat;
  int nv = cat->n_vertices();
  SubQuot rad = radical(x);
  SubQuot tp = quotient_by(x, rad.map);

  // section columns of the top projection are canonical lift choices
  std::vector<Rep> parts;
  std::vector<Morph> maps;
  std::vector<int> mults(nv, 0);
  for (int v = 0; v < nv; ++v) {
    int t = tp.rep.dims[v];
    mults[v] = t;
    if (t == 0) continue;
    QuotData qd = quotient_data(cat->field(), x.dims[v], column_basis(rad.map.maps[v]));
    for (int k = 0; k < t; ++k) {
      parts.push_back(*cat->projective(v).rep);
      maps.push_back(universal_from_projective(cat, v, x, qd.sigma.block(0, k, x.dims[v], 1)));
    }
  }
  Cover out;
  if (parts.empty()) {
    out.proj = zero_rep(cat);
    out.epi = zero_morph(out.proj, x);
    out.mults = mults;
    require(x.is_zero_rep(), "cover of a nonzero module cannot be empty");
    return out;
  }
  SumData sum = direct_sum(parts);
  out.proj = sum.rep;
  out.epi = from_summands(sum, maps, x);
  out.mults = mults;
  require(is_epi(out.epi), "projective cover is not onto");
  // superfluous kernel: the kernel maps into the radical
  SubQuot ker = kernel(out.epi);
  Morph in_x = compose(out.epi, ker.map);
  require(compose(tp.map, in_x).is_zero_morph(), "projective cover kernel not superfluous");
  return out;
}

std::optional<Morph> splitting_of_epi(const Morph& e) {
  return factor_through(identity_morph(e.tgt), e);
}

std::optional<Morph> retraction_of_mono(const Morph& m) {
  return cofactor_through(identity_morph(m.src), m);
}

bool is_projective(const Rep& x) {
  if (x.is_zero_rep()) return true;
  Cover c = projective_cover(x);
  return splitting_of_epi(c.epi).has_value();
}

// ---------------------------------------------------------------- duality

Rep dual_k(const Rep& x) {
  auto op = x.cat->opposite();
  std::vector<int> dims(op->n_vertices(), 0);
  for (int v = 0; v < x.cat->n_vertices(); ++v) dims[x.cat->op_vertex(v)] = x.dims[v];
  Rep d(op, dims);
  for (int g = 0; g < x.cat->n_gens(); ++g)
    d.gen[x.cat->op_gen(g)] = x.gen[g].transpose();
  return d;
}

Morph dual_k_morph(const Morph& f) {
  Morph d(dual_k(f.tgt), dual_k(f.src));
  for (int v = 0; v < f.src.cat->n_vertices(); ++v)
    d.maps[f.src.cat->op_vertex(v)] = f.maps[v].transpose();
  return d;
}

Morph right_mult(const CatPtr& cat, int g) {
  const auto& gd = cat->gens()[g];
  const auto& src_proj = cat->projective(gd.src);
  Matrix vec = src_proj.rep->gen[g].block(0, src_proj.e_index, src_proj.rep->dims[gd.tgt], 1);
  // vec = the generator g inside P(src g) at vertex tgt g
  Matrix col(cat->field(), src_proj.rep->dims[gd.tgt], 1);
  col.paste(0, 0, vec);
  return universal_from_projective(cat, gd.tgt, *src_proj.rep, col);
}

HomDual dual_hom(const Rep& x) {
  const CatPtr& cat = x.cat;
  auto op = cat->opposite();
  HomDual out;
  out.hom_basis.resize(cat->n_vertices());
  std::vector<int> dims(op->n_vertices(), 0);
  for (int w = 0; w < cat->n_vertices(); ++w) {
    out.hom_basis[w] = hom_space(x, *cat->projective(w).rep);
    dims[cat->op_vertex(w)] = static_cast<int>(out.hom_basis[w].size());
  }
  Rep d(op, dims);
  for (int g = 0; g < cat->n_gens(); ++g) {
    const auto& gd = cat->gens()[g];
    // op generator maps (x*)_{op(tgt g)} -> (x*)_{op(src g)} : f -> rho_g . f
    Morph rho = right_mult(cat, g);
    Matrix m(cat->field(), dims[cat->op_vertex(gd.src)], dims[cat->op_vertex(gd.tgt)]);
    for (std::size_t k = 0; k < out.hom_basis[gd.tgt].size(); ++k) {
      auto coords = morph_coords(compose(rho, out.hom_basis[gd.tgt][k]), out.hom_basis[gd.src]);
      require(coords.has_value(), "dual_hom: composite outside hom space");
      m.paste(0, static_cast<int>(k), *coords);
    }
    d.gen[cat->op_gen(g)] = m;
  }
  out.rep = std::move(d);
  validate_rep(out.rep);
  return out;
}

Morph dual_hom_morph(const Morph& f, const HomDual& of_tgt, const HomDual& of_src) {
  require(of_tgt.rep.cat == of_src.rep.cat, "dual_hom_morph category mismatch");
  const CatPtr& cat = f.src.cat;
  Morph d(of_tgt.rep, of_src.rep);
  for (int w = 0; w < cat->n_vertices(); ++w) {
    int ov = cat->op_vertex(w);
    Matrix m(cat->field(), of_src.rep.dims[ov], of_tgt.rep.dims[ov]);
    for (std::size_t k = 0; k < of_tgt.hom_basis[w].size(); ++k) {
      auto coords = morph_coords(compose(of_tgt.hom_basis[w][k], f), of_src.hom_basis[w]);
      require(coords.has_value(), "dual_hom_morph: composite outside hom space");
      m.paste(0, static_cast<int>(k), *coords);
    }
    d.maps[ov] = m;
  }
  validate_morph(d);
  return d;
}

// --------------------------------------------------- iso and decomposition

namespace {

// iterate all coefficient vectors over F_p of given length, calling fn until
// it returns true; returns whether fn succeeded
template <typename Fn>
bool foreach_coeff_vector(std::int64_t p, int len, Fn&& fn) {
  std::vector<std::int64_t> c(len, 0);
  while (true) {
    if (fn(c)) return true;
    int i = 0;
    while (i < len && ++c[i] == p) c[i++] = 0;
    if (i == len) return false;
  }
}

Morph combine_int(const std::vector<Morph>& basis, const std::vector<std::int64_t>& c,
                  const Rep& src, const Rep& tgt) {
  Morph f = zero_morph(src, tgt);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (c[k] != 0) f = add(f, scale(basis[k], mpq_class(static_cast<long>(c[k]))));
  return f;
}

double pow_count(std::int64_t p, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) {
    r *= static_cast<double>(p);
    if (r > 1e18) return 1e18;
  }
  return r;
}

}  // namespace

std::optional<Morph> find_iso(const Rep& x, const Rep& y, const IsoOptions& opt) {
  require(x.cat == y.cat, "iso across categories");
  if (x.dims != y.dims) return std::nullopt;
  if (x.total_dim() == 0) return zero_morph(x, y);
  auto basis = hom_space(x, y);
  if (basis.empty()) return std::nullopt;
  int n = static_cast<int>(basis.size());
  Field f = x.cat->field();

  if (f.is_finite() && pow_count(f.p(), n) <= static_cast<double>(opt.enumeration_limit)) {
    Morph found;
    bool ok = foreach_coeff_vector(f.p(), n, [&](const std::vector<std::int64_t>& c) {
      Morph cand = combine_int(basis, c, x, y);
      if (is_iso_morph(cand)) { found = cand; return true; }
      return false;
    });
    if (ok) return found;
    return std::nullopt;  // exhaustive: certified non-isomorphic
  }

  // randomized search with a fixed seed; inconclusive failure is an error
  std::mt19937_64 rng(opt.seed ^ (static_cast<std::uint64_t>(x.total_dim()) << 32) ^ n);
  for (int t = 0; t < opt.random_trials; ++t) {
    Morph cand = zero_morph(x, y);
    for (int k = 0; k < n; ++k) {
      std::int64_t c = f.is_finite() ? static_cast<std::int64_t>(rng() % f.p())
                                     : static_cast<std::int64_t>(rng() % 19) - 9;
      if (c != 0) cand = add(cand, scale(basis[k], mpq_class(static_cast<long>(c))));
    }
    if (is_iso_morph(cand)) return cand;
  }
  fail(ErrorKind::IsoUndecided, "isomorphism search budget exhausted for " + x.dims_str());
}

bool is_iso(const Rep& x, const Rep& y, const IsoOptions& opt) { return find_iso(x, y, opt).has_value(); }

namespace {

// splits x as im(e) + im(1-e) for a nontrivial idempotent, if one is found
struct Split {
  SubQuot a, b;
};

std::optional<Split> split_by(const Rep& x, const Morph& e) {
  std::vector<Matrix> ca(e.maps.begin(), e.maps.end());
  SubQuot a = sub_from_columns(x, ca);
  Morph ce = add(identity_morph(x), negate(e));
  std::vector<Matrix> cb(ce.maps.begin(), ce.maps.end());
  SubQuot b = sub_from_columns(x, cb);
  if (a.rep.total_dim() == 0 || b.rep.total_dim() == 0) return std::nullopt;
  require(a.rep.total_dim() + b.rep.total_dim() == x.total_dim(), "idempotent split dims");
  return Split{std::move(a), std::move(b)};
}

std::optional<Split> try_split(const Rep& x, const DecompOptions& opt) {
  auto end_basis = hom_space(x, x);
  int n = static_cast<int>(end_basis.size());
  if (n == 1) return std::nullopt;  // End = k, local
  Field f = x.cat->field();
  if (!f.is_finite())
    fail(ErrorKind::FieldNotFinite, "decomposition requires a finite field");

  if (pow_count(f.p(), n) <= static_cast<double>(opt.enumeration_limit)) {
    std::optional<Split> found;
    foreach_coeff_vector(f.p(), n, [&](const std::vector<std::int64_t>& c) {
      Morph e = combine_int(end_basis, c, x, x);
      if (e.is_zero_morph()) return false;
      if (compose(e, e).maps != e.maps) return false;
      Morph ce = add(identity_morph(x), negate(e));
      if (ce.is_zero_morph()) return false;
      found = split_by(x, e);
      return found.has_value();
    });
    return found;  // nullopt: certified indecomposable (no nontrivial idempotent)
  }

  // Fitting decomposition with stabilized powers of random endomorphisms
  std::mt19937_64 rng(opt.seed ^ static_cast<std::uint64_t>(x.total_dim()));
  auto rank_of = [](const Morph& g) {
    int r = 0;
    for (const auto& m : g.maps) r += m.rank();
    return r;
  };
  for (int t = 0; t < opt.fitting_trials; ++t) {
    Morph g = zero_morph(x, x);
    for (int k = 0; k < n; ++k) {
      std::int64_t c = static_cast<std::int64_t>(rng() % f.p());
      if (c != 0) g = add(g, scale(end_basis[k], mpq_class(static_cast<long>(c))));
    }
    int steps = 0;
    while (steps < 24) {
      Morph g2 = compose(g, g);
      if (rank_of(g2) == rank_of(g)) break;
      g = std::move(g2);
      ++steps;
    }
    int r = rank_of(g);
    if (r == 0 || r == x.total_dim()) continue;
    std::vector<Matrix> ci(g.maps.begin(), g.maps.end());
    SubQuot im = sub_from_columns(x, ci);
    SubQuot ke = kernel(g);
    if (im.rep.total_dim() + ke.rep.total_dim() != x.total_dim()) continue;
    return Split{std::move(im), std::move(ke)};
  }
  fail(ErrorKind::DecompositionBudgetExceeded,
       "no splitting found within the trial budget for " + x.dims_str());
}

}  // namespace

bool is_indecomposable(const Rep& x, const DecompOptions& opt) {
  if (x.total_dim() == 0) return false;
  return !try_split(x, opt).has_value();
}

Decomposition decompose(const Rep& x, const DecompOptions& opt) {
  Decomposition out;
  if (x.total_dim() == 0) {
    out.witness = Morph(zero_rep(x.cat), x);
    return out;
  }

  std::vector<std::pair<Rep, Morph>> pieces;  // (leaf, inclusion into x)
  std::vector<std::pair<Rep, Morph>> work{{x, identity_morph(x)}};
  while (!work.empty()) {
    auto [y, incl] = std::move(work.back());
    work.pop_back();
    if (y.total_dim() == 0) continue;
    auto split = try_split(y, opt);
    if (!split) {
      pieces.emplace_back(std::move(y), std::move(incl));
      continue;
    }
    work.emplace_back(split->a.rep, compose(incl, split->a.map));
    work.emplace_back(split->b.rep, compose(incl, split->b.map));
  }

  // group pieces by isomorphism, deterministic order by (dim, dims, discovery)
  std::stable_sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
    if (a.first.total_dim() != b.first.total_dim()) return a.first.total_dim() < b.first.total_dim();
    return a.first.dims < b.first.dims;
  });
  std::vector<int> group(pieces.size(), -1);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (group[i] >= 0) continue;
    group[i] = static_cast<int>(out.summands.size());
    Summand s{pieces[i].first, 1};
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (group[j] >= 0) continue;
      if (is_iso(pieces[i].first, pieces[j].first)) {
        group[j] = group[i];
        ++s.mult;
      }
    }
    out.summands.push_back(std::move(s));
  }

  std::vector<Rep> parts;
  std::vector<Morph> incls;
  for (std::size_t gi = 0; gi < out.summands.size(); ++gi)
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (group[i] == static_cast<int>(gi)) {
        parts.push_back(pieces[i].first);
        incls.push_back(pieces[i].second);
      }
  SumData sum = direct_sum(parts);
  out.witness = from_summands(sum, incls, x);
  require(is_iso_morph(out.witness), "decomposition witness is not an isomorphism");
  return out;
}

// ------------------------------------------------------------ enumeration

std::vector<Rep> enumerate_indecomposables(const CatPtr& cat, int cap, const EnumOptions& opt) {
  if (!cat->field().is_finite())
    fail(ErrorKind::FieldNotFinite, "indecomposable enumeration requires a finite field");
  std::int64_t p = cat->field().p();
  int nv = cat->n_vertices();

  std::vector<Rep> found;

  // dimension vectors ordered by total, then lexicographically
  std::vector<std::vector<int>> vectors;
  std::vector<int> cur(nv, 0);
  auto gen_vectors = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nv - 1) {
      cur[pos] = remaining;
      vectors.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  for (int total = 1; total <= cap; ++total) gen_vectors(gen_vectors, 0, total);

  for (const auto& dims : vectors) {
    long entries = 0;
    for (int g = 0; g < cat->n_gens(); ++g) {
      const auto& gd = cat->gens()[g];
      entries += static_cast<long>(dims[gd.tgt]) * dims[gd.src];
    }
    if (pow_count(p, static_cast<int>(entries)) > static_cast<double>(opt.tuple_budget))
      fail(ErrorKind::EnumerationBudgetExceeded,
           "dimension vector " + Rep(cat, dims).dims_str() + " needs " +
               std::to_string(entries) + " entries over F" + std::to_string(p));

    Rep r(cat, dims);
    std::vector<std::pair<int, std::pair<int, int>>> slots;  // (gen, (row, col))
    for (int g = 0; g < cat->n_gens(); ++g) {
      const auto& gd = cat->gens()[g];
      for (int i = 0; i < dims[gd.tgt]; ++i)
        for (int j = 0; j < dims[gd.src]; ++j) slots.push_back({g, {i, j}});
    }

    std::vector<std::int64_t> vals(slots.size(), 0);
    bool done = slots.empty();
    bool first = true;
    while (!done || first) {
      first = false;
      for (std::size_t s = 0; s < slots.size(); ++s)
        r.gen[slots[s].first].set(slots[s].second.first, slots[s].second.second, vals[s]);
      if (cat->check_rep(r).empty() && is_indecomposable(r)) {
        bool fresh = true;
        for (const auto& old : found)
          if (old.dims == dims && is_iso(old, r)) { fresh = false; break; }
        if (fresh) found.push_back(r);
      }
      if (slots.empty()) break;
      std::size_t i = 0;
      while (i < slots.size() && ++vals[i] == p) vals[i++] = 0;
      done = (i == slots.size());
    }
  }
  return found;
}

int find_in_list(const Rep& x, const std::vector<Rep>& list) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (is_iso(x, list[i])) return static_cast<int>(i);
  return -1;
}

}  // namespace qhom
