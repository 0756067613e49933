#include "qhom/cat.hpp"

#include <algorithm>
#include <sstream>

namespace qhom {

const Cat::ProjData& Cat::projective(int v) const {
  if (proj_cache_.empty()) proj_cache_.resize(n_vertices());
  require(v >= 0 && v < n_vertices(), "projective: bad vertex");
  if (!proj_cache_[v]) proj_cache_[v] = build_projective(v);
  return *proj_cache_[v];
}

std::shared_ptr<const Cat> Cat::opposite() const {
  if (!op_cache_) {
    auto op = build_opposite();
    op->op_cache_ = shared_from_this();
    op_cache_ = op;
  }
  return op_cache_;
}

Rep::Rep(CatPtr c, std::vector<int> d) : cat(std::move(c)), dims(std::move(d)) {
  require(static_cast<int>(dims.size()) == cat->n_vertices(), "rep dims size");
  gen.reserve(cat->n_gens());
  for (const auto& g : cat->gens())
    gen.emplace_back(cat->field(), dims[g.tgt], dims[g.src]);
}

int Rep::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

std::string Rep::dims_str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ",";
    os << dims[i];
  }
  os << ")";
  return os.str();
}

Rep zero_rep(const CatPtr& cat) { return Rep(cat, std::vector<int>(cat->n_vertices(), 0)); }

Rep simple_rep(const CatPtr& cat, int v) {
  std::vector<int> d(cat->n_vertices(), 0);
  d[v] = 1;
  return Rep(cat, std::move(d));
}

void validate_rep(const Rep& r) {
  require(static_cast<bool>(r.cat), "rep without category");
  require(static_cast<int>(r.dims.size()) == r.cat->n_vertices(), "rep dims size");
  require(static_cast<int>(r.gen.size()) == r.cat->n_gens(), "rep gen count");
  for (int g = 0; g < r.cat->n_gens(); ++g) {
    const auto& gd = r.cat->gens()[g];
    if (r.gen[g].rows() != r.dims[gd.tgt] || r.gen[g].cols() != r.dims[gd.src])
      fail(ErrorKind::Input, "generator '" + gd.name + "' has shape " +
                                 std::to_string(r.gen[g].rows()) + "x" + std::to_string(r.gen[g].cols()) +
                                 ", expected " + std::to_string(r.dims[gd.tgt]) + "x" + std::to_string(r.dims[gd.src]));
  }
  std::string err = r.cat->check_rep(r);
  if (!err.empty()) fail(ErrorKind::Input, "relations violated: " + err);
}

Morph::Morph(Rep s, Rep t) : src(std::move(s)), tgt(std::move(t)) {
  maps.reserve(src.cat->n_vertices());
  for (int v = 0; v < src.cat->n_vertices(); ++v)
    maps.emplace_back(src.cat->field(), tgt.dims[v], src.dims[v]);
}

bool Morph::is_zero_morph() const {
  for (const auto& m : maps)
    if (!m.is_zero()) return false;
  return true;
}

Morph zero_morph(const Rep& s, const Rep& t) { return Morph(s, t); }

Morph identity_morph(const Rep& x) {
  Morph f(x, x);
  for (int v = 0; v < x.cat->n_vertices(); ++v)
    f.maps[v] = Matrix::identity(x.cat->field(), x.dims[v]);
  return f;
}

void validate_morph(const Morph& f) {
  require(f.src.cat == f.tgt.cat, "morphism across categories");
  const Cat& c = *f.src.cat;
  for (int g = 0; g < c.n_gens(); ++g) {
    const auto& gd = c.gens()[g];
    Matrix lhs = f.maps[gd.tgt] * f.src.gen[g];
    Matrix rhs = f.tgt.gen[g] * f.maps[gd.src];
    require(lhs == rhs, "morphism does not commute with generator '" + gd.name + "'");
  }
}

Morph compose(const Morph& g, const Morph& f) {
  require(f.tgt.same_shape(g.src) , "compose: shape mismatch");
  Morph h(f.src, g.tgt);
  for (std::size_t v = 0; v < h.maps.size(); ++v) h.maps[v] = g.maps[v] * f.maps[v];
  return h;
}

Morph add(const Morph& f, const Morph& g) {
  Morph h = f;
  for (std::size_t v = 0; v < h.maps.size(); ++v) h.maps[v] = f.maps[v] + g.maps[v];
  return h;
}

Morph negate(const Morph& f) {
  Morph h = f;
  for (auto& m : h.maps) m = -m;
  return h;
}

Morph scale(const Morph& f, const mpq_class& k) {
  Morph h = f;
  for (auto& m : h.maps) m = m.scaled(k);
  return h;
}

bool is_mono(const Morph& f) {
  for (std::size_t v = 0; v < f.maps.size(); ++v)
    if (f.maps[v].rank() != f.src.dims[v]) return false;
  return true;
}

bool is_epi(const Morph& f) {
  for (std::size_t v = 0; v < f.maps.size(); ++v)
    if (f.maps[v].rank() != f.tgt.dims[v]) return false;
  return true;
}

bool is_iso_morph(const Morph& f) { return f.src.dims == f.tgt.dims && is_mono(f) && is_epi(f); }

std::optional<Morph> invert(const Morph& f) {
  if (f.src.dims != f.tgt.dims) return std::nullopt;
  Morph g(f.tgt, f.src);
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    auto inv = f.maps[v].inverse();
    if (!inv) return std::nullopt;
    g.maps[v] = *inv;
  }
  return g;
}

// ---------------------------------------------------------------- AlgebraCat

AlgebraCat::AlgebraCat(std::shared_ptr<const MonomialAlgebra> a)
    : Cat(a->name(), a->field(), a->quiver().vertices,
          [&] {
            std::vector<Gen> gs;
            for (const auto& ar : a->quiver().arrows) gs.push_back({ar.name, ar.src, ar.tgt});
            return gs;
          }()),
      alg_(std::move(a)) {}

std::shared_ptr<const AlgebraCat> AlgebraCat::make(std::shared_ptr<const MonomialAlgebra> a) {
  return std::shared_ptr<const AlgebraCat>(new AlgebraCat(std::move(a)));
}

std::string AlgebraCat::check_rep(const Rep& r) const {
  for (const auto& rel : alg_->relations()) {
    // compose arrow matrices, first arrow applied first
    Matrix m = r.gen[rel[0]];
    for (std::size_t i = 1; i < rel.size(); ++i) m = r.gen[rel[i]] * m;
    if (!m.is_zero()) {
      std::ostringstream os;
      os << "relation";
      for (int a : rel) os << " " << alg_->quiver().arrows[a].name;
      os << " acts nonzero";
      return os.str();
    }
  }
  return {};
}

Matrix AlgebraCat::path_action(const Rep& r, const Path& p) {
  if (p.arrows.empty()) return Matrix::identity(r.cat->field(), r.dims[p.src]);
  Matrix m = r.gen[p.arrows[0]];
  for (std::size_t i = 1; i < p.arrows.size(); ++i) m = r.gen[p.arrows[i]] * m;
  return m;
}

std::vector<int> AlgebraCat::paths_from(int v) const {
  std::vector<int> out;
  const auto& basis = alg_->path_basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].src == v) out.push_back(static_cast<int>(i));
  return out;
}

Cat::ProjData AlgebraCat::build_projective(int v) const {
  const auto& basis = alg_->path_basis();
  std::vector<int> mine = paths_from(v);

  // per-vertex lists of path indices, in global basis order
  std::vector<std::vector<int>> at_vertex(n_vertices());
  for (int pi : mine) at_vertex[basis[pi].tgt].push_back(pi);

  ProjData pd;
  std::vector<int> dims(n_vertices());
  for (int u = 0; u < n_vertices(); ++u) dims[u] = static_cast<int>(at_vertex[u].size());
  auto rep = std::make_shared<Rep>(shared_from_this(), dims);

  auto local_index = [&](int path_idx) {
    int u = basis[path_idx].tgt;
    const auto& lst = at_vertex[u];
    for (std::size_t k = 0; k < lst.size(); ++k)
      if (lst[k] == path_idx) return static_cast<int>(k);
    require(false, "projective basis lookup");
    return -1;
  };

  for (int g = 0; g < n_gens(); ++g) {
    const auto& gd = gens_[g];
    for (std::size_t k = 0; k < at_vertex[gd.src].size(); ++k) {
      Path ext = basis[at_vertex[gd.src][k]];
      ext.arrows.push_back(g);
      ext.tgt = gd.tgt;
      int bi = alg_->basis_index(ext);
      if (bi >= 0) rep->gen[g].set(local_index(bi), static_cast<int>(k), 1);
    }
  }

  pd.rep = rep;
  pd.words.resize(n_vertices());
  for (int u = 0; u < n_vertices(); ++u)
    for (int pi : at_vertex[u]) pd.words[u].push_back(basis[pi].arrows);
  pd.e_vertex = v;
  pd.e_index = local_index(alg_->basis_index(Path{v, v, {}}));
  return pd;
}

std::shared_ptr<const Cat> AlgebraCat::build_opposite() const {
  auto op_alg = std::make_shared<MonomialAlgebra>(alg_->opposite_algebra());
  return std::shared_ptr<const Cat>(new AlgebraCat(std::move(op_alg)));
}

std::vector<int> AlgebraCat::unit_perm(int i, int w) const {
  // paths w -> i here, versus opposite paths i -> w (reversed arrow sequences)
  const auto& basis = alg_->path_basis();
  auto op = std::static_pointer_cast<const AlgebraCat>(
      std::static_pointer_cast<const Cat>(opposite()));
  const auto& op_basis = op->algebra().path_basis();

  std::vector<std::vector<int>> op_list;  // arrow sequences of op paths i->w, op order
  for (const auto& p : op_basis)
    if (p.src == i && p.tgt == w) op_list.push_back(p.arrows);

  std::vector<int> perm;
  for (const auto& p : basis) {
    if (p.src != w || p.tgt != i) continue;
    std::vector<int> rev(p.arrows.rbegin(), p.arrows.rend());
    int found = -1;
    for (std::size_t k = 0; k < op_list.size(); ++k)
      if (op_list[k] == rev) { found = static_cast<int>(k); break; }
    require(found >= 0, "unit_perm: reversed path missing on the opposite side");
    perm.push_back(found);
  }
  return perm;
}

}  // namespace qhom
