#include "qhom/workspace.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qhom {

namespace {

std::string req_string(const Json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_string())
    fail(ErrorKind::Input, "document needs a string field '" + key + "'");
  return doc[key].get<std::string>();
}

int kind_rank(const std::string& kind) {
  if (kind == "algebra") return 0;
  if (kind == "bimodule") return 1;
  if (kind == "split") return 2;
  if (kind == "functor") return 3;
  if (kind == "module") return 4;
  if (kind == "triple") return 5;
  if (kind == "class") return 6;
  if (kind == "pair") return 7;
  fail(ErrorKind::Input, "unknown document kind '" + kind + "'");
}

}  // namespace

Json Workspace::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Input, "cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail(ErrorKind::Input, "bad JSON in '" + path + "': " + e.what());
  }
  return doc;
}

void Workspace::load_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::exists(dir)) fail(ErrorKind::Input, "workspace directory '" + dir + "' does not exist");
  std::vector<Json> docs;
  std::vector<std::string> paths;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) docs.push_back(read_file(p));
  std::stable_sort(docs.begin(), docs.end(), [](const Json& a, const Json& b) {
    return kind_rank(req_string(a, "kind")) < kind_rank(req_string(b, "kind"));
  });
  for (const auto& d : docs) define(d);
}

void Workspace::define(const Json& doc) {
  std::string kind = req_string(doc, "kind");
  if (kind == "algebra") define_algebra(doc);
  else if (kind == "module") define_module(doc);
  else if (kind == "bimodule") define_bimodule(doc);
  else if (kind == "functor") define_functor(doc);
  else if (kind == "split") define_split(doc);
  else if (kind == "triple") define_triple(doc);
  else if (kind == "class") define_class(doc);
  else if (kind == "pair") define_pair(doc);
  else fail(ErrorKind::Input, "unknown document kind '" + kind + "'");
}

void Workspace::check_fresh(const std::string& name) const {
  if (algebras_.count(name) || commas_.count(name) || modules_.count(name) ||
      classes_.count(name) || pairs_.count(name) || splits_.count(name) ||
      bimodules_.count(name))
    fail(ErrorKind::Input, "the name '" + name + "' is already taken");
}

// ------------------------------------------------------------------ matrices

Json Workspace::matrix_doc(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      if (m.field().is_finite())
        row.push_back(m.get_int(i, j));
      else
        row.push_back(m.entry_str(i, j));
    }
    rows.push_back(row);
  }
  return rows;
}

Matrix Workspace::matrix_from_doc(const Json& doc, Field f, int rows, int cols) {
  if (!doc.is_array()) fail(ErrorKind::Input, "matrix must be an array of arrays");
  Matrix m(f, rows, cols);
  if (static_cast<int>(doc.size()) != rows)
    fail(ErrorKind::Input, "matrix has " + std::to_string(doc.size()) + " rows, expected " +
                               std::to_string(rows));
  for (int i = 0; i < rows; ++i) {
    const Json& row = doc[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(ErrorKind::Input, "matrix row " + std::to_string(i) + " has the wrong length");
    for (int j = 0; j < cols; ++j) {
      const Json& e = row[j];
      if (e.is_number_integer())
        m.set(i, j, e.get<std::int64_t>());
      else if (e.is_string())
        m.set(i, j, Matrix::parse_entry(e.get<std::string>()));
      else
        fail(ErrorKind::Input, "matrix entries are integers or fraction strings");
    }
  }
  return m;
}

// ------------------------------------------------------------------ algebras

void Workspace::define_algebra(const Json& doc) {
  std::string name = req_string(doc, "name");
  check_fresh(name);
  Quiver q;
  for (const auto& v : doc.at("vertices")) q.vertices.push_back(v.get<std::string>());
  if (doc.contains("arrows"))
    for (const auto& a : doc.at("arrows")) {
      if (!a.is_array() || a.size() != 3)
        fail(ErrorKind::Input, "arrows are [name, source, target] triples");
      q.arrows.push_back({a[0].get<std::string>(), 0, 0});
      q.arrows.back().src = q.vertex_index(a[1].get<std::string>());
      q.arrows.back().tgt = q.vertex_index(a[2].get<std::string>());
    }
  std::vector<std::vector<std::string>> rels;
  if (doc.contains("relations"))
    for (const auto& r : doc.at("relations")) {
      if (!r.is_array())
        fail(ErrorKind::Input, "relations are arrays of arrow names in traversal order");
      std::vector<std::string> rel;
      for (const auto& an : r) {
        if (!an.is_string())
          fail(ErrorKind::Input,
               "relations must be monomial: arrays of arrow names, not linear combinations");
        rel.push_back(an.get<std::string>());
      }
      rels.push_back(std::move(rel));
    }
  std::uint32_t p = doc.at("field").get<std::uint32_t>();
  algebras_[name] = AlgebraCat::make(
      std::make_shared<MonomialAlgebra>(name, std::move(q), Field::make(p), std::move(rels)));
}

std::shared_ptr<const AlgebraCat> Workspace::algebra(const std::string& name) const {
  auto it = algebras_.find(name);
  if (it == algebras_.end()) fail(ErrorKind::Input, "unknown algebra '" + name + "'");
  return it->second;
}

CommaPtr Workspace::comma(const std::string& name) const {
  auto it = commas_.find(name);
  if (it == commas_.end()) fail(ErrorKind::Input, "unknown functor/comma category '" + name + "'");
  return it->second;
}

const TriangularSplit& Workspace::split(const std::string& name) const {
  auto it = splits_.find(name);
  if (it == splits_.end()) fail(ErrorKind::Input, "unknown split '" + name + "'");
  return it->second;
}

const ObjectClass& Workspace::object_class(const std::string& name) const {
  auto it = classes_.find(name);
  if (it == classes_.end()) fail(ErrorKind::Input, "unknown class '" + name + "'");
  return it->second;
}

const CotorsionPair& Workspace::pair(const std::string& name) const {
  auto it = pairs_.find(name);
  if (it == pairs_.end()) fail(ErrorKind::Input, "unknown pair '" + name + "'");
  return it->second;
}

CatPtr Workspace::ambient(const std::string& name) const {
  if (algebras_.count(name)) return std::static_pointer_cast<const Cat>(algebras_.at(name));
  if (commas_.count(name)) return std::static_pointer_cast<const Cat>(commas_.at(name));
  fail(ErrorKind::Input, "unknown ambient '" + name + "'");
}

// ------------------------------------------------------------------- modules

void Workspace::define_module(const Json& doc) {
  std::string name = req_string(doc, "name");
  check_fresh(name);
  auto cat = algebra(req_string(doc, "algebra"));
  const auto& alg = cat->algebra();
  std::vector<int> dims(alg.n_vertices(), 0);
  for (const auto& [k, v] : doc.at("dims").items())
    dims[alg.quiver().vertex_index(k)] = v.get<int>();
  Rep m(std::static_pointer_cast<const Cat>(cat), dims);
  if (doc.contains("action"))
    for (const auto& [k, v] : doc.at("action").items()) {
      int a = alg.quiver().arrow_index(k);
      const auto& ar = alg.quiver().arrows[a];
      m.gen[a] = matrix_from_doc(v, alg.field(), dims[ar.tgt], dims[ar.src]);
    }
  validate_rep(m);
  modules_[name] = std::move(m);
}

Json Workspace::module_doc(const Rep& m) {
  auto ac = std::dynamic_pointer_cast<const AlgebraCat>(m.cat);
  require(static_cast<bool>(ac), "module_doc wants an algebra representation");
  Json doc;
  doc["kind"] = "module";
  doc["algebra"] = ac->algebra().name();
  Json dims;
  for (int v = 0; v < ac->n_vertices(); ++v) dims[ac->vertex_names()[v]] = m.dims[v];
  doc["dims"] = dims;
  Json action;
  for (int g = 0; g < ac->n_gens(); ++g)
    if (!m.gen[g].is_zero()) action[ac->gens()[g].name] = matrix_doc(m.gen[g]);
  doc["action"] = action;
  return doc;
}

Json Workspace::triple_doc(const Rep& t) {
  auto cc = std::dynamic_pointer_cast<const CommaCat>(t.cat);
  require(static_cast<bool>(cc), "triple_doc wants a comma representation");
  Triple tr = rep_to_triple(t);
  Json doc;
  doc["kind"] = "triple";
  doc["functor"] = cc->name();
  doc["a"] = module_doc(tr.a);
  doc["b"] = module_doc(tr.b);
  Json phi;
  for (int u = 0; u < cc->nR(); ++u)
    phi[cc->left_cat()->vertex_names()[u]] = matrix_doc(tr.phi[u]);
  doc["phi"] = phi;
  return doc;
}

Json Workspace::object_doc(const Rep& m) {
  if (std::dynamic_pointer_cast<const CommaCat>(m.cat)) return triple_doc(m);
  return module_doc(m);
}

Rep Workspace::module_from_doc(const Json& doc) const {
  if (doc.is_string()) {
    auto it = modules_.find(doc.get<std::string>());
    if (it == modules_.end())
      fail(ErrorKind::Input, "unknown module '" + doc.get<std::string>() + "'");
    return it->second;
  }
  std::string kind = req_string(doc, "kind");
  if (kind == "module") {
    auto cat = algebra(req_string(doc, "algebra"));
    const auto& alg = cat->algebra();
    std::vector<int> dims(alg.n_vertices(), 0);
    for (const auto& [k, v] : doc.at("dims").items())
      dims[alg.quiver().vertex_index(k)] = v.get<int>();
    Rep m(std::static_pointer_cast<const Cat>(cat), dims);
    if (doc.contains("action"))
      for (const auto& [k, v] : doc.at("action").items()) {
        int a = alg.quiver().arrow_index(k);
        const auto& ar = alg.quiver().arrows[a];
        m.gen[a] = matrix_from_doc(v, alg.field(), dims[ar.tgt], dims[ar.src]);
      }
    validate_rep(m);
    return m;
  }
  if (kind == "triple") {
    CommaPtr cc = comma(req_string(doc, "functor"));
    auto component = [&](const Json& sub, const CatPtr& cat) {
      if (sub.is_string()) return resolve_module(sub.get<std::string>(), cat);
      return module_from_doc(sub);
    };
    Rep a = component(doc.at("a"), std::static_pointer_cast<const Cat>(cc->left_cat()));
    Rep b = component(doc.at("b"), std::static_pointer_cast<const Cat>(cc->right_cat()));
    TApplied tb = cc->functor().apply(b);
    std::vector<Matrix> phi;
    for (int u = 0; u < cc->nR(); ++u) {
      const std::string& vn = cc->left_cat()->vertex_names()[u];
      if (doc.contains("phi") && doc.at("phi").contains(vn))
        phi.push_back(matrix_from_doc(doc.at("phi").at(vn), cc->field(), a.dims[u],
                                      tb.rep.dims[u]));
      else
        phi.push_back(Matrix(cc->field(), a.dims[u], tb.rep.dims[u]));
    }
    return triple_to_rep(cc, a, b, phi);
  }
  fail(ErrorKind::Input, "expected a module or triple document");
}

void Workspace::define_triple(const Json& doc) {
  std::string name = req_string(doc, "name");
  check_fresh(name);
  modules_[name] = module_from_doc(doc);
}

Rep Workspace::resolve_module(const std::string& name, const CatPtr& cat) const {
  auto it = modules_.find(name);
  if (it != modules_.end()) {
    if (cat && it->second.cat != cat)
      fail(ErrorKind::Input, "module '" + name + "' lives over a different ambient");
    return it->second;
  }
  require(static_cast<bool>(cat), "standard module names need an ambient");
  // standard names P(v), I(v), S(v)
  if (name.size() > 3 && name[1] == '(' && name.back() == ')') {
    std::string vn = name.substr(2, name.size() - 3);
    for (int v = 0; v < cat->n_vertices(); ++v) {
      if (cat->vertex_names()[v] != vn) continue;
      if (name[0] == 'P') return projective_rep(cat, v);
      if (name[0] == 'I') return injective_rep(cat, v);
      if (name[0] == 'S') return simple_rep(cat, v);
    }
  }
  fail(ErrorKind::Input, "cannot resolve module '" + name + "'");
}

// ----------------------------------------------------------------- bimodules

void Workspace::define_bimodule(const Json& doc) {
  std::string name = req_string(doc, "name");
  check_fresh(name);
  Bimodule m;
  m.name = name;
  m.left = algebra(req_string(doc, "left"));
  m.right = algebra(req_string(doc, "right"));
  int nu = m.left->n_vertices(), nv = m.right->n_vertices();
  m.dims.assign(nu, std::vector<int>(nv, 0));
  for (const auto& d : doc.at("dims")) {
    int u = m.left->algebra().quiver().vertex_index(req_string(d, "r"));
    int v = m.right->algebra().quiver().vertex_index(req_string(d, "s"));
    m.dims[u][v] = d.at("dim").get<int>();
  }
  Field f = m.left->field();
  auto load_actions = [&](const char* key, bool left_side) {
    const auto& alg = left_side ? m.left->algebra() : m.right->algebra();
    auto& acts = left_side ? m.left_act : m.right_act;
    acts.clear();
    for (int a = 0; a < alg.n_arrows(); ++a) {
      const auto& ar = alg.quiver().arrows[a];
      std::vector<Matrix> per;
      int other = left_side ? nv : nu;
      for (int o = 0; o < other; ++o) {
        int rows = left_side ? m.dims[ar.tgt][o] : m.dims[o][ar.src];
        int cols = left_side ? m.dims[ar.src][o] : m.dims[o][ar.tgt];
        Matrix mat(f, rows, cols);
        if (doc.contains(key) && doc.at(key).contains(ar.name)) {
          const auto& sub = doc.at(key).at(ar.name);
          const std::string& on = left_side ? m.right->vertex_names()[o]
                                            : m.left->vertex_names()[o];
          if (sub.contains(on)) mat = matrix_from_doc(sub.at(on), f, rows, cols);
        }
        per.push_back(std::move(mat));
      }
      acts.push_back(std::move(per));
    }
  };
  load_actions("left_action", true);
  load_actions("right_action", false);
  m.validate();
  bimodules_[name] = std::move(m);
}

void Workspace::define_functor(const Json& doc) {
  std::string name = req_string(doc, "name");
  check_fresh(name);
  auto it = bimodules_.find(req_string(doc, "bimodule"));
  if (it == bimodules_.end()) fail(ErrorKind::Input, "unknown bimodule");
  commas_[name] = CommaCat::make(it->second, name);
}

void Workspace::define_split(const Json& doc) {
  std::string name = req_string(doc, "name");
  check_fresh(name);
  auto lam = algebra(req_string(doc, "algebra"));
  std::vector<int> rv;
  for (const auto& v : doc.at("r_vertices"))
    rv.push_back(lam->algebra().quiver().vertex_index(v.get<std::string>()));
  TriangularSplit sp = split_triangular(lam, rv);
  commas_[name] = sp.comma;  // the split names its comma category
  // the canonical name used inside emitted documents resolves as well
  if (!commas_.count(sp.comma->name())) commas_[sp.comma->name()] = sp.comma;
  // the component algebras become ambients in their own right, both under
  // the split's name and under their own canonical names
  algebras_[name + ".R"] = sp.comma->left_cat();
  algebras_[name + ".S"] = sp.comma->right_cat();
  const std::string rn = sp.comma->left_cat()->algebra().name();
  const std::string sn = sp.comma->right_cat()->algebra().name();
  if (!algebras_.count(rn)) algebras_[rn] = sp.comma->left_cat();
  if (!algebras_.count(sn)) algebras_[sn] = sp.comma->right_cat();
  splits_.emplace(name, std::move(sp));
}

// ------------------------------------------------------------------- classes

void Workspace::define_class(const Json& doc) {
  std::string name = req_string(doc, "name");
  check_fresh(name);
  CatPtr cat = ambient(req_string(doc, "ambient"));
  std::vector<Rep> raw;
  const Json& members = doc.at("members");
  int cap = doc.contains("cap") ? doc.at("cap").get<int>() : 6;
  if (members.is_string()) {
    std::string kw = members.get<std::string>();
    if (kw == "all") raw = ambient_list(cat, cap);
    else if (kw == "projectives") raw = projective_list(cat);
    else if (kw == "injectives") raw = injective_list(cat);
    else if (kw == "simples") raw = simple_list(cat);
    else fail(ErrorKind::Input, "unknown member keyword '" + kw + "'");
  } else {
    for (const auto& m : members) raw.push_back(resolve_module(m.get<std::string>(), cat));
  }
  ObjectClass cls = canonical_class(name, cat, raw);
  if (doc.contains("extension_closed"))
    cls.asserted_extension_closed = doc.at("extension_closed").get<bool>();
  if (doc.contains("smd_closed"))
    cls.asserted_smd_closed = doc.at("smd_closed").get<bool>();
  classes_[name] = std::move(cls);
}

void Workspace::define_pair(const Json& doc) {
  std::string name = req_string(doc, "name");
  check_fresh(name);
  CotorsionPair p{object_class(req_string(doc, "left")), object_class(req_string(doc, "right"))};
  pairs_[name] = std::move(p);
}

const std::vector<Rep>& Workspace::ambient_list(const CatPtr& cat, int cap) const {
  std::string key = cat->name() + "#" + std::to_string(cap);
  auto it = enum_cache_.find(key);
  if (it != enum_cache_.end()) return it->second;
  return enum_cache_.emplace(key, enumerate_indecomposables(cat, cap)).first->second;
}

// ------------------------------------------------------------------- morphs

Json Workspace::morph_doc(const Morph& f) {
  Json maps;
  for (int v = 0; v < f.src.cat->n_vertices(); ++v)
    maps[f.src.cat->vertex_names()[v]] = matrix_doc(f.maps[v]);
  return maps;
}

Morph Workspace::morph_from_doc(const Json& doc, const Rep& src, const Rep& tgt) const {
  Morph f(src, tgt);
  for (int v = 0; v < src.cat->n_vertices(); ++v) {
    const std::string& vn = src.cat->vertex_names()[v];
    if (doc.contains(vn))
      f.maps[v] = matrix_from_doc(doc.at(vn), src.cat->field(), tgt.dims[v], src.dims[v]);
  }
  validate_morph(f);
  return f;
}

// -------------------------------------------------------------------- reports

Json Workspace::approx_report(const ApproxResult& r, const std::string& class_name,
                              PerpDegree degree) const {
  Json doc;
  doc["report"] = r.kind == ApproxResult::Kind::Precover ? "precover" : "preenvelope";
  doc["class"] = class_name;
  doc["degree"] = degree == PerpDegree::ExtOne ? "ext1" : "hereditary";
  doc["identity"] = r.identity;
  Json seq;
  seq["sub"] = object_doc(r.ses.i.src);
  seq["middle"] = object_doc(r.ses.i.tgt);
  seq["quotient"] = object_doc(r.ses.p.tgt);
  seq["i"] = morph_doc(r.ses.i);
  seq["p"] = morph_doc(r.ses.p);
  doc["sequence"] = seq;
  Json certs;
  certs["exact"] = r.certs.exact;
  certs["arrow"] = r.certs.arrow_ok;
  certs["object_in_class"] = r.certs.object_in_class;
  certs["end_in_perp"] = r.certs.end_in_perp;
  certs["notes"] = r.certs.notes;
  doc["certificates"] = certs;
  return doc;
}

Json Workspace::verify_report(const Json& report) const {
  Rep sub = module_from_doc(report.at("sequence").at("sub"));
  Rep mid = module_from_doc(report.at("sequence").at("middle"));
  Rep quo = module_from_doc(report.at("sequence").at("quotient"));
  Morph i = morph_from_doc(report.at("sequence").at("i"), sub, mid);
  Morph p = morph_from_doc(report.at("sequence").at("p"), mid, quo);
  ShortExact ses{i, p};
  const ObjectClass& cls = object_class(report.at("class").get<std::string>());
  PerpDegree degree = report.at("degree").get<std::string>() == "hereditary"
                          ? PerpDegree::Hereditary
                          : PerpDegree::ExtOne;
  bool precover = report.at("report").get<std::string>() == "precover";

  Json out;
  out["exact"] = ses_is_exact(ses);
  out["arrow"] = precover ? is_epi(ses.p) : is_mono(ses.i);
  out["object_in_class"] = cls.contains(mid);  // middle is the approximating object
  bool perp_ok = true;
  if (precover) {
    for (const auto& x : cls.members)
      if (degree == PerpDegree::ExtOne ? ext_dim(x, sub, 1) != 0
                                       : !ext_vanishes_all_degrees(x, sub))
        perp_ok = false;
  } else {
    for (const auto& x : cls.members)
      if (degree == PerpDegree::ExtOne ? ext_dim(quo, x, 1) != 0
                                       : !ext_vanishes_all_degrees(quo, x))
        perp_ok = false;
  }
  out["end_in_perp"] = perp_ok;
  return out;
}

std::string render_member_list(const std::vector<Rep>& members) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) os << ", ";
    os << standard_name(members[i]);
  }
  os << "}";
  return os.str();
}

}  // namespace qhom
