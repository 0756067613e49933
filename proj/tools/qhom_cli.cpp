// qhom: a workbench for module categories of finite-dimensional quiver
// algebras, their comma categories, cotorsion pairs, special approximations
// and Gorenstein projective objects.
//
// Exit codes: 0 success; 1 mathematical negative with certificate;
// 2 precondition failure; 3 budget exceeded; 4 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qhom/workspace.hpp"

using namespace qhom;

namespace {

struct Common {
  std::string workspace_dir;
  std::string format = "text";
  int cap = 6;
  int bound = 8;
  int iter = 16;
  bool hereditary = false;
};

void add_common(CLI::App* cmd, Common& c) {
  const char* env = std::getenv("QHOM_WORKSPACE");
  if (env) c.workspace_dir = env;
  cmd->add_option("--workspace,-w", c.workspace_dir, "workspace directory of JSON documents");
  cmd->add_option("--format", c.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cap", c.cap, "enumeration dimension cap (default 6)");
  cmd->add_option("--bound", c.bound, "homological bound (default 8)");
  cmd->add_option("--iter", c.iter, "iteration cap for constructions (default 16)");
  cmd->add_flag("--hereditary", c.hereditary, "use the Ext^{>=1} orthogonal");
}

Workspace load(const Common& c) {
  Workspace ws;
  if (!c.workspace_dir.empty()) ws.load_directory(c.workspace_dir);
  return ws;
}

PerpDegree degree_of(const Common& c) {
  return c.hereditary ? PerpDegree::Hereditary : PerpDegree::ExtOne;
}

ApproxOptions approx_options(const Common& c) {
  ApproxOptions o;
  o.degree = degree_of(c);
  o.iteration_cap = c.iter;
  return o;
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string cert_text(const Certificates& certs) {
  std::ostringstream os;
  os << "  certificates: exact=" << (certs.exact ? "yes" : "NO")
     << " arrow=" << (certs.arrow_ok ? "yes" : "NO")
     << " object-in-class=" << (certs.object_in_class ? "yes" : "NO")
     << " end-in-perp=" << (certs.end_in_perp ? "yes" : "NO") << "\n";
  for (const auto& n : certs.notes) os << "  note: " << n << "\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"qhom: comma categories, cotorsion pairs and Gorenstein projectives\n"
               "for finite-dimensional quiver algebras"};
  app.require_subcommand(1);
  Common c;

  std::string define_file;
  auto* cmd_define = app.add_subcommand("define", "validate and register a document");
  add_common(cmd_define, c);
  cmd_define->add_option("file", define_file, "JSON document")->required();

  std::string indec_ambient;
  auto* cmd_indec = app.add_subcommand("indec", "list indecomposables of an ambient");
  add_common(cmd_indec, c);
  cmd_indec->add_option("ambient", indec_ambient)->required();

  std::string ext_m, ext_n, ext_ambient;
  int ext_degree = 1;
  auto* cmd_ext = app.add_subcommand("ext", "dimension of an Ext group");
  add_common(cmd_ext, c);
  cmd_ext->add_option("m", ext_m)->required();
  cmd_ext->add_option("n", ext_n)->required();
  cmd_ext->add_option("--degree", ext_degree, "Ext degree (default 1)");
  cmd_ext->add_option("--ambient", ext_ambient, "ambient for standard names");

  std::string perp_class;
  bool perp_left_flag = false;
  auto* cmd_perp = app.add_subcommand("perp", "orthogonal class over the enumerated ambient");
  add_common(cmd_perp, c);
  cmd_perp->add_option("class", perp_class)->required();
  cmd_perp->add_flag("--left", perp_left_flag, "left orthogonal");

  std::string closure_class;
  auto* cmd_closure = app.add_subcommand("closure", "extension closure of a class");
  add_common(cmd_closure, c);
  cmd_closure->add_option("class", closure_class)->required();

  std::string split_algebra, split_left;
  auto* cmd_split = app.add_subcommand("split", "triangular split along a vertex set");
  add_common(cmd_split, c);
  cmd_split->add_option("algebra", split_algebra)->required();
  cmd_split->add_option("--left", split_left, "comma separated R-side vertices")->required();

  std::string conv_obj, conv_split;
  auto* cmd_tot = app.add_subcommand("to-triple", "convert a module along a split");
  add_common(cmd_tot, c);
  cmd_tot->add_option("module", conv_obj)->required();
  cmd_tot->add_option("--split", conv_split)->required();

  std::string conv_obj2, conv_split2;
  auto* cmd_tom = app.add_subcommand("to-module", "convert a triple along a split");
  add_common(cmd_tom, c);
  cmd_tom->add_option("triple", conv_obj2)->required();
  cmd_tom->add_option("--split", conv_split2)->required();

  std::string yex_functor, yex_class;
  auto* cmd_yex = app.add_subcommand("yexact", "Y-exactness of the tensor functor");
  add_common(cmd_yex, c);
  cmd_yex->add_option("functor", yex_functor)->required();
  cmd_yex->add_option("class", yex_class)->required();

  std::string pc_left, pc_right;
  auto* cmd_pair = app.add_subcommand("pair-check", "cotorsion pair report");
  add_common(cmd_pair, c);
  cmd_pair->add_option("left", pc_left)->required();
  cmd_pair->add_option("right", pc_right)->required();

  std::string ap_target, ap_class;
  auto* cmd_precover = app.add_subcommand("precover", "special precover with certificates");
  add_common(cmd_precover, c);
  cmd_precover->add_option("target", ap_target)->required();
  cmd_precover->add_option("class", ap_class)->required();

  std::string ae_target, ae_class;
  auto* cmd_preenv = app.add_subcommand("preenvelope", "special preenvelope with certificates");
  add_common(cmd_preenv, c);
  cmd_preenv->add_option("target", ae_target)->required();
  cmd_preenv->add_option("class", ae_class)->required();

  std::string tr_triple, tr_x, tr_y, tr_mode = "precover";
  auto* cmd_transfer = app.add_subcommand("transfer", "pushout transfer into the comma category");
  add_common(cmd_transfer, c);
  cmd_transfer->add_option("triple", tr_triple)->required();
  cmd_transfer->add_option("--x", tr_x, "cotorsion pair over R")->required();
  cmd_transfer->add_option("--y", tr_y, "cotorsion pair over S")->required();
  cmd_transfer->add_option("--mode", tr_mode)->check(CLI::IsMember({"precover", "preenvelope"}));

  std::string gp_obj, gp_ambient;
  auto* cmd_gp = app.add_subcommand("gp", "Gorenstein projective verdict");
  add_common(cmd_gp, c);
  cmd_gp->add_option("object", gp_obj)->required();
  cmd_gp->add_option("--ambient", gp_ambient, "ambient for standard names");

  std::string gpc_ambient;
  auto* cmd_gpc = app.add_subcommand("gp-class", "Gorenstein projective class of an ambient");
  add_common(cmd_gpc, c);
  cmd_gpc->add_option("ambient", gpc_ambient)->required();

  std::string compat_functor;
  auto* cmd_compat = app.add_subcommand("compat", "compatibility report of a tensor functor");
  add_common(cmd_compat, c);
  cmd_compat->add_option("functor", compat_functor)->required();

  std::string gpp_triple;
  auto* cmd_gpp = app.add_subcommand("gp-precover", "special GP precover in the comma category");
  add_common(cmd_gpp, c);
  cmd_gpp->add_option("triple", gpp_triple)->required();

  std::string frob_functor;
  auto* cmd_frob = app.add_subcommand("frobenius", "Frobenius report for an exact functor");
  add_common(cmd_frob, c);
  cmd_frob->add_option("functor", frob_functor)->required();

  std::string verify_file;
  auto* cmd_verify = app.add_subcommand("verify", "re-verify an emitted report");
  add_common(cmd_verify, c);
  cmd_verify->add_option("report", verify_file)->required();

  CLI11_PARSE(app, argc, argv);

  if (*cmd_define) {
    Workspace ws = load(c);
    Json doc = Workspace::read_file(define_file);
    ws.define(doc);
    // validated: persist into the workspace so later commands can resolve it
    if (!c.workspace_dir.empty()) {
      std::string out = c.workspace_dir + "/" + doc.at("name").get<std::string>() + ".json";
      std::ofstream os(out);
      os << doc.dump(2) << "\n";
    }
    emit(c, Json{{"defined", doc.at("name")}},
         "defined '" + doc.at("name").get<std::string>() + "' (" +
             doc.at("kind").get<std::string>() + ")\n");
    return 0;
  }

  if (*cmd_indec) {
    Workspace ws = load(c);
    CatPtr cat = ws.ambient(indec_ambient);
    const auto& list = ws.ambient_list(cat, c.cap);
    Json j;
    j["ambient"] = indec_ambient;
    j["cap"] = c.cap;
    std::ostringstream os;
    os << list.size() << " indecomposables over " << indec_ambient << " (cap " << c.cap << "):\n";
    Json arr = Json::array();
    for (const auto& m : list) {
      arr.push_back({{"name", standard_name(m)}, {"dims", m.dims}});
      os << "  " << standard_name(m) << "  dims " << m.dims_str() << "\n";
    }
    j["members"] = arr;
    emit(c, j, os.str());
    return 0;
  }

  if (*cmd_ext) {
    Workspace ws = load(c);
    CatPtr cat = ext_ambient.empty() ? nullptr : ws.ambient(ext_ambient);
    Rep m = ws.resolve_module(ext_m, cat);
    Rep n = ws.resolve_module(ext_n, m.cat);
    int d = ext_dim(m, n, ext_degree);
    emit(c, Json{{"ext", d}, {"degree", ext_degree}},
         "dim Ext^" + std::to_string(ext_degree) + "(" + ext_m + ", " + ext_n + ") = " +
             std::to_string(d) + "\n");
    return 0;
  }

  if (*cmd_perp) {
    Workspace ws = load(c);
    const ObjectClass& cls = ws.object_class(perp_class);
    const auto& ambient = ws.ambient_list(cls.ambient, c.cap);
    ObjectClass p = perp_left_flag ? perp_left(cls, ambient, degree_of(c))
                                   : perp_right(cls, ambient, degree_of(c));
    Json j;
    j["class"] = perp_class;
    j["side"] = perp_left_flag ? "left" : "right";
    j["degree"] = c.hereditary ? "hereditary" : "ext1";
    Json arr = Json::array();
    for (const auto& m : p.members) arr.push_back(standard_name(m));
    j["members"] = arr;
    emit(c, j,
         (perp_left_flag ? "left " : "") + std::string("perp of ") + perp_class + " = " +
             render_member_list(p.members) + "\n");
    return 0;
  }

  if (*cmd_closure) {
    Workspace ws = load(c);
    const ObjectClass& cls = ws.object_class(closure_class);
    ObjectClass closed = extension_closure(cls);
    Json arr = Json::array();
    for (const auto& m : closed.members) arr.push_back(standard_name(m));
    emit(c, Json{{"class", closure_class}, {"members", arr}},
         "extension closure of " + closure_class + " = " + render_member_list(closed.members) +
             "\n");
    return 0;
  }

  if (*cmd_split) {
    Workspace ws = load(c);
    auto lam = ws.algebra(split_algebra);
    std::vector<int> rv;
    std::stringstream ss(split_left);
    std::string item;
    while (std::getline(ss, item, ','))
      rv.push_back(lam->algebra().quiver().vertex_index(item));
    TriangularSplit sp = split_triangular(lam, rv);
    Json j;
    j["algebra"] = split_algebra;
    j["R"] = {{"dim", sp.comma->left_cat()->algebra().dim()},
              {"vertices", sp.comma->left_cat()->vertex_names()}};
    j["S"] = {{"dim", sp.comma->right_cat()->algebra().dim()},
              {"vertices", sp.comma->right_cat()->vertex_names()}};
    j["M_dim"] = sp.comma->bimodule().total_dim();
    std::ostringstream os;
    os << "triangular split of " << split_algebra << ":\n"
       << "  R: dim " << sp.comma->left_cat()->algebra().dim() << "\n"
       << "  S: dim " << sp.comma->right_cat()->algebra().dim() << "\n"
       << "  M: dim " << sp.comma->bimodule().total_dim() << "\n";
    emit(c, j, os.str());
    return 0;
  }

  if (*cmd_tot) {
    Workspace ws = load(c);
    const TriangularSplit& sp = ws.split(conv_split);
    Rep m = ws.resolve_module(conv_obj, std::static_pointer_cast<const Cat>(sp.lambda));
    Rep t = sp.module_to_triple(m);
    Json j = Workspace::triple_doc(t);
    emit(c, j, "triple form of " + conv_obj + ":\n" + j.dump(2) + "\n");
    return 0;
  }

  if (*cmd_tom) {
    Workspace ws = load(c);
    const TriangularSplit& sp = ws.split(conv_split2);
    Rep t = ws.resolve_module(conv_obj2, std::static_pointer_cast<const Cat>(sp.comma));
    Rep m = sp.triple_to_module(t);
    Json j = Workspace::module_doc(m);
    emit(c, j, "module form of " + conv_obj2 + ":\n" + j.dump(2) + "\n");
    return 0;
  }

  if (*cmd_yex) {
    Workspace ws = load(c);
    CommaPtr cc = ws.comma(yex_functor);
    const ObjectClass& cls = ws.object_class(yex_class);
    YExactReport r = check_Y_exact(cc->functor(), cls.members);
    Json j;
    j["functor"] = yex_functor;
    j["class"] = yex_class;
    j["y_exact"] = r.ok;
    std::ostringstream os;
    if (r.ok) {
      os << "T is Y-exact for " << yex_class << "\n";
      emit(c, j, os.str());
      return 0;
    }
    j["bad_member"] = standard_name(cls.members[r.bad_member]);
    j["tor1_dim"] = r.tor1_dim;
    if (r.witness) {
      j["witness"] = {{"sub", Workspace::module_doc(r.witness->i.src)},
                      {"middle", Workspace::module_doc(r.witness->i.tgt)},
                      {"quotient", Workspace::module_doc(r.witness->p.tgt)}};
    }
    os << "T is NOT Y-exact: Tor_1(M, " << standard_name(cls.members[r.bad_member])
       << ") has dimension " << r.tor1_dim << "\n"
       << "witness: the cover sequence 0 -> " << standard_name(r.witness->i.src) << " -> "
       << standard_name(r.witness->i.tgt) << " -> " << standard_name(r.witness->p.tgt)
       << " -> 0 loses exactness under T\n";
    emit(c, j, os.str());
    return 1;
  }

  if (*cmd_pair) {
    Workspace ws = load(c);
    CotorsionPair p{ws.object_class(pc_left), ws.object_class(pc_right)};
    const auto& ambient = ws.ambient_list(p.left.ambient, c.cap);
    PairReport r = check_cotorsion_pair(p, ambient, degree_of(c));
    Json j;
    j["left"] = pc_left;
    j["right"] = pc_right;
    j["cotorsion_pair"] = r.is_cotorsion_pair;
    j["hereditary"] = r.hereditary;
    j["left_resolving"] = r.left_resolving;
    j["right_coresolving"] = r.right_coresolving;
    j["left_mismatch"] = r.left_mismatch;
    j["right_mismatch"] = r.right_mismatch;
    std::ostringstream os;
    os << "(" << pc_left << ", " << pc_right << "): "
       << (r.is_cotorsion_pair ? "cotorsion pair" : "NOT a cotorsion pair") << "\n"
       << "  right = left^perp: " << (r.right_is_perp_of_left ? "yes" : "NO");
    for (const auto& m : r.right_mismatch) os << " " << m;
    os << "\n  left = perp(right): " << (r.left_is_perp_of_right ? "yes" : "NO");
    for (const auto& m : r.left_mismatch) os << " " << m;
    os << "\n  hereditary: " << (r.hereditary ? "yes" : "no")
       << "; left resolving: " << (r.left_resolving ? "yes" : "no")
       << "; right coresolving: " << (r.right_coresolving ? "yes" : "no") << "\n";
    emit(c, j, os.str());
    return r.is_cotorsion_pair ? 0 : 1;
  }

  if (*cmd_precover || *cmd_preenv) {
    bool is_cover = static_cast<bool>(*cmd_precover);
    Workspace ws = load(c);
    const ObjectClass& cls = ws.object_class(is_cover ? ap_class : ae_class);
    Rep target = ws.resolve_module(is_cover ? ap_target : ae_target, cls.ambient);
    ApproxResult r;
    if (is_cover) {
      r = special_precover(target, cls, approx_options(c));
    } else {
      const auto& ambient = ws.ambient_list(cls.ambient, c.cap);
      ObjectClass gens = perp_left(cls, ambient, degree_of(c));
      r = special_preenvelope(target, cls, gens.members, approx_options(c));
    }
    Json j = ws.approx_report(r, cls.name, degree_of(c));
    std::ostringstream os;
    os << (is_cover ? "special precover" : "special preenvelope") << " of "
       << (is_cover ? ap_target : ae_target) << ":\n"
       << "  0 -> " << standard_name(r.ses.i.src) << " -> " << standard_name(r.ses.i.tgt)
       << " -> " << standard_name(r.ses.p.tgt) << " -> 0\n"
       << cert_text(r.certs);
    emit(c, j, os.str());
    return 0;
  }

  if (*cmd_transfer) {
    Workspace ws = load(c);
    const CotorsionPair& xp = ws.pair(tr_x);
    const CotorsionPair& yp = ws.pair(tr_y);
    Rep t = ws.resolve_module(tr_triple, nullptr);
    TransferOptions topt;
    topt.approx = approx_options(c);
    ApproxResult r;
    if (tr_mode == "preenvelope") {
      r = transfer_preenvelope_comma(t, xp, yp, topt);
    } else {
      const auto& r_amb = ws.ambient_list(xp.left.ambient, c.cap);
      const auto& s_amb = ws.ambient_list(yp.left.ambient, c.cap);
      r = transfer_precover_comma(t, xp.left, yp.left, r_amb, s_amb, topt);
    }
    Json j = ws.approx_report(r, tr_x + "/" + tr_y, degree_of(c));
    std::ostringstream os;
    os << "transferred " << tr_mode << " of " << tr_triple << ":\n" << cert_text(r.certs);
    emit(c, j, os.str());
    return 0;
  }

  if (*cmd_gp) {
    Workspace ws = load(c);
    CatPtr cat = gp_ambient.empty() ? nullptr : ws.ambient(gp_ambient);
    Rep m = ws.resolve_module(gp_obj, cat);
    GpVerdict v = is_gorenstein_projective(m, c.bound);
    Json j;
    j["object"] = gp_obj;
    j["bound"] = c.bound;
    j["status"] = v.status == GpStatus::Certified  ? "certified"
                  : v.status == GpStatus::Refuted ? "refuted"
                                                  : "up-to-bound";
    j["detail"] = v.detail;
    if (v.certificate) {
      j["approach"] = v.certificate->approach;
      j["period"] = v.certificate->period;
      Json chain = Json::array();
      for (const auto& s : v.certificate->chain)
        chain.push_back({{"sub", Workspace::object_doc(s.i.src)},
                         {"middle", Workspace::object_doc(s.i.tgt)},
                         {"quotient", Workspace::object_doc(s.p.tgt)},
                         {"i", Workspace::morph_doc(s.i)},
                         {"p", Workspace::morph_doc(s.p)}});
      j["chain"] = chain;
    }
    std::ostringstream os;
    os << gp_obj << ": " << j["status"].get<std::string>() << " (" << v.detail << ")\n";
    emit(c, j, os.str());
    return 0;
  }

  if (*cmd_gpc) {
    Workspace ws = load(c);
    CatPtr cat = ws.ambient(gpc_ambient);
    GpClassResult r = gp_class(cat, c.cap, c.bound);
    Json j;
    j["ambient"] = gpc_ambient;
    Json table = Json::array();
    for (std::size_t i = 0; i < r.ambient.size(); ++i)
      table.push_back({{"name", standard_name(r.ambient[i])},
                       {"status", r.verdicts[i].status == GpStatus::Certified  ? "certified"
                                  : r.verdicts[i].status == GpStatus::Refuted ? "refuted"
                                                                              : "up-to-bound"},
                       {"detail", r.verdicts[i].detail}});
    j["table"] = table;
    Json members = Json::array();
    for (const auto& m : r.cls.members) members.push_back(standard_name(m));
    j["gp_class"] = members;
    std::ostringstream os;
    os << "GP class of " << gpc_ambient << " = " << render_member_list(r.cls.members) << "\n";
    for (const auto& row : table)
      os << "  " << row["name"].get<std::string>() << ": " << row["status"].get<std::string>()
         << "\n";
    emit(c, j, os.str());
    return 0;
  }

  if (*cmd_compat) {
    Workspace ws = load(c);
    CommaPtr cc = ws.comma(compat_functor);
    CompatReport r = check_compatibility(cc->functor(), c.bound, c.cap);
    auto method = [](CompatMethod m) {
      switch (m) {
        case CompatMethod::DimensionBound: return "dimension-bound";
        case CompatMethod::DirectBounded: return "direct-bounded";
        case CompatMethod::ImpliedByC1: return "implied-by-C1";
        case CompatMethod::Vacuous: return "vacuous";
      }
      return "?";
    };
    Json j;
    j["functor"] = compat_functor;
    j["C1"] = {{"holds", r.c1.holds}, {"method", method(r.c1.method)}, {"detail", r.c1.detail}};
    j["C2"] = {{"holds", r.c2.holds}, {"method", method(r.c2.method)}, {"detail", r.c2.detail}};
    j["W1"] = {{"holds", r.w1.holds}, {"method", method(r.w1.method)}, {"detail", r.w1.detail}};
    j["compatible"] = r.compatible();
    j["weak_compatible"] = r.weak_compatible();
    if (r.c1_witness) {
      Json w;
      w["t_dims"] = r.c1_witness->t_dims;
      w["t_ranks"] = r.c1_witness->t_ranks;
      w["note"] = r.c1_witness->note;
      j["c1_witness"] = w;
    }
    std::ostringstream os;
    os << "compatibility of " << compat_functor << ":\n"
       << "  C1: " << (r.c1.holds ? "pass" : "FAIL") << " [" << method(r.c1.method) << "] "
       << r.c1.detail << "\n"
       << "  C2: " << (r.c2.holds ? "pass" : "FAIL") << " [" << method(r.c2.method) << "] "
       << r.c2.detail << "\n"
       << "  W1: " << (r.w1.holds ? "pass" : "FAIL") << " [" << method(r.w1.method) << "] "
       << r.w1.detail << "\n"
       << "  compatible: " << (r.compatible() ? "yes" : "no")
       << "; weak compatible: " << (r.weak_compatible() ? "yes" : "no") << "\n";
    emit(c, j, os.str());
    return 0;
  }

  if (*cmd_gpp) {
    Workspace ws = load(c);
    Rep t = ws.resolve_module(gpp_triple, nullptr);
    auto cc = std::dynamic_pointer_cast<const CommaCat>(t.cat);
    if (!cc) fail(ErrorKind::Input, "gp-precover wants a triple");
    auto r_cat = std::static_pointer_cast<const Cat>(cc->left_cat());
    auto s_cat = std::static_pointer_cast<const Cat>(cc->right_cat());
    GpClassResult gp_r = gp_class(r_cat, c.cap, c.bound);
    GpClassResult gp_s = gp_class(s_cat, c.cap, c.bound);
    CompatReport compat = check_compatibility(cc->functor(), c.bound, c.cap);
    TransferOptions topt;
    topt.approx = approx_options(c);
    ApproxResult r = gp_precover_comma(t, gp_r, gp_s, compat, gp_r.ambient, gp_s.ambient, topt);
    Json j = ws.approx_report(r, "GP", degree_of(c));
    emit(c, j, "special GP precover of " + gpp_triple + ":\n" + cert_text(r.certs));
    return 0;
  }

  if (*cmd_frob) {
    Workspace ws = load(c);
    CommaPtr cc = ws.comma(frob_functor);
    const auto& amb = ws.ambient_list(std::static_pointer_cast<const Cat>(cc), c.cap);
    const auto& r_amb = ws.ambient_list(std::static_pointer_cast<const Cat>(cc->left_cat()), c.cap);
    const auto& s_amb =
        ws.ambient_list(std::static_pointer_cast<const Cat>(cc->right_cat()), c.cap);
    FrobeniusReport r = check_frobenius(cc, amb, r_amb, s_amb);
    Json j;
    j["functor"] = frob_functor;
    j["left_side"] = r.left_side;
    j["right_side"] = r.right_side;
    j["agree"] = r.agree;
    j["r_frobenius"] = r.r_frobenius;
    j["s_frobenius"] = r.s_frobenius;
    j["t_preserves_projectives"] = r.t_preserves_projectives;
    std::ostringstream os;
    os << "frobenius report for " << frob_functor << ":\n"
       << "  relative projectives = relative injectives: " << (r.left_side ? "yes" : "no") << "\n"
       << "  components frobenius and T preserves projectives: " << (r.right_side ? "yes" : "no")
       << "\n  both sides agree: " << (r.agree ? "yes" : "NO") << "\n";
    emit(c, j, os.str());
    return r.agree ? 0 : 1;
  }

  if (*cmd_verify) {
    Workspace ws = load(c);
    Json report = Workspace::read_file(verify_file);
    Json again = ws.verify_report(report);
    const Json& orig = report.at("certificates");
    bool same = again.at("exact") == orig.at("exact") && again.at("arrow") == orig.at("arrow") &&
                again.at("object_in_class") == orig.at("object_in_class") &&
                again.at("end_in_perp") == orig.at("end_in_perp");
    emit(c, Json{{"reproduced", same}, {"certificates", again}},
         std::string("certificates ") + (same ? "reproduced" : "DIFFER") + "\n");
    return same ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
}
