#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "qhom/gorenstein.hpp"

namespace qhom {

using Json = nlohmann::json;

// A named catalog of algebras, bimodules, modules/triples, classes, functors,
// splits and pairs, loaded from a directory of JSON documents.  Every
// document is validated on load; references resolve by name.
class Workspace {
public:
  Workspace() = default;

  void load_directory(const std::string& dir);
  void define(const Json& doc);
  static Json read_file(const std::string& path);

  // registries
  std::shared_ptr<const AlgebraCat> algebra(const std::string& name) const;
  CommaPtr comma(const std::string& name) const;
  const TriangularSplit& split(const std::string& name) const;
  const ObjectClass& object_class(const std::string& name) const;
  const CotorsionPair& pair(const std::string& name) const;

  bool has_algebra(const std::string& name) const { return algebras_.count(name) > 0; }
  bool has_comma(const std::string& name) const { return commas_.count(name) > 0; }
  bool has_module(const std::string& name) const { return modules_.count(name) > 0; }

  // an ambient is an algebra name or a functor/comma name
  CatPtr ambient(const std::string& name) const;

  // a registered module/triple, or a standard name P(v) / I(v) / S(v)
  Rep resolve_module(const std::string& name, const CatPtr& cat) const;

  // enumerated indecomposables of an ambient, cached per cap
  const std::vector<Rep>& ambient_list(const CatPtr& cat, int cap) const;

  // ------------------------------------------------------------ documents

  static Json module_doc(const Rep& m);          // algebra representations
  static Json triple_doc(const Rep& t);          // comma representations
  static Json object_doc(const Rep& m);          // dispatches on the category
  Rep module_from_doc(const Json& doc) const;    // inline or named
  static Json morph_doc(const Morph& f);
  Morph morph_from_doc(const Json& doc, const Rep& src, const Rep& tgt) const;
  static Json matrix_doc(const Matrix& m);
  static Matrix matrix_from_doc(const Json& doc, Field f, int rows, int cols);

  // approximation reports, embedding enough data to re-verify offline
  Json approx_report(const ApproxResult& r, const std::string& class_name,
                     PerpDegree degree) const;
  // re-ingest a report and recompute its certificates
  Json verify_report(const Json& report) const;

  const std::map<std::string, Rep>& modules() const { return modules_; }

private:
  std::map<std::string, std::shared_ptr<const AlgebraCat>> algebras_;
  std::map<std::string, Bimodule> bimodules_;
  std::map<std::string, CommaPtr> commas_;
  std::map<std::string, TriangularSplit> splits_;
  std::map<std::string, Rep> modules_;
  std::map<std::string, ObjectClass> classes_;
  std::map<std::string, CotorsionPair> pairs_;
  mutable std::map<std::string, std::vector<Rep>> enum_cache_;

  void define_algebra(const Json& doc);
  void define_module(const Json& doc);
  void define_bimodule(const Json& doc);
  void define_functor(const Json& doc);
  void define_split(const Json& doc);
  void define_triple(const Json& doc);
  void define_class(const Json& doc);
  void define_pair(const Json& doc);

  void check_fresh(const std::string& name) const;
};

std::string render_member_list(const std::vector<Rep>& members);

}  // namespace qhom
