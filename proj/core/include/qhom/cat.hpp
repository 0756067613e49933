#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhom/matrix.hpp"
#include "qhom/quiver.hpp"

namespace qhom {

struct Rep;

// A finite-dimensional module category presented by primitive idempotents
// ("vertices") and radical generators.  A representation assigns a vector
// space to every vertex and a matrix to every generator, subject to the
// relations enforced by check_rep.  Both mod(A) for a monomial algebra A and
// the comma category of a tensor functor are instances.
class Cat : public std::enable_shared_from_this<Cat> {
public:
  struct Gen {
    std::string name;
    int src = 0;
    int tgt = 0;
  };

  virtual ~Cat() = default;

  const std::string& name() const { return name_; }
  Field field() const { return field_; }
  int n_vertices() const { return static_cast<int>(vertex_names_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  int n_gens() const { return static_cast<int>(gens_.size()); }
  const std::vector<Gen>& gens() const { return gens_; }

  // Empty string when the representation satisfies all relations.
  virtual std::string check_rep(const Rep& r) const = 0;

  // Indecomposable projective at a vertex, with a generator-word basis:
  // words[u][k] lists generator indices applied first-to-last, and the k-th
  // basis vector of P(v) at vertex u equals the action of that word on the
  // cyclic generator sitting at (v, e_index).
  struct ProjData {
    std::shared_ptr<Rep> rep;
    std::vector<std::vector<std::vector<int>>> words;
    int e_vertex = 0;
    int e_index = 0;
  };
  const ProjData& projective(int v) const;

  // Involutive opposite (op of op is this object).
  std::shared_ptr<const Cat> opposite() const;
  virtual int op_vertex(int v) const = 0;
  virtual int op_gen(int g) const = 0;

  // Identification of P(w)_i with opposite->projective(op_vertex(i)) at
  // op_vertex(w); both realize the span of algebra elements e_i * Lambda * e_w.
  // perm[a] = index of the reversed a-th basis element on the opposite side.
  virtual std::vector<int> unit_perm(int i, int w) const = 0;

protected:
  Cat(std::string name, Field f, std::vector<std::string> vertices, std::vector<Gen> gens)
      : name_(std::move(name)), field_(f),
        vertex_names_(std::move(vertices)), gens_(std::move(gens)) {}

  virtual ProjData build_projective(int v) const = 0;
  virtual std::shared_ptr<const Cat> build_opposite() const = 0;

  std::string name_;
  Field field_;
  std::vector<std::string> vertex_names_;
  std::vector<Gen> gens_;

private:
  mutable std::vector<std::optional<ProjData>> proj_cache_;
  mutable std::shared_ptr<const Cat> op_cache_;
};

using CatPtr = std::shared_ptr<const Cat>;

// A representation: per-vertex dimensions plus one matrix per generator,
// of shape dims[tgt] x dims[src].
struct Rep {
  CatPtr cat;
  std::vector<int> dims;
  std::vector<Matrix> gen;

  Rep() = default;
  Rep(CatPtr c, std::vector<int> d);

  int total_dim() const;
  bool is_zero_rep() const { return total_dim() == 0; }
  bool same_shape(const Rep& o) const { return cat == o.cat && dims == o.dims; }
  bool operator==(const Rep& o) const { return cat == o.cat && dims == o.dims && gen == o.gen; }

  std::string dims_str() const;
};

Rep zero_rep(const CatPtr& cat);
Rep simple_rep(const CatPtr& cat, int v);

// Structural validation: shapes plus the category's relations.
void validate_rep(const Rep& r);

// A morphism of representations: per-vertex matrices, tgt-space rows.
struct Morph {
  Rep src, tgt;
  std::vector<Matrix> maps;

  Morph() = default;
  Morph(Rep s, Rep t);

  bool is_zero_morph() const;
};

Morph zero_morph(const Rep& s, const Rep& t);
Morph identity_morph(const Rep& x);
void validate_morph(const Morph& f);
Morph compose(const Morph& g, const Morph& f);  // g after f
Morph add(const Morph& f, const Morph& g);
Morph negate(const Morph& f);
Morph scale(const Morph& f, const mpq_class& k);
bool is_mono(const Morph& f);
bool is_epi(const Morph& f);
bool is_iso_morph(const Morph& f);
std::optional<Morph> invert(const Morph& f);

// The category of modules over a monomial algebra; generators are the arrows.
class AlgebraCat : public Cat {
public:
  static std::shared_ptr<const AlgebraCat> make(std::shared_ptr<const MonomialAlgebra> a);

  const MonomialAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const MonomialAlgebra> algebra_ptr() const { return alg_; }

  std::string check_rep(const Rep& r) const override;
  int op_vertex(int v) const override { return v; }
  int op_gen(int g) const override { return g; }
  std::vector<int> unit_perm(int i, int w) const override;

  // action of a path on a representation (composite of arrow matrices)
  static Matrix path_action(const Rep& r, const Path& p);

protected:
  ProjData build_projective(int v) const override;
  std::shared_ptr<const Cat> build_opposite() const override;

private:
  explicit AlgebraCat(std::shared_ptr<const MonomialAlgebra> a);
  std::shared_ptr<const MonomialAlgebra> alg_;

  // paths with given source, in path-basis order
  std::vector<int> paths_from(int v) const;
};

}  // namespace qhom
