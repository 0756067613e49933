#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qhom/field.hpp"

namespace qhom {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
  void validate() const;
};

// A path stored in traversal order: arrows[0] is applied first.
// Trivial paths have empty arrows and src == tgt.
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const Path&) const = default;
};

// Finite-dimensional path algebra with monomial relations.
class MonomialAlgebra {
public:
  MonomialAlgebra(std::string name, Quiver q, Field f,
                  std::vector<std::vector<std::string>> relations);

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  Field field() const { return field_; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }

  int n_vertices() const { return static_cast<int>(quiver_.vertices.size()); }
  int n_arrows() const { return static_cast<int>(quiver_.arrows.size()); }

  // Basis paths: trivial paths by vertex order, then by length, then
  // lexicographically by arrow name sequence.
  const std::vector<Path>& path_basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // true iff some relation occurs as a contiguous subpath
  bool path_is_zero(const std::vector<int>& arrows) const;

  // index into path_basis, or -1 when the path vanishes
  int basis_index(const Path& p) const;

  // product q-then-p; -1 when zero or not composable
  int multiply(int p_idx, int q_idx) const;

  MonomialAlgebra opposite_algebra() const;

  std::string path_str(const Path& p) const;

private:
  std::string name_;
  Quiver quiver_;
  Field field_;
  std::vector<std::vector<int>> relations_;  // arrow indices, traversal order
  std::vector<Path> basis_;

  void check_finite_dimensional() const;
  void build_basis();
};

}  // namespace qhom
