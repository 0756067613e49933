#pragma once

#include "qhom/bimodule.hpp"

namespace qhom {

// The comma category of T = M (x)_S - : mod S -> mod R, presented as a module
// category whose vertices are the R-vertices followed by the S-vertices and
// whose generators are the R-arrows, the S-arrows, and the basis elements of
// M (one generator s-vertex -> r-vertex per graded basis vector).  Objects
// are exactly the triples (A, B, phi) with phi : T(B) -> A.
class CommaCat : public Cat {
public:
  static std::shared_ptr<const CommaCat> make(Bimodule m, std::string name);

  const Bimodule& bimodule() const { return m_; }
  const TensorFunctor& functor() const { return t_; }
  std::shared_ptr<const AlgebraCat> left_cat() const { return m_.left; }
  std::shared_ptr<const AlgebraCat> right_cat() const { return m_.right; }

  int nR() const { return m_.left->n_vertices(); }
  int nS() const { return m_.right->n_vertices(); }
  int r_vertex(int u) const { return u; }
  int s_vertex(int v) const { return nR() + v; }
  bool is_r_vertex(int i) const { return i < nR(); }

  int n_r_arrows() const { return m_.left->algebra().n_arrows(); }
  int n_s_arrows() const { return m_.right->algebra().n_arrows(); }
  int gen_of_r_arrow(int a) const { return a; }
  int gen_of_s_arrow(int b) const { return n_r_arrows() + b; }
  int gen_of_m(int u, int v, int k) const;
  struct MGen {
    int u, v, k;
  };
  const std::vector<MGen>& m_gens() const { return m_gens_; }

  std::string check_rep(const Rep& r) const override;
  int op_vertex(int v) const override;
  int op_gen(int g) const override;
  std::vector<int> unit_perm(int i, int w) const override;

protected:
  ProjData build_projective(int v) const override;
  std::shared_ptr<const Cat> build_opposite() const override;

private:
  CommaCat(Bimodule m, std::string name);
  Bimodule m_;
  TensorFunctor t_;
  std::vector<MGen> m_gens_;
  std::vector<std::vector<int>> m_off_;  // [u][v] index of (u,v,0) in m_gens_
};

using CommaPtr = std::shared_ptr<const CommaCat>;

// (A, B, phi) view over a comma representation.
struct Triple {
  Rep a;                    // over R
  Rep b;                    // over S
  std::vector<Matrix> phi;  // per R-vertex, T(b)_u -> a_u
  TApplied tb;
};

Triple rep_to_triple(const Rep& x);
Rep triple_to_rep(const CommaPtr& cc, const Rep& a, const Rep& b, const std::vector<Matrix>& phi);

// phi as a morphism T(b) -> a in mod R
Morph phi_morph(const Triple& t);

// restriction of a comma morphism to the two component categories
Morph a_component(const Morph& f);
Morph b_component(const Morph& f);

// p(A, B) = (A + T(B), B) with the inclusion of the second summand
Rep apply_p(const CommaPtr& cc, const Rep& a, const Rep& b);
Morph apply_p_morph(const CommaPtr& cc, const Morph& fa, const Morph& fb);
// q(X) = (A, B): the forgetful pair, realized via rep_to_triple

// the triangular split of a monomial algebra along a vertex bipartition
struct TriangularSplit {
  std::shared_ptr<const AlgebraCat> lambda;
  std::vector<int> r_verts, s_verts;  // lambda vertex indices, ascending
  CommaPtr comma;

  Rep module_to_triple(const Rep& m) const;  // comma representation
  Rep triple_to_module(const Rep& t) const;

  int lambda_vertex_of_comma(int i) const;
  int comma_vertex_of_lambda(int lv) const;
};

TriangularSplit split_triangular(const std::shared_ptr<const AlgebraCat>& lambda,
                                 const std::vector<int>& r_verts);

// Projectivity of a triple: B projective over S, phi monic, coker phi
// projective over R; cross-checkable against split covers.
struct ProjTripleReport {
  bool verdict = false;
  bool b_projective = false;
  bool phi_monic = false;
  bool coker_projective = false;
};
ProjTripleReport is_projective_triple(const Rep& x);

// membership in the class of triples with B in add(Y), phi monic and
// coker phi in add(X)
struct MembershipReport {
  bool member = false;
  bool b_in_y = false;
  bool phi_monic = false;
  bool coker_in_x = false;
};
MembershipReport membership_BXY(const Rep& x, const std::vector<Rep>& x_class,
                                const std::vector<Rep>& y_class);

// is x isomorphic to a finite sum of members of the list?
bool in_additive_closure(const Rep& x, const std::vector<Rep>& members);

}  // namespace qhom
