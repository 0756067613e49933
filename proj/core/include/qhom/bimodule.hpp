#pragma once

#include "qhom/homology.hpp"

namespace qhom {

// An R-S-bimodule given by its vertex-pair grading and the two actions.
// left_act[a][v]  : M(src a, v) -> M(tgt a, v)   for an R-arrow a
// right_act[b][u] : M(u, tgt b) -> M(u, src b)   for an S-arrow b
// (right multiplication by b picks up the source of b).
struct Bimodule {
  std::string name;
  std::shared_ptr<const AlgebraCat> left;
  std::shared_ptr<const AlgebraCat> right;
  std::vector<std::vector<int>> dims;
  std::vector<std::vector<Matrix>> left_act;
  std::vector<std::vector<Matrix>> right_act;

  void validate() const;
  int total_dim() const;

  Rep as_left_module() const;   // over left, forgetting the S-grading
  Rep as_right_module() const;  // over right->opposite()

  // the same data viewed as an S^op - R^op bimodule
  Bimodule transposed() const;

  // A as an A-A-bimodule (paths graded by endpoints)
  static Bimodule regular(const std::shared_ptr<const AlgebraCat>& a);

  // zero bimodule over the given pair
  static Bimodule zero(const std::shared_ptr<const AlgebraCat>& l,
                       const std::shared_ptr<const AlgebraCat>& r);
};

// T(N) for T = M (x)_S - , with the projection/section pair of the quotient
// of the graded product by the bilinearity relations.
struct TApplied {
  Rep rep;                   // over M.left
  std::vector<Matrix> proj;  // big_u -> T(N)_u
  std::vector<Matrix> sect;  // T(N)_u -> big_u
  std::vector<std::vector<int>> slot_off;  // [u][v] offset of the (v) block
};

class TensorFunctor {
public:
  explicit TensorFunctor(Bimodule m) : m_(std::move(m)) { m_.validate(); }

  const Bimodule& bimodule() const { return m_; }
  std::shared_ptr<const AlgebraCat> source() const { return m_.right; }
  std::shared_ptr<const AlgebraCat> target() const { return m_.left; }

  TApplied apply(const Rep& n) const;
  Morph apply_morph(const Morph& f, const TApplied& of_src, const TApplied& of_tgt) const;
  Morph apply_morph(const Morph& f) const;

  int tor_dim(const Rep& n, int degree) const;

private:
  Bimodule m_;
};

// Tor_i(m, n) for a right S-module m (a representation over the opposite of
// n's algebra) against a left S-module n, computed through the bimodule with
// a trivial left side.
int tor_dim(const Rep& m_right, const Rep& n, int degree);

// Y-exactness: T preserves short exact sequences with third term in the
// class.  Decided by Tor_1(M, Y) = 0 per member; a failure is witnessed by
// the projective cover sequence of the offending member, which T sends to an
// inexact sequence.
struct YExactReport {
  bool ok = true;
  int bad_member = -1;
  int tor1_dim = 0;
  std::optional<ShortExact> witness;  // in mod S
};
YExactReport check_Y_exact(const TensorFunctor& t, const std::vector<Rep>& y_members);

// Oracle form: T applied to every enumerated extension with quotient in the
// class stays exact (used to cross-check the Tor criterion).
bool ses_level_y_exact(const TensorFunctor& t, const std::vector<Rep>& y_members,
                       const std::vector<Rep>& ambient);

}  // namespace qhom
