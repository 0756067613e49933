#pragma once

#include "qhom/rep_ops.hpp"

namespace qhom {

// Minimal projective resolution, computed on demand.  diffs[0] is the
// augmentation P_0 -> x; diffs[i] : P_i -> P_{i-1} for i >= 1.
struct Resolution {
  Rep target;
  std::vector<Rep> terms;
  std::vector<Morph> diffs;
  std::vector<SubQuot> syzygies;  // syzygies[i] = Omega^{i+1} inside P_i
};

Resolution resolve(const Rep& x, int length);

// Ext^i(source, target) with a canonical cocycle basis.  For i >= 1 the
// cocycles are morphisms Omega^i -> target modulo restrictions from P_{i-1};
// for i = 0 this degenerates to Hom(source, target).
struct ExtGroup {
  int degree = 0;
  Rep source, target;
  int dim = 0;
  Rep syzygy;
  Morph syz_incl;                // Omega^i -> P_{i-1} (undefined for i = 0)
  Morph augmentation;            // P_0 -> source (for degree 1 realization)
  std::vector<Morph> cocycles;   // ext basis representatives
  std::vector<Morph> hom_basis;  // basis of Hom(Omega^i, target)
  Matrix quot_pi;                // hom coordinates -> ext coordinates
};

ExtGroup ext_group(const Rep& x, const Rep& y, int degree);
int ext_dim(const Rep& x, const Rep& y, int degree);

// dim Ext^i(x, y) for i = 1..bound from a single resolution
std::vector<int> ext_dims_upto(const Rep& x, const Rep& y, int bound);

// Coordinates of a cocycle's class in the ext basis.
Matrix ext_class_coords(const ExtGroup& e, const Morph& cocycle);

// The extension 0 -> A -> E -> C -> 0 realizing a 1-cocycle Omega^1(C) -> A,
// as the pushout of the syzygy presentation.
ShortExact realize_extension(const ExtGroup& e, const Morph& cocycle);

// Connecting class of a short exact sequence in the given Ext^1 group
// (the sequence must run 0 -> e.target -> E -> e.source -> 0).
Matrix ext_class_of(const ExtGroup& e, const ShortExact& s);

// Universal extension 0 -> k -> W -> sum targets^{ext-dim} -> 0 killing every
// Ext^1(target_j, k) class; pushforwards of the basis classes into Ext^1(t, W)
// are verified to vanish.
struct UniversalExt {
  ShortExact ses;
  Rep middle;
  std::vector<int> mults;  // per target
};
UniversalExt universal_extension(const std::vector<Rep>& targets, const Rep& k);

enum class DimKind { Projective, Injective };

// Exact homological dimension up to cap; nullopt encodes "> cap".
std::optional<int> homological_dimension(const Rep& x, DimKind kind, int cap);

// Pushout of a <-f- x -g-> b, returned as the cokernel of (f, -g); the two
// structure maps a -> P and b -> P are provided.
struct Pushout {
  Rep rep;
  Morph from_a;
  Morph from_b;
};
Pushout pushout(const Morph& f, const Morph& g);

}  // namespace qhom
