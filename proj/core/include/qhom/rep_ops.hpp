#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qhom/cat.hpp"

namespace qhom {

// ------------------------------------------------------------ direct sums

struct SumData {
  Rep rep;
  std::vector<Morph> incl;  // summand -> sum
  std::vector<Morph> proj;  // sum -> summand
};
SumData direct_sum(const std::vector<Rep>& parts);

// combine maps f_i : X_i -> Y into (sum X_i) -> Y
Morph from_summands(const SumData& sum, const std::vector<Morph>& fs, const Rep& tgt);
// combine maps g_j : X -> Y_j into X -> (sum Y_j)
Morph into_summands(const SumData& sum, const std::vector<Morph>& gs, const Rep& src);

// ------------------------------------------------------------- hom spaces

// Canonical basis of Hom(x, y): solutions of the commutation equations in
// the RREF kernel order over per-vertex row-major matrix coordinates.
std::vector<Morph> hom_space(const Rep& x, const Rep& y);
int hom_dim(const Rep& x, const Rep& y);

// coordinates of f in the canonical hom basis
Matrix morph_flatten(const Morph& f);
std::optional<Matrix> morph_coords(const Morph& f, const std::vector<Morph>& basis);
Morph morph_combine(const std::vector<Morph>& basis, const Matrix& coords, const Rep& src, const Rep& tgt);

// g with e . g = f (lift of f through an epi or general map e), if any
std::optional<Morph> factor_through(const Morph& f, const Morph& e);
// g with g . m = f (extension of f along a mono m), if any
std::optional<Morph> cofactor_through(const Morph& f, const Morph& m);

// ---------------------------------------------------------- factorization

struct SubQuot {
  Rep rep;
  Morph map;  // inclusion (sub) or projection (quotient)
};

struct Factorization {
  SubQuot kernel;    // map: kernel -> src
  SubQuot image;     // map: image -> tgt
  Morph to_image;    // src -> image, epi with image.map . to_image = f
  SubQuot cokernel;  // map: tgt -> cokernel
};
Factorization factorize(const Morph& f);

SubQuot kernel(const Morph& f);
SubQuot cokernel(const Morph& f);

// subrepresentation spanned by given per-vertex columns (must be invariant)
SubQuot sub_from_columns(const Rep& x, const std::vector<Matrix>& cols);
// quotient of x by the subrepresentation with the given inclusion
SubQuot quotient_by(const Rep& x, const Morph& incl);

SubQuot radical(const Rep& x);
SubQuot top(const Rep& x);  // projection x -> x/rad x

struct ShortExact {
  Morph i;  // A -> E
  Morph p;  // E -> C
};
bool ses_is_exact(const ShortExact& s);

// ------------------------------------------------------------- projectives

Rep projective_rep(const CatPtr& cat, int v);
Rep injective_rep(const CatPtr& cat, int v);

// universal morphism P(v) -> x sending the cyclic generator to column vec
Morph universal_from_projective(const CatPtr& cat, int v, const Rep& x, const Matrix& vec);

struct Cover {
  Rep proj;
  Morph epi;
  std::vector<int> mults;  // copies of P(v) per vertex
};
Cover projective_cover(const Rep& x);

bool is_projective(const Rep& x);
std::optional<Morph> splitting_of_epi(const Morph& e);    // s with e.s = id_tgt
std::optional<Morph> retraction_of_mono(const Morph& m);  // r with r.m = id_src

// --------------------------------------------------------------- duality

// k-linear dual: representation over the opposite category (transposes).
Rep dual_k(const Rep& x);
Morph dual_k_morph(const Morph& f);  // contravariant

// Hom(x, Lambda) with its right-module structure, as a rep over the opposite.
struct HomDual {
  Rep rep;                                   // over cat->opposite()
  std::vector<std::vector<Morph>> hom_basis; // [w] = basis of Hom(x, P(w))
};
HomDual dual_hom(const Rep& x);
Morph dual_hom_morph(const Morph& f, const HomDual& of_tgt, const HomDual& of_src);

// right multiplication P(tgt g) -> P(src g)
Morph right_mult(const CatPtr& cat, int g);

// ------------------------------------------------------ iso / decomposition

struct IsoOptions {
  std::uint64_t enumeration_limit = 1u << 16;  // field-size^homdim cap for exhaustive search
  int random_trials = 512;
  std::uint64_t seed = 0x51ab5eedULL;
};

std::optional<Morph> find_iso(const Rep& x, const Rep& y, const IsoOptions& opt = {});
bool is_iso(const Rep& x, const Rep& y, const IsoOptions& opt = {});

struct DecompOptions {
  std::uint64_t enumeration_limit = 1u << 16;
  int fitting_trials = 64;
  std::uint64_t seed = 0xdec0cafeULL;
};

struct Summand {
  Rep rep;
  int mult = 1;
};

struct Decomposition {
  std::vector<Summand> summands;
  Morph witness;  // sum of summand copies -> x, an isomorphism
};
Decomposition decompose(const Rep& x, const DecompOptions& opt = {});
bool is_indecomposable(const Rep& x, const DecompOptions& opt = {});

// ------------------------------------------------------------- enumeration

struct EnumOptions {
  std::uint64_t tuple_budget = 1ull << 22;  // max matrix assignments per dimension vector
};

// One representative per isomorphism class of indecomposables with total
// dimension <= cap; ordered by (total dim, dim vector lex, first found).
std::vector<Rep> enumerate_indecomposables(const CatPtr& cat, int cap, const EnumOptions& opt = {});

// index of the member isomorphic to x, or -1
int find_in_list(const Rep& x, const std::vector<Rep>& list);

}  // namespace qhom
