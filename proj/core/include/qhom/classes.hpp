#pragma once

#include "qhom/comma.hpp"

namespace qhom {

// A class of objects, rendered as a finite list of indecomposables inside an
// enumerated ambient.  Zero is always a member implicitly.
struct ObjectClass {
  std::string name;
  CatPtr ambient;
  std::vector<Rep> members;
  bool asserted_extension_closed = false;
  bool asserted_smd_closed = false;

  bool contains(const Rep& x) const { return in_additive_closure(x, members); }
  int find(const Rep& x) const { return find_in_list(x, members); }
};

// Decompose, dedupe and sort the raw members into canonical order.
ObjectClass canonical_class(std::string name, CatPtr ambient, const std::vector<Rep>& raw);

// deterministic member order used everywhere: (total dim, dim vector, found)
void sort_members(std::vector<Rep>& members);

enum class PerpDegree { ExtOne, Hereditary };

// Ext^i(x, y) = 0 for all i >= 1, decided through the syzygy-summand closure
// of x (finite over representation-finite ambients).
bool ext_vanishes_all_degrees(const Rep& x, const Rep& y, int closure_cap = 64);

// All indecomposable summands of x and of its syzygies in every degree.
std::vector<Rep> syzygy_summand_closure(const std::vector<Rep>& seeds, int closure_cap = 64);

ObjectClass perp_right(const ObjectClass& c, const std::vector<Rep>& ambient_list,
                       PerpDegree deg = PerpDegree::ExtOne);
ObjectClass perp_left(const ObjectClass& c, const std::vector<Rep>& ambient_list,
                      PerpDegree deg = PerpDegree::ExtOne);

ObjectClass smd_closure(const ObjectClass& c);

struct ClosureBudget {
  int max_rounds = 16;
  int max_classes = 256;
  std::uint64_t max_combos = 4096;  // field-size^extdim per ordered pair
};

// Least extension-closed class containing the members: repeatedly realize
// every F_p-combination of Ext^1 classes between current members and adjoin
// the indecomposable summands of the middle terms.
ObjectClass extension_closure(const ObjectClass& c, const ClosureBudget& budget = {});

// every extension 0 -> a -> e -> c -> 0 between two fixed ends, one per
// Ext^1 class (the zero class included when with_split is set)
std::vector<ShortExact> all_extensions(const Rep& c, const Rep& a, bool with_split,
                                       std::uint64_t max_combos = 4096);

// standard names: S(v), P(v), I(v) when isomorphic to one, else dims
std::string standard_name(const Rep& x);

// classes of all projectives / injectives / simples over an ambient
std::vector<Rep> projective_list(const CatPtr& cat);
std::vector<Rep> injective_list(const CatPtr& cat);
std::vector<Rep> simple_list(const CatPtr& cat);

}  // namespace qhom
