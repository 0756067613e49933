#pragma once

// Shared fixture algebras used across the test suites.
//
//   ka2     : 2 --a--> 1
//   l3      : 3 --alpha--> 2 --beta--> 1,  beta.alpha = 0
//   n2      : one vertex, loop x, x^2 = 0 (dual numbers)
//   cmfree3 : 3 --beta--> 2 --alpha--> 1 with loop x at 2,
//             relations x^2, alpha.x, alpha.beta, x.beta
//   cmfree2 : the subalgebra of cmfree3 on {2,3} (a CM-free algebra)
//
// Relation paths are written in traversal order: first applied first.

#include <memory>

#include "qhom/cat.hpp"
#include "qhom/quiver.hpp"

namespace fx {

using namespace qhom;

inline std::shared_ptr<const MonomialAlgebra> ka2(std::uint32_t p = 2) {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 1, 0}};
  return std::make_shared<MonomialAlgebra>("kA2", q, Field::make(p),
                                           std::vector<std::vector<std::string>>{});
}

inline std::shared_ptr<const MonomialAlgebra> l3(std::uint32_t p = 2) {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"alpha", 2, 1}, {"beta", 1, 0}};
  return std::make_shared<MonomialAlgebra>(
      "L3", q, Field::make(p),
      std::vector<std::vector<std::string>>{{"alpha", "beta"}});
}

inline std::shared_ptr<const MonomialAlgebra> n2(std::uint32_t p = 2) {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  return std::make_shared<MonomialAlgebra>(
      "N2", q, Field::make(p), std::vector<std::vector<std::string>>{{"x", "x"}});
}

inline std::shared_ptr<const MonomialAlgebra> cmfree3(std::uint32_t p = 2) {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"alpha", 1, 0}, {"beta", 2, 1}, {"x", 1, 1}};
  return std::make_shared<MonomialAlgebra>(
      "CMF3", q, Field::make(p),
      std::vector<std::vector<std::string>>{
          {"x", "x"}, {"x", "alpha"}, {"beta", "alpha"}, {"beta", "x"}});
}

inline std::shared_ptr<const MonomialAlgebra> cmfree2(std::uint32_t p = 2) {
  Quiver q;
  q.vertices = {"2", "3"};
  q.arrows = {{"beta", 1, 0}, {"x", 0, 0}};
  return std::make_shared<MonomialAlgebra>(
      "CMF2", q, Field::make(p),
      std::vector<std::vector<std::string>>{{"x", "x"}, {"beta", "x"}});
}

inline std::shared_ptr<const AlgebraCat> cat(std::shared_ptr<const MonomialAlgebra> a) {
  return AlgebraCat::make(std::move(a));
}

}  // namespace fx
