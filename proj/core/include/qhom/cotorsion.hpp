#pragma once

#include "qhom/classes.hpp"

namespace qhom {

struct CotorsionPair {
  ObjectClass left, right;
  bool hereditary_verified = false;
  bool complete_verified = false;
};

struct ApproxOptions {
  PerpDegree degree = PerpDegree::ExtOne;
  int iteration_cap = 16;
  int exhaustive_mult_cap = 2;  // used only by the cross-check oracle
};

struct Certificates {
  bool exact = false;
  bool arrow_ok = false;          // epi (precover) / mono (preenvelope)
  bool object_in_class = false;   // the approximating object
  bool end_in_perp = false;       // kernel resp. cokernel
  std::vector<std::string> notes;
  bool all() const { return exact && arrow_ok && object_in_class && end_in_perp; }
};

struct ApproxResult {
  enum class Kind { Precover, Preenvelope };
  Kind kind = Kind::Precover;
  // precover: 0 -> K -> G -> t -> 0 ; preenvelope: 0 -> t -> W -> C -> 0
  ShortExact ses;
  Certificates certs;
  bool identity = false;
};

// ----------------------------------------------------- minimal approximations

struct MinApprox {
  Morph map;  // G -> t (right) / t -> V (left)
  std::vector<std::pair<int, int>> kept;  // (member index, hom-basis index)
};
MinApprox minimal_right_approx(const Rep& t, const std::vector<Rep>& members);
MinApprox minimal_left_approx(const Rep& t, const std::vector<Rep>& members);

// -------------------------------------------------------------- approximations

// Special c-preenvelope 0 -> t -> W -> X' -> 0 with W in c and X' in the left
// orthogonal of c.  Built by iterated universal extensions against the given
// generator list (normally the left class of the pair c completes); certified
// afterwards.  Falls back to the minimal left approximation, whose failure is
// a sound negative certificate.
ApproxResult special_preenvelope(const Rep& t, const ObjectClass& c,
                                 const std::vector<Rep>& left_generators,
                                 const ApproxOptions& opt = {});

// Special c-precover 0 -> K -> G -> t -> 0 via the Salce construction:
// projective cover, special c^perp-preenvelope of its kernel, pushout.
ApproxResult special_precover(const Rep& t, const ObjectClass& c, const ApproxOptions& opt = {});

// Independent oracle: search epis from bounded-multiplicity sums directly.
// Returns a result when found within the budget, nullopt when the bounded
// search space is exhausted without a hit.
std::optional<ApproxResult> precover_by_exhaustion(const Rep& t, const ObjectClass& c,
                                                   const ApproxOptions& opt = {});

// -------------------------------------------------------------- pair checking

struct PairReport {
  bool right_is_perp_of_left = false;
  bool left_is_perp_of_right = false;
  bool is_cotorsion_pair = false;
  bool hereditary = false;
  bool left_resolving = false;
  bool right_coresolving = false;
  std::vector<std::string> left_mismatch, right_mismatch;
};

PairReport check_cotorsion_pair(const CotorsionPair& p, const std::vector<Rep>& ambient_list,
                                PerpDegree degree = PerpDegree::ExtOne);

// ------------------------------------------------------------------- transfer

struct TransferOptions {
  ApproxOptions approx;
  bool verify_components = false;  // run special_precover over both ambients first
};

// The two-pushout construction: a special (X^perp, Y^perp)-preenvelope of a
// comma object, assuming T is Y-exact and both pairs are complete.
ApproxResult transfer_preenvelope_comma(const Rep& t, const CotorsionPair& x_pair,
                                        const CotorsionPair& y_pair,
                                        const TransferOptions& opt = {});

// Special <p(X,Y)>-precover of a comma object, assembled from a comma
// projective cover and the transferred preenvelope of its kernel.
ApproxResult transfer_precover_comma(const Rep& t, const ObjectClass& x_class,
                                     const ObjectClass& y_class,
                                     const std::vector<Rep>& r_ambient,
                                     const std::vector<Rep>& s_ambient,
                                     const TransferOptions& opt = {});

// ------------------------------------------------------------------ frobenius

struct FrobeniusReport {
  bool functor_exact = false;
  // inside the monic-phi class with its inherited exact structure
  std::vector<int> relative_projectives, relative_injectives;  // class member indices
  bool left_side = false;   // relative projectives == relative injectives
  bool r_frobenius = false;
  bool s_frobenius = false;
  bool t_preserves_projectives = false;
  bool right_side = false;
  bool agree = false;
  std::vector<Rep> class_members;
};

FrobeniusReport check_frobenius(const CommaPtr& cc, const std::vector<Rep>& comma_ambient,
                                const std::vector<Rep>& r_ambient, const std::vector<Rep>& s_ambient);

// identity approximations
ApproxResult identity_precover(const Rep& t);
ApproxResult identity_preenvelope(const Rep& t);

}  // namespace qhom
