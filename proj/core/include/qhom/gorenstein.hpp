#pragma once

#include "qhom/cotorsion.hpp"

namespace qhom {

// ------------------------------------------------------------------ duality

// Canonical evaluation x -> Hom(Q, Lambda)^* induced by g : Q -> Hom(x, Lambda);
// with g the identity this is the biduality map, with g a projective cover it
// is the embedding into the next term of a complete resolution.
Morph evaluation_map(const Rep& x, const HomDual& xd, const Morph& g, const HomDual& q_dual);

bool biduality_is_iso(const Rep& x);

// Auslander-Bridger transpose: coker(P0^* -> P1^*) over the opposite.
Rep transpose(const Rep& x);

// -------------------------------------------------------------- GP verdicts

enum class GpStatus { Certified, UpToBound, Refuted };

// One period of a periodic complex; diffs[i] : terms[i] -> terms[(i+1) % n].
struct PeriodicComplex {
  std::vector<Rep> terms;
  std::vector<Morph> diffs;
};

// exactness of the cyclic complex at every position
bool periodic_is_exact(const PeriodicComplex& c);
// exactness of Hom(-, y) applied to it
bool periodic_hom_exact(const PeriodicComplex& c, const Rep& y);

struct GpCertificate {
  // verified cosyzygy sequences 0 -> X_k -> Q_k -> X_{k+1} -> 0, X_0 = m,
  // with X_{approach + period} isomorphic to X_{approach}
  std::vector<ShortExact> chain;
  int approach = 0;
  int period = 0;
  Morph wrap_iso;
  PeriodicComplex resolution;  // the assembled one-period complete resolution
};

struct GpVerdict {
  GpStatus status = GpStatus::UpToBound;
  int bound = 0;
  std::string detail;
  std::optional<GpCertificate> certificate;
};

// Bounded semidecision: refute via the totally-reflexive battery, certify via
// a revisited cosyzygy class whose one-period complex is machine-verified to
// be exact and Hom(-, proj)-exact.
GpVerdict is_gorenstein_projective(const Rep& m, int bound);

struct GpClassResult {
  ObjectClass cls;  // certified members only
  std::vector<GpVerdict> verdicts;
  std::vector<Rep> ambient;  // the enumerated slice the verdicts refer to
  std::vector<int> undecided;  // indices with UpToBound status
};
GpClassResult gp_class(const CatPtr& cat, int dim_cap, int bound);

// ------------------------------------------------------------ compatibility

enum class CompatMethod { DimensionBound, DirectBounded, ImpliedByC1, Vacuous };

struct CompatItem {
  bool holds = false;
  CompatMethod method = CompatMethod::DirectBounded;
  std::string detail;
};

struct CompatWitness {
  PeriodicComplex complex;  // the projective period whose image breaks exactness
  std::vector<int> t_dims;
  std::vector<int> t_ranks;
  std::string note;
};

struct CompatReport {
  CompatItem c1, c2, w1;
  std::optional<CompatWitness> c1_witness;
  bool compatible() const { return c1.holds && c2.holds; }
  bool weak_compatible() const { return w1.holds && c2.holds; }
};

CompatReport check_compatibility(const TensorFunctor& t, int bound, int dim_cap);

// syzygy-periodic exact complexes of projectives reachable from a module
std::optional<PeriodicComplex> syzygy_period_complex(const Rep& m, int bound);

// ----------------------------------------------------------------- triples

struct GpTripleReport {
  bool gp = false;
  MembershipReport membership;
};

// Triple characterization: phi monic, coker phi Gorenstein projective over R,
// B-part Gorenstein projective over S; licensed only for compatible functors.
GpTripleReport is_gp_triple(const Rep& t, const GpClassResult& gp_r, const GpClassResult& gp_s,
                            const CompatReport& compat);

// Special GP precover in the comma category, via the transferred pair.
ApproxResult gp_precover_comma(const Rep& t, const GpClassResult& gp_r, const GpClassResult& gp_s,
                               const CompatReport& compat, const std::vector<Rep>& r_ambient,
                               const std::vector<Rep>& s_ambient, const TransferOptions& opt = {});

}  // namespace qhom
