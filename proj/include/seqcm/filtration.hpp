#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqcm/complex.hpp"
#include "seqcm/ideal.hpp"

namespace seqcm {

/// M = R/I together with a reduced primary decomposition of I supplied as
/// (component ideal, dimension) pairs. Construction verifies that the
/// components intersect to I, that recorded dimensions match, and that no
/// component is redundant.
struct ModulePresentation {
  RingPtr ring;
  Ideal defining_ideal;
  std::vector<std::pair<Ideal, int>> components;
  int dim = 0;

  static ModulePresentation make(Ideal defining_ideal, std::vector<std::pair<Ideal, int>> components);
  static ModulePresentation from_complex(const SimplicialComplex& c, const RingPtr& ring);
};

enum class FiltrationKind { Dimension, UserSupplied };

/// One step D_i = J_i/I; dim = -1 encodes the zero module (J = I). The
/// companion K_i intersects the components of dimension <= dim and satisfies
/// J_i cap K_i = I, giving D_i iso (J_i + K_i)/K_i.
struct FiltrationStep {
  Ideal J;
  int dim = -1;
  Ideal companion;
};

struct Filtration {
  FiltrationKind kind = FiltrationKind::Dimension;
  std::vector<FiltrationStep> steps;  // dims strictly increasing, last = ((1), dim M)

  const FiltrationStep& top() const { return steps.back(); }
};

/// The dimension filtration from the primary components (Remark 2.3 style:
/// J_i intersects the components of dimension >= d_{i+1}).
Filtration dimension_filtration(const ModulePresentation& M);

/// 0 = D_0 subset M.
Filtration trivial_filtration(const ModulePresentation& M);

/// User chain of ideals between I and (1); dimensions are derived via
/// annihilators, the dimension condition and companion compatibility are
/// verified.
Filtration user_filtration(const ModulePresentation& M, std::vector<Ideal> chain);

struct ParameterSystem {
  std::vector<Polynomial> elements;
  std::vector<std::uint64_t> degrees;  // weighted degrees
  std::optional<std::vector<unsigned>> powers;
};

/// Wraps d = dim M elements, checking they form a system of parameters.
ParameterSystem make_parameter_system(const ModulePresentation& M,
                                      std::vector<Polynomial> elements);

/// Raw sop test: dim R/(I + (x_1..x_d)) == 0 with exactly d = dim M elements.
bool is_system_of_parameters(const ModulePresentation& M, const std::vector<Polynomial>& elements);

struct GoodSopCheck {
  bool good = false;
  int violated_step = -1;  // first filtration index whose condition fails
};

/// Definition 2.2: J_i cap (I + (x_{d_i+1},...,x_d)) = I for every i < t.
GoodSopCheck is_good_sop(const ModulePresentation& M, const Filtration& F,
                         const ParameterSystem& x);

struct SopSearchConfig {
  int coefficient_box = 2;        // expanding boxes {-1..1}, {-2..2}, ...
  unsigned max_total_degree = 3;  // per-slot candidate degree escalation limit
  long long max_candidates = 200000;
};

/// Deterministic search mirroring the existence proof: slot j draws candidates
/// from the companion of the last step of dimension < j.
ParameterSystem find_good_sop(const ModulePresentation& M, const Filtration& F,
                              const SopSearchConfig& cfg = {});

/// System of parameters of the cyclic module R/A by the same box search,
/// without goodness constraints.
std::vector<Polynomial> find_sop_cyclic(const Ideal& A, const SopSearchConfig& cfg = {});

struct MultiplicityConfig {
  int window = 8;  // largest diagonal power for finite-difference extraction
};

/// Serre multiplicity e(x_1..x_r; R/A): stabilized r-th finite difference of
/// the diagonal length l(R/(A + (x_1^n..x_r^n))); zero when dim R/A < r.
long long multiplicity_cyclic(const std::vector<Polynomial>& x, int r, const Ideal& A,
                              const MultiplicityConfig& cfg = {});

/// e(x_1..x_r; (J+K)/K), the module form used for filtration strata and
/// colon subquotients.
long long multiplicity_pair(const std::vector<Polynomial>& x, int r, const Ideal& J,
                            const Ideal& K, const MultiplicityConfig& cfg = {});

/// Per-step multiplicities e(x_1..x_{d_i}; D_i) of a filtration.
struct StratumMultiplicity {
  int dim = -1;
  long long value = 0;
};
std::vector<StratumMultiplicity> filtration_multiplicities(const ModulePresentation& M,
                                                           const Filtration& F,
                                                           const ParameterSystem& x,
                                                           const MultiplicityConfig& cfg = {});

/// l(M / x(n) M) measured at the origin.
long long powered_length(const ModulePresentation& M, const ParameterSystem& x,
                         const std::vector<unsigned>& n);

/// I_{F,M}(x(n)) = l(M/x(n)M) - sum_i (prod_{j<=d_i} n_j) e(x_1..x_{d_i}; D_i).
/// Checks that x is good with respect to F.
long long i_value(const ModulePresentation& M, const Filtration& F, const ParameterSystem& x,
                  const std::vector<unsigned>& n, const MultiplicityConfig& cfg = {});

/// Grid variant reusing precomputed stratum multiplicities.
long long i_value_from(const ModulePresentation& M, const ParameterSystem& x,
                       const std::vector<StratumMultiplicity>& strata,
                       const std::vector<unsigned>& n);

}  // namespace seqcm
