#include "seqcm/filtration.hpp"

#include <algorithm>
#include <set>

namespace seqcm {

namespace {

Ideal intersect_components(const RingPtr& ring,
                           const std::vector<std::pair<Ideal, int>>& components,
                           int min_dim_exclusive, int max_dim_inclusive) {
  bool any = false;
  Ideal acc;
  for (const auto& [N, d] : components) {
    if (d <= min_dim_exclusive || d > max_dim_inclusive) continue;
    acc = any ? ideal_intersect(acc, N) : N;
    any = true;
  }
  return any ? acc : unit_ideal(ring);
}

long long factorial(int r) {
  long long f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

}  // namespace

ModulePresentation ModulePresentation::make(Ideal defining_ideal,
                                            std::vector<std::pair<Ideal, int>> components) {
  ModulePresentation M;
  M.ring = defining_ideal.ring();
  M.defining_ideal = std::move(defining_ideal);
  if (components.empty()) throw InputError("module presentation needs at least one component");
  int dim = -1;
  bool any = false;
  Ideal meet;
  for (const auto& [N, d] : components) {
    require_same_ring(M.ring, N.ring());
    if (krull_dimension(N) != d)
      throw InputError("component dimension mismatch: recorded " + std::to_string(d) +
                       ", computed " + std::to_string(krull_dimension(N)));
    dim = std::max(dim, d);
    meet = any ? ideal_intersect(meet, N) : N;
    any = true;
  }
  if (!meet.same_ideal(M.defining_ideal))
    throw InputError("components do not intersect to the defining ideal");
  if (components.size() > 1) {
    for (std::size_t skip = 0; skip < components.size(); ++skip) {
      bool first = true;
      Ideal partial;
      for (std::size_t k = 0; k < components.size(); ++k) {
        if (k == skip) continue;
        partial = first ? components[k].first : ideal_intersect(partial, components[k].first);
        first = false;
      }
      if (partial.same_ideal(M.defining_ideal))
        throw InputError("redundant component in the primary decomposition");
    }
  }
  if (dim < 1) throw InputError("dim M >= 1 required");
  M.components = std::move(components);
  M.dim = dim;
  return M;
}

ModulePresentation ModulePresentation::from_complex(const SimplicialComplex& c,
                                                    const RingPtr& ring) {
  return make(stanley_reisner_ideal(c, ring), facet_primes(c, ring));
}

Filtration dimension_filtration(const ModulePresentation& M) {
  std::set<int> present;
  for (const auto& [N, d] : M.components) present.insert(d);
  std::vector<int> step_dims;
  if (!present.count(0)) step_dims.push_back(-1);
  step_dims.insert(step_dims.end(), present.begin(), present.end());

  Filtration F;
  F.kind = FiltrationKind::Dimension;
  for (int s : step_dims) {
    FiltrationStep step;
    step.dim = s;
    step.J = intersect_components(M.ring, M.components, s, M.dim);  // dims > s
    step.companion = intersect_components(M.ring, M.components, -1, s);  // dims <= s
    if (s == -1) {
      if (!step.J.same_ideal(M.defining_ideal))
        throw Error("inconsistent component dimensions: D_0 expected to vanish");
    } else {
      int computed = krull_dimension(ideal_colon(M.defining_ideal, step.J));
      if (computed != s)
        throw Error("inconsistent component dimensions: step claims " + std::to_string(s) +
                    ", annihilator gives " + std::to_string(computed));
    }
    if (!ideal_intersect(step.J, step.companion).same_ideal(M.defining_ideal))
      throw Error("companion identity J cap K = I violated; decomposition is not reduced");
    F.steps.push_back(std::move(step));
  }
  return F;
}

Filtration trivial_filtration(const ModulePresentation& M) {
  Filtration F;
  F.kind = FiltrationKind::UserSupplied;
  F.steps.push_back({M.defining_ideal, -1, unit_ideal(M.ring)});
  F.steps.push_back({unit_ideal(M.ring), M.dim, M.defining_ideal});
  return F;
}

Filtration user_filtration(const ModulePresentation& M, std::vector<Ideal> chain) {
  Filtration F;
  F.kind = FiltrationKind::UserSupplied;
  std::vector<std::pair<Ideal, int>> steps;
  for (auto& J : chain) {
    require_same_ring(M.ring, J.ring());
    if (!J.contains(M.defining_ideal))
      throw InputError("filtration step does not contain the defining ideal");
    int dim;
    if (J.same_ideal(M.defining_ideal))
      dim = -1;
    else if (J.is_unit())
      dim = M.dim;
    else
      dim = krull_dimension(ideal_colon(M.defining_ideal, J));
    steps.emplace_back(std::move(J), dim);
  }
  if (steps.empty() || steps.front().second >= 0)
    steps.insert(steps.begin(), {M.defining_ideal, -1});
  if (steps.back().second != M.dim || !steps.back().first.is_unit())
    steps.emplace_back(unit_ideal(M.ring), M.dim);

  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i].second >= steps[i + 1].second)
      throw InputError("dimension condition violated: step dimensions must strictly increase");
    if (!steps[i + 1].first.contains(steps[i].first))
      throw InputError("filtration steps are not increasing");
  }
  for (auto& [J, dim] : steps) {
    FiltrationStep step;
    step.J = std::move(J);
    step.dim = dim;
    step.companion = intersect_components(M.ring, M.components, -1, dim);
    if (!ideal_intersect(step.J, step.companion).same_ideal(M.defining_ideal))
      throw InputError("filtration step incompatible with the primary components (J cap K != I)");
    F.steps.push_back(std::move(step));
  }
  return F;
}

bool is_system_of_parameters(const ModulePresentation& M,
                             const std::vector<Polynomial>& elements) {
  if (static_cast<int>(elements.size()) != M.dim) return false;
  for (const auto& e : elements) {
    if (e.is_zero()) return false;
    require_same_ring(M.ring, e.ring());
  }
  return krull_dimension(ideal_sum(M.defining_ideal, elements)) == 0;
}

ParameterSystem make_parameter_system(const ModulePresentation& M,
                                      std::vector<Polynomial> elements) {
  if (!is_system_of_parameters(M, elements))
    throw NotSopError("the given elements are not a system of parameters of M");
  ParameterSystem x;
  for (const auto& e : elements) x.degrees.push_back(e.weighted_degree());
  x.elements = std::move(elements);
  return x;
}

GoodSopCheck is_good_sop(const ModulePresentation& M, const Filtration& F,
                         const ParameterSystem& x) {
  if (!is_system_of_parameters(M, x.elements))
    throw NotSopError("not a system of parameters");
  for (std::size_t i = 0; i + 1 < F.steps.size(); ++i) {
    const FiltrationStep& step = F.steps[i];
    if (step.dim < 0) continue;  // the zero module meets everything in zero
    std::vector<Polynomial> tail(x.elements.begin() + step.dim, x.elements.end());
    Ideal T = ideal_sum(M.defining_ideal, tail);
    if (!ideal_intersect(step.J, T).same_ideal(M.defining_ideal))
      return {false, static_cast<int>(i)};
  }
  return {true, -1};
}

namespace {

/// Deterministic candidate stream for one search slot: combinations of the
/// source generators over expanding coefficient boxes, lower degrees first.
class CandidateStream {
 public:
  CandidateStream(const RingPtr& ring, std::vector<Polynomial> pool, const SopSearchConfig& cfg)
      : ring_(ring), pool_(std::move(pool)), cfg_(cfg) {
    std::set<unsigned> degs;
    for (const auto& g : pool_)
      if (g.total_degree() <= cfg_.max_total_degree) degs.insert(g.total_degree());
    degrees_.assign(degs.begin(), degs.end());
    reset();
  }

  void reset() {
    deg_idx_ = 0;
    box_ = 1;
    started_ = false;
    set_active();
  }

  /// Next candidate, or nullopt when the stream is exhausted.
  std::optional<Polynomial> next() {
    while (deg_idx_ < degrees_.size()) {
      if (advance_vector()) {
        Polynomial cand = combine();
        if (!cand.is_zero()) return cand;
        continue;
      }
      // stage exhausted: next box, then next degree tier
      if (box_ < cfg_.coefficient_box) {
        ++box_;
      } else {
        ++deg_idx_;
        box_ = 1;
      }
      started_ = false;
      set_active();
    }
    return std::nullopt;
  }

 private:
  void set_active() {
    active_.clear();
    if (deg_idx_ >= degrees_.size()) return;
    for (std::size_t k = 0; k < pool_.size(); ++k)
      if (pool_[k].total_degree() <= degrees_[deg_idx_]) active_.push_back(k);
    coef_.assign(active_.size(), -static_cast<int>(box_));
  }

  /// Steps the odometer to the next admissible coefficient vector.
  bool advance_vector() {
    const int b = static_cast<int>(box_);
    while (true) {
      if (!started_) {
        started_ = true;
      } else {
        std::size_t pos = active_.size();
        while (pos > 0) {
          --pos;
          if (coef_[pos] < b) {
            ++coef_[pos];
            for (std::size_t k = pos + 1; k < coef_.size(); ++k) coef_[k] = -b;
            break;
          }
          if (pos == 0) return false;
        }
        if (active_.empty()) return false;
      }
      if (admissible()) return true;
    }
  }

  bool admissible() const {
    const int b = static_cast<int>(box_);
    int first_nonzero = 0;
    bool any = false, uses_box = false, uses_new_degree = false;
    for (std::size_t k = 0; k < coef_.size(); ++k) {
      if (coef_[k] == 0) continue;
      if (!any) first_nonzero = coef_[k];
      any = true;
      if (std::abs(coef_[k]) == b) uses_box = true;
      if (pool_[active_[k]].total_degree() == degrees_[deg_idx_]) uses_new_degree = true;
    }
    if (!any || first_nonzero < 0) return false;  // normalize away scalar multiples
    if (box_ > 1 && !uses_box) return false;      // already seen in a smaller box
    if (deg_idx_ > 0 && !uses_new_degree) return false;  // already seen one tier down
    return true;
  }

  Polynomial combine() const {
    Polynomial f(ring_);
    for (std::size_t k = 0; k < coef_.size(); ++k) {
      if (coef_[k] == 0) continue;
      f = f + pool_[active_[k]].scaled(fp::from_int(coef_[k], ring_->characteristic));
    }
    return f;
  }

  RingPtr ring_;
  std::vector<Polynomial> pool_;
  SopSearchConfig cfg_;
  std::vector<unsigned> degrees_;
  std::size_t deg_idx_ = 0;
  unsigned box_ = 1;
  bool started_ = false;
  std::vector<std::size_t> active_;
  std::vector<int> coef_;
};

}  // namespace

ParameterSystem find_good_sop(const ModulePresentation& M, const Filtration& F,
                              const SopSearchConfig& cfg) {
  const int d = M.dim;
  Filtration D = dimension_filtration(M);

  // slot j draws from the companion of the last dimension-filtration step
  // below j; unconstrained slots draw from the variables
  std::vector<std::vector<Polynomial>> pools(static_cast<std::size_t>(d));
  std::vector<Polynomial> variables;
  for (std::size_t i = 0; i < M.ring->nvars(); ++i)
    variables.push_back(Polynomial::variable(M.ring, i));
  for (int j = 1; j <= d; ++j) {
    const Ideal* source = nullptr;
    for (const auto& step : D.steps)
      if (step.dim >= 0 && step.dim < j) source = &step.companion;
    auto& pool = pools[static_cast<std::size_t>(j - 1)];
    if (source && !source->is_unit()) {
      pool = source->groebner();
    } else {
      pool = variables;
    }
  }

  long long tried = 0;
  std::vector<Polynomial> chosen;
  std::vector<Ideal> prefix{M.defining_ideal};

  // depth-first over slots; each slot must cut the dimension by exactly one
  auto dfs = [&](auto&& self, int j) -> std::optional<ParameterSystem> {
    CandidateStream stream(M.ring, pools[static_cast<std::size_t>(j - 1)], cfg);
    while (auto cand = stream.next()) {
      if (++tried > cfg.max_candidates)
        throw SearchExhaustedError("good-sop search exhausted after " +
                                   std::to_string(cfg.max_candidates) + " candidates");
      Ideal next = ideal_sum(prefix.back(), {*cand});
      if (krull_dimension(next) != d - j) continue;
      chosen.push_back(*cand);
      prefix.push_back(std::move(next));
      if (j == d) {
        ParameterSystem x = make_parameter_system(M, chosen);
        if (is_good_sop(M, F, x).good) return x;
      } else if (auto found = self(self, j + 1)) {
        return found;
      }
      chosen.pop_back();
      prefix.pop_back();
    }
    return std::nullopt;
  };

  if (auto found = dfs(dfs, 1)) return *found;
  throw SearchExhaustedError("no good system of parameters found within the search bounds");
}

std::vector<Polynomial> find_sop_cyclic(const Ideal& A, const SopSearchConfig& cfg) {
  const RingPtr& ring = A.ring();
  const int d = krull_dimension(A);
  if (d <= 0) return {};
  std::vector<Polynomial> variables;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    variables.push_back(Polynomial::variable(ring, i));
  long long tried = 0;
  std::vector<Polynomial> chosen;
  std::vector<Ideal> prefix{A};
  auto dfs = [&](auto&& self, int j) -> bool {
    CandidateStream stream(ring, variables, cfg);
    while (auto cand = stream.next()) {
      if (++tried > cfg.max_candidates)
        throw SearchExhaustedError("cyclic sop search exhausted");
      Ideal next = ideal_sum(prefix.back(), {*cand});
      if (krull_dimension(next) != d - j) continue;
      chosen.push_back(*cand);
      prefix.push_back(std::move(next));
      if (j == d || self(self, j + 1)) return true;
      chosen.pop_back();
      prefix.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 1))
    throw SearchExhaustedError("no system of parameters found for the cyclic quotient");
  return chosen;
}

namespace {

/// Stabilized r-th finite difference / r! of a diagonal length function.
long long extract_leading(const std::vector<long long>& L, int r) {
  if (static_cast<int>(L.size()) < r + 3) return -1;  // caller keeps feeding
  std::vector<long long> diff = L;
  for (int k = 0; k < r; ++k)
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
  diff.resize(L.size() - static_cast<std::size_t>(r));
  const std::size_t m = diff.size();
  if (m >= 3 && diff[m - 1] == diff[m - 2] && diff[m - 2] == diff[m - 3]) {
    long long value = diff[m - 1];
    long long f = factorial(r);
    if (value < 0 || value % f != 0)
      throw StabilizationError("length function stabilized on a non-multiplicity value");
    return value / f;
  }
  return -1;
}

std::vector<Polynomial> diagonal_powers(const std::vector<Polynomial>& x, int r, unsigned n) {
  std::vector<Polynomial> gens;
  gens.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) gens.push_back(x[static_cast<std::size_t>(i)].pow(n));
  return gens;
}

}  // namespace

long long multiplicity_cyclic(const std::vector<Polynomial>& x, int r, const Ideal& A,
                              const MultiplicityConfig& cfg) {
  if (r == 0) return local_length(A);
  if (static_cast<int>(x.size()) < r) throw Error("multiplicity: fewer elements than r");
  int dA = krull_dimension(A);
  if (dA < r) return 0;
  if (dA > r)
    throw Error("multiplicity: quotient has dimension " + std::to_string(dA) +
                " > prefix length " + std::to_string(r));
  std::vector<long long> L;
  for (unsigned n = 1; n <= static_cast<unsigned>(cfg.window); ++n) {
    L.push_back(local_length(ideal_sum(A, diagonal_powers(x, r, n))));
    long long e = extract_leading(L, r);
    if (e >= 0) return e;
  }
  throw StabilizationError("multiplicity did not stabilize within the window budget");
}

long long multiplicity_pair(const std::vector<Polynomial>& x, int r, const Ideal& J,
                            const Ideal& K, const MultiplicityConfig& cfg) {
  Ideal JK = ideal_sum(J, K);
  if (r == 0) return local_subquotient_length(JK, K);
  int dK = krull_dimension(K);
  if (dK <= r)
    return multiplicity_cyclic(x, r, K, cfg) - multiplicity_cyclic(x, r, JK, cfg);
  // ambient cyclics are too big; measure the subquotient (J+K)/K directly
  std::vector<long long> L;
  for (unsigned n = 1; n <= static_cast<unsigned>(cfg.window); ++n) {
    std::vector<Polynomial> shifted;
    for (int i = 0; i < r; ++i) {
      Polynomial p = x[static_cast<std::size_t>(i)].pow(n);
      for (const auto& g : JK.groebner()) shifted.push_back(p * g);
    }
    Ideal bottom = ideal_sum(K, shifted);
    L.push_back(local_subquotient_length(JK, bottom));
    long long e = extract_leading(L, r);
    if (e >= 0) return e;
  }
  throw StabilizationError("subquotient multiplicity did not stabilize within the window budget");
}

std::vector<StratumMultiplicity> filtration_multiplicities(const ModulePresentation& M,
                                                           const Filtration& F,
                                                           const ParameterSystem& x,
                                                           const MultiplicityConfig& cfg) {
  std::vector<StratumMultiplicity> out;
  for (const auto& step : F.steps) {
    StratumMultiplicity s;
    s.dim = step.dim;
    s.value = step.dim < 0 ? 0 : multiplicity_pair(x.elements, step.dim, step.J, step.companion, cfg);
    out.push_back(s);
  }
  return out;
}

long long powered_length(const ModulePresentation& M, const ParameterSystem& x,
                         const std::vector<unsigned>& n) {
  if (n.size() != x.elements.size()) throw InputError("power vector length != sop length");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < x.elements.size(); ++i) gens.push_back(x.elements[i].pow(n[i]));
  return local_length(ideal_sum(M.defining_ideal, gens));
}

long long i_value_from(const ModulePresentation& M, const ParameterSystem& x,
                       const std::vector<StratumMultiplicity>& strata,
                       const std::vector<unsigned>& n) {
  long long L = powered_length(M, x, n);
  long long sum = 0;
  for (const auto& s : strata) {
    if (s.dim < 0) continue;
    long long factor = 1;
    for (int j = 0; j < s.dim; ++j) factor *= n[static_cast<std::size_t>(j)];
    sum += factor * s.value;
  }
  return L - sum;
}

long long i_value(const ModulePresentation& M, const Filtration& F, const ParameterSystem& x,
                  const std::vector<unsigned>& n, const MultiplicityConfig& cfg) {
  auto check = is_good_sop(M, F, x);
  if (!check.good)
    throw NotSopError("system of parameters is not good with respect to the filtration (step " +
                      std::to_string(check.violated_step) + ")");
  return i_value_from(M, x, filtration_multiplicities(M, F, x, cfg), n);
}

}  // namespace seqcm
