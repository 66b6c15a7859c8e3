#include "seqcm/classify.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seqcm {

std::string RunConfig::fingerprint() const {
  std::ostringstream out;
  out << "p" << prime << ".cap" << degree_cap << ".dd" << dd_bound << ".win" << mult_window
      << ".box" << sop_box << ".deg" << sop_max_degree << ".cand" << sop_max_candidates << ".seed"
      << seed << ".grid" << i_table_grid << ".wdd" << (with_dd ? 1 : 0);
  return out.str();
}

namespace {

std::vector<unsigned> squares(std::size_t d) { return std::vector<unsigned>(d, 2); }

struct CoreOutcome {
  Filtration F;
  ParameterSystem x;
  std::vector<StratumMultiplicity> strata;
  long long length_sq = -1;
  long long expected_sq = -1;
  bool cm = false;
  bool seq_cm = false;
};

long long expected_at(const std::vector<StratumMultiplicity>& strata,
                      const std::vector<unsigned>& n) {
  long long sum = 0;
  for (const auto& s : strata) {
    if (s.dim < 0) continue;
    long long factor = 1;
    for (int j = 0; j < s.dim; ++j) factor *= n[static_cast<std::size_t>(j)];
    sum += factor * s.value;
  }
  return sum;
}

CoreOutcome classify_core(const ModulePresentation& M, const RunConfig& cfg) {
  CoreOutcome out;
  out.F = dimension_filtration(M);
  out.x = find_good_sop(M, out.F, cfg.sop());
  out.strata = filtration_multiplicities(M, out.F, out.x, cfg.mult());
  auto sq = squares(static_cast<std::size_t>(M.dim));
  out.length_sq = powered_length(M, out.x, sq);
  out.expected_sq = expected_at(out.strata, sq);
  out.seq_cm = out.length_sq == out.expected_sq;
  long long top = out.strata.back().value;
  out.cm = out.length_sq == (1ll << M.dim) * top;
  return out;
}

bool approx_shape(const Filtration& F, int d) {
  // 0 = D_0 subset D_1 subset D_2 = M with dim D_1 = d - 1
  return F.steps.size() == 3 && F.steps[0].dim == -1 && F.steps[1].dim == d - 1 &&
         F.steps[2].dim == d;
}

}  // namespace

bool is_cohen_macaulay(const ModulePresentation& M, const ParameterSystem& x,
                       const RunConfig& cfg) {
  Filtration F0 = trivial_filtration(M);
  return i_value(M, F0, x, squares(static_cast<std::size_t>(M.dim)), cfg.mult()) == 0;
}

SeqCmResult is_sequentially_cm(const ModulePresentation& M, const RunConfig& cfg) {
  SeqCmResult res;
  Filtration F = dimension_filtration(M);
  try {
    res.sop = find_good_sop(M, F, cfg.sop());
  } catch (const SearchExhaustedError&) {
    res.verdict = Verdict::Unknown;
    return res;
  }
  res.strata = filtration_multiplicities(M, F, res.sop, cfg.mult());
  auto sq = squares(static_cast<std::size_t>(M.dim));
  res.length_sq = powered_length(M, res.sop, sq);
  res.expected_sq = expected_at(res.strata, sq);
  res.verdict = res.length_sq == res.expected_sq ? Verdict::True : Verdict::False;
  return res;
}

bool is_approximately_cm(const ModulePresentation& M, const RunConfig& cfg) {
  CoreOutcome core = classify_core(M, cfg);
  return core.seq_cm && !core.cm && approx_shape(core.F, M.dim);
}

bool is_approximately_cm(const ModulePresentation& M, const Polynomial& a, const RunConfig& cfg) {
  require_same_ring(M.ring, a.ring());
  if (a.is_zero()) throw InputError("witness element must be nonzero");
  CoreOutcome core = classify_core(M, cfg);
  if (core.cm) return false;  // approximately CM presumes not CM
  const Ideal& I = M.defining_ideal;
  if (!ideal_colon(I, a).same_ideal(ideal_colon(I, a * a))) return false;
  Ideal Q = ideal_sum(I, {a * a});
  if (krull_dimension(Q) != M.dim - 1) return false;
  // Cohen-Macaulayness of the cyclic quotient R/(I + a^2)
  std::vector<Polynomial> y = find_sop_cyclic(Q, cfg.sop());
  std::vector<Polynomial> ysq;
  for (const auto& e : y) ysq.push_back(e * e);
  long long len = local_length(ideal_sum(Q, ysq));
  long long e = multiplicity_cyclic(y, M.dim - 1, Q, cfg.mult());
  return len == (1ll << (M.dim - 1)) * e;
}

SrFastLedger sr_fast_check(const SimplicialComplex& c, const ParameterSystem& x,
                           const RunConfig& cfg) {
  if (x.elements.empty()) throw InputError("empty parameter system");
  const RingPtr ring = x.elements.front().ring();
  ModulePresentation M = ModulePresentation::from_complex(c, ring);
  for (const auto& e : x.elements)
    if (!e.is_homogeneous()) throw NotSopError("fast path requires a homogeneous sop");
  Filtration F = dimension_filtration(M);
  auto good = is_good_sop(M, F, x);
  if (!good.good)
    throw NotSopError("fast path requires a good sop (violated at step " +
                      std::to_string(good.violated_step) + ")");
  SrFastLedger ledger;
  ledger.length_sq = powered_length(M, x, squares(static_cast<std::size_t>(M.dim)));
  LambdaProfile lambda = lambda_profile(c);
  long long expected = 0;
  for (const auto& step : F.steps) {
    if (step.dim < 1) continue;
    long long term = 1ll << step.dim;
    term *= lambda.at(step.dim - 1);
    for (int j = 0; j < step.dim; ++j)
      term *= static_cast<long long>(x.degrees[static_cast<std::size_t>(j)]);
    ledger.stratum_terms[step.dim] = term;
    expected += term;
  }
  ledger.expected_sq = expected;
  ledger.sequentially_cm = ledger.length_sq == ledger.expected_sq;
  return ledger;
}

namespace {

void fill_core(ClassificationReport& rep, const ModulePresentation& M, const CoreOutcome& core,
               const RunConfig& cfg) {
  rep.dim = M.dim;
  for (const auto& step : core.F.steps) {
    std::vector<std::string> gens;
    for (const auto& g : step.J.groebner()) gens.push_back(poly_to_string(g));
    rep.filtration.emplace_back(step.dim, std::move(gens));
  }
  for (const auto& e : core.x.elements) rep.good_sop.push_back(poly_to_string(e));
  rep.sop_degrees = core.x.degrees;
  rep.length_sq = core.length_sq;
  rep.expected_sq = core.expected_sq;
  rep.cm = core.cm ? Verdict::True : Verdict::False;
  rep.seq_cm = core.seq_cm ? Verdict::True : Verdict::False;
  rep.approx_cm = (core.seq_cm && !core.cm && approx_shape(core.F, M.dim)) ? Verdict::True
                                                                           : Verdict::False;
  if (cfg.with_dd) {
    DDCertificate cert =
        is_dd_sequence_bounded(M, core.x, cfg.dd_bound, cfg.mult());
    rep.dd = std::move(cert);
  }
  if (cfg.i_table_grid > 0) {
    const unsigned g = cfg.i_table_grid;
    const std::size_t d = core.x.elements.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= g;
    std::vector<std::vector<unsigned>> tuples(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<unsigned> n(d);
      std::size_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        n[i] = 1 + static_cast<unsigned>(t % g);
        t /= g;
      }
      tuples[idx] = std::move(n);
    }
    std::vector<long long> values(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.jobs > 1)
#endif
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
      values[static_cast<std::size_t>(idx)] =
          i_value_from(M, core.x, core.strata, tuples[static_cast<std::size_t>(idx)]);
    for (std::size_t idx = 0; idx < total; ++idx)
      rep.i_table.emplace_back(tuples[idx], values[idx]);
  }
}

void fill_module_input(ClassificationReport& rep, const ModulePresentation& M) {
  rep.input_kind = "module";
  for (const auto& g : M.defining_ideal.generators()) rep.input_ideal.push_back(poly_to_string(g));
}

}  // namespace

ClassificationReport classify_report(const ModulePresentation& M, const RunConfig& cfg) {
  ClassificationReport rep;
  auto t0 = std::chrono::steady_clock::now();
  fill_module_input(rep, M);
  if (cfg.prime == 2 || cfg.prime == 3)
    rep.notes.push_back("characteristic " + std::to_string(cfg.prime) + " is untested territory");
  try {
    CoreOutcome core = classify_core(M, cfg);
    fill_core(rep, M, core, cfg);
  } catch (const Error& e) {
    rep.status = "unknown";
    rep.notes.push_back(e.what());
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ClassificationReport classify_report(const SimplicialComplex& c, const RunConfig& cfg) {
  ClassificationReport rep;
  auto t0 = std::chrono::steady_clock::now();
  rep.input_kind = "complex";
  rep.input_key = canonical_key(c);
  rep.complex_input = c;
  if (cfg.prime == 2 || cfg.prime == 3)
    rep.notes.push_back("characteristic " + std::to_string(cfg.prime) + " is untested territory");
  try {
    std::vector<std::string> vars;
    for (int v = 1; v <= c.vertices; ++v) vars.push_back("X" + std::to_string(v));
    RingPtr ring = make_ring(vars, cfg.prime, {}, cfg.degree_cap);
    ModulePresentation M = ModulePresentation::from_complex(c, ring);
    for (const auto& g : M.defining_ideal.generators())
      rep.input_ideal.push_back(poly_to_string(g));
    CoreOutcome core = classify_core(M, cfg);
    fill_core(rep, M, core, cfg);
    // the closed-form facet criterion must agree with the general route
    SrFastLedger fast = sr_fast_check(c, core.x, cfg);
    if (fast.sequentially_cm != core.seq_cm) {
      rep.status = "unknown";
      rep.cm = rep.seq_cm = rep.approx_cm = Verdict::Unknown;
      rep.notes.push_back("internal disagreement between the facet-count criterion and the "
                          "filtration route");
    }
  } catch (const Error& e) {
    rep.status = "unknown";
    rep.notes.push_back(e.what());
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

nlohmann::ordered_json verdict_json(Verdict v) {
  switch (v) {
    case Verdict::True:
      return true;
    case Verdict::False:
      return false;
    default:
      return nullptr;
  }
}

}  // namespace

std::string report_to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json input;
  input["type"] = r.input_kind;
  if (r.complex_input) {
    input["vertices"] = r.complex_input->vertices;
    input["facets"] = r.complex_input->facets;
  }
  if (!r.input_ideal.empty()) input["ideal"] = r.input_ideal;
  j["input"] = input;
  j["dim"] = r.dim;
  j["filtration"] = nlohmann::ordered_json::array();
  for (const auto& [dim, gens] : r.filtration) {
    nlohmann::ordered_json step;
    step["dim"] = dim;
    step["ideal"] = gens;
    j["filtration"].push_back(step);
  }
  j["good_sop"] = r.good_sop;
  j["length_sq"] = r.length_sq;
  j["expected_sq"] = r.expected_sq;
  j["verdicts"] = {{"cm", verdict_json(r.cm)},
                   {"seq_cm", verdict_json(r.seq_cm)},
                   {"approx_cm", verdict_json(r.approx_cm)}};
  if (r.dd) {
    nlohmann::ordered_json d;
    d["sequence"] = nlohmann::ordered_json::array();
    for (const auto& e : r.dd->sequence.elements) d["sequence"].push_back(poly_to_string(e));
    d["bound"] = r.dd->bound;
    d["colon_checks_passed"] = r.dd->colon_checks_passed;
    d["fit_coefficients"] = r.dd->fit_coefficients;
    d["fit_residual_zero"] = r.dd->fit_residual_zero;
    d["verification_grid"] = r.dd->verification_grid;
    j["dd_certificate"] = d;
  } else {
    j["dd_certificate"] = nullptr;
  }
  j["i_table"] = nlohmann::ordered_json::array();
  for (const auto& [n, v] : r.i_table) {
    nlohmann::ordered_json row;
    row["n"] = n;
    row["value"] = v;
    j["i_table"].push_back(row);
  }
  j["status"] = r.status;
  j["notes"] = r.notes;
  return j.dump(2);
}

namespace {

const char* verdict_text(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "yes";
    case Verdict::False:
      return "no";
    default:
      return "unknown";
  }
}

}  // namespace

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "input: " << (r.input_key.empty() ? r.input_kind : r.input_key) << "\n";
  if (!r.input_ideal.empty()) {
    out << "ideal:";
    for (const auto& g : r.input_ideal) out << " " << g << ";";
    out << "\n";
  }
  out << "dim: " << r.dim << "\n";
  out << "filtration dims:";
  for (const auto& [dim, gens] : r.filtration) out << " " << dim;
  out << "\n";
  out << "good sop:";
  for (const auto& e : r.good_sop) out << " " << e << ";";
  out << "\n";
  out << "length at squares: " << r.length_sq << "  expected: " << r.expected_sq << "\n";
  out << "cohen_macaulay: " << verdict_text(r.cm) << "\n";
  out << "sequentially_cm: " << verdict_text(r.seq_cm) << "\n";
  out << "approximately_cm: " << verdict_text(r.approx_cm) << "\n";
  if (r.dd) {
    out << "dd certificate: bound " << r.dd->bound << ", colon checks "
        << (r.dd->colon_checks_passed ? "pass" : "fail") << ", fit";
    for (auto c : r.dd->fit_coefficients) out << " " << c;
    out << (r.dd->fit_residual_zero ? " (exact)" : " (not exact)") << "\n";
  }
  for (const auto& [n, v] : r.i_table) {
    out << "I(";
    for (std::size_t i = 0; i < n.size(); ++i) out << (i ? "," : "") << n[i];
    out << ") = " << v << "\n";
  }
  out << "status: " << r.status << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  out << "elapsed_ms: " << r.elapsed_ms << "\n";
  return out.str();
}

}  // namespace seqcm
