#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqcm/sequences.hpp"

namespace seqcm {

/// Everything a run needs pinned for determinism and caching.
struct RunConfig {
  std::uint64_t prime = 32003;
  unsigned degree_cap = 40;
  unsigned dd_bound = 2;
  int mult_window = 8;
  int sop_box = 2;
  unsigned sop_max_degree = 3;
  long long sop_max_candidates = 200000;
  std::uint64_t seed = 0;
  bool json_output = true;
  std::string cache_dir;
  int jobs = 1;
  unsigned i_table_grid = 0;  // 0: skip the grid
  bool with_dd = false;
  bool allow_ghost_vertices = false;

  SopSearchConfig sop() const {
    return SopSearchConfig{sop_box, sop_max_degree, sop_max_candidates};
  }
  MultiplicityConfig mult() const { return MultiplicityConfig{mult_window}; }
  /// Fields that affect verdicts, for cache keys.
  std::string fingerprint() const;
};

enum class Verdict { False = 0, True = 1, Unknown = 2 };

struct ClassificationReport {
  std::string input_kind;  // "complex" | "module"
  std::string input_key;
  std::optional<SimplicialComplex> complex_input;
  std::vector<std::string> input_ideal;
  int dim = -1;
  std::vector<std::pair<int, std::vector<std::string>>> filtration;  // (dim, reduced basis)
  std::vector<std::string> good_sop;
  std::vector<std::uint64_t> sop_degrees;
  long long length_sq = -1;
  long long expected_sq = -1;
  Verdict cm = Verdict::Unknown;
  Verdict seq_cm = Verdict::Unknown;
  Verdict approx_cm = Verdict::Unknown;
  std::optional<DDCertificate> dd;
  std::vector<std::pair<std::vector<unsigned>, long long>> i_table;
  std::string status = "ok";  // "ok" | "unknown"
  std::vector<std::string> notes;
  double elapsed_ms = 0;  // not part of the stable schema
};

/// l(M/(x^2)M) = e(x^2; M) for the trivial filtration, decided at squares.
bool is_cohen_macaulay(const ModulePresentation& M, const ParameterSystem& x,
                       const RunConfig& cfg = {});

struct SeqCmResult {
  Verdict verdict = Verdict::Unknown;
  ParameterSystem sop;
  std::vector<StratumMultiplicity> strata;
  long long length_sq = -1;
  long long expected_sq = -1;
};

/// Theorem-main route at squares for the dimension filtration; the negative
/// branch is the contrapositive of the universal-vanishing property of good
/// sops on sequentially CM modules.
SeqCmResult is_sequentially_cm(const ModulePresentation& M, const RunConfig& cfg = {});

/// Route (iii): sequentially CM, not CM, two-step filtration of codimension 1.
bool is_approximately_cm(const ModulePresentation& M, const RunConfig& cfg = {});
/// Route (ii) with a supplied witness element.
bool is_approximately_cm(const ModulePresentation& M, const Polynomial& a,
                         const RunConfig& cfg = {});

struct SrFastLedger {
  long long length_sq = -1;
  long long expected_sq = -1;
  std::map<int, long long> stratum_terms;  // step dim -> 2^{d_i} lambda_i prod deg
  bool sequentially_cm = false;
};

/// Closed-form facet-count criterion for Stanley-Reisner rings; x must be a
/// good homogeneous sop.
SrFastLedger sr_fast_check(const SimplicialComplex& c, const ParameterSystem& x,
                           const RunConfig& cfg = {});

ClassificationReport classify_report(const SimplicialComplex& c, const RunConfig& cfg = {});
ClassificationReport classify_report(const ModulePresentation& M, const RunConfig& cfg = {});

std::string report_to_json(const ClassificationReport& r);
std::string report_to_text(const ClassificationReport& r);

}  // namespace seqcm
