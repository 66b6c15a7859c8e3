#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqcm/filtration.hpp"

namespace seqcm {

/// Bounded dd-sequence evidence: colon checks for every power tuple up to the
/// bound plus an exact product-polynomial fit of the length function. Never a
/// proof of unconditional dd-ness.
struct DDCertificate {
  ParameterSystem sequence;
  unsigned bound = 2;
  bool colon_checks_passed = false;
  std::vector<long long> fit_coefficients;  // a_0 .. a_d
  bool fit_residual_zero = false;
  std::string verification_grid;
  bool passed() const { return colon_checks_passed && fit_residual_zero; }
};

/// Huneke's condition on M = R/I:
/// ((I + (x_1..x_{i-1})) : x_j) = ((I + (x_1..x_{i-1})) : x_i x_j) for j >= i.
bool is_d_sequence(const ModulePresentation& M, const std::vector<Polynomial>& xs);

/// Same condition against an arbitrary base ideal (the quotient module form).
bool is_d_sequence_mod(const Ideal& A, const std::vector<Polynomial>& xs);

struct DDFitReport {
  std::vector<long long> coefficients;  // a_0 .. a_d solved on the corner grid
  bool exact = false;                   // residuals vanish and coefficients are admissible
  std::vector<std::vector<unsigned>> failed_tuples;
  /// Lemma-style cross-check of each a_i against the colon-module
  /// multiplicity; only attempted when the fit is exact.
  std::optional<bool> coefficients_match_colon_formula;
};

/// Solves l(M/x(n)M) = sum a_i n_1..n_i on the {1,2} corners, verifies the fit
/// on {1..grid_max}^d, and cross-checks coefficients when requested.
DDFitReport dd_polynomial_fit(const ModulePresentation& M, const ParameterSystem& x,
                              unsigned grid_max = 3, bool cross_check = false,
                              const MultiplicityConfig& cfg = {});

/// Definition check bounded at N: for every tuple with entries <= N and every
/// i, the powered prefix is a d-sequence of M modulo the powered tail.
DDCertificate is_dd_sequence_bounded(const ModulePresentation& M, const ParameterSystem& x,
                                     unsigned bound = 2, const MultiplicityConfig& cfg = {});

}  // namespace seqcm
