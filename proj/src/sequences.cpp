#include "seqcm/sequences.hpp"

#include <sstream>

namespace seqcm {

bool is_d_sequence_mod(const Ideal& A, const std::vector<Polynomial>& xs) {
  const std::size_t s = xs.size();
  for (const auto& x : xs)
    if (x.is_zero()) throw InputError("d-sequence elements must be nonzero");
  for (std::size_t i = 1; i <= s; ++i) {
    Ideal prefix = A;
    if (i > 1)
      prefix = ideal_sum(A, std::vector<Polynomial>(xs.begin(),
                                                    xs.begin() + static_cast<std::ptrdiff_t>(i - 1)));
    for (std::size_t j = i; j <= s; ++j) {
      Ideal lhs = ideal_colon(prefix, xs[j - 1]);
      Ideal rhs = ideal_colon(prefix, xs[i - 1] * xs[j - 1]);
      if (!lhs.same_ideal(rhs)) return false;
    }
  }
  return true;
}

bool is_d_sequence(const ModulePresentation& M, const std::vector<Polynomial>& xs) {
  return is_d_sequence_mod(M.defining_ideal, xs);
}

namespace {

std::vector<unsigned> corner(std::size_t d, std::size_t two_at /* d = none */) {
  std::vector<unsigned> n(d, 1);
  if (two_at < d) n[two_at] = 2;
  return n;
}

}  // namespace

DDFitReport dd_polynomial_fit(const ModulePresentation& M, const ParameterSystem& x,
                              unsigned grid_max, bool cross_check,
                              const MultiplicityConfig& cfg) {
  const std::size_t d = x.elements.size();
  if (!is_system_of_parameters(M, x.elements))
    throw NotSopError("dd fit requires a system of parameters");

  DDFitReport report;
  // corner solve: sum_{k >= i} a_k = L(2 at i) - L(1,..,1), so a_i telescopes
  const long long L1 = powered_length(M, x, corner(d, d));
  std::vector<long long> tail_sums(d + 1, 0);  // tail_sums[i] = sum_{k >= i+1} a_k
  std::vector<long long> a(d + 1, 0);
  for (std::size_t i = d; i >= 1; --i) {
    long long Li = powered_length(M, x, corner(d, i - 1));
    long long sum_from_i = Li - L1;  // a_i + a_{i+1} + ... + a_d
    a[i] = sum_from_i - tail_sums[i];
    tail_sums[i - 1] = sum_from_i;
  }
  a[0] = L1 - tail_sums[0];
  report.coefficients = a;

  bool admissible = true;
  for (long long c : a)
    if (c < 0) admissible = false;

  // residual check over the full grid
  std::vector<unsigned> n(d, 1);
  bool all_zero = true;
  while (true) {
    long long expected = 0, prod = 1;
    expected += a[0];
    for (std::size_t i = 1; i <= d; ++i) {
      prod *= n[i - 1];
      expected += a[i] * prod;
    }
    if (powered_length(M, x, n) != expected) {
      all_zero = false;
      report.failed_tuples.push_back(n);
    }
    std::size_t pos = 0;
    while (pos < d && n[pos] == grid_max) n[pos++] = 1;
    if (pos == d) break;
    ++n[pos];
  }
  report.exact = all_zero && admissible;

  if (cross_check && report.exact) {
    bool match = true;
    for (std::size_t i = 0; i <= d && match; ++i) {
      long long e;
      if (i == d) {
        e = multiplicity_cyclic(x.elements, static_cast<int>(d), M.defining_ideal, cfg);
      } else {
        // a_i = e(x_1..x_i; (x_{i+2}..x_d)M : x_{i+1} / (x_{i+2}..x_d)M)
        std::vector<Polynomial> tail(x.elements.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                     x.elements.end());
        Ideal A = ideal_sum(M.defining_ideal, tail);
        Ideal B = ideal_colon(A, x.elements[i]);
        e = multiplicity_pair(x.elements, static_cast<int>(i), B, A, cfg);
      }
      if (e != a[i]) match = false;
    }
    report.coefficients_match_colon_formula = match;
  }
  return report;
}

DDCertificate is_dd_sequence_bounded(const ModulePresentation& M, const ParameterSystem& x,
                                     unsigned bound, const MultiplicityConfig& cfg) {
  const std::size_t s = x.elements.size();
  DDCertificate cert;
  cert.sequence = x;
  cert.bound = bound;

  bool colon_ok = true;
  std::vector<unsigned> n(s, 1);
  while (colon_ok) {
    for (std::size_t i = 1; i <= s && colon_ok; ++i) {
      std::vector<Polynomial> tail_powers;
      for (std::size_t k = i; k < s; ++k) tail_powers.push_back(x.elements[k].pow(n[k]));
      Ideal A = ideal_sum(M.defining_ideal, tail_powers);
      std::vector<Polynomial> prefix_powers;
      for (std::size_t k = 0; k < i; ++k) prefix_powers.push_back(x.elements[k].pow(n[k]));
      if (!is_d_sequence_mod(A, prefix_powers)) colon_ok = false;
    }
    std::size_t pos = 0;
    while (pos < s && n[pos] == bound) n[pos++] = 1;
    if (pos == s) break;
    ++n[pos];
  }
  cert.colon_checks_passed = colon_ok;

  DDFitReport fit = dd_polynomial_fit(M, x, 3, false, cfg);
  cert.fit_coefficients = fit.coefficients;
  cert.fit_residual_zero = fit.exact;
  std::ostringstream grid;
  grid << "{1,2,3}^" << s;
  cert.verification_grid = grid.str();
  return cert;
}

}  // namespace seqcm
