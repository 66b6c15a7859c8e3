#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "seqcm/ring.hpp"

namespace seqcm {

/// Exponent vector; length always equals the ring's variable count.
struct Monomial {
  std::vector<std::uint32_t> exps;

  static Monomial one(std::size_t nvars) { return Monomial{std::vector<std::uint32_t>(nvars, 0)}; }
  static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

  bool is_one() const;
  unsigned total_degree() const;
  std::uint64_t weighted_degree(const RingSpec& ring) const;

  bool operator==(const Monomial&) const = default;
};

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

/// Term-order comparison: weighted degree first, ties broken reverse-
/// lexicographically. In elimination rings the tag exponent dominates.
std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, const RingSpec& ring);

struct Term {
  Monomial mono;
  std::uint64_t coef;  // in [1, p)
};

/// Immutable sparse polynomial in canonical form: terms strictly descending in
/// the ring's term order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;  // detached zero; only for containers
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, Monomial m, long long c = 1);
  /// Normalizes arbitrary term lists (sorts, merges, drops zeros).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const;       // max over terms, 0 for the zero polynomial
  std::uint64_t weighted_degree() const;
  bool is_homogeneous() const;         // all terms share one weighted degree

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(std::uint64_t c) const;
  Polynomial times_term(const Monomial& m, std::uint64_t c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned k) const;

  std::string str() const;

 private:
  friend class PolyBuilder;
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string poly_to_string(const Polynomial& f);

}  // namespace seqcm
