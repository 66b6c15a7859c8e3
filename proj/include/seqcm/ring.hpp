#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "seqcm/error.hpp"

namespace seqcm {

/// Ambient polynomial ring over a prime field: variable names, characteristic,
/// positive weight vector and the term order (degree-reverse-lexicographic
/// refined by the weights). When `elim_tag` is set the last variable forms a
/// leading elimination block; such rings are internal to intersection, colon
/// and saturation computations and never user-visible.
struct RingSpec {
  std::vector<std::string> variables;
  std::uint64_t characteristic = 32003;
  std::vector<std::uint64_t> weights;
  unsigned degree_cap = 40;
  bool elim_tag = false;

  std::size_t nvars() const { return variables.size(); }
  bool operator==(const RingSpec&) const = default;
};

using RingPtr = std::shared_ptr<const RingSpec>;

bool is_prime(std::uint64_t p);

/// Validates and builds a ring. Empty `weights` means all-ones.
RingPtr make_ring(std::vector<std::string> variables, std::uint64_t characteristic = 32003,
                  std::vector<std::uint64_t> weights = {}, unsigned degree_cap = 40);

/// Internal: same ring with the reserved tag variable appended (weight 1).
RingPtr extend_with_tag(const RingPtr& ring);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatchError();
}

// Arithmetic in F_p. Residues are stored in [0, p); p < 2^32 keeps products
// inside 64 bits.
namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// Reduces a signed integer into [0, p).
std::uint64_t from_int(long long c, std::uint64_t p);

}  // namespace fp
}  // namespace seqcm
