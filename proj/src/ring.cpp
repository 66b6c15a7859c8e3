#include "seqcm/ring.hpp"

#include <algorithm>
#include <set>

namespace seqcm {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

RingPtr make_ring(std::vector<std::string> variables, std::uint64_t characteristic,
                  std::vector<std::uint64_t> weights, unsigned degree_cap) {
  if (variables.empty()) throw InputError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw InputError("empty variable name");
    if (!seen.insert(v).second) throw InputError("duplicate variable name: " + v);
  }
  if (!is_prime(characteristic)) throw InputError("characteristic must be prime");
  if (characteristic >= (1ull << 32)) throw InputError("characteristic must be < 2^32");
  if (weights.empty()) weights.assign(variables.size(), 1);
  if (weights.size() != variables.size()) throw InputError("weight count != variable count");
  for (auto w : weights)
    if (w < 1) throw InputError("weights must be >= 1");
  auto r = std::make_shared<RingSpec>();
  r->variables = std::move(variables);
  r->characteristic = characteristic;
  r->weights = std::move(weights);
  r->degree_cap = degree_cap;
  return r;
}

RingPtr extend_with_tag(const RingPtr& ring) {
  auto r = std::make_shared<RingSpec>(*ring);
  r->variables.push_back("#t");  // reserved: the parser never accepts '#'
  r->weights.push_back(1);
  r->elim_tag = true;
  return r;
}

namespace fp {

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p)
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw Error("not invertible mod p");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t from_int(long long c, std::uint64_t p) {
  long long m = c % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<std::uint64_t>(m);
}

}  // namespace fp
}  // namespace seqcm
