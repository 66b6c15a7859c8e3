#include "seqcm/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace seqcm {

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::uint32_t e) {
  Monomial m = one(nvars);
  m.exps[i] = e;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

std::uint64_t Monomial::weighted_degree(const RingSpec& ring) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += ring.weights[i] * exps[i];
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] -= b.exps[i];
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = std::max(m.exps[i], b.exps[i]);
  return m;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = std::min(m.exps[i], b.exps[i]);
  return m;
}

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, const RingSpec& ring) {
  std::size_t n = ring.nvars();
  if (ring.elim_tag) {
    if (a.exps[n - 1] != b.exps[n - 1]) return a.exps[n - 1] <=> b.exps[n - 1];
  }
  std::size_t m = ring.elim_tag ? n - 1 : n;
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < m; ++i) {
    da += ring.weights[i] * a.exps[i];
    db += ring.weights[i] * b.exps[i];
  }
  if (da != db) return da <=> db;
  // reverse lex: the variable latest in the order decides, smaller exponent wins
  for (std::size_t i = m; i-- > 0;) {
    if (a.exps[i] != b.exps[i])
      return a.exps[i] < b.exps[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Polynomial f(ring);
  std::uint64_t v = fp::from_int(c, ring->characteristic);
  if (v != 0) f.terms_.push_back({Monomial::one(ring->nvars()), v});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Polynomial f(ring);
  f.terms_.push_back({Monomial::var(ring->nvars(), i), 1});
  return f;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, long long c) {
  Polynomial f(ring);
  std::uint64_t v = fp::from_int(c, ring->characteristic);
  if (v != 0) f.terms_.push_back({std::move(m), v});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const RingSpec& r = *ring;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono, r) == std::strong_ordering::greater;
  });
  Polynomial f(ring);
  for (auto& t : terms) {
    std::uint64_t c = t.coef % r.characteristic;
    if (c == 0) continue;
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coef = fp::add(f.terms_.back().coef, c, r.characteristic);
      if (f.terms_.back().coef == 0) f.terms_.pop_back();
    } else {
      f.terms_.push_back({std::move(t.mono), c});
    }
  }
  return f;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::uint64_t Polynomial::weighted_degree() const {
  // degree-compatible order: the leading term carries the maximal weight
  return terms_.empty() ? 0 : terms_[0].mono.weighted_degree(*ring_);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = terms_[0].mono.weighted_degree(*ring_);
  for (const auto& t : terms_)
    if (t.mono.weighted_degree(*ring_) != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial f(ring_);
  f.terms_ = terms_;
  for (auto& t : f.terms_) t.coef = fp::neg(t.coef, ring_->characteristic);
  return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const RingSpec& r = *ring_;
  Polynomial f(ring_);
  f.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = mono_cmp(terms_[i].mono, o.terms_[j].mono, r);
    if (c == std::strong_ordering::greater) {
      f.terms_.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      f.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint64_t s = fp::add(terms_[i].coef, o.terms_[j].coef, r.characteristic);
      if (s != 0) f.terms_.push_back({terms_[i].mono, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) f.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) f.terms_.push_back(o.terms_[j]);
  return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const RingSpec& r = *ring_;
  auto less = [&](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, r) == std::strong_ordering::less;
  };
  std::map<Monomial, std::uint64_t, decltype(less)> acc(less);
  for (const auto& ta : terms_)
    for (const auto& tb : o.terms_) {
      Monomial m = mono_mul(ta.mono, tb.mono);
      std::uint64_t c = fp::mul(ta.coef, tb.coef, r.characteristic);
      auto [it, fresh] = acc.emplace(std::move(m), c);
      if (!fresh) it->second = fp::add(it->second, c, r.characteristic);
    }
  Polynomial f(ring_);
  f.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) f.terms_.push_back({it->first, it->second});
  return f;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != o.terms_[i].coef || !(terms_[i].mono == o.terms_[i].mono)) return false;
  return true;
}

Polynomial Polynomial::scaled(std::uint64_t c) const {
  const std::uint64_t p = ring_->characteristic;
  c %= p;
  Polynomial f(ring_);
  if (c == 0) return f;
  f.terms_ = terms_;
  for (auto& t : f.terms_) t.coef = fp::mul(t.coef, c, p);
  return f;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint64_t c) const {
  const std::uint64_t p = ring_->characteristic;
  c %= p;
  Polynomial f(ring_);
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({mono_mul(t.mono, m), fp::mul(t.coef, c, p)});
  return f;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(fp::inv(terms_[0].coef, ring_->characteristic));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial acc = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return acc;
}

std::string Polynomial::str() const { return poly_to_string(*this); }

std::string poly_to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const RingSpec& r = *f.ring();
  const std::uint64_t p = r.characteristic;
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    // print small negatives as subtraction for readability
    std::uint64_t c = t.coef;
    bool negative = c > p / 2;
    std::uint64_t mag = negative ? p - c : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    bool printed_coef = false;
    if (mag != 1 || t.mono.is_one()) {
      out << mag;
      printed_coef = true;
    }
    for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      if (printed_coef) out << "*";
      printed_coef = true;
      out << r.variables[i];
      if (t.mono.exps[i] > 1) out << "^" << t.mono.exps[i];
    }
  }
  return out.str();
}

}  // namespace seqcm
