#include "seqcm/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace seqcm {

namespace {

bool mono_less(const Monomial& a, const Monomial& b, const RingSpec& r) {
  return mono_cmp(a, b, r) == std::strong_ordering::less;
}

Polynomial spolynomial(const Polynomial& f, const Polynomial& g) {
  const RingSpec& r = *f.ring();
  const std::uint64_t p = r.characteristic;
  const Monomial l = mono_lcm(f.leading().mono, g.leading().mono);
  Polynomial a = f.times_term(mono_div(l, f.leading().mono), fp::inv(f.leading().coef, p));
  Polynomial b = g.times_term(mono_div(l, g.leading().mono), fp::inv(g.leading().coef, p));
  return a - b;
}

void check_degree_cap(const Polynomial& f) {
  const RingSpec& r = *f.ring();
  if (f.total_degree() > r.degree_cap)
    throw DegreeCapError("basis element of total degree " + std::to_string(f.total_degree()) +
                         " exceeds the degree cap " + std::to_string(r.degree_cap));
}

/// Minimalize + tail-reduce + normalize + sort: the unique reduced basis.
std::vector<Polynomial> reduce_basis(const RingPtr& ring, std::vector<Polynomial> basis) {
  const RingSpec& r = *ring;
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const Polynomial& f) { return f.is_zero(); }),
              basis.end());
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_less(a.leading().mono, b.leading().mono, r);
  });
  std::vector<Polynomial> minimal;
  for (auto& f : basis) {
    bool redundant = false;
    for (const auto& g : minimal)
      if (divides(g.leading().mono, f.leading().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(f));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial red = normal_form(minimal[i], others);
      if (!(red == minimal[i])) {
        minimal[i] = std::move(red);
        changed = true;
      }
    }
    minimal.erase(std::remove_if(minimal.begin(), minimal.end(),
                                 [](const Polynomial& f) { return f.is_zero(); }),
                  minimal.end());
  }
  for (auto& f : minimal) f = f.monic();
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_less(a.leading().mono, b.leading().mono, r);
  });
  return minimal;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const RingPtr& ring = f.ring();
  const RingSpec& r = *ring;
  const std::uint64_t p = r.characteristic;
  Polynomial h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading().mono, lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      std::uint64_t c = fp::mul(lt.coef, fp::inv(divisor->leading().coef, p), p);
      h = h - divisor->times_term(mono_div(lt.mono, divisor->leading().mono), c);
    } else {
      remainder.push_back(lt);
      h = h - Polynomial::from_terms(ring, {lt});
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  return normal_form(f, I.groebner());
}

std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  const RingSpec& r = *ring;
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) return {};

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      pairs.push_back({i, k, mono_lcm(basis[i].leading().mono, basis[k].leading().mono)});
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  while (!pairs.empty()) {
    // normal selection: smallest lcm first, index pair as tie break
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      auto c = mono_cmp(pairs[k].lcm, pairs[best].lcm, r);
      if (c == std::strong_ordering::less ||
          (c == std::strong_ordering::equal &&
           std::tie(pairs[k].i, pairs[k].j) < std::tie(pairs[best].i, pairs[best].j)))
        best = k;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    const Monomial& li = basis[pr.i].leading().mono;
    const Monomial& lj = basis[pr.j].leading().mono;
    if (pr.lcm == mono_mul(li, lj)) continue;  // coprime leading terms
    Polynomial red = normal_form(spolynomial(basis[pr.i], basis[pr.j]), basis);
    if (red.is_zero()) continue;
    check_degree_cap(red);
    basis.push_back(red.monic());
    push_pairs(basis.size() - 1);
  }
  auto reduced = reduce_basis(ring, std::move(basis));
  // a unit collapses everything
  for (const auto& f : reduced)
    if (!f.is_zero() && f.leading().mono.is_one())
      return {Polynomial::constant(ring, 1)};
  return reduced;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : data_(std::make_shared<Data>()) {
  data_->ring = std::move(ring);
  for (const auto& g : generators)
    if (!g.is_zero()) require_same_ring(data_->ring, g.ring());
  data_->gens = std::move(generators);
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::call_once(data_->gb_once, [&] { data_->gb = buchberger(data_->ring, data_->gens); });
  return *data_->gb;
}

int Ideal::dimension() const {
  std::call_once(data_->dim_once, [&] {
    const auto& gb = groebner();
    const std::size_t n = data_->ring->nvars();
    if (!gb.empty() && gb[0].leading().mono.is_one()) {
      data_->dim = kDimUnitIdeal;
      return;
    }
    // dimension of the monomial leading-term ideal: maximal variable subset S
    // such that no leading support is contained in S
    std::vector<std::uint32_t> supports;
    supports.reserve(gb.size());
    for (const auto& g : gb) {
      std::uint32_t s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (g.leading().mono.exps[i] > 0) s |= (1u << i);
      supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
      bool independent = true;
      for (auto s : supports)
        if ((s & ~sub) == 0) {
          independent = false;
          break;
        }
      if (independent) best = std::max(best, static_cast<int>(std::popcount(sub)));
    }
    data_->dim = best;
  });
  return *data_->dim;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, *this).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring(), other.ring());
  for (const auto& g : other.generators())
    if (!g.is_zero() && !contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return !gb.empty() && gb[0].leading().mono.is_one();
}

bool Ideal::is_zero() const { return groebner().empty(); }

bool Ideal::same_ideal(const Ideal& other) const {
  require_same_ring(ring(), other.ring());
  const auto& a = groebner();
  const auto& b = other.groebner();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

Ideal zero_ideal(const RingPtr& ring) { return Ideal(ring, {}); }

Ideal unit_ideal(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, gens);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  return ideal_sum(I, J.generators());
}

Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = I.generators();
  all.insert(all.end(), gens.begin(), gens.end());
  return Ideal(I.ring(), std::move(all));
}

namespace {

/// Exact quotient f / g (asserts g | f elementwise through division).
Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  const RingPtr& ring = f.ring();
  const std::uint64_t p = ring->characteristic;
  Polynomial h = f;
  std::vector<Term> quotient;
  const std::uint64_t glc_inv = fp::inv(g.leading().coef, p);
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    if (!divides(g.leading().mono, lt.mono))
      throw Error("internal: inexact polynomial division");
    Term q{mono_div(lt.mono, g.leading().mono), fp::mul(lt.coef, glc_inv, p)};
    h = h - g.times_term(q.mono, q.coef);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

/// Migrates a polynomial into the tag-extended ring, optionally multiplied by
/// tag^k.
Polynomial lift_to_tag_ring(const RingPtr& ext, const Polynomial& f, std::uint32_t tag_exp) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m;
    m.exps = t.mono.exps;
    m.exps.push_back(tag_exp);
    terms.push_back({std::move(m), t.coef});
  }
  return Polynomial::from_terms(ext, std::move(terms));
}

/// Drops the tag coordinate; caller guarantees tag-free terms.
Polynomial project_from_tag_ring(const RingPtr& base, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m;
    m.exps.assign(t.mono.exps.begin(), t.mono.exps.end() - 1);
    terms.push_back({std::move(m), t.coef});
  }
  return Polynomial::from_terms(base, std::move(terms));
}

bool tag_free(const Polynomial& f) {
  for (const auto& t : f.terms())
    if (t.mono.exps.back() != 0) return false;
  return true;
}

std::vector<Polynomial> eliminate_tag(const RingPtr& base, const RingPtr& ext,
                                      const std::vector<Polynomial>& gens) {
  auto gb = buchberger(ext, gens);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    if (g.leading().mono.exps.back() == 0) {
      // block order: a tag-free leading term forces a tag-free tail
      if (!tag_free(g)) throw Error("internal: elimination produced a mixed element");
      kept.push_back(project_from_tag_ring(base, g));
    }
  }
  return kept;
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  if (I.is_zero() || J.is_zero()) return zero_ideal(I.ring());
  const RingPtr base = I.ring();
  const RingPtr ext = extend_with_tag(base);
  std::vector<Polynomial> gens;
  for (const auto& f : I.groebner()) gens.push_back(lift_to_tag_ring(ext, f, 1));
  for (const auto& g : J.groebner()) {
    // (1 - t) * g
    Polynomial lifted = lift_to_tag_ring(ext, g, 0);
    gens.push_back(lifted - lift_to_tag_ring(ext, g, 1));
  }
  return Ideal(base, eliminate_tag(base, ext, gens));
}

Ideal ideal_colon(const Ideal& I, const Polynomial& g) {
  require_same_ring(I.ring(), g.ring());
  if (g.is_zero()) throw InputError("colon by the zero element");
  if (I.is_unit()) return I;
  Ideal gI(I.ring(), {g});
  Ideal meet = ideal_intersect(I, gI);
  std::vector<Polynomial> quot;
  for (const auto& f : meet.groebner()) quot.push_back(divide_exact(f, g));
  return Ideal(I.ring(), std::move(quot));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  bool any = false;
  Ideal acc;
  for (const auto& g : J.generators()) {
    if (g.is_zero()) continue;
    Ideal q = ideal_colon(I, g);
    acc = any ? ideal_intersect(acc, q) : q;
    any = true;
  }
  if (!any) return unit_ideal(I.ring());  // (I : (0)) = (1)
  return acc;
}

Ideal saturation(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (int round = 0; round < 256; ++round) {
    Ideal next = ideal_colon(cur, J);
    if (next.same_ideal(cur)) return cur;
    cur = next;
  }
  throw StabilizationError("saturation did not stabilize");
}

int krull_dimension(const Ideal& I) { return I.dimension(); }

long long vector_space_dimension(const Ideal& I) {
  const auto& gb = I.groebner();
  const RingSpec& r = *I.ring();
  const std::size_t n = r.nvars();
  if (!gb.empty() && gb[0].leading().mono.is_one()) return 0;  // unit ideal
  // Artinian iff every variable appears as a pure power among the leading terms
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : gb) {
    const Monomial& m = g.leading().mono;
    int support = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (m.exps[i] > 0) {
        if (support >= 0) {
          support = -2;
          break;
        }
        support = static_cast<int>(i);
      }
    if (support >= 0) bound[static_cast<std::size_t>(support)] =
        std::max(bound[static_cast<std::size_t>(support)], m.exps[static_cast<std::size_t>(support)]);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] == 0)
      throw NotArtinianError("quotient is not Artinian: no pure power of " + r.variables[i] +
                             " among the leading terms");
  unsigned long long box = 1;
  for (auto b : bound) {
    box *= b;
    if (box > 50'000'000ull) throw Error("standard monomial box too large");
  }
  std::vector<Monomial> lead;
  for (const auto& g : gb) lead.push_back(g.leading().mono);
  // walk the box and count monomials outside the leading-term ideal
  Monomial cur = Monomial::one(n);
  long long count = 0;
  while (true) {
    bool standard = true;
    for (const auto& m : lead)
      if (divides(m, cur)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    std::size_t pos = 0;
    while (pos < n) {
      if (++cur.exps[pos] < bound[pos]) break;
      cur.exps[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return count;
}

bool is_origin_supported(const Ideal& I) {
  long long s = vector_space_dimension(I);
  if (s == 0) return true;
  const RingPtr& ring = I.ring();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Polynomial power = Polynomial::monomial(
        ring, Monomial::var(ring->nvars(), i, static_cast<std::uint32_t>(s)), 1);
    if (!normal_form(power, I).is_zero()) return false;
  }
  return true;
}

long long artinian_length(const Ideal& I) {
  long long s = vector_space_dimension(I);
  if (s > 0 && !is_origin_supported(I))
    throw NotOriginSupportedError(
        "quotient has support away from the origin; affine and local lengths differ");
  return s;
}

namespace {

/// I : f^infinity in one basis computation.
Ideal saturate_by_element(const Ideal& I, const Polynomial& f) {
  const RingPtr base = I.ring();
  const RingPtr ext = extend_with_tag(base);
  std::vector<Polynomial> gens;
  for (const auto& g : I.groebner()) gens.push_back(lift_to_tag_ring(ext, g, 0));
  // 1 - t*f
  Polynomial tf = lift_to_tag_ring(ext, f, 1);
  gens.push_back(Polynomial::constant(ext, 1) - tf);
  return Ideal(base, eliminate_tag(base, ext, gens));
}

}  // namespace

long long local_length(const Ideal& I) {
  long long s = vector_space_dimension(I);
  if (s == 0 || is_origin_supported(I)) return s;
  // strip the component at the origin: (I : m^infinity) keeps everything else
  const RingPtr& ring = I.ring();
  bool any = false;
  Ideal off_origin;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Ideal sat_i = saturate_by_element(I, Polynomial::variable(ring, i));
    off_origin = any ? ideal_intersect(off_origin, sat_i) : sat_i;
    any = true;
  }
  return s - vector_space_dimension(off_origin);
}

namespace {

long long chain_length(const Ideal& J, const Ideal& I, bool local) {
  require_same_ring(I.ring(), J.ring());
  if (!J.contains(I))
    throw InputError("subquotient length: the smaller ideal is not contained in the larger");
  long long total = 0;
  Ideal cur = I;
  for (const auto& g : J.generators()) {
    if (g.is_zero() || cur.contains(g)) continue;
    Ideal ann = ideal_colon(cur, g);  // the chain factor is R/ann
    total += local ? local_length(ann) : artinian_length(ann);
    cur = ideal_sum(cur, {g});
  }
  return total;
}

}  // namespace

long long subquotient_length(const Ideal& J, const Ideal& I) { return chain_length(J, I, false); }

long long local_subquotient_length(const Ideal& J, const Ideal& I) {
  return chain_length(J, I, true);
}

}  // namespace seqcm
