#include "seqcm/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace seqcm {

int SimplicialComplex::max_facet_dimension() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

SimplicialComplex validate_complex(int vertices, std::vector<std::vector<int>> facets,
                                   bool allow_ghost_vertices) {
  if (vertices < 1) throw InputError("complex needs at least one vertex");
  if (facets.empty()) throw InputError("empty complex rejected: no facets given");
  for (auto& f : facets) {
    if (f.empty()) throw InputError("empty facet rejected");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 1 || v > vertices)
        throw InputError("vertex index " + std::to_string(v) + " out of range [1, " +
                         std::to_string(vertices) + "]");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i == j) continue;
      if (std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end()))
        throw InputError("nested facets: one facet contains another");
    }
  if (!allow_ghost_vertices) {
    std::set<int> used;
    for (const auto& f : facets) used.insert(f.begin(), f.end());
    for (int v = 1; v <= vertices; ++v)
      if (!used.count(v))
        throw InputError("vertex " + std::to_string(v) +
                         " lies in no facet (pass --allow-ghost-vertices to accept)");
  }
  return SimplicialComplex{vertices, std::move(facets)};
}

bool is_face(const SimplicialComplex& c, const std::vector<int>& subset) {
  if (subset.empty()) return true;
  for (const auto& f : c.facets)
    if (std::includes(f.begin(), f.end(), subset.begin(), subset.end())) return true;
  return false;
}

Ideal stanley_reisner_ideal(const SimplicialComplex& c, const RingPtr& ring) {
  if (static_cast<int>(ring->nvars()) != c.vertices)
    throw RingMismatchError("ring has " + std::to_string(ring->nvars()) + " variables, complex has " +
                            std::to_string(c.vertices) + " vertices");
  const int n = c.vertices;
  std::vector<Polynomial> gens;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) subset.push_back(v + 1);
    if (is_face(c, subset)) continue;
    // minimal non-face: all proper subsets are faces
    bool minimal = true;
    for (std::size_t k = 0; k < subset.size() && minimal; ++k) {
      std::vector<int> sub = subset;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      if (!is_face(c, sub)) minimal = false;
    }
    if (!minimal) continue;
    Monomial m = Monomial::one(ring->nvars());
    for (int v : subset) m.exps[static_cast<std::size_t>(v - 1)] = 1;
    gens.push_back(Polynomial::monomial(ring, std::move(m)));
  }
  return Ideal(ring, std::move(gens));
}

std::vector<std::pair<Ideal, int>> facet_primes(const SimplicialComplex& c, const RingPtr& ring) {
  if (static_cast<int>(ring->nvars()) != c.vertices)
    throw RingMismatchError("variable count does not match vertex count");
  std::vector<std::pair<Ideal, int>> primes;
  for (const auto& f : c.facets) {
    std::vector<Polynomial> gens;
    for (int v = 1; v <= c.vertices; ++v)
      if (!std::binary_search(f.begin(), f.end(), v))
        gens.push_back(Polynomial::variable(ring, static_cast<std::size_t>(v - 1)));
    primes.emplace_back(Ideal(ring, std::move(gens)), static_cast<int>(f.size()));
  }
  return primes;
}

LambdaProfile lambda_profile(const SimplicialComplex& c) {
  LambdaProfile lambda;
  for (const auto& f : c.facets) ++lambda[static_cast<int>(f.size()) - 1];
  return lambda;
}

std::string canonical_key(const SimplicialComplex& c) {
  std::ostringstream out;
  out << c.vertices << ":";
  bool first_facet = true;
  for (const auto& f : c.facets) {
    if (!first_facet) out << ",";
    first_facet = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ".";
      out << f[i];
    }
  }
  return out.str();
}

}  // namespace seqcm
