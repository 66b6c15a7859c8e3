#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seqcm/ideal.hpp"

namespace seqcm {

/// Simplicial complex given by its facets (1-based vertex indices). Canonical
/// form: every facet sorted ascending, facet list sorted lexicographically.
struct SimplicialComplex {
  int vertices = 0;
  std::vector<std::vector<int>> facets;

  int max_facet_dimension() const;  // |F| - 1 maximized
  bool operator==(const SimplicialComplex&) const = default;
};

/// Facet-dimension histogram: dimension -> number of facets.
using LambdaProfile = std::map<int, int>;

/// Checks the antichain and index-range invariants, deduplicates and sorts.
/// Ghost vertices (in no facet) are rejected unless allowed explicitly.
SimplicialComplex validate_complex(int vertices, std::vector<std::vector<int>> facets,
                                   bool allow_ghost_vertices = false);

bool is_face(const SimplicialComplex& c, const std::vector<int>& subset);

/// Ideal of square-free monomials of the minimal non-faces.
Ideal stanley_reisner_ideal(const SimplicialComplex& c, const RingPtr& ring);

/// For each facet F: the prime generated by the variables outside F, paired
/// with its Krull dimension |F|.
std::vector<std::pair<Ideal, int>> facet_primes(const SimplicialComplex& c, const RingPtr& ring);

LambdaProfile lambda_profile(const SimplicialComplex& c);

/// "n:12,34" style key for caching and isomorphism handling.
std::string canonical_key(const SimplicialComplex& c);

}  // namespace seqcm
