#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "seqcm/poly.hpp"

namespace seqcm {

/// Krull dimension reported for the unit ideal.
inline constexpr int kDimUnitIdeal = -1;

/// Handle to an ideal: an immutable generator list plus write-once caches for
/// the reduced Groebner basis and the dimension. Copies share the caches;
/// concurrent readers may both trigger the computation, the first finished
/// result is installed for everyone.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return data_->ring; }
  const std::vector<Polynomial>& generators() const { return data_->gens; }

  /// Unique reduced Groebner basis: monic, auto-reduced, sorted ascending by
  /// leading monomial. Empty for the zero ideal.
  const std::vector<Polynomial>& groebner() const;

  /// Krull dimension of R/I (kDimUnitIdeal for the unit ideal).
  int dimension() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;  // other subset of *this
  bool is_unit() const;
  bool is_zero() const;
  bool same_ideal(const Ideal& other) const;

 private:
  struct Data {
    RingPtr ring;
    std::vector<Polynomial> gens;
    mutable std::once_flag gb_once;
    mutable std::optional<std::vector<Polynomial>> gb;
    mutable std::once_flag dim_once;
    mutable std::optional<int> dim;
  };
  std::shared_ptr<Data> data_;
};

Ideal zero_ideal(const RingPtr& ring);
Ideal unit_ideal(const RingPtr& ring);
Ideal maximal_ideal(const RingPtr& ring);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& gens);

/// Remainder of f modulo a basis (first divisor wins; fully reduced).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
/// Unique remainder modulo the reduced Groebner basis of I.
Polynomial normal_form(const Polynomial& f, const Ideal& I);

/// Plain Buchberger with the normal selection strategy followed by
/// auto-reduction. Throws DegreeCapError past the ring's guard.
std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens);

Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_colon(const Ideal& I, const Polynomial& g);
Ideal ideal_colon(const Ideal& I, const Ideal& J);
/// Iterated colon (((I:J):J):...) until stable.
Ideal saturation(const Ideal& I, const Ideal& J);

int krull_dimension(const Ideal& I);

/// Number of standard monomials of R/I; requires dim <= 0.
long long vector_space_dimension(const Ideal& I);

/// Nilpotency test of every variable modulo a zero-dimensional ideal.
bool is_origin_supported(const Ideal& I);

/// Standard-monomial count with the origin-support guard: errors whenever the
/// affine count would disagree with the local length the theory wants.
long long artinian_length(const Ideal& I);

/// Length of the localization at the origin: the affine count minus the part
/// supported away from the origin. Agrees with artinian_length whenever that
/// one is defined.
long long local_length(const Ideal& I);

/// l(J/I) for I subset J of finite colength, via a cyclic chain over J's
/// generators; factors are measured with artinian_length.
long long subquotient_length(const Ideal& J, const Ideal& I);
/// Same chain but factors measured at the origin.
long long local_subquotient_length(const Ideal& J, const Ideal& I);

}  // namespace seqcm
