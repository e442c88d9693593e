#pragma once

#include <cstddef>
#include <vector>

#include "fimod/module.hpp"

namespace fimod {

/// Hom(V, W) over degrees <= window, as the solution space of the naturality
/// equations phi_n V(g) = W(g) phi_m for all generators g.
///
/// Unknowns are the entries of phi_0, ..., phi_window (degree-major, then
/// row-major). The basis is the canonical nullspace basis of the constraint
/// system: one element per free unknown, with a 1 there and 0 at every other
/// free unknown. Coordinates of any homomorphism are therefore its entries at
/// the free unknowns.
class HomSpace {
public:
  HomSpace(const TruncatedFIModule& v, const TruncatedFIModule& w, std::size_t window);

  const TruncatedFIModule& source() const { return source_; }
  const TruncatedFIModule& target() const { return target_; }
  std::size_t window() const { return window_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FIModuleMap>& basis() const { return basis_; }
  const FIModuleMap& operator[](std::size_t k) const { return basis_[k]; }

  /// Coordinates of phi in the basis. Throws FimodError if phi is not a
  /// homomorphism V|_{<=window} -> W|_{<=window} (checked by reconstruction).
  std::vector<Scalar> coordinates(const FIModuleMap& phi) const;
  /// Sum of coefficients times basis elements.
  FIModuleMap combination(const std::vector<Scalar>& coeffs) const;

  /// Number of unknowns / constraint rows of the solved system.
  std::size_t unknowns() const { return unknowns_; }
  std::size_t constraints() const { return constraints_; }

private:
  TruncatedFIModule source_;
  TruncatedFIModule target_;
  std::size_t window_;
  std::vector<std::size_t> offsets_;       // first unknown of each degree
  std::vector<std::size_t> free_columns_;  // one per basis element
  std::vector<FIModuleMap> basis_;
  std::size_t unknowns_ = 0;
  std::size_t constraints_ = 0;
};

/// Throws FimodError on a field mismatch or a window above either truncation.
std::vector<FIModuleMap> hom_basis(const TruncatedFIModule& v, const TruncatedFIModule& w, std::size_t window);
std::size_t dim_hom(const TruncatedFIModule& v, const TruncatedFIModule& w, std::size_t window);

}  // namespace fimod
