#pragma once

#include <cstddef>

#include "fimod/module.hpp"

namespace fimod {

/// M([m]) truncated at N: degree-n basis is enumerate_injections(m, n) and
/// f_*(g) = f o g. Throws FimodError if m > N.
TruncatedFIModule make_free(std::size_t m, Field field, std::size_t N);

/// rho_f : M([target]) -> M([source]), g -> g o f, for f : [source] -> [target].
FIModuleMap rho_map(const Injection& f, Field field, std::size_t N);

/// Index of id_[m] in the degree-m basis of M([m]).
std::size_t identity_index(std::size_t m);

/// phi in Hom(M([m]), V) -> phi_m(id_[m]) in V_m.
DegreeVector yoneda_to_element(const FIModuleMap& phi, std::size_t m);

/// The unique map M([m]) -> V sending id_[m] to v (v.degree = m).
FIModuleMap yoneda_from_element(const TruncatedFIModule& v, const DegreeVector& element);

}  // namespace fimod
