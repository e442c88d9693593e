#pragma once

#include <string>
#include <string_view>

#include "fimod/module.hpp"

namespace fimod {

enum class FunctorTag { Shift, Derivative, NegShift, QPrime };

std::string functor_name(FunctorTag tag);
/// Accepts "S", "D", "Sneg", "Qprime".
FunctorTag parse_functor(std::string_view name);

// ---- shift ---------------------------------------------------------------

/// (SV)_n = V_{n+1}, f acting as V(sigma_extend(f)). Truncation drops by one.
TruncatedFIModule shift(const TruncatedFIModule& v);
/// (S phi)_n = phi_{n+1}.
FIModuleMap shift_map(const FIModuleMap& phi);

/// iota : V|_{<= N-1} -> SV with components I[n].
FIModuleMap iota_nat(const TruncatedFIModule& v);

// ---- derivative ----------------------------------------------------------

struct Derivative {
  TruncatedFIModule module;     ///< DV = coker(iota), truncation N - 1
  FIModuleMap quotient;         ///< pi : SV -> DV
  std::vector<Matrix> section;  ///< right inverses of the pi components
};

Derivative derivative(const TruncatedFIModule& v);
/// D phi, induced on the cokernel bases.
FIModuleMap derivative_map(const FIModuleMap& phi);

// ---- negative-one shift --------------------------------------------------

/// (S_{-1}V)_n = (+)_{x in [n]} V_{n-1}, summands ordered by x.
TruncatedFIModule neg_shift(const TruncatedFIModule& v);
/// Structure matrix of f : [m] -> [n] on S_{-1}V: block (f(x), x) is
/// V(restrict_removing(f, x)). Needs n - 1 <= trunc(V).
Matrix neg_shift_matrix(const TruncatedFIModule& v, const Injection& f);
/// Block-diagonal phi_{n-1}, n copies.
FIModuleMap neg_shift_map(const FIModuleMap& phi);

/// The boundary operator V_m -> (S_{-1}V)_n: block y is V(d_y f) for y
/// outside the image of f, zero otherwise.
Matrix partial_matrix(const TruncatedFIModule& v, const Injection& f);

// ---- coinduction model ---------------------------------------------------

struct QPrime {
  TruncatedFIModule module;  ///< V (+) S_{-1}V, V-block first
  FIModuleMap kappa;         ///< S_{-1}V -> Q'V
  FIModuleMap projection;    ///< Q'V -> V
};

/// f acts by [[V(f), 0], [partial(f), S_{-1}(f)]].
QPrime q_prime(const TruncatedFIModule& v);
Matrix q_prime_matrix(const TruncatedFIModule& v, const Injection& f);
/// diag(phi_n, (S_{-1}phi)_n).
FIModuleMap q_prime_map(const FIModuleMap& phi);

/// Applies the functor to a module; D and S lower the truncation by one.
TruncatedFIModule apply_functor(FunctorTag tag, const TruncatedFIModule& v);
FIModuleMap apply_functor_map(FunctorTag tag, const FIModuleMap& phi);

}  // namespace fimod
