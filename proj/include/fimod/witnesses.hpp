#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fimod/functors.hpp"
#include "fimod/hom.hpp"
#include "fimod/module.hpp"
#include "fimod/report.hpp"

namespace fimod {

struct IsoReport {
  std::vector<std::size_t> ranks;  ///< per degree
  bool square = false;
  bool invertible = false;
  bool natural = false;
  bool permutation = false;  ///< every component a permutation matrix
  std::string detail;

  bool verified() const { return square && invertible && natural; }
};

IsoReport verify_iso(const FIModuleMap& map);

/// A map claimed to be an isomorphism, with its verification.
struct IsoWitness {
  std::string name;
  FIModuleMap map;
  IsoReport report;
};

/// eta : M([m+1]) -> S_{-1}M([m]), f -> f restricted to [m], placed in the
/// summand of the removed point f(m+1). Needs m + 1 <= N.
IsoWitness eta_iso(std::size_t m, Field field, std::size_t N);

/// Theta : M([m]) (+) (+)_{x in [m]} M([m-1]) -> S M([m]); the first block is
/// iota, block x sends f to f |_| (x -> star). The source is truncated at
/// N - 1 like SM([m]). Needs m <= N - 1.
IsoWitness theta_big(std::size_t m, Field field, std::size_t N);

/// theta = pi o Theta restricted to the summands x : (+)_x M([m-1]) -> D M([m]).
/// For m = 0 both sides are zero.
IsoWitness theta_small(std::size_t m, Field field, std::size_t N);

/// F-dagger of V: (F+V)_k = Hom(F(M([k])), V) for k <= trunc(V) - 1, with
/// f_*(phi) = phi o F(rho_f). F(M([k])) is built at truncation trunc(V)
/// and the Hom spaces are solved over that whole window.
struct DaggerModule {
  FunctorTag tag;
  TruncatedFIModule base;
  std::vector<TruncatedFIModule> probes;  ///< F(M([k]))
  std::vector<HomSpace> spaces;           ///< Hom(F(M([k])), V)
  TruncatedFIModule module;
  ValidationReport validation;
};

/// tag must be Shift, Derivative or NegShift; trunc(V) >= 1.
DaggerModule dagger_module(FunctorTag tag, const TruncatedFIModule& v);

/// alpha_k(phi) = phi_{k+1}(eta_k(id_[k+1])) : (S_{-1}+V) -> SV.
IsoWitness alpha_iso(const DaggerModule& dagger);
IsoWitness alpha_iso(const TruncatedFIModule& v);
/// beta_k(phi) = sum_x phi_{k-1}(theta_k(id_{[k]\x})) : (D+V) -> S_{-1}V.
IsoWitness beta_iso(const DaggerModule& dagger);
IsoWitness beta_iso(const TruncatedFIModule& v);
/// gamma_k(phi) = phi_k(Theta_k(id_k)) + sum_x phi_{k-1}(Theta_k(id_{[k]\x})) : (S+V) -> Q'V.
IsoWitness gamma_iso(const DaggerModule& dagger);
IsoWitness gamma_iso(const TruncatedFIModule& v);

// ---- S_{-1} -| S ---------------------------------------------------------

/// The bijection [n] -> [n] that reads ([n] \ {x}) |_| {star} -> [n], star -> x.
Injection star_to(std::size_t n, std::size_t x);

/// psi : S_{-1}V -> W  |->  V|_{<=N-1} -> SW, v -> psi_{n+1}(v in summand n+1).
FIModuleMap negshift_flat(const FIModuleMap& psi, const TruncatedFIModule& v);
/// phi : V|_{<=N-1} -> SW  |->  S_{-1}V -> W, summand x of degree n goes
/// through W(star_to(n, x)) o phi_{n-1}.
FIModuleMap negshift_sharp(const FIModuleMap& phi, const TruncatedFIModule& v, const TruncatedFIModule& w);

/// u : V|_{<=N-1} -> S S_{-1} V, v -> summand star.
FIModuleMap negshift_unit(const TruncatedFIModule& v);
/// c : S_{-1} S V -> V|_{<=N-1}, summand x through V(star_to(n, x)).
FIModuleMap negshift_counit(const TruncatedFIModule& v);

/// Both triangle identities as per-degree matrix identities.
CheckList triangle_identities(const TruncatedFIModule& v);

// ---- D -| S_{-1} ---------------------------------------------------------

/// psi : DV -> W|_{<=N-1}  |->  V -> S_{-1}W, summand x of degree n is
/// psi_{n-1} pi_{n-1} V(star_to(n, x)^{-1}).
FIModuleMap derivative_flat(const FIModuleMap& psi, const TruncatedFIModule& v, const TruncatedFIModule& w);
/// phi : V -> S_{-1}W  |->  DV -> W|_{<=N-1}, psi_n = (summand n+1 of phi_{n+1}) o section_n.
FIModuleMap derivative_sharp(const FIModuleMap& phi, const TruncatedFIModule& v, const TruncatedFIModule& w);

struct AdjunctionResult {
  std::size_t dim_left = 0;   ///< Hom(F V, W)
  std::size_t dim_right = 0;  ///< Hom(V, G W)
  CheckList checks;
};

/// Verifies Hom(S_{-1}V, W) (window N) = Hom(V, SW) (window N-1): flat and
/// sharp natural and mutually inverse on the Hom bases, and natural in V and
/// W on sampled endomorphisms. V and W must share field and truncation.
AdjunctionResult adjunction_negshift_shift(const TruncatedFIModule& v, const TruncatedFIModule& w,
                                           std::uint64_t seed = 0);

/// Verifies Hom(DV, W) (window N-1) = Hom(V, S_{-1}W) (window N), and the
/// dimension equality with Hom(V, S_{-1}W) over window N-1.
AdjunctionResult adjunction_derivative_negshift(const TruncatedFIModule& v, const TruncatedFIModule& w,
                                                std::uint64_t seed = 0);

// ---- coinduction ---------------------------------------------------------

/// The FB-section s : V -> Q'V, v -> (v, 0).
FIModuleMap q_prime_section(const TruncatedFIModule& v);

struct SesResult {
  CheckList checks;
  /// Degrees n where the section fails to commute with I[n].
  std::vector<std::size_t> non_natural_inclusions;
};

/// 0 -> S_{-1}V -> Q'V -> V -> 0 exact per degree, with an FB-equivariant
/// section.
SesResult coinduction_ses(const TruncatedFIModule& v);

/// M([m]) (+) M([m+1]) -> Q'M([m]): [[1, 0], [d, kappa eta]] where column g of
/// d is the boundary of g applied to id_[m]. The V-block is the Yoneda
/// section g -> Q'(g)(id_[m], 0).
IsoWitness gl_recovery(std::size_t m, Field field, std::size_t N);

}  // namespace fimod
