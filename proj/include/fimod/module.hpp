#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fimod/injection.hpp"
#include "fimod/matrix.hpp"

namespace fimod {

/// An FI-module restricted to the full subcategory of sets of size <= trunc,
/// stored by its generator matrices: adjacent transpositions T[n][i]
/// (2 <= n <= trunc, 1 <= i < n) and standard inclusions I[n] : V_n -> V_{n+1}
/// (0 <= n < trunc).
///
/// Immutable. Copies share storage, so passing by value is cheap.
class TruncatedFIModule {
public:
  /// transpositions[n] holds n - 1 matrices (empty for n < 2);
  /// inclusions has trunc entries. Shapes are checked, relations are not
  /// (see validate).
  TruncatedFIModule(Field field, std::size_t trunc, std::vector<std::size_t> dims,
                    std::vector<std::vector<Matrix>> transpositions,
                    std::vector<Matrix> inclusions);

  /// The zero module.
  static TruncatedFIModule zero(Field field, std::size_t trunc);

  const Field& field() const { return impl_->field; }
  std::size_t trunc() const { return impl_->trunc; }
  const std::vector<std::size_t>& dims() const { return impl_->dims; }
  std::size_t dim(std::size_t n) const { return impl_->dims.at(n); }
  std::size_t total_dim() const;

  /// T[n][i], 1 <= i < n.
  const Matrix& transposition(std::size_t n, std::size_t i) const;
  /// I[n] : V_n -> V_{n+1}.
  const Matrix& inclusion(std::size_t n) const;

  const std::vector<std::vector<Matrix>>& transpositions() const { return impl_->transpositions; }
  const std::vector<Matrix>& inclusions() const { return impl_->inclusions; }

  /// V(f) : V_m -> V_n built from canonical_factorization(f); memoized.
  /// Throws FimodError if f.target_size() > trunc().
  Matrix matrix_of_injection(const Injection& f) const;

  friend bool operator==(const TruncatedFIModule& a, const TruncatedFIModule& b);

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;

  struct Cache;
  struct Impl {
    Field field;
    std::size_t trunc;
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix>> transpositions;
    std::vector<Matrix> inclusions;
    std::shared_ptr<Cache> cache;
  };
};

inline Matrix matrix_of_injection(const TruncatedFIModule& v, const Injection& f)
{
  return v.matrix_of_injection(f);
}

/// One violated defining relation.
struct Violation {
  std::string relation;  ///< "shape", "involution", "braid", "commute", "inclusion", "stabilizer"
  std::size_t degree = 0;
  std::size_t i = 0;
  std::size_t j = 0;

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks the relations presenting FI in degrees <= trunc:
///  - involution  T[n][i]^2 = 1
///  - braid       T[n][i] T[n][i+1] T[n][i] = T[n][i+1] T[n][i] T[n][i+1]
///  - commute     T[n][i] T[n][j] = T[n][j] T[n][i], |i - j| >= 2
///  - inclusion   I[n] T[n][i] = T[n+1][i] I[n]
///  - stabilizer  T[n+2][n+1] I[n+1] I[n] = I[n+1] I[n]
/// The last one says the swap of the two new points fixes the image of
/// [n] in [n+2]; without it the generator matrices do not define a functor.
ValidationReport validate(const TruncatedFIModule& v);

/// Restriction to degrees <= k.
TruncatedFIModule truncate(const TruncatedFIModule& v, std::size_t k);

/// An element of V_n in the module's basis.
struct DegreeVector {
  std::size_t degree = 0;
  std::vector<Scalar> coords;
};

/// A natural transformation between truncated modules, one matrix per degree.
class FIModuleMap {
public:
  FIModuleMap(TruncatedFIModule source, TruncatedFIModule target, std::vector<Matrix> components);

  static FIModuleMap identity(const TruncatedFIModule& v);
  static FIModuleMap zero(const TruncatedFIModule& source, const TruncatedFIModule& target);

  const TruncatedFIModule& source() const { return source_; }
  const TruncatedFIModule& target() const { return target_; }
  std::size_t trunc() const { return source_.trunc(); }
  const Matrix& component(std::size_t n) const { return components_.at(n); }
  const std::vector<Matrix>& components() const { return components_; }

  friend bool operator==(const FIModuleMap& a, const FIModuleMap& b);

private:
  TruncatedFIModule source_;
  TruncatedFIModule target_;
  std::vector<Matrix> components_;
};

/// Violations of phi_n V(g) = W(g) phi_m over all generators g; relation
/// names are "natural-transposition" and "natural-inclusion".
ValidationReport check_naturality(const FIModuleMap& phi);

/// b o a. Throws FimodError unless a.target() == b.source().
FIModuleMap compose_maps(const FIModuleMap& b, const FIModuleMap& a);
FIModuleMap add_maps(const FIModuleMap& a, const FIModuleMap& b);
FIModuleMap scale_map(const Scalar& c, const FIModuleMap& a);
FIModuleMap truncate_map(const FIModuleMap& phi, std::size_t k);

/// Every component square and invertible.
bool map_is_iso(const FIModuleMap& phi);
/// Per-degree column bases of ker phi_n.
std::vector<Matrix> kernel_of(const FIModuleMap& phi);
/// Per-degree column bases of im phi_n (canonical reduced form).
std::vector<Matrix> image_of(const FIModuleMap& phi);

/// Degreewise inverse of an isomorphism; throws FimodError otherwise.
FIModuleMap inverse_map(const FIModuleMap& phi);

struct DirectSum {
  TruncatedFIModule module;
  FIModuleMap inject_first;
  FIModuleMap inject_second;
  FIModuleMap project_first;
  FIModuleMap project_second;
};

/// A (+) B with block-diagonal generators, A-block first.
DirectSum direct_sum(const TruncatedFIModule& a, const TruncatedFIModule& b);

/// Canonical column basis of the span of the columns of m: the transpose of
/// the nonzero rows of rref(m^T).
Matrix column_basis(const Matrix& m);

/// Per-degree column bases of the smallest sub-FI-module containing the seeds.
std::vector<Matrix> saturate_submodule(const TruncatedFIModule& v, const std::vector<DegreeVector>& seeds);

struct Quotient {
  TruncatedFIModule module;
  FIModuleMap projection;      ///< V -> V / sub
  std::vector<Matrix> section; ///< per-degree right inverses of projection components
};

/// V / sub with generators induced on the cokernel bases of cokernel_data.
/// Throws FimodError if sub is not stable under the generators.
Quotient quotient_module(const TruncatedFIModule& v, const std::vector<Matrix>& sub);

}  // namespace fimod
