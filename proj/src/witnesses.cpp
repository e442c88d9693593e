#include "fimod/witnesses.hpp"

#include <random>

#include "fimod/free_module.hpp"

namespace fimod {

namespace {

// k copies of v, as an iterated direct sum; the zero module for k = 0.
TruncatedFIModule power_sum(const TruncatedFIModule& v, std::size_t k)
{
  if (k == 0)
    return TruncatedFIModule::zero(v.field(), v.trunc());
  TruncatedFIModule acc = v;
  for (std::size_t i = 1; i < k; ++i)
    acc = direct_sum(acc, v).module;
  return acc;
}

Injection inverse_bijection(const Injection& f)
{
  std::vector<int> inv(f.target_size());
  for (std::size_t i = 1; i <= f.source_size(); ++i)
    inv[static_cast<std::size_t>(f(i)) - 1] = static_cast<int>(i);
  return Injection(f.source_size(), std::move(inv));
}

// Column j of m as a matrix.
Matrix col(const Matrix& m, std::size_t j)
{
  return m.column(j);
}

std::string list_degrees(const std::vector<std::size_t>& ds)
{
  std::string s;
  for (std::size_t d : ds)
    s += (s.empty() ? "" : ",") + std::to_string(d);
  return s;
}

Scalar random_coefficient(std::mt19937_64& rng, const ScalarOps& ops)
{
  return ops.from_int(static_cast<long>(rng() % 5) - 2);
}

FIModuleMap random_endomorphism(const TruncatedFIModule& v, std::mt19937_64& rng)
{
  HomSpace end(v, v, v.trunc());
  ScalarOps ops(v.field());
  std::vector<Scalar> coeffs;
  for (std::size_t k = 0; k < end.dim(); ++k)
    coeffs.push_back(random_coefficient(rng, ops));
  return end.combination(coeffs);
}

}  // namespace

IsoReport verify_iso(const FIModuleMap& map)
{
  IsoReport r;
  r.square = r.invertible = r.permutation = true;
  std::vector<std::size_t> bad;
  for (std::size_t n = 0; n <= map.trunc(); ++n) {
    const Matrix& c = map.component(n);
    std::size_t rk = rank(c);
    r.ranks.push_back(rk);
    if (c.rows() != c.cols())
      r.square = false;
    if (rk != c.rows() || rk != c.cols()) {
      r.invertible = false;
      bad.push_back(n);
    }
    if (!c.is_permutation())
      r.permutation = false;
  }
  ValidationReport nat = check_naturality(map);
  r.natural = nat.ok();
  if (!bad.empty())
    r.detail = "singular in degrees " + list_degrees(bad);
  if (!nat.ok())
    r.detail += (r.detail.empty() ? "" : "; ") + nat.summary();
  if (r.detail.empty())
    r.detail = "verified";
  return r;
}

IsoWitness eta_iso(std::size_t m, Field field, std::size_t N)
{
  if (m + 1 > N)
    throw FimodError("eta_iso: need m + 1 <= N");
  TruncatedFIModule source = make_free(m + 1, field, N);
  TruncatedFIModule target = neg_shift(make_free(m, field, N));
  ScalarOps ops(field);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix c(field, target.dim(n), source.dim(n));
    std::size_t block = n ? count_injections(m, n - 1) : 0;
    auto basis = enumerate_injections(m + 1, n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Injection& f = basis[j];
      std::size_t x = static_cast<std::size_t>(f(m + 1));
      Injection rest = restrict_removing(f, static_cast<int>(m + 1));
      c((x - 1) * block + injection_rank(rest), j) = ops.one();
    }
    comps.push_back(std::move(c));
  }
  FIModuleMap map(source, target, std::move(comps));
  IsoReport rep = verify_iso(map);
  return IsoWitness{"eta", std::move(map), std::move(rep)};
}

IsoWitness theta_big(std::size_t m, Field field, std::size_t N)
{
  if (N == 0 || m > N - 1)
    throw FimodError("theta_big: need m <= N - 1");
  TruncatedFIModule target = shift(make_free(m, field, N));
  std::size_t Nt = N - 1;
  TruncatedFIModule source = make_free(m, field, Nt);
  if (m > 0)
    source = direct_sum(source, power_sum(make_free(m - 1, field, Nt), m)).module;
  ScalarOps ops(field);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= Nt; ++n) {
    Matrix c(field, target.dim(n), source.dim(n));
    auto first = enumerate_injections(m, n);
    for (std::size_t j = 0; j < first.size(); ++j)
      c(injection_rank(Injection(n + 1, first[j].images())), j) = ops.one();
    std::size_t offset = first.size();
    if (m > 0) {
      auto rest = enumerate_injections(m - 1, n);
      for (std::size_t x = 1; x <= m; ++x)
        for (std::size_t j = 0; j < rest.size(); ++j) {
          Injection joined = join_map(rest[j], static_cast<int>(x), static_cast<int>(n + 1));
          c(injection_rank(joined), offset + (x - 1) * rest.size() + j) = ops.one();
        }
    }
    comps.push_back(std::move(c));
  }
  FIModuleMap map(source, target, std::move(comps));
  IsoReport rep = verify_iso(map);
  return IsoWitness{"Theta", std::move(map), std::move(rep)};
}

IsoWitness theta_small(std::size_t m, Field field, std::size_t N)
{
  if (N == 0 || m > N - 1)
    throw FimodError("theta_small: need m <= N - 1");
  Derivative d = derivative(make_free(m, field, N));
  std::size_t Nt = N - 1;
  if (m == 0) {
    FIModuleMap map = FIModuleMap::zero(TruncatedFIModule::zero(field, Nt), d.module);
    IsoReport rep = verify_iso(map);
    return IsoWitness{"theta", std::move(map), std::move(rep)};
  }
  IsoWitness big = theta_big(m, field, N);
  TruncatedFIModule source = power_sum(make_free(m - 1, field, Nt), m);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= Nt; ++n) {
    const Matrix& b = big.map.component(n);
    std::size_t offset = count_injections(m, n);
    Matrix restricted = b.block(0, offset, b.rows(), b.cols() - offset);
    comps.push_back(mat_mul(d.quotient.component(n), restricted));
  }
  FIModuleMap map(source, d.module, std::move(comps));
  IsoReport rep = verify_iso(map);
  return IsoWitness{"theta", std::move(map), std::move(rep)};
}

DaggerModule dagger_module(FunctorTag tag, const TruncatedFIModule& v)
{
  if (tag == FunctorTag::QPrime)
    throw FimodError("dagger_module: supported functors are S, D and Sneg");
  std::size_t N = v.trunc();
  if (N == 0)
    throw FimodError("dagger_module: window too large for a module truncated at degree 0");
  std::size_t K = N - 1;
  Field field = v.field();
  // S and D lower truncation by one, so their free inputs are built one higher.
  std::size_t free_trunc = tag == FunctorTag::NegShift ? N : N + 1;

  DaggerModule out{tag, v, {}, {}, TruncatedFIModule::zero(field, K), {}};
  for (std::size_t k = 0; k <= K; ++k) {
    out.probes.push_back(apply_functor(tag, make_free(k, field, free_trunc)));
    out.spaces.emplace_back(out.probes.back(), v, N);
  }

  // Column j: coordinates of phi_j o F(rho_g) in the degree-k2 space.
  auto transition = [&](const Injection& g) {
    std::size_t k = g.source_size(), k2 = g.target_size();
    FIModuleMap frho = apply_functor_map(tag, rho_map(g, field, free_trunc));
    const HomSpace& from = out.spaces[k];
    const HomSpace& to = out.spaces[k2];
    Matrix m(field, to.dim(), from.dim());
    for (std::size_t j = 0; j < from.dim(); ++j) {
      auto coeffs = to.coordinates(compose_maps(from[j], frho));
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        m(i, j) = coeffs[i];
    }
    return m;
  };

  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> ts(K + 1);
  std::vector<Matrix> incs;
  for (std::size_t k = 0; k <= K; ++k) {
    dims.push_back(out.spaces[k].dim());
    for (std::size_t i = 1; i < k; ++i)
      ts[k].push_back(transition(Injection::transposition(k, i)));
  }
  for (std::size_t k = 0; k < K; ++k)
    incs.push_back(transition(Injection::standard_inclusion(k, k + 1)));
  out.module = TruncatedFIModule(field, K, std::move(dims), std::move(ts), std::move(incs));
  out.validation = validate(out.module);
  return out;
}

IsoWitness alpha_iso(const DaggerModule& dagger)
{
  if (dagger.tag != FunctorTag::NegShift)
    throw FimodError("alpha_iso: needs the Sneg dagger module");
  const TruncatedFIModule& v = dagger.base;
  Field field = v.field();
  std::size_t N = v.trunc();
  std::vector<Matrix> comps;
  for (std::size_t k = 0; k + 1 <= N; ++k) {
    IsoWitness eta = eta_iso(k, field, N);
    Matrix element = col(eta.map.component(k + 1), identity_index(k + 1));
    const HomSpace& space = dagger.spaces[k];
    Matrix c(field, v.dim(k + 1), space.dim());
    for (std::size_t j = 0; j < space.dim(); ++j)
      c.set_block(0, j, mat_mul(space[j].component(k + 1), element));
    comps.push_back(std::move(c));
  }
  FIModuleMap map(dagger.module, shift(v), std::move(comps));
  IsoReport rep = verify_iso(map);
  return IsoWitness{"alpha", std::move(map), std::move(rep)};
}

IsoWitness alpha_iso(const TruncatedFIModule& v)
{
  return alpha_iso(dagger_module(FunctorTag::NegShift, v));
}

IsoWitness beta_iso(const DaggerModule& dagger)
{
  if (dagger.tag != FunctorTag::Derivative)
    throw FimodError("beta_iso: needs the D dagger module");
  const TruncatedFIModule& v = dagger.base;
  Field field = v.field();
  std::size_t N = v.trunc();
  TruncatedFIModule target = truncate(neg_shift(v), N - 1);
  std::vector<Matrix> comps;
  for (std::size_t k = 0; k + 1 <= N; ++k) {
    const HomSpace& space = dagger.spaces[k];
    Matrix c(field, target.dim(k), space.dim());
    if (k > 0) {
      IsoWitness theta = theta_small(k, field, N + 1);
      std::size_t block = v.dim(k - 1);
      std::size_t per_summand = count_injections(k - 1, k - 1);
      for (std::size_t x = 1; x <= k; ++x) {
        Matrix element = col(theta.map.component(k - 1), (x - 1) * per_summand + identity_index(k - 1));
        for (std::size_t j = 0; j < space.dim(); ++j)
          c.set_block((x - 1) * block, j, mat_mul(space[j].component(k - 1), element));
      }
    }
    comps.push_back(std::move(c));
  }
  FIModuleMap map(dagger.module, target, std::move(comps));
  IsoReport rep = verify_iso(map);
  return IsoWitness{"beta", std::move(map), std::move(rep)};
}

IsoWitness beta_iso(const TruncatedFIModule& v)
{
  return beta_iso(dagger_module(FunctorTag::Derivative, v));
}

IsoWitness gamma_iso(const DaggerModule& dagger)
{
  if (dagger.tag != FunctorTag::Shift)
    throw FimodError("gamma_iso: needs the S dagger module");
  const TruncatedFIModule& v = dagger.base;
  Field field = v.field();
  std::size_t N = v.trunc();
  TruncatedFIModule target = truncate(q_prime(v).module, N - 1);
  std::vector<Matrix> comps;
  for (std::size_t k = 0; k + 1 <= N; ++k) {
    const HomSpace& space = dagger.spaces[k];
    IsoWitness theta = theta_big(k, field, N + 1);
    Matrix c(field, target.dim(k), space.dim());
    Matrix top = col(theta.map.component(k), identity_index(k));
    for (std::size_t j = 0; j < space.dim(); ++j)
      c.set_block(0, j, mat_mul(space[j].component(k), top));
    if (k > 0) {
      std::size_t block = v.dim(k - 1);
      std::size_t first = count_injections(k, k - 1);
      std::size_t per_summand = count_injections(k - 1, k - 1);
      for (std::size_t x = 1; x <= k; ++x) {
        Matrix element =
            col(theta.map.component(k - 1), first + (x - 1) * per_summand + identity_index(k - 1));
        for (std::size_t j = 0; j < space.dim(); ++j)
          c.set_block(v.dim(k) + (x - 1) * block, j, mat_mul(space[j].component(k - 1), element));
      }
    }
    comps.push_back(std::move(c));
  }
  FIModuleMap map(dagger.module, target, std::move(comps));
  IsoReport rep = verify_iso(map);
  return IsoWitness{"gamma", std::move(map), std::move(rep)};
}

IsoWitness gamma_iso(const TruncatedFIModule& v)
{
  return gamma_iso(dagger_module(FunctorTag::Shift, v));
}

Injection star_to(std::size_t n, std::size_t x)
{
  if (x < 1 || x > n)
    throw FimodError("star_to: point outside [n]");
  return join_map(Injection::identity(n - 1), static_cast<int>(x));
}

FIModuleMap negshift_flat(const FIModuleMap& psi, const TruncatedFIModule& v)
{
  std::size_t N = v.trunc();
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    const Matrix& p = psi.component(n + 1);
    comps.push_back(p.block(0, n * v.dim(n), p.rows(), v.dim(n)));
  }
  return FIModuleMap(truncate(v, N - 1), shift(psi.target()), std::move(comps));
}

FIModuleMap negshift_sharp(const FIModuleMap& phi, const TruncatedFIModule& v, const TruncatedFIModule& w)
{
  std::size_t N = v.trunc();
  Field field = v.field();
  TruncatedFIModule source = neg_shift(v);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix c(field, w.dim(n), source.dim(n));
    for (std::size_t x = 1; x <= n; ++x)
      c.set_block(0, (x - 1) * v.dim(n - 1),
                  mat_mul(w.matrix_of_injection(star_to(n, x)), phi.component(n - 1)));
    comps.push_back(std::move(c));
  }
  return FIModuleMap(source, w, std::move(comps));
}

FIModuleMap negshift_unit(const TruncatedFIModule& v)
{
  std::size_t N = v.trunc();
  Field field = v.field();
  TruncatedFIModule target = shift(neg_shift(v));
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    Matrix c(field, target.dim(n), v.dim(n));
    c.set_block(n * v.dim(n), 0, Matrix::identity(field, v.dim(n)));
    comps.push_back(std::move(c));
  }
  return FIModuleMap(truncate(v, N - 1), target, std::move(comps));
}

FIModuleMap negshift_counit(const TruncatedFIModule& v)
{
  std::size_t N = v.trunc();
  Field field = v.field();
  TruncatedFIModule source = neg_shift(shift(v));
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    Matrix c(field, v.dim(n), source.dim(n));
    for (std::size_t x = 1; x <= n; ++x)
      c.set_block(0, (x - 1) * v.dim(n), v.matrix_of_injection(star_to(n, x)));
    comps.push_back(std::move(c));
  }
  return FIModuleMap(source, truncate(v, N - 1), std::move(comps));
}

CheckList triangle_identities(const TruncatedFIModule& v)
{
  CheckList out;
  std::size_t N = v.trunc();
  if (N < 2)
    throw FimodError("triangle_identities: need truncation >= 2");
  auto per_degree = [](const FIModuleMap& m) {
    std::vector<std::size_t> bad;
    for (std::size_t n = 0; n <= m.trunc(); ++n)
      if (!m.component(n).is_identity())
        bad.push_back(n);
    return bad;
  };
  FIModuleMap first = compose_maps(negshift_counit(neg_shift(v)), neg_shift_map(negshift_unit(v)));
  auto bad1 = per_degree(first);
  out.add("counit.Sneg o Sneg.unit = id", bad1.empty(),
          bad1.empty() ? "identity in degrees 0.." + std::to_string(first.trunc())
                       : "fails in degrees " + list_degrees(bad1));
  FIModuleMap second = compose_maps(shift_map(negshift_counit(v)), negshift_unit(shift(v)));
  auto bad2 = per_degree(second);
  out.add("S.counit o unit.S = id", bad2.empty(),
          bad2.empty() ? "identity in degrees 0.." + std::to_string(second.trunc())
                       : "fails in degrees " + list_degrees(bad2));
  return out;
}

FIModuleMap derivative_flat(const FIModuleMap& psi, const TruncatedFIModule& v, const TruncatedFIModule& w)
{
  std::size_t N = v.trunc();
  Field field = v.field();
  Derivative d = derivative(v);
  TruncatedFIModule target = neg_shift(w);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix c(field, target.dim(n), v.dim(n));
    for (std::size_t x = 1; x <= n; ++x) {
      Matrix into_summand = mat_mul(psi.component(n - 1),
                                    mat_mul(d.quotient.component(n - 1),
                                            v.matrix_of_injection(inverse_bijection(star_to(n, x)))));
      c.set_block((x - 1) * w.dim(n - 1), 0, into_summand);
    }
    comps.push_back(std::move(c));
  }
  return FIModuleMap(v, target, std::move(comps));
}

FIModuleMap derivative_sharp(const FIModuleMap& phi, const TruncatedFIModule& v, const TruncatedFIModule& w)
{
  std::size_t N = v.trunc();
  Derivative d = derivative(v);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    const Matrix& p = phi.component(n + 1);
    Matrix last = p.block(n * w.dim(n), 0, w.dim(n), p.cols());
    comps.push_back(mat_mul(last, d.section[n]));
  }
  return FIModuleMap(d.module, truncate(w, N - 1), std::move(comps));
}

namespace {

void require_pair(const TruncatedFIModule& v, const TruncatedFIModule& w, const char* who)
{
  if (!(v.field() == w.field()))
    throw FimodError(std::string(who) + ": field mismatch");
  if (v.trunc() != w.trunc())
    throw FimodError(std::string(who) + ": window mismatch (truncations " + std::to_string(v.trunc()) +
                     " and " + std::to_string(w.trunc()) + ")");
  if (v.trunc() < 1)
    throw FimodError(std::string(who) + ": need truncation >= 1");
}

// Checks that to(from_map(x)) round-trips over a basis and that images are
// natural and land in the target space.
template <class Forward, class Backward>
void round_trip(CheckList& out, const std::string& label, const HomSpace& from, const HomSpace& to,
                Forward fwd, Backward back)
{
  std::size_t natural_fail = 0, membership_fail = 0, trip_fail = 0;
  for (std::size_t j = 0; j < from.dim(); ++j) {
    FIModuleMap image = fwd(from[j]);
    if (!check_naturality(image).ok())
      ++natural_fail;
    try {
      to.coordinates(image);
    } catch (const FimodError&) {
      ++membership_fail;
    }
    if (!(back(image).components() == from[j].components()))
      ++trip_fail;
  }
  std::string n = std::to_string(from.dim());
  out.add(label + " natural", natural_fail == 0,
          std::to_string(from.dim() - natural_fail) + "/" + n + " basis images natural");
  out.add(label + " lands in hom space", membership_fail == 0,
          std::to_string(from.dim() - membership_fail) + "/" + n + " basis images");
  out.add(label + " round trip", trip_fail == 0,
          std::to_string(from.dim() - trip_fail) + "/" + n + " basis elements recovered exactly");
}

}  // namespace

AdjunctionResult adjunction_negshift_shift(const TruncatedFIModule& v, const TruncatedFIModule& w,
                                           std::uint64_t seed)
{
  require_pair(v, w, "adjunction_negshift_shift");
  std::size_t N = v.trunc();
  HomSpace left(neg_shift(v), w, N);
  HomSpace right(truncate(v, N - 1), shift(w), N - 1);
  AdjunctionResult res;
  res.dim_left = left.dim();
  res.dim_right = right.dim();
  res.checks.add("dim Hom(Sneg V, W) = dim Hom(V, S W)", left.dim() == right.dim(),
                 std::to_string(left.dim()) + " vs " + std::to_string(right.dim()));
  auto flat = [&](const FIModuleMap& psi) { return negshift_flat(psi, v); };
  auto sharp = [&](const FIModuleMap& phi) { return negshift_sharp(phi, v, w); };
  round_trip(res.checks, "flat", left, right, flat, sharp);
  round_trip(res.checks, "sharp", right, left, sharp, flat);

  std::mt19937_64 rng(seed);
  FIModuleMap a = random_endomorphism(v, rng);
  FIModuleMap b = random_endomorphism(w, rng);
  FIModuleMap sa = neg_shift_map(a);
  FIModuleMap sb = shift_map(b);
  FIModuleMap a_low = truncate_map(a, N - 1);
  std::size_t fail_v = 0, fail_w = 0;
  for (std::size_t j = 0; j < left.dim(); ++j) {
    const FIModuleMap& psi = left[j];
    FIModuleMap fpsi = flat(psi);
    if (!(flat(compose_maps(psi, sa)).components() == compose_maps(fpsi, a_low).components()))
      ++fail_v;
    if (!(flat(compose_maps(b, psi)).components() == compose_maps(sb, fpsi).components()))
      ++fail_w;
  }
  res.checks.add("flat natural in V", fail_v == 0, std::to_string(fail_v) + " failures on sampled endomorphism");
  res.checks.add("flat natural in W", fail_w == 0, std::to_string(fail_w) + " failures on sampled endomorphism");
  return res;
}

AdjunctionResult adjunction_derivative_negshift(const TruncatedFIModule& v, const TruncatedFIModule& w,
                                                std::uint64_t seed)
{
  require_pair(v, w, "adjunction_derivative_negshift");
  std::size_t N = v.trunc();
  Derivative dv = derivative(v);
  TruncatedFIModule w_low = truncate(w, N - 1);
  TruncatedFIModule sneg_w = neg_shift(w);
  HomSpace left(dv.module, w_low, N - 1);
  HomSpace right(v, sneg_w, N);
  std::size_t right_low = dim_hom(truncate(v, N - 1), truncate(sneg_w, N - 1), N - 1);
  AdjunctionResult res;
  res.dim_left = left.dim();
  res.dim_right = right.dim();
  res.checks.add("dim Hom(D V, W) = dim Hom(V, Sneg W)", left.dim() == right.dim(),
                 std::to_string(left.dim()) + " vs " + std::to_string(right.dim()) + " (window " +
                     std::to_string(N) + ")");
  res.checks.add("dim Hom(D V, W) = dim Hom(V, Sneg W) at window N-1", left.dim() == right_low,
                 std::to_string(left.dim()) + " vs " + std::to_string(right_low));
  auto flat = [&](const FIModuleMap& psi) { return derivative_flat(psi, v, w); };
  auto sharp = [&](const FIModuleMap& phi) { return derivative_sharp(phi, v, w); };
  round_trip(res.checks, "flat", left, right, flat, sharp);
  round_trip(res.checks, "sharp", right, left, sharp, flat);

  std::mt19937_64 rng(seed);
  FIModuleMap a = random_endomorphism(v, rng);
  FIModuleMap b = random_endomorphism(w, rng);
  FIModuleMap da = derivative_map(a);
  FIModuleMap b_low = truncate_map(b, N - 1);
  FIModuleMap sb = neg_shift_map(b);
  std::size_t fail_v = 0, fail_w = 0;
  for (std::size_t j = 0; j < left.dim(); ++j) {
    const FIModuleMap& psi = left[j];
    FIModuleMap fpsi = flat(psi);
    if (!(flat(compose_maps(psi, da)).components() == compose_maps(fpsi, a).components()))
      ++fail_v;
    if (!(flat(compose_maps(b_low, psi)).components() == compose_maps(sb, fpsi).components()))
      ++fail_w;
  }
  res.checks.add("flat natural in V", fail_v == 0, std::to_string(fail_v) + " failures on sampled endomorphism");
  res.checks.add("flat natural in W", fail_w == 0, std::to_string(fail_w) + " failures on sampled endomorphism");
  return res;
}

FIModuleMap q_prime_section(const TruncatedFIModule& v)
{
  QPrime q = q_prime(v);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= v.trunc(); ++n) {
    Matrix s(v.field(), q.module.dim(n), v.dim(n));
    s.set_block(0, 0, Matrix::identity(v.field(), v.dim(n)));
    comps.push_back(std::move(s));
  }
  return FIModuleMap(v, q.module, std::move(comps));
}

SesResult coinduction_ses(const TruncatedFIModule& v)
{
  SesResult res;
  QPrime q = q_prime(v);
  res.checks.add("Q'V is an FI-module", validate(q.module).ok(), validate(q.module).summary());
  res.checks.add("kappa natural", check_naturality(q.kappa).ok(), check_naturality(q.kappa).summary());
  res.checks.add("p natural", check_naturality(q.projection).ok(), check_naturality(q.projection).summary());
  std::vector<std::size_t> not_injective, not_surjective, not_exact, nonzero_composite;
  for (std::size_t n = 0; n <= v.trunc(); ++n) {
    const Matrix& k = q.kappa.component(n);
    const Matrix& p = q.projection.component(n);
    std::size_t rk = rank(k), rp = rank(p);
    if (rk != k.cols())
      not_injective.push_back(n);
    if (rp != p.rows())
      not_surjective.push_back(n);
    if (!mat_mul(p, k).is_zero())
      nonzero_composite.push_back(n);
    if (rk + rp != q.module.dim(n))
      not_exact.push_back(n);
  }
  auto verdict = [](const std::vector<std::size_t>& bad) {
    return bad.empty() ? std::string("all degrees") : "fails in degrees " + list_degrees(bad);
  };
  res.checks.add("kappa injective", not_injective.empty(), verdict(not_injective));
  res.checks.add("p surjective", not_surjective.empty(), verdict(not_surjective));
  res.checks.add("p o kappa = 0", nonzero_composite.empty(), verdict(nonzero_composite));
  res.checks.add("image kappa = kernel p", not_exact.empty() && nonzero_composite.empty(), verdict(not_exact));

  FIModuleMap s = q_prime_section(v);
  bool splits = compose_maps(q.projection, s) == FIModuleMap::identity(v);
  res.checks.add("p o s = id", splits);
  std::vector<std::size_t> fb_fail;
  for (std::size_t n = 2; n <= v.trunc(); ++n)
    for (std::size_t i = 1; i < n; ++i)
      if (!(mat_mul(q.module.transposition(n, i), s.component(n)) ==
            mat_mul(s.component(n), v.transposition(n, i)))) {
        fb_fail.push_back(n);
        break;
      }
  res.checks.add("section FB-equivariant", fb_fail.empty(), verdict(fb_fail));
  for (std::size_t n = 0; n < v.trunc(); ++n)
    if (!(mat_mul(q.module.inclusion(n), s.component(n)) == mat_mul(s.component(n + 1), v.inclusion(n))))
      res.non_natural_inclusions.push_back(n);
  return res;
}

IsoWitness gl_recovery(std::size_t m, Field field, std::size_t N)
{
  if (m + 1 > N)
    throw FimodError("gl_recovery: need m + 1 <= N");
  TruncatedFIModule v = make_free(m, field, N);
  QPrime q = q_prime(v);
  IsoWitness eta = eta_iso(m, field, N);
  DirectSum sum = direct_sum(v, make_free(m + 1, field, N));
  Matrix id_vec = Matrix(field, v.dim(m), 1);
  id_vec(identity_index(m), 0) = ScalarOps(field).one();
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= N; ++n) {
    std::size_t dv = v.dim(n);
    Matrix c(field, q.module.dim(n), sum.module.dim(n));
    c.set_block(0, 0, Matrix::identity(field, dv));
    auto basis = enumerate_injections(m, n);
    for (std::size_t j = 0; j < basis.size(); ++j)
      c.set_block(dv, j, mat_mul(partial_matrix(v, basis[j]), id_vec));
    c.set_block(dv, dv, eta.map.component(n));
    comps.push_back(std::move(c));
  }
  FIModuleMap map(sum.module, q.module, std::move(comps));
  IsoReport rep = verify_iso(map);
  return IsoWitness{"gl", std::move(map), std::move(rep)};
}

}  // namespace fimod
