#include "fimod/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "fimod/free_module.hpp"
#include "fimod/functors.hpp"
#include "fimod/random_module.hpp"
#include "fimod/witnesses.hpp"

namespace fimod {

namespace {

constexpr Profile kProfiles[] = {Profile::Free, Profile::Quotient, Profile::Shifted, Profile::Mixed};

RandomModule test_module(const VerifyOptions& o, std::size_t i)
{
  return random_module(o.seed * 1000 + i, kProfiles[i % 4], o.field, o.trunc);
}

std::string module_label(const RandomModule& r)
{
  return "module " + std::to_string(r.seed) + " " + r.recipe;
}

std::string iso_detail(const IsoWitness& w)
{
  std::string ranks;
  for (std::size_t r : w.report.ranks)
    ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
  return w.report.detail + "; ranks " + ranks;
}

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw FimodError("verify: " + what);
}

CheckList suite_eta(const VerifyOptions& o)
{
  require(o.trunc >= 1, "eta suite needs --trunc >= 1");
  CheckList out;
  for (std::size_t m = 0; m <= std::min<std::size_t>(3, o.trunc - 1); ++m) {
    IsoWitness w = eta_iso(m, o.field, o.trunc);
    std::string tag = "m=" + std::to_string(m);
    out.add(tag + " iso", w.report.verified(), iso_detail(w));
    out.add(tag + " permutation", w.report.permutation);
    bool dims_ok = true;
    for (std::size_t n = 0; n <= o.trunc; ++n) {
      std::size_t lhs = count_injections(m + 1, n);
      std::size_t rhs = n == 0 ? 0 : n * count_injections(m, n - 1);
      dims_ok = dims_ok && lhs == rhs && lhs == w.map.source().dim(n) && rhs == w.map.target().dim(n);
    }
    out.add(tag + " dims n!/(n-m-1)! = n(n-1)!/(n-1-m)!", dims_ok, "degrees 0.." + std::to_string(o.trunc));
  }
  return out;
}

CheckList suite_theta(const VerifyOptions& o)
{
  require(o.trunc >= 1, "theta suite needs --trunc >= 1");
  CheckList out;
  for (std::size_t m = 0; m <= std::min<std::size_t>(3, o.trunc - 1); ++m) {
    std::string tag = "m=" + std::to_string(m);
    IsoWitness big = theta_big(m, o.field, o.trunc);
    out.add(tag + " Theta iso", big.report.verified(), iso_detail(big));
    out.add(tag + " Theta permutation", big.report.permutation);
    IsoWitness small = theta_small(m, o.field, o.trunc);
    out.add(tag + " theta iso", small.report.verified(), iso_detail(small));
    TruncatedFIModule v = make_free(m, o.field, o.trunc);
    Derivative d = derivative(v);
    bool zero = true;
    for (std::size_t n = 0; n < o.trunc; ++n)
      zero = zero && mat_mul(d.quotient.component(n), iota_nat(v).component(n)).is_zero();
    out.add(tag + " pi o iota = 0", zero);
  }
  return out;
}

template <class Build>
CheckList suite_comparison(const VerifyOptions& o, FunctorTag tag, Build build,
                           std::function<std::size_t(const TruncatedFIModule&, std::size_t)> expected_dim)
{
  require(o.trunc >= 1, "comparison suites need --trunc >= 1");
  CheckList out;
  auto run = [&](const std::string& label, const TruncatedFIModule& v) {
    DaggerModule dag = dagger_module(tag, v);
    out.add(label + " dagger module valid", dag.validation.ok(), dag.validation.summary());
    bool dims_ok = true;
    for (std::size_t k = 0; k < o.trunc; ++k)
      dims_ok = dims_ok && dag.module.dim(k) == expected_dim(v, k);
    out.add(label + " dagger dims", dims_ok);
    IsoWitness w = build(dag);
    out.add(label + " iso", w.report.verified(), iso_detail(w));
  };
  run("M([0])", make_free(0, o.field, o.trunc));
  for (std::size_t i = 0; i < o.count; ++i) {
    RandomModule r = test_module(o, i);
    run(module_label(r), r.module);
  }
  return out;
}

CheckList suite_alpha(const VerifyOptions& o)
{
  return suite_comparison(o, FunctorTag::NegShift, [](const DaggerModule& d) { return alpha_iso(d); },
                          [](const TruncatedFIModule& v, std::size_t k) { return v.dim(k + 1); });
}

CheckList suite_beta(const VerifyOptions& o)
{
  return suite_comparison(o, FunctorTag::Derivative, [](const DaggerModule& d) { return beta_iso(d); },
                          [](const TruncatedFIModule& v, std::size_t k) { return k ? k * v.dim(k - 1) : 0; });
}

CheckList suite_gamma(const VerifyOptions& o)
{
  return suite_comparison(o, FunctorTag::Shift, [](const DaggerModule& d) { return gamma_iso(d); },
                          [](const TruncatedFIModule& v, std::size_t k) {
                            return v.dim(k) + (k ? k * v.dim(k - 1) : 0);
                          });
}

CheckList suite_adjunctions(const VerifyOptions& o)
{
  require(o.trunc >= 2, "adjunctions suite needs --trunc >= 2");
  CheckList out;
  for (std::size_t i = 0; i < o.count; ++i) {
    RandomModule v = test_module(o, i);
    RandomModule w = random_module(o.seed * 1000 + 500 + i, kProfiles[(i + 1) % 4], o.field, o.trunc);
    std::string label = "pair " + std::to_string(v.seed) + "," + std::to_string(w.seed);
    out.append(label + " Sneg-S", adjunction_negshift_shift(v.module, w.module, o.seed + i).checks);
    out.append(label + " D-Sneg", adjunction_derivative_negshift(v.module, w.module, o.seed + i).checks);
    out.append(module_label(v) + " triangles", triangle_identities(v.module));
  }
  return out;
}

CheckList suite_ses(const VerifyOptions& o)
{
  require(o.trunc >= 1, "ses suite needs --trunc >= 1");
  CheckList out;
  TruncatedFIModule m0 = make_free(0, o.field, o.trunc);
  SesResult base = coinduction_ses(m0);
  out.append("M([0])", base.checks);
  Matrix boundary = partial_matrix(m0, Injection::standard_inclusion(0, 1));
  bool witnessed = !base.non_natural_inclusions.empty() && base.non_natural_inclusions.front() == 0 &&
                   !boundary.is_zero();
  out.add("M([0]) section not FI-natural at 0->1", witnessed,
          "boundary block " + boundary.to_string() + "; non-natural inclusions at degrees " +
              std::to_string(base.non_natural_inclusions.size()));
  for (std::size_t i = 0; i < o.count; ++i) {
    RandomModule r = test_module(o, i);
    out.append(module_label(r), coinduction_ses(r.module).checks);
  }
  return out;
}

CheckList suite_gl(const VerifyOptions& o)
{
  require(o.trunc >= 1, "gl suite needs --trunc >= 1");
  CheckList out;
  for (std::size_t m = 0; m <= std::min<std::size_t>(2, o.trunc - 1); ++m) {
    IsoWitness w = gl_recovery(m, o.field, o.trunc);
    std::string tag = "m=" + std::to_string(m);
    out.add(tag + " Q'M([m]) = M([m]) + M([m+1])", w.report.verified(), iso_detail(w));
    bool dims_ok = true;
    for (std::size_t n = 0; n <= o.trunc; ++n)
      dims_ok = dims_ok && w.map.target().dim(n) == count_injections(m, n) + count_injections(m + 1, n);
    out.add(tag + " dims n!/(n-m)! + n!/(n-m-1)!", dims_ok);
  }
  return out;
}

CheckList suite_leibniz(const VerifyOptions& o)
{
  CheckList out;
  for (std::size_t i = 0; i < o.count; ++i) {
    RandomModule r = test_module(o, i);
    const TruncatedFIModule& v = r.module;
    TruncatedFIModule sv = neg_shift(v);
    std::mt19937_64 rng(r.seed ^ 0x9e3779b97f4a7c15ULL);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < o.pairs; ++k) {
      std::size_t c = uniform_below(rng, v.trunc() + 1);
      std::size_t b = uniform_below(rng, c + 1);
      std::size_t a = uniform_below(rng, b + 1);
      Injection f = random_injection(rng, a, b);
      Injection g = random_injection(rng, b, c);
      Matrix lhs = partial_matrix(v, compose(g, f));
      Matrix rhs = mat_add(mat_mul(partial_matrix(v, g), v.matrix_of_injection(f)),
                           mat_mul(sv.matrix_of_injection(g), partial_matrix(v, f)));
      if (!(lhs == rhs))
        ++failures;
    }
    out.add(module_label(r) + " Leibniz", failures == 0,
            std::to_string(o.pairs - failures) + "/" + std::to_string(o.pairs) + " pairs exact");
  }
  return out;
}

const std::map<std::string, CheckList (*)(const VerifyOptions&)>& registry()
{
  static const std::map<std::string, CheckList (*)(const VerifyOptions&)> r{
      {"adjunctions", suite_adjunctions}, {"alpha", suite_alpha}, {"beta", suite_beta},
      {"eta", suite_eta},                 {"gamma", suite_gamma}, {"gl", suite_gl},
      {"leibniz", suite_leibniz},         {"ses", suite_ses},     {"theta", suite_theta},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : registry())
      n.push_back(name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts)
{
  auto start = std::chrono::steady_clock::now();
  SuiteReport rep{suite, {}, 0};
  if (suite == "all") {
    for (const auto& [name, fn] : registry())
      rep.checks.append(name, fn(opts));
  } else {
    auto it = registry().find(suite);
    if (it == registry().end())
      throw FimodError("unknown suite '" + suite + "'");
    rep.checks = it->second(opts);
  }
  if (opts.timings)
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
  return rep;
}

nlohmann::json report_to_json(const SuiteReport& r)
{
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks.checks())
    checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"checks", std::move(checks)}, {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace fimod
