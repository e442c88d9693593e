// fimod: command-line front end for truncated FI-modules.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "fimod/free_module.hpp"
#include "fimod/functors.hpp"
#include "fimod/hom.hpp"
#include "fimod/io.hpp"
#include "fimod/random_module.hpp"
#include "fimod/verify.hpp"

using namespace fimod;

namespace {

nlohmann::json matrix_json(const Matrix& m)
{
  ScalarOps ops(m.field());
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(ops.to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dims_table(const TruncatedFIModule& v)
{
  std::ostringstream out;
  out << "degree  dim\n";
  for (std::size_t n = 0; n <= v.trunc(); ++n) {
    char line[64];
    std::snprintf(line, sizeof line, "%6zu  %zu\n", n, v.dim(n));
    out << line;
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Truncated FI-modules: functors, Hom spaces and adjunction checks"};
  app.require_subcommand(1);

  std::size_t gen = 0, trunc = 4, window = 0, count = 5;
  std::uint64_t seed = 0;
  std::string field_name = "Q", out_path, in_path, a_path, b_path, functor, profile = "mixed", suite = "all";
  bool show_basis = false, no_timings = false;

  auto* free = app.add_subcommand("free", "Write the free module M([m]) truncated at N");
  free->add_option("--gen", gen, "generator size m")->required();
  free->add_option("--trunc", trunc, "truncation N")->required();
  free->add_option("--field", field_name, "Q or F<p>");
  free->add_option("--out", out_path, "output file (default stdout)");

  auto* apply = app.add_subcommand("apply", "Apply S, D, Sneg or Qprime to a module file");
  apply->add_option("--functor", functor, "S, D, Sneg or Qprime")->required();
  apply->add_option("--in", in_path, "input module")->required();
  apply->add_option("--out", out_path, "output file (default stdout)");

  auto* hom = app.add_subcommand("hom", "Dimension (and basis) of Hom(A, B) over degrees <= window");
  hom->add_option("--a", a_path, "source module")->required();
  hom->add_option("--b", b_path, "target module")->required();
  hom->add_option("--window", window, "top degree")->required();
  hom->add_flag("--basis", show_basis, "print the basis as JSON");

  auto* dims = app.add_subcommand("dims", "Print per-degree dimensions");
  dims->add_option("--in", in_path, "input module")->required();

  auto* random = app.add_subcommand("random", "Write a random valid module");
  random->add_option("--seed", seed, "64-bit seed")->required();
  random->add_option("--profile", profile, "free, quotient, shifted or mixed");
  random->add_option("--field", field_name, "Q or F<p>");
  random->add_option("--trunc", trunc, "truncation N");
  random->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every check passes");
  verify->add_option("--suite", suite, "eta, theta, alpha, beta, gamma, adjunctions, ses, gl, leibniz or all");
  verify->add_option("--field", field_name, "Q or F<p>");
  verify->add_option("--trunc", trunc, "truncation N");
  verify->add_option("--seed", seed, "64-bit seed");
  verify->add_option("--count", count, "random modules per suite");
  verify->add_option("--out", out_path, "also write the JSON report here");
  verify->add_flag("--no-timings", no_timings, "report elapsed_ms as 0 for byte-stable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*free) {
      save_module(out_path, make_free(gen, Field::parse(field_name), trunc));
    } else if (*apply) {
      ModuleFile in = load_module(in_path);
      save_module(out_path, apply_functor(parse_functor(functor), in.module));
    } else if (*hom) {
      TruncatedFIModule a = load_module(a_path).module;
      TruncatedFIModule b = load_module(b_path).module;
      HomSpace space(a, b, window);
      std::cout << "dim " << space.dim() << "\n";
      if (show_basis) {
        nlohmann::json basis = nlohmann::json::array();
        for (const FIModuleMap& phi : space.basis()) {
          nlohmann::json comps = nlohmann::json::array();
          for (std::size_t n = 0; n <= window; ++n)
            comps.push_back(matrix_json(phi.component(n)));
          basis.push_back(std::move(comps));
        }
        std::cout << pretty_json(basis);
      }
    } else if (*dims) {
      std::cout << dims_table(load_module(in_path).module);
    } else if (*random) {
      RandomModule r = random_module(seed, parse_profile(profile), Field::parse(field_name), trunc);
      nlohmann::json header{{"profile", profile_name(r.profile)}, {"seed", r.seed}, {"recipe", r.recipe}};
      save_module(out_path, r.module, header);
    } else if (*verify) {
      VerifyOptions opts;
      opts.field = Field::parse(field_name);
      opts.trunc = trunc;
      opts.seed = seed;
      opts.count = count;
      opts.timings = !no_timings;
      SuiteReport rep = run_suite(suite, opts);
      std::string text = pretty_json(report_to_json(rep));
      std::cout << text;
      if (!out_path.empty())
        write_text(out_path, text);
      return rep.checks.ok() ? 0 : 1;
    }
  } catch (const FimodError& e) {
    std::cerr << "fimod: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
