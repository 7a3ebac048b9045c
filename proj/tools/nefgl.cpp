// Command-line front end for the nefgl library.
#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "nefgl/catalog.hpp"
#include "nefgl/error.hpp"
#include "nefgl/io.hpp"
#include "nefgl/lagrange.hpp"
#include "nefgl/parse.hpp"
#include "nefgl/recover.hpp"
#include "nefgl/rouques.hpp"
#include "nefgl/verify.hpp"

using namespace nefgl;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) std::cout << text;
  else write_text_file(out_path, text);
}

std::vector<double> split_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string tsv_header(std::size_t n, const std::string& tail) {
  std::string h;
  for (std::size_t i = 1; i <= n; ++i) h += "k_" + std::to_string(i) + "\t";
  return h + tail + "\n";
}

struct TransformArgs {
  std::string variance, group, out;
  bool check_degree = false;
};

int run_transform(const TransformArgs& a) {
  VarianceSpec v = variance_from_json(read_json_file(a.variance));
  GroupElement g = group_from_json(read_json_file(a.group));
  if (v.n != g.n())
    throw DimensionError("variance has n = " + std::to_string(v.n) + " but group element has n = " +
                         std::to_string(g.n()));
  RationalMatrixFunction r = transform_variance(g, v.V);
  auto lowered = lower_to_polymatrix(r);
  nlohmann::json doc = lowered ? variance_to_json(VarianceSpec(*lowered, "image of " + v.domain))
                               : rational_function_to_json(r);
  emit(a.out, doc.dump(2) + "\n");
  if (a.check_degree) {
    bool ok = lowered && lowered->degree() <= 3;
    nlohmann::json rep = {{"check", "polynomial of degree <= 3"},
                          {"status", ok ? "pass" : "fail"},
                          {"degree", lowered ? lowered->degree() : -1}};
    std::cerr << rep.dump() << "\n";
    return ok ? kPass : kCheckFail;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GL(n+1) action on variance functions of natural exponential families"};
  app.require_subcommand(1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply T_g to a variance function");
  transform->add_option("--variance", ta.variance, "variance JSON file")->required();
  transform->add_option("--group", ta.group, "group element JSON file")->required();
  transform->add_option("--out", ta.out, "output file (default stdout)");
  transform->add_flag("--check-degree", ta.check_degree, "fail unless the result is a polynomial of degree <= 3");

  std::string left, right, cvar, cout_path;
  auto* compose = app.add_subcommand("compose", "Multiply group elements; optionally check T_g T_g1 = T_{g1 g}");
  compose->add_option("--left", left, "g1")->required();
  compose->add_option("--right", right, "g")->required();
  compose->add_option("--variance", cvar, "variance JSON file for the composition check");
  compose->add_option("--out", cout_path, "output file (default stdout)");

  std::string cubic;
  auto* classify = app.add_subcommand("classify-cubic", "Orbit of a scalar variance of degree <= 3");
  classify->add_option("poly", cubic, "polynomial in m1")->required();

  std::string family, cat_out;
  std::size_t cat_n = 1, cat_k = 0;
  auto* catalog = app.add_subcommand("catalog", "Emit a simple quadratic representative");
  catalog->add_option("--family", family, "I, II, III, IV, V (or I_k, IV_k)")->required();
  catalog->add_option("--n", cat_n, "dimension")->required();
  catalog->add_option("--k", cat_k, "index for I and IV");
  catalog->add_option("--out", cat_out, "output file (default stdout)");

  std::string rvar, rout;
  int rdeg = 8;
  auto* recover = app.add_subcommand("recover", "Recover the measure of an N^n-type variance");
  recover->add_option("--variance", rvar, "variance JSON file")->required();
  recover->add_option("--max-degree", rdeg, "largest |k|");
  recover->add_option("--out", rout, "TSV output file (default stdout)");

  std::string lg, lg0 = "1", lout;
  int ldeg = 6;
  auto* lagrange = app.add_subcommand("lagrange", "Coefficients of g0(h(w)) with h = diag(w) g(h)");
  lagrange->add_option("--g", lg, "components of g separated by ';'")->required();
  lagrange->add_option("--g0", lg0, "series g0");
  lagrange->add_option("--max-degree", ldeg, "largest |k|");
  lagrange->add_option("--out", lout, "TSV output file (default stdout)");

  std::string sg = "poisson", sc = "0", sp, sout;
  double slambda = 1, sxmin = -3, sxmax = 3;
  unsigned skmax = 50, ssteps = 60;
  auto* rouques = app.add_subcommand("rouques", "Tabulate tilted masses or densities");
  rouques->add_option("--semigroup", sg, "poisson, poisson-counting, negbin, gaussian, gamma")
      ->check(CLI::IsMember({"poisson", "poisson-counting", "negbin", "gaussian", "gamma"}));
  rouques->add_option("--lambda", slambda, "lambda > 0");
  rouques->add_option("--c", sc, "c (comma separated for negbin)");
  rouques->add_option("--p", sp, "negbin weights, comma separated");
  rouques->add_option("--kmax", skmax, "largest |k| for discrete semigroups");
  rouques->add_option("--xmin", sxmin, "grid start for continuous semigroups");
  rouques->add_option("--xmax", sxmax, "grid end for continuous semigroups");
  rouques->add_option("--steps", ssteps, "grid intervals for continuous semigroups");
  rouques->add_option("--out", sout, "TSV output file (default stdout)");

  std::string rc_suite;
  std::uint64_t rc_seed = 42;
  auto* rcheck = app.add_subcommand("rouques-check", "Numerical identities for tilted semigroups");
  rcheck->add_option("--suite", rc_suite, "convolution, cumulant, normalization")
      ->required()
      ->check(CLI::IsMember({"convolution", "cumulant", "normalization"}));
  rcheck->add_option("--seed", rc_seed, "random seed");

  std::string vsuite = "all";
  std::uint64_t vseed = 42;
  std::size_t vcases = 100;
  auto* verify = app.add_subcommand("verify", "Run a property suite and print a JSON report");
  std::vector<std::string> suites = verify_suite_names();
  suites.push_back("all");
  verify->add_option("--suite", vsuite, "suite name")->check(CLI::IsMember(suites));
  verify->add_option("--seed", vseed, "random seed");
  verify->add_option("--cases", vcases, "cases per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*transform) return run_transform(ta);

    if (*compose) {
      GroupElement g1 = group_from_json(read_json_file(left));
      GroupElement g = group_from_json(read_json_file(right));
      GroupElement prod = g1 * g;
      emit(cout_path, group_to_json(prod).dump(2) + "\n");
      if (!cvar.empty()) {
        VarianceSpec v = variance_from_json(read_json_file(cvar));
        if (v.n != g.n()) throw DimensionError("variance and group dimensions differ");
        bool ok = same_function(transform_variance(g, transform_variance(g1, v.V)), transform_variance(prod, v.V));
        std::cerr << nlohmann::json{{"check", "composition"}, {"status", ok ? "pass" : "fail"}}.dump() << "\n";
        return ok ? kPass : kCheckFail;
      }
      return kPass;
    }

    if (*classify) {
      std::cout << to_string(classify_cubic_orbit_n1(poly_parse(cubic, 1))) << "\n";
      return kPass;
    }

    if (*catalog) {
      VarianceSpec v = casalis_representative(parse_casalis_tag(family, cat_k), cat_n);
      emit(cat_out, variance_to_json(v).dump(2) + "\n");
      return kPass;
    }

    if (*recover) {
      VarianceSpec v = variance_from_json(read_json_file(rvar));
      MeasureTable t;
      try {
        t = recover_measure(v.V, rdeg);
      } catch (const NotLatticeTypeError& e) {
        std::cerr << "not N^n-type: " << e.what() << "\n";
        return kCheckFail;
      }
      for (const auto& w : t.warnings) std::cerr << "warning: " << w << "\n";
      std::ostringstream out;
      out << tsv_header(t.n, "mu_numerator\tmu_denominator");
      for (const auto& [k, mu] : t.mu) {
        for (std::size_t i = 0; i < t.n; ++i) out << k[i] << "\t";
        out << mu.get_num().get_str() << "\t" << mu.get_den().get_str() << "\n";
      }
      emit(rout, out.str());
      return kPass;
    }

    if (*lagrange) {
      auto parts = split(lg, ';');
      std::size_t n = parts.size();
      LagrangeProblem p;
      for (const auto& s : parts) p.g.push_back(series_parse(s, n, ldeg));
      p.g0 = series_parse(lg0, n, ldeg);
      std::ostringstream out;
      out << tsv_header(n, "numerator\tdenominator");
      auto layout = SeriesLayout::get(n, ldeg);
      for (std::size_t idx = 0; idx < layout->size(); ++idx) {
        ExponentVector k = layout->exponent(idx);
        Rational c = lagrange_coefficient(p, k);
        for (std::size_t i = 0; i < n; ++i) out << k[i] << "\t";
        out << c.get_num().get_str() << "\t" << c.get_den().get_str() << "\n";
      }
      emit(lout, out.str());
      return kPass;
    }

    if (*rouques) {
      std::ostringstream out;
      out.precision(17);
      std::vector<double> c = split_doubles(sc);
      if (sg == "gaussian" || sg == "gamma") {
        Semigroup s = sg == "gaussian" ? Semigroup::gaussian() : Semigroup::gamma();
        out << "x\tdensity\n";
        for (unsigned i = 0; i <= ssteps; ++i) {
          double x = sxmin + (sxmax - sxmin) * i / ssteps;
          out << x << "\t" << continuous_density(s, {slambda, c}, x) << "\n";
        }
      } else {
        Semigroup s = sg == "negbin" ? Semigroup::negative_binomial(split_doubles(sp))
                                     : Semigroup::poisson(sg == "poisson" ? PoissonGenerator::Probability
                                                                          : PoissonGenerator::Counting);
        if (c.size() != s.n) throw DimensionError("--c must have one entry per dimension");
        out << (s.n == 1 ? std::string("k\tmass\n") : tsv_header(s.n, "mass"));
        for (unsigned d = 0; d <= skmax; ++d)
          for (const auto& e : monomials_of_degree(s.n, d)) {
            for (std::size_t i = 0; i < s.n; ++i) out << e[i] << "\t";
            out << discrete_mass(s, {slambda, c}, e.data()) << "\n";
          }
      }
      emit(sout, out.str());
      return kPass;
    }

    if (*rcheck) {
      RunReport r = run_rouques_check(rc_suite, rc_seed);
      std::cout << r.to_json().dump(2) << "\n";
      return r.pass() ? kPass : kCheckFail;
    }

    if (*verify) {
      RunReport r = run_verify_suite(vsuite, vseed, vcases);
      std::cout << r.to_json().dump(2) << "\n";
      return r.pass() ? kPass : kCheckFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
