#include "nefgl/verify.hpp"

#include <chrono>
#include <cstdio>

#include "nefgl/catalog.hpp"
#include "nefgl/error.hpp"
#include "nefgl/io.hpp"
#include "nefgl/lagrange.hpp"
#include "nefgl/random_cases.hpp"
#include "nefgl/rouques.hpp"

namespace nefgl {

bool RunReport::pass() const {
  for (const auto& r : results)
    if (!r.pass()) return false;
  return true;
}

nlohmann::json RunReport::to_json(bool with_timing) const {
  std::string desc = command + ";" + suite + ";" + std::to_string(seed) + ";" + std::to_string(cases);
  nlohmann::json out = {{"command", command},   {"suite", suite},
                        {"seed", seed},         {"cases", cases},
                        {"inputs", input_digest(desc)}, {"status", pass() ? "pass" : "fail"}};
  std::vector<const CheckResult*> sorted;
  for (const auto& r : results) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->name < b->name; });
  nlohmann::json rs = nlohmann::json::array();
  for (const auto* r : sorted) {
    nlohmann::json e = {{"name", r->name}, {"status", r->pass() ? "pass" : "fail"},
                        {"cases", r->cases}, {"failures", r->failures}};
    if (!r->witness.is_null()) e["witness"] = r->witness;
    rs.push_back(e);
  }
  out["results"] = rs;
  if (with_timing) out["wall_time_s"] = wall_time_s;
  return out;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"composition", "prop34",  "theorem52", "theorem54",
                                                 "lagrange",    "recover", "rouques"};
  return names;
}

std::string input_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<RatMatrix> linear_coefficients(const PolyMatrix& b) {
  std::size_t n = b.size();
  std::vector<RatMatrix> out(b.nvars(), RatMatrix(n, n));
  for (std::size_t k = 0; k < b.nvars(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[k](i, j) = b(i, j).coefficient(ExponentVector::unit(b.nvars(), k));
  return out;
}

std::size_t recover_round_trip_mismatches(const PolyMatrix& v, const MeasureTable& table) {
  std::size_t n = table.n;
  int d = table.max_degree;
  if (d < 2) return 0;
  TruncSeries f(n, d);
  for (const auto& [k, mu] : table.mu) f.set_coefficient(k, mu);
  TruncSeries finv = series_inverse(f);
  SeriesVector mean;
  for (std::size_t i = 0; i < n; ++i) mean.push_back((f.derivative(i).shift(i) * finv).truncate(d));
  // Invert m(z) = L z + N(z) by fixed-point iteration z = L^{-1}(m - N(z)).
  RationalVector lin(n);
  SeriesVector nonlin;
  for (std::size_t i = 0; i < n; ++i) {
    lin[i] = mean[i].coefficient(ExponentVector::unit(n, i));
    if (sgn(lin[i]) == 0) throw PreconditionError("mean map is not locally invertible");
    TruncSeries rest = mean[i];
    rest.set_coefficient(ExponentVector::unit(n, i), 0);
    nonlin.push_back(rest);
  }
  SeriesVector h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = (1 / lin[i]) * TruncSeries::variable(n, d, i);
  for (int it = 0; it < d; ++it) {
    SeriesVector next;
    for (std::size_t i = 0; i < n; ++i)
      next.push_back((1 / lin[i]) * (TruncSeries::variable(n, d, i) - series_compose(nonlin[i], h)));
    h = std::move(next);
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TruncSeries vij = series_compose(mean[i].derivative(j).shift(j), h).truncate(d - 2);
      if (!(vij == TruncSeries::from_poly(v(i, j), d - 2))) ++bad;
    }
  return bad;
}

namespace {

nlohmann::json matrix_witness(const PolyMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

void record(CheckResult& r, bool ok, const std::function<nlohmann::json()>& witness) {
  ++r.cases;
  if (ok) return;
  ++r.failures;
  if (r.witness.is_null()) r.witness = witness();
}

std::vector<CheckResult> suite_composition(std::uint64_t seed, std::size_t cases) {
  CaseGenerator gen(seed);
  CheckResult r{"composition"};
  for (std::size_t t = 0; t < cases; ++t) {
    std::size_t n = 1 + t % 3;
    auto cat = casalis_catalog(n);
    const auto& [tag, spec] = cat[gen.uniform_int(0, static_cast<int>(cat.size()) - 1)];
    GroupElement g = gen.group_element(n);
    GroupElement g1 = gen.group_element(n);
    auto fails = [&](const GroupElement& x) {
      auto lhs = transform_variance(x, transform_variance(g1, spec.V));
      auto rhs = transform_variance(g1 * x, spec.V);
      return !same_function(lhs, rhs);
    };
    bool bad = fails(g);
    record(r, !bad, [&] {
      GroupElement small = shrink_group(g, fails);
      return nlohmann::json{{"family", to_string(tag)}, {"n", n}, {"g", group_to_json(small)}, {"g1", group_to_json(g1)}};
    });
  }
  return {r};
}

std::vector<CheckResult> suite_symmetry(std::uint64_t seed, std::size_t cases) {
  CheckResult cat_check{"symmetry-catalog"};
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& [tag, spec] : casalis_catalog(n)) {
      auto w = check_prop34_symmetry(spec.V);
      record(cat_check, !w, [&] {
        return nlohmann::json{{"family", to_string(tag)}, {"n", n}, {"difference", w->difference.to_string()}};
      });
    }
  CaseGenerator gen(seed);
  CheckResult stable{"symmetry-stability"};
  for (std::size_t t = 0; t < cases; ++t) {
    std::size_t n = 2 + t % 2;
    auto cat = casalis_catalog(n);
    const auto& [tag, spec] = cat[gen.uniform_int(0, static_cast<int>(cat.size()) - 1)];
    GroupElement g = gen.group_element(n);
    auto lowered = lower_to_polymatrix(transform_variance(g, spec.V));
    bool ok = lowered && !check_prop34_symmetry(*lowered);
    record(stable, ok, [&] { return nlohmann::json{{"family", to_string(tag)}, {"g", group_to_json(g)}}; });
  }
  return {cat_check, stable};
}

std::vector<CheckResult> suite_gc_degree(std::uint64_t seed, std::size_t cases) {
  CaseGenerator gen(seed);
  CheckResult poly{"gc-polynomial-degree3"};
  CheckResult closed{"gc-closed-form"};
  for (std::size_t t = 0; t < cases; ++t) {
    std::size_t n = 1 + t % 3;
    auto cat = casalis_catalog(n);
    const auto& [tag, spec] = cat[gen.uniform_int(0, static_cast<int>(cat.size()) - 1)];
    RationalVector c = gen.vector(n);
    auto r = transform_variance(GroupElement::g_c(c), spec.V);
    bool ok = r.is_polynomial() && r.numerators.degree() <= 3;
    auto witness = [&] {
      return nlohmann::json{{"family", to_string(tag)}, {"n", n}, {"c", group_to_json(GroupElement::g_c(c))}};
    };
    record(poly, ok, witness);
    auto sq = simple_quadratic_decomposition(spec.V);
    PolyMatrix expect = sq->a * transform_closed_form_gc(c, ClosedFormPart::RankOne, {}) +
                        transform_closed_form_gc(c, ClosedFormPart::Linear, linear_coefficients(sq->B)) +
                        transform_closed_form_gc(c, ClosedFormPart::Constant, {sq->C});
    auto lowered = lower_to_polymatrix(r);
    record(closed, lowered && *lowered == expect, witness);
  }
  return {poly, closed};
}

std::vector<CheckResult> suite_orbits(std::uint64_t seed, std::size_t cases) {
  CaseGenerator gen(seed);
  CheckResult eq{"orbit-cubic-condition"};
  for (std::size_t t = 0; t < cases; ++t) {
    std::size_t n = 1 + t % 3;
    auto cat = casalis_catalog(n);
    const auto& [tag, spec] = cat[gen.uniform_int(0, static_cast<int>(cat.size()) - 1)];
    // Half of the draws use 0/1 entries, where the cubic condition often holds.
    RationalVector c = t % 2 ? gen.vector(n) : gen.vector(n, 1, 1);
    for (auto& x : c) x = abs(x);
    auto lowered = lower_to_polymatrix(transform_variance(GroupElement::g_c(c), spec.V));
    bool quadratic = lowered && lowered->degree() <= 2;
    record(eq, check_cubic_condition(spec.V, c) == quadratic, [&] {
      return nlohmann::json{{"family", to_string(tag)}, {"c", group_to_json(GroupElement::g_c(c))}};
    });
  }
  CheckResult wit{"orbit-witnesses"};
  for (std::size_t n = 1; n <= 3; ++n) {
    auto w = witness_II_to_III(n);
    record(wit, w.matches, [&] { return nlohmann::json{{"witness", "II->III"}, {"n", n}}; });
  }
  for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    auto w = witness_Ik_chain(n, k, -1);
    record(wit, w.matches, [&] {
      return nlohmann::json{{"witness", "I_k chain"}, {"n", n}, {"k", k}, {"actual", matrix_witness(w.stages.back())}};
    });
  }
  return {eq, wit};
}

std::vector<CheckResult> suite_lagrange(std::uint64_t seed, std::size_t cases) {
  CaseGenerator gen(seed);
  CheckResult r{"lagrange-two-sided"};
  for (std::size_t t = 0; t < cases; ++t) {
    std::size_t n = 1 + t % 3;
    int d = n == 3 ? 4 : 5;
    LagrangeProblem p;
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly gi = gen.polynomial(n, 2);
      gi.add_term(ExponentVector(n), gen.nonzero_rational() - gi.constant_term());
      p.g.push_back(TruncSeries::from_poly(gi, d));
    }
    p.g0 = TruncSeries::from_poly(gen.polynomial(n, 2), d);
    TruncSeries lhs = series_compose(p.g0, solve_functional_equation(p.g));
    auto layout = SeriesLayout::get(n, d);
    bool ok = true;
    std::string where;
    for (std::size_t idx = 0; idx < layout->size() && ok; ++idx) {
      ExponentVector k = layout->exponent(idx);
      if (lhs[idx] != lagrange_coefficient(p, k)) {
        ok = false;
        where = MultiPoly::monomial(k, 1).to_string('z');
      }
    }
    record(r, ok, [&] {
      nlohmann::json gs = nlohmann::json::array();
      for (const auto& gi : p.g) gs.push_back(gi.to_poly().to_string('z'));
      return nlohmann::json{{"g", gs}, {"g0", p.g0.to_poly().to_string('z')}, {"coefficient", where}};
    });
  }
  return {r};
}

std::vector<CheckResult> suite_recover(std::uint64_t, std::size_t cases) {
  CheckResult r{"recover-round-trip"};
  std::vector<PolyMatrix> sources;
  for (std::size_t n = 1; n <= 3; ++n) {
    sources.push_back(casalis_representative({CasalisType::III, 0}, n).V);
    sources.push_back(casalis_representative({CasalisType::I, n}, n).V);
  }
  std::size_t runs = std::min(cases, sources.size());
  for (std::size_t t = 0; t < runs; ++t) {
    const PolyMatrix& v = sources[t];
    int d = v.size() == 3 ? 6 : 8;
    auto table = recover_measure(v, d);
    record(r, recover_round_trip_mismatches(v, table) == 0,
           [&] { return nlohmann::json{{"variance", matrix_witness(v)}, {"max_degree", d}}; });
  }
  return {r};
}

CheckResult rouques_convolution(std::uint64_t seed, std::size_t cases) {
  CaseGenerator gen(seed);
  Semigroup poisson = Semigroup::poisson();
  CheckResult conv{"rouques-convolution"};
  for (std::size_t t = 0; t < cases; ++t) {
    HElement h{gen.uniform(0.2, 3.0), {gen.uniform(0.0, 1.0)}};
    unsigned k = static_cast<unsigned>(gen.uniform_int(0, 15));
    double res = convolution_identity_residual(poisson, h, {k});
    record(conv, res < 1e-12, [&] {
      return nlohmann::json{{"lambda", h.lambda}, {"c", h.c[0]}, {"k", k}, {"residual", res}};
    });
  }
  for (int t = 0; t < 5; ++t) {
    double lambda = gen.uniform(0.5, 2.0), c = gen.uniform(0.2, 1.5), x = gen.uniform(0.2, 2.0);
    double res = gaussian_convolution_residual(lambda, c, x);
    record(conv, res < 1e-6, [&] {
      return nlohmann::json{{"semigroup", "gaussian"}, {"lambda", lambda}, {"c", c}, {"x", x}, {"residual", res}};
    });
  }
  return conv;
}

CheckResult rouques_normalization() {
  CheckResult norm{"rouques-normalization"};
  for (double c : {0.0, 0.2, 0.5, 0.9}) {
    double s = normalization_sum(Semigroup::poisson(), {1.0, {c}}, 200);
    record(norm, s >= 1 - 1e-8 && s <= 1 + 1e-12, [&] { return nlohmann::json{{"c", c}, {"kmax", 200}, {"sum", s}}; });
  }
  return norm;
}

CheckResult rouques_cumulant() {
  CheckResult cum{"rouques-cumulant"};
  auto chk = cumulant_equation_check(Semigroup::poisson(PoissonGenerator::Counting), {1.0, {0.3}}, {-2.0}, 200);
  record(cum, chk.residual < 1e-8, [&] { return nlohmann::json{{"semigroup", "poisson"}, {"residual", chk.residual}}; });
  auto nb = cumulant_equation_check(Semigroup::negative_binomial({0.2, 0.3}), {1.0, {0.2, 0.1}}, {-1.0, -1.0}, 200);
  record(cum, nb.residual < 1e-6, [&] { return nlohmann::json{{"semigroup", "negbin"}, {"residual", nb.residual}}; });
  return cum;
}

std::vector<CheckResult> suite_rouques(std::uint64_t seed, std::size_t cases) {
  return {rouques_convolution(seed, cases), rouques_normalization(), rouques_cumulant()};
}

}  // namespace

RunReport run_verify_suite(const std::string& suite, std::uint64_t seed, std::size_t cases) {
  auto start = std::chrono::steady_clock::now();
  RunReport report{"verify", suite, seed, cases, {}, 0};
  auto add = [&](std::vector<CheckResult> rs) {
    for (auto& r : rs) report.results.push_back(std::move(r));
  };
  auto run_one = [&](const std::string& s) {
    if (s == "composition") add(suite_composition(seed, cases));
    else if (s == "prop34") add(suite_symmetry(seed, cases));
    else if (s == "theorem52") add(suite_gc_degree(seed, cases));
    else if (s == "theorem54") add(suite_orbits(seed, cases));
    else if (s == "lagrange") add(suite_lagrange(seed, cases));
    else if (s == "recover") add(suite_recover(seed, cases));
    else if (s == "rouques") add(suite_rouques(seed, cases));
    else throw PreconditionError("unknown suite '" + s + "'");
  };
  if (suite == "all") {
    for (const auto& s : verify_suite_names()) run_one(s);
  } else {
    run_one(suite);
  }
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RunReport run_rouques_check(const std::string& suite, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  RunReport report{"rouques-check", suite, seed, 20, {}, 0};
  if (suite == "convolution") report.results.push_back(rouques_convolution(seed, 20));
  else if (suite == "cumulant") report.results.push_back(rouques_cumulant());
  else if (suite == "normalization") report.results.push_back(rouques_normalization());
  else throw PreconditionError("unknown suite '" + suite + "'");
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace nefgl
