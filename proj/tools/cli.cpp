#include "cli.hpp"

#include "toricdd/generators.hpp"
#include "toricdd/groebner.hpp"
#include "toricdd/invariants.hpp"
#include "toricdd/monomial_sorting.hpp"
#include "toricdd/poset.hpp"
#include "toricdd/stanley_reisner.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace toricdd::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json big_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max()) {
    return value.convert_to<long long>();
  }
  return value.str();
}

Json poly_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) {
    out.push_back(big_to_json(c));
  }
  return out;
}

std::string join(const std::vector<int>& values, const std::string& separator) {
  std::string out;
  for (std::size_t s = 0; s < values.size(); ++s) {
    out += (s ? separator : "") + std::to_string(values[s]);
  }
  return out;
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (config.format == f) {
      return;
    }
  }
  throw UsageError("format `" + config.format + "` is not available for `" + config.command + "`");
}

Shape shape_of(const RunConfig& config) {
  if (config.m < 1 || config.n < 1 || config.r < 1) {
    throw UsageError("m, n and r must be positive integers");
  }
  return Shape(config.m, config.n, config.r);
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open poset file " + path);
  }
  return read_poset(in);
}

Json facet_to_json(const WordCode& word, const Facet& facet) {
  Json vertices = Json::array();
  for (const auto& v : facet.vertices) {
    vertices.push_back({v.row, v.col});
  }
  Json j;
  j["word"] = word.letters();
  j["vertices"] = vertices;
  j["g"] = facet.g;
  j["h"] = facet.h;
  return j;
}

void print_facet(std::ostream& out, const RunConfig& config, const WordCode& word, const Facet& facet) {
  require_format(config, {"text", "json"});
  if (config.format == "json") {
    out << facet_to_json(word, facet).dump() << '\n';
    return;
  }
  out << "word " << word.letters() << '\n'
      << "vertices " << to_string(facet.vertices) << '\n'
      << "g " << join(facet.g, " ") << '\n'
      << "h " << join(facet.h, " ") << '\n';
}

// ---- commands ----

int cmd_invariants(const RunConfig& config, std::ostream& out) {
  require_format(config, {"text", "json", "csv"});
  const auto report = compute_invariants(shape_of(config));
  if (config.format == "json") {
    out << to_json(report) << '\n';
  } else if (config.format == "csv") {
    out << "mu,dim,multiplicity,regularity,a_invariant,gorenstein,h_polynomial\n"
        << report.mu << ',' << report.krull_dim << ',' << report.multiplicity << ',' << report.regularity << ','
        << report.a_invariant << ',' << (report.gorenstein ? "true" : "false") << ',';
    for (std::size_t s = 0; s < report.h_polynomial.coefficients().size(); ++s) {
      out << (s ? " " : "") << report.h_polynomial.coefficients()[s];
    }
    out << '\n';
  } else {
    out << "mu " << report.mu << '\n'
        << "dim " << report.krull_dim << '\n'
        << "multiplicity " << report.multiplicity << '\n'
        << "regularity " << report.regularity << '\n'
        << "a_invariant " << report.a_invariant << '\n'
        << "gorenstein " << (report.gorenstein ? "true" : "false") << '\n'
        << "h_polynomial " << report.h_polynomial.to_string() << '\n';
  }
  return 0;
}

int cmd_generators(const RunConfig& config, std::ostream& out) {
  require_format(config, {"text", "json", "csv"});
  const Shape shape = shape_of(config);
  const auto total = compute_invariants(shape).mu;
  if (total > config.budget) {
    throw BudgetExceeded("generators: " + total.str() + " generators exceed budget");
  }
  Json j;
  if (config.format == "csv") {
    out << "family,binomial\n";
  }
  for (Family f : {Family::M, Family::N, Family::R, Family::T}) {
    const auto binomials = family(f, shape);
    if (config.format == "json") {
      Json list = Json::array();
      for (const auto& b : binomials) {
        list.push_back(b.to_string());
      }
      j[to_string(f)] = list;
    } else if (config.format == "csv") {
      for (const auto& b : binomials) {
        out << to_string(f) << ',' << b.to_string() << '\n';
      }
    } else {
      out << "# " << to_string(f) << " (" << binomials.size() << ")\n";
      for (const auto& b : binomials) {
        out << b.to_string() << '\n';
      }
    }
  }
  if (config.format == "json") {
    out << j.dump() << '\n';
  }
  return 0;
}

int cmd_hilbert(const RunConfig& config, std::ostream& out) {
  require_format(config, {"text", "json", "csv"});
  if (config.max_degree < 0) {
    throw UsageError("--max-degree must be nonnegative");
  }
  std::vector<BigInt> values;
  if (!config.poset_file.empty()) {
    const Poset poset = load_poset(config.poset_file);
    for (int d = 0; d <= config.max_degree; ++d) {
      values.push_back(order_preserving_map_count(poset, d));
    }
  } else {
    const Shape shape = shape_of(config);
    for (int d = 0; d <= config.max_degree; ++d) {
      values.push_back(hilbert_function(shape, d));
    }
  }
  if (config.format == "json") {
    Json list = Json::array();
    for (const auto& v : values) {
      list.push_back(big_to_json(v));
    }
    Json j;
    j["hilbert_function"] = list;
    out << j.dump() << '\n';
  } else {
    if (config.format == "csv") {
      out << "degree,value\n";
    }
    for (std::size_t d = 0; d < values.size(); ++d) {
      out << d << (config.format == "csv" ? "," : " ") << values[d] << '\n';
    }
  }
  return 0;
}

IntPolynomial descents_over_extensions(const Poset& poset, unsigned long long budget) {
  std::vector<BigInt> counts(poset.size() + 1);
  LinearExtensionGenerator extensions(poset);
  unsigned long long seen = 0;
  while (auto extension = extensions.next()) {
    if (++seen > budget) {
      throw BudgetExceeded("hpoly: linear extensions exceed budget " + std::to_string(budget));
    }
    ++counts[descent_count(*extension, poset)];
  }
  return IntPolynomial(std::move(counts));
}

int cmd_hpoly(const RunConfig& config, std::ostream& out) {
  require_format(config, {"text", "json", "csv"});
  const IntPolynomial h = config.poset_file.empty()
                              ? h_poly_via_series(shape_of(config))
                              : descents_over_extensions(load_poset(config.poset_file), config.budget);
  if (config.format == "json") {
    Json j;
    j["h_polynomial"] = poly_to_json(h);
    out << j.dump() << '\n';
  } else if (config.format == "csv") {
    out << "power,coefficient\n";
    for (std::size_t s = 0; s < h.coefficients().size(); ++s) {
      out << s << ',' << h.coefficients()[s] << '\n';
    }
  } else {
    out << h.to_string() << '\n';
  }
  return 0;
}

int cmd_facets(const RunConfig& config, std::ostream& out) {
  require_format(config, {"text", "json", "csv", "words", "paths"});
  const Shape shape = shape_of(config);
  ParametricFacets facets(shape, config.budget);
  Json list = Json::array();
  if (config.format == "csv") {
    out << "index,word,g,h,vertices\n";
  }
  std::size_t index = 0;
  while (auto item = facets.next()) {
    const auto& [word, facet] = *item;
    ++index;
    if (config.format == "json") {
      list.push_back(facet_to_json(word, facet));
    } else if (config.format == "csv") {
      out << index << ',' << word.letters() << ',' << join(facet.g, " ") << ',' << join(facet.h, " ") << ",\""
          << to_string(facet.vertices) << "\"\n";
    } else if (config.format == "words") {
      out << word.letters() << '\n';
    } else if (config.format == "paths") {
      out << "F" << index << ' ' << word.letters() << " g=(" << join(facet.g, ",") << ") h=(" << join(facet.h, ",")
          << ")\n";
      for (std::size_t k = 0; k < facet.paths.size(); ++k) {
        out << "  path " << k + 1 << ": " << facet.paths[k].front().to_string() << " -> "
            << facet.paths[k].back().to_string() << "  " << to_string(facet.paths[k]) << '\n';
      }
    } else {
      out << index << ' ' << word.letters() << ' ' << to_string(facet.vertices) << '\n';
    }
  }
  if (config.format == "json") {
    out << list.dump() << '\n';
  }
  return 0;
}

int cmd_word2facet(const RunConfig& config, std::ostream& out) {
  const Shape shape = shape_of(config);
  const WordCode word(config.word, shape);
  print_facet(out, config, word, word_to_facet(word, shape));
  return 0;
}

int cmd_facet2word(const RunConfig& config, std::ostream& out) {
  require_format(config, {"text", "json"});
  const Shape shape = shape_of(config);
  const Facet facet = facet_from_vertices(parse_vertices(config.vertices), shape);
  const WordCode word = facet_to_word(facet, shape);
  if (config.format == "json") {
    out << facet_to_json(word, facet).dump() << '\n';
  } else {
    out << word.letters() << '\n';
  }
  return 0;
}

int cmd_extend(const RunConfig& config, std::ostream& out) {
  const Shape shape = shape_of(config);
  const Facet facet = extend_to_facet(parse_vertices(config.vertices), shape);
  print_facet(out, config, facet_to_word(facet, shape), facet);
  return 0;
}

// ---- verify harness ----

enum class Status { Pass, Fail, Skip };

struct CheckResult {
  Status status = Status::Pass;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<CheckResult()> body;
};

CheckResult verdict(bool ok, std::string detail = {}) { return {ok ? Status::Pass : Status::Fail, std::move(detail)}; }

std::vector<Check> formula_checks(const Shape& shape, const RunConfig& config) {
  const auto budget = config.budget;
  std::vector<Check> checks;
  checks.push_back({"sorting relations = M u N u R u T", [shape] {
                      auto relations = sorting_relations(shape);
                      auto generators = minimal_generators(shape);
                      std::sort(relations.begin(), relations.end());
                      std::sort(generators.begin(), generators.end());
                      return verdict(relations == generators, std::to_string(relations.size()) + " = " +
                                                                  std::to_string(generators.size()));
                    }});
  checks.push_back({"generators and minors lie in ker(phi)", [shape] {
                      bool ok = true;
                      for (const auto& b : sorting_relations(shape)) {
                        ok = ok && in_kernel(b, shape);
                      }
                      for (const auto& minor : distinct_minors(shape)) {
                        ok = ok && in_kernel(minor.as_binomial(), shape);
                      }
                      return verdict(ok);
                    }});
  checks.push_back({"minor decompositions expand back", [shape] {
                      const auto generators = minimal_generators(shape);
                      const bool ok = std::all_of(generators.begin(), generators.end(), [&](const RBinomial& g) {
                        return decompose_into_minors(g, shape).expand() == SparsePoly::from_binomial(g);
                      });
                      return verdict(ok, std::to_string(generators.size()) + " generators");
                    }});
  checks.push_back({"mu = number of minimal generators", [shape] {
                      const auto mu = compute_invariants(shape).mu;
                      const auto count = minimal_generators(shape).size();
                      return verdict(mu == count, mu.str() + " = " + std::to_string(count));
                    }});
  checks.push_back({"h-polynomial: series = words = linear extensions", [shape, budget] {
                      const auto series = h_poly_via_series(shape);
                      const auto words = h_poly_via_words(shape, budget);
                      const auto extensions = h_poly_via_linear_extensions(shape, budget);
                      return verdict(series == words && words == extensions, series.to_string());
                    }});
  checks.push_back({"multiplicity = h(1); Gorenstein = palindromic = pure", [shape] {
                      const auto report = compute_invariants(shape);
                      const bool palindromic = report.h_polynomial.is_palindromic();
                      const bool pure = is_pure(make_pmnr(shape.m(), shape.n(), shape.r()));
                      return verdict(report.multiplicity == report.h_polynomial.evaluate(1) &&
                                         report.gorenstein == palindromic && palindromic == pure,
                                     std::string("gorenstein ") + (report.gorenstein ? "true" : "false"));
                    }});
  checks.push_back({"symmetry under permutations of (m,n,r)",
                    [shape, budget] { return verdict(check_symmetry(shape, budget)); }});
  checks.push_back({"Hilbert function = order-preserving maps", [shape, config] {
                      const Poset poset = make_pmnr(shape.m(), shape.n(), shape.r());
                      if (poset.size() > 12) {
                        return CheckResult{Status::Skip, "poset too large"};
                      }
                      const int top = std::min(config.max_degree, 4);
                      bool ok = true;
                      for (int d = 0; d <= top; ++d) {
                        ok = ok && hilbert_function(shape, d) == order_preserving_map_count(poset, d);
                      }
                      return verdict(ok, "d <= " + std::to_string(top));
                    }});
  return checks;
}

std::vector<Check> complex_checks(const Shape& shape, const RunConfig& config) {
  const auto budget = config.budget;
  std::vector<Check> checks;
  checks.push_back({"facets: parametric = brute force", [shape, budget] {
                      if (shape.variable_count() > 64) {
                        return CheckResult{Status::Skip, "more than 64 vertices"};
                      }
                      std::vector<VertexSet> parametric;
                      for (auto& f : facets_parametric(shape, budget)) {
                        parametric.push_back(std::move(f.vertices));
                      }
                      std::sort(parametric.begin(), parametric.end());
                      const auto brute = facets_bruteforce(shape);
                      return verdict(parametric == brute, std::to_string(parametric.size()) + " = " +
                                                              std::to_string(brute.size()));
                    }});
  checks.push_back({"facets: count = multiplicity, size = dim", [shape, budget] {
                      const auto facets = facets_parametric(shape, budget);
                      const bool sizes = std::all_of(facets.begin(), facets.end(), [&](const Facet& f) {
                        return static_cast<int>(f.vertices.size()) == shape.dimension();
                      });
                      return verdict(sizes && compute_invariants(shape).multiplicity == facets.size(),
                                     std::to_string(facets.size()) + " facets");
                    }});
  checks.push_back({"facets: word, vertex and extension round trips", [shape, budget] {
                      ParametricFacets facets(shape, budget);
                      bool ok = true;
                      while (auto item = facets.next()) {
                        const auto& [word, facet] = *item;
                        ok = ok && facet_to_word(facet, shape) == word &&
                             facet_from_vertices(facet.vertices, shape) == facet &&
                             extend_to_facet(facet.vertices, shape) == facet;
                      }
                      return verdict(ok);
                    }});
  checks.push_back({"complex h-vector = h-polynomial", [shape] {
                      if (shape.variable_count() > 12) {
                        return CheckResult{Status::Skip, "more than 12 vertices"};
                      }
                      const auto h = complex_h_vector(shape);
                      return verdict(h == h_poly_via_series(shape), h.to_string());
                    }});
  return checks;
}

std::vector<Check> groebner_checks(const Shape& shape, const RunConfig& config) {
  const auto budget = config.budget;
  std::vector<Check> checks;
  checks.push_back({"Groebner: S-pairs of the minors reduce to 0", [shape, budget] {
                      const auto basis = minor_basis(shape);
                      return verdict(verify_groebner(basis, basis, budget),
                                     std::to_string(basis.size()) + " minors");
                    }});
  checks.push_back({"Groebner: initial ideal = conflict pairs", [shape] {
                      const auto basis = minor_basis(shape);
                      const auto leads = initial_ideal_minimal_generators(basis);
                      const auto pairs = to_vertex_pairs(leads, shape);
                      const auto expected = initial_generators(shape);
                      return verdict(pairs == expected, std::to_string(pairs.size()) + " = " +
                                                            std::to_string(expected.size()));
                    }});
  checks.push_back({"Groebner: sorting relations reduce to 0", [shape] {
                      const auto basis = minor_basis(shape);
                      const auto relations = sorting_relations(shape);
                      const bool ok = std::all_of(relations.begin(), relations.end(), [&](const RBinomial& b) {
                        return reduce(SparsePoly::from_binomial(b), basis).is_zero();
                      });
                      return verdict(ok);
                    }});
  return checks;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
  }
  return "?";
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  require_format(config, {"text", "json"});
  const Shape shape = shape_of(config);
  if (config.level != "formulas" && config.level != "complex" && config.level != "groebner") {
    throw UsageError("unknown level `" + config.level + "`");
  }
  auto checks = formula_checks(shape, config);
  if (config.level != "formulas") {
    auto more = complex_checks(shape, config);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  if (config.level == "groebner") {
    auto more = groebner_checks(shape, config);
    checks.insert(checks.end(), more.begin(), more.end());
  }

  std::vector<std::future<CheckResult>> pending;
  for (const auto& check : checks) {
    pending.push_back(std::async(std::launch::async, [body = check.body] {
      try {
        return body();
      } catch (const BudgetExceeded& e) {
        return CheckResult{Status::Skip, e.what()};
      } catch (const std::exception& e) {
        return CheckResult{Status::Fail, e.what()};
      }
    }));
  }

  bool all_passed = true;
  Json report;
  report["shape"] = {shape.m(), shape.n(), shape.r()};
  report["level"] = config.level;
  report["checks"] = Json::array();
  for (std::size_t c = 0; c < checks.size(); ++c) {
    const CheckResult result = pending[c].get();
    all_passed = all_passed && result.status != Status::Fail;
    if (config.format == "json") {
      Json entry;
      entry["name"] = checks[c].name;
      entry["status"] = status_name(result.status);
      entry["detail"] = result.detail;
      report["checks"].push_back(entry);
    } else {
      out << '[' << status_name(result.status) << "] " << checks[c].name;
      if (!result.detail.empty()) {
        out << " (" << result.detail << ')';
      }
      out << '\n';
    }
  }
  if (config.format == "json") {
    report["passed"] = all_passed;
    out << report.dump() << '\n';
  } else {
    out << (all_passed ? "verify " : "verify FAILED ") << shape.to_string() << '\n';
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::vector<std::pair<std::string, int (*)(const RunConfig&, std::ostream&)>> commands = {
      {"invariants", cmd_invariants}, {"generators", cmd_generators}, {"hilbert", cmd_hilbert},
      {"hpoly", cmd_hpoly},           {"facets", cmd_facets},         {"word2facet", cmd_word2facet},
      {"facet2word", cmd_facet2word}, {"extend", cmd_extend},         {"verify", cmd_verify},
  };
  try {
    if (config.budget == 0) {
      throw UsageError("--budget must be positive");
    }
    for (const auto& [name, handler] : commands) {
      if (name == config.command) {
        return handler(config, out);
      }
    }
    throw UsageError("unknown command `" + config.command + "`");
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace toricdd::cli
