// jacobipoly command-line front end.
//
// Exit codes: 0 success / identity satisfied, 1 well-formed negative result,
// 2 usage, parse or ring error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacobipoly/jacobipoly.hpp"
#include "jacobipoly/report.hpp"

namespace {

using namespace jacobipoly;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::string output = "human";
  std::string ring = "int";
  std::string form = "j1";
  std::string poly;
  std::uint32_t max_deg = 1;
  std::uint64_t coeff_bound = 4;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;
  std::uint64_t n = 0, m = 0, p = 2;
};

bool json_mode(const Options& o) { return o.output == "json"; }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run_verify(const Options& o) {
  auto form = parse_form(o.form);
  return std::visit(
      [&](const auto& ring) {
        using Ring = std::decay_t<decltype(ring)>;
        auto p = parse_poly(o.poly, bivariate_vars(), ring);
        auto w = witness_term(defect(p, form));
        if (json_mode(o)) {
          json j{{"verdict", w ? "violated" : "satisfied"},
                 {"ring", ring.name()},
                 {"form", to_string(form)},
                 {"polynomial", to_string(p)}};
          if (w) j["witness"] = witness_json<Ring>(ring, w->monomial, w->coeff);
          emit(j);
        } else if (w) {
          typename MultiPoly<Ring>::Term t = *w;
          std::cout << "violated: " << to_string(p) << " does not satisfy " << to_string(form)
                    << " over " << ring.name() << "\nwitness: "
                    << term_to_string(ring, trivariate_vars(), t, true) << "\n";
        } else {
          std::cout << "satisfied: " << to_string(p) << " satisfies " << to_string(form)
                    << " over " << ring.name() << "\n";
        }
        return w ? kNegative : kOk;
      },
      parse_ring_spec(o.ring));
}

int run_classify(const Options& o) {
  return std::visit(
      [&](const auto& ring) {
        using Ring = std::decay_t<decltype(ring)>;
        auto p = parse_poly(o.poly, bivariate_vars(), ring);
        auto result = classify(p);
        json j = to_json(result, ring);
        bool solved = std::holds_alternative<Solution<Ring>>(result);
        if (json_mode(o)) {
          emit(j);
        } else if (solved) {
          const auto& family = std::get<Solution<Ring>>(result).family;
          std::cout << "solution: " << to_string(p) << " is in family " << family_name<Ring>(family);
          for (const auto& [k, v] : family_param_strings<Ring>(ring, family)) std::cout << " " << k << "=" << v;
          std::cout << "\n";
        } else {
          std::cout << "not_jacobi: " << to_string(p) << "\nwitness: "
                    << j["witness"]["term"].template get<std::string>() << "\n";
        }
        return solved ? kOk : kNegative;
      },
      parse_ring_spec(o.ring));
}

template <CoefficientRing Ring>
int enumerate_over(const Ring& ring, const Options& o) {
  if constexpr (std::same_as<Ring, UnivariateExtension>) {
    throw UnsupportedSpec("cannot enumerate over " + ring.name() + ": coefficient set is infinite");
  } else {
    auto form = parse_form(o.form);
    EnumSpace<Ring> space(ring, o.max_deg, o.coeff_bound, o.budget);
    auto t0 = std::chrono::steady_clock::now();
    auto report = enumerate_solutions(space, form, o.threads);
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    json j = to_json(report);
    if (json_mode(o)) {
      j["elapsed_ms"] = elapsed.count();
      emit(j);
    } else {
      std::cout << "ring " << ring.name() << ", form " << to_string(form) << ", max_deg " << o.max_deg
                << ": " << report.solutions.size() << " solutions among " << space.candidate_count()
                << " candidates (" << elapsed.count() << " ms)\n";
      for (const auto& p : report.solutions) std::cout << "  " << to_string(p) << "\n";
      std::cout << "agreement: " << (report.agreement ? "yes" : "no") << "\n"
                << "degree bound (<= 1 per variable): " << (degree_bound_report(report) ? "yes" : "no")
                << "\n";
    }
    return report.agreement ? kOk : kNegative;
  }
}

int run_enumerate(const Options& o) {
  return std::visit([&](const auto& ring) { return enumerate_over(ring, o); }, parse_ring_spec(o.ring));
}

int run_lucas(const Options& o) {
  auto b = lucas_breakdown(o.n, o.m, o.p);
  if (json_mode(o)) {
    json factors = json::array();
    for (std::size_t i = 0; i < b.factors.size(); ++i)
      factors.push_back({{"digit", i},
                         {"n_i", b.factors[i].n_digit},
                         {"m_i", b.factors[i].m_digit},
                         {"residue", b.factors[i].residue}});
    emit({{"n", o.n}, {"m", o.m}, {"p", o.p}, {"residue", b.residue}, {"factors", factors}});
  } else {
    std::cout << "C(" << o.n << "," << o.m << ") = " << b.residue << " mod " << o.p << "\n";
    for (std::size_t i = 0; i < b.factors.size(); ++i)
      std::cout << "  digit " << i << ": C(" << b.factors[i].n_digit << "," << b.factors[i].m_digit
                << ") = " << b.factors[i].residue << "\n";
  }
  return kOk;
}

int run_families(const Options& o) {
  auto spec = parse_ring_spec(o.ring);
  auto ch = characteristic(spec);
  auto fams = families_for_characteristic(ch);
  auto consts = constant_solutions(ch);
  if (json_mode(o)) {
    json list = json::array();
    for (const auto& f : fams) list.push_back({{"name", f.name}, {"shape", f.shape}, {"condition", f.condition}});
    emit({{"ring", ring_spec_string(spec)},
          {"characteristic", ch},
          {"families", list},
          {"nonzero_constant_solutions", consts.nonzero_constants}});
  } else {
    std::cout << "ring " << ring_spec_string(spec) << " (characteristic " << ch << ")\n";
    for (const auto& f : fams) std::cout << "  " << f.name << ": " << f.shape << " with " << f.condition << "\n";
    std::cout << "constants: " << consts.description << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Polynomial solutions of Jacobi's identity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", o.output, "Output mode")->check(CLI::IsMember({"human", "json"}));

  auto* verify = app.add_subcommand("verify", "Check a bivariate polynomial against an equation form");
  verify->add_option("--ring", o.ring, "int | zp:<p> | zp:<p>[<var>]")->required();
  verify->add_option("--form", o.form, "j1 | j2 | j5 | j6");
  verify->add_option("poly", o.poly, "Polynomial in x, y")->required();

  auto* cls = app.add_subcommand("classify", "Classify a bivariate polynomial");
  cls->add_option("--ring", o.ring, "int | zp:<p> | zp:<p>[<var>]")->required();
  cls->add_option("poly", o.poly, "Polynomial in x, y")->required();

  auto* en = app.add_subcommand("enumerate", "Exhaustively scan a bounded polynomial space");
  en->add_option("--ring", o.ring, "int | zp:<p>")->required();
  en->add_option("--max-deg", o.max_deg, "Maximum degree in each variable")->required();
  en->add_option("--form", o.form, "j1 | j2 | j5 | j6");
  en->add_option("--coeff-bound", o.coeff_bound, "Integer coefficients range over [-n, n]");
  en->add_option("--budget", o.budget, "Maximum number of candidates");
  en->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* lucas = app.add_subcommand("lucas", "Binomial coefficient modulo a prime, digit by digit");
  lucas->add_option("n", o.n)->required();
  lucas->add_option("m", o.m)->required();
  lucas->add_option("p", o.p)->required();

  auto* fam = app.add_subcommand("families", "List the solution families for a ring");
  fam->add_option("--ring", o.ring, "int | zp:<p> | zp:<p>[<var>]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify) return run_verify(o);
    if (*cls) return run_classify(o);
    if (*en) return run_enumerate(o);
    if (*lucas) return run_lucas(o);
    if (*fam) return run_families(o);
  } catch (const ConditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
