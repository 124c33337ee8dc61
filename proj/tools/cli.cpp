#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>

#include "kz/bar.hpp"
#include "kz/connect.hpp"
#include "kz/m05.hpp"
#include "kz/mzv.hpp"
#include "kz/polylog.hpp"
#include "kz/transport.hpp"

namespace kz::cli {

namespace {

using nlohmann::json;

struct Context {
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  std::string json_path;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  // Human-readable lines move to stderr when the JSON goes to stdout.
  std::ostream& human() const { return json_path == "-" ? *err : *out; }

  double tol_or(double d) const { return tol ? *tol : d; }
};

void write_json(const Context& ctx, const json& j) {
  if (ctx.json_path.empty()) return;
  if (ctx.json_path == "-") {
    *ctx.out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(ctx.json_path);
  if (!f) throw std::invalid_argument("cannot write " + ctx.json_path);
  f << j.dump(2) << "\n";
}

std::string label(const CheckReport& r) {
  std::string s = r.identity;
  for (const char* k : {"z", "z1", "z2", "degree", "weight"}) {
    auto it = r.params.find(k);
    if (it == r.params.end()) continue;
    if (it->is_number()) s += fmt::format(" {}={:g}", k, it->get<double>());
  }
  return s;
}

int emit(const Context& ctx, const std::vector<CheckReport>& reps, bool as_list) {
  bool all = true;
  json arr = json::array();
  for (auto& r : reps) {
    all = all && r.pass;
    ctx.human() << fmt::format("{} {:<34} max_residual={:.3e} tol={:.1e} ({:.1f} ms)\n", r.pass ? "PASS" : "FAIL",
                            label(r), r.max_residual, r.tolerance, r.ms);
    arr.push_back(r.to_json());
  }
  if (!as_list && reps.size() == 1) write_json(ctx, arr[0]);
  else write_json(ctx, {{"pass", all}, {"reports", arr}});
  return all ? kPass : kCheckFailed;
}

int emit_value(const Context& ctx, const json& j, const std::string& text) {
  ctx.human() << text << "\n";
  write_json(ctx, j);
  return kPass;
}

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::vector<double> grid(int n) {
  if (n < 1) throw std::invalid_argument("--grid must be positive");
  std::vector<double> g;
  for (int k = 1; k <= n; ++k) g.push_back(0.1 + 0.5 * k / (n + 1));
  return g;
}

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "direct") return Strategy::Direct;
  if (s == "inversion") return Strategy::Inversion;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

std::vector<CheckReport> ghpr_reports(const Context& ctx, double z1, double z2) {
  std::vector<CheckReport> reps{check_hpr11(z1, z2, ctx.tol_or(1e-10))};
  WedgeCoordinates wc = wedge_coordinates(ctx.seed);
  for (auto& b : cic_kernel(2, true, wc)) reps.push_back(check_ghpr(b.poly, z1, z2, ctx.tol_or(1e-10)));
  return reps;
}

std::vector<CheckReport> landen_grid(const Context& ctx, int n, bool five_term) {
  std::vector<CheckReport> reps;
  for (double z1 : grid(n))
    for (double z2 : grid(n)) {
      if (!in_landen_domain(z1, z2)) continue;
      reps.push_back(five_term ? check_five_term(z1, z2, ctx.tol_or(1e-12)) : check_landen_2d(z1, z2, ctx.tol_or(1e-10)));
    }
  if (reps.empty()) throw std::invalid_argument("no grid point lies in the series domain");
  return reps;
}

// Independent jobs, run concurrently and reported in submission order.
std::vector<CheckReport> run_all(const Context& ctx) {
  using Job = std::function<std::vector<CheckReport>()>;
  auto one = [](auto f) -> Job { return [f] { return std::vector<CheckReport>{f()}; }; };
  std::vector<Job> jobs = {
      one([&] { return check_duality(6, ctx.tol_or(1e-10)); }),
      one([&] { return check_gif(0.3, 5, ctx.tol_or(1e-10)); }),
      one([&] { return check_gif(0.7, 5, ctx.tol_or(1e-10)); }),
      one([&] { return check_connection1(0.2, 4, ctx.tol_or(1e-9)); }),
      one([&] { return check_connection1(0.4, 4, ctx.tol_or(1e-9)); }),
      one([&] { return check_connection1(0.6, 4, ctx.tol_or(1e-9)); }),
      one([&] { return check_connection_constancy({0.2, 0.4, 0.6}, 4, ctx.tol_or(5e-10)); }),
      one([&] { return pentagon_check(4, ctx.tol_or(1e-8)); }),
      one([&] { return check_decomposition(0.3, 0.4, 3, ctx.tol_or(1e-9)); }),
      one([&] { return check_decomposition(0.5, 0.2, 3, ctx.tol_or(1e-9)); }),
      [&] { return ghpr_reports(ctx, 0.3, 0.4); },
      one([&] { return check_hpr11(0.6, 0.25, ctx.tol_or(1e-10)); }),
      [&] { return landen_grid(ctx, 5, false); },
      [&] { return landen_grid(ctx, 5, true); },
      one([&] { return check_transport(0.5, 3, 2000, ctx.tol_or(1e-8)); }),
  };
  std::vector<std::future<std::vector<CheckReport>>> futs;
  for (auto& j : jobs) futs.push_back(std::async(std::launch::async, j));
  std::vector<CheckReport> out;
  for (auto& f : futs)
    for (auto& r : f.get()) out.push_back(std::move(r));
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  CLI::App app{"KZ connection-problem toolkit: polylogarithms, MZVs, associators and identity checks"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", ctx.seed, "RNG seed for wedge sampling")->capture_default_str();
  app.add_option("--tol", ctx.tol, "override the check tolerance");
  app.add_option("--json", ctx.json_path, "write JSON output to this path ('-' for stdout)");

  std::function<int()> action;

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate polylogarithms");
  eval->require_subcommand(1);
  std::string index, word, hspec, strategy = "auto";
  double z = 0.5, z1 = 0.3, z2 = 0.4;
  int split = 0;
  {
    auto* c = eval->add_subcommand("mpl", "Li_{k1,...,kr}(z); z = 1 gives the MZV");
    c->add_option("index", index, "comma-separated k1,...,kr")->required();
    c->add_option("--z", z)->required();
    c->add_option("--strategy", strategy, "auto|direct|inversion")->capture_default_str();
    c->callback([&] {
      action = [&] {
        EvalConfig cfg;
        cfg.strategy = parse_strategy(strategy);
        auto idx = MplIndex::parse(index);
        double v = mpl(idx, z, cfg);
        return emit_value(ctx, {{"index", idx.k}, {"z", z}, {"value", v}}, num(v));
      };
    });
  }
  {
    auto* c = eval->add_subcommand("li", "regularized Li(w; z) for a word over {0, 1}");
    c->add_option("word", word, "e.g. 0101 (0 = dz/z, 1 = dz/(1-z))")->required();
    c->add_option("--z", z)->required();
    c->callback([&] {
      action = [&] {
        double v = li_word(Alphabet::binary()->parse(word), z);
        return emit_value(ctx, {{"word", word}, {"z", z}, {"value", v}}, num(v));
      };
    });
  }
  {
    auto* c = eval->add_subcommand("hyperlog", "L(^{k1}a1 ... ^{kr}ar; z)");
    c->add_option("spec", hspec, "k@a pairs, e.g. 1@1,2@0.4")->required();
    c->add_option("--z", z)->required();
    c->callback([&] {
      action = [&] {
        double v = hyperlog(HyperlogSpec::parse(hspec, z));
        return emit_value(ctx, {{"spec", hspec}, {"z", z}, {"value", v}}, num(v));
      };
    });
  }
  {
    auto* c = eval->add_subcommand("mpl2", "two-variable Li_k(i, r-i; z1, z2)");
    c->add_option("index", index)->required();
    c->add_option("--split", split, "i, the number of leading parameters equal to 1")->required();
    c->add_option("--z1", z1)->required();
    c->add_option("--z2", z2)->required();
    c->callback([&] {
      action = [&] {
        double v = mpl2(MplIndex::parse(index), split, z1, z2);
        return emit_value(ctx, {{"index", index}, {"split", split}, {"z1", z1}, {"z2", z2}, {"value", v}}, num(v));
      };
    });
  }

  // mzv
  auto* mzv = app.add_subcommand("mzv", "multiple zeta values and the associator");
  mzv->require_subcommand(1);
  std::string route = "holder", out_path;
  int degree = 4, weight = 5, steps = 2000, grid_n = 0;
  {
    auto* c = mzv->add_subcommand("eval", "zeta(k1,...,kr)");
    c->add_option("index", index)->required();
    c->add_option("--route", route, "holder|direct")->capture_default_str();
    c->callback([&] {
      action = [&] {
        auto idx = MplIndex::parse(index);
        ZetaValue v;
        if (route == "holder") v = zeta_holder(idx.word());
        else if (route == "direct") v = zeta_direct(idx);
        else throw std::invalid_argument("unknown route '" + route + "'");
        return emit_value(ctx, {{"index", idx.k}, {"route", route}, {"value", v.value}, {"error", v.error}},
                          fmt::format("{} (error estimate {:.1e})", num(v.value), v.error));
      };
    });
  }
  {
    auto* c = mzv->add_subcommand("associator", "Phi_KZ through a degree");
    c->add_option("--degree", degree)->capture_default_str();
    c->add_option("--out", out_path, "write the series as JSON");
    c->callback([&] {
      action = [&] {
        json j = to_json(associator(degree));
        if (out_path.empty()) {
          out << j.dump(2) << "\n";
        } else {
          std::ofstream f(out_path);
          if (!f) throw std::invalid_argument("cannot write " + out_path);
          f << j.dump(2) << "\n";
          out << fmt::format("wrote {} terms to {}\n", j["terms"].size(), out_path);
        }
        return int(kPass);
      };
    });
  }

  // m05
  auto* m05 = app.add_subcommand("m05", "the two-variable quotient algebra and bar algebra");
  m05->require_subcommand(1);
  bool restricted = false;
  {
    auto* c = m05->add_subcommand("pentagon", "five-fold associator product");
    c->add_option("--degree", degree)->capture_default_str();
    c->callback([&] { action = [&] { return emit(ctx, {pentagon_check(degree, ctx.tol_or(1e-8))}, false); }; });
  }
  {
    auto* c = m05->add_subcommand("bar-basis", "basis of the integrable words of a weight");
    c->add_option("--weight", weight)->required();
    c->add_flag("--restricted", restricted, "no word ends in xi1 or xi2");
    c->callback([&] {
      action = [&] {
        auto basis = cic_kernel(weight, restricted, wedge_coordinates(ctx.seed));
        json arr = json::array();
        ctx.human() << fmt::format("dim = {}\n", basis.size());
        for (auto& b : basis) {
          ctx.human() << b.poly.str() << "\n";
          arr.push_back(b.poly.to_json());
        }
        write_json(ctx, {{"weight", weight}, {"restricted", restricted}, {"dim", basis.size()}, {"basis", arr}});
        return int(kPass);
      };
    });
  }
  {
    auto* c = m05->add_subcommand("normal-form", "PBW normal form of a word such as X2.X12");
    c->add_option("word", word)->required();
    c->callback([&] {
      action = [&] {
        Word w = m05_generators().parse(word);
        auto s = normal_form<Rational>(w, static_cast<int>(w.size()));
        json j = s.to_json();
        std::string text;
        for (auto& [k, v] : j["terms"].items()) text += fmt::format("{} {}\n", v.get<std::string>(), k);
        return emit_value(ctx, j, text.empty() ? "0" : text.substr(0, text.size() - 1));
      };
    });
  }

  // check
  auto* check = app.add_subcommand("check", "identity checks");
  check->require_subcommand(1);
  {
    auto* c = check->add_subcommand("gif", "generalized inversion formula");
    c->add_option("--z", z)->capture_default_str();
    c->add_option("--weight", weight)->capture_default_str();
    c->callback([&] { action = [&] { return emit(ctx, {check_gif(z, weight, ctx.tol_or(1e-10))}, false); }; });
  }
  {
    auto* c = check->add_subcommand("duality", "Phi(X0,X1) Phi(-X1,-X0) = 1");
    c->add_option("--degree", degree)->capture_default_str();
    c->callback([&] { action = [&] { return emit(ctx, {check_duality(degree, ctx.tol_or(1e-10))}, false); }; });
  }
  {
    auto* c = check->add_subcommand("connection", "L(z) = L1(z) Phi_KZ");
    c->add_option("--z", z)->capture_default_str();
    c->add_option("--degree", degree)->capture_default_str();
    c->callback([&] { action = [&] { return emit(ctx, {check_connection1(z, degree, ctx.tol_or(1e-9))}, false); }; });
  }
  {
    auto* c = check->add_subcommand("pentagon", "pentagon relation");
    c->add_option("--degree", degree)->capture_default_str();
    c->callback([&] { action = [&] { return emit(ctx, {pentagon_check(degree, ctx.tol_or(1e-8))}, false); }; });
  }
  {
    auto* c = check->add_subcommand("decomposition", "factorization of the two-variable solution");
    c->add_option("--z1", z1)->capture_default_str();
    c->add_option("--z2", z2)->capture_default_str();
    c->add_option("--degree", degree)->capture_default_str();
    c->callback([&] {
      action = [&] { return emit(ctx, {check_decomposition(z1, z2, degree, ctx.tol_or(1e-9))}, false); };
    });
  }
  {
    auto* c = check->add_subcommand("ghpr", "harmonic product relations on the restricted weight-2 basis");
    c->add_option("--z1", z1)->capture_default_str();
    c->add_option("--z2", z2)->capture_default_str();
    c->callback([&] { action = [&] { return emit(ctx, ghpr_reports(ctx, z1, z2), true); }; });
  }
  auto add_grid_check = [&](const char* name, const char* help, bool five_term) {
    auto* c = check->add_subcommand(name, help);
    auto* g = c->add_option("--grid", grid_n, "n x n grid in (0.1, 0.6)^2");
    c->add_option("--z1", z1)->excludes(g)->capture_default_str();
    c->add_option("--z2", z2)->excludes(g)->capture_default_str();
    c->callback([&, five_term] {
      action = [&, five_term] {
        if (grid_n > 0) return emit(ctx, landen_grid(ctx, grid_n, five_term), true);
        if (five_term) return emit(ctx, {check_five_term(z1, z2, ctx.tol_or(1e-12))}, false);
        std::vector<CheckReport> reps{check_landen_2d(z1, z2, ctx.tol_or(1e-10))};
        if (z2 == 0) reps.push_back(check_landen_classical(z1, ctx.tol_or(1e-12)));
        return emit(ctx, reps, false);
      };
    });
  };
  add_grid_check("landen", "two-variable Landen identities", false);
  add_grid_check("five-term", "five-term dilogarithm relation", true);
  {
    auto* c = check->add_subcommand("transport", "ODE transport against the series solution");
    c->add_option("--z", z)->capture_default_str();
    c->add_option("--degree", degree)->capture_default_str();
    c->add_option("--steps", steps)->capture_default_str();
    c->callback([&] {
      action = [&] { return emit(ctx, {check_transport(z, degree, steps, ctx.tol_or(1e-8))}, false); };
    });
  }
  {
    auto* c = check->add_subcommand("all", "every check at its default configuration");
    c->callback([&] { action = [&] { return emit(ctx, run_all(ctx), true); }; });
  }

  // transport
  std::string eq = "kze1";
  std::vector<double> params;
  double eps = 1e-3;
  {
    auto* c = app.add_subcommand("transport", "RK4 transport of the fundamental solution");
    c->add_option("--eq", eq, "kze1|se1")->capture_default_str();
    c->add_option("--a", params, "SE1 parameters a1,...,am")->delimiter(',');
    c->add_option("--z", z)->capture_default_str();
    c->add_option("--degree", degree)->capture_default_str();
    c->add_option("--steps", steps)->capture_default_str();
    c->add_option("--eps", eps)->capture_default_str();
    c->callback([&] {
      action = [&] {
        TransportSpec spec;
        if (eq == "kze1") spec.eq = Equation::KZE1;
        else if (eq == "se1") spec.eq = Equation::SE1;
        else throw std::invalid_argument("unknown equation '" + eq + "'");
        spec.a = params;
        spec.z = z;
        spec.cap = degree;
        spec.steps = steps;
        spec.eps = eps;
        TransportResult r = transport_with_estimates(spec);
        json j = to_json(r.value);
        j["richardson"] = r.richardson;
        j["eps_study"] = r.eps_study;
        std::string text = fmt::format("richardson={:.3e} eps_study={:.3e}", r.richardson, r.eps_study);
        for (auto& [k, v] : j["terms"].items()) text += fmt::format("\n{:>24.17g} {}", v.get<double>(), k.empty() ? "1" : k);
        return emit_value(ctx, j, text);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "evaluation failed: " << e.what() << "\n";
    return kEvalError;
  }
}

}  // namespace kz::cli
