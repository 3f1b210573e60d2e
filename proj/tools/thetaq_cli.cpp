#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "thetaq/catalog.hpp"
#include "thetaq/errors.hpp"
#include "thetaq/json_io.hpp"
#include "thetaq/modular.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/qseries.hpp"
#include "thetaq/recognize.hpp"
#include "thetaq/relation.hpp"

using namespace thetaq;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rat(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("malformed ") + what + " '" + s + "'");
  }
}

std::vector<Rational> rat_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(rat(item, "r value"));
  }
  if (out.empty()) throw UsageError("empty r list");
  return out;
}

void check_digits(int digits) {
  if (digits < BigReal::kMinDigits) throw UsageError("digits must be at least 20");
}

struct EvalArgs {
  std::string fn;
  std::string a = "1", p, b = "0";
  int n = 2;
  std::string r, x, q;
  int digits = 60;
};

int run_eval(const EvalArgs& o) {
  check_digits(o.digits);
  const int work = o.digits + kGuardDigits;
  const int given = !o.r.empty() + !o.x.empty() + !o.q.empty();
  if (given != 1) throw UsageError("give exactly one of --r, --x, --q");

  auto nome = [&]() -> BigReal {
    if (!o.q.empty()) return BigReal(o.q, work);
    if (!o.r.empty()) return singular_modulus(rat(o.r, "r"), work).q;
    throw UsageError("--fn " + o.fn + " needs --r or --q");
  };
  auto modulus = [&]() -> BigReal {
    if (!o.x.empty()) return BigReal(rat(o.x, "x"), work);
    if (!o.r.empty()) return singular_modulus(rat(o.r, "r"), work).k;
    return point_from_nome(BigReal(o.q, work), work).k;
  };

  BigReal value;
  if (o.fn == "K") {
    value = ellipk(modulus(), work);
  } else if (o.fn == "k") {
    value = modulus();
  } else if (o.fn == "ki") {
    value = inverse_modulus(modulus(), work);
  } else if (o.fn == "eta") {
    value = eval_eta(rat(o.p.empty() ? "1" : o.p, "p"), nome(), work);
  } else if (o.fn == "theta") {
    value = eval_theta(rat(o.a, "a"), rat(o.b, "b"), nome(), work);
  } else if (o.fn == "A") {
    if (o.p.empty()) throw UsageError("--fn A needs --p");
    value = eval_A(ThetaSpec(rat(o.a, "a"), rat(o.p, "p")), nome(), work);
  } else if (o.fn == "Sn") {
    value = s_n(modulus(), o.n, work);
  } else {
    throw UsageError("unknown --fn '" + o.fn + "'");
  }
  std::cout << value.with_digits(o.digits).to_string() << "\n";
  return 0;
}

struct SeriesArgs {
  std::string fn;
  std::string a = "1", p = "4", b = "0", scale = "1";
  std::string order = "20";
  std::string json;
  int shown = 12;
};

int run_series(const SeriesArgs& o) {
  const Rational order = rat(o.order, "order");
  PuiseuxSeries s;
  if (o.fn == "eta") {
    s = eta_series(rat(o.scale, "scale"), order);
  } else if (o.fn == "theta") {
    s = theta_series(rat(o.a, "a"), rat(o.b, "b"), order);
  } else if (o.fn == "m") {
    s = modulus_series(order);
  } else if (o.fn == "A") {
    s = A_series(ThetaSpec(rat(o.a, "a"), rat(o.p, "p")), order);
  } else if (o.fn == "h5") {
    s = h5_series(order);
  } else if (o.fn == "eta5") {
    s = eta5_series(order);
  } else {
    throw UsageError("unknown --fn '" + o.fn + "'");
  }
  std::cout << s.to_string(o.shown) << "\n";
  if (!o.json.empty()) write_json(o.json, to_json(s));
  return 0;
}

struct MineArgs {
  std::string a = "1", p = "4";
  int power = 12;
  int nome_power = 1;
  std::string v = "m";
  int max_degree = 3;
  std::string order = "120";
  int digits = 60;
  std::string out;
};

int run_mine(const MineArgs& o) {
  check_digits(o.digits);
  UBinding ub{ThetaSpec(rat(o.a, "a"), rat(o.p, "p")), o.power, o.nome_power};
  ValidationPlan plan;
  plan.digits = o.digits;
  try {
    MinedRelation rel = mine(ub, parse_vbinding(o.v), o.max_degree, rat(o.order, "order"), plan);
    std::cout << rel.poly.to_string() << "\n";
    for (const auto& c : rel.numeric_checks) {
      std::cout << "  r=" << to_string(c.r) << " residual " << c.residual.to_sci() << "\n";
    }
    if (!o.out.empty()) write_json(o.out, to_json(rel));
    return 0;
  } catch (const NotFound& e) {
    std::cerr << "not found: " << e.what() << "\n";
  } catch (const ValidationFailed& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
  }
  return kExitFailures;
}

struct RecognizeArgs {
  std::string value;
  std::string expr;
  std::string a = "1", p = "4", r = "1";
  int power = 1;
  int max_degree = 4;
  int digits = 60;
  bool rational = false;
  std::string den_bound = "1000000";
};

int run_recognize(const RecognizeArgs& o) {
  check_digits(o.digits);
  std::function<BigReal(int)> gen;
  if (!o.value.empty() == !o.expr.empty()) throw UsageError("give exactly one of --value, --expr");
  if (!o.value.empty()) {
    const std::string v = o.value;
    gen = [v](int d) { return BigReal(v, d); };
  } else {
    if (o.expr != "A") throw UsageError("only --expr A is supported");
    ThetaSpec spec(rat(o.a, "a"), rat(o.p, "p"));
    const Rational r = rat(o.r, "r");
    const long power = o.power;
    gen = [spec, r, power](int d) {
      const int work = d + kGuardDigits;
      BigReal q = singular_modulus(r, work).q;
      return pow(eval_A(spec, q, work), power).with_digits(d);
    };
  }
  try {
    if (o.rational) {
      Rational x = recognize_rational(gen(o.digits), o.digits, BigInt(o.den_bound));
      std::cout << to_string(x) << "\n";
    } else {
      // A literal value cannot be refined, so check it at its own precision.
      IntPoly p = o.value.empty() ? recognize(gen, o.max_degree, o.digits)
                                  : recognize(gen(2 * o.digits), o.max_degree, o.digits);
      std::cout << p.to_string() << "\n" << to_json(p).dump() << "\n";
    }
    return 0;
  } catch (const NotFound& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kExitFailures;
  }
}

struct VerifyArgs {
  std::string entry;
  bool all = false;
  int digits = 60;
  std::string order = "150";
  std::string rs = "1,2,3";
  std::string report;
  unsigned threads = 0;
  bool no_remine = false;
};

void print_entry(const EntryReport& e) {
  BigReal worst;
  bool have = false;
  for (const auto& p : e.residuals) {
    if (!have || p.residual > worst) worst = p.residual;
    have = true;
  }
  std::cout << (meets_expectation(e) ? "  " : "! ") << e.id << ": " << to_string(e.verdict);
  if (e.expectation == Expectation::known_discrepancy) std::cout << " (known discrepancy)";
  if (have) std::cout << ", max residual " << worst.to_sci();
  if (e.series_order) {
    std::cout << ", series " << (e.series_zero ? "zero" : "nonzero") << " through q^" << to_string(*e.series_order);
  }
  if (!e.notes.empty()) std::cout << "\n      " << e.notes;
  std::cout << "\n";
}

int run_verify(const VerifyArgs& o) {
  check_digits(o.digits);
  VerifyOptions opts;
  opts.digits = o.digits;
  opts.order = rat(o.order, "order");
  if (opts.order < 40) throw UsageError("order must be at least 40");
  opts.rs = rat_list(o.rs);
  opts.threads = o.threads;
  opts.remine = !o.no_remine;
  if (o.all == !o.entry.empty()) throw UsageError("give exactly one of --entry, --all");

  Report rep{opts, {}};
  if (o.all) {
    rep = verify_all(opts);
  } else {
    rep.entries.push_back(verify_entry(o.entry, opts));
  }
  bool ok = true;
  for (const auto& e : rep.entries) {
    print_entry(e);
    ok = ok && meets_expectation(e);
  }
  if (!o.report.empty()) write_json(o.report, to_json(rep));
  return ok ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta-quotient series, relations and identity checks"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a function numerically");
  eval->add_option("--fn", ev.fn, "K, k, ki, eta, theta, A or Sn")->required();
  eval->add_option("--a", ev.a);
  eval->add_option("--p", ev.p);
  eval->add_option("--b", ev.b);
  eval->add_option("--n", ev.n);
  eval->add_option("--r", ev.r, "point q = exp(-pi sqrt(r))");
  eval->add_option("--x", ev.x, "modulus");
  eval->add_option("--q", ev.q, "nome as a decimal");
  eval->add_option("--digits", ev.digits);

  SeriesArgs se;
  auto* series = app.add_subcommand("series", "Expand a q-series exactly");
  series->add_option("--fn", se.fn, "eta, theta, m, A, h5 or eta5")->required();
  series->add_option("--a", se.a);
  series->add_option("--p", se.p);
  series->add_option("--b", se.b);
  series->add_option("--scale", se.scale);
  series->add_option("--order", se.order);
  series->add_option("--json", se.json, "write the series as JSON");
  series->add_option("--show", se.shown, "terms to print");

  MineArgs mi;
  auto* mine_cmd = app.add_subcommand("mine", "Find P(u, v) = 0 for u = A(a,p)^power");
  mine_cmd->add_option("--a", mi.a);
  mine_cmd->add_option("--p", mi.p);
  mine_cmd->add_option("--power", mi.power);
  mine_cmd->add_option("--nome-power", mi.nome_power, "use A(a,p;q^n)");
  mine_cmd->add_option("--v", mi.v, "m, k, m2sq, eta5q4p5 or eta5q2p5");
  mine_cmd->add_option("--max-degree", mi.max_degree);
  mine_cmd->add_option("--order", mi.order);
  mine_cmd->add_option("--digits", mi.digits);
  mine_cmd->add_option("--out", mi.out, "write the relation as JSON");

  RecognizeArgs re;
  auto* rec = app.add_subcommand("recognize", "Find an integer polynomial for a real number");
  rec->add_option("--value", re.value);
  rec->add_option("--expr", re.expr);
  rec->add_option("--a", re.a);
  rec->add_option("--p", re.p);
  rec->add_option("--power", re.power);
  rec->add_option("--r", re.r);
  rec->add_option("--max-degree", re.max_degree);
  rec->add_option("--digits", re.digits);
  rec->add_flag("--rational", re.rational, "look for a rational instead");
  rec->add_option("--den-bound", re.den_bound);

  VerifyArgs ve;
  auto* ver = app.add_subcommand("verify", "Check catalog identities");
  ver->add_option("--entry", ve.entry);
  ver->add_flag("--all", ve.all);
  ver->add_option("--digits", ve.digits);
  ver->add_option("--order", ve.order);
  ver->add_option("--rs", ve.rs, "comma-separated r values");
  ver->add_option("--report", ve.report, "write the report as JSON");
  ver->add_option("--threads", ve.threads);
  ver->add_flag("--no-remine", ve.no_remine);
  auto* list = app.add_subcommand("list", "List catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return run_eval(ev);
    if (*series) return run_series(se);
    if (*mine_cmd) return run_mine(mi);
    if (*rec) return run_recognize(re);
    if (*ver) return run_verify(ve);
    if (*list) {
      for (const auto& e : catalog()) {
        std::cout << e.id << "\t" << to_string(e.kind) << "\t" << to_string(e.expectation) << "\t" << e.summary << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailures;
  }
  return kExitUsage;
}
