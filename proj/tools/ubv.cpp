// ubv: exact divisor-function evaluation, primorial ratio verification, and
// exhaustive scans behind the unitary-sigma bound
//   sigma*(n) <= 1.3007 n log log n  (n >= 570,571)
// with machine-checkable interval output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// limit exceeded.

#include <iostream>

#include <CLI11.hpp>

#include "ubv/reproduce.hpp"

namespace {

using namespace ubv;

struct GlobalFlags {
  std::optional<unsigned> threads;
  std::optional<u64> segment_size;
  std::string format = "human";
  std::string output;
  bool long_run = false;
};

void emit(const GlobalFlags& g, const std::string& text) {
  if (g.output.empty())
    std::cout << text;
  else
    save_text(g.output, text);
}

ScanOptions scan_options(const GlobalFlags& g) {
  return make_scan_options(g.threads, g.segment_size, std::nullopt);
}

// Positional numbers may use scientific shorthand ("1e12"); values must be
// exact integers.
u64 parse_u64_arg(const std::string& s, const char* what) {
  try {
    if (s.find_first_of("eE.") != std::string::npos) {
      double v = std::stod(s);
      if (!(v >= 0) || v > 9.3e18 || v != std::floor(v))
        throw std::invalid_argument("not an exact non-negative integer");
      return static_cast<u64>(v);
    }
    return std::stoull(s);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + s);
  }
}

std::string render_scan(const GlobalFlags& g, const ScanReport& rep) {
  if (g.format == "json") return render_json(rep);
  if (g.format == "csv") return render_csv(rep);
  return render_human(rep);
}

// ---- eval ----

int cmd_eval(const GlobalFlags& g, const std::string& input) {
  Factorization f = parse_factorization(input);
  const bigint& n = f.value();
  struct Row {
    const char* name;
    DivisorFunctionKind kind;
  };
  constexpr Row rows[] = {{"sigma", DivisorFunctionKind::SIGMA},
                          {"sigma*", DivisorFunctionKind::SIGMA_STAR},
                          {"sigma_exp", DivisorFunctionKind::SIGMA_EXP},
                          {"d", DivisorFunctionKind::D},
                          {"d_exp", DivisorFunctionKind::D_EXP}};
  bool ratios_defined = n >= 3;
  std::optional<WideValue> ll;
  if (ratios_defined) ll = loglog_wide(n);

  if (g.format == "json") {
    ordered_json values, ratios;
    for (const auto& row : rows) {
      bigint v = evaluate(row.kind, f);
      values[row.name] = v.str();
      if (ratios_defined) {
        DirectedValue r =
            (WideValue::from_integer(v) / (WideValue::from_integer(n) * *ll)).to_directed();
        ratios[row.name] = detail::interval_json(r);
      } else {
        ratios[row.name] = nullptr;
      }
    }
    ordered_json j{{"schema", "ubv.eval/1"},
                   {"n", n.str()},
                   {"factorization", f.to_string()},
                   {"values", values},
                   {"ratios_vs_n_loglog_n", ratios},
                   {"sigma_star_equals_sigma_exp",
                    evaluate(DivisorFunctionKind::SIGMA_STAR, f) ==
                        evaluate(DivisorFunctionKind::SIGMA_EXP, f)}};
    emit(g, j.dump(2) + "\n");
    return 0;
  }

  std::ostringstream out;
  out << "n = " << n << " = " << f.to_string() << "\n";
  for (const auto& row : rows) {
    bigint v = evaluate(row.kind, f);
    out << "  " << row.name << "(n) = " << v;
    if (ratios_defined) {
      DirectedValue r =
          (WideValue::from_integer(v) / (WideValue::from_integer(n) * *ll)).to_directed();
      out << "   ratio to n log log n: " << detail::human_interval(r);
    } else {
      out << "   ratio to n log log n: undefined (n < 3)";
    }
    out << "\n";
  }
  if (evaluate(DivisorFunctionKind::SIGMA_STAR, f) == evaluate(DivisorFunctionKind::SIGMA_EXP, f))
    out << "  note: sigma*(n) = sigma_exp(n)\n";
  emit(g, out.str());
  return 0;
}

// ---- primorials ----

int cmd_primorials(const GlobalFlags& g, const std::string& k_lo_s, const std::string& k_hi_s,
                   const std::string& thr_s, const std::string& checkpoint) {
  u64 k_lo = parse_u64_arg(k_lo_s, "k_lo");
  bool to_infinity = (k_hi_s == "inf");
  u64 k_hi = to_infinity ? 1'000'000 : parse_u64_arg(k_hi_s, "k_hi");
  Threshold thr = parse_threshold(thr_s);

  // Size the sieve to the request: the certificate (and any k_hi beyond
  // pi(10^6) = 78,498) needs the millionth prime; small sweeps do not.
  u64 need = (to_infinity || k_hi > 78'498) ? kMillionthPrime + 1 : u64(1'000'000);
  PrimeTable table = primes_up_to(need);
  if (k_hi > table.count()) throw std::domain_error("k_hi exceeds supported prime count");

  VerifyOptions vopts;
  vopts.checkpoint_path = checkpoint;
  ScanReport rep = verify_primorial_range(k_lo, k_hi, thr, table, vopts);

  std::ostringstream out;
  out << render_scan(g, rep);
  bool ok = rep.exceptions.empty();

  if (to_infinity) {
    TailCertificate cert = asymptotic_tail_certificate(thr, table);
    if (g.format == "json")
      out << to_json(cert).dump(2) << "\n";
    else
      out << render_human(cert);
    ok = ok && cert.ok;
  }
  emit(g, out.str());
  return ok ? 0 : 1;
}

// ---- scan ----

int cmd_scan(const GlobalFlags& g, const std::string& kind, const std::string& lo_s,
             const std::string& hi_s, const std::string& thr_s) {
  u64 lo = parse_u64_arg(lo_s, "lo");
  u64 hi = parse_u64_arg(hi_s, "hi");
  ScanOptions opts = scan_options(g);
  ScanReport rep;
  if (kind == "derbal") {
    if (!thr_s.empty())
      throw std::invalid_argument("scan derbal takes no threshold (it is e^gamma)");
    rep = scan_derbal(lo, hi, opts);
  } else {
    if (thr_s.empty()) throw std::invalid_argument("scan " + kind + " requires a threshold");
    Threshold thr = parse_threshold(thr_s);
    if (kind == "sigma-star")
      rep = scan_sigma_star_exceptions(lo, hi, thr, opts);
    else if (kind == "sigma-exp")
      rep = scan_sigma_exp_exceptions(lo, hi, thr, opts);
    else if (kind == "d-dexp")
      rep = scan_d_dexp_exceptions(lo, hi, thr, opts);
    else
      throw std::invalid_argument("unknown scan kind: " + kind);
  }
  emit(g, render_scan(g, rep));
  return (rep.has_indeterminate() || !rep.pointwise_violations.empty()) ? 1 : 0;
}

// ---- equality ----

int cmd_equality(const GlobalFlags& g, const std::string& lo_s, const std::string& hi_s,
                 bool include_one) {
  u64 lo = parse_u64_arg(lo_s, "lo");
  u64 hi = parse_u64_arg(hi_s, "hi");
  EqualityOptions opts;
  opts.include_one = include_one;
  opts.scan = scan_options(g);
  auto ws = equality_search(lo, hi, opts);
  if (g.format == "json") {
    emit(g, to_json(ws, lo, hi).dump(2) + "\n");
  } else if (g.format == "csv") {
    std::ostringstream out;
    out << "# lo=" << lo << "\n# hi=" << hi << "\n# witnesses=" << ws.size() << "\n";
    out << "n,factorization,common_value\n";
    for (const auto& w : ws)
      out << w.n << ',' << w.factorization.to_string() << ',' << w.common_value << "\n";
    emit(g, out.str());
  } else {
    emit(g, render_human(ws, lo, hi));
  }
  return 0;
}

// ---- density ----

int cmd_density(const GlobalFlags& g, const std::string& hi_s) {
  u64 hi = parse_u64_arg(hi_s, "hi");
  DensityResult d = density_sigma_star_gt(hi, scan_options(g));
  if (g.format == "json") {
    emit(g, to_json(d).dump(2) + "\n");
  } else if (g.format == "csv") {
    std::ostringstream out;
    out << "hi,count,proportion,runtime_ms\n"
        << d.hi << ',' << d.count << ',' << detail::shortest(d.proportion) << ','
        << d.runtime_ms << "\n";
    emit(g, out.str());
  } else {
    emit(g, render_human(d));
  }
  return 0;
}

// ---- bounds ----

int cmd_bounds(const GlobalFlags& g, const std::string& lo_s, const std::string& hi_s,
               unsigned points, const std::string& form_s) {
  double x_lo = std::stod(lo_s), x_hi = std::stod(hi_s);
  if (!(x_lo >= 10'544'111.0) || !(x_hi > x_lo) || points < 2)
    throw std::invalid_argument("bounds: need 10544111 <= lo < hi and points >= 2");
  A1Form form = form_s == "log3" ? A1Form::dusart_log3 : A1Form::combined_log2;

  ordered_json grid = ordered_json::array();
  std::ostringstream table;
  table << "x,a1_lo,a1_hi,a2_lo,a2_hi,ratio_lo,ratio_hi\n";
  double factor = std::pow(x_hi / x_lo, 1.0 / (points - 1));
  double x = x_lo;
  for (unsigned i = 0; i < points; ++i, x *= factor) {
    DirectedValue va1 = a1(x, form), va2 = a2(x), vr = ratio_bound(x, form);
    table << detail::shortest(x) << ',' << detail::shortest(va1.lo) << ','
          << detail::shortest(va1.hi) << ',' << detail::shortest(va2.lo) << ','
          << detail::shortest(va2.hi) << ',' << detail::shortest(vr.lo) << ','
          << detail::shortest(vr.hi) << "\n";
    grid.push_back(ordered_json{{"x", detail::shortest(x)},
                                {"a1", detail::interval_json(va1)},
                                {"a2", detail::interval_json(va2)},
                                {"ratio_bound", detail::interval_json(vr)}});
  }
  if (g.format == "json")
    emit(g, ordered_json{{"schema", "ubv.bounds/1"},
                         {"form", form == A1Form::combined_log2 ? "log2" : "log3"},
                         {"grid", grid}}
                    .dump(2) +
                "\n");
  else
    emit(g, table.str());
  return 0;
}

// ---- reproduce ----

int cmd_reproduce(const GlobalFlags& g, const std::string& fixture_dir,
                  std::optional<int> only) {
  ReproduceOptions opts;
  opts.long_run = g.long_run;
  opts.fixture_dir = fixture_dir;
  opts.threads = resolve_threads(g.threads);
  if (g.segment_size) opts.segment_size = *g.segment_size;
  opts.only = only;
  auto results = run_reproduction(opts, &std::cerr);
  emit(g, render_criteria(results));
  return reproduction_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ubv;
  CLI::App app{
      "ubv: rigorous verification of divisor-function growth bounds\n"
      "(exact arithmetic + directed-rounding intervals; no claim rests on\n"
      "unrounded floating point)"};
  app.require_subcommand(1);
  // let global flags (--format, --output, ...) appear after the subcommand
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--threads", g.threads, "worker threads (default: UBV_THREADS or 1)");
  app.add_option("--segment-size", g.segment_size, "sieve segment length (default 2^22)");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  app.add_option("--output", g.output, "write report to file instead of stdout");
  app.add_flag("--long-run", g.long_run, "enable 10^9-scale portions");

  std::string checkpoint;
  app.add_option("--checkpoint", checkpoint,
                 "primorials only: resumable progress file, appended every 10^5 steps");

  // eval
  std::string eval_input;
  auto* c_eval = app.add_subcommand("eval", "evaluate all five divisor functions exactly");
  c_eval->add_option("n", eval_input, "integer or factorization text like '2^49 * 4363953127297'")
      ->required();

  // primorials
  std::string pk_lo, pk_hi, pk_thr = "1.3007";
  auto* c_prim = app.add_subcommand(
      "primorials", "exact ratio sigma*(N_k) / (N_k log log N_k) vs a threshold");
  c_prim->add_option("k_lo", pk_lo)->required();
  c_prim->add_option("k_hi", pk_hi, "upper index, or 'inf' to add the asymptotic certificate")
      ->required();
  c_prim->add_option("threshold", pk_thr, "decimal or fraction, default 1.3007");

  // scan
  std::string sc_kind, sc_lo, sc_hi, sc_thr;
  auto* c_scan = app.add_subcommand("scan", "exhaustive exception scan over [lo, hi)");
  c_scan->add_option("kind", sc_kind)
      ->check(CLI::IsMember({"sigma-star", "sigma-exp", "d-dexp", "derbal"}))
      ->required();
  c_scan->add_option("lo", sc_lo)->required();
  c_scan->add_option("hi", sc_hi)->required();
  c_scan->add_option("threshold", sc_thr, "required except for derbal (fixed e^gamma)");

  // equality
  std::string eq_lo, eq_hi;
  bool eq_include_one = false;
  auto* c_eq = app.add_subcommand("equality", "find n with sigma*(n) = sigma_exp(n)");
  c_eq->add_option("lo", eq_lo)->required();
  c_eq->add_option("hi", eq_hi)->required();
  c_eq->add_flag("--include-one", eq_include_one, "count the trivial witness n = 1");

  // density
  std::string de_hi;
  auto* c_de = app.add_subcommand("density", "proportion of n <= hi with sigma* > sigma_exp");
  c_de->add_option("hi", de_hi)->required();

  // bounds
  std::string bo_lo, bo_hi, bo_form = "log2";
  unsigned bo_points = 32;
  auto* c_bo = app.add_subcommand("bounds", "tabulate A1, A2, A1/A2 on a geometric grid");
  c_bo->add_option("x_lo", bo_lo)->required();
  c_bo->add_option("x_hi", bo_hi)->required();
  c_bo->add_option("points", bo_points);
  c_bo->add_option("--form", bo_form, "second A1 correction term: log2 (default) or log3")
      ->check(CLI::IsMember({"log2", "log3"}));

  // reproduce
  std::string rp_fixtures;
  std::optional<int> rp_only;
  auto* c_rp = app.add_subcommand("reproduce", "run every numbered claim check");
  c_rp->add_option("--fixture", rp_fixtures, "directory holding baseline fixture files");
  c_rp->add_option("--only", rp_only, "run a single criterion by number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; any parse error is usage
  }

  try {
    if (!checkpoint.empty() && !c_prim->parsed()) {
      std::cerr << "usage error: --checkpoint applies only to 'primorials'\n";
      return 2;
    }
    if (c_eval->parsed()) return cmd_eval(g, eval_input);
    if (c_prim->parsed()) return cmd_primorials(g, pk_lo, pk_hi, pk_thr, checkpoint);
    if (c_scan->parsed()) return cmd_scan(g, sc_kind, sc_lo, sc_hi, sc_thr);
    if (c_eq->parsed()) return cmd_equality(g, eq_lo, eq_hi, eq_include_one);
    if (c_de->parsed()) return cmd_density(g, de_hi);
    if (c_bo->parsed()) return cmd_bounds(g, bo_lo, bo_hi, bo_points, bo_form);
    if (c_rp->parsed()) return cmd_reproduce(g, rp_fixtures, rp_only);
    std::cerr << "usage error: no subcommand\n";
    return 2;
  } catch (const ubv::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
