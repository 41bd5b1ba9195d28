#pragma once
// Report serialization.  Three renderings share one source of truth:
//   json  — lossless machine format; every double is the shortest decimal
//           string that round-trips to the identical bits, so saved reports
//           are byte-reproducible and load back exactly;
//   csv   — `# key=value` prelude plus one exception per row;
//   human — terminal summary at six significant digits (both interval
//           endpoints are shown whenever the enclosure is wider than 1e-9
//           relative).
// canonical_equal() compares two reports ignoring runtime_ms only.

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ubv/primorial.hpp"
#include "ubv/scan.hpp"

namespace ubv {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json interval_json(const DirectedValue& v) {
  return ordered_json{{"lo", shortest(v.lo)}, {"hi", shortest(v.hi)}};
}

inline DirectedValue interval_from_json(const ordered_json& j) {
  return DirectedValue(parse_double(j.at("lo").get<std::string>()),
                       parse_double(j.at("hi").get<std::string>()));
}

inline std::string subject_kind_name(SubjectKind k) {
  return k == SubjectKind::integer ? "integer" : "primorial_index";
}

inline SubjectKind subject_kind_from(const std::string& s) {
  if (s == "integer") return SubjectKind::integer;
  if (s == "primorial_index") return SubjectKind::primorial_index;
  throw std::invalid_argument("unknown subject_kind: " + s);
}

inline Verdict verdict_from(const std::string& s) {
  if (s == "BELOW") return Verdict::BELOW;
  if (s == "ABOVE") return Verdict::ABOVE;
  if (s == "INDETERMINATE") return Verdict::INDETERMINATE;
  throw std::invalid_argument("unknown verdict: " + s);
}

inline ordered_json record_json(const RatioRecord& r) {
  return ordered_json{{"subject_kind", subject_kind_name(r.subject_kind)},
                      {"subject", r.subject},
                      {"ratio", interval_json(r.ratio)},
                      {"exact", r.exact},
                      {"verdict", to_string(r.verdict)}};
}

inline RatioRecord record_from_json(const ordered_json& j) {
  RatioRecord r;
  r.subject_kind = subject_kind_from(j.at("subject_kind").get<std::string>());
  r.subject = j.at("subject").get<u64>();
  r.ratio = interval_from_json(j.at("ratio"));
  r.exact = j.at("exact").get<bool>();
  r.verdict = verdict_from(j.at("verdict").get<std::string>());
  return r;
}

// "%.6g" with both endpoints spelled out when the enclosure is wide.
inline std::string human_interval(const DirectedValue& v) {
  char buf[64];
  double mid = 0.5 * (v.lo + v.hi);
  double scale = std::max(std::abs(v.lo), std::abs(v.hi));
  if (scale > 0 && v.width() / scale > 1e-9) {
    char lo[64], hi[64];
    std::snprintf(lo, sizeof lo, "%.9g", v.lo);
    std::snprintf(hi, sizeof hi, "%.9g", v.hi);
    return std::string("[") + lo + ", " + hi + "]";
  }
  std::snprintf(buf, sizeof buf, "%.6g", mid);
  return buf;
}

}  // namespace detail

// ---- ScanReport <-> JSON ----

inline ordered_json to_json(const ScanReport& rep) {
  ordered_json j;
  j["schema"] = "ubv.scan/1";
  j["kind"] = rep.kind;
  j["range"] = ordered_json{{"lo", rep.lo}, {"hi", rep.hi}};
  if (rep.threshold)
    j["threshold"] = ordered_json{{"text", rep.threshold->text},
                                  {"num", rep.threshold->num.str()},
                                  {"den", rep.threshold->den.str()}};
  else
    j["threshold"] = nullptr;
  j["counts"] =
      ordered_json{{"total", rep.counts.total}, {"satisfying", rep.counts.satisfying}};
  ordered_json exc = ordered_json::array();
  for (const auto& e : rep.exceptions) exc.push_back(detail::record_json(e));
  j["exceptions"] = exc;
  j["max_ratio"] = rep.max_ratio ? detail::record_json(*rep.max_ratio) : ordered_json(nullptr);
  ordered_json ex = ordered_json::array();
  for (const auto& e : rep.excluded)
    ex.push_back(ordered_json{{"n", e.n}, {"reason", e.reason}});
  j["excluded"] = ex;
  j["pointwise_violations"] = rep.pointwise_violations;
  j["runtime_ms"] = rep.runtime_ms;
  return j;
}

inline ScanReport scan_report_from_json(const ordered_json& j) {
  if (j.at("schema").get<std::string>() != "ubv.scan/1")
    throw std::invalid_argument("unsupported scan report schema");
  ScanReport rep;
  rep.kind = j.at("kind").get<std::string>();
  rep.lo = j.at("range").at("lo").get<u64>();
  rep.hi = j.at("range").at("hi").get<u64>();
  if (!j.at("threshold").is_null()) {
    const auto& t = j.at("threshold");
    Threshold thr;
    thr.text = t.at("text").get<std::string>();
    thr.num = bigint(t.at("num").get<std::string>());
    thr.den = bigint(t.at("den").get<std::string>());
    rep.threshold = thr;
  }
  rep.counts.total = j.at("counts").at("total").get<u64>();
  rep.counts.satisfying = j.at("counts").at("satisfying").get<u64>();
  for (const auto& e : j.at("exceptions")) rep.exceptions.push_back(detail::record_from_json(e));
  if (!j.at("max_ratio").is_null())
    rep.max_ratio = detail::record_from_json(j.at("max_ratio"));
  for (const auto& e : j.at("excluded"))
    rep.excluded.push_back({e.at("n").get<u64>(), e.at("reason").get<std::string>()});
  rep.pointwise_violations = j.at("pointwise_violations").get<std::vector<u64>>();
  rep.runtime_ms = j.at("runtime_ms").get<u64>();
  return rep;
}

inline std::string render_json(const ScanReport& rep) { return to_json(rep).dump(2) + "\n"; }

inline ScanReport parse_scan_report(const std::string& text) {
  return scan_report_from_json(ordered_json::parse(text));
}

// Content identity modulo wall-clock: byte-equal canonical JSON.
inline bool canonical_equal(const ScanReport& a, const ScanReport& b) {
  ScanReport ca = a, cb = b;
  ca.runtime_ms = 0;
  cb.runtime_ms = 0;
  return to_json(ca).dump() == to_json(cb).dump();
}

// ---- CSV ----

inline std::string render_csv(const ScanReport& rep) {
  std::ostringstream out;
  out << "# kind=" << rep.kind << "\n";
  out << "# lo=" << rep.lo << "\n# hi=" << rep.hi << "\n";
  if (rep.threshold) out << "# threshold=" << rep.threshold->canonical() << "\n";
  out << "# total=" << rep.counts.total << "\n# satisfying=" << rep.counts.satisfying << "\n";
  out << "# exceptions=" << rep.exceptions.size() << "\n";
  out << "# excluded=" << rep.excluded.size() << "\n";
  if (!rep.pointwise_violations.empty())
    out << "# pointwise_violations=" << rep.pointwise_violations.size() << "\n";
  out << "# runtime_ms=" << rep.runtime_ms << "\n";
  out << "subject_kind,subject,ratio_lo,ratio_hi,exact,verdict\n";
  for (const auto& e : rep.exceptions)
    out << detail::subject_kind_name(e.subject_kind) << ',' << e.subject << ','
        << detail::shortest(e.ratio.lo) << ',' << detail::shortest(e.ratio.hi) << ','
        << (e.exact ? "true" : "false") << ',' << to_string(e.verdict) << "\n";
  return out.str();
}

// ---- human ----

inline std::string render_human(const ScanReport& rep) {
  std::ostringstream out;
  out << rep.kind << " scan over [" << rep.lo << ", " << rep.hi << ")\n";
  if (rep.threshold)
    out << "threshold: " << rep.threshold->text << " (= " << rep.threshold->canonical()
        << ")\n";
  u64 indet = 0;
  for (const auto& e : rep.exceptions)
    if (e.verdict == Verdict::INDETERMINATE) ++indet;
  out << "checked " << rep.counts.total << " subjects: " << rep.counts.satisfying
      << " satisfy the bound, " << rep.exceptions.size() << " exceptions";
  if (indet) out << " (" << indet << " INDETERMINATE)";
  out << "\n";
  for (const auto& e : rep.excluded)
    out << "excluded n=" << e.n << ": " << e.reason << "\n";
  if (!rep.pointwise_violations.empty()) {
    out << "POINTWISE VIOLATIONS:";
    for (u64 n : rep.pointwise_violations) out << ' ' << n;
    out << "\n";
  }
  if (rep.max_ratio)
    out << "max ratio " << detail::human_interval(rep.max_ratio->ratio) << " at "
        << (rep.max_ratio->subject_kind == SubjectKind::integer ? "n = " : "k = ")
        << rep.max_ratio->subject << "\n";
  if (!rep.exceptions.empty()) {
    out << "exceptions:\n";
    out << "  " << (rep.kind == "primorial" ? "k" : "n") << "  ratio  verdict\n";
    for (const auto& e : rep.exceptions)
      out << "  " << e.subject << "  " << detail::human_interval(e.ratio) << "  "
          << to_string(e.verdict) << "\n";
  }
  out << "runtime: " << rep.runtime_ms << " ms\n";
  return out.str();
}

// ---- density ----

inline ordered_json to_json(const DensityResult& d) {
  return ordered_json{{"schema", "ubv.density/1"},
                      {"hi", d.hi},
                      {"count", d.count},
                      {"proportion", detail::shortest(d.proportion)},
                      {"runtime_ms", d.runtime_ms}};
}

inline DensityResult density_from_json(const ordered_json& j) {
  if (j.at("schema").get<std::string>() != "ubv.density/1")
    throw std::invalid_argument("unsupported density schema");
  DensityResult d;
  d.hi = j.at("hi").get<u64>();
  d.count = j.at("count").get<u64>();
  d.proportion = detail::parse_double(j.at("proportion").get<std::string>());
  d.runtime_ms = j.at("runtime_ms").get<u64>();
  return d;
}

inline std::string render_human(const DensityResult& d) {
  std::ostringstream out;
  out << "sigma* > sigma_exp for " << d.count << " of the first " << d.hi
      << " integers (proportion " << detail::shortest(d.proportion) << ")\n"
      << "runtime: " << d.runtime_ms << " ms\n";
  return out.str();
}

// ---- equality witnesses ----

inline ordered_json to_json(const std::vector<EqualityWitness>& ws, u64 lo, u64 hi) {
  ordered_json arr = ordered_json::array();
  for (const auto& w : ws)
    arr.push_back(ordered_json{{"n", w.n.str()},
                               {"factorization", w.factorization.to_string()},
                               {"common_value", w.common_value.str()}});
  return ordered_json{{"schema", "ubv.equality/1"},
                      {"range", ordered_json{{"lo", lo}, {"hi", hi}}},
                      {"witnesses", arr}};
}

inline std::string render_human(const std::vector<EqualityWitness>& ws, u64 lo, u64 hi) {
  std::ostringstream out;
  out << "sigma*(n) = sigma_exp(n) witnesses in [" << lo << ", " << hi << "): " << ws.size()
      << "\n";
  for (const auto& w : ws)
    out << "  n = " << w.n << " = " << w.factorization.to_string()
        << ", common value = " << w.common_value << "\n";
  return out.str();
}

// ---- asymptotic tail certificate ----

inline ordered_json to_json(const TailCertificate& c) {
  ordered_json grid = ordered_json::array();
  for (const auto& [x, r] : c.grid)
    grid.push_back(ordered_json{{"x", detail::shortest(x)},
                                {"ratio_bound", detail::interval_json(r)}});
  return ordered_json{{"schema", "ubv.tail/1"},
                      {"ok", c.ok},
                      {"threshold", c.threshold.canonical()},
                      {"pk_index", c.pk_index},
                      {"pk_value", c.pk_value},
                      {"index_check_ok", c.index_check_ok},
                      {"cutoffs_ok", c.cutoffs_ok},
                      {"ratio_at_pk", detail::interval_json(c.ratio_at_pk)},
                      {"verdict", to_string(c.verdict)},
                      {"monotone_grid_ok", c.monotone_grid_ok},
                      {"grid", grid},
                      {"failure_reason", c.failure_reason}};
}

inline std::string render_human(const TailCertificate& c) {
  std::ostringstream out;
  out << "asymptotic tail certificate (threshold " << c.threshold.text << "): "
      << (c.ok ? "OK" : "FAILED") << "\n";
  out << "  millionth prime check: " << (c.index_check_ok ? "ok" : "FAILED")
      << " (p_" << c.pk_index << " = " << c.pk_value << ")\n";
  out << "  analytic cutoffs below p_k: " << (c.cutoffs_ok ? "ok" : "FAILED") << "\n";
  out << "  ratio bound at p_k: " << detail::human_interval(c.ratio_at_pk) << " -> "
      << to_string(c.verdict) << "\n";
  out << "  non-increasing on grid of " << c.grid.size() << " points: "
      << (c.monotone_grid_ok ? "ok" : "FAILED") << "\n";
  if (!c.failure_reason.empty()) out << "  reason: " << c.failure_reason << "\n";
  return out.str();
}

// ---- file helpers ----

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void save_report(const std::string& path, const ScanReport& rep) {
  save_text(path, render_json(rep));
}

inline ScanReport load_report(const std::string& path) {
  return parse_scan_report(load_text(path));
}

}  // namespace ubv
