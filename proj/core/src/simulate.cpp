#include "fracrs/simulate.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

#include "fracrs/stats.hpp"

namespace fracrs {

namespace {

using nlohmann::json;

std::string rat_str(const Rat& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace

SimConfig load_sim_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::bad_config, "cannot open config: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    raise(Errc::bad_config, std::string("malformed JSON config: ") + e.what());
  }

  auto need = [&](const json& o, const char* key) -> const json& {
    if (!o.contains(key)) raise(Errc::bad_config, std::string("config missing '") + key + "'");
    return o.at(key);
  };

  if (j.contains("format_version") && j.at("format_version").get<int>() != 1)
    raise(Errc::bad_config, "unsupported config format_version");

  const json& fld = need(j, "field");
  const json& code = need(j, "code");
  const json& sch = need(j, "scheme");

  FieldPtr base = FieldCtx::make(
      need(fld, "p").get<std::uint64_t>(), need(fld, "s").get<std::uint32_t>(),
      fld.contains("f") ? std::optional(fld.at("f").get<std::vector<std::uint32_t>>())
                        : std::nullopt);
  ExtFieldPtr ext = ExtFieldCtx::make(
      std::move(base), need(fld, "l").get<std::uint32_t>(),
      fld.contains("g") ? std::optional(fld.at("g").get<std::vector<felt_t>>()) : std::nullopt,
      fld.contains("zeta") ? std::optional(fld.at("zeta").get<std::vector<std::uint64_t>>())
                           : std::nullopt);
  CodeSpecPtr cs = CodeSpec::make(
      std::move(ext), need(code, "n").get<std::size_t>(), need(code, "k").get<std::size_t>(),
      code.contains("L") ? std::optional(code.at("L").get<std::vector<std::uint64_t>>())
                         : std::nullopt);
  SchemePtr scheme = ProjectionScheme::make(
      std::move(cs), need(sch, "m").get<std::size_t>(),
      sch.contains("sizes") ? std::optional(sch.at("sizes").get<std::vector<std::size_t>>())
                            : std::nullopt,
      sch.contains("sets")
          ? std::optional(sch.at("sets").get<std::vector<std::vector<felt_t>>>())
          : std::nullopt);

  SimConfig cfg;
  cfg.params = params_of(*scheme);
  if (j.contains("t")) {
    cfg.ts.push_back(j.at("t").get<std::size_t>());
  } else if (j.contains("t_range")) {
    const auto r = j.at("t_range").get<std::vector<std::size_t>>();
    if (r.size() != 2 || r[1] < r[0]) raise(Errc::bad_config, "t_range must be [lo, hi]");
    for (std::size_t t = r[0]; t <= r[1]; ++t) cfg.ts.push_back(t);
  } else {
    raise(Errc::bad_config, "config needs 't' or 't_range'");
  }
  cfg.trials = need(j, "trials").get<std::uint64_t>();
  if (cfg.trials == 0) raise(Errc::bad_config, "trials must be positive");
  cfg.seed = need(j, "seed").get<std::uint64_t>();
  if (j.contains("self_check")) cfg.self_check = j.at("self_check").get<bool>();
  if (j.contains("workers")) cfg.workers = j.at("workers").get<std::size_t>();
  if (cfg.workers < 1) raise(Errc::bad_config, "workers must be >= 1");
  if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
  return cfg;
}

std::vector<Xelt> plant_error(const CodeSpec& spec, std::size_t t, Xoshiro256& rng) {
  const std::size_t n = spec.n();
  if (t > n) raise(Errc::too_many_errors, "error weight exceeds the code length");
  const ExtFieldCtx& ext = *spec.ext();

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }

  std::vector<Xelt> e(n, ext.zero());
  for (std::size_t i = 0; i < t; ++i)
    e[idx[i]] = ext.element(1 + rng.below(ext.order() - 1));
  return e;
}

namespace {

struct Accum {
  std::uint64_t successes = 0;
  std::uint64_t miscorrections = 0;
  std::array<std::uint64_t, kFailureReasonCount> fail_by_reason{};
  std::vector<std::uint64_t> weight_hist;

  explicit Accum(std::size_t t) : weight_hist(t + 1, 0) {}

  void merge(const Accum& o) {
    successes += o.successes;
    miscorrections += o.miscorrections;
    for (std::size_t i = 0; i < fail_by_reason.size(); ++i)
      fail_by_reason[i] += o.fail_by_reason[i];
    for (std::size_t i = 0; i < weight_hist.size(); ++i) weight_hist[i] += o.weight_hist[i];
  }
};

void run_chunk(const SchemePtr& scheme, const SimConfig& cfg, std::size_t t, std::uint64_t lo,
               std::uint64_t hi, Accum& acc) {
  const ExtFieldCtx& ext = *scheme->code()->ext();
  const std::size_t k = scheme->k();
  const std::uint64_t order = ext.order();
  const DecodeOptions opts{cfg.self_check};

  for (std::uint64_t trial = lo; trial < hi; ++trial) {
    Xoshiro256 rng = derive_stream(cfg.seed, {static_cast<std::uint64_t>(t), trial});

    std::vector<Xelt> coeffs;
    coeffs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) coeffs.push_back(ext.element(rng.below(order)));
    const XPoly h(std::move(coeffs));

    std::vector<Xelt> y = scheme->code()->encode(h);
    const std::vector<Xelt> e = plant_error(*scheme->code(), t, rng);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = y[i] + e[i];

    const ProjectedWord proj = scheme->project_word(y);
    const auto res = fractional_decode(scheme, proj, opts);

    if (res.ok()) {
      if (res.value().message == h)
        ++acc.successes;
      else
        ++acc.miscorrections;
    } else {
      ++acc.fail_by_reason[static_cast<std::size_t>(res.failure().reason)];
    }

    const ProjectedWord pe = scheme->project_word(e);
    std::size_t w = 0;
    for (std::size_t i = 0; i < pe.n; ++i) {
      bool nz = false;
      for (std::size_t j = 0; j < pe.m; ++j) nz = nz || pe.rows[j][i] != 0;
      w += nz ? 1 : 0;
    }
    ++acc.weight_hist[w];
  }
}

}  // namespace

SimReport run_trials(const SimConfig& cfg) {
  if (cfg.ts.empty()) raise(Errc::bad_config, "no error weights to simulate");
  const SchemePtr scheme = build_scheme(cfg.params);
  const std::uint64_t q = scheme->code()->ext()->base()->order();

  std::vector<std::size_t> sizes;
  for (const auto& s : scheme->map()->sets()) sizes.push_back(s.size());

  SimReport rep;
  rep.params = cfg.params;
  rep.seed = cfg.seed;
  rep.trials = cfg.trials;
  rep.self_check = cfg.self_check;
  rep.radii = radius_report(scheme->n(), scheme->k(), scheme->l(), scheme->m(), sizes);

  for (const std::size_t t : cfg.ts) {
    const std::size_t workers = std::min<std::size_t>(
        std::max<std::size_t>(cfg.workers, 1), static_cast<std::size_t>(cfg.trials));
    std::vector<Accum> parts(workers, Accum(t));
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = cfg.trials * w / workers;
      const std::uint64_t hi = cfg.trials * (w + 1) / workers;
      threads.emplace_back(run_chunk, std::cref(scheme), std::cref(cfg), t, lo, hi,
                           std::ref(parts[w]));
    }
    for (auto& th : threads) th.join();
    Accum total(t);
    for (const Accum& p : parts) total.merge(p);

    SimRow row;
    row.t = t;
    row.trials = cfg.trials;
    row.successes = total.successes;
    row.miscorrections = total.miscorrections;
    row.fail_by_reason = total.fail_by_reason;
    row.weight_hist = total.weight_hist;

    const std::uint64_t bad = row.failures() + row.miscorrections;
    row.rate = static_cast<double>(bad) / static_cast<double>(cfg.trials);
    const auto ci = clopper_pearson(bad, cfg.trials);
    row.ci_lo = ci.first;
    row.ci_hi = ci.second;
    const BoundValue bv = failure_bound(q, scheme->m(), scheme->radius_exact(), t);
    row.bound = bv.value;
    row.bound_exact = bv.exact;
    row.bound_ok = row.ci_lo <= row.bound;
    row.exceeds_radius = t > scheme->radius();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

SimReport sweep(const SimConfig& cfg) { return run_trials(cfg); }

std::string report_csv(const SimReport& rep) {
  std::string out = "t,trials,fail,miscorrect,rate,ci_lo,ci_hi,bound\n";
  char buf[256];
  for (const SimRow& r : rep.rows) {
    std::snprintf(buf, sizeof(buf), "%llu,%llu,%llu,%llu,%.17g,%.17g,%.17g,%.17g\n",
                  static_cast<unsigned long long>(r.t),
                  static_cast<unsigned long long>(r.trials),
                  static_cast<unsigned long long>(r.failures()),
                  static_cast<unsigned long long>(r.miscorrections), r.rate, r.ci_lo, r.ci_hi,
                  r.bound);
    out += buf;
  }
  return out;
}

void write_report_csv(const std::string& path, const SimReport& rep) {
  std::ofstream out(path);
  if (!out) raise(Errc::bad_config, "cannot write file: " + path);
  out << report_csv(rep);
}

void write_report_json(const std::string& path, const SimReport& rep) {
  json j;
  j["format_version"] = 1;
  j["kind"] = "sim_report";
  j["algorithm"] = kRngAlgorithm;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["self_check"] = rep.self_check;

  json p;
  p["p"] = rep.params.p;
  p["s"] = rep.params.s;
  p["f"] = rep.params.f;
  p["l"] = rep.params.l;
  p["g"] = rep.params.g;
  p["zeta"] = rep.params.zeta;
  p["n"] = rep.params.n;
  p["k"] = rep.params.k;
  p["L"] = rep.params.L;
  p["m"] = rep.params.m;
  p["sets"] = rep.params.sets;
  j["params"] = p;

  json rad;
  rad["n"] = rep.radii.n;
  rad["k"] = rep.radii.k;
  rad["l"] = rep.radii.l;
  rad["m"] = rep.radii.m;
  rad["sizes"] = rep.radii.sizes;
  rad["row_dims"] = rep.radii.row_dims;
  rad["alpha"] = rat_str(rep.radii.alpha);
  rad["tau_classical"] = rat_str(rep.radii.tau_classical);
  rad["tau_classical_floor"] = rep.radii.tau_classical_floor.str();
  rad["tau_alpha"] = rat_str(rep.radii.tau_alpha);
  rad["tau_alpha_floor"] = rep.radii.tau_alpha_floor.str();
  rad["tau_irs"] = rat_str(rep.radii.tau_irs);
  rad["tau_irs_floor"] = rep.radii.tau_irs_floor.str();
  rad["tau_formula"] = rat_str(rep.radii.tau_formula);
  rad["tau_formula_floor"] = rep.radii.tau_formula_floor.str();
  rad["tau_construction"] = rat_str(rep.radii.tau_construction);
  rad["tau_construction_floor"] = rep.radii.tau_construction_floor.str();
  rad["rate"] = rat_str(rep.radii.rate);
  rad["rate_bound"] = rat_str(rep.radii.rate_bound);
  rad["condition_holds"] = rep.radii.condition_holds;
  j["radii"] = rad;

  json rows = json::array();
  for (const SimRow& r : rep.rows) {
    json row;
    row["t"] = r.t;
    row["trials"] = r.trials;
    row["successes"] = r.successes;
    row["miscorrections"] = r.miscorrections;
    json fails;
    for (std::size_t i = 0; i < kFailureReasonCount; ++i)
      fails[failure_tag(static_cast<FailureReason>(i))] = r.fail_by_reason[i];
    row["failures"] = fails;
    row["failures_total"] = r.failures();
    row["rate"] = r.rate;
    row["ci_lo"] = r.ci_lo;
    row["ci_hi"] = r.ci_hi;
    row["bound"] = r.bound;
    if (r.bound_exact) row["bound_exact"] = rat_str(*r.bound_exact);
    row["bound_ok"] = r.bound_ok;
    row["exceeds_radius"] = r.exceeds_radius;
    row["projected_weight_hist"] = r.weight_hist;
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;

  std::ofstream out(path);
  if (!out) raise(Errc::bad_config, "cannot write file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace fracrs
