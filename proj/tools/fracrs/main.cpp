// fracrs — command-line interface for fractional decoding of Reed-Solomon
// codes over extension fields.
//
// Subcommands:
//   radius    radii and rate-condition report for a projection scheme
//   tables    tabulated reference failure probabilities for two example
//             codes, compared against direct evaluation of the bound
//   encode    message file -> codeword file (or generate a seeded message)
//   corrupt   add a random weight-t error to a codeword file
//   download  project a codeword file to its m x n fractional download
//   decode    run the fractional decoder on a projected file
//   simulate  seeded Monte-Carlo sweep driven by a JSON config
//
// Exit codes: 0 success, 1 decode failure, 2 usage or config error.

#include <cinttypes>
#include <cstdarg>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fracrs/fracrs.hpp"

namespace {

using nlohmann::json;
using namespace fracrs;

std::string rat_str(const Rat& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

Rat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    raise(Errc::bad_config, "cannot parse rational: " + s);
  }
}

// ---------------------------------------------------------------------------
// radius

struct RadiusOpts {
  std::size_t n = 0, k = 0, l = 0, m = 0;
  std::vector<std::size_t> sizes;
  std::string alpha;
  bool as_json = false;
};

json radius_json(const RadiusReport& r) {
  auto tau = [](const Rat& exact, const Int& floor) {
    json t;
    t["exact"] = rat_str(exact);
    t["floor"] = to_ll(floor);
    return t;
  };
  json j;
  j["format_version"] = 1;
  j["kind"] = "radius_report";
  j["n"] = r.n;
  j["k"] = r.k;
  j["l"] = r.l;
  j["m"] = r.m;
  j["sizes"] = r.sizes;
  j["row_dims"] = r.row_dims;
  j["alpha"] = rat_str(r.alpha);
  j["rate"] = rat_str(r.rate);
  j["rate_bound"] = rat_str(r.rate_bound);
  j["condition_holds"] = r.condition_holds;
  j["tau_classical"] = tau(r.tau_classical, r.tau_classical_floor);
  j["tau_alpha"] = tau(r.tau_alpha, r.tau_alpha_floor);
  j["tau_irs"] = tau(r.tau_irs, r.tau_irs_floor);
  j["tau_formula"] = tau(r.tau_formula, r.tau_formula_floor);
  j["tau_construction"] = tau(r.tau_construction, r.tau_construction_floor);
  j["exceeds_classical"] = {
      {"formula", r.tau_formula_floor > r.tau_classical_floor},
      {"construction", r.tau_construction_floor > r.tau_classical_floor},
  };
  return j;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int run_radius(const RadiusOpts& o) {
  std::optional<std::vector<std::size_t>> sizes;
  if (!o.sizes.empty()) sizes = o.sizes;
  std::optional<Rat> alpha;
  if (!o.alpha.empty()) alpha = parse_rational(o.alpha);
  const RadiusReport r = radius_report(o.n, o.k, o.l, o.m, sizes, alpha);

  if (o.as_json) {
    std::cout << radius_json(r).dump(2) << "\n";
    return 0;
  }

  auto line = [](const char* name, const Rat& exact, const Int& floor) {
    std::cout << fmt("  %-18s %12s  -> %lld\n", name, rat_str(exact).c_str(), to_ll(floor));
  };
  std::cout << fmt("n %zu  k %zu  l %zu  m %zu\n", r.n, r.k, r.l, r.m);
  std::cout << fmt("  %-18s %12s\n", "alpha", rat_str(r.alpha).c_str());
  std::cout << fmt("  %-18s %12s\n", "sizes |A_j|", join_sizes(r.sizes).c_str());
  std::cout << fmt("  %-18s %12s\n", "row dims k_j", join_sizes(r.row_dims).c_str());
  std::cout << fmt("  %-18s %12s  (bound %s)  %s\n", "rate k/n", rat_str(r.rate).c_str(),
                   rat_str(r.rate_bound).c_str(), r.condition_holds ? "condition holds" : "CONDITION FAILS");
  line("tau classical", r.tau_classical, r.tau_classical_floor);
  line("tau alpha", r.tau_alpha, r.tau_alpha_floor);
  line("tau irs", r.tau_irs, r.tau_irs_floor);
  line("tau formula", r.tau_formula, r.tau_formula_floor);
  line("tau construction", r.tau_construction, r.tau_construction_floor);
  if (!r.condition_holds)
    std::cout << "  warning: rate condition fails; the projection radius can fall below"
                 " the alpha radius\n";
  if (r.tau_construction_floor > r.tau_classical_floor)
    std::cout << "  note: projection radius (construction) exceeds the classical radius\n";
  if (r.tau_formula_floor > r.tau_classical_floor)
    std::cout << "  note: projection radius (formula) exceeds the classical radius\n";
  return 0;
}

// ---------------------------------------------------------------------------
// tables

struct TablesOpts {
  int example = 0;
  std::uint64_t q = 2;
  bool as_json = false;
};

struct ExampleDef {
  std::size_t n, k, l;
  std::size_t table_m;                // row dimension the probability table uses
  std::vector<std::size_t> ms;        // m values listed with radii
  bool radii_use_formula;             // which convention the listed tau_P follows
  std::vector<std::size_t> ts;
  std::vector<double> printed;        // tabulated reference values per t
};

const ExampleDef kExamples[2] = {
    {31, 4, 5, 3, {1, 2, 3, 4}, true, {12, 13, 14, 15}, {2e-6, 7e-5, 2e-3, 8e-2}},
    {31, 6, 5, 4, {2, 3, 4}, false, {11, 12, 13, 14, 15, 16},
     {1e-9, 4e-8, 1e-6, 4e-5, 1e-3, 5e-2}},
};

int run_tables(const TablesOpts& o) {
  const ExampleDef& ex = kExamples[o.example - 1];

  json out;
  out["format_version"] = 1;
  out["kind"] = "example_tables";
  out["example"] = o.example;
  out["code"] = {{"n", ex.n}, {"k", ex.k}, {"l", ex.l}};
  out["bound_q"] = o.q;
  out["bound_m"] = ex.table_m;

  if (!o.as_json)
    std::cout << fmt("Example %d: length %zu, dimension %zu, symbols over a degree-%zu"
                     " extension (alpha = m/%zu)\n\n",
                     o.example, ex.n, ex.k, ex.l, ex.l);

  json radii = json::array();
  if (!o.as_json) std::cout << "  radii (floored):\n";
  for (const std::size_t m : ex.ms) {
    const RadiusReport r = radius_report(ex.n, ex.k, ex.l, m);
    const Int& proj = ex.radii_use_formula ? r.tau_formula_floor : r.tau_construction_floor;
    radii.push_back({{"m", m},
                     {"tau_alpha", to_ll(r.tau_alpha_floor)},
                     {"tau_projection", to_ll(proj)}});
    if (!o.as_json)
      std::cout << fmt("    m=%zu: tau_alpha = %-3lld tau_P = %lld\n", m,
                       to_ll(r.tau_alpha_floor), to_ll(proj));
  }
  out["radii"] = radii;

  const RadiusReport tr = radius_report(ex.n, ex.k, ex.l, ex.table_m);
  out["tau_formula"] = rat_str(tr.tau_formula);
  out["tau_construction"] = rat_str(tr.tau_construction);

  if (!o.as_json) {
    std::cout << fmt("\n  failure-probability table (m = %zu), bound evaluated with q = %" PRIu64
                     "%s\n",
                     ex.table_m, o.q,
                     o.q == 2 ? " (the tabulated parameters; --q to override)" : "");
    std::cout << fmt("  radius conventions: formula tau_P = %s, construction tau_P = %s"
                     " (sizes %s)\n\n",
                     rat_str(tr.tau_formula).c_str(), rat_str(tr.tau_construction).c_str(),
                     join_sizes(tr.sizes).c_str());
    std::cout << fmt("  %-4s %-10s %-14s %-10s %-14s %-10s\n", "t", "printed", "bound(frm)",
                     "ratio", "bound(con)", "ratio");
  }

  json rows = json::array();
  for (std::size_t i = 0; i < ex.ts.size(); ++i) {
    const std::size_t t = ex.ts[i];
    const double printed = ex.printed[i];
    const BoundValue bf = failure_bound(o.q, ex.table_m, tr.tau_formula, t);
    const BoundValue bc = failure_bound(o.q, ex.table_m, tr.tau_construction, t);
    json row;
    row["t"] = t;
    row["printed"] = printed;
    row["formula"] = {{"value", bf.value}};
    if (bf.exact) row["formula"]["exact"] = rat_str(*bf.exact);
    row["construction"] = {{"value", bc.value}};
    if (bc.exact) row["construction"]["exact"] = rat_str(*bc.exact);
    row["ratio_formula"] = bf.value / printed;
    row["ratio_construction"] = bc.value / printed;
    rows.push_back(std::move(row));
    if (!o.as_json)
      std::cout << fmt("  %-4zu %-10.3g %-14.6g %-10.3g %-14.6g %-10.3g\n", t, printed,
                       bf.value, bf.value / printed, bc.value, bc.value / printed);
  }
  out["rows"] = rows;

  if (!o.as_json)
    std::cout << "\n  note: tabulated values do not match direct evaluation of the bound;"
                 " the ratio columns quantify the discrepancy.\n";
  else
    std::cout << out.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// pipeline: encode / corrupt / download / decode

struct EncodeOpts {
  std::string message;      // read an existing message file
  bool random = false;      // or generate one
  std::uint64_t seed = 0;
  std::string message_out;  // where the generated message goes
  std::string out;
  // scheme parameters for --random
  std::uint64_t p = 0;
  std::uint32_t s = 1;
  std::uint32_t l = 0;
  std::size_t n = 0, k = 0, m = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> L;
};

SchemePtr scheme_from_flags(const EncodeOpts& o) {
  FieldPtr base = FieldCtx::make(o.p, o.s);
  ExtFieldPtr ext = ExtFieldCtx::make(std::move(base), o.l);
  std::optional<std::vector<std::uint64_t>> L;
  if (!o.L.empty()) L = o.L;
  CodeSpecPtr code = CodeSpec::make(std::move(ext), o.n, o.k, L);
  std::optional<std::vector<std::size_t>> sizes;
  if (!o.sizes.empty()) sizes = o.sizes;
  return ProjectionScheme::make(std::move(code), o.m, sizes, std::nullopt);
}

int run_encode(const EncodeOpts& o) {
  MessageFile mf;
  if (o.random) {
    if (o.p == 0 || o.l == 0 || o.n == 0 || o.k == 0 || o.m == 0)
      raise(Errc::bad_config, "--random needs --p --l --n --k --m (and optionally --s)");
    if (o.message_out.empty())
      raise(Errc::bad_config, "--random needs --message-out for the generated message");
    const SchemePtr scheme = scheme_from_flags(o);
    mf.params = params_of(*scheme);
    Xoshiro256 rng = derive_stream(o.seed, {});
    const std::uint64_t order = scheme->code()->ext()->order();
    for (std::size_t i = 0; i < o.k; ++i) mf.coeffs.push_back(rng.below(order));
    write_message_file(o.message_out, mf);
  } else {
    mf = read_message_file(o.message);
  }

  const SchemePtr scheme = build_scheme(mf.params);
  const ExtFieldCtx& ext = *scheme->code()->ext();
  const XPoly h = coeffs_to_poly(ext, mf.coeffs, scheme->k());
  const std::vector<Xelt> y = scheme->code()->encode(h);

  CodewordFile cf;
  cf.params = mf.params;
  cf.symbols = word_to_indices(ext, y);
  write_codeword_file(o.out, cf);
  std::cout << fmt("encoded %zu message coefficients into %zu symbols -> %s\n", scheme->k(),
                   y.size(), o.out.c_str());
  return 0;
}

struct CorruptOpts {
  std::string in, out;
  std::size_t t = 0;
  std::uint64_t seed = 0;
};

int run_corrupt(const CorruptOpts& o) {
  CodewordFile cf = read_codeword_file(o.in);
  const SchemePtr scheme = build_scheme(cf.params);
  const ExtFieldCtx& ext = *scheme->code()->ext();
  std::vector<Xelt> y = indices_to_word(ext, cf.symbols);
  Xoshiro256 rng = derive_stream(o.seed, {static_cast<std::uint64_t>(o.t)});
  const std::vector<Xelt> e = plant_error(*scheme->code(), o.t, rng);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = y[i] + e[i];
  cf.symbols = word_to_indices(ext, y);
  write_codeword_file(o.out, cf);
  std::cout << fmt("planted a weight-%zu error -> %s\n", o.t, o.out.c_str());
  return 0;
}

struct IoOpts {
  std::string in, out;
};

int run_download(const IoOpts& o) {
  const CodewordFile cf = read_codeword_file(o.in);
  const SchemePtr scheme = build_scheme(cf.params);
  ProjectedFile pf;
  pf.params = cf.params;
  pf.word = scheme->project_word(indices_to_word(*scheme->code()->ext(), cf.symbols));
  write_projected_file(o.out, pf);
  std::cout << fmt("downloaded %zu x %zu = %zu base-field symbols -> %s\n", pf.word.m,
                   pf.word.n, pf.word.m * pf.word.n, o.out.c_str());
  return 0;
}

int run_decode(const IoOpts& o) {
  const ProjectedFile pf = read_projected_file(o.in);
  const SchemePtr scheme = build_scheme(pf.params);
  const ExtFieldCtx& ext = *scheme->code()->ext();

  const auto res = fractional_decode(scheme, pf.word);

  DecodeResultFile rf;
  rf.params = pf.params;
  if (res.ok()) {
    const RecoveredMessage& rm = res.value();
    rf.ok = true;
    rf.t = rm.t;
    rf.message = poly_to_coeffs(ext, rm.message, scheme->k());
    rf.components = components_to_rows(rm.components, scheme->k());
    write_decode_result(o.out, rf);
    std::cout << fmt("decoded: %zu column errors corrected -> %s\n", rm.t, o.out.c_str());
    return 0;
  }
  const DecodeFailure& f = res.failure();
  rf.ok = false;
  rf.reason = failure_tag(f.reason);
  rf.detail = f.detail;
  write_decode_result(o.out, rf);
  std::cerr << fmt("decode failure: %s (%s)\n", rf.reason.c_str(), rf.detail.c_str());
  return 1;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOpts {
  std::string config;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::string out;
};

int run_simulate(const SimulateOpts& o) {
  SimConfig cfg = load_sim_config(o.config);
  if (o.trials) cfg.trials = *o.trials;
  if (o.seed) cfg.seed = *o.seed;
  if (o.workers) cfg.workers = *o.workers;
  if (!o.out.empty()) cfg.out = o.out;
  if (cfg.trials == 0) raise(Errc::bad_config, "trials must be positive");
  if (cfg.workers < 1) raise(Errc::bad_config, "workers must be >= 1");
  if (cfg.out.empty())
    raise(Errc::bad_config, "no output path: set \"out\" in the config or pass --out");

  const SimReport rep = sweep(cfg);
  write_report_json(cfg.out + ".json", rep);
  write_report_csv(cfg.out + ".csv", rep);
  std::cout << report_csv(rep);
  std::cout << fmt("wrote %s.json and %s.csv\n", cfg.out.c_str(), cfg.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional decoding of Reed-Solomon codes over extension fields"};
  app.require_subcommand(1);
  int rc = 0;

  RadiusOpts ro;
  CLI::App* radius = app.add_subcommand("radius", "radii and rate-condition report");
  radius->add_option("--n", ro.n, "code length")->required();
  radius->add_option("--k", ro.k, "code dimension")->required();
  radius->add_option("--l", ro.l, "extension degree")->required();
  radius->add_option("--m", ro.m, "projected rows (download fraction m/l)")->required();
  radius->add_option("--sizes", ro.sizes, "set sizes |A_j| (default: ceil(k/m) each)")
      ->delimiter(',');
  radius->add_option("--alpha", ro.alpha, "download fraction as p/q (default m/l)");
  radius->add_flag("--json", ro.as_json, "emit JSON");
  radius->callback([&] { rc = run_radius(ro); });

  TablesOpts to;
  CLI::App* tables =
      app.add_subcommand("tables", "reference failure-probability tables vs the direct bound");
  tables->add_option("--example", to.example, "example id (1 or 2)")
      ->required()
      ->check(CLI::Range(1, 2));
  tables->add_option("--q", to.q, "field size used in the bound (default 2)");
  tables->add_flag("--json", to.as_json, "emit JSON");
  tables->callback([&] { rc = run_tables(to); });

  EncodeOpts eo;
  CLI::App* encode = app.add_subcommand("encode", "message file -> codeword file");
  CLI::Option* msg = encode->add_option("--message", eo.message, "message file to encode");
  CLI::Option* rnd =
      encode->add_flag("--random", eo.random, "generate a seeded random message instead");
  msg->excludes(rnd);
  rnd->excludes(msg);
  encode->add_option("--seed", eo.seed, "seed for --random (default 0)");
  encode->add_option("--message-out", eo.message_out, "write the generated message here");
  encode->add_option("--out", eo.out, "codeword file")->required();
  encode->add_option("--p", eo.p, "base-field characteristic");
  encode->add_option("--s", eo.s, "base field is F_(p^s) (default 1)");
  encode->add_option("--l", eo.l, "extension degree");
  encode->add_option("--n", eo.n, "code length");
  encode->add_option("--k", eo.k, "code dimension");
  encode->add_option("--m", eo.m, "projected rows");
  encode->add_option("--sizes", eo.sizes, "set sizes |A_j|")->delimiter(',');
  encode->add_option("--L", eo.L, "evaluation point indices")->delimiter(',');
  encode->callback([&] {
    if (!eo.random && eo.message.empty())
      throw CLI::RequiredError("--message or --random");
    rc = run_encode(eo);
  });

  CorruptOpts co;
  CLI::App* corrupt = app.add_subcommand("corrupt", "add a random weight-t error");
  corrupt->add_option("--in", co.in, "codeword file")->required();
  corrupt->add_option("--out", co.out, "corrupted codeword file")->required();
  corrupt->add_option("--t", co.t, "error weight")->required();
  corrupt->add_option("--seed", co.seed, "seed (default 0)");
  corrupt->callback([&] { rc = run_corrupt(co); });

  IoOpts dlo;
  CLI::App* download =
      app.add_subcommand("download", "project a codeword to its fractional download");
  download->add_option("--in", dlo.in, "codeword file")->required();
  download->add_option("--out", dlo.out, "projected file")->required();
  download->callback([&] { rc = run_download(dlo); });

  IoOpts deo;
  CLI::App* decode = app.add_subcommand("decode", "decode a projected file");
  decode->add_option("--in", deo.in, "projected file")->required();
  decode->add_option("--out", deo.out, "decode-result file")->required();
  decode->callback([&] { rc = run_decode(deo); });

  SimulateOpts so;
  CLI::App* simulate = app.add_subcommand("simulate", "seeded Monte-Carlo sweep");
  simulate->add_option("--config", so.config, "JSON config file")->required();
  simulate->add_option("--trials", so.trials, "override trial count");
  simulate->add_option("--seed", so.seed, "override master seed");
  simulate->add_option("--workers", so.workers, "override worker count");
  simulate->add_option("--out", so.out, "override output base path");
  simulate->callback([&] { rc = run_simulate(so); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const fracrs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
