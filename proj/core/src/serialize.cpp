#include "fracrs/serialize.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace fracrs {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;
// JSON numbers interoperate exactly only within the double-precision
// integer range; element indices beyond it are refused at the boundary.
constexpr std::uint64_t kMaxJsonInt = 1ULL << 53;

void check_index(std::uint64_t v) {
  if (v >= kMaxJsonInt)
    raise(Errc::unsupported, "element index too large for interoperable JSON integers");
}

json params_to_json(const SetupParams& p) {
  json j;
  j["p"] = p.p;
  j["s"] = p.s;
  j["f"] = p.f;
  j["l"] = p.l;
  j["g"] = p.g;
  for (std::uint64_t z : p.zeta) check_index(z);
  j["zeta"] = p.zeta;
  j["n"] = p.n;
  j["k"] = p.k;
  j["L"] = p.L;
  j["m"] = p.m;
  j["sets"] = p.sets;
  return j;
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key))
    raise(Errc::bad_config, std::string("missing field '") + key + "' in file");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    raise(Errc::bad_config, std::string("field '") + key + "' has the wrong type");
  }
}

SetupParams params_from_json(const json& j) {
  SetupParams p;
  p.p = get_field<std::uint64_t>(j, "p");
  p.s = get_field<std::uint32_t>(j, "s");
  p.f = get_field<std::vector<std::uint32_t>>(j, "f");
  p.l = get_field<std::uint32_t>(j, "l");
  p.g = get_field<std::vector<felt_t>>(j, "g");
  p.zeta = get_field<std::vector<std::uint64_t>>(j, "zeta");
  p.n = get_field<std::size_t>(j, "n");
  p.k = get_field<std::size_t>(j, "k");
  p.L = get_field<std::vector<std::uint64_t>>(j, "L");
  p.m = get_field<std::size_t>(j, "m");
  p.sets = get_field<std::vector<std::vector<felt_t>>>(j, "sets");
  return p;
}

json load_file(const std::string& path, const char* expected_kind) {
  std::ifstream in(path);
  if (!in) raise(Errc::bad_config, "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    raise(Errc::bad_config, "malformed JSON in " + path + ": " + e.what());
  }
  if (get_field<int>(j, "format_version") != kFormatVersion)
    raise(Errc::bad_config, "unsupported format_version in " + path);
  if (get_field<std::string>(j, "kind") != expected_kind)
    raise(Errc::bad_config, std::string("expected a '") + expected_kind + "' file: " + path);
  return j;
}

void store_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) raise(Errc::bad_config, "cannot write file: " + path);
  out << j.dump(2) << '\n';
}

json file_header(const char* kind, const SetupParams& p) {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind;
  j["params"] = params_to_json(p);
  return j;
}

SetupParams params_member(const json& j) {
  if (!j.contains("params") || !j.at("params").is_object())
    raise(Errc::bad_config, "missing 'params' object in file");
  return params_from_json(j.at("params"));
}

}  // namespace

SetupParams params_of(const ProjectionScheme& scheme) {
  SetupParams p;
  const auto& ext = *scheme.code()->ext();
  const auto& base = *ext.base();
  p.p = base.p();
  p.s = base.s();
  p.f = base.modulus();
  p.l = ext.l();
  p.g = std::vector<felt_t>(ext.modulus().begin(), ext.modulus().end());
  p.zeta = ext.zeta_indices();
  p.n = scheme.n();
  p.k = scheme.k();
  p.L.reserve(p.n);
  for (const Felt& a : scheme.code()->eval_points()) p.L.push_back(a.index());
  p.m = scheme.m();
  p.sets.reserve(p.m);
  for (const auto& s : scheme.map()->sets()) {
    std::vector<felt_t> idx;
    idx.reserve(s.size());
    for (const Felt& w : s) idx.push_back(w.index());
    p.sets.push_back(std::move(idx));
  }
  return p;
}

SchemePtr build_scheme(const SetupParams& params) {
  FieldPtr base = FieldCtx::make(params.p, params.s,
                                 params.f.empty() ? std::nullopt
                                                  : std::optional(params.f));
  ExtFieldPtr ext = ExtFieldCtx::make(
      std::move(base), params.l, params.g.empty() ? std::nullopt : std::optional(params.g),
      params.zeta.empty() ? std::nullopt : std::optional(params.zeta));
  CodeSpecPtr code = CodeSpec::make(std::move(ext), params.n, params.k,
                                    params.L.empty() ? std::nullopt : std::optional(params.L));
  return ProjectionScheme::make(std::move(code), params.m, std::nullopt, params.sets);
}

void write_message_file(const std::string& path, const MessageFile& f) {
  json j = file_header("message", f.params);
  for (auto v : f.coeffs) check_index(v);
  j["message"] = f.coeffs;
  store_file(path, j);
}

MessageFile read_message_file(const std::string& path) {
  const json j = load_file(path, "message");
  MessageFile f;
  f.params = params_member(j);
  f.coeffs = get_field<std::vector<std::uint64_t>>(j, "message");
  return f;
}

void write_codeword_file(const std::string& path, const CodewordFile& f) {
  json j = file_header("codeword", f.params);
  for (auto v : f.symbols) check_index(v);
  j["codeword"] = f.symbols;
  store_file(path, j);
}

CodewordFile read_codeword_file(const std::string& path) {
  const json j = load_file(path, "codeword");
  CodewordFile f;
  f.params = params_member(j);
  f.symbols = get_field<std::vector<std::uint64_t>>(j, "codeword");
  return f;
}

void write_projected_file(const std::string& path, const ProjectedFile& f) {
  json j = file_header("projected", f.params);
  json w;
  w["m"] = f.word.m;
  w["n"] = f.word.n;
  w["rows"] = f.word.rows;
  j["projected"] = w;
  store_file(path, j);
}

ProjectedFile read_projected_file(const std::string& path) {
  const json j = load_file(path, "projected");
  ProjectedFile f;
  f.params = params_member(j);
  if (!j.contains("projected")) raise(Errc::bad_config, "missing 'projected' object");
  const json& w = j.at("projected");
  f.word.m = get_field<std::size_t>(w, "m");
  f.word.n = get_field<std::size_t>(w, "n");
  f.word.rows = get_field<std::vector<std::vector<felt_t>>>(w, "rows");
  return f;
}

void write_decode_result(const std::string& path, const DecodeResultFile& f) {
  json j = file_header("decode_result", f.params);
  j["ok"] = f.ok;
  if (f.ok) {
    j["t"] = f.t;
    for (auto v : f.message) check_index(v);
    j["message"] = f.message;
    j["components"] = f.components;
  } else {
    j["reason"] = f.reason;
    j["detail"] = f.detail;
  }
  store_file(path, j);
}

DecodeResultFile read_decode_result(const std::string& path) {
  const json j = load_file(path, "decode_result");
  DecodeResultFile f;
  f.params = params_member(j);
  f.ok = get_field<bool>(j, "ok");
  if (f.ok) {
    f.t = get_field<std::size_t>(j, "t");
    f.message = get_field<std::vector<std::uint64_t>>(j, "message");
    f.components = get_field<std::vector<std::vector<felt_t>>>(j, "components");
  } else {
    f.reason = get_field<std::string>(j, "reason");
    f.detail = get_field<std::string>(j, "detail");
  }
  return f;
}

XPoly coeffs_to_poly(const ExtFieldCtx& ext, std::span<const std::uint64_t> coeffs,
                     std::size_t k) {
  if (coeffs.size() > k) raise(Errc::degree_too_high, "message has more than k coefficients");
  std::vector<Xelt> c;
  c.reserve(coeffs.size());
  for (std::uint64_t v : coeffs) c.push_back(ext.element(v));
  return XPoly(std::move(c));
}

std::vector<std::uint64_t> poly_to_coeffs(const ExtFieldCtx& ext, const XPoly& h, std::size_t k) {
  if (!h.degree_less(k)) raise(Errc::degree_too_high, "polynomial degree must be < k");
  std::vector<std::uint64_t> out(k, 0);
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) out[i] = ext.index(h.coeffs()[i]);
  return out;
}

std::vector<Xelt> indices_to_word(const ExtFieldCtx& ext, std::span<const std::uint64_t> symbols) {
  std::vector<Xelt> out;
  out.reserve(symbols.size());
  for (std::uint64_t v : symbols) out.push_back(ext.element(v));
  return out;
}

std::vector<std::uint64_t> word_to_indices(const ExtFieldCtx& ext, std::span<const Xelt> word) {
  std::vector<std::uint64_t> out;
  out.reserve(word.size());
  for (const Xelt& x : word) out.push_back(ext.index(x));
  return out;
}

std::vector<std::vector<felt_t>> components_to_rows(std::span<const FPoly> comps, std::size_t k) {
  std::vector<std::vector<felt_t>> out;
  out.reserve(comps.size());
  for (const FPoly& c : comps) {
    if (!c.degree_less(k)) raise(Errc::degree_too_high, "component degree must be < k");
    std::vector<felt_t> row(k, 0);
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) row[i] = c.coeffs()[i].index();
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace fracrs
