#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fracrs/polynomials.hpp"
#include "fracrs/projection.hpp"

namespace fracrs {

/// Everything needed to rebuild a scheme from a file: the field tower, the
/// code, and the projection sets. All field elements travel as canonical
/// integer indices.
struct SetupParams {
  std::uint64_t p = 0;
  std::uint32_t s = 1;
  std::vector<std::uint32_t> f;  // base-field modulus, constant first
  std::uint32_t l = 1;
  std::vector<felt_t> g;              // extension modulus, constant first
  std::vector<std::uint64_t> zeta;    // working basis element indices
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint64_t> L;       // evaluation point indices
  std::size_t m = 0;
  std::vector<std::vector<felt_t>> sets;
};

SetupParams params_of(const ProjectionScheme& scheme);
SchemePtr build_scheme(const SetupParams& params);

struct MessageFile {
  SetupParams params;
  std::vector<std::uint64_t> coeffs;  // k entries, low degree first
};

struct CodewordFile {
  SetupParams params;
  std::vector<std::uint64_t> symbols;  // n entries
};

struct ProjectedFile {
  SetupParams params;
  ProjectedWord word;
};

struct DecodeResultFile {
  SetupParams params;
  bool ok = false;
  std::size_t t = 0;
  std::vector<std::uint64_t> message;           // when ok: k coefficients
  std::vector<std::vector<felt_t>> components;  // when ok: l rows, k entries each
  std::string reason;                           // when failed: stable tag
  std::string detail;
};

void write_message_file(const std::string& path, const MessageFile& f);
MessageFile read_message_file(const std::string& path);
void write_codeword_file(const std::string& path, const CodewordFile& f);
CodewordFile read_codeword_file(const std::string& path);
void write_projected_file(const std::string& path, const ProjectedFile& f);
ProjectedFile read_projected_file(const std::string& path);
void write_decode_result(const std::string& path, const DecodeResultFile& f);
DecodeResultFile read_decode_result(const std::string& path);

/// Index/value conversions between file payloads and field objects.
XPoly coeffs_to_poly(const ExtFieldCtx& ext, std::span<const std::uint64_t> coeffs,
                     std::size_t k);
std::vector<std::uint64_t> poly_to_coeffs(const ExtFieldCtx& ext, const XPoly& h, std::size_t k);
std::vector<Xelt> indices_to_word(const ExtFieldCtx& ext, std::span<const std::uint64_t> symbols);
std::vector<std::uint64_t> word_to_indices(const ExtFieldCtx& ext, std::span<const Xelt> word);
std::vector<std::vector<felt_t>> components_to_rows(std::span<const FPoly> comps, std::size_t k);

}  // namespace fracrs
