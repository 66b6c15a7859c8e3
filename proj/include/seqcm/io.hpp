#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "seqcm/classify.hpp"

namespace seqcm {

/// `coef*X1^a*X2^b + ...` syntax; whitespace-insensitive, coefficients are
/// integers reduced mod p. Throws InputError with position info.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

struct IdealFile {
  RingPtr ring;
  Ideal ideal;
};

/// Text format: `vars:` line, `char:` line, optional `weights:` line, then one
/// generator per line. Overrides replace the file's characteristic/cap.
IdealFile parse_ideal_file(const std::filesystem::path& path,
                           std::optional<std::uint64_t> prime_override = {},
                           unsigned degree_cap = 40);
IdealFile parse_ideal_text(const std::string& text, const std::string& origin,
                           std::optional<std::uint64_t> prime_override = {},
                           unsigned degree_cap = 40);

/// {"vertices": n, "facets": [[...], ...]}
SimplicialComplex parse_complex_json(const std::string& text, bool allow_ghost_vertices = false);
SimplicialComplex parse_complex_file(const std::filesystem::path& path,
                                     bool allow_ghost_vertices = false);

/// `ideal: <file>` plus `component: <file> <dim>` lines; paths are relative to
/// the presentation file.
ModulePresentation parse_presentation_file(const std::filesystem::path& path,
                                           std::optional<std::uint64_t> prime_override = {},
                                           unsigned degree_cap = 40);

/// One parameter element per line, in the given ring.
std::vector<Polynomial> parse_sop_file(const std::filesystem::path& path, const RingPtr& ring);

std::string read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace seqcm
