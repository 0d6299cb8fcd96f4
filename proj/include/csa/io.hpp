#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "csa/algebra.hpp"
#include "csa/bialgebra.hpp"
#include "csa/bimodule.hpp"
#include "csa/matched.hpp"
#include "csa/report.hpp"

// JSON interchange. Parsing is strict: unknown fields, duplicate keys,
// duplicate records and out-of-range indices are InputErrors naming the
// source and the offending location. Indices are 1-based on disk.
// Coefficients are rational literals ("p" or "p/q"); plain JSON integers are
// accepted on input, serialization always writes strings.
namespace csa::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

// {"name"?, "dim", "mul": [[i, j, k, q], ...]}
Algebra parse_algebra(std::string_view text, std::string_view source = "input");
std::string serialize_algebra(const Algebra& a);

// {"vdim", "l": [[i, a, b, q], ...], "r": [...]}; the e_i-action sends v_a
// to sum_b q v_b. Index ranges depend on the base algebra.
Bimodule parse_bimodule(std::string_view text, const Algebra& base, std::string_view source = "input");
std::string serialize_bimodule(const Bimodule& m);

// {"a": algebra, "b": algebra, "la", "ra", "lb", "rb"}; la, ra act on b's
// space (indexed by a's basis), lb, rb on a's space.
CsMatchedPair parse_matched_pair(std::string_view text, std::string_view source = "input");
std::string serialize_matched_pair(const CsMatchedPair& p);

// {"name"?, "dim", "mul", "comul": [[k, i, j, q], ...]} with
// alpha(e_k) += q e_i (x) e_j.
Bialgebra parse_bialgebra(std::string_view text, std::string_view source = "input");
std::string serialize_bialgebra(const Bialgebra& bg);

std::string serialize_report(const Report& r);
std::string serialize_equivalence(const EquivalenceReport& e);

/// Plain-text rendering for terminals.
std::string render_report(const Report& r);

}  // namespace csa::io
