#pragma once

#include "ci2/exact/linear_subspace.hpp"
#include "ci2/exact/matrix.hpp"
#include "ci2/poly/point_context.hpp"
#include "ci2/singgraph/noether_fano.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ci2::cli {

using nlohmann::json;

/// Content lines of an input file with their 1-based line numbers. A
/// "# field p" line selects F_p; other '#' lines and blank lines are skipped.
struct TextInput {
    Field field;
    bool field_from_header = false;
    std::vector<std::pair<std::size_t, std::string>> lines;
};

std::string read_file(const std::filesystem::path& path);

/// `prime_override` (the global --prime) must agree with any header.
TextInput parse_text_input(const std::string& text, std::optional<std::uint64_t> prime_override);
TextInput read_text_input(const std::filesystem::path& path, std::optional<std::uint64_t> prime_override);

/// Rows of integers or a/b separated by whitespace or commas.
Matrix parse_matrix(const TextInput& in);

/// One polynomial per line in a common ring.
std::vector<Polynomial> parse_polynomials(const TextInput& in, std::optional<std::size_t> n_vars = std::nullopt);

/// Exactly two lines f1, f2.
PolyPair parse_pair(const TextInput& in);

/// Comma- or whitespace-separated scalars.
Vector parse_vector(const std::string& text, Field field, std::size_t line = 1);

/// Basis vectors, one per line, in chart coordinates.
LinearSubspace parse_subspace(const TextInput& in, Field field, std::size_t ambient_dim);

mpq_class parse_rational(const std::string& text);

/// {"N": 4, "arrows": [[2,1], ...], "class": "prefix", "mu": [...], "n": "1",
///  "delta": [...], "L": 0, "k": 2}. Multiplicities are listed from the first
/// vertex; rationals may be numbers or "a/b" strings.
singgraph::NFInstance parse_graph_document(const json& doc, bool& has_mu);
json read_json(const std::filesystem::path& path);

std::string q_str(const mpq_class& q);
json to_json(const Vector& v);
json to_json(const LinearSubspace& l);
json to_json(const std::vector<mpq_class>& v);

}  // namespace ci2::cli
