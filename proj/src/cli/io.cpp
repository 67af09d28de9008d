#include "ci2/cli/io.hpp"

#include "ci2/error.hpp"
#include "ci2/poly/parse.hpp"

#include <fstream>
#include <sstream>

namespace ci2::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Splits on commas and whitespace, recording 1-based columns.
std::vector<std::pair<std::size_t, std::string>> split_fields(const std::string& line) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ',' || line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ',' && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.emplace_back(start + 1, line.substr(start, i - start));
    }
    return out;
}

Scalar parse_scalar_at(const std::string& text, Field field, std::size_t line, std::size_t column) {
    try {
        return Scalar::parse(field, text);
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(e.what(), line, column);
    }
}

mpq_class json_rational(const json& v) {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw InputError("expected an integer or an \"a/b\" string");
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TextInput parse_text_input(const std::string& text, std::optional<std::uint64_t> prime_override) {
    TextInput out;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::uint64_t> header;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream h(line.substr(1));
            std::string word, value;
            h >> word;
            if (word == "field") {
                h >> value;
                std::uint64_t p = 0;
                try {
                    std::size_t used = 0;
                    p = std::stoull(value, &used);
                    if (used != value.size()) throw std::invalid_argument(value);
                } catch (const std::exception&) {
                    throw ParseError("malformed field header", line_no, 1);
                }
                header = p;
            }
            continue;
        }
        out.lines.emplace_back(line_no, line);
    }
    if (header && prime_override && *header != *prime_override)
        throw InputError("--prime " + std::to_string(*prime_override) + " conflicts with the file header field " +
                         std::to_string(*header));
    if (header) {
        out.field = Field::prime(*header);
        out.field_from_header = true;
    } else if (prime_override) {
        out.field = Field::prime(*prime_override);
    }
    return out;
}

TextInput read_text_input(const std::filesystem::path& path, std::optional<std::uint64_t> prime_override) {
    return parse_text_input(read_file(path), prime_override);
}

Matrix parse_matrix(const TextInput& in) {
    if (in.lines.empty()) throw InputError("matrix file has no rows");
    std::vector<Vector> rows;
    for (const auto& [line_no, line] : in.lines) {
        Vector row;
        for (const auto& [col, text] : split_fields(line)) row.push_back(parse_scalar_at(text, in.field, line_no, col));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows.front().size()),
                             line_no, 1);
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(in.field, rows);
}

std::vector<Polynomial> parse_polynomials(const TextInput& in, std::optional<std::size_t> n_vars) {
    std::size_t n = n_vars.value_or(0);
    if (!n_vars)
        for (const auto& [line_no, line] : in.lines) n = std::max(n, count_variables(line));
    std::vector<Polynomial> out;
    for (const auto& [line_no, line] : in.lines) out.push_back(parse_polynomial(line, in.field, n, line_no));
    return out;
}

PolyPair parse_pair(const TextInput& in) {
    if (in.lines.size() != 2)
        throw InputError("pair file must contain exactly two polynomials, found " + std::to_string(in.lines.size()));
    auto polys = parse_polynomials(in);
    return PolyPair::make(std::move(polys[0]), std::move(polys[1]));
}

Vector parse_vector(const std::string& text, Field field, std::size_t line) {
    Vector v;
    for (const auto& [col, t] : split_fields(text)) v.push_back(parse_scalar_at(t, field, line, col));
    return v;
}

LinearSubspace parse_subspace(const TextInput& in, Field field, std::size_t ambient_dim) {
    std::vector<Vector> basis;
    for (const auto& [line_no, line] : in.lines) {
        Vector v = parse_vector(line, field, line_no);
        if (v.size() != ambient_dim)
            throw ParseError("basis vector has " + std::to_string(v.size()) + " entries, expected " +
                                 std::to_string(ambient_dim),
                             line_no, 1);
        basis.push_back(std::move(v));
    }
    return LinearSubspace::from_basis(field, ambient_dim, basis);
}

mpq_class parse_rational(const std::string& text) {
    const Scalar s = Scalar::parse(Field::rationals(), text);
    return s.rational();
}

singgraph::NFInstance parse_graph_document(const json& doc, bool& has_mu) {
    if (!doc.is_object()) throw InputError("graph document must be an object");
    if (!doc.contains("N") || !doc["N"].is_number_integer()) throw InputError("graph document needs an integer N");
    const int N = doc["N"].get<int>();
    std::vector<std::pair<int, int>> arrows;
    if (doc.contains("arrows")) {
        for (const auto& a : doc["arrows"]) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
                throw InputError("arrows must be [from, to] integer pairs");
            arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
        }
    }
    const auto cls = singgraph::parse_graph_class(doc.value("class", std::string("prefix")));
    singgraph::NFInstance inst;
    inst.graph = singgraph::ResolutionGraph(N, std::move(arrows), cls);
    const int first = inst.graph.first_vertex();
    has_mu = doc.contains("mu");
    inst.mu.assign(static_cast<std::size_t>(N) + 1, 0);
    if (has_mu) {
        const auto& mu = doc["mu"];
        if (!mu.is_array() || mu.size() != static_cast<std::size_t>(N - first + 1))
            throw InputError("mu must list " + std::to_string(N - first + 1) + " values");
        for (int v = first; v <= N; ++v) inst.mu[static_cast<std::size_t>(v)] = json_rational(mu[v - first]);
        if (!doc.contains("n")) throw InputError("mu needs n");
    }
    inst.n = doc.contains("n") ? json_rational(doc["n"]) : mpq_class(1);
    if (doc.contains("delta")) {
        const auto& d = doc["delta"];
        if (!d.is_array() || d.size() != static_cast<std::size_t>(N))
            throw InputError("delta must list " + std::to_string(N) + " values (vertices 1..N)");
        std::vector<mpq_class> delta(static_cast<std::size_t>(N) + 1, 0);
        for (int v = 1; v <= N; ++v) delta[static_cast<std::size_t>(v)] = json_rational(d[v - 1]);
        inst.delta = std::move(delta);
    }
    if (doc.contains("L")) inst.L = doc["L"].get<int>();
    if (doc.contains("k")) inst.k = doc["k"].get<int>();
    return inst;
}

json read_json(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offsets are converted to line/column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("malformed JSON in " + path.string(), line, col);
    }
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.to_string());
    return a;
}

json to_json(const LinearSubspace& l) {
    json a = json::array();
    for (const auto& v : l.basis_vectors()) a.push_back(to_json(v));
    return a;
}

json to_json(const std::vector<mpq_class>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(q_str(q));
    return a;
}

}  // namespace ci2::cli
