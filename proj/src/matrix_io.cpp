/*
   Copyright 2026 the convalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "convalg/matrix_io.hpp"

#include <sstream>

namespace convalg {

using nlohmann::json;

namespace {

std::uint64_t get_uint(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(std::string("matrix file: missing or invalid \"") + key + "\"");
    return j[key].get<std::uint64_t>();
}

}  // namespace

PolyMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("matrix file: top level must be an object");
    if (!j.contains("field") || !j["field"].is_object())
        throw ParseError("matrix file: missing \"field\" object");
    const std::uint64_t p = get_uint(j["field"], "p");

    FieldSpec field = [&] {
        try {
            return FieldSpec(static_cast<std::uint32_t>(p <= 0xFFFFFFFFull ? p : 0));
        } catch (const NotPrime& e) {
            throw ParseError(std::string("matrix file: ") + e.what());
        }
    }();

    const std::uint64_t k = get_uint(j, "k");
    const std::uint64_t n = get_uint(j, "n");
    if (k == 0 || n == 0) throw ParseError("matrix file: k and n must be positive");
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != k)
        throw ParseError("matrix file: \"rows\" must be an array of k rows");

    PolyMatrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        const json& row = j["rows"][i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("matrix file: row " + std::to_string(i) + " does not have n entries");
        for (std::size_t c = 0; c < n; ++c) {
            const json& entry = row[c];
            if (!entry.is_array())
                throw ParseError("matrix file: entry (" + std::to_string(i) + "," +
                                 std::to_string(c) + ") must be a coefficient array");
            std::vector<std::uint32_t> coeffs;
            coeffs.reserve(entry.size());
            for (const json& v : entry) {
                if (!v.is_number_integer() || v.get<long long>() < 0 ||
                    v.get<std::uint64_t>() >= field.modulus())
                    throw ParseError("matrix file: coefficient out of range [0, p) in entry (" +
                                     std::to_string(i) + "," + std::to_string(c) + ")");
                coeffs.push_back(v.get<std::uint32_t>());
            }
            g.set(i, c, Poly(field, std::move(coeffs)));
        }
    }
    return g;
}

PolyMatrix parse_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("matrix file: ") + e.what());
    }
    return matrix_from_json(j);
}

json poly_to_json(const Poly& p) {
    json a = json::array();
    if (p.is_zero()) {
        a.push_back(std::uint32_t{0});
        return a;
    }
    for (std::uint32_t c : p.coeffs()) a.push_back(c);
    return a;
}

json laurent_to_json(const LaurentPoly& x) {
    json a = json::array();
    for (std::uint32_t c : x.coeffs()) a.push_back(c);
    return json{{"offset", x.offset()}, {"coeffs", a}};
}

json matrix_to_json(const PolyMatrix& g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(poly_to_json(g.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"field", {{"p", g.field().modulus()}}},
                {"k", g.rows()},
                {"n", g.cols()},
                {"rows", rows}};
}

json fmatrix_to_json(const FMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

SymbolStream parse_stream_text(const std::string& text, FieldSpec field) {
    SymbolStream s{field, 0, {}};
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::uint32_t> symbol;
        long long v;
        while (ls >> v) {
            if (v < 0 || static_cast<std::uint64_t>(v) >= field.modulus())
                throw ParseError("stream file line " + std::to_string(lineno) +
                                 ": symbol out of range [0, p)");
            symbol.push_back(static_cast<std::uint32_t>(v));
        }
        if (!ls.eof())
            throw ParseError("stream file line " + std::to_string(lineno) + ": not an integer");
        if (symbol.empty()) continue;
        if (s.symbols.empty())
            s.width = symbol.size();
        else if (symbol.size() != s.width)
            throw ParseError("stream file line " + std::to_string(lineno) +
                             ": inconsistent symbol width");
        s.symbols.push_back(std::move(symbol));
    }
    return s;
}

std::string stream_to_text(const SymbolStream& s) {
    std::string out;
    for (const auto& symbol : s.symbols) {
        for (std::size_t i = 0; i < symbol.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(symbol[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace convalg
