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

#ifndef CONVALG_MATRIX_IO_HPP
#define CONVALG_MATRIX_IO_HPP

#include <string>

#include <json.hpp>

#include "polymat.hpp"
#include "realize.hpp"

namespace convalg {

/// Parses the matrix file format:
///   {"field":{"p":2},"k":2,"n":3,"rows":[[[1],[0],[0,1]],[[0],[1],[0,0,1]]]}
/// Coefficients ascending, index 0 = constant term. Rejects non-prime p,
/// ragged rows, and out-of-range coefficients (throws ParseError).
PolyMatrix parse_matrix_json(const std::string& text);
PolyMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const PolyMatrix& g);

nlohmann::json poly_to_json(const Poly& p);
nlohmann::json laurent_to_json(const LaurentPoly& x);
nlohmann::json fmatrix_to_json(const FMatrix& m);

/// Symbol stream text: one time step per line, space-separated integers in
/// [0, p); '#' starts a comment; blank lines are skipped.
SymbolStream parse_stream_text(const std::string& text, FieldSpec field);
std::string stream_to_text(const SymbolStream& s);

}  // namespace convalg

#endif  // CONVALG_MATRIX_IO_HPP
