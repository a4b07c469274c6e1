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

// convalg: analysis, normal forms, state-space checks, realization and
// encoding for convolutional codes over prime fields.
//
// Exit codes: 0 success, 1 usage, 2 parse/format error, 3 mathematical
// precondition violated, 4 a theorem check found a counterexample.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "convalg/matrix_io.hpp"
#include "convalg/realize.hpp"
#include "convalg/statespace.hpp"

using nlohmann::json;
using namespace convalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerifyFailed = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PolyMatrix load_matrix(const std::string& path) { return parse_matrix_json(read_file(path)); }

std::string matrix_text(const PolyMatrix& g) {
    std::string out;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (j) out += "  ";
            out += g.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

std::string fmatrix_text(const FMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += std::to_string(m(i, j));
        }
        out += '\n';
    }
    if (m.rows() == 0) out += "(empty)\n";
    return out;
}

std::string int_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

json state_to_json(const StateVector& s) {
    json a = json::array();
    for (const auto& c : s.components) a.push_back(poly_to_json(c));
    return a;
}

std::string state_text(const StateVector& s) {
    std::string out;
    for (std::size_t j = 0; j < s.components.size(); ++j) {
        if (j) out += ' ';
        out += s.components[j].str();
    }
    return out;
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump() << '\n';
    else
        std::cout << text;
}

int cmd_analyze(const std::string& file, bool with_oracle, bool as_json) {
    const PolyMatrix g = load_matrix(file);
    const DegreeProfile prof = degree_profile(g);

    json j{{"field", {{"p", g.field().modulus()}}},
           {"k", g.rows()},
           {"n", g.cols()},
           {"rank", g.rows()},
           {"row_degrees", prof.row_degrees},
           {"extdeg", prof.extdeg},
           {"intdeg", prof.intdeg},
           {"reduced", prof.reduced},
           {"basic", prof.basic},
           {"canonical", prof.canonical},
           {"mdeg_lower", prof.intdeg},
           {"mdeg_upper", prof.extdeg}};

    std::string text;
    text += "field: GF(" + std::to_string(g.field().modulus()) + ")   size: " +
            std::to_string(g.rows()) + " x " + std::to_string(g.cols()) +
            "   rank: " + std::to_string(g.rows()) + "\n";
    text += "row degrees: " + int_list(prof.row_degrees) +
            "   extdeg: " + std::to_string(prof.extdeg) +
            "   intdeg: " + std::to_string(prof.intdeg) + "\n";
    text += std::string("reduced: ") + (prof.reduced ? "yes" : "no") +
            "   basic: " + (prof.basic ? "yes" : "no") +
            "   canonical: " + (prof.canonical ? "yes" : "no") + "\n";
    text += "mdeg bounds: " + std::to_string(prof.intdeg) +
            " <= mdeg <= " + std::to_string(prof.extdeg) + "\n";
    if (with_oracle) {
        const std::size_t dim = oracle_state_dim(g).dim;
        j["oracle_dim"] = dim;
        text += "oracle dim: " + std::to_string(dim) + "\n";
    }
    emit(j, as_json, text);
    return kExitOk;
}

int cmd_reduce(const std::string& file, bool emit_t, bool as_json) {
    const PolyMatrix g = load_matrix(file);
    const ReduceResult rr = reduce(g);

    json j{{"R", matrix_to_json(rr.reduced)}};
    std::string text = "reduced matrix:\n" + matrix_text(rr.reduced);
    if (emit_t) {
        j["T"] = matrix_to_json(rr.cert.T());
        j["Tinv"] = matrix_to_json(rr.cert.Tinv());
        j["det_T"] = poly_to_json(rr.cert.det());
        text += "T:\n" + matrix_text(rr.cert.T());
        text += "Tinv:\n" + matrix_text(rr.cert.Tinv());
        text += "det T: " + rr.cert.det().str() + "\n";
    }
    emit(j, as_json, text);
    return kExitOk;
}

int cmd_smith(const std::string& file, bool as_json) {
    const PolyMatrix g = load_matrix(file);
    const SmithForm sf = smith_form(g);

    json factors = json::array();
    for (const auto& p : sf.invariant_factors) factors.push_back(poly_to_json(p));
    const json j{{"U", matrix_to_json(sf.U.T())},
                 {"V", matrix_to_json(sf.V.T())},
                 {"invariant_factors", factors}};

    std::string text = "invariant factors:";
    for (const auto& p : sf.invariant_factors) text += " " + p.str();
    text += "\nU:\n" + matrix_text(sf.U.T()) + "V:\n" + matrix_text(sf.V.T());
    emit(j, as_json, text);
    return kExitOk;
}

int cmd_canonical(const std::string& file, bool as_json) {
    const PolyMatrix g = load_matrix(file);
    const CanonicalResult c = canonicalize(g);
    const json j{{"canonical", matrix_to_json(c.canonical)}, {"forney", c.forney}};
    const std::string text = "canonical matrix:\n" + matrix_text(c.canonical) +
                             "forney indices: " + int_list(c.forney) + "\n";
    emit(j, as_json, text);
    return kExitOk;
}

int cmd_realize(const std::string& file, const std::string& form, bool as_json) {
    const PolyMatrix g = load_matrix(file);
    const Realization r =
        form == "standard" ? standard_realization(g) : controller_realization(g);

    const json j{{"form", form},          {"field", {{"p", r.field().modulus()}}},
                 {"m", r.m},              {"k", r.k},
                 {"n", r.n},              {"A", fmatrix_to_json(r.A)},
                 {"B", fmatrix_to_json(r.B)}, {"C", fmatrix_to_json(r.C)},
                 {"D", fmatrix_to_json(r.D)}};
    std::string text = "form: " + form + "   m: " + std::to_string(r.m) + "\n";
    text += "A:\n" + fmatrix_text(r.A) + "B:\n" + fmatrix_text(r.B) + "C:\n" + fmatrix_text(r.C) +
            "D:\n" + fmatrix_text(r.D);
    emit(j, as_json, text);
    return kExitOk;
}

int cmd_encode(const std::string& file, const std::string& input_file, int horizon,
               const std::string& via, bool as_json) {
    const PolyMatrix g = load_matrix(file);
    SymbolStream in = parse_stream_text(read_file(input_file), g.field());
    if (in.symbols.empty()) in.width = g.rows();
    if (in.width != g.rows()) throw DimensionMismatch("encode: stream width differs from k");

    if (horizon < 0) {
        const ExtInt d = g.max_degree();
        horizon = static_cast<int>(in.symbols.size()) + (d.is_finite() ? d.finite() : 0);
    }

    SymbolStream out{g.field(), g.cols(), {}};
    if (via == "series") {
        std::vector<LaurentPoly> u;
        for (std::size_t i = 0; i < g.rows(); ++i) {
            std::vector<std::uint32_t> c;
            for (const auto& sym : in.symbols) c.push_back(sym[i]);
            u.emplace_back(g.field(), 0, std::move(c));
        }
        const auto series = encode_series(g, u, horizon);
        for (int step = 0; step < horizon; ++step) {
            std::vector<std::uint32_t> sym(g.cols());
            for (std::size_t jcol = 0; jcol < g.cols(); ++jcol) sym[jcol] = series[jcol].coeff(step);
            out.symbols.push_back(std::move(sym));
        }
    } else {
        in.symbols.resize(static_cast<std::size_t>(horizon),
                          std::vector<std::uint32_t>(g.rows(), 0));
        out = encode(controller_realization(g), in);
    }

    json steps = json::array();
    for (const auto& sym : out.symbols) steps.push_back(sym);
    const json j{{"field", {{"p", g.field().modulus()}}}, {"width", out.width}, {"steps", steps}};
    emit(j, as_json, stream_to_text(out));
    return kExitOk;
}

int cmd_oracle(const std::string& file, bool as_json) {
    const PolyMatrix g = load_matrix(file);
    const StateBasis b = oracle_state_dim(g);

    json states = json::array();
    for (const auto& s : b.states) states.push_back(state_to_json(s));
    const json j{{"dim", b.dim}, {"basis_states", states}};

    std::string text = "oracle dim: " + std::to_string(b.dim) + "\n";
    for (std::size_t i = 0; i < b.states.size(); ++i)
        text += "state " + std::to_string(i + 1) + ": " + state_text(b.states[i]) + "\n";
    emit(j, as_json, text);
    return kExitOk;
}

int cmd_verify(const std::string& file, int theorem, bool as_json) {
    const PolyMatrix g = load_matrix(file);
    json j{{"theorem", theorem}};
    std::string text;
    bool pass = false;

    if (theorem == 1) {
        const Theorem1Report r = verify_theorem1(g);
        pass = r.pass;
        j["pass"] = r.pass;
        j["basis_size"] = r.basis_size;
        j["combinations_checked"] = r.combinations_checked;
        j["violations"] = r.violations;
        j["oracle_dim"] = r.oracle_dim;
        text = std::string(r.pass ? "PASS" : "FAIL") + ": basis size " +
               std::to_string(r.basis_size) + ", " + std::to_string(r.combinations_checked) +
               " combinations checked, " + std::to_string(r.violations) +
               " violations, oracle dim " + std::to_string(r.oracle_dim) + "\n";
    } else if (theorem == 2) {
        const Theorem2Report r = verify_theorem2(g);
        pass = r.pass;
        j["pass"] = r.pass;
        j["independence_rank"] = r.independence_rank;
        j["sum_row_degrees"] = r.sum_row_degrees;
        j["oracle_dim"] = r.oracle_dim;
        text = std::string(r.pass ? "PASS" : "FAIL") + ": independence rank " +
               std::to_string(r.independence_rank) + ", sum of row degrees " +
               std::to_string(r.sum_row_degrees) + ", oracle dim " +
               std::to_string(r.oracle_dim) + "\n";
    } else {
        const Theorem3Report r = verify_theorem3(g);
        pass = r.pass;
        j["pass"] = r.pass;
        j["independent_rank"] = r.independent_rank;
        j["intdeg"] = r.intdeg;
        text = std::string(r.pass ? "PASS" : "FAIL") + ": independent set rank " +
               std::to_string(r.independent_rank) + ", intdeg " + std::to_string(r.intdeg) + "\n";
    }
    emit(j, as_json, text);
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_minimal(const std::string& file, bool as_json) {
    const PolyMatrix g = load_matrix(file);
    const StateSpaceReport rep = minimality_report(g);

    json j{{"minimal", rep.minimal_encoding},
           {"intdeg", rep.intdeg},
           {"extdeg", rep.extdeg},
           {"mdeg", rep.oracle_dim},
           {"oracle_dim", rep.oracle_dim},
           {"code_degree", rep.code_degree},
           {"forney", rep.forney}};
    std::string text = std::string("verdict: ") +
                       (rep.minimal_encoding ? "minimal" : "non-minimal") + " encoding\n";
    text += "sandwich: intdeg " + std::to_string(rep.intdeg) + " <= mdeg " +
            std::to_string(rep.oracle_dim) + " <= extdeg " + std::to_string(rep.extdeg) + "\n";
    text += "code degree: " + std::to_string(rep.code_degree) +
            "   forney indices: " + int_list(rep.forney) + "\n";
    if (rep.kernel_witness) {
        json input = json::array();
        for (const auto& c : rep.kernel_witness->components) input.push_back(laurent_to_json(c));
        j["witness"] = {{"input", input}, {"state", state_to_json(*rep.witness_state)}};
        std::string in_text;
        for (std::size_t i = 0; i < rep.kernel_witness->components.size(); ++i) {
            if (i) in_text += ' ';
            in_text += rep.kernel_witness->components[i].str();
        }
        text += "witness input: " + in_text + "\n";
        text += "witness state: " + state_text(*rep.witness_state) + " (a nonzero codeword)\n";
    }
    emit(j, as_json, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebra for convolutional codes over GF(p)"};
    app.require_subcommand(1);

    std::string file, input_file, form = "controller", via = "encoder";
    int horizon = -1, theorem = 1;
    bool as_json = false, with_oracle = false, emit_t = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "matrix JSON file")->required();
        sub->add_flag("--json", as_json, "canonical JSON output");
        return sub;
    };

    auto* analyze = add_common(app.add_subcommand("analyze", "degree profile and mdeg bounds"));
    analyze->add_flag("--oracle", with_oracle, "also compute the exact state dimension");
    auto* reduce_cmd = add_common(app.add_subcommand("reduce", "row-reduce to a reduced matrix"));
    reduce_cmd->add_flag("--emit-T", emit_t, "emit the unimodular transform and its inverse");
    add_common(app.add_subcommand("smith", "Smith normal form with certificates"));
    add_common(app.add_subcommand("canonical", "canonical matrix and Forney indices"));
    auto* realize_cmd = add_common(app.add_subcommand("realize", "encoder matrices A, B, C, D"));
    realize_cmd->add_option("--form", form, "realization form")
        ->check(CLI::IsMember({"controller", "standard"}));
    auto* encode_cmd = add_common(app.add_subcommand("encode", "encode a symbol stream"));
    encode_cmd->add_option("--input", input_file, "stream file")->required();
    encode_cmd->add_option("--horizon", horizon, "number of output steps");
    encode_cmd->add_option("--via", via, "encoding route")
        ->check(CLI::IsMember({"series", "encoder"}));
    add_common(app.add_subcommand("oracle", "brute-force state dimension and basis states"));
    auto* verify_cmd = add_common(app.add_subcommand("verify", "run a state-space theorem check"));
    verify_cmd->add_option("--theorem", theorem, "which check to run")
        ->required()
        ->check(CLI::Range(1, 3));
    add_common(app.add_subcommand("minimal", "minimality verdict with witness"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("analyze")) return cmd_analyze(file, with_oracle, as_json);
        if (app.got_subcommand("reduce")) return cmd_reduce(file, emit_t, as_json);
        if (app.got_subcommand("smith")) return cmd_smith(file, as_json);
        if (app.got_subcommand("canonical")) return cmd_canonical(file, as_json);
        if (app.got_subcommand("realize")) return cmd_realize(file, form, as_json);
        if (app.got_subcommand("encode"))
            return cmd_encode(file, input_file, horizon, via, as_json);
        if (app.got_subcommand("oracle")) return cmd_oracle(file, as_json);
        if (app.got_subcommand("verify")) return cmd_verify(file, theorem, as_json);
        if (app.got_subcommand("minimal")) return cmd_minimal(file, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
