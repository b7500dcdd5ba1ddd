// Copyright 2026 The anyonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anyonlab/codelib.h"

#include <map>
#include <regex>
#include <sstream>

namespace anyonlab {

namespace {

using Gen = std::vector<std::string>;

Gen css_x(int w, int block, const std::vector<std::string> &polys) {
    Gen g(2 * w, "0");
    for (size_t i = 0; i < polys.size(); i++) g[block * w + i] = polys[i];
    return g;
}

// Self-dual CSS code on the honeycomb lattice, one qubit per vertex, two per cell.
CodeDescriptor self_dual(const std::string &name, const std::string &f, const std::string &g, const std::string &note) {
    return {name, 2, 2, {css_x(2, 0, {f, g}), css_x(2, 1, {f, g})}, note};
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"trivial",    "toric",      "toric2",     "double_semion", "shifted_double_semion",
            "color",      "color_bad",  "modified_a", "modified_b",    "modified_c",
            "modified_d", "css_double_semion",        "six_semion"};
}

CodeDescriptor builtin_descriptor(const std::string &name, int d, int l) {
    // Square lattice: slot 0 is the horizontal edge and slot 1 the vertical edge
    // attached to the vertex at the cell origin.
    if (name == "trivial") {
        int dd = d ? d : 2;
        return {name, dd, 2, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}}, "product state, X on every qudit"};
    }
    if (name == "toric") {
        int dd = d ? d : 2;
        return {name, dd, 2, {{"1 - x^-1", "1 - y^-1", "0", "0"}, {"0", "0", "1 - y", "-1 + x"}}, "Z_d toric code"};
    }
    if (name == "toric2") {
        int dd = d ? d : 2;
        return {name, dd, 2, {{"1 - x^-2", "1 - y^-1", "0", "0"}, {"0", "0", "1 - y", "-1 + x^2"}},
                "two interleaved toric codes"};
    }
    if (name == "double_semion" || name == "shifted_double_semion") {
        int s = name == "double_semion" ? 0 : l;
        auto sh = [&](const std::string &text) { return poly_format(poly_parse(text, 4).shifted(s, 0)); };
        return {name,
                4,
                2,
                {{"-1 + x^-1", "-1 + y^-1", sh("1 - y"), sh("-1 + x")},
                 {"0", "0", "2 + 2y", "2 + 2x"},
                 {sh("2"), "0", "0", "2y^-1"},
                 {"0", sh("2"), "2x^-1", "0"}},
                s == 0 ? "double semion from condensing e^2 m^2 in the Z_4 toric code"
                       : "double semion with the condensed pair separated by x^" + std::to_string(s)};
    }
    if (name == "color") return self_dual(name, "1 + x^-1 + y", "1 + y^-1 + x", "honeycomb color code");
    if (name == "color_bad")
        return self_dual(name, "1 + x^-1 + y + x^-1*y^-1", "1 + y^-1 + x + x*y", "modified color code without TO");
    if (name == "modified_a")
        return self_dual(name, "1 + x^-1 + y + x^-1*y^-1 + x*y", "1 + y^-1 + x + x^-1*y^-1 + x*y", "modified color code A");
    if (name == "modified_b")
        return self_dual(name, "1 + x^-1 + y + x^-1*y^-1 + x*y + x^-1*y", "1 + y^-1 + x + x^-1*y^-1 + x*y + x*y^-1",
                         "modified color code B");
    if (name == "modified_c")
        return self_dual(name, "1 + x^-1 + y + y^2", "1 + y^-1 + x + y^-2", "modified color code C");
    if (name == "modified_d")
        return self_dual(name, "1 + x^-1 + y + x*y^3", "1 + y^-1 + x + x^-1*y^-3", "modified color code D");
    if (name == "six_semion") {
        // Two Z_4 toric codes on slots (0,1) and (2,3).  S5..S8 hop e1^2 m1^2 and
        // e1^2 e2^2 m2^2 by one cell; S1..S4 are the toric-code products that
        // commute with them.
        return {name,
                4,
                4,
                {
                    {"-1 + x^-1", "-1 + y^-1", "1 - x^-1", "1 - y^-1", "1 - y", "-1 + x", "0", "0"},
                    {"0", "0", "0", "0", "2 + 2y", "2 + 2x", "0", "0"},
                    {"0", "0", "-1 + x^-1", "-1 + y^-1", "0", "0", "1 - y", "-1 + x"},
                    {"0", "0", "0", "0", "0", "0", "2 + 2y", "2 + 2x"},
                    {"2", "0", "0", "0", "0", "2y^-1", "0", "0"},
                    {"0", "2", "0", "0", "2x^-1", "0", "0", "0"},
                    {"0", "0", "2", "0", "0", "2y^-1", "0", "2y^-1"},
                    {"0", "0", "0", "2", "2x^-1", "0", "2x^-1", "0"},
                },
                "condensed pair of Z_4 toric codes"};
    }
    if (name == "css_double_semion") {
        CodeDescriptor ds = builtin_descriptor("double_semion");
        StabilizerCode css = css_doubling(from_descriptor(ds));
        CodeDescriptor out{name, 4, 4, {}, "CSS doubling of the double semion code, blue slots 0-1, red slots 2-3"};
        for (auto &g : css.gens) {
            Gen row;
            for (auto &p : g.e) row.push_back(poly_format(p));
            out.gens.push_back(row);
        }
        return out;
    }
    throw CodeError("unknown builtin code '" + name + "'");
}

StabilizerCode from_descriptor(const CodeDescriptor &desc) {
    StabilizerCode code;
    code.name = desc.name;
    code.d = desc.d;
    code.w = desc.w;
    for (auto &g : desc.gens) {
        if ((int)g.size() != 2 * desc.w) throw CodeError("generator has wrong number of entries");
        PauliVector v(2 * desc.w, desc.d);
        for (int i = 0; i < 2 * desc.w; i++) v[i] = poly_parse(g[i], desc.d);
        code.gens.push_back(v);
    }
    auto rep = validate_code(code);
    if (!rep.ok) throw CodeError("code '" + desc.name + "' is not a valid stabilizer code:\n" + rep.describe());
    return code;
}

StabilizerCode builtin(const std::string &name, int d, int l) {
    if ((name == "double_semion" || name == "css_double_semion" || name == "six_semion") && d && d != 4)
        throw CodeError(name + " is only defined for d = 4");
    if (name.rfind("color", 0) == 0 || name.rfind("modified", 0) == 0)
        if (d && d != 2) throw CodeError(name + " is only defined for d = 2");
    return from_descriptor(builtin_descriptor(name, d, l));
}

StabilizerCode css_doubling(const StabilizerCode &code) {
    StabilizerCode out;
    out.name = code.name + "_css";
    out.d = code.d;
    out.w = 2 * code.w;
    int w = code.w;
    for (auto &g : code.gens) {
        PauliVector xs(4 * w, code.d);
        for (int i = 0; i < w; i++) {
            xs[i] = g[i];
            xs[w + i] = g[w + i];
        }
        out.gens.push_back(xs);
    }
    for (auto &g : code.gens) {
        PauliVector zs(4 * w, code.d);
        for (int i = 0; i < w; i++) {
            zs[2 * w + i] = g[w + i];
            zs[3 * w + i] = -g[i];
        }
        out.gens.push_back(zs);
    }
    return out;
}

StabilizerCode parse_code_file(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int d = 0, w = 0;
    std::vector<std::map<std::string, std::string>> gens;
    std::vector<std::string> names;
    std::vector<int> gen_lines;
    static const std::regex kv(R"(^\s*(d|qudits)\s*=\s*(\d+)\s*$)");
    static const std::regex stab(R"(^\s*stabilizer\s+([A-Za-z0-9_]+)\s*:\s*$)");
    static const std::regex entry(R"(^\s*([XZ])(\d+)\s*:\s*(.*)$)");
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::smatch m;
        auto where = "line " + std::to_string(lineno) + ": ";
        if (std::regex_match(line, m, kv)) {
            (m[1] == "d" ? d : w) = std::stoi(m[2]);
        } else if (std::regex_match(line, m, stab)) {
            gens.emplace_back();
            names.push_back(m[1]);
            gen_lines.push_back(lineno);
        } else if (std::regex_match(line, m, entry)) {
            if (gens.empty()) throw CodeError(where + "entry outside a stabilizer block");
            std::string key = std::string(m[1]) + std::string(m[2]);
            if (gens.back().count(key)) throw CodeError(where + "duplicate entry " + key);
            gens.back()[key] = m[3];
        } else {
            throw CodeError(where + "cannot parse '" + line + "'");
        }
    }
    if (d < 2) throw CodeError("missing or invalid 'd = <modulus>'");
    if (w < 1) throw CodeError("missing or invalid 'qudits = <count>'");
    if (gens.empty()) throw CodeError("no stabilizer blocks");
    StabilizerCode code;
    code.name = "file";
    code.d = d;
    code.w = w;
    for (size_t k = 0; k < gens.size(); k++) {
        PauliVector v(2 * w, d);
        for (auto &[key, text] : gens[k]) {
            int idx = std::stoi(key.substr(1));
            if (idx >= w)
                throw CodeError("stabilizer " + names[k] + ": slot " + key + " exceeds qudits = " + std::to_string(w));
            try {
                v[(key[0] == 'X' ? 0 : w) + idx] = poly_parse(text, d);
            } catch (const ParseError &e) {
                throw CodeError("stabilizer " + names[k] + " entry " + key + ": " + e.what());
            }
        }
        code.gens.push_back(v);
    }
    auto rep = validate_code(code);
    if (!rep.ok) {
        std::string msg;
        for (auto &p : rep.problems) msg += p + "\n";
        for (auto &f : rep.failures)
            msg += "stabilizers " + names[f.i] + " and " + names[f.j] + " do not commute: dot = " + poly_format(f.dot) + "\n";
        throw CodeError(msg);
    }
    return code;
}

std::string format_code_file(const StabilizerCode &code) {
    std::ostringstream out;
    out << "d = " << code.d << "\nqudits = " << code.w << "\n";
    for (int k = 0; k < code.t(); k++) {
        out << "stabilizer S" << k + 1 << ":\n";
        for (int i = 0; i < 2 * code.w; i++) {
            if (code.gens[k][i].is_zero()) continue;
            out << "  " << (i < code.w ? "X" : "Z") << (i % code.w) << ": " << poly_format(code.gens[k][i]) << "\n";
        }
    }
    return out.str();
}

}  // namespace anyonlab
