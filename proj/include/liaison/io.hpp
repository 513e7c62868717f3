/*
   Copyright 2026 The Liaison Authors

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

#ifndef LIAISON_IO_HPP
#define LIAISON_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liaison/verify.hpp"

namespace liaison {

// Ideal file grammar:
//   file    := { line }
//   line    := ring-decl | ideal-decl | comment | blank
//   ring    := "ring" field "[" name { "," name } "]"
//   field   := "QQ" | "GF(" prime ")"
//   ideal   := "ideal" name "=" poly { "," poly } ";"   (may span lines)
//   comment := "#" ... (recognized metadata: "# lc: yes|assumed")
struct IdealFileEntry {
    std::string name;
    std::vector<std::string> generators;  // polynomial grammar text
    std::string lc;                       // "", "yes", or "assumed"
};

struct IdealFile {
    std::string field;       // "QQ" or "GF"
    std::uint32_t modulus = 0;
    std::vector<std::string> vars;
    std::vector<IdealFileEntry> ideals;
};

namespace detail {

inline void file_fail(std::size_t line, std::size_t col, const std::string& msg) {
    fail(Errc::ParseError,
         "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct FileCursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line = 1, col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char get() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else {
                return;
            }
        }
    }

    std::string word() {
        std::string w;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                w.push_back(get());
            } else {
                break;
            }
        }
        return w;
    }

    void expect(char c, const std::string& what) {
        skip_ws_and_comments();
        if (eof() || peek() != c) file_fail(line, col, "expected '" + std::string(1, c) + "' " + what);
        get();
    }
};

/// Metadata comments ("# lc: yes") attached to the next ideal block.
inline std::string scan_lc_comment(const std::string& text) {
    // collected separately since the cursor skips comments
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) {
        auto h = l.find("# lc:");
        if (h != std::string::npos) {
            std::string v = l.substr(h + 5);
            v.erase(0, v.find_first_not_of(" \t"));
            v.erase(v.find_last_not_of(" \t\r") + 1);
            return v;
        }
    }
    return "";
}

}  // namespace detail

inline IdealFile parse_ideal_file(const std::string& text) {
    IdealFile out;
    detail::FileCursor c{text};

    c.skip_ws_and_comments();
    std::size_t l0 = c.line, c0 = c.col;
    if (c.word() != "ring") detail::file_fail(l0, c0, "expected ring declaration");
    c.skip_ws_and_comments();
    l0 = c.line;
    c0 = c.col;
    std::string field = c.word();
    if (field == "QQ") {
        out.field = "QQ";
    } else if (field == "GF") {
        out.field = "GF";
        c.expect('(', "after GF");
        c.skip_ws_and_comments();
        std::string p = c.word();
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
            detail::file_fail(c.line, c.col, "expected prime modulus");
        unsigned long v = std::stoul(p);
        if (v >= (1ul << 31)) detail::file_fail(c.line, c.col, "modulus too large");
        out.modulus = static_cast<std::uint32_t>(v);
        c.expect(')', "after modulus");
    } else {
        detail::file_fail(l0, c0, "unknown field '" + field + "' (expected QQ or GF(p))");
    }

    c.expect('[', "before variable list");
    for (;;) {
        c.skip_ws_and_comments();
        std::size_t vl = c.line, vc = c.col;
        std::string v = c.word();
        if (v.empty()) detail::file_fail(vl, vc, "expected variable name");
        if (v[0] == '@' || std::isdigit(static_cast<unsigned char>(v[0])))
            detail::file_fail(vl, vc, "invalid variable name '" + v + "'");
        out.vars.push_back(v);
        c.skip_ws_and_comments();
        if (!c.eof() && c.peek() == ',') {
            c.get();
            continue;
        }
        break;
    }
    c.expect(']', "after variable list");

    std::string lc = detail::scan_lc_comment(text);

    for (;;) {
        c.skip_ws_and_comments();
        if (c.eof()) break;
        std::size_t il = c.line, ic = c.col;
        if (c.word() != "ideal") detail::file_fail(il, ic, "expected ideal declaration");
        c.skip_ws_and_comments();
        il = c.line;
        ic = c.col;
        IdealFileEntry entry;
        entry.name = c.word();
        if (entry.name.empty()) detail::file_fail(il, ic, "expected ideal name");
        entry.lc = lc;
        c.expect('=', "after ideal name");
        std::string cur;
        for (;;) {
            c.skip_ws_and_comments();
            if (c.eof()) detail::file_fail(c.line, c.col, "unterminated ideal (missing ';')");
            char ch = c.get();
            if (ch == ';') {
                if (!cur.empty()) entry.generators.push_back(cur);
                break;
            }
            if (ch == ',') {
                if (cur.empty())
                    detail::file_fail(c.line, c.col, "empty generator");
                entry.generators.push_back(cur);
                cur.clear();
                continue;
            }
            cur.push_back(ch);
            // pull the rest of the token verbatim (whitespace-significant chunk)
            while (!c.eof() && c.peek() != ',' && c.peek() != ';' && c.peek() != '#' &&
                   c.peek() != '\n')
                cur.push_back(c.get());
        }
        if (entry.generators.empty())
            detail::file_fail(il, ic, "ideal '" + entry.name + "' has no generators");
        out.ideals.push_back(std::move(entry));
    }
    if (out.ideals.empty()) fail(Errc::ParseError, "no ideal blocks in file");
    return out;
}

inline const IdealFileEntry& find_ideal(const IdealFile& file, const std::string& name) {
    for (const auto& e : file.ideals)
        if (e.name == name) return e;
    fail(Errc::ParseError, "no ideal named '" + name + "' in file");
}

template <class F>
Ideal<F> build_ideal(const IdealFileEntry& entry, const RingPtr<F>& ring) {
    std::vector<Polynomial<F>> gens;
    gens.reserve(entry.generators.size());
    for (const auto& g : entry.generators) gens.push_back(parse_polynomial<F>(g, ring));
    return Ideal<F>(ring, std::move(gens));
}

// --- Betti table rendering ---------------------------------------------

/// Conventional triangular layout: column i = homological index, row d = j-i.
inline std::string betti_to_text(const BettiTable& bt) {
    if (bt.empty()) return "(zero module)\n";
    std::size_t pd = bt.projective_dimension();
    long long dmin = 0, dmax = 0;
    bool first = true;
    for (const auto& [k, v] : bt.entries) {
        if (v == 0) continue;
        long long d = k.second - static_cast<long long>(k.first);
        if (first) {
            dmin = dmax = d;
            first = false;
        } else {
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
    }
    std::vector<long long> totals(pd + 1, 0);
    for (const auto& [k, v] : bt.entries) totals[k.first] += v;

    auto cell = [](long long v) { return v == 0 ? std::string(".") : std::to_string(v); };
    std::size_t width = 6;
    for (long long v : totals) width = std::max(width, cell(v).size() + 2);

    std::ostringstream os;
    os << std::string(width, ' ');
    for (std::size_t i = 0; i <= pd; ++i) {
        std::string s = std::to_string(i);
        os << std::string(width - s.size(), ' ') << s;
    }
    os << "\ntotal:";
    for (std::size_t i = 0; i <= pd; ++i) {
        std::string s = std::to_string(totals[i]);
        os << std::string(width - s.size(), ' ') << s;
    }
    os << "\n";
    for (long long d = dmin; d <= dmax; ++d) {
        std::string label = std::to_string(d) + ":";
        os << label << std::string(width - label.size(), ' ');
        for (std::size_t i = 0; i <= pd; ++i) {
            std::string s = cell(bt.beta(i, d + static_cast<long long>(i)));
            os << std::string(width - s.size(), ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

// --- JSON serialization -------------------------------------------------

inline nlohmann::ordered_json betti_to_json(const BettiTable& bt, long long reg) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    for (const auto& [k, v] : bt.entries)
        entries[std::to_string(k.first) + "," + std::to_string(k.second)] = v;
    j["betti"] = std::move(entries);
    if (reg == kNegInfDegree)
        j["regularity"] = nullptr;
    else
        j["regularity"] = reg;
    return j;
}

template <class F>
nlohmann::ordered_json linkage_to_json(const LinkageResult<F>& r) {
    nlohmann::ordered_json j;
    j["mode"] = r.matrix.mode == LinkMode::Symbolic ? "symbolic" : "random";
    j["seed"] = r.seed;
    auto polys = [](const std::vector<Polynomial<F>>& ps) {
        std::vector<std::string> out;
        out.reserve(ps.size());
        for (const auto& p : ps) out.push_back(p.to_string());
        return out;
    };
    j["alpha"] = polys(r.alpha);
    j["J"] = polys(r.J.generators());
    j["Z"] = polys(r.Z.generators());
    nlohmann::ordered_json m;
    m["rows"] = r.matrix.rows;
    m["cols"] = r.matrix.cols;
    std::vector<std::string> ents;
    for (const auto& e : r.matrix.entries) ents.push_back(e.to_string());
    m["entries"] = std::move(ents);
    j["matrix"] = std::move(m);
    nlohmann::ordered_json g;
    g["alpha_is_regular_sequence"] = r.genericity.alpha_is_regular_sequence;
    g["codim_J"] = r.genericity.codim_J;
    g["codim_Z"] = r.genericity.codim_Z;
    g["resample_count"] = r.genericity.resample_count;
    j["genericity"] = std::move(g);
    j["degenerate"] = r.degenerate;
    return j;
}

inline nlohmann::ordered_json report_to_json(const BoundReport& r) {
    // the sigma invariant is recomputed at serialization time
    if (sigma(r.degrees, r.r) != r.sigma_value)
        fail(Errc::Internal, "sigma mismatch in report " + r.name);
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["degrees"] = r.degrees;
    j["t"] = r.t;
    j["codim"] = r.r;
    j["dim_x"] = r.dim_x;
    j["sigma"] = r.sigma_value;
    j["reg"] = r.reg;
    if (r.reg_sat)
        j["reg_sat"] = *r.reg_sat;
    else
        j["reg_sat"] = nullptr;
    if (r.niu_bound_value)
        j["niu_bound"] = r.niu_bound_value->get_str();
    else
        j["niu_bound"] = nullptr;
    if (r.bel_bound_value)
        j["bel_bound"] = *r.bel_bound_value;
    else
        j["bel_bound"] = nullptr;
    j["exceptional_case"] = r.exceptional_case;
    j["seed"] = r.seed;
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::ordered_json jv;
        jv["claim"] = claim_name(v.claim);
        jv["status"] = claim_status_name(v.status);
        jv["detail"] = v.detail;
        verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(verdicts);
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<BoundReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_to_json(r));
    return arr;
}

}  // namespace liaison

#endif
