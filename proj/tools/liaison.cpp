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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "liaison/io.hpp"

namespace {

using namespace liaison;

// exit codes: 0 ok, 2 parse, 3 precondition, 4 resource cap, 5 bound violation
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResourceCap = 4;
constexpr int kExitViolation = 5;

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::ParseError:
        case Errc::UnknownVariable:
            return kExitParse;
        case Errc::DegreeCapExceeded:
        case Errc::SizeCapExceeded:
        case Errc::GenericityFailure:
        case Errc::Overflow:
            return kExitResourceCap;
        default:
            return kExitPrecondition;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::ParseError, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string file;
    std::string ideal_name;
    std::string order = "grevlex";
    std::string mode = "random";
    std::string claims = "NIU11,BEL";
    std::string json_path;
    std::string families = "abcde";
    std::uint64_t seed = 0;
    std::size_t symbolic_s = 0;
    bool suite = false;
    bool json_stdout = false;
};

/// Run `body(ring, ideal)` with the field implied by the ideal file.
template <class Body>
int with_ideal(const Options& opt, const Body& body) {
    IdealFile file = parse_ideal_file(read_file(opt.file));
    const IdealFileEntry& entry =
        opt.ideal_name.empty() ? file.ideals.front() : find_ideal(file, opt.ideal_name);
    MonomialOrder order = opt.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    if (opt.order != "lex" && opt.order != "grevlex")
        fail(Errc::InvalidArgument, "unknown order: " + opt.order);
    if (file.field == "QQ") {
        auto ring = Ring<RationalField>::make(RationalField{}, file.vars, RingMode::Graded, order);
        return body(ring, build_ideal(entry, ring));
    }
    PrimeField gf(file.modulus);
    auto ring = Ring<PrimeField>::make(gf, file.vars, RingMode::Graded, order);
    return body(ring, build_ideal(entry, ring));
}

int cmd_gb(const Options& opt) {
    return with_ideal(opt, [&](const auto& ring, const auto& I) {
        (void)ring;
        for (const auto& g : I.groebner().elements) std::cout << g.to_string() << "\n";
        return 0;
    });
}

int cmd_betti(const Options& opt) {
    return with_ideal(opt, [&](const auto& ring, const auto& I) {
        (void)ring;
        auto res = minimal_free_resolution(I);
        auto bt = betti_table(res);
        long long reg = regularity(bt);
        if (opt.json_stdout) {
            std::cout << betti_to_json(bt, reg).dump(2) << "\n";
        } else {
            std::cout << betti_to_text(bt);
            std::cout << "reg R/I = " << reg << "\n";
        }
        return 0;
    });
}

int cmd_link(const Options& opt) {
    return with_ideal(opt, [&](const auto& ring, const auto& I) {
        (void)ring;
        using F = typename std::decay_t<decltype(I)>::Field;
        LinkageResult<F> result =
            opt.mode == "symbolic"
                ? symbolic_residual(I, opt.symbolic_s ? opt.symbolic_s : codimension(I))
                : graded_generic_link(I, opt.seed);
        std::cout << linkage_to_json(result).dump(2) << "\n";
        return 0;
    });
}

void print_report(const BoundReport& r) {
    std::cout << r.name << ": degrees (";
    for (std::size_t i = 0; i < r.degrees.size(); ++i)
        std::cout << (i ? "," : "") << r.degrees[i];
    std::cout << ") codim " << r.r << " dimX " << r.dim_x << " sigma " << r.sigma_value
              << " reg " << r.reg;
    if (r.reg_sat) std::cout << " reg_sat " << *r.reg_sat;
    std::cout << "\n";
    for (const auto& v : r.verdicts)
        std::cout << "  " << claim_name(v.claim) << ": " << claim_status_name(v.status) << " — "
                  << v.detail << "\n";
}

int reports_exit(const std::vector<BoundReport>& reports) {
    bool violated = false, errored = false;
    for (const auto& r : reports)
        for (const auto& v : r.verdicts) {
            if (v.status == ClaimStatus::Fail) violated = true;
            if (v.status == ClaimStatus::Errored) errored = true;
        }
    if (violated) return kExitViolation;
    if (errored) return kExitPrecondition;
    return 0;
}

int cmd_verify(const Options& opt) {
    std::vector<BoundReport> reports;
    if (opt.suite) {
        SuiteConfig cfg;
        cfg.seed = opt.seed;
        cfg.families = opt.families;
        reports = run_suite(RationalField{}, cfg);
    } else {
        std::set<Claim> claims;
        std::stringstream ss(opt.claims);
        std::string c;
        while (std::getline(ss, c, ','))
            if (!c.empty()) claims.insert(claim_from_name(c));
        int rc = with_ideal(opt, [&](const auto& ring, const auto& I) {
            (void)ring;
            std::string name = opt.ideal_name.empty() ? std::string("I") : opt.ideal_name;
            reports.push_back(check_ideal(name, I, claims, opt.seed));
            return 0;
        });
        if (rc != 0) return rc;
    }
    for (const auto& r : reports) print_report(r);
    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path, std::ios::binary);
        out << reports_to_json(reports).dump(2) << "\n";
    }
    int rc = reports_exit(reports);
    std::cout << (rc == 0 ? "OK: no violations" : "FAILED") << " (" << reports.size()
              << " ideals)\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liaison: exact Groebner/regularity/linkage engine"};
    app.require_subcommand(1);
    Options opt;

    auto* gb = app.add_subcommand("gb", "print the reduced Groebner basis of an ideal");
    gb->add_option("file", opt.file)->required();
    gb->add_option("ideal", opt.ideal_name);
    gb->add_option("--order", opt.order, "grevlex or lex");

    auto* betti = app.add_subcommand("betti", "print the Betti table and regularity");
    betti->add_option("file", opt.file)->required();
    betti->add_option("ideal", opt.ideal_name);
    betti->add_flag("--json", opt.json_stdout, "emit JSON instead of text");

    auto* link = app.add_subcommand("link", "compute a generic link (JSON)");
    link->add_option("file", opt.file)->required();
    link->add_option("ideal", opt.ideal_name);
    link->add_option("--seed", opt.seed);
    link->add_option("--mode", opt.mode, "symbolic or random");
    link->add_option("--s", opt.symbolic_s, "symbolic mode: number of combinations");

    auto* verify = app.add_subcommand("verify", "check regularity bounds");
    verify->add_option("file", opt.file);
    verify->add_option("ideal", opt.ideal_name);
    verify->add_flag("--suite", opt.suite, "run the built-in suite");
    verify->add_option("--claims", opt.claims, "comma-separated claim list");
    verify->add_option("--seed", opt.seed);
    verify->add_option("--families", opt.families, "suite families (subset of abcde)");
    verify->add_option("--json", opt.json_path, "write JSON reports to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gb->parsed()) return cmd_gb(opt);
        if (betti->parsed()) return cmd_betti(opt);
        if (link->parsed()) return cmd_link(opt);
        if (verify->parsed()) {
            if (!opt.suite && opt.file.empty()) {
                std::cerr << "error: verify needs a file or --suite\n";
                return kExitPrecondition;
            }
            return cmd_verify(opt);
        }
    } catch (const liaison::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
