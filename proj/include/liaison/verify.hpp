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

#ifndef LIAISON_VERIFY_HPP
#define LIAISON_VERIFY_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "liaison/linkage.hpp"
#include "liaison/parse.hpp"

namespace liaison {

// Checks a report can carry:
//   NIU      sharpened bound (dimX+2)!/2 * (sum d_i - r - 1), non-CI inputs
//   NIU11    bound (dimX+2)!/2 * (sum d_i - r)
//   BEL      reg of the saturation <= sum d_i - r
//   LINKDEG  every minimal generator of a fresh generic link has degree <= sigma
//   OMEGA    regularity of the canonical module = dim X + 1
//   EXC      exceptional case: reg R/I = 3*d_1 - 5
enum class Claim { NIU, NIU11, BEL, LINKDEG, OMEGA, EXC };

inline std::string claim_name(Claim c) {
    switch (c) {
        case Claim::NIU: return "NIU";
        case Claim::NIU11: return "NIU11";
        case Claim::BEL: return "BEL";
        case Claim::LINKDEG: return "LINKDEG";
        case Claim::OMEGA: return "OMEGA";
        case Claim::EXC: return "EXC";
    }
    fail(Errc::Internal, "unknown claim");
}

inline Claim claim_from_name(const std::string& s) {
    if (s == "NIU") return Claim::NIU;
    if (s == "NIU11") return Claim::NIU11;
    if (s == "BEL") return Claim::BEL;
    if (s == "LINKDEG") return Claim::LINKDEG;
    if (s == "OMEGA") return Claim::OMEGA;
    if (s == "EXC") return Claim::EXC;
    fail(Errc::InvalidArgument, "unknown claim: " + s);
}

enum class ClaimStatus { Pass, Fail, Skipped, Errored };

inline std::string claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "FAIL";
        case ClaimStatus::Skipped: return "skipped";
        case ClaimStatus::Errored: return "error";
    }
    fail(Errc::Internal, "unknown status");
}

struct ClaimResult {
    Claim claim;
    ClaimStatus status;
    std::string detail;
};

struct BoundReport {
    std::string name;
    std::vector<long long> degrees;  // minimal generator degrees, descending
    std::size_t t = 0;               // number of minimal generators
    std::size_t r = 0;               // codimension
    long long dim_x = 0;             // projective dimension of X
    long long sigma_value = 0;
    long long reg = 0;                          // reg R/I
    std::optional<long long> reg_sat;           // reg R/I_X
    std::optional<mpz_class> niu_bound_value;   // factorial bound value
    std::optional<long long> bel_bound_value;
    bool exceptional_case = false;
    std::vector<ClaimResult> verdicts;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;

    bool ok() const {
        for (const auto& v : verdicts)
            if (v.status == ClaimStatus::Fail || v.status == ClaimStatus::Errored) return false;
        return true;
    }

    bool violated() const {
        for (const auto& v : verdicts)
            if (v.status == ClaimStatus::Fail) return true;
        return false;
    }
};

/// sigma = sum_{i=1..r} (d_i - 1) over descending degrees.
inline long long sigma(const std::vector<long long>& degrees, std::size_t r) {
    if (r > degrees.size())
        fail(Errc::InvalidArgument, "sigma: r exceeds number of degrees");
    long long s = 0;
    for (std::size_t i = 0; i < r; ++i) s += degrees[i] - 1;
    return s;
}

namespace detail {

inline mpz_class half_factorial(long long n) {
    // n!/2 for n >= 2
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f / 2;
}

}  // namespace detail

/// (dimX+2)!/2 * (sum_{i<=r} d_i - r), exact.
inline mpz_class niu_bound(long long dim_x, const std::vector<long long>& degrees,
                           std::size_t r) {
    if (dim_x < 1) fail(Errc::InvalidArgument, "niu_bound requires dim X >= 1");
    if (r > degrees.size()) fail(Errc::InvalidArgument, "niu_bound: r exceeds number of degrees");
    long long s = 0;
    for (std::size_t i = 0; i < r; ++i) s += degrees[i];
    return detail::half_factorial(dim_x + 2) * mpz_class(static_cast<long>(s - static_cast<long long>(r)));
}

/// Sharpened non-CI variant: (dimX+2)!/2 * (sum_{i<=r} d_i - r - 1), exact.
inline mpz_class niu_bound_sharpened(long long dim_x, const std::vector<long long>& degrees,
                                     std::size_t r) {
    if (dim_x < 1) fail(Errc::InvalidArgument, "niu_bound requires dim X >= 1");
    if (r > degrees.size()) fail(Errc::InvalidArgument, "niu_bound: r exceeds number of degrees");
    long long s = 0;
    for (std::size_t i = 0; i < r; ++i) s += degrees[i];
    return detail::half_factorial(dim_x + 2) * mpz_class(static_cast<long>(s - static_cast<long long>(r) - 1));
}

/// sum_{i<=r} d_i - r.
inline long long bel_bound(const std::vector<long long>& degrees, std::size_t r) {
    if (r > degrees.size()) fail(Errc::InvalidArgument, "bel_bound: r exceeds number of degrees");
    long long s = 0;
    for (std::size_t i = 0; i < r; ++i) s += degrees[i];
    return s - static_cast<long long>(r);
}

template <class F>
BoundReport check_ideal(const std::string& name, const Ideal<F>& I,
                        const std::set<Claim>& claims, std::uint64_t seed,
                        const LinkageOptions& opts = {}) {
    auto start = std::chrono::steady_clock::now();
    const RingPtr<F>& ring = I.ring();
    if (!ring->graded()) fail(Errc::ModeMismatch, "check_ideal requires a graded ring");
    if (!I.homogeneous()) fail(Errc::NotHomogeneous, "check_ideal requires homogeneous generators");
    if (!I.is_proper()) fail(Errc::UnitIdeal, "check_ideal requires a proper ideal");
    if (I.is_zero()) fail(Errc::InvalidArgument, "check_ideal requires a nonzero ideal");

    BoundReport rep;
    rep.name = name;
    rep.seed = seed;

    std::vector<Polynomial<F>> mingens = minimal_generators(I, opts.groebner);
    for (const auto& g : mingens) rep.degrees.push_back(g.degree());
    std::sort(rep.degrees.rbegin(), rep.degrees.rend());
    rep.t = mingens.size();
    rep.r = codimension(I);
    rep.dim_x = static_cast<long long>(krull_dimension(I)) - 1;
    rep.sigma_value = sigma(rep.degrees, rep.r);

    Resolution<F> res = minimal_free_resolution(I, opts.groebner);
    rep.reg = regularity(res);

    std::vector<Polynomial<F>> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial<F>::variable(ring, i));
    Ideal<F> m(ring, std::move(vars));
    Ideal<F> sat = saturation(I, m, opts.groebner);
    if (sat.is_proper() && !sat.is_zero())
        rep.reg_sat = regularity(minimal_free_resolution(sat, opts.groebner));

    auto run_claim = [&](Claim c, auto&& body) {
        try {
            rep.verdicts.push_back(body());
        } catch (const Error& e) {
            rep.verdicts.push_back({c, ClaimStatus::Errored, e.what()});
        }
    };

    for (Claim c : claims) {
        switch (c) {
            case Claim::NIU:
                run_claim(c, [&]() -> ClaimResult {
                    if (rep.dim_x < 1)
                        return {c, ClaimStatus::Skipped, "dim X < 1 (bound requires a positive-dimensional X)"};
                    if (rep.t == rep.r)
                        return {c, ClaimStatus::Skipped,
                                "complete intersection (sharpened bound excludes CIs)"};
                    mpz_class b = niu_bound_sharpened(rep.dim_x, rep.degrees, rep.r);
                    bool pass = mpz_class(static_cast<long>(rep.reg)) <= b;
                    return {c, pass ? ClaimStatus::Pass : ClaimStatus::Fail,
                            "reg " + std::to_string(rep.reg) + " vs bound " + b.get_str()};
                });
                break;
            case Claim::NIU11:
                run_claim(c, [&]() -> ClaimResult {
                    if (rep.dim_x < 1)
                        return {c, ClaimStatus::Skipped, "dim X < 1 (bound requires a positive-dimensional X)"};
                    mpz_class b = niu_bound(rep.dim_x, rep.degrees, rep.r);
                    rep.niu_bound_value = b;
                    bool pass = mpz_class(static_cast<long>(rep.reg)) <= b;
                    return {c, pass ? ClaimStatus::Pass : ClaimStatus::Fail,
                            "reg " + std::to_string(rep.reg) + " vs bound " + b.get_str()};
                });
                break;
            case Claim::BEL:
                run_claim(c, [&]() -> ClaimResult {
                    if (!rep.reg_sat)
                        return {c, ClaimStatus::Skipped, "saturation is trivial"};
                    long long b = bel_bound(rep.degrees, rep.r);
                    rep.bel_bound_value = b;
                    bool pass = *rep.reg_sat <= b;
                    return {c, pass ? ClaimStatus::Pass : ClaimStatus::Fail,
                            "reg(sat) " + std::to_string(*rep.reg_sat) + " vs bound " +
                                std::to_string(b)};
                });
                break;
            case Claim::LINKDEG:
                run_claim(c, [&]() -> ClaimResult {
                    LinkageResult<F> link = graded_generic_link(I, seed, opts);
                    if (link.degenerate)
                        return {c, ClaimStatus::Pass, "degenerate link (J = (1)), nothing to bound"};
                    long long d = max_generator_degree(link.J, opts.groebner);
                    bool pass = d <= rep.sigma_value;
                    return {c, pass ? ClaimStatus::Pass : ClaimStatus::Fail,
                            "max generator degree " + std::to_string(d) + " vs sigma " +
                                std::to_string(rep.sigma_value)};
                });
                break;
            case Claim::OMEGA:
                run_claim(c, [&]() -> ClaimResult {
                    ModuleMap<F> omega = canonical_module(I, rep.r, opts.groebner);
                    long long rw = module_regularity(omega, opts.groebner);
                    bool pass = rw == rep.dim_x + 1;
                    return {c, pass ? ClaimStatus::Pass : ClaimStatus::Fail,
                            "reg(omega) " + std::to_string(rw) + " vs dim X + 1 = " +
                                std::to_string(rep.dim_x + 1)};
                });
                break;
            case Claim::EXC:
                run_claim(c, [&]() -> ClaimResult {
                    long long d1 = rep.degrees.empty() ? 0 : rep.degrees.front();
                    bool pass = rep.reg == 3 * d1 - 5;
                    rep.exceptional_case = pass;
                    return {c, pass ? ClaimStatus::Pass : ClaimStatus::Fail,
                            "reg " + std::to_string(rep.reg) + " vs 3*d1 - 5 = " +
                                std::to_string(3 * d1 - 5)};
                });
                break;
        }
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// Suite families:
//   a  complete intersections up to degrees (3,3)
//   b  determinantal curves (twisted cubic, rational normal quartic)
//   c  l*H products (the exceptional-equality regularity case)
//   d  cone over a smooth plane cubic
//   e  Fermat hypersurfaces of low degree
struct SuiteConfig {
    std::uint64_t seed = 0;
    std::string families = "abcde";
    LinkageOptions linkage;
};

namespace detail {

struct SuiteEntry {
    std::string name;
    char family;
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    std::set<Claim> claims;
};

inline std::vector<SuiteEntry> suite_entries() {
    const std::set<Claim> full = {Claim::NIU, Claim::NIU11, Claim::BEL, Claim::LINKDEG,
                                  Claim::OMEGA};
    const std::set<Claim> acm = {Claim::NIU, Claim::NIU11, Claim::BEL, Claim::LINKDEG};
    std::vector<SuiteEntry> e;
    // (a) smooth complete intersections in P^3 (diagonal forms)
    e.push_back({"ci-2-2", 'a', {"x0", "x1", "x2", "x3"},
                 {"x0^2 + x1^2 + x2^2 + x3^2", "x0*x1 - x2*x3"}, full});
    e.push_back({"ci-2-3", 'a', {"x0", "x1", "x2", "x3"},
                 {"x0^2 + x1^2 + x2^2 + x3^2", "x0^3 + x1^3 + x2^3 + x3^3"}, full});
    e.push_back({"ci-3-3", 'a', {"x0", "x1", "x2", "x3"},
                 {"x0^3 + x1^3 + x2^3 + x3^3", "x0^3 + 2*x1^3 + 4*x2^3 + 8*x3^3"}, full});
    // (b) determinantal rational normal curves (ACM, not Gorenstein)
    e.push_back({"twisted-cubic", 'b', {"x0", "x1", "x2", "x3"},
                 {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, acm});
    e.push_back({"rational-quartic", 'b', {"x0", "x1", "x2", "x3", "x4"},
                 {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x0*x4 - x1*x3", "x1*x3 - x2^2",
                  "x1*x4 - x2*x3", "x2*x4 - x3^2"},
                 acm});
    // (c) exceptional case: l*H with H a CI of three quadrics
    e.push_back({"lh-quadrics", 'c', {"x0", "x1", "x2"},
                 {"x0^3", "x0*x1^2", "x0*x2^2"}, {Claim::NIU11, Claim::BEL, Claim::EXC}});
    // (d) cone over a smooth plane cubic (log canonical, not rational)
    e.push_back({"cone-plane-cubic", 'd', {"x0", "x1", "x2", "x3"},
                 {"x1^3 + x2^3 + x3^3"}, full});
    // (e) Fermat hypersurfaces
    e.push_back({"fermat-quadric", 'e', {"x0", "x1", "x2", "x3"},
                 {"x0^2 + x1^2 + x2^2 + x3^2"}, full});
    e.push_back({"fermat-cubic", 'e', {"x0", "x1", "x2", "x3"},
                 {"x0^3 + x1^3 + x2^3 + x3^3"}, full});
    e.push_back({"fermat-cubic-p2", 'e', {"x0", "x1", "x2"},
                 {"x0^3 + x1^3 + x2^3"}, full});
    e.push_back({"fermat-quartic-p2", 'e', {"x0", "x1", "x2"},
                 {"x0^4 + x1^4 + x2^4"}, full});
    return e;
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

inline unsigned suite_thread_count() {
    if (const char* env = std::getenv("LIAISON_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

/// Run check_ideal over the built-in families; reports ordered by entry name;
/// per-entry seeds derived deterministically from the master seed.
template <class F>
std::vector<BoundReport> run_suite(const F& field, const SuiteConfig& config) {
    std::vector<detail::SuiteEntry> entries;
    for (auto& e : detail::suite_entries())
        if (config.families.find(e.family) != std::string::npos) entries.push_back(std::move(e));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });

    std::vector<BoundReport> reports(entries.size());
    auto work = [&](std::size_t i) {
        const auto& e = entries[i];
        RingPtr<F> ring = Ring<F>::make(field, e.vars);
        std::vector<Polynomial<F>> gens;
        for (const auto& g : e.gens) gens.push_back(parse_polynomial<F>(g, ring));
        Ideal<F> I(ring, std::move(gens));
        std::uint64_t entry_seed = config.seed ^ detail::fnv1a(e.name);
        splitmix64_next(entry_seed);
        reports[i] = check_ideal(e.name, I, e.claims, entry_seed, config.linkage);
    };

    unsigned nthreads = std::min<unsigned>(suite_thread_count(),
                                           static_cast<unsigned>(entries.size()) + 1);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= entries.size()) return;
                    work(i);
                }
            });
        for (auto& th : pool) th.join();
    }
    return reports;
}

}  // namespace liaison

#endif
