// Copyright 2026 The mzv Authors. All Rights Reserved.
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

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage/parse/schema error, 3 inadmissible input.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzv/harmonic.hpp"
#include "mzv/poset.hpp"
#include "mzv/registry.hpp"
#include "mzv/schur.hpp"
#include "mzv/values.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Settings {
    long bits = 128;
    long terms = 1L << 14;
    double tol = 1e-6;
    bool as_json = false;
    unsigned threads = 1;

    int digits() const { return static_cast<int>(std::floor(static_cast<double>(bits) * 0.3)); }

    mzv::SeriesOptions series() const {
        mzv::SeriesOptions o;
        o.bits = static_cast<mpfr_prec_t>(bits);
        o.terms = terms;
        if (o.max_terms < terms) o.max_terms = terms;
        return o;
    }

    json echo() const { return {{"bits", bits}, {"terms", terms}, {"tol", tol}, {"digits", digits()}, {"threads", threads}}; }
};

/// Usage-level failure carrying exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json approx_json(const mzv::ApproxReal& a, int digits) {
    return {{"value", a.value.str(digits)}, {"radius", a.radius}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(const Settings& s, const json& j, const std::string& text) {
    if (s.as_json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text << '\n';
}

using ValueFn = std::function<mzv::ApproxReal(const mzv::Composition&, mzv::Context&)>;

const std::map<std::string, ValueFn>& value_families() {
    static const std::map<std::string, ValueFn> m{
        {"zeta", [](const mzv::Composition& k, mzv::Context& c) { return mzv::zeta(k, c); }},
        {"zeta_star", [](const mzv::Composition& k, mzv::Context& c) { return mzv::zeta_star(k, c); }},
        {"T", [](const mzv::Composition& k, mzv::Context& c) { return mzv::T_value(k, c); }},
        {"S", [](const mzv::Composition& k, mzv::Context& c) { return mzv::S_value(k, c); }},
        {"t", [](const mzv::Composition& k, mzv::Context& c) { return mzv::t_value(k, c); }},
        {"t_star", [](const mzv::Composition& k, mzv::Context& c) { return mzv::t_star_value(k, c); }},
    };
    return m;
}

using FunctionFn = std::function<mzv::ApproxReal(const mzv::Composition&, const mzv::Real&, mzv::Context&)>;

const std::map<std::string, FunctionFn>& function_families() {
    static const std::map<std::string, FunctionFn> m{
        {"Li", [](const mzv::Composition& k, const mzv::Real& x, mzv::Context& c) { return mzv::li_single(k, x, c); }},
        {"A", [](const mzv::Composition& k, const mzv::Real& x, mzv::Context& c) { return mzv::A_function(k, x, c); }},
        {"L", [](const mzv::Composition& k, const mzv::Real& x, mzv::Context& c) { return mzv::L_function(k, x, c); }},
        {"t", [](const mzv::Composition& k, const mzv::Real& x, mzv::Context& c) { return mzv::t_function(k, x, c); }},
    };
    return m;
}

/// Parses "p/q" exactly or a decimal literal.
mzv::Real parse_point(const std::string& text) {
    if (text.find('/') != std::string::npos) {
        mzv::Rational q;
        if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw UsageError("bad --x value: " + text);
        q.canonicalize();
        return mzv::to_real(q);
    }
    mzv::Real x(text);
    if (x.is_nan()) throw UsageError("bad --x value: " + text);
    return x;
}

int cmd_value(const Settings& s, const std::string& family, const std::string& text, const std::string& at) {
    const mzv::Composition k = mzv::parse_composition(text);
    mzv::Context ctx(s.series());
    mzv::PrecisionGuard guard(ctx.opts.bits);
    const auto t0 = std::chrono::steady_clock::now();
    mzv::ApproxReal v;
    std::string name = family + "(" + k.str() + ")";
    if (at.empty()) {
        auto it = value_families().find(family);
        if (it == value_families().end()) throw UsageError("unknown value family: " + family);
        v = it->second(k, ctx);
    } else {
        auto it = function_families().find(family);
        if (it == function_families().end()) throw UsageError("--x needs family Li, A, L or t, not " + family);
        const mzv::Real x = parse_point(at);
        if (mzv::abs(x) > mzv::Real(1L)) throw mzv::DomainError(family + ": argument outside [-1, 1]");
        v = it->second(k, x, ctx);
        name = family + "(" + k.str() + "; " + at + ")";
    }
    json j{{"command", "value"}, {"family", family}, {"composition", k.str()}, {"settings", s.echo()},
           {"result", approx_json(v, s.digits())}, {"timing_s", seconds_since(t0)}};
    if (!at.empty()) j["x"] = at;
    emit(s, j, name + " = " + mzv::to_string(v, s.digits()));
    return kExitOk;
}

int cmd_sum(const Settings& s, const std::string& family, const std::string& text, long n) {
    const std::string key = family == "t_star" ? "tstar" : family;
    auto f = mzv::parse_family(key);
    if (!f) throw UsageError("unknown harmonic family: " + family);
    if (n < 0) throw UsageError("sum: n must be nonnegative");
    const mzv::Composition k = mzv::parse_composition(text);
    const mzv::Rational v = mzv::harmonic_sum(*f, k, n);
    json j{{"command", "sum"}, {"family", family}, {"composition", k.str()}, {"n", n}, {"result", v.get_str()}};
    emit(s, j, v.get_str());
    return kExitOk;
}

int cmd_poset(const Settings& s, const std::string& path, bool symbolic) {
    const json in = read_json_file(path);
    mzv::LabeledPoset p = mzv::LabeledPoset::from_json(in);
    const mzv::RationalCombo combo = mzv::poset_combo(p);
    mzv::Context ctx(s.series());
    mzv::PrecisionGuard guard(ctx.opts.bits);
    const auto t0 = std::chrono::steady_clock::now();
    const mzv::ApproxReal v = combo.evaluate(ctx);
    json terms = json::array();
    for (const auto& [k, c] : combo.terms()) terms.push_back({{"composition", k.str()}, {"coefficient", c.get_str()}});
    json j{{"command", "poset"}, {"file", path}, {"settings", s.echo()}, {"result", approx_json(v, s.digits())},
           {"timing_s", seconds_since(t0)}};
    if (symbolic) j["combo"] = {{"text", combo.str()}, {"terms", terms}};
    std::string text = mzv::to_string(v, s.digits());
    if (symbolic) text = combo.str() + "\n" + text;
    emit(s, j, text);
    return kExitOk;
}

int cmd_schur(const Settings& s, const std::string& path, long bound) {
    const json in = read_json_file(path);
    const mzv::SchurDiagram d = mzv::SchurDiagram::from_json(in);
    const mzv::Rational v = mzv::schur_truncated(d, bound);
    mzv::PrecisionGuard guard(static_cast<mpfr_prec_t>(s.bits));
    const std::string approx = mzv::to_real(v).str(s.digits());
    json j{{"command", "schur"}, {"file", path}, {"bound", bound}, {"result", v.get_str()}, {"approx", approx}};
    emit(s, j, v.get_str() + "\n~ " + approx);
    return kExitOk;
}

struct VerifyArgs {
    std::string id;
    bool all = false;
    std::string params;
    int max_weight = 6;
    bool quiet = false;
};

std::string report_line(const mzv::IdentityReport& r) {
    std::string line = (r.pass ? "PASS " : "FAIL ") + r.id + " " + r.params.dump();
    if (!r.error.empty()) return line + " error: " + r.error;
    char buf[48];
    std::snprintf(buf, sizeof buf, " diff=%.3e radius=%.3e", std::abs(r.diff.value.to_double()), r.diff.radius);
    return line + buf;
}

int cmd_verify(const Settings& s, const VerifyArgs& a) {
    if (a.all == !a.id.empty()) throw UsageError("verify: give exactly one of <id> or --all");
    if (a.all && !a.params.empty()) throw UsageError("verify: --params needs a single id");
    std::vector<const mzv::IdentityEntry*> entries;
    if (a.all) {
        for (const auto& e : mzv::identity_registry()) entries.push_back(&e);
    } else {
        try {
            entries.push_back(&mzv::find_identity(a.id));
        } catch (const mzv::UnknownIdentity& e) {
            throw UsageError(e.what());
        }
    }
    mzv::Context ctx(s.series());
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<mzv::IdentityReport> reports;
    if (!a.params.empty()) {
        json p;
        try {
            p = json::parse(a.params);
        } catch (const json::exception& e) {
            throw UsageError(std::string("--params: ") + e.what());
        }
        try {
            reports.push_back(mzv::verify_identity(*entries.front(), p, s.tol, ctx));
        } catch (const json::exception& e) {
            throw UsageError(std::string("--params: ") + e.what());
        }
    } else {
        reports = mzv::run_jobs(mzv::enumerate_jobs(entries, a.max_weight), s.tol, ctx, s.threads);
    }
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;
    const std::size_t failed = reports.size() - passed;
    const double elapsed = seconds_since(t0);
    const std::string summary = "passed " + std::to_string(passed) + " / failed " + std::to_string(failed);
    if (s.as_json) {
        json results = json::array();
        for (const auto& r : reports) results.push_back(r.to_json(s.digits()));
        json j{{"command", "verify"},
               {"selector", a.all ? "--all" : a.id},
               {"max_weight", a.max_weight},
               {"settings", s.echo()},
               {"results", results},
               {"passed", passed},
               {"failed", failed},
               {"summary", summary},
               {"timing_s", elapsed}};
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& r : reports)
            if (!a.quiet || !r.pass) std::cout << report_line(r) << '\n';
        std::cout << summary << '\n';
        std::cerr << "elapsed " << elapsed << " s\n";
    }
    return failed == 0 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiple zeta values: evaluation and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--bits", s.bits, "working precision in bits")->check(CLI::Range(32L, 4096L));
    app.add_option("--terms", s.terms, "initial series truncation")->check(CLI::PositiveNumber);
    app.add_option("--tol", s.tol, "verification tolerance")->check(CLI::PositiveNumber);
    app.add_flag("--json", s.as_json, "machine-readable output");
    app.add_option("--threads", s.threads, "worker threads across registry entries")->check(CLI::Range(1u, 256u));

    std::string family, comp, at;
    long n = 0;
    auto* value = app.add_subcommand("value", "evaluate zeta, zeta_star, T, S, t or t_star at a composition");
    value->add_option("family", family)->required();
    value->add_option("composition", comp, "comma separated; a minus sign marks an alternating entry")->required();
    value->add_option("--x", at, "evaluate the function Li, A, L or t at this point (decimal or p/q)");

    auto* sum = app.add_subcommand("sum", "exact finite harmonic sum at n");
    sum->add_option("family", family)->required();
    sum->add_option("composition", comp)->required();
    sum->add_option("n", n)->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check registry identities");
    verify->add_option("id", va.id, "registry id");
    verify->add_flag("--all", va.all, "every registry entry");
    verify->add_option("--params", va.params, "JSON object with one parameter set");
    verify->add_option("--max-weight", va.max_weight, "enumeration weight bound")->check(CLI::Range(1, 12));
    verify->add_flag("--quiet", va.quiet, "print failures and the summary only");

    std::string file;
    bool symbolic = false;
    long bound = 0;
    auto* poset = app.add_subcommand("poset", "labeled poset integrals");
    auto* poset_eval = poset->add_subcommand("eval", "evaluate a poset JSON file");
    poset->require_subcommand(1);
    poset_eval->add_option("file", file)->required();
    poset_eval->add_flag("--symbolic", symbolic, "also print the rational combination of values");

    auto* schur = app.add_subcommand("schur", "truncated Schur sums");
    auto* schur_eval = schur->add_subcommand("eval", "exact truncated sum of a diagram JSON file");
    schur->require_subcommand(1);
    schur_eval->add_option("--bound", bound, "largest entry")->required();
    schur_eval->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*value) return cmd_value(s, family, comp, at);
        if (*sum) return cmd_sum(s, family, comp, n);
        if (*verify) return cmd_verify(s, va);
        if (*poset_eval) return cmd_poset(s, file, symbolic);
        if (*schur_eval) return cmd_schur(s, file, bound);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const mzv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const mzv::PosetError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const mzv::ShapeError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const mzv::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
