#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "govsym/govsym.hpp"

namespace govsym::cli {

namespace detail {

inline QuadInt parse_quadint(const std::string& s) {
    std::istringstream is(s);
    i64 a, b;
    char comma;
    if (!(is >> a >> comma >> b) || comma != ',')
        throw std::invalid_argument("expected 'a,b' for a + b*sqrt(2), got '" + s + "'");
    return {a, b};
}

inline Char16 parse_char16(const std::string& s) {
    std::istringstream is(s);
    int cs, ct;
    char comma;
    if (!(is >> cs >> comma >> ct) || comma != ',' || cs < 0 || cs > 1 || ct < 0 || ct > 3)
        throw std::invalid_argument("expected character 's,t' with s in 0..1, t in 0..3");
    return {static_cast<std::uint8_t>(cs), static_cast<std::uint8_t>(ct)};
}

inline std::vector<i64> parse_checkpoints(const std::string& spec, i64 X) {
    std::vector<i64> cps;
    if (spec == "geometric") {
        for (i64 c = 10; c < X; c *= 10) cps.push_back(c);
        cps.push_back(X);
        return cps;
    }
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) cps.push_back(std::stoll(tok));
    if (cps.empty()) cps.push_back(X);
    return cps;
}

struct Output {
    std::string format;  // "csv" or "json" or "" (command default)
    std::string path;

    void rows(const std::vector<RecordRow>& rs, std::ostream& fallback,
              const std::string& def = "csv") const {
        std::ofstream file;
        std::ostream* os = &fallback;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            os = &file;
        }
        std::string fmt = format.empty() ? def : format;
        if (fmt == "json")
            write_json(rs, *os);
        else
            write_csv(rs, *os);
    }

    void single(const std::string& json_line, std::ostream& fallback) const {
        std::ofstream file;
        std::ostream* os = &fallback;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            os = &file;
        }
        *os << json_line << "\n";
    }
};

inline std::string report_json(const SuiteReport& r, i64 samples, u64 seed) {
    std::ostringstream os;
    os << "{\"suite\":\"" << r.name << "\",\"samples\":" << samples << ",\"seed\":" << seed
       << ",\"checked\":" << r.checked << ",\"violations\":" << r.violations << ",\"pass\":"
       << (r.pass() ? "true" : "false") << "}";
    return os.str();
}

}  // namespace detail

/// Dispatch a full command line; returns the process exit code.
/// 0 = success, 1 = verification failure / assertion mismatch, 2 = bad input.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"governing symbols for the 16-rank of class groups CL(-8p)"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after the subcommand too

    int threads = 0;  // 0 = GOVSYM_THREADS env or all cores
    detail::Output output;
    app.add_option("--threads", threads, "worker thread count (default: all cores)");
    app.add_option("--format", output.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", output.path, "write data output to a file instead of stdout");

    // symbol <p>
    i64 sym_p = 0;
    auto* sym = app.add_subcommand(
        "symbol", "governing symbol <p> = (v/u) from p = u^2 - 2v^2, u = 1 mod 16");
    sym->add_option("p", sym_p, "prime p = 15 (mod 16)")->required();

    // classnum <D>
    i64 cn_D = 0;
    auto* cn = app.add_subcommand(
        "classnum", "class number h(D) and its 2-adic valuation by reduced-form count");
    cn->add_option("D", cn_D, "negative discriminant, 0 or 1 mod 4")->required();

    // density
    i64 den_x = 1000000;
    int den_kmax = 4;
    bool den_oracle = false;
    auto* den = app.add_subcommand(
        "density", "percentage of p <= X with 2^k | h(-8p), k = 1..kmax");
    den->add_option("--x", den_x, "upper bound X")->required();
    den->add_option("--kmax", den_kmax, "largest k (5, 6 need --oracle)");
    den->add_flag("--oracle", den_oracle, "enable class-number oracle for k = 5, 6");

    // oscillate
    i64 osc_x = 1000000;
    std::string osc_cps = "geometric";
    auto* osc = app.add_subcommand(
        "oscillate", "running sum S(X) of governing symbols over p = 15 (mod 16)");
    osc->add_option("--x", osc_x, "upper bound X")->required();
    osc->add_option("--checkpoints", osc_cps, "'geometric' or comma list of checkpoints");

    // linear-sum
    std::string ls_d = "1,0", ls_phi = "0,0", ls_psi = "0,0";
    i64 ls_x = 10000;
    auto* ls = app.add_subcommand(
        "linear-sum", "A_d(X): symbol sum over ideals divisible by d, vs. X^(5/6)");
    ls->add_option("--d", ls_d, "divisor as 'a,b' for a + b*sqrt(2)")->required();
    ls->add_option("--x", ls_x, "norm bound X")->required();
    ls->add_option("--phi", ls_phi, "character phi as 's,t'");
    ls->add_option("--psi", ls_psi, "character psi as 's,t'");

    // prime-sum
    std::string ps_phi = "0,0", ps_psi = "0,0";
    i64 ps_x = 100000;
    auto* ps = app.add_subcommand(
        "prime-sum", "S(X): Lambda-weighted symbol sum over prime-power ideals");
    ps->add_option("--x", ps_x, "norm bound X")->required();
    ps->add_option("--phi", ps_phi, "character phi as 's,t'");
    ps->add_option("--psi", ps_psi, "character psi as 's,t'");

    // cancel
    std::string ca_w1, ca_w2;
    auto* ca = app.add_subcommand(
        "cancel", "brute-force residue sum of gamma(w1,z)gamma(w2,z) vs. closed form");
    ca->add_option("--w1", ca_w1, "first element 'a,b'")->required();
    ca->add_option("--w2", ca_w2, "second element 'a,b'")->required();

    // davenport
    int dav_k = 0;
    i64 dav_x = 1000000;
    auto* dav = app.add_subcommand(
        "davenport", "lattice count of D u ... u eps^{2k} D against area a_k X");
    dav->add_option("--k", dav_k, "number of extra eps^2 translates (0..6)");
    dav->add_option("--x", dav_x, "norm bound X")->required();

    // bilinear
    i64 bi_m = 1000, bi_n = 1000;
    auto* bi = app.add_subcommand(
        "bilinear", "B(M,N) with alpha = Lambda, beta = 1 against the bilinear envelope");
    bi->add_option("--m", bi_m, "norm bound M for the weighted factor")->required();
    bi->add_option("--n", bi_n, "norm bound N for the free factor")->required();

    // verify
    std::string vf_suite = "all";
    i64 vf_samples = 10000;
    u64 vf_seed = 42;
    auto* vf = app.add_subcommand("verify", "run a named identity/property suite");
    vf->add_option("--suite", vf_suite, "one of: all, " + [] {
                       std::string s;
                       for (const auto& n : suite_names()) s += n + ", ";
                       return s.substr(0, s.size() - 2);
                   }());
    vf->add_option("--samples", vf_samples, "sample count for randomized suites");
    vf->add_option("--seed", vf_seed, "deterministic RNG seed");

    // enumerate
    i64 en_x = 100;
    auto* en = app.add_subcommand(
        "enumerate", "list fundamental-domain points (a, b) with norm <= X");
    en->add_option("--x", en_x, "norm bound X")->required();

    std::vector<const char*> argv;
    argv.push_back("govsym");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    int nthreads = threads > 0 ? threads : default_threads();

    try {
        if (*sym) {
            if (sym_p % 16 != 15) {
                err << "p ≢ 15 (mod 16)\n";
                return 2;
            }
            QuadInt w = normalize_generator(represent_prime(sym_p), GeneratorMode::u1mod16);
            std::ostringstream os;
            os << "{\"p\":" << sym_p << ",\"u\":" << w.a << ",\"v\":" << w.b
               << ",\"symbol\":" << to_int(jacobi(w.b, w.a)) << "}";
            output.single(os.str(), out);
        } else if (*cn) {
            ClassNumber h = class_number(cn_D);
            std::ostringstream os;
            os << "{\"D\":" << cn_D << ",\"h\":" << h.h << ",\"v2\":" << h.v2 << "}";
            output.single(os.str(), out);
        } else if (*den) {
            auto progress = [&](i64 done, i64 total) {
                if (den_oracle)
                    err << "\rdensity: " << (100 * done / total) << "%" << std::flush;
            };
            auto rows = density_table(den_x, den_kmax, den_oracle, nthreads, progress);
            if (den_oracle) err << "\n";
            output.rows(rows, out);
        } else if (*osc) {
            auto rows = oscillation(osc_x, detail::parse_checkpoints(osc_cps, osc_x), nthreads);
            output.rows(rows, out);
        } else if (*ls) {
            auto row = linear_sum(detail::parse_quadint(ls_d), detail::parse_char16(ls_phi),
                                  detail::parse_char16(ls_psi), ls_x);
            output.rows({row}, out);
        } else if (*ps) {
            auto row = weighted_prime_sum(detail::parse_char16(ps_phi),
                                          detail::parse_char16(ps_psi), ps_x, nthreads);
            output.rows({row}, out);
        } else if (*ca) {
            QuadInt w1 = detail::parse_quadint(ca_w1), w2 = detail::parse_quadint(ca_w2);
            auto [lhs, rhs] = cancellation_identity(w1, w2);
            std::ostringstream os;
            os << "{\"w1\":\"" << ca_w1 << "\",\"w2\":\"" << ca_w2
               << "\",\"W\":" << norm(w1) * norm(w2) << ",\"lhs\":" << lhs << ",\"rhs\":" << rhs
               << ",\"equal\":" << (lhs == rhs ? "true" : "false") << "}";
            output.single(os.str(), out);
        } else if (*dav) {
            output.rows({davenport_check(dav_k, dav_x, nthreads)}, out);
        } else if (*bi) {
            output.rows({bilinear_demo(bi_m, bi_n, nthreads)}, out);
        } else if (*vf) {
            if (vf_suite == "all") {
                bool ok = true;
                std::ostringstream os;
                os << "[\n";
                auto names = suite_names();
                for (std::size_t i = 0; i < names.size(); ++i) {
                    SuiteReport r = verify_suite(names[i], vf_samples, vf_seed, nthreads);
                    ok = ok && r.pass();
                    os << "  " << detail::report_json(r, vf_samples, vf_seed)
                       << (i + 1 < names.size() ? ",\n" : "\n");
                }
                os << "]";
                output.single(os.str(), out);
                return ok ? 0 : 1;
            }
            SuiteReport r = verify_suite(vf_suite, vf_samples, vf_seed, nthreads);
            output.single(detail::report_json(r, vf_samples, vf_seed), out);
            return r.pass() ? 0 : 1;
        } else if (*en) {
            std::ofstream file;
            std::ostream* os = &out;
            if (!output.path.empty()) {
                file.open(output.path);
                if (!file) throw std::invalid_argument("cannot open output file");
                os = &file;
            }
            if (output.format == "json") {
                *os << "[\n";
                bool first = true;
                for_each_domain_point(en_x, [&](QuadInt w) {
                    if (!first) *os << ",\n";
                    first = false;
                    *os << "  {\"a\":" << w.a << ",\"b\":" << w.b << ",\"norm\":" << norm(w) << "}";
                });
                *os << "\n]\n";
            } else {
                *os << "a,b,norm\n";
                for_each_domain_point(en_x, [&](QuadInt w) {
                    *os << w.a << ',' << w.b << ',' << norm(w) << '\n';
                });
            }
        }
    } catch (const capability_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << e.what() << "\n";  // a verification assertion failed
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace govsym::cli
