#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "govsym/experiments.hpp"

namespace govsym {

/// Self-contained deterministic generator (splitmix64); identical streams on
/// every platform and thread count.
struct SplitMix64 {
    u64 state;

    explicit SplitMix64(u64 seed) : state(seed) {}

    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    i64 uniform(i64 lo, i64 hi) {  // inclusive range
        return lo + static_cast<i64>(next() % static_cast<u64>(hi - lo + 1));
    }
};

struct SuiteReport {
    std::string name;
    i64 checked{0};
    i64 violations{0};

    bool pass() const { return violations == 0; }
};

namespace detail {

inline QuadInt random_primitive_tp(SplitMix64& rng, i64 norm_max) {
    i64 amax = static_cast<i64>(isqrt_u64(static_cast<u64>(2 * norm_max)));
    for (;;) {
        i64 a = 2 * rng.uniform(0, amax / 2) + 1;
        i64 b = rng.uniform(-(amax / 2), amax / 2);
        QuadInt w{a, b};
        i128 n = norm_wide(w);
        if (n <= 0 || n > norm_max) continue;
        if (!is_primitive(w)) continue;
        return w;
    }
}

inline QuadInt random_odd_tp(SplitMix64& rng, i64 norm_max) {
    i64 amax = static_cast<i64>(isqrt_u64(static_cast<u64>(2 * norm_max)));
    for (;;) {
        i64 a = 2 * rng.uniform(0, amax / 2) + 1;
        i64 b = rng.uniform(-(amax / 2), amax / 2);
        QuadInt w{a, b};
        i128 n = norm_wide(w);
        if (n <= 0 || n > norm_max) continue;
        return w;
    }
}

// --- individual suites ------------------------------------------------------

inline SuiteReport suite_reciprocity(i64 samples, u64 seed) {
    SuiteReport rep{"reciprocity"};
    SplitMix64 rng(seed);
    for (i64 i = 0; i < samples; ++i) {
        QuadInt w = random_primitive_tp(rng, 2000);
        QuadInt z = random_primitive_tp(rng, 2000);
        QuadInt wz = mul(w, z);
        Sign lhs = gamma(w, z) * gamma(z, w);
        Sign rhs = jacobi(static_cast<i128>(wz.a), norm(wz));
        ++rep.checked;
        if (lhs != rhs) ++rep.violations;
    }
    return rep;
}

inline SuiteReport suite_gmult(i64 samples, u64 seed) {
    SuiteReport rep{"gmult"};
    SplitMix64 rng(seed);
    for (i64 i = 0; i < samples; ++i) {
        QuadInt w = random_primitive_tp(rng, 2000);
        QuadInt z1{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        QuadInt z2{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        Sign lhs = gamma(w, z1) * gamma(w, z2);
        Sign rhs = gamma(w, mul(z1, z2)) * mu(w);
        ++rep.checked;
        if (lhs != rhs) ++rep.violations;
    }
    return rep;
}

inline SuiteReport suite_mu_mod8(i64 samples, u64 seed) {
    SuiteReport rep{"mu_mod8"};
    SplitMix64 rng(seed);
    while (rep.checked < samples) {
        QuadInt w1 = random_primitive_tp(rng, 4000);
        QuadInt w2{w1.a + 8 * rng.uniform(0, 16), w1.b + 8 * rng.uniform(-8, 8)};
        if (!is_totally_positive(w2) || !is_primitive(w2)) continue;
        ++rep.checked;
        if (mu(w1) != mu(w2)) ++rep.violations;
    }
    return rep;
}

inline SuiteReport suite_eps8(i64 samples, u64 seed) {
    SuiteReport rep{"eps8"};
    auto check = [&](i64 u1, i64 v1) {
        if (sq_i128(u1) - 2 * sq_i128(v1) <= 0) return;
        i64 u2 = narrow_checked(577 * static_cast<i128>(u1) + 816 * static_cast<i128>(v1));
        i64 v2 = narrow_checked(408 * static_cast<i128>(u1) + 577 * static_cast<i128>(v1));
        ++rep.checked;
        if (jacobi(v1, u1) != jacobi(v2, u2)) ++rep.violations;
    };
    for (i64 u1 = 1; u1 <= 500; u1 += 2)
        for (i64 v1 = -500; v1 <= 500; ++v1) check(u1, v1);
    SplitMix64 rng(seed);
    for (i64 i = 0; i < samples; ++i) {
        i64 u1 = 2 * rng.uniform(0, 500000) + 1;
        i64 v1 = rng.uniform(-707000, 707000);
        check(u1, v1);
    }
    return rep;
}

inline SuiteReport suite_almost_mult(i64 samples, u64 seed) {
    SuiteReport rep{"almost_mult"};
    SplitMix64 rng(seed);
    std::map<std::tuple<i64, i64, i64, i64>, int> cls;
    for (i64 i = 0; i < samples; ++i) {
        QuadInt w = random_primitive_tp(rng, 2000);
        QuadInt z = random_primitive_tp(rng, 2000);
        int prod = to_int(spin(mul(w, z))) * to_int(spin(w)) * to_int(spin(z)) *
                   to_int(gamma(w, z));
        ++rep.checked;
        if (prod == 0) continue;  // vacuous: both sides vanish together
        auto key = std::make_tuple(((w.a % 16) + 16) % 16, ((w.b % 16) + 16) % 16,
                                   ((z.a % 16) + 16) % 16, ((z.b % 16) + 16) % 16);
        auto [it, inserted] = cls.emplace(key, prod);
        if (!inserted && it->second != prod) ++rep.violations;
    }
    return rep;
}

inline SuiteReport suite_ideal_spin_welldef(i64 samples, u64 seed) {
    SuiteReport rep{"ideal_spin_welldef"};
    SplitMix64 rng(seed);
    const auto chars = all_chars();
    for (i64 i = 0; i < samples; ++i) {
        QuadInt w = random_odd_tp(rng, 5000);
        DomainPoint n = reduce_to_domain(w).first;
        int m = static_cast<int>(rng.uniform(-3, 3));
        Char16 phi = chars[static_cast<std::size_t>(rng.uniform(0, 7))];
        Char16 psi = chars[static_cast<std::size_t>(rng.uniform(0, 7))];
        GaussInt shifted{};
        QuadInt start = unit_times(n.w, 2 * m);
        for (int k = 0; k < 4; ++k) {
            shifted += weighted_spin(start, phi, psi);
            start = mul(start, kEps2);
        }
        ++rep.checked;
        if (shifted != ideal_spin(n, phi, psi)) ++rep.violations;
    }
    return rep;
}

// Exhaustive fundamental-domain uniqueness: every totally positive w in the
// window has exactly one k in [-40, 40] with eps^{2k} w in D, matching the k
// that reduce_to_domain reports. The scan walks eps^{+-2} steps in 128-bit.
inline SuiteReport suite_domain_unique(i64 norm_max) {
    SuiteReport rep{"domain_unique"};
    auto in_domain_wide = [](i128 a, i128 b) { return a > 0 && -a < 2 * b && 2 * b <= a; };
    auto scan = [&](QuadInt w) {
        int hits = 0;
        int hit_k = 0;
        i128 a = w.a, b = w.b;
        // walk down to eps^{-80} w, then back up to eps^{+80} w
        for (int k = 0; k > -41; --k) {
            if (in_domain_wide(a, b)) {
                ++hits;
                hit_k = k;
            }
            i128 na = 3 * a - 4 * b, nb = -2 * a + 3 * b;
            a = na;
            b = nb;
        }
        a = w.a;
        b = w.b;
        for (int k = 0; k < 41; ++k) {
            if (k > 0 && in_domain_wide(a, b)) {
                ++hits;
                hit_k = k;
            }
            i128 na = 3 * a + 4 * b, nb = 2 * a + 3 * b;
            a = na;
            b = nb;
        }
        ++rep.checked;
        auto [d, kk] = reduce_to_domain(w);
        if (hits != 1 || kk != hit_k || unit_times(w, 2 * kk) != d.w) ++rep.violations;
    };
    for (i64 a = 1; a <= 200; ++a)
        for (i64 b = -141; b <= 141; ++b) {
            QuadInt w{a, b};
            i128 n = norm_wide(w);
            if (n <= 0 || n > norm_max) continue;
            scan(w);
        }
    // skinny translates beyond the coordinate window
    for_each_domain_point(norm_max, [&](QuadInt w) {
        for (int j = -5; j <= 5; ++j) {
            if (j == 0) continue;
            scan(unit_times(w, 2 * j));
        }
    });
    return rep;
}

inline SuiteReport suite_criterion(int threads = default_threads()) {
    SuiteReport rep{"criterion"};
    struct Part {
        i64 checked{0}, violations{0};
    };
    Part part = chunked_reduce<Part>(
        2, 100001, 1 << 12, threads, Part{},
        [](i64 lo, i64 hi) {
            Part p;
            for_each_prime_in(lo, hi - 1, [&](i64 q) {
                if (q % 16 != 15) return;
                ++p.checked;
                if ((governing_symbol(q) == Sign::plus) != rk16_oracle(q)) ++p.violations;
            });
            return p;
        },
        [](Part a, Part b) {
            a.checked += b.checked;
            a.violations += b.violations;
            return a;
        });
    rep.checked = part.checked;
    rep.violations = part.violations;
    return rep;
}

inline SuiteReport suite_redei_reichardt(int threads = default_threads()) {
    SuiteReport rep{"redei_reichardt"};
    struct Part {
        i64 checked{0}, violations{0};
    };
    Part part = chunked_reduce<Part>(
        2, 100001, 1 << 12, threads, Part{},
        [](i64 lo, i64 hi) {
            Part p;
            for_each_prime_in(lo, hi - 1, [&](i64 q) {
                if (q % 4 != 3) return;
                ++p.checked;
                int v2 = class_number(-8 * q).v2;
                bool ok = v2 >= 1 && ((v2 >= 2) == (q % 8 == 7)) && ((v2 >= 3) == (q % 16 == 15));
                if (!ok) ++p.violations;
            });
            return p;
        },
        [](Part a, Part b) {
            a.checked += b.checked;
            a.violations += b.violations;
            return a;
        });
    rep.checked = part.checked;
    rep.violations = part.violations;
    return rep;
}

inline SuiteReport suite_cancellation() {
    SuiteReport rep{"cancellation"};
    std::vector<QuadInt> prim;
    for_each_domain_point(60, [&](QuadInt w) {
        if (is_primitive(w)) prim.push_back(w);
    });
    for (QuadInt w1 : prim)
        for (QuadInt w2 : prim) {
            ++rep.checked;
            try {
                cancellation_identity(w1, w2);
            } catch (const std::logic_error&) {
                ++rep.violations;
            }
        }
    // worked cases: (3,1)x(3,1) -> 2058; (3,1)x(5,1) -> 0; (3,1)x(3,-1) -> 0
    auto expect = [&](QuadInt w1, QuadInt w2, i64 want) {
        ++rep.checked;
        try {
            auto [lhs, rhs] = cancellation_identity(w1, w2);
            if (lhs != want || rhs != want) ++rep.violations;
        } catch (const std::logic_error&) {
            ++rep.violations;
        }
    };
    expect({3, 1}, {3, 1}, 2058);
    expect({3, 1}, {5, 1}, 0);
    expect({3, 1}, {3, -1}, 0);
    return rep;
}

inline SuiteReport suite_order4(int threads = default_threads()) {
    SuiteReport rep{"order4"};
    std::vector<i64> ps;
    for_each_prime(10000, [&](i64 q) {
        if (q % 8 == 7 && static_cast<i64>(ps.size()) < 100) ps.push_back(q);
    });
    struct Part {
        i64 checked{0}, violations{0};
    };
    Part part = chunked_reduce<Part>(
        0, static_cast<i64>(ps.size()), 8, threads, Part{},
        [&](i64 lo, i64 hi) {
            Part p;
            for (i64 i = lo; i < hi; ++i) {
                i64 q = ps[static_cast<std::size_t>(i)];
                QuadInt w = normalize_generator(represent_prime(q), GeneratorMode::v1mod4);
                QuadForm f{w.a, -4 * w.b, 2 * w.a};
                ++p.checked;
                bool ok = discriminant(f) == -8 * q && class_order(f) == 4 &&
                          compose(f, f) == reduce_form({2, 0, q});
                if (!ok) ++p.violations;
            }
            return p;
        },
        [](Part a, Part b) {
            a.checked += b.checked;
            a.violations += b.violations;
            return a;
        });
    rep.checked = part.checked;
    rep.violations = part.violations;
    return rep;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
    return {"reciprocity", "gmult",         "mu_mod8",          "eps8",
            "almost_mult", "ideal_spin_welldef", "domain_unique", "criterion",
            "redei_reichardt", "cancellation", "order4"};
}

/// Run one named property suite (or "all") with deterministic sampling.
inline SuiteReport verify_suite(std::string_view name, i64 samples, u64 seed,
                                int threads = default_threads()) {
    if (name == "reciprocity") return detail::suite_reciprocity(samples, seed);
    if (name == "gmult") return detail::suite_gmult(samples, seed);
    if (name == "mu_mod8") return detail::suite_mu_mod8(samples, seed);
    if (name == "eps8") return detail::suite_eps8(samples, seed);
    if (name == "almost_mult") return detail::suite_almost_mult(samples, seed);
    if (name == "ideal_spin_welldef") return detail::suite_ideal_spin_welldef(samples, seed);
    if (name == "domain_unique") return detail::suite_domain_unique(10000);
    if (name == "criterion") return detail::suite_criterion(threads);
    if (name == "redei_reichardt") return detail::suite_redei_reichardt(threads);
    if (name == "cancellation") return detail::suite_cancellation();
    if (name == "order4") return detail::suite_order4(threads);
    if (name == "all") {
        SuiteReport total{"all"};
        for (const auto& n : suite_names()) {
            SuiteReport r = verify_suite(n, samples, seed, threads);
            total.checked += r.checked;
            total.violations += r.violations;
        }
        return total;
    }
    throw std::invalid_argument("verify_suite: unknown suite '" + std::string(name) + "'");
}

}  // namespace govsym
