#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "govsym/parallel.hpp"
#include "govsym/quadform.hpp"
#include "govsym/record.hpp"
#include "govsym/represent.hpp"
#include "govsym/sieve.hpp"
#include "govsym/symbols.hpp"

namespace govsym {

/// Kahan-compensated accumulator; keeps the log-weighted sums reproducible to
/// well below 1e-6 relative error.
struct Kahan {
    double sum{0.0};
    double c{0.0};

    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    void merge(const Kahan& other) {
        add(other.sum);
        add(-other.c);
    }
};

// ---------------------------------------------------------------------------
// oscillation: S(X) = sum of governing symbols over p = -1 mod 16
// ---------------------------------------------------------------------------

inline std::vector<RecordRow> oscillation(i64 X, const std::vector<i64>& checkpoints,
                                          int threads = default_threads()) {
    if (X < 2) throw std::invalid_argument("oscillation: X must be >= 2");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] > X || (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
            throw std::invalid_argument("oscillation: checkpoints must be ascending and <= X");
    }
    using Chunk = std::vector<std::pair<i64, int>>;
    Chunk eps = chunked_reduce<Chunk>(
        2, X + 1, i64{1} << 19, threads,
        Chunk{},
        [](i64 lo, i64 hi) {
            Chunk part;
            for_each_prime_in(lo, hi - 1, [&](i64 p) {
                if (p % 16 == 15) part.emplace_back(p, to_int(governing_symbol(p)));
            });
            return part;
        },
        [](Chunk acc, Chunk part) {
            acc.insert(acc.end(), part.begin(), part.end());
            return acc;
        });
    std::vector<RecordRow> rows;
    std::size_t idx = 0;
    i64 running = 0, count = 0;
    for (i64 cp : checkpoints) {
        while (idx < eps.size() && eps[idx].first <= cp) {
            running += eps[idx].second;
            ++count;
            ++idx;
        }
        rows.push_back(make_row(cp, "oscillation", count, static_cast<double>(running), 0.0,
                                std::pow(static_cast<double>(cp), 199.0 / 200.0)));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// density_table: percentages of p <= X with 2^k | h(-8p)
// ---------------------------------------------------------------------------

using ProgressFn = std::function<void(i64 done, i64 total)>;

inline std::vector<RecordRow> density_table(i64 X, int kmax, bool use_oracle,
                                            int threads = default_threads(),
                                            const ProgressFn& progress = {}) {
    if (X < 100) throw std::invalid_argument("density_table: X must be >= 100");
    if (kmax < 1 || kmax > 6) throw std::invalid_argument("density_table: kmax in 1..6");
    if (kmax > 4 && !use_oracle)
        throw capability_error("density_table: k = 5, 6 need the class-number oracle");

    struct Counts {
        i64 total{0};
        std::array<i64, 6> k{};
    };
    std::atomic<i64> done{0};
    Counts counts = chunked_reduce<Counts>(
        2, X + 1, i64{1} << 16, threads,
        Counts{},
        [&](i64 lo, i64 hi) {
            Counts part;
            for_each_prime_in(lo, hi - 1, [&](i64 p) {
                ++part.total;
                if (p % 4 != 3) return;
                ++part.k[0];
                if (p % 8 != 7) return;
                ++part.k[1];
                if (p % 16 != 15) return;
                ++part.k[2];
                if (kmax < 4) return;
                if (governing_symbol(p) != Sign::plus) return;
                ++part.k[3];
                if (kmax < 5) return;
                int v2 = class_number(-8 * p).v2;
                if (v2 >= 5) ++part.k[4];
                if (v2 >= 6) ++part.k[5];
            });
            if (progress) progress(done += hi - lo, X);
            return part;
        },
        [](Counts acc, Counts part) {
            acc.total += part.total;
            for (int i = 0; i < 6; ++i) acc.k[static_cast<std::size_t>(i)] += part.k[static_cast<std::size_t>(i)];
            return acc;
        });

    std::vector<RecordRow> rows;
    for (int k = 1; k <= kmax; ++k) {
        i64 c = counts.k[static_cast<std::size_t>(k - 1)];
        double pct = 100.0 * static_cast<double>(c) / static_cast<double>(counts.total);
        rows.push_back(make_row(X, "density_k" + std::to_string(k), c, pct, 0.0, 0.0));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// weighted_prime_sum: S_{phi,psi}(X) = sum a_{phi,psi,n} Lambda(n)
// ---------------------------------------------------------------------------

namespace detail {

// Visit (domain generator, Lambda, norm) of every prime-power ideal with norm
// in (lo, hi]; fn(DomainPoint, lambda). Prime ideals come from the rational
// primes: split p = +-1 mod 8 gives two degree-one ideals, inert p = +-3 mod 8
// one ideal of norm p^2, the ramified prime is even and skipped (every symbol
// weight vanishes on even ideals).
template <class F>
inline void for_each_prime_power_ideal(i64 norm_lo, i64 norm_hi, F&& fn) {
    if (norm_hi < 2) return;
    for_each_prime_in(2, norm_hi, [&](i64 p) {
        if (p == 2) return;
        i64 r8 = p % 8;
        if (r8 == 1 || r8 == 7) {
            double lam = std::log(static_cast<double>(p));
            QuadInt w = represent_prime(p);
            for (QuadInt gen : {w, conj(w)}) {
                i128 nrm = p;
                QuadInt pw = gen;
                while (nrm <= norm_hi) {
                    if (nrm > norm_lo)
                        fn(reduce_to_domain(pw).first, lam, static_cast<i64>(nrm));
                    nrm *= p;
                    if (nrm <= norm_hi) pw = mul(pw, gen);
                }
            }
        } else {
            if (static_cast<i128>(p) * p > norm_hi) return;
            double lam = 2.0 * std::log(static_cast<double>(p));
            i128 nrm = static_cast<i128>(p) * p;
            QuadInt pw{p, 0};
            while (nrm <= norm_hi) {
                if (nrm > norm_lo) fn(reduce_to_domain(pw).first, lam, static_cast<i64>(nrm));
                nrm *= static_cast<i128>(p) * p;
                if (nrm <= norm_hi) pw = mul(pw, QuadInt{p, 0});
            }
        }
    });
}

}  // namespace detail

inline RecordRow weighted_prime_sum(Char16 phi, Char16 psi, i64 X,
                                    int threads = default_threads()) {
    if (X < 1) throw std::invalid_argument("weighted_prime_sum: X must be >= 1");
    struct Part {
        Kahan re, im;
        i64 count{0};
    };
    // chunk over rational primes p; each chunk handles the prime powers of its p
    Part part = chunked_reduce<Part>(
        2, X + 1, i64{1} << 17, threads,
        Part{},
        [&](i64 lo, i64 hi) {
            Part s;
            for_each_prime_in(lo, hi - 1, [&](i64 p) {
                if (p == 2) return;
                i64 r8 = p % 8;
                auto account = [&](QuadInt gen, double lam) {
                    i128 nrm = norm_wide(gen);
                    i128 step = nrm;
                    QuadInt pw = gen;
                    while (nrm <= X) {
                        GaussInt a = ideal_spin(reduce_to_domain(pw).first, phi, psi);
                        s.re.add(lam * static_cast<double>(a.re));
                        s.im.add(lam * static_cast<double>(a.im));
                        ++s.count;
                        nrm *= step;
                        if (nrm <= X) pw = mul(pw, gen);
                    }
                };
                if (r8 == 1 || r8 == 7) {
                    QuadInt w = represent_prime(p);
                    double lam = std::log(static_cast<double>(p));
                    account(w, lam);
                    account(conj(w), lam);
                } else if (static_cast<i128>(p) * p <= X) {
                    account(QuadInt{p, 0}, 2.0 * std::log(static_cast<double>(p)));
                }
            });
            return s;
        },
        [](Part acc, Part s) {
            acc.re.merge(s.re);
            acc.im.merge(s.im);
            acc.count += s.count;
            return acc;
        });
    return make_row(X, "prime_sum_phi" + phi.name() + "_psi" + psi.name(), part.count,
                    part.re.sum, part.im.sum, std::pow(static_cast<double>(X), 0.8));
}

// ---------------------------------------------------------------------------
// linear_sum: A_d(X) = sum of a_{phi,psi,n} over n = 0 mod d
// ---------------------------------------------------------------------------

inline RecordRow linear_sum(QuadInt d, Char16 phi, Char16 psi, i64 X) {
    if (X < 1) throw std::invalid_argument("linear_sum: X must be >= 1");
    if (is_zero(d)) throw std::invalid_argument("linear_sum: d must be nonzero");
    double bound = std::pow(static_cast<double>(X), 5.0 / 6.0);
    if (!is_odd(d)) {
        // supported only on odd ideals: the sum is exactly 0
        return make_row(X, "linear_sum_even_d", 0, 0.0, 0.0, bound);
    }
    GaussInt acc{};
    i64 terms = 0;
    for_each_domain_point(X, [&](QuadInt w) {
        if (!divides(d, w)) return;
        acc += ideal_spin(DomainPoint(w), phi, psi);
        ++terms;
    });
    return make_row(X, "linear_sum", terms, static_cast<double>(acc.re),
                    static_cast<double>(acc.im), bound);
}

// ---------------------------------------------------------------------------
// cancellation_identity: brute-force residue sum vs. the closed form
// ---------------------------------------------------------------------------

/// |sum over z in Z[sqrt2]/(W) of gamma(w1,z)gamma(w2,z)| computed by brute
/// force, against W*phi(r)*phi(W/r) when W and r = norm(gcd(w1, conj(w2))) are
/// both squares and 0 otherwise. Throws std::logic_error if the two disagree.
inline std::pair<i64, i64> cancellation_identity(QuadInt w1, QuadInt w2) {
    if (!is_totally_positive(w1) || !is_primitive(w1) || !is_totally_positive(w2) ||
        !is_primitive(w2))
        throw std::invalid_argument("cancellation_identity: inputs must be primitive and totally positive");
    i128 W_wide = norm_wide(w1) * norm_wide(w2);
    if (W_wide > 4472) throw capability_error("cancellation_identity: W too large to brute-force");
    const i64 W = static_cast<i64>(W_wide);
    const i64 n1 = norm(w1), n2 = norm(w2);

    std::vector<int8_t> J1(static_cast<std::size_t>(n1)), J2(static_cast<std::size_t>(n2));
    for (i64 x = 0; x < n1; ++x) J1[static_cast<std::size_t>(x)] = static_cast<int8_t>(jacobi_int(x, n1));
    for (i64 x = 0; x < n2; ++x) J2[static_cast<std::size_t>(x)] = static_cast<int8_t>(jacobi_int(x, n2));

    auto red = [](i64 v, i64 n) { return ((v % n) + n) % n; };
    const i64 a1 = red(w1.a, n1), tb1 = red(2 * w1.b, n1);
    const i64 a2 = red(w2.a, n2), tb2 = red(2 * w2.b, n2);

    i64 total = 0;
    i64 row1 = 0, row2 = 0;  // (2*b*d) mod n at c = 0
    for (i64 dz = 0; dz < W; ++dz) {
        i64 x1 = row1, x2 = row2;
        for (i64 cz = 0; cz < W; ++cz) {
            total += static_cast<i64>(J1[static_cast<std::size_t>(x1)]) *
                     J2[static_cast<std::size_t>(x2)];
            x1 += a1;
            if (x1 >= n1) x1 -= n1;
            x2 += a2;
            if (x2 >= n2) x2 -= n2;
        }
        row1 += tb1;
        if (row1 >= n1) row1 -= n1;
        row2 += tb2;
        if (row2 >= n2) row2 -= n2;
    }
    i64 lhs = total < 0 ? -total : total;

    i64 r = norm(gcd(w1, conj(w2)));
    i64 rhs = 0;
    if (is_square_u64(static_cast<u64>(W)) && is_square_u64(static_cast<u64>(r)))
        rhs = narrow_checked(static_cast<i128>(W) * static_cast<i64>(euler_phi(static_cast<u64>(r))) *
                             static_cast<i64>(euler_phi(static_cast<u64>(W / r))));
    if (lhs != rhs)
        throw std::logic_error("cancellation_identity: brute-force sum disagrees with closed form");
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// davenport_check: lattice counts in eps^2-translates of the fundamental domain
// ---------------------------------------------------------------------------

namespace detail {

// Area of D(1) = {u > 0, -u < 2v <= u, u^2 - 2v^2 <= 1} by adaptive Simpson
// over the section-length function; the closed form is log(1+sqrt2)/sqrt2.
inline double simpson(double (*f)(double), double a, double b, double fa, double fb,
                      double fm, double eps, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, fm, flm, eps / 2.0, depth - 1) +
           simpson(f, m, b, fm, fb, frm, eps / 2.0, depth - 1);
}

inline double domain_section_len(double u) {
    if (u <= 1.0) return u;
    return u - std::sqrt(2.0 * (u * u - 1.0));
}

inline double domain_unit_area() {
    static const double a0 = [] {
        double lo = 1.0, hi = std::sqrt(2.0);
        double head = 0.5;  // triangle piece over u in [0, 1]
        double tail = simpson(domain_section_len, lo, hi, domain_section_len(lo),
                              domain_section_len(hi), domain_section_len(0.5 * (lo + hi)),
                              1e-13, 48);
        return head + tail;
    }();
    return a0;
}

}  // namespace detail

/// Count lattice points of (D u eps^2 D u ... u eps^{2k} D) with norm <= X and
/// compare against the scaled area a_k*X; the deviation must respect the
/// Davenport bound l_k*sqrt(X) + 4 (h = 2, two dimensions). The row's value is
/// the signed discrepancy count - a_k*X.
inline RecordRow davenport_check(int k, i64 X, int threads = default_threads()) {
    if (k < 0 || k > 6) throw std::invalid_argument("davenport_check: k in 0..6");
    if (X < 1) throw std::invalid_argument("davenport_check: X must be >= 1");
    i64 count0 = count_domain_points(X);
    i64 total = count0;
    if (k > 0) {
        // each translate counted separately through the norm-preserving
        // unimodular image, with the membership certificate checked per point
        struct Per {
            i64 ok{0};
            i64 bad{0};
        };
        i64 alim = domain_a_limit(X);
        Per per = chunked_reduce<Per>(
            1, alim + 1, std::max<i64>(alim / 64, 1), threads, Per{},
            [&](i64 lo, i64 hi) {
                Per p;
                for_each_domain_point(lo, hi - 1, X, [&](QuadInt w) {
                    for (int j = 1; j <= k; ++j) {
                        auto [d, back] = reduce_to_domain(unit_times(w, 2 * j));
                        if (d.w == w && back == -j)
                            ++p.ok;
                        else
                            ++p.bad;
                    }
                });
                return p;
            },
            [](Per a, Per b) {
                a.ok += b.ok;
                a.bad += b.bad;
                return a;
            });
        if (per.bad != 0)
            throw std::logic_error("davenport_check: translate round-trip failed");
        total += per.ok;
    }
    double a0 = detail::domain_unit_area();
    double ak = (k + 1) * a0;  // the eps^2 action is unimodular, areas add equally
    QuadInt e2k = unit_times(QuadInt{1, 0}, 2 * k);
    double A = static_cast<double>(e2k.a), B = static_cast<double>(e2k.b);
    double u_extent = std::sqrt(2.0) * (A + B);
    double v_extent = (A + 2.0 * B) / std::sqrt(2.0) + 1.0 / std::sqrt(2.0);
    double lk = 2.0 * (u_extent + v_extent);
    double bound = lk * std::sqrt(static_cast<double>(X)) + 4.0;
    double disc = static_cast<double>(total) - ak * static_cast<double>(X);
    if (std::abs(disc) > bound)
        throw std::logic_error("davenport_check: count deviates beyond the Davenport bound");
    return make_row(X, "davenport_k" + std::to_string(k), total, disc, 0.0, bound);
}

// ---------------------------------------------------------------------------
// bilinear_demo: B(M, N) with alpha_m = Lambda(m), beta_n = 1, trivial chars
// ---------------------------------------------------------------------------

inline RecordRow bilinear_demo(i64 M, i64 N, int threads = default_threads()) {
    if (M < 1 || N < 1) throw std::invalid_argument("bilinear_demo: M, N must be >= 1");
    if (M > 10000 || N > 10000)
        throw capability_error("bilinear_demo: brute-force scale is M, N <= 10^4");
    struct MTerm {
        QuadInt w;
        double lambda;
    };
    std::vector<MTerm> ms;
    detail::for_each_prime_power_ideal(1, M, [&](const DomainPoint& d, double lam, i64) {
        ms.push_back({d.w, lam});
    });
    std::vector<DomainPoint> ns = domain_points(N);
    struct Part {
        Kahan re, im;
    };
    Part part = chunked_reduce<Part>(
        0, static_cast<i64>(ms.size()), 8, threads, Part{},
        [&](i64 lo, i64 hi) {
            Part s;
            for (i64 i = lo; i < hi; ++i) {
                const auto& m = ms[static_cast<std::size_t>(i)];
                for (const auto& n : ns) {
                    GaussInt a = ideal_spin(reduce_to_domain(mul(m.w, n.w)).first,
                                            kTrivialChar, kTrivialChar);
                    if (a.re == 0 && a.im == 0) continue;
                    s.re.add(m.lambda * static_cast<double>(a.re));
                    s.im.add(m.lambda * static_cast<double>(a.im));
                }
            }
            return s;
        },
        [](Part a, Part b) {
            a.re.merge(b.re);
            a.im.merge(b.im);
            return a;
        });
    double envelope = std::pow(static_cast<double>(M + N), 1.0 / 12.0) *
                      std::pow(static_cast<double>(M) * static_cast<double>(N), 11.0 / 12.0);
    return make_row(M, "bilinear_n" + std::to_string(N),
                    static_cast<i64>(ms.size() * ns.size()), part.re.sum, part.im.sum,
                    envelope);
}

}  // namespace govsym
