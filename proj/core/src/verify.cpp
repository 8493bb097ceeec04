#include "g2an/verify.hpp"

#include "g2an/errors.hpp"
#include "g2an/g2.hpp"
#include "g2an/json_io.hpp"
#include "g2an/residues.hpp"
#include "g2an/rng.hpp"
#include "g2an/termsum.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <thread>
#include <utility>

namespace g2an {

CheckResult make_result(const BigReal& residual, const BigReal& termscale) {
    BigReal rel(0L, residual.precision());
    if (!termscale.is_zero())
        rel = residual / termscale;
    else if (!residual.is_zero())
        rel = BigReal(1L, residual.precision());
    return CheckResult{residual, termscale, rel};
}

double default_tolerance(long precision_bits) {
    if (precision_bits >= 256) return 1e-30;
    long decades = 12 + (precision_bits - 128) * 18 / 128;
    if (decades < 1) decades = 1;
    return std::pow(10.0, static_cast<double>(-decades));
}

namespace {

// Check-class tolerances, tight at full precision, uniform policy below it.
double tol_for(long bits, double tight) {
    return bits >= 256 ? tight : default_tolerance(bits);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

SplitMix64 check_rng(const CheckContext& ctx, const char* check_id) {
    return SplitMix64(mix_seed(ctx.seed, fnv1a(check_id) + 0x9E37ULL * static_cast<std::uint64_t>(ctx.fp.n) +
                                             static_cast<std::uint64_t>(ctx.trial)));
}

// Tracks the worst relative residual seen across a check's internal loop.
class Worst {
public:
    explicit Worst(long prec) : best_{BigReal(0L, prec), BigReal(0L, prec), BigReal(0L, prec)} {}

    void value_vs_scale(const BigReal& residual, const BigReal& scale) {
        CheckResult r = make_result(residual, scale);
        if (best_.rel < r.rel || first_) {
            best_ = r;
            first_ = false;
        }
    }
    void pair(const BigComplex& a, const BigComplex& b, const BigReal& scale_floor) {
        BigReal num = abs(a - b);
        BigReal den = max(max(abs(a), abs(b)), scale_floor);
        value_vs_scale(num, den);
    }
    void termsum(const TermSum& t) { value_vs_scale(abs(t.value), t.termscale); }

    CheckResult result() const { return best_; }

private:
    CheckResult best_;
    bool first_ = true;
};

std::vector<int> all_n() { return {1, 2, 3, 4, 5, 6, 7, 8}; }
std::vector<int> n_from(int lo) {
    std::vector<int> v;
    for (int n = lo; n <= 8; ++n) v.push_back(n);
    return v;
}

const std::pair<int, int> kR4Table[] = {{5, 3}, {2, 4}, {3, 4}, {4, 4}};
const std::pair<int, int> kR5Table[] = {{2, 2}, {2, 4}, {4, 2}};
const std::pair<int, int> kR6Table[] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}};

} // namespace

BigComplex derivative_oracle(const ParamPoint& base, DerivKind kind, int i, int j, int k) {
    const long prec = base.precision();
    FrobeniusPoint fp0 = build_point(base);
    const BigReal step = ldexp2(BigReal(1L, prec), -(prec / 3));

    auto probe = [&](int direction) -> BigComplex {
        std::vector<BigComplex> target = fp0.u;
        target[static_cast<std::size_t>(k)] +=
            BigComplex(step * direction, BigReal(0L, prec));
        ParamPoint t = invert_u_to_t(base.n, target, base);
        FrobeniusPoint fp = build_point_matched(t, fp0);
        return kind == DerivKind::lame ? fp.h[static_cast<std::size_t>(i)] : fp.gamma(i, j);
    };

    BigComplex plus = probe(1);
    BigComplex minus = probe(-1);
    return (plus - minus) / BigComplex(2 * step, BigReal(0L, prec));
}

std::vector<CheckSpec> default_registry(long bits) {
    std::vector<CheckSpec> reg;
    const double tol_vanish = default_tolerance(bits);
    const double tol_oracle = tol_for(bits, 1e-40);
    const double tol_conv = tol_for(bits, 1e-50);
    const double tol_exact = tol_for(bits, 1e-60);
    const double tol_fd = tol_for(bits, 1e-20);

    auto add = [&](std::string id, std::vector<int> ns, double tol, bool gating,
                   std::vector<std::string> covers, CheckFn fn) {
        CheckSpec spec;
        spec.check_id = std::move(id);
        spec.n_values = std::move(ns);
        spec.trials = 20;
        spec.tolerance = tol;
        spec.gating = gating;
        spec.covers = std::move(covers);
        spec.run = std::move(fn);
        reg.push_back(std::move(spec));
    };

    // ---- frobenius_an -------------------------------------------------

    add("frobenius.flat_coords", {1, 2, 3}, tol_exact, true,
        {"frobenius_an.flat_coordinates", "frobenius_an.build_superpotential"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            auto v = flat_coordinates(ctx.point);
            const auto& t = ctx.point.t;
            std::vector<BigComplex> expect = t;
            if (ctx.fp.n == 3) expect[0] = t[0] - t[2] * t[2] / 8;
            Worst w(prec);
            for (std::size_t a = 0; a < v.size(); ++a)
                w.pair(v[a], expect[a], BigReal(1L, prec));
            return w.result();
        });

    add("frobenius.H_consistency", all_n(), tol_oracle, true,
        {"frobenius_an.compute_H", "frobenius_an.build_point", "frobenius_an.sample_admissible"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            const auto& fp = ctx.fp;
            Worst w(prec);
            for (int i = 0; i < fp.n; ++i) {
                TermAccumulator def(prec);
                for (int j = 0; j < fp.n; ++j) {
                    if (j == i) continue;
                    BigComplex g = fp.gamma(i, j);
                    def.add(fp.udiff(i, j) * g * g / 2);
                }
                TermSum ds = def.done();
                w.pair(fp.H[static_cast<std::size_t>(i)], ds.value, ds.termscale);
            }
            return w.result();
        });

    add("frobenius.darboux_egoroff", all_n(), tol_exact, true,
        {"frobenius_an.lame_partial", "frobenius_an.rotation_partial"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            const auto& fp = ctx.fp;
            Worst w(prec);
            for (int i = 0; i < fp.n; ++i) {
                // d_i h_i = -sum_k gamma_ik h_k
                TermAccumulator rhs(prec);
                for (int k = 0; k < fp.n; ++k) {
                    if (k == i) continue;
                    rhs.add(-fp.gamma(i, k) * fp.h[static_cast<std::size_t>(k)]);
                }
                TermSum r = rhs.done();
                w.pair(lame_partial(fp, i, i), r.value,
                       r.termscale + abs(lame_partial(fp, i, i)));
                for (int k = 0; k < fp.n; ++k) {
                    if (k == i) continue;
                    // d_k h_i = gamma_ik h_k
                    w.pair(lame_partial(fp, i, k), fp.gamma(i, k) * fp.h[static_cast<std::size_t>(k)],
                           BigReal(0L, prec));
                }
            }
            for (int i = 0; i < fp.n; ++i)
                for (int j = 0; j < fp.n; ++j) {
                    if (i == j) continue;
                    for (int k = 0; k < fp.n; ++k) {
                        if (k == i || k == j) continue;
                        w.pair(rotation_partial(fp, i, j, k), fp.gamma(i, k) * fp.gamma(k, j),
                               BigReal(0L, prec));
                    }
                    // d_i gamma_ij = (sum_k (u_j - u_k) gamma_ik gamma_kj - gamma_ij) / u_ij
                    TermAccumulator acc(prec);
                    for (int k = 0; k < fp.n; ++k) {
                        if (k == i || k == j) continue;
                        acc.add(fp.udiff(j, k) * fp.gamma(i, k) * fp.gamma(k, j) / fp.udiff(i, j));
                    }
                    acc.add(-fp.gamma(i, j) / fp.udiff(i, j));
                    TermSum r = acc.done();
                    w.pair(rotation_partial(fp, i, j, i), r.value,
                           r.termscale + abs(rotation_partial(fp, i, j, i)));
                }
            return w.result();
        });

    add("frobenius.e_invariance", all_n(), tol_exact, true,
        {"frobenius_an.lame_partial", "frobenius_an.rotation_partial"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            const auto& fp = ctx.fp;
            Worst w(prec);
            for (int i = 0; i < fp.n; ++i) {
                TermAccumulator acc(prec);
                for (int k = 0; k < fp.n; ++k) acc.add(lame_partial(fp, i, k));
                w.termsum(acc.done());
            }
            for (int i = 0; i < fp.n; ++i)
                for (int j = i + 1; j < fp.n; ++j) {
                    TermAccumulator acc(prec);
                    for (int k = 0; k < fp.n; ++k) acc.add(rotation_partial(fp, i, j, k));
                    w.termsum(acc.done());
                }
            return w.result();
        });

    add("frobenius.quasi_homogeneity", all_n(), tol_exact, true,
        {"frobenius_an.build_point", "frobenius_an.build_superpotential"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            const auto& fp = ctx.fp;
            const int n = fp.n;
            SplitMix64 rng = check_rng(ctx, "frobenius.quasi_homogeneity");
            // |c| >= 1 keeps the scaled point clear of the caustic threshold.
            double theta = rng.next_unit() * 6.283185307179586;
            double r = 1.0 + 0.4 * rng.next_unit();
            BigComplex c(r * std::cos(theta), r * std::sin(theta), prec);

            ParamPoint scaled;
            scaled.n = n;
            for (int a = 1; a <= n; ++a)
                scaled.t.push_back(pow_i(c, n + 2 - a) * ctx.point.t[static_cast<std::size_t>(a - 1)]);
            FrobeniusPoint sp = build_point(scaled);

            Worst w(prec);
            for (int i = 0; i < n; ++i) {
                // locate the scaled image of z_i among sp's (sorted) roots
                BigComplex zi = c * fp.z[static_cast<std::size_t>(i)];
                int best = 0;
                BigReal bd = abs(sp.z[0] - zi);
                for (int j = 1; j < n; ++j) {
                    BigReal dj = abs(sp.z[static_cast<std::size_t>(j)] - zi);
                    if (dj < bd) {
                        bd = dj;
                        best = j;
                    }
                }
                w.pair(sp.z[static_cast<std::size_t>(best)], zi, BigReal(0L, prec));
                w.pair(sp.u[static_cast<std::size_t>(best)],
                       pow_i(c, n + 1) * fp.u[static_cast<std::size_t>(i)], BigReal(0L, prec));
                w.pair(sp.hsq[static_cast<std::size_t>(best)],
                       pow_i(c, 1 - n) * fp.hsq[static_cast<std::size_t>(i)], BigReal(0L, prec));
                for (int k = 3; k <= fp.c_max(); ++k)
                    w.pair(sp.C(best, k), pow_i(c, 2 - k) * fp.C(i, k), BigReal(1L, prec));
            }
            return w.result();
        });

    add("frobenius.invert_roundtrip", all_n(), tol_exact, true,
        {"frobenius_an.invert_u_to_t"}, [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            ParamPoint back = invert_u_to_t(ctx.fp.n, ctx.fp.u, ctx.point);
            Worst w(prec);
            for (std::size_t a = 0; a < back.t.size(); ++a)
                w.pair(back.t[a], ctx.point.t[a], BigReal(1L, prec));
            return w.result();
        });

    add("oracle.lame_offdiag", n_from(2), tol_fd, true,
        {"verify_suite.derivative_oracle", "frobenius_an.lame_partial",
         "frobenius_an.invert_u_to_t"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            SplitMix64 rng = check_rng(ctx, "oracle.lame_offdiag");
            const int n = ctx.fp.n;
            int i = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            int k = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
            if (k >= i) ++k;
            BigComplex fd = derivative_oracle(ctx.point, DerivKind::lame, i, -1, k);
            BigComplex closed = lame_partial(ctx.fp, i, k);
            Worst w(prec);
            w.pair(fd, closed, BigReal(0L, prec));
            return w.result();
        });

    add("oracle.lame_diag", all_n(), tol_fd, true,
        {"verify_suite.derivative_oracle", "frobenius_an.lame_partial"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            SplitMix64 rng = check_rng(ctx, "oracle.lame_diag");
            const int n = ctx.fp.n;
            int i = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            BigComplex fd = derivative_oracle(ctx.point, DerivKind::lame, i, -1, i);
            BigComplex closed = lame_partial(ctx.fp, i, i);
            Worst w(prec);
            // the diagonal partial can vanish (n=1); floor the scale with |h_i|
            w.pair(fd, closed, abs(ctx.fp.h[static_cast<std::size_t>(i)]));
            return w.result();
        });

    add("oracle.rotation", n_from(2), tol_fd, true,
        {"verify_suite.derivative_oracle", "frobenius_an.rotation_partial"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            SplitMix64 rng = check_rng(ctx, "oracle.rotation");
            const int n = ctx.fp.n;
            int i = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
            if (j >= i) ++j;
            int k = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            BigComplex fd = derivative_oracle(ctx.point, DerivKind::rotation, i, j, k);
            BigComplex closed = rotation_partial(ctx.fp, i, j, k);
            Worst w(prec);
            w.pair(fd, closed, BigReal(0L, prec));
            return w.result();
        });

    // ---- residue_engine ------------------------------------------------

    add("appB.R1", all_n(), tol_oracle, true, {"residue_engine.closed_R1", "residue_engine.residue_at"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int p = 2; p <= 6; ++p) {
                    TermSum c = closed_R1_terms(ctx.fp, i, p);
                    w.pair(c.value, oracle_R1(ctx.fp, i, p), c.termscale);
                }
            return w.result();
        });
    add("appB.R2", all_n(), tol_oracle, true, {"residue_engine.closed_R2", "residue_engine.residue_at"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int p = 2; p <= 6; ++p) {
                    TermSum c = closed_R2_terms(ctx.fp, i, p);
                    w.pair(c.value, oracle_R2(ctx.fp, i, p), c.termscale);
                }
            return w.result();
        });
    add("appB.R3", all_n(), tol_oracle, true, {"residue_engine.closed_R3", "residue_engine.residue_at"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int p = 4; p <= 8; ++p) {
                    TermSum c = closed_R3_terms(ctx.fp, i, p);
                    w.pair(c.value, oracle_R3(ctx.fp, i, p), c.termscale);
                }
            return w.result();
        });
    add("appB.R4", all_n(), tol_oracle, true, {"residue_engine.closed_R4", "residue_engine.residue_at"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (auto [p, q] : kR4Table) {
                    TermSum c = closed_R4_terms(ctx.fp, i, p, q);
                    w.pair(c.value, oracle_R4(ctx.fp, i, p, q), c.termscale);
                }
            return w.result();
        });
    add("appB.R5", n_from(2), tol_oracle, true,
        {"residue_engine.closed_R5", "residue_engine.residue_at"}, [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int j = 0; j < ctx.fp.n; ++j) {
                    if (i == j) continue;
                    for (auto [p, q] : kR5Table) {
                        TermSum c = closed_R5_terms(ctx.fp, i, j, p, q);
                        w.pair(c.value, oracle_R5(ctx.fp, i, j, p, q), c.termscale);
                    }
                }
            return w.result();
        });
    add("appB.R6", n_from(2), tol_oracle, true,
        {"residue_engine.closed_R6", "residue_engine.residue_at"}, [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int k = 0; k < ctx.fp.n; ++k) {
                    if (i == k) continue;
                    for (auto [p, q] : kR6Table) {
                        TermSum c = closed_R6_terms(ctx.fp, i, k, p, q);
                        w.pair(c.value, oracle_R6(ctx.fp, i, k, p, q), c.termscale);
                    }
                }
            return w.result();
        });

    add("appB.global_residue", all_n(), tol_oracle, true, {"residue_engine.residue_at"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            const auto& fp = ctx.fp;
            SplitMix64 rng = check_rng(ctx, "appB.global_residue");
            // Extra double pole away from every critical point.
            BigComplex extra(prec);
            for (int attempt = 0; attempt < 64; ++attempt) {
                extra = BigComplex(2.0 * rng.next_symmetric(), 2.0 * rng.next_symmetric(), prec);
                bool clear = true;
                for (const auto& z : fp.z)
                    if (abs(extra - z) < BigReal(0.3, prec)) clear = false;
                if (clear) break;
            }
            const int total_order = fp.n + 2;
            std::vector<BigComplex> num_coeffs;
            for (int dgr = 0; dgr <= total_order - 2; ++dgr)
                num_coeffs.emplace_back(rng.next_symmetric(), rng.next_symmetric(), prec);
            RationalAtPoles f;
            f.numerator = Poly(std::move(num_coeffs));
            f.pole_factors = {{extra, 2}};
            f.include_lambda_prime_in_denominator = true;
            f.lambda_prime = fp.lambda_derivs[1];

            BigComplex sum(prec);
            BigReal scale(0L, prec);
            for (const auto& z : fp.z) {
                BigReal s(0L, prec);
                sum += residue_at(f, z, 1, 2, &s);
                scale += s;
            }
            BigReal s(0L, prec);
            sum += residue_at(f, extra, 2, 2, &s);
            scale += s;
            Worst w(prec);
            w.value_vs_scale(abs(sum), scale);
            return w.result();
        });

    {
        CheckSpec spec;
        spec.check_id = "appB.truncation_robustness";
        spec.n_values = all_n();
        spec.trials = 20;
        spec.tolerance = std::pow(2.0, static_cast<double>(-(bits - 16)));
        spec.gating = true;
        spec.covers = {"residue_engine.residue_at"};
        spec.run = [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            const auto& fp = ctx.fp;
            SplitMix64 rng = check_rng(ctx, "appB.truncation_robustness");
            int i = static_cast<int>(rng.next() % static_cast<std::uint64_t>(fp.n));
            Worst w(prec);
            for (int p : {2, 4, 6}) {
                RationalAtPoles f;
                f.numerator = fp.lambda_derivs[2] * ((p % 2) ? -1L : 1L);
                f.pole_factors = {{fp.z[static_cast<std::size_t>(i)], p}};
                f.include_lambda_prime_in_denominator = true;
                f.lambda_prime = fp.lambda_derivs[1];
                BigReal s2(0L, prec), s4(0L, prec);
                BigComplex g2v = residue_at(f, fp.z[static_cast<std::size_t>(i)], p + 1, 2, &s2);
                BigComplex g4v = residue_at(f, fp.z[static_cast<std::size_t>(i)], p + 1, 4, &s4);
                w.pair(g2v, g4v, max(s2, s4));
            }
            return w.result();
        };
        reg.push_back(std::move(spec));
    }

    add("sums.single_pole", all_n(), tol_oracle, true, {"residue_engine.sum_vs_residue"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i) {
                for (int p = 2; p <= 6; ++p) {
                    auto a = sum_vs_residue(ctx.fp, SumKind::inv_z, i, -1, p, 0);
                    w.value_vs_scale(abs(a.direct_sum - a.residue_value),
                                     max(max(abs(a.direct_sum), abs(a.residue_value)), a.scale));
                    auto b = sum_vs_residue(ctx.fp, SumKind::hsq_inv_z, i, -1, p, 0);
                    w.value_vs_scale(abs(b.direct_sum - b.residue_value),
                                     max(max(abs(b.direct_sum), abs(b.residue_value)), b.scale));
                    for (int q : {3, 4}) {
                        auto c = sum_vs_residue(ctx.fp, SumKind::C_inv_z, i, -1, p, q);
                        w.value_vs_scale(abs(c.direct_sum - c.residue_value),
                                         max(max(abs(c.direct_sum), abs(c.residue_value)), c.scale));
                    }
                }
                for (int p = 4; p <= 8; ++p) {
                    auto r = sum_vs_residue(ctx.fp, SumKind::hsq_u_inv_z, i, -1, p, 0);
                    w.value_vs_scale(abs(r.direct_sum - r.residue_value),
                                     max(max(abs(r.direct_sum), abs(r.residue_value)), r.scale));
                }
            }
            return w.result();
        });

    add("sums.two_pole", n_from(2), tol_oracle, true, {"residue_engine.sum_vs_residue"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int j = 0; j < ctx.fp.n; ++j) {
                    if (i == j) continue;
                    for (auto [p, q] : kR5Table) {
                        auto r = sum_vs_residue(ctx.fp, SumKind::two_pole_inv, i, j, p, q);
                        w.value_vs_scale(abs(r.direct_sum - r.residue_value),
                                         max(max(abs(r.direct_sum), abs(r.residue_value)), r.scale));
                    }
                    {
                        auto r = sum_vs_residue(ctx.fp, SumKind::two_pole_C3, i, j, 2, 3);
                        w.value_vs_scale(abs(r.direct_sum - r.residue_value),
                                         max(max(abs(r.direct_sum), abs(r.residue_value)), r.scale));
                    }
                    for (auto [p, q] : kR6Table) {
                        auto r = sum_vs_residue(ctx.fp, SumKind::u_weighted_two_pole, i, j, p, q);
                        w.value_vs_scale(abs(r.direct_sum - r.residue_value),
                                         max(max(abs(r.direct_sum), abs(r.residue_value)), r.scale));
                    }
                }
            return w.result();
        });

    add("identities.l2", n_from(2), tol_conv, true,
        {"residue_engine.power_sums_and_symmetric"}, [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            Worst w(prec);
            SplitMix64 rng = check_rng(ctx, "identities.l2");
            const int n = ctx.fp.n;
            int i = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            int k = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
            if (k >= i) ++k;
            PowerSymmetric ps = power_sums_and_symmetric(ctx.fp, i, k, 6);
            for (int p = 2; p <= 6; ++p)
                w.pair(ps.elementary_newton[static_cast<std::size_t>(p)],
                       ps.elementary_direct[static_cast<std::size_t>(p)],
                       ps.elementary_newton_scale[static_cast<std::size_t>(p)]);
            return w.result();
        });

    add("identities.zh_conversions", n_from(2), tol_conv, true,
        {"residue_engine.power_sums_and_symmetric"}, [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            Worst w(prec);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int k = 0; k < ctx.fp.n; ++k) {
                    if (i == k) continue;
                    PowerSymmetric ps = power_sums_and_symmetric(ctx.fp, i, k, 2);
                    w.pair(ps.zh13_lhs, ps.zh13_rhs, ps.zh13_scale);
                    w.pair(ps.zh14_lhs, ps.zh14_rhs, ps.zh14_scale);
                    w.pair(ps.zh12_lhs, ps.zh12_rhs, ps.zh12_scale);
                }
            return w.result();
        });

    // ---- g2_function -----------------------------------------------------

    for (int which = 1; which <= 4; ++which) {
        add("lemma31.iden" + std::to_string(which), all_n(), tol_oracle, true,
            {"g2_function.lemma31_check"}, [which](const CheckContext& ctx) {
                const long prec = ctx.precision_bits;
                Worst w(prec);
                for (int i = 0; i < ctx.fp.n; ++i) {
                    LemmaPair pr = lemma31_check(ctx.fp, i, which);
                    w.pair(pr.lhs, pr.rhs, BigReal(1L, prec));
                }
                return w.result();
            });
    }

    add("g2.T_vanish", n_from(2), tol_vanish, true, {"g2_function.t_coefficient"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int k = 0; k < ctx.fp.n; ++k) {
                    if (i == k) continue;
                    w.termsum(t_coefficient(ctx.fp, i, k));
                }
            return w.result();
        });

    add("g2.Gi_vanish", all_n(), tol_vanish, true, {"g2_function.g2_Gi"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i) w.termsum(g2_Gi(ctx.fp, ctx.jet, i));
            return w.result();
        });

    add("g2.Gij_vanish", n_from(2), tol_vanish, true,
        {"g2_function.g2_Gij", "g2_function.g2_Gij_closed"}, [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int j = 0; j < ctx.fp.n; ++j) {
                    if (i == j) continue;
                    w.termsum(g2_Gij(ctx.fp, i, j));
                    w.termsum(g2_Gij_closed(ctx.fp, i, j));
                }
            return w.result();
        });

    add("g2.Gij_consistency", n_from(2), tol_oracle, true,
        {"g2_function.g2_Gij", "g2_function.g2_Gij_closed"}, [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int j = 0; j < ctx.fp.n; ++j) {
                    if (i == j) continue;
                    TermSum a = g2_Gij(ctx.fp, i, j);
                    TermSum b = g2_Gij_closed(ctx.fp, i, j);
                    w.pair(a.value, b.value, a.termscale + b.termscale);
                }
            return w.result();
        });

    add("g2.P_skew", n_from(2), tol_vanish, true, {"g2_function.g2_Pij"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            Worst w(prec);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int j = i + 1; j < ctx.fp.n; ++j) {
                    TermSum a = g2_Pij(ctx.fp, i, j);
                    TermSum b = g2_Pij(ctx.fp, j, i);
                    w.value_vs_scale(abs(a.value + b.value), a.termscale + b.termscale);
                }
            return w.result();
        });

    add("g2.Pii_consistency", n_from(2), tol_oracle, true,
        {"g2_function.g2_Pij"}, [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i) {
                TermSum pii = g2_Pij(ctx.fp, i, i);
                TermSum closed = half_Pii_closed(ctx.fp, i);
                w.pair(pii.value / 2, closed.value, pii.termscale / 2 + closed.termscale);
            }
            return w.result();
        });

    add("g2.endpoint", n_from(2), tol_vanish, true, {"g2_function.g2_Qi", "g2_function.g2_Pij"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i) {
                TermSum pii = g2_Pij(ctx.fp, i, i);
                TermSum qi = g2_Qi(ctx.fp, i);
                w.value_vs_scale(abs(pii.value / 2 + qi.value), pii.termscale / 2 + qi.termscale);
            }
            return w.result();
        });

    add("g2.total_vanish", all_n(), tol_vanish, true, {"g2_function.g2_total"},
        [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            w.termsum(g2_total(ctx.fp, ctx.jet));
            return w.result();
        });

    add("g2.jet_rescale", all_n(), tol_exact, true, {"g2_function.g2_Gi"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            SplitMix64 rng = check_rng(ctx, "g2.jet_rescale");
            BigComplex c(0.5 + rng.next_unit(), rng.next_symmetric(), prec);
            Jet2 scaled = ctx.jet;
            for (auto& v : scaled.ux) v *= c;
            Worst w(prec);
            for (int i = 0; i < ctx.fp.n; ++i) {
                TermSum a = g2_Gi(ctx.fp, ctx.jet, i);
                TermSum b = g2_Gi(ctx.fp, scaled, i);
                w.value_vs_scale(abs(a.value - b.value), a.termscale + b.termscale);
            }
            return w.result();
        });

    add("g2.branch_flip", all_n(), tol_exact, true,
        {"g2_function.g2_Gi", "g2_function.g2_Pij", "g2_function.g2_Qi", "frobenius_an.build_point"},
        [](const CheckContext& ctx) {
            const long prec = ctx.precision_bits;
            SplitMix64 rng = check_rng(ctx, "g2.branch_flip");
            const int n = ctx.fp.n;
            int m = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            FrobeniusPoint flipped = flip_branch(ctx.fp, m);
            Worst w(prec);
            for (int i = 0; i < n; ++i) {
                TermSum a = g2_Gi(ctx.fp, ctx.jet, i);
                TermSum b = g2_Gi(flipped, ctx.jet, i);
                w.value_vs_scale(abs(a.value - b.value), a.termscale + b.termscale);
                TermSum qa = g2_Qi(ctx.fp, i);
                TermSum qb = g2_Qi(flipped, i);
                w.value_vs_scale(abs(qa.value - qb.value), qa.termscale + qb.termscale);
                // H must be branch-blind outright
                w.pair(ctx.fp.H[static_cast<std::size_t>(i)], flipped.H[static_cast<std::size_t>(i)],
                       BigReal(0L, prec));
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    TermSum a = g2_Pij(ctx.fp, i, j);
                    TermSum b = g2_Pij(flipped, i, j);
                    w.value_vs_scale(abs(a.value - b.value), a.termscale + b.termscale);
                }
            return w.result();
        });

    add("g2.decomposition_antisym", n_from(2), tol_exact, true,
        {"g2_function.pij_decomposition_check"}, [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int j = i + 1; j < ctx.fp.n; ++j) {
                    TermSum a = pij_decomposition_check(ctx.fp, i, j).antisymmetrized;
                    TermSum b = pij_decomposition_check(ctx.fp, j, i).antisymmetrized;
                    w.value_vs_scale(abs(a.value + b.value), a.termscale + b.termscale);
                }
            return w.result();
        });

    add("g2.pij_decomposition", n_from(2), tol_for(bits, 1e-25), false,
        {"g2_function.pij_decomposition_check"}, [](const CheckContext& ctx) {
            Worst w(ctx.precision_bits);
            for (int i = 0; i < ctx.fp.n; ++i)
                for (int j = 0; j < ctx.fp.n; ++j) {
                    if (i == j) continue;
                    DecompositionPair dp = pij_decomposition_check(ctx.fp, i, j);
                    w.value_vs_scale(abs(dp.defining.value - dp.antisymmetrized.value),
                                     dp.defining.termscale + dp.antisymmetrized.termscale);
                }
            return w.result();
        });

    return reg;
}

VerificationReport run_suite(const std::vector<CheckSpec>& registry, const SuiteConfig& cfg) {
    if (cfg.precision_bits < 128)
        throw DomainError("run_suite: precision_bits must be >= 128");
    const auto t0 = std::chrono::steady_clock::now();
    const long prec = cfg.precision_bits;

    struct Unit {
        const CheckSpec* spec;
        int n;
        int trial;
    };
    std::vector<Unit> units;
    std::map<int, int> trials_per_n;
    for (const auto& spec : registry) {
        int trials = cfg.trials_override > 0 ? cfg.trials_override : spec.trials;
        for (int n : spec.n_values) {
            if (cfg.n_filter) {
                const auto& f = *cfg.n_filter;
                if (std::find(f.begin(), f.end(), n) == f.end()) continue;
            }
            auto& cur = trials_per_n[n];
            cur = std::max(cur, trials);
            for (int trial = 0; trial < trials; ++trial) units.push_back(Unit{&spec, n, trial});
        }
    }

    // Shared immutable sample pool: one admissible point and one jet per
    // (n, trial), reused by every check so the whole sweep sees the same data.
    std::map<int, std::vector<ParamPoint>> points;
    std::map<int, std::vector<FrobeniusPoint>> fps;
    std::map<int, std::vector<Jet2>> jets;
    for (const auto& [n, trials] : trials_per_n) {
        points[n] = sample_admissible(n, mix_seed(cfg.seed, 0x706F696E74ULL + static_cast<std::uint64_t>(n)),
                                      trials, prec);
        auto& fv = fps[n];
        auto& jv = jets[n];
        fv.reserve(points[n].size());
        for (int trial = 0; trial < trials; ++trial) {
            fv.push_back(build_point(points[n][static_cast<std::size_t>(trial)]));
            jv.push_back(sample_jet(
                n, mix_seed(cfg.seed, 0x6A6574ULL + 1000ULL * static_cast<std::uint64_t>(n) +
                                          static_cast<std::uint64_t>(trial)),
                prec));
        }
    }

    std::vector<ReportEntry> entries(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= units.size()) return;
            const Unit& u = units[idx];
            const auto& point = points[u.n][static_cast<std::size_t>(u.trial)];
            const auto& fp = fps[u.n][static_cast<std::size_t>(u.trial)];
            const auto& jet = jets[u.n][static_cast<std::size_t>(u.trial)];
            CheckContext ctx{point, fp, jet, cfg.seed, u.trial, prec};
            CheckResult res = u.spec->run(ctx);

            double tolerance = (cfg.tolerance_override && u.spec->gating)
                                   ? *cfg.tolerance_override
                                   : u.spec->tolerance;
            ReportEntry e;
            e.check_id = u.spec->check_id;
            e.n = u.n;
            e.seed = cfg.seed;
            e.trial = u.trial;
            e.residual = res.residual.to_decimal(40);
            e.termscale = res.termscale.to_decimal(40);
            e.rel_residual = res.rel.to_decimal(40);
            e.tolerance = tolerance;
            e.gating = u.spec->gating;
            e.passed = res.rel <= BigReal(tolerance, prec);
            if (!e.passed && e.gating) {
                e.point_json = param_point_to_json(point).dump();
                e.jet_json = jet_to_json(jet).dump();
            }
            entries[idx] = std::move(e);
        }
    };

    const int nthreads = std::max(1, cfg.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    VerificationReport report;
    report.entries = std::move(entries);
    report.seed = cfg.seed;
    report.precision_bits = prec;
    report.summary.total = static_cast<int>(report.entries.size());
    for (const auto& e : report.entries) {
        if (e.passed)
            ++report.summary.passed;
        else if (e.gating)
            ++report.summary.failed;
        else
            ++report.summary.informational_failed;
    }
    report.summary.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace g2an
