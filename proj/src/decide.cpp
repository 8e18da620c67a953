#include "polybound/decide.hpp"

#include <chrono>
#include <utility>

namespace polybound {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long draw_in(std::uint64_t& s, long lo, long hi) {
    return lo + static_cast<long>(splitmix64(s) %
                                  static_cast<std::uint64_t>(hi - lo + 1));
}

// Fraction-free integer determinant (Bareiss with row pivoting).
Int det_int(std::vector<std::vector<Int>> m) {
    std::size_t n = m.size();
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && m[j][k] == 0) ++j;
            if (j == n) return Int(0);
            std::swap(m[k], m[j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = Int((m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev);
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return sign < 0 ? Int(-d) : d;
}

// p composed with the linear map x_i -> sum_j m[i][j] * x_j.
QPoly apply_linear(const QPoly& p, const std::vector<std::vector<long>>& m) {
    const RegistryPtr& reg = p.registry();
    std::size_t n = reg->size();
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < n; ++i) {
        QPoly img(reg);
        for (std::size_t j = 0; j < n; ++j)
            if (m[i][j] != 0)
                img += QPoly::variable(reg, static_cast<int>(j)) *
                       QPoly::constant(reg, Rat(m[i][j]));
        images.push_back(std::move(img));
    }
    QPoly out(reg);
    for (const auto& [mono, c] : p.terms()) {
        QPoly acc = QPoly::constant(reg, c);
        for (std::size_t i = 0; i < n; ++i)
            for (int k = 0; k < mono.e[i]; ++k) acc = acc * images[i];
        out += acc;
    }
    return out;
}

void check_config(const DecideConfig& cfg) {
    if (cfg.coordinate_bound < 1) throw Error("coordinate bound must be positive");
    if (cfg.max_retries < 1) throw Error("retry budget must be positive");
}

} // namespace

Preprocessed preprocess(const QPoly& p, std::uint64_t seed) {
    Preprocessed out{p, false, {}};
    if (p.is_constant()) {
        out.is_constant = true;
        return out;
    }
    std::size_t n = p.registry()->size();
    int last = static_cast<int>(n) - 1;
    if (!p.partial_derivative(last).is_zero()) return out;
    std::uint64_t s = seed ^ 0xa02bdbf7bb3c0a7ULL;
    for (;;) {
        std::vector<std::vector<long>> m(n, std::vector<long>(n));
        std::vector<std::vector<Int>> mi(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = draw_in(s, -3, 3);
                mi[i][j] = static_cast<long>(m[i][j]);
            }
        if (det_int(std::move(mi)) == 0) continue;
        QPoly q = apply_linear(p, m);
        if (q.partial_derivative(last).is_zero()) continue;
        out.p = std::move(q);
        out.change = std::move(m);
        return out;
    }
}

Point sample_point(std::size_t n, const DecideConfig& cfg, int attempt) {
    if (cfg.explicit_point) {
        if (cfg.explicit_point->size() != n) throw DimensionMismatch();
        return *cfg.explicit_point;
    }
    if (cfg.coordinate_bound < 1) throw Error("coordinate bound must be positive");
    std::uint64_t s =
        cfg.seed ^ (0xd1342543de82ef95ULL * (static_cast<std::uint64_t>(attempt) + 1));
    long b = cfg.coordinate_bound;
    for (;;) {
        Point a;
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            long c = draw_in(s, -b, b);
            if (c != 0) all_zero = false;
            a.push_back(Rat(c));
        }
        if (!all_zero) return a;
    }
}

Decision decide_lower_bounded(const QPoly& p, const DecideConfig& cfg) {
    check_config(cfg);
    if (p.is_constant()) {
        Decision d;
        d.constant_input = true;
        d.verdict = true;
        return d;
    }
    Preprocessed pre = preprocess(p, cfg.seed);
    std::size_t n = pre.p.registry()->size();
    int attempts_allowed = cfg.explicit_point ? 1 : cfg.max_retries + 1;
    for (int attempt = 0; attempt < attempts_allowed; ++attempt) {
        Decision d;
        d.point = sample_point(n, cfg, attempt);
        d.retries_used = attempt;
        try {
            TangencyTimings tt;
            d.tangency = test_condition_C(pre.p, d.point, cfg.budget, &d.stats, &tt);
            d.timings.theta_ms = tt.theta_ms;
            d.timings.phi_ms = tt.phi_ms;
        } catch (const ZeroEliminationIdeal&) {
            continue; // non-generic center; try a fresh one
        }
        if (!d.tangency.t_good) continue;
        auto t0 = Clock::now();
        d.sturm = v_count(d.tangency.phi);
        d.timings.sturm_ms = ms_since(t0);
        d.verdict = d.sturm.v == 0;
        return d;
    }
    throw Inconclusive(attempts_allowed);
}

Decision decide_nonnegative(const QPoly& p, const DecideConfig& cfg) {
    check_config(cfg);
    if (p.is_constant()) {
        Decision d;
        d.constant_input = true;
        d.verdict = sign_of(p.constant_value()) >= 0;
        return d;
    }
    if (p.is_homogeneous()) return decide_lower_bounded(p, cfg);
    std::string z = fresh_var_name(*p.registry(),
                                   "x" + std::to_string(p.registry()->size() + 1));
    return decide_lower_bounded(homogenize(p, z), cfg);
}

ConvexityDecision decide_convex(const QPoly& p, const DecideConfig& cfg) {
    check_config(cfg);
    ConvexityDecision out;
    for (auto& entry : principal_minors(hessian(p))) {
        MinorDecision md;
        md.index_set = entry.index_set;
        if (entry.minor.is_constant()) {
            int s = sign_of(entry.minor.constant_value());
            md.constant_sign = s;
            md.verdict = s >= 0;
        } else {
            md.decision = decide_nonnegative(entry.minor, cfg);
            md.verdict = md.decision->verdict;
        }
        bool failed = !md.verdict;
        out.per_minor.push_back(std::move(md));
        if (failed) {
            out.verdict = false;
            out.first_failure = out.per_minor.back().index_set;
            break;
        }
    }
    return out;
}

} // namespace polybound
