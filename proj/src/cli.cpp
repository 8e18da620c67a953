#include "polybound/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "polybound/parse.hpp"
#include "polybound/report.hpp"

namespace polybound {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Point parse_point_csv(const std::string& csv) {
    Point p;
    for (const std::string& piece : split(csv, ',')) {
        std::string t = trimmed(piece);
        if (t.empty()) throw SyntaxError(1, "empty point coordinate in '" + csv + "'");
        p.push_back(parse_rat(t));
    }
    return p;
}

std::vector<std::string> parse_vars_csv(const std::string& csv) {
    std::vector<std::string> names;
    for (const std::string& piece : split(csv, ',')) {
        std::string t = trimmed(piece);
        if (t.empty()) throw SyntaxError(1, "empty variable name in '" + csv + "'");
        names.push_back(t);
    }
    return names;
}

/// A polynomial over the fixed registry {w, t} reinterpreted as an element of
/// Q(w)[t]: w becomes the infinitesimal.
UPoly upoly_from_wt(const QPoly& q) {
    std::vector<FElem> coeffs(static_cast<std::size_t>(q.degree_in(1)) + 1, FElem(0));
    for (const auto& [m, c] : q.terms())
        coeffs[static_cast<std::size_t>(m.e[1])] += FElem(c) * FElem::pi_pow(m.e[0]);
    return UPoly(std::move(coeffs));
}

struct Flags {
    std::string expr;
    std::string point;
    std::string vars;
    std::string file;
    std::uint64_t seed = 0;
    int retries = 3;
    int bound = 10;
    long budget = 0;
    bool json = false;
};

DecideConfig to_config(const Flags& f) {
    DecideConfig cfg;
    cfg.seed = f.seed;
    cfg.max_retries = f.retries;
    cfg.coordinate_bound = f.bound;
    if (f.budget > 0) cfg.budget.max_pairs = f.budget;
    if (!f.point.empty()) cfg.explicit_point = parse_point_csv(f.point);
    return cfg;
}

std::optional<std::vector<std::string>> to_vars(const Flags& f) {
    if (f.vars.empty()) return std::nullopt;
    return parse_vars_csv(f.vars);
}

void fill_decision(Report& r, const Decision& d) {
    r.verdict = d.verdict;
    if (d.constant_input) return;
    r.point = d.point;
    r.t_good = d.tangency.t_good;
    r.theta = d.tangency.theta;
    r.phi = d.tangency.phi;
    r.sturm = d.sturm;
    r.retries = d.retries_used;
    r.timings = d.timings;
    r.stats = d.stats;
}

} // namespace

int emit_table(std::istream& batch, std::ostream& out, std::ostream& err,
               const DecideConfig& base) {
    std::vector<std::array<std::string, 6>> rows;
    rows.push_back({"input", "deg phi", "v_F", "v_R", "output", "time"});
    std::string line;
    int lineno = 0;
    while (std::getline(batch, line)) {
        ++lineno;
        std::string body = trimmed(line);
        if (body.empty() || body[0] == '#') continue;
        std::vector<std::string> parts = split(body, '|');
        std::string expr = trimmed(parts[0]);
        std::array<std::string, 6> row{expr, "-", "-", "-", "", "-"};
        try {
            DecideConfig cfg = base;
            std::optional<std::vector<std::string>> vars;
            for (std::size_t i = 1; i < parts.size(); ++i) {
                std::string opt = trimmed(parts[i]);
                std::size_t eq = opt.find('=');
                std::string key = eq == std::string::npos ? opt : trimmed(opt.substr(0, eq));
                std::string val = eq == std::string::npos ? "" : trimmed(opt.substr(eq + 1));
                if (key == "point")
                    cfg.explicit_point = parse_point_csv(val);
                else if (key == "vars")
                    vars = parse_vars_csv(val);
                else
                    throw SyntaxError(1, "unknown batch option '" + key + "'");
            }
            QPoly p = parse_poly(expr, vars);
            auto t0 = std::chrono::steady_clock::now();
            Decision d = decide_lower_bounded(p, cfg);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                              .count();
            std::ostringstream ts;
            ts << std::fixed << std::setprecision(2) << secs << " s";
            if (!d.constant_input) {
                row[1] = std::to_string(d.tangency.phi.degree());
                row[2] = std::to_string(d.sturm.v_F);
                row[3] = std::to_string(d.sturm.v_R);
            }
            row[4] = d.verdict ? "true" : "false";
            row[5] = ts.str();
        } catch (const Inconclusive& e) {
            row[4] = "inconclusive";
            err << "line " << lineno << ": " << e.what() << "\n";
        } catch (const Error& e) {
            row[4] = "ERROR";
            err << "line " << lineno << ": " << e.what() << "\n";
        }
        rows.push_back(std::move(row));
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : rows)
        for (std::size_t i = 0; i < 6; ++i) width[i] = std::max(width[i], row[i].size());
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < 6; ++i) {
            if (i) out << " | ";
            out << row[i] << std::string(width[i] - row[i].size(), ' ');
        }
        out << "\n";
    }
    return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact decisions: is a rational polynomial bounded below / non-negative / "
                 "convex over the reals"};
    app.name("polybound");
    app.require_subcommand(1);
    Flags f;

    auto add_common = [&](CLI::App* sub, bool with_decide_flags) {
        sub->add_option("expr", f.expr, "polynomial expression, e.g. \"(x1*x2-1)^2 + x2^2\"")
            ->required();
        sub->add_flag("--json", f.json, "emit one JSON report object on stdout");
        if (!with_decide_flags) return;
        sub->add_option("--point", f.point, "explicit center a1,a2,... (disables resampling)");
        sub->add_option("--vars", f.vars,
                        "declared variable order x1,x2,... (the last one is distinguished)");
        sub->add_option("--seed", f.seed, "sampling seed")->envname("POLYBOUND_SEED");
        sub->add_option("--retries", f.retries, "fresh points tried after the first failure");
        sub->add_option("--bound", f.bound, "sampled coordinates lie in [-bound, bound]");
        sub->add_option("--budget", f.budget, "pair budget for the basis kernel");
    };

    CLI::App* lbound = app.add_subcommand("lbound", "decide boundedness from below");
    add_common(lbound, true);
    CLI::App* nonneg = app.add_subcommand("nonneg", "decide global non-negativity");
    add_common(nonneg, true);
    CLI::App* convex = app.add_subcommand("convex", "decide convexity over the reals");
    add_common(convex, true);
    CLI::App* tangency =
        app.add_subcommand("tangency", "emit the tangency-value data (theta, phi, t_good)");
    add_common(tangency, true);
    CLI::App* sturm = app.add_subcommand(
        "sturm", "sign lists and variation counts for a square-free polynomial in t and w");
    add_common(sturm, false);
    CLI::App* table = app.add_subcommand("table", "run lbound over a batch file");
    table->add_option("file", f.file, "one expression per line: expr [| point=...] [| vars=...]")
        ->required();
    table->add_option("--seed", f.seed, "sampling seed")->envname("POLYBOUND_SEED");
    table->add_option("--retries", f.retries, "fresh points tried after the first failure");
    table->add_option("--bound", f.bound, "sampled coordinates lie in [-bound, bound]");
    table->add_option("--budget", f.budget, "pair budget for the basis kernel");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 3;
    }

    Report r;
    r.command = app.get_subcommands().front()->get_name();
    auto finish = [&](int code) {
        out << (f.json ? report_json(r) : report_text(r));
        return code;
    };
    auto fail = [&](int code, const std::string& what) {
        err << what << "\n";
        r.error = what;
        if (f.json) out << report_json(r);
        return code;
    };

    try {
        if (app.got_subcommand(table)) {
            std::ifstream in(f.file);
            if (!in) return fail(3, "cannot open batch file: " + f.file);
            return emit_table(in, out, err, to_config(f));
        }
        if (app.got_subcommand(sturm)) {
            QPoly q = parse_poly(f.expr, std::vector<std::string>{"w", "t"});
            UPoly phi = upoly_from_wt(q);
            if (phi.is_zero()) throw ZeroPolynomial("sturm input");
            r.input = phi.str();
            SturmSeq seq = sturm_sequence(phi);
            r.sequence = seq.polys;
            r.sturm = v_count(phi);
            return finish(0);
        }

        DecideConfig cfg = to_config(f);
        QPoly p = parse_poly(f.expr, to_vars(f));
        r.input = p.str();
        r.vars = *p.registry();

        if (app.got_subcommand(tangency)) {
            Point a = cfg.explicit_point ? *cfg.explicit_point
                                         : sample_point(p.nvars(), cfg, 0);
            GroebnerStats stats;
            TangencyTimings tt;
            TangencyReport rep = test_condition_C(p, a, cfg.budget, &stats, &tt);
            r.point = a;
            r.t_good = rep.t_good;
            r.theta = rep.theta;
            r.phi = rep.phi;
            r.timings = PhaseTimings{tt.theta_ms, tt.phi_ms, 0.0};
            r.stats = stats;
            return finish(rep.t_good ? 0 : 1);
        }
        if (app.got_subcommand(convex)) {
            ConvexityDecision cd = decide_convex(p, cfg);
            r.verdict = cd.verdict;
            r.first_failure = cd.first_failure;
            for (const MinorDecision& md : cd.per_minor) {
                MinorSummary s;
                s.index_set = md.index_set;
                s.verdict = md.verdict;
                s.constant_sign = md.constant_sign;
                if (md.decision && !md.decision->constant_input) {
                    s.v = md.decision->sturm.v;
                    s.point = md.decision->point;
                }
                r.minors.push_back(std::move(s));
            }
            return finish(cd.verdict ? 0 : 1);
        }
        Decision d = app.got_subcommand(lbound) ? decide_lower_bounded(p, cfg)
                                                : decide_nonnegative(p, cfg);
        fill_decision(r, d);
        return finish(d.verdict ? 0 : 1);
    } catch (const Inconclusive& e) {
        return fail(2, e.what());
    } catch (const ResourceLimit& e) {
        return fail(4, e.what());
    } catch (const SyntaxError& e) {
        return fail(3, e.what());
    } catch (const NonPolynomial& e) {
        return fail(3, e.what());
    } catch (const UnknownVariable& e) {
        return fail(3, e.what());
    } catch (const VariableCollision& e) {
        return fail(3, e.what());
    } catch (const DimensionMismatch& e) {
        return fail(3, e.what());
    } catch (const DivisionByZero& e) {
        return fail(3, e.what());
    } catch (const NotSquareFree& e) {
        return fail(3, e.what());
    } catch (const ZeroPolynomial& e) {
        return fail(3, e.what());
    } catch (const MultivariateInput& e) {
        return fail(3, e.what());
    } catch (const ConstantPolynomial& e) {
        return fail(3, e.what());
    } catch (const Error& e) {
        return fail(5, e.what());
    } catch (const std::exception& e) {
        return fail(5, e.what());
    }
}

} // namespace polybound
