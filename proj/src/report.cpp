#include "polybound/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace polybound {

namespace {

using nlohmann::json;

const char* sign_char(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

json signs_json(const std::vector<int>& signs) {
    json a = json::array();
    for (int s : signs) a.push_back(sign_char(s));
    return a;
}

std::string signs_text(const std::vector<int>& signs) {
    std::string s = "[";
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) s += ",";
        s += sign_char(signs[i]);
    }
    return s + "]";
}

json point_json(const Point& a) {
    json arr = json::array();
    for (const Rat& c : a) arr.push_back(to_string(c));
    return arr;
}

std::string point_text(const Point& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += to_string(a[i]);
    }
    return s + ")";
}

json rows_json(const UPoly& f) {
    json outer = json::array();
    for (const auto& row : upoly_rows(f)) outer.push_back(row);
    return outer;
}

std::string index_set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string seconds_text(const PhaseTimings& t) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2)
       << (t.theta_ms + t.phi_ms + t.sturm_ms) / 1000.0 << " s";
    return os.str();
}

} // namespace

std::vector<std::vector<std::string>> upoly_rows(const UPoly& f) {
    std::vector<std::vector<std::string>> out;
    for (const PiPoly& row : cleared_coeffs(f)) {
        std::vector<std::string> inner;
        if (!row.is_zero())
            for (int e = 0; e <= row.degree(); ++e) inner.push_back(to_string(row.coeff(e)));
        out.push_back(std::move(inner));
    }
    return out;
}

std::string report_json(const Report& r) {
    json j;
    j["command"] = r.command;
    j["input"] = r.input;
    j["vars"] = r.vars;
    j["point"] = r.point ? point_json(*r.point) : json(nullptr);
    j["t_good"] = r.t_good ? json(*r.t_good) : json(nullptr);
    j["theta"] = r.theta ? rows_json(*r.theta) : json(nullptr);
    j["phi"] = r.phi ? rows_json(*r.phi) : json(nullptr);
    j["deg_phi"] = r.phi ? json(r.phi->degree()) : json(nullptr);
    j["signs_F"] = r.sturm ? signs_json(r.sturm->signs_at_minus_infty_F) : json(nullptr);
    j["signs_R"] = r.sturm ? signs_json(r.sturm->signs_at_minus_infty) : json(nullptr);
    j["v_F"] = r.sturm ? json(r.sturm->v_F) : json(nullptr);
    j["v_R"] = r.sturm ? json(r.sturm->v_R) : json(nullptr);
    j["v"] = r.sturm ? json(r.sturm->v) : json(nullptr);
    if (r.sequence) {
        json seq = json::array();
        for (const UPoly& s : *r.sequence) seq.push_back(rows_json(s));
        j["sequence"] = seq;
    } else {
        j["sequence"] = nullptr;
    }
    j["verdict"] = r.verdict ? json(*r.verdict) : json(nullptr);
    j["retries"] = r.retries ? json(*r.retries) : json(nullptr);
    if (r.timings) {
        j["timings_ms"] = {{"theta", r.timings->theta_ms},
                           {"phi", r.timings->phi_ms},
                           {"sturm", r.timings->sturm_ms}};
    } else {
        j["timings_ms"] = nullptr;
    }
    if (r.stats) {
        j["stats"] = {{"pairs_processed", r.stats->pairs_processed},
                      {"reductions_to_zero", r.stats->reductions_to_zero},
                      {"basis_additions", r.stats->basis_additions},
                      {"max_pi_degree_seen", r.stats->max_pi_degree_seen}};
    } else {
        j["stats"] = nullptr;
    }
    json minors = json::array();
    for (const MinorSummary& m : r.minors) {
        json e;
        e["index_set"] = m.index_set;
        e["verdict"] = m.verdict;
        e["constant_sign"] = m.constant_sign ? json(*m.constant_sign) : json(nullptr);
        e["v"] = m.v ? json(*m.v) : json(nullptr);
        e["point"] = m.point ? point_json(*m.point) : json(nullptr);
        minors.push_back(e);
    }
    j["minors"] = minors;
    j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
    j["error"] = r.error ? json(*r.error) : json(nullptr);
    return j.dump() + "\n";
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    if (r.error) {
        os << "error: " << *r.error << "\n";
        return os.str();
    }
    if (!r.minors.empty() || r.command == "convex") {
        os << r.input << " | convex " << (r.verdict && *r.verdict ? "true" : "false");
        if (r.first_failure) os << " | first failure " << index_set_text(*r.first_failure);
        os << "\n";
        for (const MinorSummary& m : r.minors) {
            os << "  minor " << index_set_text(m.index_set) << ": "
               << (m.verdict ? "true" : "false");
            if (m.constant_sign) os << " (constant)";
            if (m.v) os << " (v " << *m.v << ")";
            os << "\n";
        }
        return os.str();
    }
    if (r.command == "sturm") {
        os << r.input;
        if (r.sturm)
            os << " | F " << signs_text(r.sturm->signs_at_minus_infty_F) << " | R "
               << signs_text(r.sturm->signs_at_minus_infty) << " | v_F " << r.sturm->v_F
               << " | v_R " << r.sturm->v_R << " | v " << r.sturm->v;
        os << "\n";
        if (r.sequence)
            for (std::size_t i = 0; i < r.sequence->size(); ++i)
                os << "  S" << i << " = " << (*r.sequence)[i].str() << "\n";
        return os.str();
    }
    if (r.command == "tangency") {
        os << r.input;
        if (r.point) os << " @ " << point_text(*r.point);
        os << " | t_good " << (r.t_good && *r.t_good ? "yes" : "no");
        if (r.theta) os << " | deg theta " << r.theta->degree();
        if (r.phi) os << " | deg phi " << r.phi->degree();
        os << "\n";
        if (r.theta) os << "  theta = " << r.theta->str("x1") << "\n";
        if (r.phi) os << "  phi = " << r.phi->str() << "\n";
        return os.str();
    }
    // decision row: the union of the table columns
    os << r.input;
    if (r.point) os << " @ " << point_text(*r.point);
    if (r.phi) os << " | deg phi " << r.phi->degree();
    if (r.sturm)
        os << " | F " << signs_text(r.sturm->signs_at_minus_infty_F) << " | R "
           << signs_text(r.sturm->signs_at_minus_infty) << " | v_F " << r.sturm->v_F
           << " | v_R " << r.sturm->v_R << " | v " << r.sturm->v;
    os << " | " << (r.verdict.has_value() ? (*r.verdict ? "true" : "false") : "undecided");
    if (r.timings) os << " | " << seconds_text(*r.timings);
    os << "\n";
    return os.str();
}

} // namespace polybound
