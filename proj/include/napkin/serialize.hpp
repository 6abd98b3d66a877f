#pragma once

#include "napkin/identities.hpp"
#include "napkin/oracle.hpp"
#include "napkin/stats.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace napkin {

using json = nlohmann::json;

inline json series_to_json(const ZSeries& s) {
    json arr = json::array();
    for (int n = 0; n <= s.order(); ++n) {
        json terms = json::array();
        for (const auto& [k, c] : s.coeff(n).terms()) {
            terms.push_back({{"xdeg", k.first},
                             {"ydeg", k.second},
                             {"num", numerator(c).str()},
                             {"den", denominator(c).str()}});
        }
        arr.push_back({{"n", n}, {"terms", std::move(terms)}});
    }
    return arr;
}

inline json rational_to_json(const Rational& r, bool with_float) {
    json j = format_rational(r);
    if (!with_float) return j;
    return json{{"exact", format_rational(r)}, {"value", to_double(r)}};
}

inline json distribution_to_json(const JointDistribution& d, bool with_float = false) {
    json rows = json::array();
    for (const auto& [k, v] : d.probs) {
        json row{{"i", k.first},
                 {"j", k.second},
                 {"num", numerator(v).str()},
                 {"den", denominator(v).str()}};
        if (with_float) row["value"] = to_double(v);
        rows.push_back(std::move(row));
    }
    json j{{"n", d.n},
           {"p", format_rational(d.p)},
           {"table", d.kind == TableKind::Circular ? "circular" : "straight"},
           {"rows", std::move(rows)}};
    if (!d.by_class.empty()) {
        json classes = json::object();
        for (const auto& [cls, probs] : d.by_class) {
            json crows = json::array();
            for (const auto& [k, v] : probs) {
                json row{{"i", k.first},
                         {"j", k.second},
                         {"num", numerator(v).str()},
                         {"den", denominator(v).str()}};
                if (with_float) row["value"] = to_double(v);
                crows.push_back(std::move(row));
            }
            classes[std::string(1, end_class_char(cls))] = std::move(crows);
        }
        j["classes"] = std::move(classes);
    }
    return j;
}

inline std::string distribution_to_csv(const JointDistribution& d) {
    std::ostringstream out;
    out << "n,i,j,num,den\n";
    for (const auto& [k, v] : d.probs)
        out << d.n << ',' << k.first << ',' << k.second << ','
            << numerator(v).str() << ',' << denominator(v).str() << '\n';
    return out.str();
}

inline json stat_report_to_json(const StatReport& r, bool with_float = false) {
    return json{{"n", r.n},
                {"p", format_rational(r.p)},
                {"E_napkinless", rational_to_json(r.e_napkinless, with_float)},
                {"E_frustrated", rational_to_json(r.e_frustrated, with_float)},
                {"E_happy", rational_to_json(r.e_happy, with_float)},
                {"Var_napkinless", rational_to_json(r.var_napkinless, with_float)},
                {"Var_frustrated", rational_to_json(r.var_frustrated, with_float)},
                {"Covar", rational_to_json(r.covar, with_float)}};
}

inline json asymptotics_to_json(const AsymptoticReport& a) {
    auto f = [](const Float100& v) { return v.str(15); };
    json j{{"precision", "1e-12"},
           {"E_napkinless_slope", f(a.e_napkinless_slope)},
           {"Var_napkinless_slope", f(a.var_napkinless_slope)},
           {"pole_order", a.expansion.pole_order},
           {"b_minus2", f(a.expansion.b_minus2)},
           {"b_minus1", f(a.expansion.b_minus1)},
           {"b_minus2_numeric", f(a.expansion.b_minus2_numeric)},
           {"b_minus1_numeric", f(a.expansion.b_minus1_numeric)}};
    if (a.e_frustrated_slope) j["E_frustrated_slope"] = f(*a.e_frustrated_slope);
    if (a.var_frustrated_slope) j["Var_frustrated_slope"] = f(*a.var_frustrated_slope);
    if (a.covar_slope) j["Covar_slope"] = f(*a.covar_slope);
    if (a.e_happy_slope) j["E_happy_slope"] = f(*a.e_happy_slope);
    return j;
}

inline json montecarlo_to_json(const MonteCarloReport& r) {
    return json{{"n", r.n},
                {"trials", r.trials},
                {"seed", r.seed},
                {"sum_o", r.sum_o},
                {"sum_m", r.sum_m},
                {"sum_happy", r.sum_happy},
                {"mean_napkinless_frac", r.mean_o_frac},
                {"mean_frustrated_frac", r.mean_m_frac},
                {"mean_happy_frac", r.mean_happy_frac},
                {"se_napkinless_frac", r.se_o_frac},
                {"se_frustrated_frac", r.se_m_frac},
                {"se_happy_frac", r.se_happy_frac}};
}

inline json identity_report_to_json(const IdentityReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"asserted", c.asserted},
                          {"first_fail", c.first_fail}});
    return json{{"p", format_rational(r.p)},
                {"order", r.order},
                {"all_passed", r.all_passed()},
                {"checks", std::move(checks)}};
}

} // namespace napkin
