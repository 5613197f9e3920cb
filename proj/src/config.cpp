#include "qszasz/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qszasz/errors.hpp"
#include "qszasz/functions.hpp"

namespace qszasz {

namespace {

const std::vector<std::string> kCommands = {"moments", "bounds", "statconv", "sweep",
                                            "verify-all"};
const std::vector<std::string> kTheorems = {"pointwise", "uniform", "lipschitz",
                                            "second-modulus"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

class Parser {
public:
    Parser(const std::string& text, std::string name) : name_(std::move(name)) {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) fail(lineno, "expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) fail(lineno, "empty key");
            if (entries_.count(key)) fail(lineno, "duplicate key '" + key + "'");
            entries_[key] = {value, lineno};
        }
    }

    [[noreturn]] void fail(int line, const std::string& msg) const {
        throw ConfigError(name_ + ":" + std::to_string(line) + ": " + msg);
    }

    [[noreturn]] void fail_key(const std::string& key, const std::string& msg) const {
        const auto it = entries_.find(key);
        fail(it != entries_.end() ? it->second.line : 0, msg);
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    int line_of(const std::string& key) const {
        const auto it = entries_.find(key);
        return it != entries_.end() ? it->second.line : 0;
    }

    std::string str(const std::string& key) { return take(key).value; }

    double real(const std::string& key) {
        const auto e = take(key);
        return to_real(e.value, e.line, key);
    }

    long integer(const std::string& key) {
        const auto e = take(key);
        try {
            std::size_t used = 0;
            const long v = std::stol(e.value, &used);
            if (used != e.value.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            fail(e.line, "key '" + key + "': expected an integer, got '" + e.value + "'");
        }
    }

    bool boolean(const std::string& key) {
        const auto e = take(key);
        if (e.value == "true" || e.value == "1") return true;
        if (e.value == "false" || e.value == "0") return false;
        fail(e.line, "key '" + key + "': expected true/false");
    }

    std::vector<double> real_list(const std::string& key) {
        const auto e = take(key);
        std::vector<double> out;
        for (const auto& part : split(e.value, ',')) out.push_back(to_real(part, e.line, key));
        return out;
    }

    std::vector<long> int_list(const std::string& key) {
        const auto e = take(key);
        std::vector<long> out;
        for (const auto& part : split(e.value, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stol(part, &used));
                if (used != part.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                fail(e.line, "key '" + key + "': expected integers, got '" + part + "'");
            }
        }
        return out;
    }

    std::vector<std::string> str_list(const std::string& key) {
        const auto e = take(key);
        return split(e.value, ',');
    }

    void check_consumed() const {
        for (const auto& [key, e] : entries_)
            if (!consumed_.count(key)) fail(e.line, "unknown key '" + key + "'");
    }

    double to_real(const std::string& s, int line, const std::string& key) const {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            fail(line, "key '" + key + "': expected a real number, got '" + s + "'");
        }
    }

private:
    struct Entry {
        std::string value;
        int line = 0;
    };

    Entry take(const std::string& key) {
        consumed_.insert(key);
        return entries_.at(key);
    }

    std::string name_;
    std::map<std::string, Entry> entries_;
    std::set<std::string> consumed_;
};

} // namespace

double ExperimentConfig::q_at(long n) const {
    if (!uses_sequence()) return q;
    if (q_kind == "ratio") return q_sequence_value(QSequenceKind::ratio, n);
    if (q_kind == "one_minus_inv") return q_sequence_value(QSequenceKind::one_minus_inv, n);
    if (n < 1 || static_cast<std::size_t>(n) > q_values.size())
        throw DomainError("custom q sequence has no value for n = " + std::to_string(n));
    return q_values[static_cast<std::size_t>(n - 1)];
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& name) {
    Parser p(text, name);
    ExperimentConfig c;

    if (p.has("command")) c.command = p.str("command");
    if (p.has("n") && p.has("n_list")) p.fail_key("n", "give either n or n_list, not both");
    if (p.has("n")) c.n_list = {p.integer("n")};
    if (p.has("n_list")) c.n_list = p.int_list("n_list");
    if (p.has("t") && p.has("t_list")) p.fail_key("t", "give either t or t_list, not both");
    if (p.has("t")) c.t_list = {p.real("t")};
    if (p.has("t_list")) c.t_list = p.real_list("t_list");
    if (p.has("alpha")) c.alpha = p.real("alpha");
    if (p.has("beta")) c.beta = p.real("beta");
    if (p.has("q")) c.q = p.real("q");
    if (p.has("q_kind")) c.q_kind = p.str("q_kind");
    if (p.has("q_values")) c.q_values = p.real_list("q_values");
    if (p.has("A")) c.a_coeffs = p.real_list("A");
    if (p.has("functions")) c.functions = p.str_list("functions");
    if (p.has("lip_functions")) {
        c.lip_functions.clear();
        for (const auto& spec : p.str_list("lip_functions")) {
            // name:M:alpha, split from the right so names may contain ':'
            const auto second = spec.rfind(':');
            const auto first = second == std::string::npos ? second : spec.rfind(':', second - 1);
            if (first == std::string::npos || second == std::string::npos || first == 0)
                p.fail_key("lip_functions", "expected name:M:alpha entries, got '" + spec + "'");
            LipFunctionSpec ls;
            ls.name = trim(spec.substr(0, first));
            ls.m = p.to_real(trim(spec.substr(first + 1, second - first - 1)),
                             p.line_of("lip_functions"), "lip_functions");
            ls.alpha_exp =
                p.to_real(trim(spec.substr(second + 1)), p.line_of("lip_functions"), "lip_functions");
            c.lip_functions.push_back(std::move(ls));
        }
    }
    if (p.has("theorems")) c.theorems = p.str_list("theorems");
    if (p.has("x_lo")) c.x_lo = p.real("x_lo");
    if (p.has("x_hi")) c.x_hi = p.real("x_hi");
    if (p.has("x_step")) c.x_step = p.real("x_step");
    if (p.has("a")) c.a = p.real("a");
    if (p.has("tol")) c.tol = p.real("tol");
    if (p.has("moment_tol")) c.moment_tol = p.real("moment_tol");
    if (p.has("report_tol")) c.report_tol = p.real("report_tol");
    if (p.has("eps")) c.eps = p.real("eps");
    if (p.has("horizon")) c.horizon = p.integer("horizon");
    if (p.has("out")) c.out_path = p.str("out");
    if (p.has("relax_stancu")) c.relax_stancu = p.boolean("relax_stancu");
    p.check_consumed();

    // ---- validation, each failure pointing at the offending line ----
    if (!c.command.empty() &&
        std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end())
        p.fail_key("command", "unknown command '" + c.command + "'");
    if (c.n_list.empty()) p.fail_key("n_list", "n_list must not be empty");
    for (long n : c.n_list)
        if (n < 1) p.fail_key(p.has("n") ? "n" : "n_list", "n must be >= 1");
    for (double t : c.t_list)
        if (t < 0.0) p.fail_key(p.has("t") ? "t" : "t_list", "t must be >= 0");
    if (c.alpha < 0.0) p.fail_key("alpha", "alpha must be >= 0");
    if (c.beta < 0.0) p.fail_key("beta", "beta must be >= 0");
    if (!c.relax_stancu && c.alpha > c.beta)
        p.fail_key(p.has("beta") ? "beta" : "alpha",
                   "alpha <= beta required (set relax_stancu = true to override)");

    if (c.q != 0.0 && !c.q_kind.empty())
        p.fail_key("q", "give either a fixed q or a q_kind, not both");
    if (c.q == 0.0 && c.q_kind.empty())
        throw ConfigError(name + ":0: one of q or q_kind is required");
    if (c.q != 0.0 && (!(c.q > 0.0) || !(c.q < 1.0)))
        p.fail_key("q", "q must satisfy 0 < q < 1");
    if (!c.q_kind.empty() && c.q_kind != "ratio" && c.q_kind != "one_minus_inv" &&
        c.q_kind != "custom")
        p.fail_key("q_kind", "q_kind must be ratio, one_minus_inv or custom");
    if (c.q_kind == "custom") {
        if (c.q_values.empty()) p.fail_key("q_kind", "custom q_kind requires q_values");
        for (double v : c.q_values)
            if (!(v > 0.0) || !(v < 1.0)) p.fail_key("q_values", "every q value must lie in (0,1)");
        const long nmax = *std::max_element(c.n_list.begin(), c.n_list.end());
        if (static_cast<std::size_t>(nmax) > c.q_values.size())
            p.fail_key("q_values", "custom q sequence shorter than the largest n");
    }

    if (c.a_coeffs.empty()) p.fail_key("A", "A needs at least one coefficient");
    double a1 = 0.0;
    for (double ak : c.a_coeffs) {
        if (ak < 0.0) p.fail_key("A", "A coefficients must be >= 0 for a positive operator");
        a1 += ak;
    }
    if (a1 == 0.0) p.fail_key("A", "A(1) must be nonzero");

    for (const auto& fname : c.functions)
        if (!is_valid_function_name(fname))
            p.fail_key("functions", "unknown function '" + fname + "'");
    for (const auto& ls : c.lip_functions) {
        if (!is_valid_function_name(ls.name))
            p.fail_key("lip_functions", "unknown function '" + ls.name + "'");
        if (!(ls.m > 0.0)) p.fail_key("lip_functions", "M must be > 0");
        if (!(ls.alpha_exp > 0.0) || ls.alpha_exp > 1.0)
            p.fail_key("lip_functions", "alpha must lie in (0,1]");
    }
    for (const auto& th : c.theorems)
        if (std::find(kTheorems.begin(), kTheorems.end(), th) == kTheorems.end())
            p.fail_key("theorems", "unknown theorem section '" + th + "'");
    const bool wants_lip =
        std::find(c.theorems.begin(), c.theorems.end(), "lipschitz") != c.theorems.end();
    if ((c.command == "bounds" || c.command == "verify-all") && wants_lip &&
        c.lip_functions.empty())
        p.fail_key("theorems", "lipschitz section requires lip_functions (name:M:alpha)");

    if (!(c.x_lo < c.x_hi)) p.fail_key("x_hi", "x_lo < x_hi required");
    if (!(c.x_step > 0.0) || c.x_step > c.x_hi - c.x_lo)
        p.fail_key("x_step", "0 < x_step <= x_hi - x_lo required");
    if (!(c.a > 0.0)) p.fail_key("a", "a must be > 0");
    if (!(c.tol > 0.0)) p.fail_key("tol", "tol must be > 0");
    if (!(c.moment_tol > 0.0)) p.fail_key("moment_tol", "moment_tol must be > 0");
    if (!(c.report_tol > 0.0)) p.fail_key("report_tol", "report_tol must be > 0");
    if (!(c.eps > 0.0)) p.fail_key("eps", "eps must be > 0");
    if (c.horizon < 8) p.fail_key("horizon", "horizon must be >= 8");

    // e_q convergence: t(1-q^n) < 1 for every n in play, including the sweep
    // interval [0,a]
    const double t_max =
        std::max(*std::max_element(c.t_list.begin(), c.t_list.end()), c.a);
    for (long n : c.n_list) {
        const double qn = c.q_at(n);
        if (t_max * (1.0 - std::pow(qn, static_cast<double>(n))) >= 1.0)
            p.fail_key(p.has("t") ? "t" : (p.has("t_list") ? "t_list" : "a"),
                       "t(1-q^n) >= 1 at n = " + std::to_string(n) +
                           "; outside the operator's convergence region");
    }

    return c;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path + ":0: cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

namespace {

std::string join_reals(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v[i]);
        out += buf;
    }
    return out;
}

std::string join_longs(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_strs(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i];
    }
    return out;
}

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string serialize_config(const ExperimentConfig& c) {
    std::ostringstream out;
    if (!c.command.empty()) out << "command = " << c.command << '\n';
    out << "n_list = " << join_longs(c.n_list) << '\n';
    out << "t_list = " << join_reals(c.t_list) << '\n';
    out << "alpha = " << fmt_real(c.alpha) << '\n';
    out << "beta = " << fmt_real(c.beta) << '\n';
    if (c.q != 0.0) out << "q = " << fmt_real(c.q) << '\n';
    if (!c.q_kind.empty()) out << "q_kind = " << c.q_kind << '\n';
    if (!c.q_values.empty()) out << "q_values = " << join_reals(c.q_values) << '\n';
    out << "A = " << join_reals(c.a_coeffs) << '\n';
    out << "functions = " << join_strs(c.functions) << '\n';
    if (!c.lip_functions.empty()) {
        out << "lip_functions = ";
        for (std::size_t i = 0; i < c.lip_functions.size(); ++i) {
            if (i) out << ',';
            out << c.lip_functions[i].name << ':' << fmt_real(c.lip_functions[i].m) << ':'
                << fmt_real(c.lip_functions[i].alpha_exp);
        }
        out << '\n';
    }
    out << "theorems = " << join_strs(c.theorems) << '\n';
    out << "x_lo = " << fmt_real(c.x_lo) << '\n';
    out << "x_hi = " << fmt_real(c.x_hi) << '\n';
    out << "x_step = " << fmt_real(c.x_step) << '\n';
    out << "a = " << fmt_real(c.a) << '\n';
    out << "tol = " << fmt_real(c.tol) << '\n';
    out << "moment_tol = " << fmt_real(c.moment_tol) << '\n';
    out << "report_tol = " << fmt_real(c.report_tol) << '\n';
    out << "eps = " << fmt_real(c.eps) << '\n';
    out << "horizon = " << c.horizon << '\n';
    if (!c.out_path.empty()) out << "out = " << c.out_path << '\n';
    out << "relax_stancu = " << (c.relax_stancu ? "true" : "false") << '\n';
    return out.str();
}

} // namespace qszasz
