#include "ftsent/io.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

namespace ftsent {

namespace {

GaussianRational parse_gaussian(const std::string& re, const std::string& im) {
    return {parse_rational(re), parse_rational(im)};
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw ParseError("bad number '" + text + "'");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad number '" + text + "'");
    }
}

bool looks_rational(const std::string& text) {
    return text.find('/') != std::string::npos;
}

}  // namespace

ThreeQubitState<Complex> StateRecord::to_state() const {
    ThreeQubitState<Complex> s;
    for (int i = 0; i < 8; ++i) s[i] = amps[static_cast<std::size_t>(i)];
    return s;
}

ThreeQubitState<GaussianRational> StateRecord::to_exact_state() const {
    if (!exact) throw ParseError("state '" + id + "' has no exact rational amplitudes");
    ThreeQubitState<GaussianRational> s;
    for (int i = 0; i < 8; ++i) {
        const auto& [re, im] = exact_amps[static_cast<std::size_t>(i)];
        try {
            s[i] = parse_gaussian(re, im);
        } catch (const std::invalid_argument& e) {
            throw ParseError("state '" + id + "': " + e.what());
        }
    }
    return s;
}

namespace {

StateRecord record_from_json(const Json& j, int index) {
    StateRecord rec;
    if (!j.is_object() || !j.contains("amplitudes"))
        throw ParseError("record " + std::to_string(index) + ": missing 'amplitudes'");
    rec.id = j.value("id", "state" + std::to_string(index));
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != 8)
        throw ParseError("state '" + rec.id + "': expected exactly 8 amplitudes");
    for (int i = 0; i < 8; ++i) {
        const auto& a = amps[static_cast<std::size_t>(i)];
        if (!a.is_array() || a.size() != 2)
            throw ParseError("state '" + rec.id + "': amplitude " + std::to_string(i) +
                             " must be a [re, im] pair");
        for (int p = 0; p < 2; ++p) {
            const auto& v = a[static_cast<std::size_t>(p)];
            std::string text;
            if (v.is_string()) {
                rec.exact = true;
                text = v.get<std::string>();
            } else if (v.is_number()) {
                text = v.dump();
            } else {
                throw ParseError("state '" + rec.id + "': amplitude entries must be numbers or rational strings");
            }
            (p == 0 ? rec.exact_amps[static_cast<std::size_t>(i)].first
                    : rec.exact_amps[static_cast<std::size_t>(i)].second) = text;
        }
        if (a[0].is_number() && a[1].is_number())
            rec.amps[static_cast<std::size_t>(i)] = Complex(a[0].get<double>(), a[1].get<double>());
    }
    if (rec.exact) {
        // Mixed numeric/rational entries: require all-rational for exactness.
        for (int i = 0; i < 8; ++i) {
            auto& [re, im] = rec.exact_amps[static_cast<std::size_t>(i)];
            rec.amps[static_cast<std::size_t>(i)] =
                to_complex(parse_gaussian(re, im));
        }
    }
    return rec;
}

}  // namespace

std::vector<StateRecord> parse_states_json(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("JSON parse failure: ") + e.what());
    }
    if (doc.is_object()) doc = Json::array({doc});
    if (!doc.is_array()) throw ParseError("expected a JSON array of state records");
    std::vector<StateRecord> out;
    int idx = 0;
    for (const auto& j : doc) out.push_back(record_from_json(j, idx++));
    return out;
}

std::vector<StateRecord> parse_states_csv(std::istream& in) {
    std::vector<StateRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto cells = split(t, ',');
        if (lineno == 1 && cells.size() >= 2 && trim(cells[0]) == "id") continue;  // header
        if (cells.size() != 17)
            throw ParseError("CSV line " + std::to_string(lineno) + ": expected 17 columns, got " +
                             std::to_string(cells.size()));
        StateRecord rec;
        rec.id = trim(cells[0]);
        bool any_rational = false;
        for (int i = 0; i < 16; ++i)
            if (looks_rational(trim(cells[static_cast<std::size_t>(i + 1)]))) any_rational = true;
        rec.exact = any_rational;
        for (int i = 0; i < 8; ++i) {
            std::string re = trim(cells[static_cast<std::size_t>(2 * i + 1)]);
            std::string im = trim(cells[static_cast<std::size_t>(2 * i + 2)]);
            rec.exact_amps[static_cast<std::size_t>(i)] = {re, im};
            if (any_rational) {
                try {
                    rec.amps[static_cast<std::size_t>(i)] = to_complex(parse_gaussian(re, im));
                } catch (const std::invalid_argument& e) {
                    throw ParseError("CSV line " + std::to_string(lineno) + ": " + e.what());
                }
            } else {
                rec.amps[static_cast<std::size_t>(i)] = Complex(parse_double(re), parse_double(im));
            }
        }
        out.push_back(rec);
    }
    return out;
}

std::vector<StateRecord> parse_states(std::istream& in) {
    // Sniff the first non-space character.
    int ch;
    while ((ch = in.peek()) != EOF && (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')) in.get();
    if (ch == '[' || ch == '{') return parse_states_json(in);
    return parse_states_csv(in);
}

StateRecord parse_inline_amps(const std::string& text, bool exact) {
    auto cells = split(text, ',');
    StateRecord rec;
    rec.id = "inline";
    rec.exact = exact;
    if (cells.size() != 8 && cells.size() != 16)
        throw ParseError("--amps expects 8 or 16 comma-separated values, got " +
                         std::to_string(cells.size()));
    bool pairs = cells.size() == 16;
    for (int i = 0; i < 8; ++i) {
        std::string re = trim(cells[static_cast<std::size_t>(pairs ? 2 * i : i)]);
        std::string im = pairs ? trim(cells[static_cast<std::size_t>(2 * i + 1)]) : "0";
        rec.exact_amps[static_cast<std::size_t>(i)] = {re, im};
        if (exact) {
            try {
                rec.amps[static_cast<std::size_t>(i)] = to_complex(parse_gaussian(re, im));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        } else {
            rec.amps[static_cast<std::size_t>(i)] = Complex(parse_double(re), parse_double(im));
        }
    }
    return rec;
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // canonicalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

Json real_tag_to_json(const RealOrbitTag& tag) {
    Json j;
    j["q_sign"] = to_string(tag.q_sign);
    j["gamma_signatures"] = {to_string(tag.signatures[0]), to_string(tag.signatures[1]),
                             to_string(tag.signatures[2])};
    j["orbit_label"] = tag.orbit_label;
    return j;
}

template <class F, class ValueFn, class RealFn>
Json classification_json_impl(const std::string& id, const Classification<F>& c, ValueFn scalar,
                              RealFn real) {
    Json j;
    j["id"] = id;
    j["class"] = to_string(c.cls);
    j["rank"] = to_string(c.rank);
    j["q"] = scalar(c.q);
    Json inv;
    inv["norm_sq"] = real(c.invariants.norm_sq);
    inv["S_A"] = real(c.invariants.entropies[0]);
    inv["S_B"] = real(c.invariants.entropies[1]);
    inv["S_C"] = real(c.invariants.entropies[2]);
    inv["kempe"] = real(c.invariants.kempe);
    inv["tangle"] = c.invariants.tangle;
    inv["hyperdet"] = scalar(c.invariants.hyperdet);
    j["invariants"] = inv;
    j["flags"] = c.flags.to_strings();
    if (c.real_tag) j["real_orbit"] = real_tag_to_json(*c.real_tag);
    return j;
}

Json complex_pair(const Complex& v) {
    double re = v.real() == 0.0 ? 0.0 : v.real();  // canonicalize -0
    double im = v.imag() == 0.0 ? 0.0 : v.imag();
    return Json{{"re", re}, {"im", im}};
}

Json exact_pair(const GaussianRational& v) {
    return Json{{"re", rational_to_string(v.re)}, {"im", rational_to_string(v.im)}};
}

}  // namespace

Json classification_to_json(const std::string& id, const Classification<Complex>& c) {
    return classification_json_impl(id, c, complex_pair, [](double v) { return Json(v); });
}

Json classification_to_json(const std::string& id, const Classification<GaussianRational>& c) {
    return classification_json_impl(id, c, exact_pair,
                                    [](const Rational& v) { return Json(rational_to_string(v)); });
}

namespace {

template <class F, class ValueFn, class RealFn>
Json invariant_json_impl(const std::string& id, const ThreeQubitState<F>& s, ValueFn scalar,
                         RealFn real) {
    auto r = compute_invariants(s);
    Json j;
    j["id"] = id;
    j["norm_sq"] = real(r.norm_sq);
    j["S_A"] = real(r.entropies[0]);
    j["S_B"] = real(r.entropies[1]);
    j["S_C"] = real(r.entropies[2]);
    j["kempe"] = real(r.kempe);
    j["tangle"] = r.tangle;
    j["hyperdet"] = scalar(r.hyperdet);
    j["q"] = scalar(r.q);

    auto eg = entropy_gamma_relations(s);
    Json diag;
    diag["entropy_gamma_max_resid"] = eg.max_resid;
    auto tk = t_kempe_relation(s);
    diag["t_kempe"] = Json{{"t_norm_sq", tk.t_norm_sq},
                           {"state_overlap_abs", tk.state_overlap_abs},
                           {"rhs", tk.rhs},
                           {"resid_t_norm", tk.resid_t_norm},
                           {"resid_overlap", tk.resid_overlap}};
    j["residual_diagnostics"] = diag;
    return j;
}

}  // namespace

Json invariant_report_to_json(const std::string& id, const ThreeQubitState<Complex>& s) {
    return invariant_json_impl(id, s, complex_pair, [](double v) { return Json(v); });
}

Json invariant_report_to_json(const std::string& id, const ThreeQubitState<GaussianRational>& s) {
    return invariant_json_impl(id, s, exact_pair,
                               [](const Rational& v) { return Json(rational_to_string(v)); });
}

std::string classification_csv_header() {
    return "id,class,rank,q_re,q_im,norm_sq,S_A,S_B,S_C,kempe,tangle,hyperdet_re,hyperdet_im,flags,real_orbit";
}

std::string classification_to_csv_row(const std::string& id, const Classification<Complex>& c) {
    std::ostringstream out;
    out << id << ',' << to_string(c.cls) << ',' << to_string(c.rank) << ','
        << format_double(c.q.real()) << ',' << format_double(c.q.imag()) << ','
        << format_double(c.invariants.norm_sq) << ',' << format_double(c.invariants.entropies[0])
        << ',' << format_double(c.invariants.entropies[1]) << ','
        << format_double(c.invariants.entropies[2]) << ',' << format_double(c.invariants.kempe)
        << ',' << format_double(c.invariants.tangle) << ','
        << format_double(c.invariants.hyperdet.real()) << ','
        << format_double(c.invariants.hyperdet.imag()) << ',';
    auto flags = c.flags.to_strings();
    for (std::size_t i = 0; i < flags.size(); ++i) out << (i ? ";" : "") << flags[i];
    out << ',';
    if (c.real_tag) out << c.real_tag->orbit_label;
    return out.str();
}

std::string invariants_csv_header() {
    return "id,norm_sq,S_A,S_B,S_C,kempe,tangle,hyperdet_re,hyperdet_im,q_re,q_im,entropy_gamma_max_resid,t_kempe_resid";
}

std::string invariants_to_csv_row(const std::string& id, const ThreeQubitState<Complex>& s) {
    auto r = compute_invariants(s);
    auto eg = entropy_gamma_relations(s);
    auto tk = t_kempe_relation(s);
    std::ostringstream out;
    out << id << ',' << format_double(r.norm_sq) << ',' << format_double(r.entropies[0]) << ','
        << format_double(r.entropies[1]) << ',' << format_double(r.entropies[2]) << ','
        << format_double(r.kempe) << ',' << format_double(r.tangle) << ','
        << format_double(r.hyperdet.real()) << ',' << format_double(r.hyperdet.imag()) << ','
        << format_double(r.q.real()) << ',' << format_double(r.q.imag()) << ','
        << format_double(eg.max_resid) << ',' << format_double(tk.resid_t_norm);
    return out.str();
}

}  // namespace ftsent
