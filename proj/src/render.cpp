#include "qhyper/render.hpp"

#include <json.hpp>

#include <sstream>

namespace qhyper {

namespace {

std::string gen_to_text(const GenId& g) {
    std::ostringstream os;
    os << g.name;
    if (g.component != 0) os << "@" << g.component;
    os << "[";
    for (size_t i = 0; i < g.index.size(); ++i) {
        if (i) os << ",";
        os << g.index[i];
    }
    os << "]";
    return os.str();
}

// Monomial coefficients split into (sign, magnitude text); "" means 1.
struct CoeffText {
    bool negative = false;
    std::string mag;
};

std::string monomial_mag(const Int& ac, long vexp) {
    std::ostringstream os;
    bool unit = (ac == 1);
    if (vexp == 0) return ac.get_str();
    if (!unit) os << ac.get_str() << "*";
    if (vexp == 2)
        os << "q";
    else if (vexp % 2 == 0)
        os << "q^" << (vexp / 2);
    else
        os << "q^(" << vexp << "/2)";
    return os.str();
}

CoeffText coeff_to_text(const RationalFn& c) {
    CoeffText out;
    if (c.den_is_one() && c.num().is_monomial()) {
        auto& [e, k] = *c.num().terms().begin();
        out.negative = (k < 0);
        out.mag = monomial_mag(k < 0 ? Int(-k) : k, e);
        return out;
    }
    std::ostringstream os;
    os << "(" << c.num().to_string() << ")";
    if (!c.den_is_one()) os << "/(" << c.den().to_string() << ")";
    out.mag = os.str();
    return out;
}

} // namespace

std::string word_to_text(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ".";
        os << gen_to_text(w.letters[i]);
    }
    return os.str();
}

std::string to_text(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : p.terms()) {
        CoeffText ct = coeff_to_text(c);
        if (first) {
            if (ct.negative) os << "-";
            first = false;
        } else {
            os << (ct.negative ? " - " : " + ");
        }
        bool unit_coeff = (ct.mag == "1");
        if (w.letters.empty()) {
            os << ct.mag;
        } else {
            if (!unit_coeff) os << ct.mag << "*";
            os << word_to_text(w);
        }
    }
    return os.str();
}

namespace {

std::string gen_to_latex(const GenId& g) {
    std::ostringstream os;
    os << g.name;
    if (g.component != 0) os << "^{(" << g.component << ")}";
    os << "_{";
    bool wide = false;
    for (int i : g.index)
        if (i > 9) wide = true;
    for (size_t i = 0; i < g.index.size(); ++i) {
        if (i && wide) os << ",";
        os << g.index[i];
    }
    os << "}";
    return os.str();
}

std::string laurent_to_latex(const LaurentV& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : a.terms()) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (e == 0) {
            os << ac.get_str();
            continue;
        }
        if (ac != 1) os << ac.get_str();
        if (e == 2)
            os << "q";
        else if (e % 2 == 0)
            os << "q^{" << e / 2 << "}";
        else
            os << "q^{" << e << "/2}";
    }
    return os.str();
}

} // namespace

std::string to_latex(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : p.terms()) {
        std::string coeff;
        bool neg = false;
        if (c.den_is_one() && c.num().is_monomial()) {
            auto& [e, k] = *c.num().terms().begin();
            neg = (k < 0);
            Int ak = k < 0 ? Int(-k) : k;
            LaurentV mono = LaurentV::monomial(ak, e);
            coeff = mono.is_one() ? "" : laurent_to_latex(mono);
        } else if (c.den_is_one()) {
            coeff = "\\left(" + laurent_to_latex(c.num()) + "\\right)";
        } else if (c.num().is_monomial()) {
            auto& [e, k] = *c.num().terms().begin();
            neg = (k < 0);
            Int ak = k < 0 ? Int(-k) : k;
            coeff = "\\frac{" + laurent_to_latex(LaurentV::monomial(ak, e)) + "}{" +
                    laurent_to_latex(c.den()) + "}";
        } else {
            coeff = "\\frac{" + laurent_to_latex(c.num()) + "}{" + laurent_to_latex(c.den()) + "}";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (w.letters.empty() && coeff.empty()) coeff = "1";
        os << coeff;
        for (auto& g : w.letters) os << gen_to_latex(g);
    }
    return os.str();
}

namespace {

using nlohmann::json;

json int_to_json(const Int& c) {
    if (c.fits_slong_p()) return json(c.get_si());
    return json(c.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long>());
}

json laurent_to_json(const LaurentV& a) {
    json arr = json::array();
    for (auto& [e, c] : a.terms()) arr.push_back(json::array({json(e), int_to_json(c)}));
    return arr;
}

LaurentV laurent_from_json(const json& arr) {
    std::map<long, Int> t;
    for (auto& pair : arr) t[pair.at(0).get<long>()] = int_from_json(pair.at(1));
    return make_laurent(std::move(t));
}

} // namespace

std::string to_json(const NCPoly& p) {
    json arr = json::array();
    for (auto& [w, c] : p.terms()) {
        json term;
        term["coeff"] = {{"num", laurent_to_json(c.num())}, {"den", laurent_to_json(c.den())}};
        json word = json::array();
        for (auto& g : w.letters) {
            word.push_back({{"comp", g.component}, {"name", std::string(1, g.name)}, {"idx", g.index}});
        }
        term["word"] = word;
        arr.push_back(term);
    }
    return arr.dump();
}

NCPoly poly_from_json(const std::string& text) {
    json arr = json::parse(text);
    NCPoly p;
    for (auto& term : arr) {
        LaurentV num = laurent_from_json(term.at("coeff").at("num"));
        LaurentV den = laurent_from_json(term.at("coeff").at("den"));
        std::vector<GenId> letters;
        for (auto& g : term.at("word")) {
            GenId id;
            id.component = g.at("comp").get<int>();
            id.name = g.at("name").get<std::string>().at(0);
            id.index = g.at("idx").get<std::vector<int>>();
            letters.push_back(std::move(id));
        }
        p.add_term(Word::of(std::move(letters)), RationalFn(num, den));
    }
    return p;
}

} // namespace qhyper
