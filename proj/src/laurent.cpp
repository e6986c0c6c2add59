#include "skeinlab/laurent.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace skeinlab {

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    // Walk the union of variable names alphabetically; the first variable whose
    // exponents differ decides, with the higher exponent sorting first.
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        long ea = 0, eb = 0;
        std::string name;
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            name = ia->first;
            ea = ia->second;
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            name = ib->first;
            eb = ib->second;
            ++ib;
        } else {
            ea = ia->second;
            eb = ib->second;
            ++ia;
            ++ib;
        }
        if (ea != eb) return ea > eb;
    }
    return false;
}

LaurentPoly::LaurentPoly(GaussInt c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

LaurentPoly LaurentPoly::monomial(const std::string& var, long exp, GaussInt c) {
    LaurentPoly p;
    if (c.is_zero()) return p;
    Monomial m;
    if (exp != 0) m[var] = exp;
    p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

void LaurentPoly::add_term(const Monomial& m, const GaussInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) {
                long& slot = m[v];
                slot += e;
                if (slot == 0) m.erase(v);
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const GaussInt& c) const {
    LaurentPoly r;
    for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
    return r;
}

bool LaurentPoly::is_invertible() const {
    return terms_.size() == 1 && terms_.begin()->second.is_unit();
}

LaurentPoly LaurentPoly::inverse() const {
    if (!is_invertible())
        throw std::domain_error("LaurentPoly::inverse: not an invertible monomial: " + str());
    const auto& [m, c] = *terms_.begin();
    Monomial inv;
    for (const auto& [v, e] : m) inv[v] = -e;
    LaurentPoly r;
    r.terms_.emplace(std::move(inv), c.unit_inverse());
    return r;
}

LaurentPoly LaurentPoly::pow(long n) const {
    LaurentPoly base = *this;
    if (n < 0) {
        base = inverse();
        n = -n;
    }
    LaurentPoly acc(GaussInt(1));
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly substitute_scaled(const LaurentPoly& p, const std::string& var,
                              const GaussInt& scale, const std::string& target, long power) {
    if (!scale.is_unit())
        throw std::domain_error("substitute_scaled: scale must be a unit of Z[i]");
    if (power != 1 && power != -1)
        throw std::domain_error("substitute_scaled: power must be +1 or -1");
    LaurentPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial nm;
        long e_var = 0;
        for (const auto& [v, e] : m) {
            if (v == var) e_var = e;
            else nm[v] = e;
        }
        GaussInt nc = c;
        if (e_var != 0) {
            nc *= scale.pow(e_var);
            long& slot = nm[target];
            slot += e_var * power;
            if (slot == 0) nm.erase(target);
        }
        r.add_term(nm, nc);
    }
    return r;
}

std::complex<double> eval_complex(const LaurentPoly& p,
                                  const std::map<std::string, std::complex<double>>& assign) {
    std::complex<double> total(0.0, 0.0);
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> t(c.re().get_d(), c.im().get_d());
        for (const auto& [v, e] : m) {
            auto it = assign.find(v);
            if (it == assign.end())
                throw std::domain_error("eval_complex: unassigned variable: " + v);
            if (it->second == std::complex<double>(0.0, 0.0))
                throw std::domain_error("eval_complex: zero assignment for variable: " + v);
            t *= std::pow(it->second, static_cast<double>(e));
        }
        total += t;
    }
    return total;
}

namespace {

// Renders one coefficient in front of a (possibly empty) monomial, returning
// the magnitude text; `negative` reports whether a leading minus was absorbed.
std::string coeff_text(const GaussInt& c, bool has_monomial, bool& negative) {
    negative = false;
    if (c.im() == 0) {
        mpz_class re = c.re();
        if (re < 0) {
            negative = true;
            re = -re;
        }
        if (re == 1 && has_monomial) return "";
        return re.get_str();
    }
    if (c.re() == 0) {
        mpz_class im = c.im();
        if (im < 0) {
            negative = true;
            im = -im;
        }
        if (im == 1) return "i";
        return im.get_str() + "*i";
    }
    // Mixed Gaussian coefficient: keep it in parentheses verbatim.
    return "(" + c.str().substr(1, c.str().size() - 2) + ")";
}

std::string monomial_text(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) s += "*";
        s += v;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

std::string format_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = false;
        std::string coeff = coeff_text(c, !m.empty(), neg);
        std::string mono = monomial_text(m);
        std::string body = coeff;
        if (!mono.empty()) {
            if (!body.empty()) body += "*";
            body += mono;
        }
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string LaurentPoly::str() const { return format_poly(*this); }

// ---------------------------------------------------------------------------
// Expression parser: sum/product/power grammar over integers, `i`, variables.
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    LaurentPoly parse() {
        LaurentPoly p = sum();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("polynomial: trailing input at offset " + std::to_string(pos_));
        return p;
    }

private:
    LaurentPoly sum() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        LaurentPoly p = product();
        if (neg) p = -p;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            LaurentPoly q = product();
            if (c == '-') p -= q;
            else p += q;
        }
        return p;
    }

    LaurentPoly product() {
        LaurentPoly p = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                take();
                p *= factor();
                continue;
            }
            // Allow juxtaposition like "2i" or "(1+i)a" for robustness.
            char c = peek();
            if (c == '(' || c == 'i' || std::isalpha(static_cast<unsigned char>(c)) ||
                std::isdigit(static_cast<unsigned char>(c))) {
                p *= factor();
                continue;
            }
            break;
        }
        return p;
    }

    LaurentPoly factor() {
        LaurentPoly base = atom();
        skip_ws();
        if (peek() == '^') {
            take();
            long e = integer();
            base = base.pow(e);
        }
        return base;
    }

    LaurentPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            LaurentPoly p = sum();
            skip_ws();
            if (take() != ')') throw ParseError("polynomial: expected ')'");
            return p;
        }
        if (c == '-') {
            take();
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n(number());
            return LaurentPoly(GaussInt(std::move(n), 0));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            if (name == "i") return LaurentPoly(GaussInt::i());
            return LaurentPoly::monomial(name, 1);
        }
        throw ParseError(std::string("polynomial: unexpected character '") + c + "'");
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("polynomial: expected integer exponent");
        long v = std::stol(number());
        return neg ? -v : v;
    }

    std::string number() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out += take();
        return out;
    }

    std::string ident() {
        std::string out;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') out += take();
        return out;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char take() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

namespace {

nlohmann::json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return nlohmann::json(z.get_si());
    // Out-of-range coefficients are carried as decimal strings to stay exact.
    return nlohmann::json(z.get_str());
}

mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw ParseError("polynomial json: coefficient must be integer or decimal string");
}

}  // namespace

std::string poly_to_json(const LaurentPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json jm = nlohmann::json::object();
        for (const auto& [v, e] : m) jm[v] = e;
        arr.push_back({{"m", jm}, {"re", mpz_to_json(c.re())}, {"im", mpz_to_json(c.im())}});
    }
    return arr.dump();
}

LaurentPoly poly_from_json(const std::string& json_text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polynomial json: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("polynomial json: expected an array of terms");
    LaurentPoly p;
    for (const auto& t : arr) {
        if (!t.is_object() || !t.contains("m") || !t.contains("re") || !t.contains("im"))
            throw ParseError("polynomial json: each term needs m/re/im");
        Monomial m;
        for (const auto& [v, e] : t.at("m").items()) {
            if (!e.is_number_integer()) throw ParseError("polynomial json: exponent must be integer");
            long exp = e.get<long>();
            if (exp != 0) m[v] = exp;
        }
        p.add_term(m, GaussInt(mpz_from_json(t.at("re")), mpz_from_json(t.at("im"))));
    }
    return p;
}

}  // namespace skeinlab
