#include "s3w/linguistic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "s3w/errors.hpp"

namespace s3w {

namespace {

const double kE = std::exp(1.0);

double clamp_unit(double g) { return std::clamp(g, 0.0, 1.0); }

void check_gamma(double g) {
    if (!std::isfinite(g) || g < -1e-12 || g > 1.0 + 1e-12)
        throw DomainError("gamma " + format_number(g) + " outside [0,1]");
}

}  // namespace

void Scale::validate() const {
    if (tau < 1) throw DomainError("scale tau must be >= 1, got " + std::to_string(tau));
    if (sigma_scale < 1)
        throw DomainError("scale sigma_scale must be >= 1, got " + std::to_string(sigma_scale));
}

Element::Element(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw DomainError("hesitant element needs at least one term");
}

Element::Element(std::initializer_list<Term> terms) : Element(std::vector<Term>(terms)) {}

void validate_term(const Term& t, const Scale& scale) {
    if (!std::isfinite(t.phi) || std::abs(t.phi) > scale.tau + kSubscriptTol)
        throw DomainError("first-hierarchy subscript " + format_number(t.phi) + " outside [-" +
                          std::to_string(scale.tau) + "," + std::to_string(scale.tau) + "]");
    if (!std::isfinite(t.varphi) || std::abs(t.varphi) > scale.sigma_scale + kSubscriptTol)
        throw DomainError("second-hierarchy subscript " + format_number(t.varphi) + " outside [-" +
                          std::to_string(scale.sigma_scale) + "," +
                          std::to_string(scale.sigma_scale) + "]");
}

void validate_element(const Element& h, const Scale& scale) {
    if (h.size() == 0) throw DomainError("hesitant element needs at least one term");
    for (const auto& t : h.terms()) validate_term(t, scale);
}

double f_scalar(const Term& t, const Scale& scale) {
    validate_term(t, scale);
    const double s = scale.sigma_scale;
    const double tau = scale.tau;
    return clamp_unit((t.varphi + (tau + t.phi) * s) / (2.0 * s * tau));
}

Term f_inverse(double gamma, const Scale& scale) {
    check_gamma(gamma);
    gamma = clamp_unit(gamma);
    const double tau = scale.tau;
    const double x = 2.0 * tau * gamma - tau;
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-9) return {r, 0.0};
    const double phi = std::floor(x);
    return {phi, scale.sigma_scale * (x - phi)};
}

HfeValue to_hfe(const Element& h, const Scale& scale) {
    HfeValue out;
    out.reserve(h.size());
    for (const auto& t : h.terms()) out.push_back(f_scalar(t, scale));
    return out;
}

Element from_hfe(const HfeValue& v, const Scale& scale) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (double g : v) terms.push_back(f_inverse(g, scale));
    return Element(std::move(terms));
}

HfeValue hfe_add(const HfeValue& a, const HfeValue& b) {
    HfeValue out;
    out.reserve(a.size() * b.size());
    for (double x : a)
        for (double y : b) out.push_back(clamp_unit(x + y - x * y));
    return out;
}

HfeValue hfe_scalar_mul(double mu, const HfeValue& v) {
    if (!(mu >= 0.0)) throw DomainError("scalar multiplier must be >= 0");
    HfeValue out;
    out.reserve(v.size());
    for (double g : v) out.push_back(clamp_unit(1.0 - std::pow(1.0 - g, mu)));
    return out;
}

HfeValue hfe_power(const HfeValue& v, double mu) {
    if (!(mu >= 0.0)) throw DomainError("power exponent must be >= 0");
    HfeValue out;
    out.reserve(v.size());
    for (double g : v) out.push_back(clamp_unit(std::pow(g, mu)));
    return out;
}

HfeValue hfe_complement(const HfeValue& v) {
    HfeValue out;
    out.reserve(v.size());
    for (double g : v) out.push_back(1.0 - g);
    return out;
}

Element add(const Element& a, const Element& b, const Scale& scale) {
    return from_hfe(hfe_add(to_hfe(a, scale), to_hfe(b, scale)), scale);
}

Element scalar_mul(double mu, const Element& h, const Scale& scale) {
    return from_hfe(hfe_scalar_mul(mu, to_hfe(h, scale)), scale);
}

Element power(const Element& h, double mu, const Scale& scale) {
    return from_hfe(hfe_power(to_hfe(h, scale), mu), scale);
}

Element complement(const Element& h, const Scale& scale) {
    return from_hfe(hfe_complement(to_hfe(h, scale)), scale);
}

Term expected_term(const Element& h) {
    if (h.size() == 0) throw DomainError("hesitant element needs at least one term");
    double phi = 0.0;
    double varphi = 0.0;
    for (const auto& t : h.terms()) {
        phi += t.phi;
        varphi += t.varphi;
    }
    const double n = static_cast<double>(h.size());
    return {phi / n, varphi / n};
}

Element linguistic_expected_value(const Element& h) { return Element{expected_term(h)}; }

double superior_gradus(const Term& t, const Scale& scale) {
    const double alpha = t.phi / (2.0 * scale.tau) + 0.5;
    const double beta = t.varphi / (2.0 * scale.sigma_scale * scale.tau);
    return (std::exp(alpha) + beta - 1.0) / (kE - 1.0);
}

double superior_gradus(const Element& h, const Scale& scale) {
    if (h.size() == 0) throw DomainError("hesitant element needs at least one term");
    double sum = 0.0;
    for (const auto& t : h.terms()) sum += superior_gradus(t, scale);
    return sum / static_cast<double>(h.size());
}

double euclid_distance(const Element& a, const Element& b, const Scale& scale) {
    if (a.size() != b.size())
        throw LengthMismatch("distance needs equal term counts, got " + std::to_string(a.size()) +
                             " and " + std::to_string(b.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = f_scalar(a[i], scale) - f_scalar(b[i], scale);
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

bool same_terms(const Element& a, const Element& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& t : a.terms()) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(t.phi - b[j].phi) <= tol && std::abs(t.varphi - b[j].varphi) <= tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_term(const Term& t) {
    return "s_" + format_number(t.phi) + "<o_" + format_number(t.varphi) + ">";
}

std::string format_element(const Element& h) {
    std::string out = "{";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) out += ',';
        out += format_term(h[i]);
    }
    out += '}';
    return out;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
            advance();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void expect(std::string_view lit) {
        skip_ws();
        for (char c : lit) {
            if (peek() != c) {
                std::string got = done() ? "end of input" : std::string("'") + peek() + "'";
                fail("expected '" + std::string(lit) + "', got " + got);
            }
            advance();
        }
    }

    double number() {
        skip_ws();
        const std::size_t start = pos_;
        const std::size_t start_line = line_;
        const std::size_t start_col = col_;
        auto is_digit = [&] { return !done() && peek() >= '0' && peek() <= '9'; };
        if (peek() == '+' || peek() == '-') advance();
        bool digits = false;
        while (is_digit()) {
            advance();
            digits = true;
        }
        if (peek() == '.') {
            advance();
            while (is_digit()) {
                advance();
                digits = true;
            }
        }
        if (!digits) throw ParseError("expected a decimal number", start_line, start_col);
        if (peek() == 'e' || peek() == 'E') {
            advance();
            if (peek() == '+' || peek() == '-') advance();
            if (!is_digit()) fail("malformed exponent");
            while (is_digit()) advance();
        }
        std::string_view lit = text_.substr(start, pos_ - start);
        if (lit.front() == '+') lit.remove_prefix(1);
        double v = 0.0;
        auto res = std::from_chars(lit.data(), lit.data() + lit.size(), v);
        if (res.ec != std::errc{} || res.ptr != lit.data() + lit.size())
            fail("unreadable number '" + std::string(lit) + "'");
        return v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

Element parse_element(std::string_view text) {
    Cursor cur(text);
    std::vector<Term> terms;
    cur.expect("{");
    do {
        Term t;
        cur.expect("s_");
        t.phi = cur.number();
        cur.expect("<");
        cur.expect("o_");
        t.varphi = cur.number();
        cur.expect(">");
        terms.push_back(t);
        cur.skip_ws();
        if (cur.peek() != ',') break;
        cur.advance();
    } while (true);
    cur.expect("}");
    cur.skip_ws();
    if (!cur.done()) cur.fail("trailing characters after element");
    return Element(std::move(terms));
}

Element parse_element(std::string_view text, const Scale& scale) {
    Element h = parse_element(text);
    validate_element(h, scale);
    return h;
}

}  // namespace s3w
