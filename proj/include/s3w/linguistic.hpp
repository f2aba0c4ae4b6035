#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace s3w {

struct Scale {
    int tau = 3;
    int sigma_scale = 3;

    // Throws DomainError when either half-range is below 1.
    void validate() const;
};

struct Term {
    double phi = 0.0;
    double varphi = 0.0;

    bool operator==(const Term&) const = default;
};

// Hesitant element: one or more terms in source order.
class Element {
public:
    Element() = default;
    explicit Element(std::vector<Term> terms);
    Element(std::initializer_list<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const Term& operator[](std::size_t i) const { return terms_[i]; }

private:
    std::vector<Term> terms_;
};

using HfeValue = std::vector<double>;

inline constexpr double kSubscriptTol = 1e-9;

void validate_term(const Term& t, const Scale& scale);
void validate_element(const Element& h, const Scale& scale);

double f_scalar(const Term& t, const Scale& scale);
Term f_inverse(double gamma, const Scale& scale);

HfeValue to_hfe(const Element& h, const Scale& scale);
Element from_hfe(const HfeValue& v, const Scale& scale);

// Operational laws on gamma values.
HfeValue hfe_add(const HfeValue& a, const HfeValue& b);
HfeValue hfe_scalar_mul(double mu, const HfeValue& v);
HfeValue hfe_power(const HfeValue& v, double mu);
HfeValue hfe_complement(const HfeValue& v);

Element add(const Element& a, const Element& b, const Scale& scale);
Element scalar_mul(double mu, const Element& h, const Scale& scale);
Element power(const Element& h, double mu, const Scale& scale);
Element complement(const Element& h, const Scale& scale);

Term expected_term(const Element& h);
Element linguistic_expected_value(const Element& h);

double superior_gradus(const Term& t, const Scale& scale);
double superior_gradus(const Element& h, const Scale& scale);

double euclid_distance(const Element& a, const Element& b, const Scale& scale);

// Term-multiset equality within tol on subscripts.
bool same_terms(const Element& a, const Element& b, double tol = kSubscriptTol);

// Compact syntax: {s_2<o_0>,s_2<o_1>}
Element parse_element(std::string_view text, const Scale& scale);
Element parse_element(std::string_view text);
std::string format_element(const Element& h);
std::string format_term(const Term& t);
std::string format_number(double v);

}  // namespace s3w
