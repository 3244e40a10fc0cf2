#include "rcm/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace rcm {

namespace {

const ExactComplex& as_exact(const std::variant<ExactComplex, std::complex<double>>& v,
                             const char* op) {
    if (!std::holds_alternative<ExactComplex>(v))
        throw Error(ErrorCode::kind_mismatch, std::string("numeric scalar in exact ") + op);
    return std::get<ExactComplex>(v);
}

bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

// GMP string constructors reject a leading '+'.
std::string strip_plus(const std::string& t) {
    return (!t.empty() && t[0] == '+') ? t.substr(1) : t;
}

} // namespace

Scalar Scalar::rational(long p, long q) {
    if (q == 0) throw Error(ErrorCode::zero_scalar, "zero denominator");
    mpq_class r(p, q);
    r.canonicalize();
    return exact(std::move(r));
}

bool Scalar::is_zero() const {
    if (auto* e = std::get_if<ExactComplex>(&value_)) return e->is_zero();
    return std::get<std::complex<double>>(value_) == std::complex<double>{0.0, 0.0};
}

const ExactComplex& Scalar::exact_value() const { return as_exact(value_, "access"); }

std::complex<double> Scalar::to_complex() const {
    if (auto* e = std::get_if<ExactComplex>(&value_))
        return {e->re.get_d(), e->im.get_d()};
    return std::get<std::complex<double>>(value_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (kind() != o.kind()) throw Error(ErrorCode::kind_mismatch, "mixed-kind add");
    if (is_exact()) return exact(exact_value() + o.exact_value());
    return numeric(to_complex() + o.to_complex());
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (kind() != o.kind()) throw Error(ErrorCode::kind_mismatch, "mixed-kind sub");
    if (is_exact()) return exact(exact_value() - o.exact_value());
    return numeric(to_complex() - o.to_complex());
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (kind() != o.kind()) throw Error(ErrorCode::kind_mismatch, "mixed-kind mul");
    if (is_exact()) return exact(exact_value() * o.exact_value());
    return numeric(to_complex() * o.to_complex());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (kind() != o.kind()) throw Error(ErrorCode::kind_mismatch, "mixed-kind div");
    if (o.is_zero()) throw Error(ErrorCode::zero_scalar, "division by zero");
    if (is_exact()) return exact(exact_value() / o.exact_value());
    return numeric(to_complex() / o.to_complex());
}

Scalar Scalar::operator-() const {
    if (is_exact()) return exact(-exact_value());
    return numeric(-to_complex());
}

bool Scalar::operator==(const Scalar& o) const {
    if (kind() != o.kind()) return false;
    if (is_exact()) return exact_value() == o.exact_value();
    return to_complex() == o.to_complex();
}

std::string Scalar::to_string() const {
    if (is_exact()) {
        const auto& e = exact_value();
        if (e.im == 0) return exact_real_token(e.re);
        return "(" + exact_real_token(e.re) + "," + exact_real_token(e.im) + "i)";
    }
    auto c = to_complex();
    char buf[64];
    if (c.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", c.real());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "(%.17g,%.17gi)", c.real(), c.imag());
    return buf;
}

std::string exact_real_token(const mpq_class& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Scalar parse_real_token(const std::string& raw) {
    // trim whitespace
    std::size_t b = raw.find_first_not_of(" \t");
    std::size_t e = raw.find_last_not_of(" \t");
    if (b == std::string::npos)
        throw Error(ErrorCode::malformed_document, "empty amplitude token");
    std::string t = raw.substr(b, e - b + 1);

    // ±a/sqrt(b): numeric by definition
    if (auto pos = t.find("sqrt"); pos != std::string::npos) {
        double sign = 1.0;
        std::size_t i = 0;
        if (t[i] == '+' || t[i] == '-') {
            if (t[i] == '-') sign = -1.0;
            ++i;
        }
        std::size_t slash = t.find('/', i);
        if (slash == std::string::npos || slash == i || t.compare(slash + 1, 5, "sqrt(") != 0 ||
            t.back() != ')')
            throw Error(ErrorCode::malformed_document, "bad sqrt token: " + t);
        std::string a_str = t.substr(i, slash - i);
        std::string b_str = t.substr(slash + 6, t.size() - slash - 7);
        if (!is_integer_token(a_str) || !is_integer_token(b_str) || a_str[0] == '-' ||
            b_str[0] == '-')
            throw Error(ErrorCode::malformed_document, "bad sqrt token: " + t);
        double av = std::strtod(a_str.c_str(), nullptr);
        double bv = std::strtod(b_str.c_str(), nullptr);
        if (av <= 0 || bv <= 0)
            throw Error(ErrorCode::malformed_document, "sqrt token needs positive a, b: " + t);
        return Scalar::numeric({sign * av / std::sqrt(bv), 0.0});
    }

    // decimal (or exponent) form: numeric
    if (t.find('.') != std::string::npos || t.find('e') != std::string::npos ||
        t.find('E') != std::string::npos) {
        char* end = nullptr;
        double v = std::strtod(t.c_str(), &end);
        if (end == nullptr || *end != '\0')
            throw Error(ErrorCode::malformed_document, "bad decimal token: " + t);
        return Scalar::numeric({v, 0.0});
    }

    // p/q: exact rational
    if (auto slash = t.find('/'); slash != std::string::npos) {
        std::string p = t.substr(0, slash), q = t.substr(slash + 1);
        if (!is_integer_token(p) || !is_integer_token(q))
            throw Error(ErrorCode::malformed_document, "bad rational token: " + t);
        mpq_class num(strip_plus(p)), den(strip_plus(q));
        if (den == 0) throw Error(ErrorCode::malformed_document, "zero denominator: " + t);
        mpq_class r = num / den;
        r.canonicalize();
        return Scalar::exact(std::move(r));
    }

    if (!is_integer_token(t))
        throw Error(ErrorCode::malformed_document, "bad amplitude token: " + t);
    return Scalar::exact(mpq_class(strip_plus(t)));
}

} // namespace rcm
