#include "quadcong/field.hpp"

#include <cctype>
#include <sstream>

namespace quadcong {

GaussianRational GaussianRational::inv() const {
    if (is_zero()) throw math_error("division by zero");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = m;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw math_error("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inv();
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    GaussianRational r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = im_.get_str() + "i";
    if (sgn(re_) == 0) return imag;
    if (imag[0] != '-') imag = "+" + imag;
    return re_.get_str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    bool seen_digit = false;
    for (size_t k = start; k < s.size(); ++k) {
        char c = s[k];
        if (std::isdigit(static_cast<unsigned char>(c))) seen_digit = true;
        else if (c != '/') throw std::invalid_argument("bad rational '" + s + "'");
    }
    if (!seen_digit) throw std::invalid_argument("bad rational '" + s + "'");
    std::string t = s[0] == '+' ? s.substr(1) : s;
    mpq_class q;
    if (q.set_str(t, 10) != 0 || sgn(q.get_den()) == 0)
        throw std::invalid_argument("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

GaussianRational GaussianRational::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return {parse_rational(s), 0};
    std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
    std::string im_part = split == std::string::npos ? body : body.substr(split);
    mpq_class im;
    if (im_part.empty() || im_part == "+") im = 1;
    else if (im_part == "-") im = -1;
    else im = parse_rational(im_part);
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part);
    return {re, im};
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
    const mpq_class& a = z.re();
    const mpq_class& b = z.im();
    if (sgn(b) == 0) {
        if (sgn(a) >= 0) {
            auto r = rational_sqrt(a);
            if (r) return GaussianRational(*r, 0);
            return std::nullopt;
        }
        auto r = rational_sqrt(-a);
        if (r) return GaussianRational(0, *r);
        return std::nullopt;
    }
    auto m = rational_sqrt(z.norm());
    if (!m) return std::nullopt;
    auto x = rational_sqrt((a + *m) / 2);
    if (!x || sgn(*x) == 0) return std::nullopt;
    mpq_class y = b / (2 * *x);
    return GaussianRational(*x, y);
}

}  // namespace quadcong
