#include "hall/scalar.hpp"

namespace hall {

long TwistScalar::check_q(long q) {
    if (q < 2) throw std::invalid_argument("TwistScalar: q must be >= 2, got " + std::to_string(q));
    return q;
}

long TwistScalar::common_q(const TwistScalar& o) const {
    if (q_ == o.q_) return q_;
    if (q_ == 0) return o.q_;
    if (o.q_ == 0 || is_zero() || o.is_zero()) return q_ ? q_ : o.q_;
    throw std::logic_error("TwistScalar: mixing base fields q=" + std::to_string(q_) + " and q=" +
                           std::to_string(o.q_));
}

TwistScalar TwistScalar::operator+(const TwistScalar& o) const {
    return TwistScalar(common_q(o), rat_ + o.rat_, v_ + o.v_, raw_tag{});
}

TwistScalar TwistScalar::operator-(const TwistScalar& o) const {
    return TwistScalar(common_q(o), rat_ - o.rat_, v_ - o.v_, raw_tag{});
}

TwistScalar TwistScalar::operator*(const TwistScalar& o) const {
    long q = common_q(o);
    // (a + b v)(c + d v) = ac + bd q + (ad + bc) v
    return TwistScalar(q, rat_ * o.rat_ + v_ * o.v_ * q, rat_ * o.v_ + v_ * o.rat_, raw_tag{});
}

TwistScalar TwistScalar::inv() const {
    if (is_zero()) throw std::domain_error("TwistScalar: division by zero");
    // 1/(a + b v) = (a - b v)/(a^2 - b^2 q); the norm is nonzero since sqrt(q)
    // is irrational for prime q.
    Rat norm = rat_ * rat_ - v_ * v_ * q_;
    if (norm == 0) throw std::logic_error("TwistScalar: vanishing norm, q is not squarefree?");
    return TwistScalar(q_, rat_ / norm, -v_ / norm, raw_tag{});
}

TwistScalar TwistScalar::v_power(long q, long k) {
    check_q(q);
    long half = (k >= 0) ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
    Rat pw;
    if (half >= 0) {
        mpz_class num;
        mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(half));
        pw = Rat(num);
    } else {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(-half));
        pw = Rat(1) / Rat(den);
    }
    if (k % 2 == 0) return TwistScalar(q, pw, 0);
    return TwistScalar(q, 0, pw);
}

std::string TwistScalar::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (v_ == 0) return rat_.get_str();
    if (rat_ != 0) s = rat_.get_str() + (v_ > 0 ? "+" : "");
    if (v_ == 1)
        s += "v";
    else if (v_ == -1)
        s += "-v";
    else
        s += v_.get_str() + "*v";
    return s;
}

Rat parse_rat(const std::string& text) {
    Rat r;
    if (text.empty() || mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed fraction '" + text + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace hall
