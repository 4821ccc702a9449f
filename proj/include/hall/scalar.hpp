#pragma once

// Exact arithmetic in Q(sqrt(q)) for a fixed prime q.  Every coefficient in
// the Hall-type algebras lives here: a value is rat + v_part * v with v^2 = q.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hall {

using Rat = mpq_class;

class TwistScalar {
public:
    TwistScalar() : q_(0) {}  // q-less zero, absorbs into any field
    explicit TwistScalar(long q) : q_(check_q(q)) {}
    TwistScalar(long q, Rat rat, Rat v_part)
        : q_(check_q(q)), rat_(std::move(rat)), v_(std::move(v_part)) {
        rat_.canonicalize();
        v_.canonicalize();
    }

    static TwistScalar zero(long q) { return TwistScalar(q); }
    static TwistScalar one(long q) { return TwistScalar(q, 1, 0); }
    static TwistScalar from_rat(long q, Rat r) { return TwistScalar(q, std::move(r), 0); }

    // v^k: even k -> q^(k/2), odd k -> q^((k-1)/2) * v.  k may be negative.
    static TwistScalar v_power(long q, long k);

    long q() const { return q_; }
    const Rat& rat_part() const { return rat_; }
    const Rat& v_part() const { return v_; }

    bool is_zero() const { return rat_ == 0 && v_ == 0; }
    bool is_one() const { return rat_ == 1 && v_ == 0; }

    TwistScalar operator-() const { return TwistScalar(q_, -rat_, -v_, raw_tag{}); }
    TwistScalar operator+(const TwistScalar& o) const;
    TwistScalar operator-(const TwistScalar& o) const;
    TwistScalar operator*(const TwistScalar& o) const;
    TwistScalar& operator+=(const TwistScalar& o) { return *this = *this + o; }
    TwistScalar& operator-=(const TwistScalar& o) { return *this = *this - o; }
    TwistScalar& operator*=(const TwistScalar& o) { return *this = *this * o; }

    // Field inverse; throws std::domain_error on zero.
    TwistScalar inv() const;
    TwistScalar operator/(const TwistScalar& o) const { return *this * o.inv(); }

    bool operator==(const TwistScalar& o) const {
        return rat_ == o.rat_ && v_ == o.v_ && (q_ == o.q_ || is_zero());
    }
    bool operator!=(const TwistScalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    struct raw_tag {};
    TwistScalar(long q, Rat a, Rat b, raw_tag) : q_(q), rat_(std::move(a)), v_(std::move(b)) {}

    static long check_q(long q);
    long common_q(const TwistScalar& o) const;

    long q_;
    Rat rat_;
    Rat v_;
};

// Parses an exact fraction string "p/r" (or "p"); throws std::invalid_argument.
Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& r);

}  // namespace hall
