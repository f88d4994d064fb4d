#pragma once

#include <mpfr.h>

#include <string>

#include "stein/rational.hpp"

namespace stein {

// Extended-precision real for the numeric probe layer. Working precision is
// STEIN_PRECISION_DIGITS decimal digits (default 30, never less), fixed at
// first use for the whole process.
class Real {
public:
    Real();
    Real(long v);
    explicit Real(const Rational& q);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static unsigned precision_digits();
    static unsigned precision_bits();

    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const Real& o) const;
    Real operator/(const Real& o) const;
    Real operator-() const;
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);

    bool operator<(const Real& o) const;
    bool operator==(const Real& o) const;

    Real abs() const;
    int sign() const;
    bool is_zero() const { return sign() == 0; }

    static Real log(const Real& x);           // x > 0
    static Real exp(const Real& x);
    static Real log_gamma(const Real& x);     // x > 0
    static Real pow(const Real& b, const Real& e); // b > 0
    static Real pi();

    double to_double() const;
    std::string str(int digits = 20) const;

private:
    mpfr_t v_;
};

Real log_rational(const Rational& q);      // q > 0
Real log_gamma_rational(const Rational& q); // q > 0

} // namespace stein
