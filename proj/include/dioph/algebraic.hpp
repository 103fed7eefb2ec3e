#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "dioph/errors.hpp"
#include "dioph/rational.hpp"

namespace dioph {

/// Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5), with exact
/// rational coefficients. The representation is unique because sqrt 5 is
/// irrational, so equality is componentwise. All sign decisions are exact.
class QRoot5 {
public:
    QRoot5() = default;
    QRoot5(Rational a, Rational b = Rational(0)) : a_(std::move(a)), b_(std::move(b)) {}
    QRoot5(long a) : a_(a) {}  // NOLINT: implicit by design, mirrors int -> Q(sqrt5)
    QRoot5(int a) : a_(a) {}   // NOLINT

    static QRoot5 sqrt5() { return QRoot5(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }  ///< rational part
    const Rational& b() const { return b_; }  ///< coefficient of sqrt 5

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    friend QRoot5 operator+(const QRoot5& x, const QRoot5& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QRoot5 operator-(const QRoot5& x, const QRoot5& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend QRoot5 operator-(const QRoot5& x) { return {-x.a_, -x.b_}; }

    // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
    friend QRoot5 operator*(const QRoot5& x, const QRoot5& y) {
        return {x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }

    /// Exact inverse by the conjugate: 1/(a + b√5) = (a − b√5)/(a² − 5b²).
    QRoot5 inverse() const {
        Rational norm = a_ * a_ - 5 * b_ * b_;
        if (norm == 0) throw ZeroDivision{};  // only a = b = 0 can make the norm vanish
        return {a_ / norm, -b_ / norm};
    }

    friend QRoot5 operator/(const QRoot5& x, const QRoot5& y) { return x * y.inverse(); }

    QRoot5& operator+=(const QRoot5& y) { return *this = *this + y; }
    QRoot5& operator-=(const QRoot5& y) { return *this = *this - y; }
    QRoot5& operator*=(const QRoot5& y) { return *this = *this * y; }
    QRoot5& operator/=(const QRoot5& y) { return *this = *this / y; }

    friend bool operator==(const QRoot5& x, const QRoot5& y) = default;

    friend std::strong_ordering operator<=>(const QRoot5& x, const QRoot5& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Exact sign in {-1, 0, +1}. When the two components pull in opposite
    /// directions the decision reduces to comparing a² with 5b²; the squares
    /// can never tie for a nonzero value since sqrt 5 is irrational.
    int sign() const {
        int sa = a_.sign();
        int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational lhs = a_ * a_, rhs = 5 * b_ * b_;  // |a|² vs 5b², i.e. |a| vs |b|√5
        int cmp = lhs.compare(rhs);
        if (cmp == 0) return 0;  // unreachable for nonzero values
        return cmp > 0 ? sa : sb;
    }

    QRoot5 abs() const { return sign() < 0 ? -*this : *this; }

    QRoot5 pow(unsigned e) const {
        QRoot5 r(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    BigFloat to_bigfloat() const {
        static const BigFloat root5 = sqrt(BigFloat(5));
        return dioph::to_bigfloat(a_) + dioph::to_bigfloat(b_) * root5;
    }

    double to_double() const { return to_bigfloat().convert_to<double>(); }

private:
    Rational a_, b_;
};

inline int sign(const QRoot5& x) { return x.sign(); }
inline QRoot5 inv(const QRoot5& x) { return x.inverse(); }
inline double to_double(const QRoot5& x) { return x.to_double(); }

/// Double approximation of sqrt(a + b√5). The value itself usually leaves
/// Q(sqrt 5), so this exists only at the float boundary.
inline double sqrt_to_double(const QRoot5& x) {
    if (x.sign() < 0) throw NegativeRadicand{};
    return sqrt(x.to_bigfloat()).convert_to<double>();
}

/// Canonical text form: "a", "b*sqrt5" or "a+b*sqrt5" (minus signs folded
/// in, zero parts omitted, "0" for zero). parse_qroot5 round-trips it.
inline std::string to_string(const QRoot5& x) {
    if (x.is_zero()) return "0";
    std::string s;
    if (x.a() != 0) s += to_string(x.a());
    if (x.b() != 0) {
        if (x.b() > 0 && !s.empty()) s += "+";
        s += to_string(x.b()) + "*sqrt5";
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const QRoot5& x) { return os << to_string(x); }

/// Parses sums of rational and rational*sqrt5 terms, e.g. "10*sqrt5-22",
/// "1/2 + 3/4*sqrt5", "-sqrt5", "7". Whitespace is ignored.
inline QRoot5 parse_qroot5(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw ParseError("empty algebraic literal");

    QRoot5 result;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        std::size_t start = pos;
        if (compact[pos] == '+' || compact[pos] == '-') ++pos;
        while (pos < compact.size() && compact[pos] != '+' && compact[pos] != '-') ++pos;
        std::string term = compact.substr(start, pos - start);
        if (term.empty() || term == "+" || term == "-")
            throw ParseError("bad algebraic literal: '" + std::string(text) + "'");

        bool is_sqrt5 = false;
        if (auto at = term.find("sqrt5"); at != std::string::npos) {
            if (at + 5 != term.size()) throw ParseError("bad algebraic literal: '" + std::string(text) + "'");
            is_sqrt5 = true;
            term.erase(at);
            if (!term.empty() && term.back() == '*') term.pop_back();
            if (term.empty() || term == "+") term = "1";
            if (term == "-") term = "-1";
        }
        Rational coeff = parse_rational(term);
        result += is_sqrt5 ? QRoot5(Rational(0), coeff) : QRoot5(coeff);
    }
    return result;
}

}  // namespace dioph
