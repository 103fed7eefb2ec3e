#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "dioph/algebraic.hpp"
#include "dioph/errors.hpp"

namespace dioph {

/// Univariate polynomial with exact Q(sqrt 5) coefficients, stored in
/// ascending degree with the leading coefficient nonzero (the zero
/// polynomial is the empty coefficient list).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<QRoot5> ascending) : c_(std::move(ascending)) { strip(); }

    static Poly constant(QRoot5 v) { return Poly({std::move(v)}); }
    /// x^k
    static Poly monomial(std::size_t k, QRoot5 coeff = QRoot5(1)) {
        std::vector<QRoot5> c(k + 1, QRoot5(0));
        c[k] = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    const std::vector<QRoot5>& coeffs() const { return c_; }
    const QRoot5& operator[](std::size_t i) const { return c_[i]; }
    const QRoot5& leading() const { return c_.back(); }

    QRoot5 eval(const QRoot5& x) const {
        QRoot5 acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval(double x) const {
        // Horner on cached double coefficients would be an optimization; the
        // degrees here are tiny so we convert on the fly.
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<QRoot5> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * QRoot5(static_cast<long>(i));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<QRoot5> c(std::max(p.c_.size(), q.c_.size()), QRoot5(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
        for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& p) {
        std::vector<QRoot5> c = p.c_;
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly();
        std::vector<QRoot5> c(p.c_.size() + q.c_.size() - 1, QRoot5(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& p, const QRoot5& s) {
        std::vector<QRoot5> c = p.c_;
        for (auto& v : c) v *= s;
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& p, const Poly& q) = default;

    /// Exact Euclidean division: returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw ZeroDivision{};
        Poly rem = *this;
        if (rem.degree() < d.degree()) return {Poly(), rem};
        std::vector<QRoot5> q(rem.c_.size() - d.c_.size() + 1, QRoot5(0));
        QRoot5 lead_inv = d.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            std::size_t shift = rem.degree() - d.degree();
            QRoot5 factor = rem.leading() * lead_inv;
            q[shift] = factor;
            rem = rem - Poly::monomial(shift, factor) * d;
        }
        return {Poly(std::move(q)), rem};
    }

    Poly monic() const {
        if (is_zero()) throw ZeroPolynomial{};
        return *this * leading().inverse();
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<QRoot5> c_;  // ascending degree
};

/// gcd over the field Q(sqrt 5), returned monic (or zero if both are zero).
inline Poly poly_gcd(Poly p, Poly q) {
    while (!q.is_zero()) {
        Poly r = p.divmod(q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return p.is_zero() ? p : p.monic();
}

/// true iff gcd(p, p') is constant, i.e. p has no repeated roots.
inline bool is_square_free(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial{};
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

/// true iff q divides p exactly.
inline bool factor_check_divides(const Poly& p, const Poly& q) {
    if (q.is_zero()) return p.is_zero();
    return p.divmod(q).second.is_zero();
}

/// The ladder f_i = (n-i)!/n! * p^{(i)} for i = 0..n, so that f_0 = p, each
/// f_i has degree n-i and f_i' = (n-i) * f_{i+1}. Exact.
inline std::vector<Poly> scaled_derivatives(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial{};
    int n = p.degree();
    std::vector<Poly> f(static_cast<std::size_t>(n) + 1);
    f[0] = p;
    for (int i = 1; i <= n; ++i) {
        // p^{(i)} = f_{i-1}' * n!/(n-i+1)!  =>  f_i = f_{i-1}' / (n-i+1)
        f[i] = f[i - 1].derivative() * QRoot5(Rational(1, n - i + 1));
    }
    return f;
}

/// Sign data of the derivative ladder at one point: the signs of all f_i and
/// of the combinations F_i = f_i^2 - f_{i-1} f_{i+1} (with F_0 = p and
/// F_n = f_n^2 reported), plus the pair counts N+ / N- they induce.
///
/// A pair (i, i+1) is counted when its two elements carry the same sign,
/// where the elements entering the pair filter are the squares f_0^2, f_n^2
/// at the ends (always positive) and F_1..F_{n-1} in between. N+ counts the
/// pairs on which f_i, f_{i+1} agree in sign, N- the pairs on which they
/// differ. These counts carry one-sided root bounds: the polynomial has at
/// most N-(x) real roots above x and at most N+(x) real roots below x.
struct SignTable {
    QRoot5 point;
    std::vector<int> f_signs;  // signs of f_0..f_n
    std::vector<int> F_signs;  // signs of F_0..F_n, F_0 = p itself
    int n_plus = 0;            // bounds the roots below the point
    int n_minus = 0;           // bounds the roots above the point
};

/// Builds the sign table of square-free p at x. A vanishing f_i(x) or
/// F_i(x) is an error, not a skipped entry: dropping zeros would make the
/// root bound unsound, so the caller must move the query point instead.
inline SignTable newton_sylvester_table(const Poly& p, const QRoot5& x) {
    if (p.is_zero()) throw ZeroPolynomial{};
    if (!is_square_free(p)) throw NotSquareFree{};
    int n = p.degree();
    std::vector<Poly> f = scaled_derivatives(p);

    SignTable t;
    t.point = x;
    std::vector<QRoot5> fx(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        fx[i] = f[i].eval(x);
        int s = fx[i].sign();
        if (s == 0) throw ZeroSignAtPoint("f_" + std::to_string(i) + " vanishes at the query point");
        t.f_signs.push_back(s);
    }
    for (int i = 0; i <= n; ++i) {
        QRoot5 Fi = (i == 0) ? fx[0] : (i == n ? fx[n] * fx[n] : fx[i] * fx[i] - fx[i - 1] * fx[i + 1]);
        int s = Fi.sign();
        if (s == 0) throw ZeroSignAtPoint("F_" + std::to_string(i) + " vanishes at the query point");
        t.F_signs.push_back(s);
    }
    // Pair filter. The end elements are the squares f_0^2 and f_n^2, so the
    // pairs (0,1) and (n-1,n) are counted whenever F_1 resp. F_{n-1} is
    // positive; in the interior the filter is plain sign equality.
    for (int i = 0; i < n; ++i) {
        int lo = (i == 0) ? 1 : t.F_signs[i];
        int hi = (i + 1 == n) ? 1 : t.F_signs[i + 1];
        if (lo != hi) continue;
        if (t.f_signs[i] == t.f_signs[i + 1])
            ++t.n_plus;
        else
            ++t.n_minus;
    }
    return t;
}

/// Upper bound on the number of real roots of square-free p in (a, b).
/// The roots in (a, b) are among both the roots above a (at most N-(a))
/// and the roots below b (at most N+(b)), so min(N-(a), N+(b)) bounds them.
inline int max_roots_in_interval(const Poly& p, const QRoot5& a, const QRoot5& b) {
    if (!(a < b)) throw std::invalid_argument("interval endpoints must satisfy a < b");
    SignTable ta = newton_sylvester_table(p, a);
    SignTable tb = newton_sylvester_table(p, b);
    return std::max(std::min(ta.n_minus, tb.n_plus), 0);
}

/// Independent root-count oracle: counts sign changes of p on a grid of
/// width <= tol over [a, b]. Float evaluation, but any value smaller than
/// 1e-9 in magnitude is re-decided exactly before it contributes a sign.
/// Never overcounts the roots of a square-free polynomial; counts them
/// exactly once tol is below the root separation.
inline int count_roots_bisection(const Poly& p, double a, double b, double tol) {
    if (!(a < b)) throw std::invalid_argument("interval endpoints must satisfy a < b");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");

    auto exact_sign = [&p](double x) { return p.eval(QRoot5(rational_from_double(x))).sign(); };
    auto sign_at = [&](double x) {
        double v = p.eval(x);
        if (std::abs(v) < 1e-9) return exact_sign(x);
        return v > 0 ? 1 : -1;
    };

    auto steps = static_cast<std::size_t>(std::ceil((b - a) / tol));
    double h = (b - a) / static_cast<double>(steps);

    int count = 0;
    int prev = sign_at(a);
    for (std::size_t i = 1; i <= steps; ++i) {
        double x = (i == steps) ? b : a + h * static_cast<double>(i);
        int s = sign_at(x);
        if (s == 0) {
            // Exact root at a grid point: count it and restart the scan sign
            // just past it.
            ++count;
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace dioph
