#pragma once

#include <string>

#include "dioph/algebraic.hpp"

namespace dioph {

/// Nonnegative value of the form coeff * sqrt(radicand) with both parts in
/// Q(sqrt 5). Closed under multiplication, which is all the volume algebra
/// needs; identities involving the square root are certified by comparing
/// squares, never through floats.
struct ExactVolume {
    QRoot5 coeff{1};
    QRoot5 radicand{1};

    static ExactVolume plain(QRoot5 v) { return {std::move(v), QRoot5(1)}; }
    static ExactVolume sqrt_of(QRoot5 r) { return {QRoot5(1), std::move(r)}; }

    bool is_plain() const { return radicand == QRoot5(1); }

    /// Exact square: coeff^2 * radicand.
    QRoot5 squared() const { return coeff * coeff * radicand; }

    double to_double() const { return dioph::to_double(coeff) * sqrt_to_double(radicand); }

    friend ExactVolume operator*(const ExactVolume& a, const ExactVolume& b) {
        return {a.coeff * b.coeff, a.radicand * b.radicand};
    }

    /// Same value iff the squares agree (all values are nonnegative).
    friend bool same_value(const ExactVolume& a, const ExactVolume& b) {
        return a.squared() == b.squared();
    }
};

inline ExactVolume pow(const ExactVolume& v, unsigned e) {
    ExactVolume r = ExactVolume::plain(QRoot5(1));
    for (unsigned i = 0; i < e; ++i) r = r * v;
    return r;
}

inline std::string to_string(const ExactVolume& v) {
    if (v.is_plain()) return to_string(v.coeff);
    std::string rad = "sqrt(" + to_string(v.radicand) + ")";
    if (v.coeff == QRoot5(1)) return rad;
    return "(" + to_string(v.coeff) + ")*" + rad;
}

/// One certified closed-form value next to its independent numeric witness.
struct ClosedFormResult {
    std::string name;
    ExactVolume exact;
    double float_value = 0.0;
    bool verified = false;
    double oracle_value = 0.0;
    double oracle_gap = 0.0;
};

}  // namespace dioph
