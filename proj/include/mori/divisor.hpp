#pragma once

// Divisor classes and 2-ray cones in the rank-2 lattice generated by H (the
// hyperplane pull-back) and E (the exceptional divisor). A class is written
// a*H + b*E with exact rational coefficients.

#include "mori/errors.hpp"
#include "mori/rational.hpp"

#include <string>
#include <utility>

namespace mori {

struct DivisorClass {
    Rat a; // coefficient of H
    Rat b; // coefficient of E

    DivisorClass() = default;
    DivisorClass(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    DivisorClass(long long a_, long long b_) : a(a_), b(b_) {}

    bool operator==(const DivisorClass& other) const {
        return a == other.a && b == other.b;
    }
    bool operator!=(const DivisorClass& other) const { return !(*this == other); }

    DivisorClass operator+(const DivisorClass& other) const {
        return {a + other.a, b + other.b};
    }
    DivisorClass operator-(const DivisorClass& other) const {
        return {a - other.a, b - other.b};
    }
    DivisorClass scaled(const Rat& s) const { return {a * s, b * s}; }
    bool is_zero() const { return a == 0 && b == 0; }

    // "3H-2E", "H", "-E", "0"
    std::string pretty() const {
        if (is_zero()) return "0";
        std::string out;
        auto append = [&out](const Rat& c, const char* symbol) {
            if (c == 0) return;
            std::string mag = rat_to_string(c < 0 ? Rat(-c) : c);
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? "-" : "+";
            }
            if (mag != "1") out += mag;
            out += symbol;
        };
        append(a, "H");
        append(b, "E");
        return out;
    }
};

inline DivisorClass class_H() { return {1, 0}; }
inline DivisorClass class_E() { return {0, 1}; }
inline DivisorClass class_H_minus_E() { return {1, -1}; }
inline DivisorClass class_rH_minus_E(long long r) { return {r, -1}; }

// Scale to a primitive integer vector; orientation: a > 0, or a = 0 and b > 0.
inline DivisorClass primitive_ray(const DivisorClass& ray) {
    if (ray.is_zero())
        throw classification_error(errc::range_error, "zero vector is not a ray");
    BigInt num_a = numerator(ray.a), num_b = numerator(ray.b);
    BigInt den_a = denominator(ray.a), den_b = denominator(ray.b);
    BigInt lcm_den = den_a / gcd(den_a, den_b) * den_b;
    BigInt ia = num_a * (lcm_den / den_a);
    BigInt ib = num_b * (lcm_den / den_b);
    BigInt g = gcd(abs(ia), abs(ib));
    ia /= g;
    ib /= g;
    if (ia < 0 || (ia == 0 && ib < 0)) {
        ia = -ia;
        ib = -ib;
    }
    return {Rat(ia), Rat(ib)};
}

inline Rat ray_det(const DivisorClass& u, const DivisorClass& v) {
    return u.a * v.b - u.b * v.a;
}

// A 2-dimensional cone spanned by two non-proportional primitive rays.
// Ray order is meaningful: decompositions list cones with shared boundary
// rays in matching positions.
struct Cone2 {
    DivisorClass ray1;
    DivisorClass ray2;

    Cone2() = default;
    Cone2(const DivisorClass& r1, const DivisorClass& r2)
        : ray1(primitive_ray(r1)), ray2(primitive_ray(r2)) {
        if (ray_det(ray1, ray2) == 0)
            throw classification_error(errc::range_error,
                                       "cone rays must not be proportional");
    }

    bool operator==(const Cone2& other) const {
        return ray1 == other.ray1 && ray2 == other.ray2;
    }
    bool operator!=(const Cone2& other) const { return !(*this == other); }

    std::string pretty() const {
        return "<" + ray1.pretty() + ", " + ray2.pretty() + ">";
    }
};

// Barycentric coordinates of x in the basis (ray1, ray2).
inline std::pair<Rat, Rat> cone_coordinates(const Cone2& cone, const DivisorClass& x) {
    Rat det = ray_det(cone.ray1, cone.ray2);
    Rat alpha = ray_det(x, cone.ray2) / det;
    Rat beta = ray_det(cone.ray1, x) / det;
    return {alpha, beta};
}

inline bool cone_contains(const Cone2& cone, const DivisorClass& x) {
    auto [alpha, beta] = cone_coordinates(cone, x);
    return alpha >= 0 && beta >= 0;
}

inline bool cone_contains_interior(const Cone2& cone, const DivisorClass& x) {
    auto [alpha, beta] = cone_coordinates(cone, x);
    return alpha > 0 && beta > 0;
}

inline bool cone_subset(const Cone2& inner, const Cone2& outer) {
    return cone_contains(outer, inner.ray1) && cone_contains(outer, inner.ray2);
}

// Equality as sets of rays, ignoring ray order.
inline bool same_cone(const Cone2& lhs, const Cone2& rhs) {
    return (lhs.ray1 == rhs.ray1 && lhs.ray2 == rhs.ray2) ||
           (lhs.ray1 == rhs.ray2 && lhs.ray2 == rhs.ray1);
}

} // namespace mori
