#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "quadgap/int_types.hpp"
#include "quadgap/util.hpp"

namespace quadgap {

// An imaginary quadratic field K = Q(sqrt d), d < 0 squarefree.
// Instances are interned; pointers returned by make_field stay valid for the
// process lifetime, so QuadInt can hold a plain pointer.
struct FieldDesc {
    i64 d = 0;
    i64 disc = 0;
    bool half_basis = false;  // omega = (1+sqrt d)/2 when d = 1 mod 4, else sqrt d
    int unit_count = 2;       // |U|; 4 for d=-1, 6 for d=-3
    int hphi_unit_constant = 2;  // the constant the ray-class size formula uses
    i64 class_number = 0;
    i64 form_q = 0;  // norm(a,b) = a^2 + q*b^2 (sqrt basis) or a^2 + a*b + q*b^2

    Int norm(const Int& a, const Int& b) const {
        if (half_basis) return a * a + a * b + form_q * b * b;
        return a * a + form_q * b * b;
    }
    i64 norm_i64(i64 a, i64 b) const {
        if (half_basis) return a * a + a * b + form_q * b * b;
        return a * a + form_q * b * b;
    }
};

// Builds (or returns the interned) field descriptor. Fails on non-squarefree
// or nonnegative d, and on d outside the embedded class-number table unless
// an override is supplied.
const FieldDesc& make_field(i64 d, std::optional<i64> class_number_override = std::nullopt);

// Element a + b*omega of O_K in integral-basis coordinates.
struct QuadInt {
    Int a, b;
    const FieldDesc* F = nullptr;

    QuadInt() = default;
    QuadInt(Int a_, Int b_, const FieldDesc& K) : a(std::move(a_)), b(std::move(b_)), F(&K) {}

    bool is_zero() const { return a == 0 && b == 0; }
    Int norm() const { return F->norm(a, b); }
    bool is_unit() const { return norm() == 1; }

    QuadInt conj() const {
        if (F->half_basis) return QuadInt(a + b, -b, *F);
        return QuadInt(a, -b, *F);
    }

    friend QuadInt operator-(const QuadInt& z) { return QuadInt(-z.a, -z.b, *z.F); }
    friend QuadInt operator+(const QuadInt& x, const QuadInt& y) {
        check_same_field(x, y);
        return QuadInt(x.a + y.a, x.b + y.b, *x.F);
    }
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y) {
        check_same_field(x, y);
        return QuadInt(x.a - y.a, x.b - y.b, *x.F);
    }
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        check_same_field(x, y);
        // omega^2 = d (sqrt basis) or omega + (d-1)/4 (half basis)
        Int cross = x.a * y.b + x.b * y.a;
        Int bb = x.b * y.b;
        if (x.F->half_basis) return QuadInt(x.a * y.a - x.F->form_q * bb, cross + bb, *x.F);
        return QuadInt(x.a * y.a - x.F->form_q * bb, cross, *x.F);
    }
    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.F->d == y.F->d && x.a == y.a && x.b == y.b;
    }

    static void check_same_field(const QuadInt& x, const QuadInt& y) {
        if (x.F == nullptr || y.F == nullptr || x.F->d != y.F->d)
            throw std::invalid_argument("mixed-field operands");
    }
};

// Canonical element order used everywhere: (norm, a, b).
bool elem_less(const QuadInt& x, const QuadInt& y);

// The |U| units of O_K.
std::vector<QuadInt> units_of(const FieldDesc& K);

// Visits every z with 0 < norm(z) <= X exactly once in (norm, a, b) order.
// Streams through norm windows of `window_hint` values, so memory stays
// bounded for any X instead of silently truncating.
void for_each_norm_le(const FieldDesc& K, i64 X, const std::function<void(i64 a, i64 b, i64 norm)>& fn,
                      i64 window_hint = i64(1) << 22);

// Materialized variant; refuses (BudgetError) above max_elements.
std::vector<QuadInt> elements_norm_le(const FieldDesc& K, i64 X, i64 max_elements = i64(1) << 25);

// Lower-triangular lattice basis rows (a, 0), (b, c) w.r.t. (1, omega).
// Index (= ideal norm when the lattice is an ideal) is a*c.
struct Hnf {
    Int a, b, c;
    Int index() const { return a * c; }
    bool contains(const Int& x, const Int& y) const {
        if (a == 0 || c == 0) return false;
        if (y % c != 0) return false;
        return (x - (y / c) * b) % a == 0;
    }
};

// Exact count of u = shift (mod L) with norm(u) <= x; zero counted when it
// lies in the class. Per-row interval arithmetic, no enumeration.
Int count_in_class(const FieldDesc& K, const Hnf& L, const QuadInt& shift, const Int& x);

}  // namespace quadgap
