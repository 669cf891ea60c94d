#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "secant/detail/format_terms.hpp"
#include "secant/error.hpp"
#include "secant/rational.hpp"
#include "secant/theta_poly.hpp"

namespace secant {

/// Element of Q[T, h]/(T^3, h^(d-1)): cohomology of Pic^3(C) x P^(d-2) for a
/// curve of degree d. T is the pulled-back theta class, h the pulled-back
/// hyperplane class.
///
/// Logically a dense 3 x (d-1) grid, entry (a, b) the coefficient of T^a h^b.
/// Storage holds only the window of h-columns [lo, hi) that contains nonzero
/// entries (trimmed after every operation), column-major, so homogeneous
/// classes cost three columns regardless of d.
class AmbientClass {
public:
    static constexpr int theta_rows = 3;

    explicit AmbientClass(int d) : d_(d) { require_curve_degree(d); }

    static AmbientClass monomial(int d, int theta_pow, int h_pow, Rational coeff = 1)
    {
        AmbientClass r(d);
        if (theta_pow < 0 || h_pow < 0)
            throw DomainError("negative exponent in monomial");
        if (theta_pow < theta_rows && h_pow < r.h_rows() && !coeff.is_zero()) {
            r.lo_ = h_pow;
            r.hi_ = h_pow + 1;
            r.cols_.resize(theta_rows);
            r.cols_[static_cast<std::size_t>(theta_pow)] = std::move(coeff);
        }
        return r;
    }
    static AmbientClass one(int d) { return monomial(d, 0, 0); }
    static AmbientClass theta(int d) { return monomial(d, 1, 0); }
    static AmbientClass h(int d) { return monomial(d, 0, 1); }

    /// Pullback along the projection to Pic^3(C).
    static AmbientClass lift(const ThetaPoly& p, int d)
    {
        AmbientClass r(d);
        r.lo_ = 0;
        r.hi_ = 1;
        r.cols_ = {p.c0, p.c1, p.c2};
        r.trim();
        return r;
    }

    [[nodiscard]] int d() const { return d_; }
    /// h^b survives for b < h_rows() = d - 1.
    [[nodiscard]] int h_rows() const { return d_ - 1; }

    /// Coefficient of T^theta_pow h^h_pow; out-of-range indices are an error.
    [[nodiscard]] const Rational& coeff(int theta_pow, int h_pow) const
    {
        if (theta_pow < 0 || theta_pow >= theta_rows || h_pow < 0 || h_pow >= h_rows())
            throw DomainError("coefficient index (" + std::to_string(theta_pow) + ", " +
                              std::to_string(h_pow) + ") outside [0,2] x [0," +
                              std::to_string(h_rows() - 1) + "]");
        return at(theta_pow, h_pow);
    }

    [[nodiscard]] bool is_zero() const { return lo_ == hi_; }

    /// Every nonzero term has total degree a + b == degree.
    [[nodiscard]] bool is_homogeneous(int degree) const
    {
        for (int b = lo_; b < hi_; ++b)
            for (int a = 0; a < theta_rows; ++a)
                if (!at(a, b).is_zero() && a + b != degree)
                    return false;
        return true;
    }

    /// Terms with T-power exactly theta_pow.
    [[nodiscard]] AmbientClass theta_part(int theta_pow) const
    {
        AmbientClass r = *this;
        for (int b = lo_; b < hi_; ++b)
            for (int a = 0; a < theta_rows; ++a)
                if (a != theta_pow)
                    r.slot(a, b) = Rational();
        r.trim();
        return r;
    }

    AmbientClass& operator+=(const AmbientClass& o) { return accumulate(o, false); }
    AmbientClass& operator-=(const AmbientClass& o) { return accumulate(o, true); }
    AmbientClass& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            clear();
            return *this;
        }
        for (auto& c : cols_)
            if (!c.is_zero())
                c *= s;
        return *this;
    }

    friend AmbientClass operator+(AmbientClass a, const AmbientClass& b) { return a += b; }
    friend AmbientClass operator-(AmbientClass a, const AmbientClass& b) { return a -= b; }
    friend AmbientClass operator-(AmbientClass a) { return a *= Rational(-1); }
    friend AmbientClass operator*(AmbientClass a, const Rational& s) { return a *= s; }
    friend AmbientClass operator*(const Rational& s, AmbientClass a) { return a *= s; }

    /// Truncated product (T^3 = 0, h^(d-1) = 0); zero entries are skipped.
    friend AmbientClass operator*(const AmbientClass& x, const AmbientClass& y)
    {
        x.check_context(y);
        AmbientClass r(x.d_);
        if (x.is_zero() || y.is_zero())
            return r;
        const int lo = x.lo_ + y.lo_;
        const int hi = std::min(x.hi_ + y.hi_ - 1, x.h_rows());
        if (lo >= hi)
            return r;
        r.resize_window(lo, hi);
        for (int b1 = x.lo_; b1 < x.hi_; ++b1)
            for (int a1 = 0; a1 < theta_rows; ++a1) {
                const Rational& u = x.at(a1, b1);
                if (u.is_zero())
                    continue;
                for (int b2 = y.lo_; b2 < y.hi_ && b1 + b2 < hi; ++b2)
                    for (int a2 = 0; a1 + a2 < theta_rows; ++a2) {
                        const Rational& v = y.at(a2, b2);
                        if (!v.is_zero())
                            r.slot(a1 + a2, b1 + b2) += u * v;
                    }
            }
        r.trim();
        return r;
    }
    AmbientClass& operator*=(const AmbientClass& o) { return *this = *this * o; }

    friend bool operator==(const AmbientClass& a, const AmbientClass& b)
    {
        return a.d_ == b.d_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.cols_ == b.cols_;
    }

    /// Descending h-power, then descending T-power: "4*h^3 + 9*T*h^2 + 6*T^2*h".
    [[nodiscard]] std::string to_string() const
    {
        std::vector<std::pair<Rational, std::string>> terms;
        for (int b = hi_ - 1; b >= lo_; --b)
            for (int a = theta_rows - 1; a >= 0; --a)
                if (!at(a, b).is_zero())
                    terms.emplace_back(at(a, b),
                                       detail::join_monomial(detail::power("T", a), detail::power("h", b)));
        return detail::format_terms(terms);
    }

    friend std::ostream& operator<<(std::ostream& os, const AmbientClass& x) { return os << x.to_string(); }

private:
    static const Rational& zero_coefficient()
    {
        static const Rational zero;
        return zero;
    }

    [[nodiscard]] const Rational& at(int a, int b) const
    {
        if (b < lo_ || b >= hi_)
            return zero_coefficient();
        return cols_[static_cast<std::size_t>((b - lo_) * theta_rows + a)];
    }
    /// Mutable entry; b must lie inside the window.
    Rational& slot(int a, int b) { return cols_[static_cast<std::size_t>((b - lo_) * theta_rows + a)]; }

    void clear()
    {
        lo_ = hi_ = 0;
        cols_.clear();
    }

    /// Re-windows to [lo, hi), which must contain the current window.
    void resize_window(int lo, int hi)
    {
        if (is_zero()) {
            lo_ = lo;
            hi_ = hi;
            cols_.assign(static_cast<std::size_t>((hi - lo) * theta_rows), Rational());
            return;
        }
        if (lo == lo_ && hi == hi_)
            return;
        std::vector<Rational> grown(static_cast<std::size_t>((hi - lo) * theta_rows));
        for (int b = lo_; b < hi_; ++b)
            for (int a = 0; a < theta_rows; ++a)
                grown[static_cast<std::size_t>((b - lo) * theta_rows + a)] = std::move(slot(a, b));
        lo_ = lo;
        hi_ = hi;
        cols_ = std::move(grown);
    }

    /// Drops zero columns at both ends of the window.
    void trim()
    {
        auto column_zero = [this](int b) {
            for (int a = 0; a < theta_rows; ++a)
                if (!at(a, b).is_zero())
                    return false;
            return true;
        };
        int lo = lo_;
        int hi = hi_;
        while (lo < hi && column_zero(lo))
            ++lo;
        while (hi > lo && column_zero(hi - 1))
            --hi;
        if (lo == hi) {
            clear();
            return;
        }
        if (lo == lo_ && hi == hi_)
            return;
        std::vector<Rational> kept(std::make_move_iterator(cols_.begin() + (lo - lo_) * theta_rows),
                                   std::make_move_iterator(cols_.begin() + (hi - lo_) * theta_rows));
        lo_ = lo;
        hi_ = hi;
        cols_ = std::move(kept);
    }

    AmbientClass& accumulate(const AmbientClass& o, bool subtract)
    {
        check_context(o);
        if (o.is_zero())
            return *this;
        resize_window(is_zero() ? o.lo_ : std::min(lo_, o.lo_), is_zero() ? o.hi_ : std::max(hi_, o.hi_));
        for (int b = o.lo_; b < o.hi_; ++b)
            for (int a = 0; a < theta_rows; ++a) {
                if (subtract)
                    slot(a, b) -= o.at(a, b);
                else
                    slot(a, b) += o.at(a, b);
            }
        trim();
        return *this;
    }

    void check_context(const AmbientClass& o) const
    {
        if (d_ != o.d_)
            throw ContextMismatch("ambient classes for d = " + std::to_string(d_) + " and d = " +
                                  std::to_string(o.d_) + " cannot be combined");
    }

    int d_;
    int lo_ = 0;
    int hi_ = 0;
    std::vector<Rational> cols_;
};

inline AmbientClass zero_like(const AmbientClass& x) { return AmbientClass(x.d()); }
inline AmbientClass one_like(const AmbientClass& x) { return AmbientClass::one(x.d()); }

/// Exact coefficient of T^theta_pow h^h_pow.
inline Rational coefficient_extract(const AmbientClass& x, int theta_pow, int h_pow)
{
    return x.coeff(theta_pow, h_pow);
}

} // namespace secant
