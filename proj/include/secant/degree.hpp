#pragma once

#include <cstdint>
#include <string>

#include "secant/ambient_class.hpp"
#include "secant/binomial.hpp"
#include "secant/porteous.hpp"

namespace secant {

/// deg(T^2 h^(d-2)): T^2 = 2 on the Jacobian of a genus-2 curve, and
/// h^(d-2) is a point class on P^(d-2).
inline constexpr int theta_squared_degree = 2;

/// Degree of a top-dimensional class. Only the T^2 h^(d-2) coefficient pairs
/// nontrivially; every other monomial has the wrong dimension.
inline Rational degree_pairing(const AmbientClass& x)
{
    return Rational(theta_squared_degree) * coefficient_extract(x, 2, x.d() - 2);
}

/// Berzolari's count binom(d-2, 3) - g (d-4); for g = 2 it is the degree of
/// the third secant variety.
inline std::int64_t berzolari(int d, int g = curve_genus)
{
    require_curve_degree(d);
    if (g < 0)
        throw DomainError("genus must be non-negative");
    return Rational(binomial(d - 2, 3) - BigInt(g) * BigInt(d - 4)).to_int64();
}

/// Degree of x1 * h^5, the degree of the third secant variety.
inline std::int64_t degree_of_class(const PorteousResult& result)
{
    const AmbientClass& x1 = result.x1;
    const int d = x1.d();
    AmbientClass h5 = AmbientClass::monomial(d, 0, 5);
    const AmbientClass top = x1 * h5;
    if (!(top == top.theta_part(2)) || !top.is_homogeneous(d))
        throw ConsistencyError("x1 * h^5 = " + top.to_string() + " has terms outside T^2 h^(d-2)");
    const Rational deg = degree_pairing(top);
    if (!deg.is_integer())
        throw IntegralityError("degree " + deg.to_string() + " of x1 * h^5 (" + std::string(to_string(result.method)) +
                               ", d = " + std::to_string(d) + ") is not an integer");
    return deg.to_int64();
}

inline std::int64_t secant3_degree(int d, PorteousMethod method)
{
    require_curve_degree(d);
    return degree_of_class(porteous_class(d, method));
}

struct DegreeReport {
    int d = 0;
    std::int64_t degree_porteous = 0;    ///< cofactor determinant of the Porteous matrix
    std::int64_t degree_recurrence = 0;  ///< recurrence for the leading minors
    std::int64_t degree_closed_form = 0; ///< closed form of the determinant
    std::int64_t degree_berzolari = 0;
    bool methods_agree = false;

    friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

inline DegreeReport degree_report(int d)
{
    DegreeReport r;
    r.d = d;
    r.degree_porteous = secant3_degree(d, PorteousMethod::cofactor_determinant);
    r.degree_recurrence = secant3_degree(d, PorteousMethod::recurrence);
    r.degree_closed_form = secant3_degree(d, PorteousMethod::closed_form);
    r.degree_berzolari = berzolari(d, curve_genus);
    r.methods_agree = r.degree_porteous == r.degree_recurrence && r.degree_porteous == r.degree_closed_form &&
                      r.degree_porteous == r.degree_berzolari;
    return r;
}

} // namespace secant
