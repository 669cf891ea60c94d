#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secant/binomial.hpp"
#include "secant/degree.hpp"
#include "secant/grr.hpp"
#include "secant/porteous.hpp"
#include "secant/random_elements.hpp"

namespace secant {

struct Counterexample {
    int d = 0; ///< 0 for checks that do not depend on d
    std::string expected;
    std::string actual;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

struct VerifyReport {
    int d_min = 8;
    int d_max = 40;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

struct VerifyOptions {
    int d_min = 8;
    int d_max = 40;
    std::uint64_t seed = 20240601;
    int ring_samples = 200;
    int binomial_bound = 12;
    /// Test-only fault injection: adds h^2 to the divided-series c_2 before
    /// it reaches any downstream check.
    bool perturb_c2 = false;
};

namespace detail {

/// Accumulates one named check; keeps only the first counterexample.
class CheckBuilder {
public:
    explicit CheckBuilder(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, int d, const std::function<std::string()>& expected,
                const std::function<std::string()>& actual)
    {
        if (ok || !result_.passed)
            return;
        result_.passed = false;
        result_.counterexample = Counterexample{d, expected(), actual()};
    }

    template <class T>
    void expect_equal(const T& expected, const T& actual, int d)
    {
        expect(expected == actual, d, [&] { return str(expected); }, [&] { return str(actual); });
    }

    /// Runs body, turning an exception into a failure at d.
    void guard(int d, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            expect(false, d, [] { return std::string("no error"); }, [&] { return std::string(e.what()); });
        }
    }

    [[nodiscard]] CheckResult result() const { return result_; }

private:
    template <class T>
    static std::string str(const T& x)
    {
        if constexpr (std::is_arithmetic_v<T>)
            return std::to_string(x);
        else if constexpr (std::is_same_v<T, std::string>)
            return x;
        else
            return x.to_string();
    }

    CheckResult result_;
};

/// Everything the per-d checks compare, computed once per curve degree.
struct DegreeData {
    int d;
    BundleCharacters bundles;
    AmbientSeries divided;
    std::vector<AmbientClass> closed_chern;
    std::vector<AmbientClass> recurrence; ///< d_0 .. d_(d-5) from closed c_i
};

inline DegreeData compute_degree_data(int d, bool perturb_c2)
{
    AmbientSeries divided = chern_difference(d);
    if (perturb_c2) {
        std::vector<AmbientClass> c = divided.coefficients();
        c[2] += AmbientClass::monomial(d, 0, 2);
        divided = AmbientSeries(std::move(c));
    }
    std::vector<AmbientClass> closed = chern_classes_closed_form(d);
    std::vector<AmbientClass> rec = determinant_recurrence(closed, d - 5);
    return {d, compute_bundle_characters(d), std::move(divided), std::move(closed), std::move(rec)};
}

template <class R, class Gen>
void check_ring_axioms(CheckBuilder& check, int samples, Gen&& gen, const R& unit)
{
    for (int i = 0; i < samples; ++i) {
        const R a = gen(), b = gen(), c = gen();
        const R zero = zero_like(unit);
        check.expect_equal((a * b) * c, a * (b * c), 0);
        check.expect_equal(a * b, b * a, 0);
        check.expect_equal(a * (b + c), a * b + a * c, 0);
        check.expect_equal(a + b, b + a, 0);
        check.expect_equal((a + b) + c, a + (b + c), 0);
        check.expect_equal(a * unit, a, 0);
        check.expect_equal(a + zero, a, 0);
        check.expect_equal(a - a, zero, 0);
    }
}

} // namespace detail

inline CheckResult check_ring_axioms(const VerifyOptions& opt)
{
    detail::CheckBuilder check("ring axioms (ThetaPoly, UpstreamClass, AmbientClass)");
    RandomElements rnd(opt.seed);
    check.guard(0, [&] {
        detail::check_ring_axioms(check, opt.ring_samples, [&] { return rnd.theta_poly(); }, ThetaPoly::one());
        detail::check_ring_axioms(check, opt.ring_samples, [&] { return rnd.upstream(); }, UpstreamClass::one());
        for (int i = 0; i < opt.ring_samples; ++i) {
            const int d = rnd.uniform(8, 12);
            detail::check_ring_axioms(check, 1, [&] { return rnd.ambient(d); }, AmbientClass::one(d));
            const AmbientClass x = rnd.ambient(d);
            const AmbientClass t = AmbientClass::theta(d);
            AmbientClass hpow = AmbientClass::one(d);
            for (int k = 0; k < d - 1; ++k)
                hpow *= AmbientClass::h(d);
            check.expect_equal(AmbientClass(d), x * (t * t * t), d);
            check.expect_equal(AmbientClass(d), x * hpow, d);
        }
    });
    return check.result();
}

inline CheckResult check_series_contracts(const VerifyOptions& opt)
{
    detail::CheckBuilder check("series inverse / exp / subst contracts");
    RandomElements rnd(opt.seed + 1);
    check.guard(0, [&] {
        for (int i = 0; i < opt.ring_samples / 4 + 1; ++i) {
            const int d = rnd.uniform(8, 10);
            const int order = rnd.uniform(1, 5);
            const AmbientSeries a = rnd.ambient_series(d, order, true);
            const AmbientSeries one = AmbientSeries::one(AmbientClass::one(d), order);
            check.expect_equal(one, a * series_inv(a), d);
            const AmbientSeries x = rnd.ambient_series(d, order, false);
            const AmbientSeries y = rnd.ambient_series(d, order, false);
            check.expect_equal(series_exp(x + y), series_exp(x) * series_exp(y), d);
            check.expect_equal(a, series_subst(a, AmbientSeries::variable(AmbientClass::one(d), order)), d);
        }
    });
    return check.result();
}

inline CheckResult check_gamma_relations()
{
    detail::CheckBuilder check("upstream relations and ch(L) = 1 + 3f + gamma - f*T");
    const UpstreamClass f = UpstreamClass::f();
    const UpstreamClass g = UpstreamClass::gamma();
    const UpstreamClass f_theta = UpstreamClass{{}, ThetaPoly::theta(), {}};
    const UpstreamClass c1 = poincare_c1();
    check.expect_equal(f_theta * Rational(-2), g * g, 0);
    check.expect_equal(UpstreamClass{}, f * g, 0);
    check.expect_equal(UpstreamClass{}, f * f, 0);
    check.expect_equal(UpstreamClass{}, g * g * g, 0);
    check.expect_equal(f_theta * Rational(-2), c1 * c1, 0);
    check.expect_equal(UpstreamClass{}, c1 * c1 * c1, 0);
    check.expect_equal(UpstreamClass::one() + f * Rational(3) + g - f_theta, ch_poincare(), 0);
    return check.result();
}

inline CheckResult check_lemmas()
{
    detail::CheckBuilder check("pushforward and Todd lemmas");
    const UpstreamClass f = UpstreamClass::f();
    check.expect_equal(ThetaPoly{}, pushforward_q(UpstreamClass::one()), 0);
    check.expect_equal(ThetaPoly::one(), pushforward_q(f), 0);
    check.expect_equal(ThetaPoly{}, pushforward_q(UpstreamClass::gamma()), 0);
    check.expect_equal(ThetaPoly::theta(), pushforward_q(UpstreamClass{{}, ThetaPoly::theta(), {}}), 0);
    check.expect_equal(ThetaPoly::one(), todd_picard(), 0);
    check.expect_equal(UpstreamClass::one() - f, todd_from_chern(f * Rational(-2), UpstreamClass{}), 0);
    check.expect_equal(UpstreamClass::one() - f, todd_product(), 0);
    return check.result();
}

inline CheckResult check_binomials(const VerifyOptions& opt)
{
    detail::CheckBuilder check("binomial identities (upper negation, Vandermonde, Pascal)");
    check.expect(verify_binomial_identities(opt.binomial_bound), 0, [] { return std::string("true"); },
                 [] { return std::string("false"); });
    return check.result();
}

inline VerifyReport run_verification(const VerifyOptions& opt)
{
    if (opt.d_min < 8 || opt.d_max < opt.d_min)
        throw DomainError("verification range [" + std::to_string(opt.d_min) + ", " + std::to_string(opt.d_max) +
                          "] must satisfy 8 <= d_min <= d_max");

    VerifyReport report{opt.d_min, opt.d_max, {}};
    report.checks.push_back(check_ring_axioms(opt));
    report.checks.push_back(check_series_contracts(opt));
    report.checks.push_back(check_gamma_relations());
    report.checks.push_back(check_lemmas());

    detail::CheckBuilder ch_h("ch(H) = 2 - T");
    detail::CheckBuilder ch_g("ch(G) = (d-4) - T");
    detail::CheckBuilder ci("c_i closed form = divided series");
    detail::CheckBuilder expo("exponential closed form = divided series");
    detail::CheckBuilder five("five-sum expansion = divided series");
    detail::CheckBuilder three("determinant: cofactor = recurrence = closed form");
    detail::CheckBuilder lemma("d_n closed form = recurrence (3 <= n <= d-5)");
    detail::CheckBuilder deg("degree = Berzolari binom(d-2,3) - 2(d-4), all methods");

    for (int d = opt.d_min; d <= opt.d_max; ++d) {
        std::optional<detail::DegreeData> data;
        ch_h.guard(d, [&] { data = detail::compute_degree_data(d, opt.perturb_c2); });
        if (!data)
            continue;
        const int n = d - 5;
        ch_h.expect_equal(ThetaPoly{2, -1, 0}, data->bundles.h_bundle.chern_character, d);
        ch_g.expect_equal(ThetaPoly{d - 4, -1, 0}, data->bundles.g_bundle.chern_character, d);
        ci.guard(d, [&] {
            for (int i = 1; i <= n; ++i)
                ci.expect_equal(data->closed_chern[static_cast<std::size_t>(i)], data->divided[i], d);
        });
        expo.guard(d, [&] { expo.expect_equal(chern_difference_exponential_form(d, n), data->divided, d); });
        five.guard(d, [&] { five.expect_equal(chern_difference_five_sum(d, n), data->divided, d); });

        std::optional<AmbientClass> x_cofactor;
        three.guard(d, [&] {
            x_cofactor = porteous_det_cofactor(data->divided.coefficients()).x1;
            const AmbientClass& x_rec = data->recurrence.back();
            const AmbientClass x_closed = dn_closed_form(n, d);
            three.expect_equal(x_closed, *x_cofactor, d);
            three.expect_equal(x_closed, x_rec, d);
        });
        lemma.guard(d, [&] {
            for (int k = 3; k <= n; ++k)
                lemma.expect_equal(dn_closed_form(k, d), data->recurrence[static_cast<std::size_t>(k)], d);
        });
        deg.guard(d, [&] {
            const std::int64_t expected = berzolari(d, curve_genus);
            if (x_cofactor)
                deg.expect_equal(expected, degree_of_class({*x_cofactor, PorteousMethod::cofactor_determinant}), d);
            deg.expect_equal(expected, degree_of_class({data->recurrence.back(), PorteousMethod::recurrence}), d);
            deg.expect_equal(expected, secant3_degree(d, PorteousMethod::closed_form), d);
        });
    }
    for (auto* b : {&ch_h, &ch_g, &ci, &expo, &five, &three, &lemma})
        report.checks.push_back(b->result());
    report.checks.push_back(check_binomials(opt));
    report.checks.push_back(deg.result());
    return report;
}

} // namespace secant
