// Walks through the degree computation for one curve degree, printing each
// intermediate class.
//
//   porteous_walkthrough [d]      (default d = 10)

#include <cstdlib>
#include <iostream>

#include "secant/secant.hpp"

int main(int argc, char** argv)
{
    using namespace secant;
    const int d = argc > 1 ? std::atoi(argv[1]) : 10;
    try {
        require_curve_degree(d);

        std::cout << "Poincare bundle:    ch(L) = " << ch_poincare() << "\n"
                  << "Todd classes:       td(C x Pic) = " << todd_product() << ", td(Pic) = " << todd_picard() << "\n";

        const BundleCharacters bundles = compute_bundle_characters(d);
        std::cout << "GRR:                ch(H) = " << bundles.h_bundle.chern_character
                  << ", ch(G) = " << bundles.g_bundle.chern_character << "\n"
                  << "                    c_t(G) = " << chern_polynomial(bundles.g_bundle, 2) << "\n";

        const int n = d - 5;
        std::cout << "c_t(F)            = " << chern_series_F(d, n) << "\n"
                  << "c_t(E)            = " << chern_series_E(d, n) << "\n"
                  << "c_t(F - E)        = " << chern_difference(d) << "\n";

        for (PorteousMethod m : all_porteous_methods)
            std::cout << "x1 [" << to_string(m) << "] = " << porteous_class(d, m).x1 << "\n";

        const DegreeReport r = degree_report(d);
        std::cout << "deg Sec_3(C)      = " << r.degree_porteous << " (Berzolari: " << r.degree_berzolari << ")\n";
        return r.methods_agree ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
