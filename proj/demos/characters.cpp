// At multiplicity one, the orthogonal family coincides with the Weyl
// characters, so exact representation-theoretic data (weight multiplicities,
// dimensions) drops out of the constant-term machinery for free.  This demo
// prints the expansion of a few members and their dimensions.
#include <iostream>

#include "rootpoly/io.hpp"
#include "rootpoly/orthopoly.hpp"

using namespace rootpoly;

int main() {
    RootSystem a2 = RootSystem::build("A2");
    MultiplicityFn one = MultiplicityFn::constant(1, a2.num_classes());

    for (Weight lam : {Weight{1, 0}, Weight{1, 1}, Weight{2, 1}, Weight{2, 2}}) {
        OrthoPoly<Rational> p = jacobi_poly(a2, one, lam);
        std::cout << orthopoly_to_latex(a2, p) << "\n";

        // Dimension = sum over the support of (weight multiplicity) x (orbit
        // size); at k = 1 the expansion coefficients are the multiplicities.
        Rational dim(0);
        for (std::size_t i = 0; i < p.support.size(); ++i)
            dim += p.coeffs[i] * Rational(static_cast<long>(a2.weyl_orbit(p.support[i]).size()));
        std::cout << "  dimension " << rat_to_string(dim) << ", squared norm "
                  << rat_to_string(p.norm2) << "\n\n";
    }
    return 0;
}
