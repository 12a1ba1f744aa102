// One member of the rank-one deformed family, shown three ways: its exact
// coefficients over the rational-function field, the eigenvalue of the
// difference operator it diagonalizes, and its collapse to the undeformed
// member at v = 1.
#include <iostream>

#include "rootpoly/io.hpp"
#include "rootpoly/onevar.hpp"
#include "rootpoly/orthopoly.hpp"

using namespace rootpoly;

int main() {
    RootSystem a1 = RootSystem::build("A1");

    for (int n = 1; n <= 4; ++n) {
        MultiplicityFn k2 = MultiplicityFn::constant(2, 1);
        OrthoPoly<QRat> p = macdonald_poly(a1, k2, Weight{n});
        std::cout << "n = " << n << ":  " << orthopoly_to_latex(a1, p) << "\n";
        std::cout << "  difference-operator eigenvalue  "
                  << qrat_to_latex(qdiff_eigenvalue(n, 2)) << "\n";

        OrthoPoly<Rational> collapsed = specialize_v1(p);
        std::cout << "  at v = 1:  " << orthopoly_to_latex(a1, collapsed) << "\n\n";
    }
    return 0;
}
