// The scaled large-degree values of the one-parameter family approach the
// even Dunkl kernel at rate 1/N.  This demo tabulates the gap as N doubles;
// the k = 0 column is an exact trigonometric identity, so it shows only
// floating-point roundoff.
#include <cstdio>

#include "rootpoly/onevar.hpp"

using namespace rootpoly;

int main() {
    std::printf("N,k=0,k=1,k=2\n");
    for (int bigN : {25, 50, 100, 200, 400, 800}) {
        std::printf("%d", bigN);
        for (int k = 0; k <= 2; ++k)
            std::printf(",%.3e", scaling_limit_gap(bigN, k, 1.0, 1.0));
        std::printf("\n");
    }
    return 0;
}
