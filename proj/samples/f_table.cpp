// Prints dim T^i of the cones over rational normal curves, and the same
// numbers recovered by brute force on a small fat point.

#include "cotangent/cotangent.hpp"

#include <iostream>

int main() {
    using namespace cotangent;
    std::cout << "d";
    for (int i = 1; i <= 6; ++i) std::cout << "\tf_" << i;
    std::cout << "\n";
    for (int d = 3; d <= 10; ++d) {
        std::cout << d;
        for (std::size_t i = 1; i <= 6; ++i) std::cout << "\t" << f_val(i, d);
        std::cout << "\n";
    }

    const auto z2 = make_fat_point(2);
    for (unsigned i = 1; i <= 3; ++i)
        std::cout << "T^" << i << "(Z_2): Harrison " << harrison_dim(z2, CoefficientModule::regular, i + 1)
                  << ", formula " << fatpoint_tdim(2, i) << "\n";
}
