// Walks one Hessenberg function through fillings, the h-tableau-tree and
// back: every filling's monomial lies in B_h and psi_h recovers the filling.
//
//   demo_basis_tour 2,4,4,5,5

#include <iostream>

#include "hesskit/hesskit.hpp"

using namespace hesskit;

int main(int argc, char** argv)
{
    try {
        const auto h = HessenbergFunction::make(io::parse_int_list(argc > 1 ? argv[1] : "3,3,3,4"));
        const DegreeTuple beta(h);
        std::cout << "beta = (" << io::join(beta.display()) << ")\n";

        const auto basis = regnilp::b_h_basis(h);
        std::cout << basis.size() << " basis monomials\n";

        int mismatches = 0;
        for (const auto& t : enumerate_fillings(h, Shape::row(h.n()))) {
            const Monomial m = phi(h, t);
            const Filling back = regnilp::psi_h(h, m);
            std::cout << io::to_string(t) << " -> " << io::to_string(m) << " -> " << io::to_string(back) << "\n";
            if (!(back == t))
                ++mismatches;
        }
        std::cout << (mismatches == 0 ? "psi_h inverts phi\n" : "psi_h does not invert phi\n");
        return mismatches == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
