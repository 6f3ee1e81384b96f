// Builds J_h, runs the S-pair test and compares the standard monomials of
// the leading term ideal with B_h.
//
//   demo_ideal_check 3,3,3,4

#include <iostream>

#include "hesskit/hesskit.hpp"

using namespace hesskit;

int main(int argc, char** argv)
{
    try {
        const auto h = HessenbergFunction::make(io::parse_int_list(argc > 1 ? argv[1] : "3,3,3,4"));
        const auto g = poly::jh_generators(h);
        for (const auto& p : g)
            std::cout << "  " << io::to_string(p) << "\n";

        if (const auto bad = poly::groebner_failure(g)) {
            std::cout << "not a Groebner basis: S(g" << bad->first + 1 << ", g" << bad->second + 1
                      << ") reduces to " << io::to_string(bad->remainder) << "\n";
            return 1;
        }
        std::cout << "Groebner basis\n";

        const auto standard = poly::standard_monomials(g);
        const auto basis = regnilp::b_h_basis(h);
        std::cout << standard.size() << " standard monomials, " << basis.size() << " in B_h\n";
        for (const auto& m : standard)
            std::cout << "  " << io::to_string(m) << "\n";
        return standard == basis ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
