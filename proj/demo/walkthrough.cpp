// A short tour: derive under G, compare with brute force, check one closed form.
#include <iostream>

#include "permgram/verify/registry.hpp"

using namespace permgram;

int main()
{
    auto G = std::make_shared<const Grammar>(builtin_grammar("G"));
    LaurentPoly z = LaurentPoly::variable(G->vars(), "z");

    DerivationCache dz(G, z);
    std::cout << "D^4(z) = " << render(dz.at(4)) << '\n';
    std::cout << "P_4    = " << render(enumerate_poly(4, Family::P)) << '\n';

    Permutation pi({5, 3, 4, 6, 2, 1});
    Labeling lab = label(pi, LabelScheme::exterior);
    std::cout << "labels of 534621 and the appended 0:";
    for (const auto& l : lab.labels)
        std::cout << ' ' << l;
    std::cout << "\nweight " << render(lab.weight) << '\n';

    std::cout << "L_n(0), n = 0..8:";
    for (int n = 0; n <= 8; ++n)
        std::cout << ' ' << evaluate(specialized_poly(n, Target::L), {{"x", Rational(0)}}).get_str();
    std::cout << '\n';

    Series gessel = theorem_rhs({"gessel", {{"x", Rational(2)}}, 6});
    std::cout << "Gessel e.g.f. at x = 2, n! [t^n]:";
    for (std::size_t n = 0; n <= 6; ++n)
        std::cout << ' ' << gessel.egf_coeff(n).get_str();
    std::cout << "\nT_n(2) by enumeration:          ";
    for (int n = 0; n <= 6; ++n)
        std::cout << ' ' << evaluate(specialized_poly(n, Target::GesselT), {{"x", Rational(2)}}).get_str();
    std::cout << '\n';

    CheckSpec ode;
    ode.id = "ode";
    Report r = run_check(ode);
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.spec.id << ": " << r.title << '\n';
    return r.passed ? 0 : 1;
}
