// Walks through the worked example: roots, parabolic data, support bounds and
// the quasi-integrability verdict.
#include <iostream>

#include "taffine/taffine.hpp"

using namespace taffine;

int main() {
    example::ExampleParams p;
    p.k = 3;
    const RootSystemSpec spec = p.spec();
    const int N = 2;

    std::cout << family_type_name(spec.family(), spec.k(), spec.l()) << ": "
              << enumerate_window(spec, N).size() << " roots with |d-coefficient| <= " << N << "\n";
    std::cout << "rho = " << example::rho(p).str() << "  (level " << level(example::rho(p)).str() << ")\n\n";

    for (const auto& s : example::parabolic_stages(p.k, N)) {
        std::cout << s.name << ": " << (s.violations.empty() ? "parabolic" : "NOT parabolic") << ", Levi core";
        for (const auto& n : s.levi.names()) std::cout << ' ' << n;
        std::cout << "\n";
    }

    auto step1 = example::step1_bound(p);
    std::cout << "\nstep 1 bound:\n";
    for (const auto& piece : step1.bound.pieces()) {
        std::cout << "  " << piece.base.str() << " + Z{";
        for (const auto& z : piece.zgens) std::cout << ' ' << z.str();
        std::cout << " } + offsets {";
        for (const auto& o : piece.offsets) std::cout << ' ' << o.str() << ';';
        std::cout << " }\n";
    }
    std::cout << "  equal to rho + 2Z f1 - {0,1,2} e_k: " << example::decision_name(step1.equal) << "\n";
    std::cout << "  inside rho + Z f1 - {0,1,2} e_k:    " << example::decision_name(step1.contained_in_relaxed) << "\n";

    auto lab = example::derived_labeling(p, 4);
    auto t = quasi_integrable_check(spec, lab, 4);
    std::cout << "\nS(1) " << to_string(classify_tightness(spec, SubsystemId(1), lab, 4)) << ", S(2) "
              << to_string(classify_tightness(spec, SubsystemId(2), lab, 4)) << ", quasi-integrable t = "
              << (t ? std::to_string(*t) : "none") << "\n";
}
