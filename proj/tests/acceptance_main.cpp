#include <iostream>
#include <string>

#include "taffine/acceptance.hpp"

// Usage: taffine_acceptance [criterion-id]. Without an id every criterion runs.
int main(int argc, char** argv) {
    using namespace taffine::acceptance;
    const auto seed = seed_from_env();
    std::vector<CriterionResult> results;
    try {
        if (argc > 1)
            results.push_back(run_one(std::stoi(argv[1]), seed));
        else
            results = run_all(seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::cout << "seed " << seed << '\n';
    std::size_t passed = 0;
    for (const auto& r : results) {
        std::cout << format_line(r) << '\n';
        passed += r.pass;
    }
    std::cout << passed << "/" << results.size() << " criteria pass\n";
    return passed == results.size() ? 0 : 1;
}
