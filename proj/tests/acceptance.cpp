#include <iostream>

#include "specnorm/verify.hpp"

int main() {
    const auto results = specnorm::run_verification();
    bool all = true;
    int i = 1;
    for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "pass" : "FAIL") << "  criterion " << i++ << ": " << r.name
                  << (r.detail.empty() ? "" : " — " + r.detail) << '\n';
    }
    return all ? 0 : 1;
}
