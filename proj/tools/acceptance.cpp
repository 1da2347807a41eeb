// One PASS/FAIL line per acceptance criterion. Failing checks go to stderr.
#include <iostream>

#include "rs/verify.hpp"

int main() {
    auto checks = rs::verify_all();
    const auto& titles = rs::criterion_titles();
    int failed = 0;
    for (int k = 1; k <= static_cast<int>(titles.size()); ++k) {
        int n = 0, bad = 0;
        for (const auto& c : checks)
            if (c.criterion == k) {
                ++n;
                if (!c.ok) {
                    ++bad;
                    std::cerr << "criterion " << k << ": " << c.section << " " << c.label << ": expected "
                              << c.expected << ", got " << c.got << "\n";
                }
            }
        bool pass = n > 0 && bad == 0;
        failed += !pass;
        std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << "  " << titles[k - 1] << " ("
                  << n - bad << "/" << n << " checks)\n";
    }
    return failed ? 1 : 0;
}
