// Runs every catalog identity at its default bounds and prints one line per
// acceptance criterion. Exit status 0 when all criteria pass.
//
//   acceptance [--verbose] [--threads N]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <map>

#include <shiftpl/verify.hpp>

using namespace shiftpl;

int main(int argc, char** argv)
{
    bool verbose = false;
    unsigned threads = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--verbose")) {
            verbose = true;
        } else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
            threads = static_cast<unsigned>(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--verbose] [--threads N]\n";
            return 2;
        }
    }

    auto start = std::chrono::steady_clock::now();
    std::vector<const verify::identity*> ids;
    for (const auto& e : verify::catalog())
        ids.push_back(&e);
    auto reports = verify::run_many(ids, threads);
    std::map<std::string, const verify::report*> by_id;
    for (const auto& r : reports)
        by_id[r.id] = &r;

    bool all = true;
    std::cout << std::fixed << std::setprecision(2);
    for (const auto& c : verify::criteria()) {
        bool pass = true;
        double seconds = 0;
        const verify::report* first_failure = nullptr;
        for (const auto& id : c.ids) {
            const auto* r = by_id.at(id);
            seconds += r->seconds;
            if (!r->pass && !first_failure)
                first_failure = r;
            pass = pass && r->pass;
        }
        all = all && pass;
        std::cout << "C" << c.number << " " << (pass ? "PASS" : "FAIL") << " " << c.title << " (" << c.ids.size()
                  << (c.ids.size() == 1 ? " check, " : " checks, ") << seconds << "s)";
        if (first_failure)
            std::cout << ": " << first_failure->line();
        std::cout << "\n";
        if (verbose)
            for (const auto& id : c.ids)
                std::cout << "    " << by_id.at(id)->line() << "\n";
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (all ? "ALL PASS" : "SOME FAILED") << " in " << total << "s\n";
    return all ? 0 : 1;
}
