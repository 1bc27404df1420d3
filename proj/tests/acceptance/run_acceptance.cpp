// One line per criterion; exit status 1 if any fails.
#include "diagdef/acceptance/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    using namespace diagdef::acceptance;
    const std::string filter = argc > 1 ? argv[1] : "";
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : kDefaultSeed;
    bool all = true;
    for (const auto& r : run(filter, seed)) {
        std::printf("[%s] %2d %-18s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.key.c_str(), r.title.c_str());
        for (const auto& c : r.checks)
            if (!c.pass || !c.detail.empty())
                std::printf("       %s %s%s%s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(), c.detail.empty() ? "" : ": ",
                            c.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
