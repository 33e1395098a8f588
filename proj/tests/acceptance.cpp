// Runs the nine acceptance criteria and prints one line per criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "graphgames/reproduction.hpp"

int main(int argc, char** argv)
{
    graphgames::reproduction::Options opt;
    if (argc > 1)
        opt.seed = std::strtoull(argv[1], nullptr, 10);

    int failed = 0;
    const auto results = graphgames::reproduction::run(opt, {}, [&](const graphgames::reproduction::CheckResult& r) {
        std::printf("[%s] criterion %d: %s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    });
    std::printf("%zu/%zu criteria passed\n", results.size() - static_cast<std::size_t>(failed), results.size());
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
