#include "test_seed.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

namespace {
std::uint32_t base_seed = 0;
}

std::uint32_t test_seed(std::uint32_t salt) { return base_seed + salt; }

int main(int argc, char** argv)
{
    ::testing::InitGoogleTest(&argc, argv);
    int kept = 1;
    for (int i = 1; i < argc; ++i) {
        const char* arg = argv[i];
        if (std::strncmp(arg, "--seed=", 7) == 0) {
            base_seed = static_cast<std::uint32_t>(std::stoul(arg + 7));
        } else if (std::strcmp(arg, "--seed") == 0 && i + 1 < argc) {
            base_seed = static_cast<std::uint32_t>(std::stoul(argv[++i]));
        } else {
            argv[kept++] = argv[i];
        }
    }
    if (kept != argc) std::cerr << "random test seed offset: " << base_seed << '\n';
    return RUN_ALL_TESTS();
}
