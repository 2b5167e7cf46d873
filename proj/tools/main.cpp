// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "ktdraw/cli.hpp"

int main(int argc, char** argv) {
    return ktdraw::run(std::vector<std::string>(argv + 1, argv + argc));
}
