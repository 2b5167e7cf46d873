// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

namespace ktdraw {

// Runs one command; args excludes the program name. Returns 0 on success,
// 1 when a verification fails, 2 on usage errors (bad flags, unreadable or
// malformed files, violated preconditions). Usage errors print a one-line
// {"error": ...} JSON object to standard error.
int run(const std::vector<std::string>& args);

}  // namespace ktdraw
