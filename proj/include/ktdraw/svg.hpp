// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "ktdraw/book.hpp"
#include "ktdraw/draw.hpp"

namespace ktdraw {

// SVG 1.1 documents with one <g> per colour (page) in a fixed palette,
// edges ascending inside each group. Coordinates are scaled as exact
// rationals and only converted to fixed 6-decimal strings when written, so
// identical artifacts give byte-identical output. scale must be positive.
std::string drawing_to_svg(const Drawing& d, const Rat& scale);

// Vertices on a circle of radius scale in list order clockwise from the top,
// edges as chords grouped by page.
std::string book_to_svg(const BookEmbedding& e, const Rat& scale);

}  // namespace ktdraw
