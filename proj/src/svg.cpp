// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "ktdraw/svg.hpp"

#include <sstream>
#include <stdexcept>

namespace ktdraw {

namespace {

const char* const kPalette[] = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
};
constexpr int kPaletteSize = 12;

const Rat kMargin = 20;

// cos/sin of j/256 turns for j = 0..63, times 2^15; the other quadrants come
// from symmetry. Rendering-only precision: every position is an exact
// rational built from this table, so output stays platform-independent.
const int kQuarter[64][2] = {
    {32768, 0},     {32758, 804},   {32729, 1608},  {32679, 2411},
    {32610, 3212},  {32522, 4011},  {32413, 4808},  {32286, 5602},
    {32138, 6393},  {31972, 7180},  {31786, 7962},  {31581, 8740},
    {31357, 9512},  {31114, 10279}, {30853, 11039}, {30572, 11793},
    {30274, 12540}, {29957, 13279}, {29622, 14010}, {29269, 14733},
    {28899, 15447}, {28511, 16151}, {28106, 16846}, {27684, 17531},
    {27246, 18205}, {26791, 18868}, {26320, 19520}, {25833, 20160},
    {25330, 20788}, {24812, 21403}, {24279, 22006}, {23732, 22595},
    {23170, 23170}, {22595, 23732}, {22006, 24279}, {21403, 24812},
    {20788, 25330}, {20160, 25833}, {19520, 26320}, {18868, 26791},
    {18205, 27246}, {17531, 27684}, {16846, 28106}, {16151, 28511},
    {15447, 28899}, {14733, 29269}, {14010, 29622}, {13279, 29957},
    {12540, 30274}, {11793, 30572}, {11039, 30853}, {10279, 31114},
    {9512, 31357},  {8740, 31581},  {7962, 31786},  {7180, 31972},
    {6393, 32138},  {5602, 32286},  {4808, 32413},  {4011, 32522},
    {3212, 32610},  {2411, 32679},  {1608, 32729},  {804, 32758},
};

// Unit-circle direction at j/256 turns, counterclockwise from +x.
Point turn_dir(int j) {
    j = ((j % 256) + 256) % 256;
    const int quadrant = j >> 6;
    const int r = j & 63;
    const Rat c = Rat(kQuarter[r][0]) / 32768;
    const Rat s = Rat(kQuarter[r][1]) / 32768;
    switch (quadrant) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

// Fixed-point decimal with exactly six fractional digits, round half up
// (floor-based, so deterministic for negatives too).
std::string format_dec(const Rat& q) {
    const mpz_class scaled_num = q.get_num() * 2 * 1000000 + q.get_den();
    mpz_class v;
    mpz_fdiv_q(v.get_mpz_t(), scaled_num.get_mpz_t(),
               mpz_class(q.get_den() * 2).get_mpz_t());
    const bool neg = v < 0;
    if (neg) v = -v;
    const mpz_class ip = v / 1000000;
    std::string frac = mpz_class(v % 1000000).get_str();
    frac.insert(0, 6 - frac.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

void open_svg(std::ostringstream& out, const Rat& w, const Rat& h) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << format_dec(w) << "\" height=\"" << format_dec(h) << "\" viewBox=\"0 0 "
        << format_dec(w) << " " << format_dec(h) << "\">\n";
}

void emit_layers(std::ostringstream& out, const std::map<int, Point>& px,
                 const EdgeColouring& colour_of, int colour_count) {
    for (int c = 1; c <= colour_count; ++c) {
        out << "<g id=\"colour-" << c << "\" stroke=\""
            << kPalette[(c - 1) % kPaletteSize]
            << "\" stroke-width=\"1.5\" fill=\"none\">\n";
        for (const auto& [e, col] : colour_of) {
            if (col != c) continue;
            const Point& a = px.at(e.first);
            const Point& b = px.at(e.second);
            out << "<line x1=\"" << format_dec(a.x) << "\" y1=\"" << format_dec(a.y)
                << "\" x2=\"" << format_dec(b.x) << "\" y2=\"" << format_dec(b.y)
                << "\"/>\n";
        }
        out << "</g>\n";
    }
    for (const auto& [v, p] : px)
        out << "<circle cx=\"" << format_dec(p.x) << "\" cy=\"" << format_dec(p.y)
            << "\" r=\"3\" fill=\"#000000\"/>\n";
    out << "</svg>\n";
}

}  // namespace

std::string drawing_to_svg(const Drawing& d, const Rat& scale) {
    if (sign(scale) <= 0) throw std::invalid_argument("svg: scale must be positive");
    Rat minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (const auto& [v, p] : d.pos) {
        if (first || p.x < minx) minx = p.x;
        if (first || p.x > maxx) maxx = p.x;
        if (first || p.y < miny) miny = p.y;
        if (first || p.y > maxy) maxy = p.y;
        first = false;
    }
    std::map<int, Point> px;
    for (const auto& [v, p] : d.pos)
        px[v] = {kMargin + (p.x - minx) * scale, kMargin + (maxy - p.y) * scale};
    std::ostringstream out;
    open_svg(out, (maxx - minx) * scale + 2 * kMargin,
             (maxy - miny) * scale + 2 * kMargin);
    emit_layers(out, px, d.colour_of, d.colour_count);
    return out.str();
}

std::string book_to_svg(const BookEmbedding& e, const Rat& scale) {
    if (sign(scale) <= 0) throw std::invalid_argument("svg: scale must be positive");
    const int n = static_cast<int>(e.order.size());
    const Point centre{kMargin + scale, kMargin + scale};
    std::map<int, Point> px;
    for (int i = 0; i < n; ++i) {
        // list order clockwise from the top; svg y grows downward
        const Point dir = turn_dir(64 - (256 * i) / n);
        px[e.order[i]] = {centre.x + scale * dir.x, centre.y - scale * dir.y};
    }
    std::ostringstream out;
    open_svg(out, 2 * (kMargin + scale), 2 * (kMargin + scale));
    emit_layers(out, px, e.page_of, e.page_count);
    return out.str();
}

}  // namespace ktdraw
