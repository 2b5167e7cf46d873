// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "ktdraw/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "ktdraw/json_io.hpp"
#include "ktdraw/oracle.hpp"
#include "ktdraw/svg.hpp"

namespace ktdraw {

namespace {

// Same rejection scheme as random_ktree: plain modulo would skew and
// uniform_int_distribution is not bit-identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % m;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % m;
}

EdgeColouring random_colouring(const Graph& g, int colours, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    EdgeColouring c;
    for (const Edge& e : g.edges)
        c[e] = 1 + static_cast<int>(uniform_below(rng, colours));
    return c;
}

LayerMode mode_from(const std::string& s) {
    if (s == "noncrossing") return LayerMode::Noncrossing;
    if (s == "forest") return LayerMode::Forest;
    if (s == "star-forest") return LayerMode::StarForest;
    throw std::invalid_argument(
        "unknown --mode \"" + s + "\" (noncrossing, forest or star-forest)");
}

// Vertex set from the order, edge set from the page keys; check_book
// validates the reconstruction.
Graph graph_of_book(const BookEmbedding& e) {
    Graph g;
    g.vertex_count = static_cast<int>(e.order.size());
    for (const auto& [edge, page] : e.page_of) g.edges.insert(edge);
    return g;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out || !(out << text))
        throw std::invalid_argument("cannot write \"" + path + "\"");
}

int report_result(const Report& r) {
    std::cout << report_to_json(r).dump(2) << "\n";
    return r.passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"exact drawings, book embeddings and small-graph oracles for k-trees",
                 "ktdraw"};
    app.require_subcommand(1);

    struct {
        int k = 0, n = 0, s = 0, l = 0;
        std::uint64_t seed = 1;
        std::string in, out, build, mode, colouring, scale = "100";
    } o;
    int code = 0;

    auto* gen = app.add_subcommand("gen", "generate build and gadget files");
    gen->require_subcommand(1);
    auto* gen_ktree = gen->add_subcommand("ktree", "seeded random k-tree");
    gen_ktree->add_option("--k", o.k, "clique parameter")->required();
    gen_ktree->add_option("--n", o.n, "vertex count")->required();
    gen_ktree->add_option("--seed", o.seed, "random seed (default 1)");
    gen_ktree->add_option("-o,--output", o.out, "output build file")->required();
    gen_ktree->callback(
        [&] { save_json(o.out, build_to_json(random_ktree(o.k, o.n, o.seed))); });

    auto* gen_split = gen->add_subcommand("split", "complete split graph K*_{k,s}");
    gen_split->add_option("--k", o.k, "clique size")->required();
    gen_split->add_option("--s", o.s, "independent-set size")->required();
    gen_split->add_option("-o,--output", o.out, "output build file")->required();
    gen_split->callback(
        [&] { save_json(o.out, build_to_json(complete_split(o.k, o.s))); });

    auto* gen_qk = gen->add_subcommand(
        "qk", "k-tree whose book thickness exceeds k");
    gen_qk->add_option("--k", o.k, "clique parameter")->required();
    gen_qk->add_option("-o,--output", o.out, "output build file")->required();
    gen_qk->callback([&] { save_json(o.out, build_to_json(qk_graph(o.k))); });

    auto* gen_star = gen->add_subcommand(
        "star-lb", "pendant gadget with star arboricity above k");
    gen_star->add_option("--k", o.k, "clique parameter")->required();
    gen_star->add_option("-o,--output", o.out, "output graph file")->required();
    gen_star->callback([&] {
        const StarLbGadget gadget = star_lb_graph(o.k);
        nlohmann::json j = graph_to_json(gadget.graph);
        j["clique"] = gadget.clique;
        j["s_vertices"] = gadget.s_vertices;
        j["pendants"] = gadget.pendants;
        save_json(o.out, j);
    });

    auto* embed = app.add_subcommand("embed", "book embeddings from build files");
    embed->require_subcommand(1);
    auto* embed_stars = embed->add_subcommand(
        "stars", "at most k+1 pages, each a noncrossing star forest");
    auto* embed_f2 = embed->add_subcommand(
        "forests2", "2-trees on 2 pages, each a noncrossing forest");
    for (CLI::App* s : {embed_stars, embed_f2}) {
        s->add_option("-i,--input", o.in, "build file")->required();
        s->add_option("-o,--output", o.out, "output embedding file")->required();
    }
    embed_stars->callback([&] {
        save_json(o.out, book_to_json(embed_star_forests(build_from_json(load_json(o.in)))));
    });
    embed_f2->callback([&] {
        save_json(o.out, book_to_json(embed_2tree_forests(build_from_json(load_json(o.in)))));
    });

    auto* draw = app.add_subcommand("draw", "straight-line drawings from build files");
    draw->require_subcommand(1);
    auto* draw_p2 = draw->add_subcommand("planar2", "one noncrossing colour class");
    auto* draw_fo = draw->add_subcommand("forests", "k noncrossing forest classes");
    auto* draw_th = draw->add_subcommand("thickness", "ceil(k/2) noncrossing classes");
    for (CLI::App* s : {draw_p2, draw_fo, draw_th}) {
        s->add_option("-i,--input", o.in, "build file")->required();
        s->add_option("-o,--output", o.out, "output drawing file")->required();
    }
    draw_p2->callback([&] {
        save_json(o.out, drawing_to_json(draw_planar_2tree(build_from_json(load_json(o.in)))));
    });
    draw_fo->callback([&] {
        save_json(o.out, drawing_to_json(draw_forests(build_from_json(load_json(o.in)))));
    });
    draw_th->callback([&] {
        save_json(o.out, drawing_to_json(draw_thickness(build_from_json(load_json(o.in)))));
    });

    auto* verify = app.add_subcommand("verify", "check artifacts, print a report");
    verify->require_subcommand(1);
    auto* verify_book = verify->add_subcommand("book", "book-embedding layers");
    verify_book->add_option("-i,--input", o.in, "embedding file")->required();
    std::string book_mode = "star-forest";
    verify_book->add_option("--mode", book_mode,
                            "noncrossing, forest or star-forest (default star-forest)");
    verify_book->callback([&] {
        const BookEmbedding e = book_from_json(load_json(o.in));
        code = report_result(check_book(e, graph_of_book(e), mode_from(book_mode)));
    });
    auto* verify_drawing = verify->add_subcommand("drawing", "drawing layers");
    verify_drawing->add_option("-i,--input", o.in, "drawing file")->required();
    std::string drawing_mode = "noncrossing";
    verify_drawing->add_option(
        "--mode", drawing_mode,
        "noncrossing, forest or star-forest (default noncrossing)");
    verify_drawing->callback([&] {
        const Drawing d = drawing_from_json(load_json(o.in));
        code = report_result(check_drawing_layers(d, d.graph(), mode_from(drawing_mode)));
    });
    auto* verify_good = verify->add_subcommand(
        "good", "good-drawing predicate against a build");
    verify_good->add_option("-i,--input", o.in, "drawing file")->required();
    verify_good->add_option("--build", o.build, "build file")->required();
    verify_good->callback([&] {
        code = report_result(check_good(drawing_from_json(load_json(o.in)),
                                        build_from_json(load_json(o.build))));
    });

    auto* oracle = app.add_subcommand(
        "oracle", "exact small-graph invariants; prints the value");
    oracle->require_subcommand(1);
    auto* oracle_bt = oracle->add_subcommand("bt", "book thickness (n <= 9)");
    auto* oracle_tt = oracle->add_subcommand("tt", "thickness (n <= 10)");
    auto* oracle_arb = oracle->add_subcommand("arb", "arboricity (n <= 10)");
    auto* oracle_sa = oracle->add_subcommand("sa", "star arboricity (|E| <= 18)");
    for (CLI::App* s : {oracle_bt, oracle_tt, oracle_arb, oracle_sa}) {
        s->add_option("-i,--input", o.in, "graph or build file")->required();
        s->add_option("-o,--output", o.out, "full result file (optional)");
    }
    auto oracle_run = [&](OracleResult (*fn)(const Graph&)) {
        const OracleResult res = fn(graph_from_json(load_json(o.in)));
        std::cout << res.value << "\n";
        if (!o.out.empty()) save_json(o.out, oracle_to_json(res));
    };
    oracle_bt->callback([&, oracle_run] { oracle_run(exact_book_thickness); });
    oracle_tt->callback([&, oracle_run] { oracle_run(exact_thickness); });
    oracle_arb->callback([&, oracle_run] { oracle_run(exact_arboricity); });
    oracle_sa->callback([&, oracle_run] { oracle_run(exact_star_arboricity); });
    auto* oracle_chain = oracle->add_subcommand(
        "chain", "thickness relation check (n <= 7, |E| <= 18)");
    oracle_chain->add_option("-i,--input", o.in, "graph or build file")->required();
    oracle_chain->callback([&] {
        code = report_result(inequality_chain_check(graph_from_json(load_json(o.in))));
    });

    auto* refute = app.add_subcommand(
        "refute", "monochromatic witnesses against too-few-colour claims");
    refute->require_subcommand(1);
    auto* refute_tt = refute->add_subcommand(
        "tt", "K_{3,3} in any l-colouring of K*_{k,s}");
    auto* refute_ot = refute->add_subcommand(
        "ot", "K_{2,3} in any l-colouring of K*_{k,s}");
    for (CLI::App* s : {refute_tt, refute_ot}) {
        s->add_option("--k", o.k, "clique size")->required();
        s->add_option("--l", o.l, "colour count")->required();
        s->add_option("--s", o.s, "independent-set size")->required();
    }
    auto* refute_sa = refute->add_subcommand(
        "sa", "P_4 or C_4 in any k-colouring of the pendant gadget");
    refute_sa->add_option("--k", o.k, "clique parameter")->required();
    for (CLI::App* s : {refute_tt, refute_ot, refute_sa}) {
        s->add_option("--seed", o.seed, "seed for a random colouring (default 1)");
        s->add_option("--colouring", o.colouring,
                      "colouring file {\"u-v\": c} instead of a random one");
        s->add_option("-o,--output", o.out, "witness file (optional)");
    }
    auto refute_run = [&](const Graph& g, int colours, auto fn) {
        const EdgeColouring c = o.colouring.empty()
                                    ? random_colouring(g, colours, o.seed)
                                    : colouring_from_json(load_json(o.colouring));
        const MonoWitness w = fn(c);
        std::cout << witness_to_json(w).dump(2) << "\n";
        if (!o.out.empty()) save_json(o.out, witness_to_json(w));
    };
    refute_tt->callback([&, refute_run] {
        refute_run(realize(complete_split(o.k, o.s)), o.l, [&](const EdgeColouring& c) {
            return refute_thickness(o.k, o.l, o.s, c);
        });
    });
    refute_ot->callback([&, refute_run] {
        refute_run(realize(complete_split(o.k, o.s)), o.l, [&](const EdgeColouring& c) {
            return refute_outerthickness(o.k, o.l, o.s, c);
        });
    });
    refute_sa->callback([&, refute_run] {
        refute_run(star_lb_graph(o.k).graph, o.k, [&](const EdgeColouring& c) {
            return refute_star_arboricity(o.k, c);
        });
    });

    auto* svg = app.add_subcommand(
        "export-svg", "render a drawing or book embedding as SVG 1.1");
    svg->add_option("-i,--input", o.in, "drawing or embedding file")->required();
    svg->add_option("-o,--output", o.out, "output file (stdout when absent)");
    svg->add_option("--scale", o.scale,
                    "rational pixels per unit / circle radius (default 100)");
    svg->callback([&] {
        const nlohmann::json j = load_json(o.in);
        std::string doc;
        if (j.is_object() && j.contains("positions"))
            doc = drawing_to_svg(drawing_from_json(j), rat_from_string(o.scale));
        else if (j.is_object() && j.contains("order"))
            doc = book_to_svg(book_from_json(j), rat_from_string(o.scale));
        else
            throw std::invalid_argument(
                "export-svg: input is neither a drawing nor a book embedding");
        if (o.out.empty())
            std::cout << doc;
        else
            write_text(o.out, doc);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return code;
}

}  // namespace ktdraw
