// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "ktdraw/json_io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace ktdraw {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        bad(std::string("missing field \"") + name + "\"");
    return j[name];
}

int int_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer()) bad(std::string("field \"") + name + "\" must be an integer");
    return f.get<int>();
}

std::vector<int> int_array(const json& f, const char* what) {
    if (!f.is_array()) bad(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const json& e : f) {
        if (!e.is_number_integer()) bad(std::string(what) + " must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::string edge_key(const Edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

Edge edge_from_key(const std::string& s) {
    const size_t dash = s.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == s.size())
        bad("edge key \"" + s + "\" is not \"u-v\"");
    for (size_t i = 0; i < s.size(); ++i)
        if (i != dash && !std::isdigit(static_cast<unsigned char>(s[i])))
            bad("edge key \"" + s + "\" is not \"u-v\"");
    const int u = std::stoi(s.substr(0, dash));
    const int v = std::stoi(s.substr(dash + 1));
    if (u == v) bad("edge key \"" + s + "\" is a loop");
    return make_edge(u, v);
}

EdgeColouring colouring_from_json_impl(const json& f, const char* what) {
    if (!f.is_object()) bad(std::string(what) + " must be an object");
    EdgeColouring out;
    for (const auto& [key, val] : f.items()) {
        if (!val.is_number_integer())
            bad(std::string(what) + " values must be integers");
        out[edge_from_key(key)] = val.get<int>();
    }
    return out;
}

}  // namespace

json colouring_to_json(const EdgeColouring& c) {
    json out = json::object();
    for (const auto& [e, col] : c) out[edge_key(e)] = col;
    return out;
}

EdgeColouring colouring_from_json(const json& j) {
    return colouring_from_json_impl(j, "colouring");
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
    const size_t slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto plain_int = [](const std::string& p, bool sign_ok) {
        if (p.empty()) return false;
        size_t i = 0;
        if (sign_ok && p[0] == '-') i = 1;
        if (i == p.size()) return false;
        for (; i < p.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
        return true;
    };
    if (!plain_int(num, true) || !plain_int(den, false))
        bad("\"" + s + "\" is not an exact rational \"p\" or \"p/q\"");
    Rat q(num + "/" + den);
    if (q.get_den() == 0) bad("\"" + s + "\" has denominator zero");
    q.canonicalize();
    return q;
}

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count;
    json edges = json::array();
    for (const Edge& e : g.edges) edges.push_back({e.first, e.second});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const json& j) {
    Graph g;
    g.vertex_count = int_field(j, "n");
    if (g.vertex_count < 0) bad("\"n\" must be nonnegative");
    const json& edges = field(j, "edges");
    if (!edges.is_array()) bad("\"edges\" must be an array");
    for (const json& e : edges) {
        const std::vector<int> uv = int_array(e, "each edge");
        if (uv.size() != 2) bad("each edge must be a pair [u, v]");
        if (uv[0] == uv[1]) bad("loops are not allowed");
        if (uv[0] < 0 || uv[1] < 0 || uv[0] >= g.vertex_count || uv[1] >= g.vertex_count)
            bad("edge endpoint out of range");
        g.edges.insert(make_edge(uv[0], uv[1]));
    }
    return g;
}

json build_to_json(const KTreeBuild& b) {
    json j = graph_to_json(realize(b));
    j["k"] = b.k;
    j["base"] = b.base;
    json adds = json::array();
    for (const Addition& a : b.additions) {
        json ja;
        ja["v"] = a.v;
        ja["clique"] = a.clique;
        adds.push_back(ja);
    }
    j["additions"] = adds;
    return j;
}

KTreeBuild build_from_json(const json& j) {
    KTreeBuild b;
    b.k = int_field(j, "k");
    b.base = int_array(field(j, "base"), "\"base\"");
    const json& adds = field(j, "additions");
    if (!adds.is_array()) bad("\"additions\" must be an array");
    for (const json& ja : adds) {
        Addition a;
        a.v = int_field(ja, "v");
        a.clique = int_array(field(ja, "clique"), "each \"clique\"");
        b.additions.push_back(a);
    }
    const Graph g = realize(b);  // validates the build steps
    if (j.contains("n") || j.contains("edges")) {
        const Graph claimed = graph_from_json(j);
        if (claimed.vertex_count != g.vertex_count || claimed.edges != g.edges)
            bad("graph fields disagree with the realized build");
    }
    return b;
}

json book_to_json(const BookEmbedding& e) {
    json j;
    j["order"] = e.order;
    j["pages"] = colouring_to_json(e.page_of);
    j["page_count"] = e.page_count;
    return j;
}

BookEmbedding book_from_json(const json& j) {
    BookEmbedding e;
    e.order = int_array(field(j, "order"), "\"order\"");
    e.page_of = colouring_from_json_impl(field(j, "pages"), "\"pages\"");
    e.page_count = int_field(j, "page_count");
    return e;
}

json drawing_to_json(const Drawing& d) {
    json j;
    json pos = json::object();
    for (const auto& [v, p] : d.pos)
        pos[std::to_string(v)] = {rat_to_string(p.x), rat_to_string(p.y)};
    j["positions"] = pos;
    j["colours"] = colouring_to_json(d.colour_of);
    j["colour_count"] = d.colour_count;
    return j;
}

Drawing drawing_from_json(const json& j) {
    Drawing d;
    const json& pos = field(j, "positions");
    if (!pos.is_object()) bad("\"positions\" must be an object");
    for (const auto& [key, val] : pos.items()) {
        for (char c : key)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                bad("vertex key \"" + key + "\" is not a nonnegative integer");
        if (!val.is_array() || val.size() != 2 || !val[0].is_string() ||
            !val[1].is_string())
            bad("each position must be a pair of rational strings");
        d.pos[std::stoi(key)] = Point{rat_from_string(val[0].get<std::string>()),
                                      rat_from_string(val[1].get<std::string>())};
    }
    d.colour_of = colouring_from_json_impl(field(j, "colours"), "\"colours\"");
    d.colour_count = int_field(j, "colour_count");
    for (const auto& [e, col] : d.colour_of)
        if (!d.pos.count(e.first) || !d.pos.count(e.second))
            bad("edge " + edge_key(e) + " has an endpoint without a position");
    return d;
}

json report_to_json(const Report& r) {
    json j;
    j["passed"] = r.passed;
    json vs = json::array();
    for (const Violation& v : r.violations) {
        json jv;
        jv["kind"] = v.kind;
        jv["vertices"] = v.vertices;
        jv["detail"] = v.detail;
        vs.push_back(jv);
    }
    j["violations"] = vs;
    return j;
}

json witness_to_json(const MonoWitness& w) {
    json j;
    switch (w.kind) {
        case MonoWitness::Kind::K33: j["kind"] = "K33"; break;
        case MonoWitness::Kind::K23: j["kind"] = "K23"; break;
        case MonoWitness::Kind::P4: j["kind"] = "P4"; break;
        case MonoWitness::Kind::C4: j["kind"] = "C4"; break;
    }
    j["vertices"] = w.vertices;
    j["colour"] = w.colour;
    return j;
}

json oracle_to_json(const OracleResult& r) {
    json j;
    j["value"] = r.value;
    j["order"] = r.order;
    j["classes"] = colouring_to_json(r.classes);
    j["states_explored"] = r.states_explored;
    j["states_pruned"] = r.states_pruned;
    j["method"] = r.method;
    return j;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read \"" + path + "\"");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) bad("\"" + path + "\" is not valid JSON");
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write \"" + path + "\"");
    out << j.dump(2) << "\n";
    if (!out) bad("cannot write \"" + path + "\"");
}

}  // namespace ktdraw
