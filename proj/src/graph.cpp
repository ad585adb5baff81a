#include "ghom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace gh {

void Ambient::require_valid() const {
    if (!valid()) {
        throw std::invalid_argument("ambient dimensions require j >= 1 and n - j >= 2, got n=" +
                                    std::to_string(n) + " j=" + std::to_string(j));
    }
}

int LabeledGraph::count_vertices(VertexKind k) const {
    int c = 0;
    for (VertexKind v : vertices) c += (v == k);
    return c;
}

int LabeledGraph::count_edges(EdgeKind k) const {
    int c = 0;
    for (const Edge& e : edges) c += (e.kind == k);
    return c;
}

int LabeledGraph::incident_degree(int v, EdgeKind k) const {
    int c = 0;
    for (const Edge& e : edges) {
        if (e.kind != k) continue;
        c += (e.src == v) + (e.dst == v);
    }
    return c;
}

bool LabeledGraph::has_black() const {
    for (VertexKind v : vertices)
        if (is_black(v)) return true;
    return false;
}

bool LabeledGraph::has_loop_edge() const {
    for (const Edge& e : edges)
        if (e.is_loop()) return true;
    return false;
}

bool LabeledGraph::has_double_edge() const {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t k = i + 1; k < edges.size(); ++k)
            if (edges[i].kind == edges[k].kind && edges[i].low() == edges[k].low() &&
                edges[i].high() == edges[k].high())
                return true;
    return false;
}

bool LabeledGraph::edge_has_parallel(int edge_index) const {
    const Edge& e = edges[edge_index];
    for (int i = 0; i < num_edges(); ++i) {
        if (i == edge_index) continue;
        if (edges[i].kind == e.kind && edges[i].low() == e.low() && edges[i].high() == e.high())
            return true;
    }
    return false;
}

bool LabeledGraph::edge_in_multiple_pair(int edge_index) const {
    const Edge& e = edges[edge_index];
    if (e.is_loop()) return false;
    if (!is_black(vertices[e.src]) || !is_black(vertices[e.dst])) return false;
    if (vertices[e.src] != VertexKind::ExtBlack || vertices[e.dst] != VertexKind::ExtBlack)
        return false;
    EdgeKind other = e.kind == EdgeKind::Solid ? EdgeKind::Dashed : EdgeKind::Solid;
    for (const Edge& f : edges) {
        if (f.kind == other && f.low() == e.low() && f.high() == e.high()) return true;
    }
    return false;
}

bool LabeledGraph::edge_is_chord(int edge_index) const {
    const Edge& e = edges[edge_index];
    return e.kind == EdgeKind::Dashed && !e.is_loop() &&
           vertices[e.src] == VertexKind::ExtBlack && vertices[e.dst] == VertexKind::ExtBlack;
}

std::vector<int> LabeledGraph::component_ids() const {
    const int n = num_vertices();
    std::vector<int> id(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (id[s] >= 0) continue;
        id[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Edge& e : edges) {
                int other = -1;
                if (e.src == v) other = e.dst;
                else if (e.dst == v) other = e.src;
                if (other >= 0 && id[other] < 0) {
                    id[other] = next;
                    stack.push_back(other);
                }
            }
        }
        ++next;
    }
    return id;
}

int LabeledGraph::num_components() const {
    if (vertices.empty()) return 0;
    auto ids = component_ids();
    return 1 + *std::max_element(ids.begin(), ids.end());
}

bool LabeledGraph::is_connected() const { return num_components() <= 1; }

int LabeledGraph::betti() const { return num_edges() - num_vertices() + num_components(); }

Grading grading(const LabeledGraph& graph, const Ambient& amb) {
    amb.require_valid();
    const int dashed = graph.count_edges(EdgeKind::Dashed);
    const int solid = graph.count_edges(EdgeKind::Solid);
    const int whites = graph.count_vertices(VertexKind::White);
    const int blacks = graph.num_vertices() - whites;
    Grading gr;
    gr.k = dashed - whites;
    gr.g = graph.betti();
    gr.l = 2 * dashed - 3 * whites - blacks;
    gr.deg = (amb.n - 1) * dashed + (amb.j - 1) * solid - amb.n * whites - amb.j * blacks;
    gr.norm_deg = gr.deg + (graph.has_black() ? amb.j + 1 : amb.n + 1);
    return gr;
}

std::optional<std::string> structure_error(const LabeledGraph& graph, Flavor flavor) {
    const int n = graph.num_vertices();
    for (const Edge& e : graph.edges) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
            return "edge endpoint out of range";
    }
    const int min_valence = flavor == Flavor::Plain ? 3 : 1;
    for (int v = 0; v < n; ++v) {
        const int d = graph.incident_degree(v, EdgeKind::Dashed);
        const int s = graph.incident_degree(v, EdgeKind::Solid);
        switch (graph.vertices[v]) {
            case VertexKind::White:
                if (s > 0) return "white vertex with a solid edge";
                if (d < min_valence) return "white vertex below minimum dashed valence";
                break;
            case VertexKind::IntBlack:
                if (d > 0) return "internal black vertex with a dashed edge";
                if (s < min_valence) return "internal black vertex below minimum solid valence";
                break;
            case VertexKind::ExtBlack:
                break;
        }
    }
    return std::nullopt;
}

bool is_admissible(const LabeledGraph& graph) {
    for (int v = 0; v < graph.num_vertices(); ++v) {
        if (graph.vertices[v] == VertexKind::ExtBlack &&
            graph.incident_degree(v, EdgeKind::Dashed) == 0)
            return false;
    }
    return true;
}

namespace {

const char* kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::ExtBlack: return "ext";
        case VertexKind::IntBlack: return "int";
        case VertexKind::White: return "white";
    }
    return "?";
}

VertexKind kind_from_name(const std::string& s) {
    if (s == "ext") return VertexKind::ExtBlack;
    if (s == "int") return VertexKind::IntBlack;
    if (s == "white") return VertexKind::White;
    throw std::invalid_argument("unknown vertex kind: " + s);
}

}  // namespace

std::string to_json(const LabeledGraph& graph, Flavor flavor) {
    nlohmann::ordered_json out;
    out["flavor"] = flavor == Flavor::Plain ? "plain" : "generalized";
    auto& vs = out["vertices"] = nlohmann::ordered_json::array();
    for (VertexKind v : graph.vertices) vs.push_back(kind_name(v));
    auto& es = out["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : graph.edges) {
        nlohmann::ordered_json je;
        je["kind"] = e.kind == EdgeKind::Solid ? "solid" : "dashed";
        je["src"] = e.src;
        je["dst"] = e.dst;
        es.push_back(je);
    }
    return out.dump();
}

LabeledGraph graph_from_json(const std::string& text, Flavor* flavor_out) {
    const auto in = nlohmann::json::parse(text);
    LabeledGraph g;
    if (flavor_out) {
        const std::string f = in.value("flavor", "plain");
        if (f != "plain" && f != "generalized")
            throw std::invalid_argument("unknown flavor: " + f);
        *flavor_out = f == "plain" ? Flavor::Plain : Flavor::Generalized;
    }
    for (const auto& v : in.at("vertices")) g.vertices.push_back(kind_from_name(v));
    for (const auto& e : in.at("edges")) {
        EdgeKind k;
        const std::string ks = e.at("kind");
        if (ks == "solid") k = EdgeKind::Solid;
        else if (ks == "dashed") k = EdgeKind::Dashed;
        else throw std::invalid_argument("unknown edge kind: " + ks);
        g.edges.push_back({k, e.at("src").get<int>(), e.at("dst").get<int>()});
    }
    return g;
}

std::string encode(const LabeledGraph& graph) {
    std::string out;
    out.reserve(graph.num_vertices() + 6 * graph.num_edges() + 2);
    for (VertexKind v : graph.vertices)
        out += (v == VertexKind::ExtBlack ? 'e' : v == VertexKind::IntBlack ? 'i' : 'w');
    out += ':';
    for (const Edge& e : graph.edges) {
        out += (e.kind == EdgeKind::Solid ? 's' : 'd');
        out += std::to_string(e.src);
        out += ',';
        out += std::to_string(e.dst);
        out += ';';
    }
    return out;
}

LabeledGraph decode(const std::string& key) {
    LabeledGraph g;
    size_t i = 0;
    for (; i < key.size() && key[i] != ':'; ++i) {
        switch (key[i]) {
            case 'e': g.vertices.push_back(VertexKind::ExtBlack); break;
            case 'i': g.vertices.push_back(VertexKind::IntBlack); break;
            case 'w': g.vertices.push_back(VertexKind::White); break;
            default: throw std::invalid_argument("bad graph key");
        }
    }
    if (i >= key.size()) throw std::invalid_argument("bad graph key");
    ++i;
    while (i < key.size()) {
        EdgeKind k = key[i] == 's' ? EdgeKind::Solid : EdgeKind::Dashed;
        if (key[i] != 's' && key[i] != 'd') throw std::invalid_argument("bad graph key");
        ++i;
        int src = 0, dst = 0;
        auto [p1, ec1] = std::from_chars(key.data() + i, key.data() + key.size(), src);
        if (ec1 != std::errc() || p1 >= key.data() + key.size() || *p1 != ',')
            throw std::invalid_argument("bad graph key");
        i = static_cast<size_t>(p1 - key.data()) + 1;
        auto [p2, ec2] = std::from_chars(key.data() + i, key.data() + key.size(), dst);
        if (ec2 != std::errc() || p2 >= key.data() + key.size() || *p2 != ';')
            throw std::invalid_argument("bad graph key");
        i = static_cast<size_t>(p2 - key.data()) + 1;
        g.edges.push_back({k, src, dst});
    }
    return g;
}

}  // namespace gh
