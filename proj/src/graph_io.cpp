#include "edgeideal/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace edgeideal {

using nlohmann::json;

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("edge list: bad header line");
    std::vector<std::pair<int, int>> edges;
    for (long long e = 0; e < m; ++e) {
        long long u, v;
        if (!(in >> u >> v)) throw InputError("edge list: fewer edges than the header promises");
        if (u > v) std::swap(u, v);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw InputError("graph6: vertex count too large");
    }
    int bit = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Graph decode_graph6(const std::string& raw) {
    std::string text = raw;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
    if (text.empty()) throw InputError("graph6: empty input");
    std::size_t pos = 0;
    long long n;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw InputError("graph6: truncated input");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw InputError("graph6: invalid character");
        return c - 63;
    };
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | next();
        if (n > 258047) throw InputError("graph6: vertex count too large");
    }
    std::vector<std::pair<int, int>> edges;
    int bit = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                acc = next();
                bit = 6;
            }
            --bit;
            if ((acc >> bit) & 1) edges.emplace_back(i, j);
        }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("graph JSON: missing n");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: bad edge entry");
        int u = e[0], v = e[1];
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return Graph(j["n"], std::move(edges), std::move(labels));
}

std::string complex_to_json(const SimplicialComplex& d) {
    json j;
    j["ground"] = d.ground();
    j["facets"] = json::array();
    for (const auto& f : d.facet_sets()) j["facets"].push_back(f.members());
    return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("complex JSON: ") + e.what());
    }
    if (!j.contains("ground")) throw InputError("complex JSON: missing ground");
    int ground = j["ground"];
    std::vector<std::uint64_t> facets;
    for (const auto& f : j.value("facets", json::array())) {
        VertexSet s(ground);
        for (int v : f.get<std::vector<int>>()) s.insert(v);
        facets.push_back(s.mask());
    }
    return SimplicialComplex::from_facets(ground, std::move(facets));
}

std::string betti_to_json(const BettiTable& t, const FieldSpec& k) {
    json j;
    j["n"] = t.ambient();
    j["field"] = k.name();
    j["entries"] = json::array();
    for (const auto& [ij, b] : t.entries())
        j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"b", b}});
    return j.dump();
}

std::string profile_to_json(const HomologyProfile& h) {
    json dims = json::object();
    for (const auto& [deg, dim] : h.as_map()) dims[std::to_string(deg)] = dim;
    return json{{"dims", dims}}.dump();
}

std::string bound_report_to_json(const BoundReport& r) {
    json j;
    j["kind"] = r.kind_name;
    j["params"] = r.params;
    j["bound"] = r.bound.get_str();
    j["holds"] = r.holds.has_value() ? json(*r.holds) : json(nullptr);
    if (r.oracle_pdim) j["oracle_pdim"] = *r.oracle_pdim;
    return j.dump();
}

namespace {

json witness_to_json(const VDWitness& w) {
    if (w.simplex) return json{{"simplex", true}};
    json children = json::array();
    for (const auto& c : w.children) children.push_back(witness_to_json(c));
    return json{{"shed", w.shed}, {"children", children}};
}

json masks_to_json(const std::vector<std::uint64_t>& masks) {
    json arr = json::array();
    for (auto m : masks) {
        json face = json::array();
        for (int v = 0; v < 64; ++v)
            if ((m >> v) & 1) face.push_back(v);
        arr.push_back(face);
    }
    return arr;
}

} // namespace

std::string classification_to_json(const ClassificationReport& r) {
    json j;
    j["pure"] = r.pure;
    j["vertex_decomposable"] = r.vertex_decomposable.decomposable;
    if (r.vertex_decomposable.witness)
        j["shedding_tree"] = witness_to_json(*r.vertex_decomposable.witness);
    j["shellable"] = r.shellable.has_value() ? json(*r.shellable) : json(nullptr);
    if (!r.shelling_order.empty()) j["shelling_order"] = masks_to_json(r.shelling_order);
    j["cohen_macaulay"] = r.cohen_macaulay;
    j["sequentially_cm"] = r.sequentially_cm;
    j["violations"] = r.violations;
    return j.dump();
}

std::string polynomial_to_json(const BettiPolynomial& p) {
    json terms = json::array();
    for (const auto& [pq, c] : p.terms()) {
        json term{{"p", pq.first}, {"q", pq.second}};
        if (c.fits_slong_p())
            term["c"] = c.get_si();
        else
            term["c"] = c.get_str();
        terms.push_back(term);
    }
    return json{{"terms", terms}}.dump();
}

GraphFormat format_for_path(const std::string& path) {
    auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".g6") return GraphFormat::Graph6;
    if (ext == ".json") return GraphFormat::Json;
    return GraphFormat::EdgeList;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    switch (format_for_path(path)) {
    case GraphFormat::Graph6: return decode_graph6(buf.str());
    case GraphFormat::Json: return graph_from_json(buf.str());
    case GraphFormat::EdgeList: return read_edge_list(buf.str());
    }
    throw InputError("unknown graph format");
}

void save_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write graph file: " + path);
    switch (format) {
    case GraphFormat::Graph6: out << encode_graph6(g) << '\n'; break;
    case GraphFormat::Json: out << graph_to_json(g) << '\n'; break;
    case GraphFormat::EdgeList: out << write_edge_list(g); break;
    }
}

} // namespace edgeideal
