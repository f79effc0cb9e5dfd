#include "d43/graph.hpp"

#include <numeric>
#include <sstream>

namespace d43 {

namespace {

Weight classical_root(int i) {
    Weight a = simple_root(i);
    a.cd = 0;
    return a;
}

std::string enc_label(const std::vector<int>& enc) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < enc.size(); ++k) {
        if (k) os << ',';
        os << enc[k];
    }
    os << ')';
    return os.str();
}

}  // namespace

std::vector<std::string> axiom_check(const CrystalGraph& g) {
    std::vector<std::string> out;
    const auto vertex_name = [&](std::size_t k) { return enc_label(g.vertices[k].enc); };

    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        const GraphVertex& v = g.vertices[k];
        for (int i = 0; i < 3; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (v.eps[ui] < 0 || v.phi[ui] < 0)
                out.push_back("negative eps/phi at " + vertex_name(k));
            if (v.phi[ui] != v.eps[ui] + pair_h(v.wt, i))
                out.push_back("phi != eps + <h_" + std::to_string(i) + ", wt> at " +
                              vertex_name(k));
        }
    }

    std::set<std::pair<std::size_t, int>> outdeg, indeg;
    for (const GraphEdge& ed : g.edges) {
        if (ed.src >= g.vertices.size() || ed.dst >= g.vertices.size()) {
            out.push_back("edge endpoint out of range");
            continue;
        }
        if (!outdeg.insert({ed.src, ed.label}).second)
            out.push_back("two f_" + std::to_string(ed.label) + " edges out of " +
                          vertex_name(ed.src));
        if (!indeg.insert({ed.dst, ed.label}).second)
            out.push_back("two f_" + std::to_string(ed.label) + " edges into " +
                          vertex_name(ed.dst));
        const GraphVertex& u = g.vertices[ed.src];
        const GraphVertex& v = g.vertices[ed.dst];
        const auto ui = static_cast<std::size_t>(ed.label);
        if (!(v.wt == u.wt - classical_root(ed.label)))
            out.push_back("wt(f_" + std::to_string(ed.label) + " b) != wt(b) - alpha at " +
                          vertex_name(ed.src));
        if (v.eps[ui] != u.eps[ui] + 1 || v.phi[ui] != u.phi[ui] - 1)
            out.push_back("eps/phi step wrong along f_" + std::to_string(ed.label) + " at " +
                          vertex_name(ed.src));
    }
    return out;
}

bool is_connected(const CrystalGraph& g) {
    if (g.vertices.empty()) return true;
    std::vector<std::vector<std::size_t>> adj(g.vertices.size());
    for (const GraphEdge& ed : g.edges) {
        adj[ed.src].push_back(ed.dst);
        adj[ed.dst].push_back(ed.src);
    }
    std::vector<char> seen(g.vertices.size(), 0);
    std::vector<std::size_t> stack = {0};
    seen[0] = 1;
    std::size_t n = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++n;
                stack.push_back(v);
            }
    }
    return n == g.vertices.size();
}

bool graphs_equal(const CrystalGraph& a, const CrystalGraph& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size())
        return false;
    const auto canonical = [](const CrystalGraph& g) {
        std::vector<std::size_t> order(g.vertices.size());
        std::iota(order.begin(), order.end(), 0);
        const auto key = [&](std::size_t k) {
            const GraphVertex& v = g.vertices[k];
            return std::tuple(v.wt, v.eps, v.phi, v.enc);
        };
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
        std::vector<std::size_t> rank(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
        CrystalGraph out;
        out.vertices.reserve(order.size());
        for (std::size_t k : order) out.vertices.push_back(g.vertices[k]);
        out.edges.reserve(g.edges.size());
        for (const GraphEdge& ed : g.edges)
            out.edges.push_back({rank[ed.src], ed.label, rank[ed.dst]});
        std::sort(out.edges.begin(), out.edges.end());
        return out;
    };
    const CrystalGraph ca = canonical(a), cb = canonical(b);
    return ca.vertices == cb.vertices && ca.edges == cb.edges;
}

std::string export_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
        os << "  v" << k << " [label=\"" << enc_label(g.vertices[k].enc) << "\"];\n";
    for (const GraphEdge& ed : g.edges)
        os << "  v" << ed.src << " -> v" << ed.dst << " [label=\"" << ed.label << "\"];\n";
    os << "}\n";
    return os.str();
}

CrystalGraph parse_dot(const std::string& text) {
    CrystalGraph g;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto arrow = line.find("->");
        const auto label_at = line.find("[label=\"");
        if (label_at == std::string::npos) continue;
        const auto label_from = label_at + 8;
        const auto label_to = line.find('"', label_from);
        const std::string label = line.substr(label_from, label_to - label_from);
        if (arrow == std::string::npos) {
            GraphVertex v;
            std::istringstream nums(label);
            char sep;
            nums >> sep;  // '('
            for (int value; nums >> value;) {
                v.enc.push_back(value);
                nums >> sep;  // ',' or ')'
            }
            g.vertices.push_back(std::move(v));
        } else {
            GraphEdge ed{};
            ed.src = std::stoul(line.substr(line.find('v') + 1));
            ed.dst = std::stoul(line.substr(line.find('v', arrow) + 1));
            ed.label = std::stoi(label);
            g.edges.push_back(ed);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

nlohmann::json graph_to_json(const CrystalGraph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const GraphVertex& v : g.vertices) vertices.push_back(v.enc);
    nlohmann::json edges = nlohmann::json::array();
    for (const GraphEdge& ed : g.edges) edges.push_back({ed.src, ed.label, ed.dst});
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

}  // namespace d43
