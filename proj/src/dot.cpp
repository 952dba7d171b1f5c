#include "vnx/dot.hpp"

#include <sstream>

#include "vnx/motif.hpp"

namespace vnx {

std::string emit_dot(const CapGraph& g, bool color_by_dissect, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=circle];\n";
    DissectStats st;
    if (color_by_dissect) st = dissect(g);
    static const char* colors[] = {"palegreen", "lightgoldenrod", "lightblue", "lightgray"};
    for (int v = 0; v < g.n; ++v) {
        out << "  " << v;
        std::string attrs;
        if (color_by_dissect)
            attrs = "style=filled, fillcolor=" + std::string(colors[st.category[v]]);
        if (g.node_cap[v] != Rat(1))
            attrs += (attrs.empty() ? "" : ", ") + ("label=\"" + std::to_string(v) + " cap=" +
                                                    format_rat(g.node_cap[v]) + "\"");
        if (!attrs.empty()) out << " [" << attrs << "]";
        out << ";\n";
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
        out << "  " << g.edges[e].first << " -- " << g.edges[e].second;
        if (g.edge_cap[e] != Rat(1)) out << " [label=\"cap=" << format_rat(g.edge_cap[e]) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace vnx
