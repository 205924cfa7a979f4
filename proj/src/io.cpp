#include "penta/io.hpp"

namespace penta {

json matrix_to_json(const RatMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

RatMat matrix_from_json(const json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.at(i, c) = rat_from_string(j[i][c].get<std::string>());
    return m;
}

json weights_to_json(const GrassWeights& w) {
    json x = json::array(), y = json::array();
    for (auto& m : w.X) x.push_back(matrix_to_json(m));
    for (auto& m : w.Y) y.push_back(matrix_to_json(m));
    return json{{"n", w.n},
                {"N", w.N},
                {"convention", convention_name(w.conv)},
                {"X", x},
                {"Y", y},
                {"Z", matrix_to_json(w.Z)}};
}

GrassWeights weights_from_json(const json& j) {
    GrassWeights w;
    w.n = j.at("n").get<int>();
    w.N = j.at("N").get<int>();
    w.conv = convention_from_name(j.at("convention").get<std::string>());
    for (auto& m : j.at("X")) w.X.push_back(matrix_from_json(m));
    for (auto& m : j.at("Y")) w.Y.push_back(matrix_from_json(m));
    w.Z = matrix_from_json(j.at("Z"));
    if (static_cast<int>(w.X.size()) != w.n || static_cast<int>(w.Y.size()) != w.n)
        throw ConfigError("weights_from_json: wrong tuple length");
    return w;
}

namespace {
std::string color_name(VColor c) {
    switch (c) {
        case VColor::White: return "white";
        case VColor::Black: return "black";
        case VColor::Boundary: return "boundary";
    }
    return "?";
}
VColor color_from(const std::string& s) {
    if (s == "white") return VColor::White;
    if (s == "black") return VColor::Black;
    if (s == "boundary") return VColor::Boundary;
    throw ConfigError("bad color: " + s);
}
std::string surface_name(Surface s) {
    switch (s) {
        case Surface::Disk: return "disk";
        case Surface::Annulus: return "annulus";
        case Surface::Torus: return "torus";
    }
    return "?";
}
Surface surface_from(const std::string& s) {
    if (s == "disk") return Surface::Disk;
    if (s == "annulus") return Surface::Annulus;
    if (s == "torus") return Surface::Torus;
    throw ConfigError("bad surface: " + s);
}
} // namespace

json network_to_json(const Network& g) {
    json verts = json::array();
    for (const auto& v : g.verts) {
        json ccw = json::array();
        for (const Half& h : v.ccw) ccw.push_back(json{{"edge", h.edge}, {"end", h.at_dst ? "dst" : "src"}});
        verts.push_back(json{{"color", color_name(v.color)}, {"ccw", ccw}});
    }
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json{{"src", e.src}, {"dst", e.dst}, {"cut", e.cut}, {"sym", e.sym}, {"label", e.label}});
    return json{{"surface", surface_name(g.surface)},
                {"vertices", verts},
                {"edges", edges},
                {"sources", g.sources},
                {"sinks", g.sinks}};
}

Network network_from_json(const json& j) {
    Network g;
    g.surface = surface_from(j.at("surface").get<std::string>());
    for (auto& vj : j.at("vertices")) {
        NetVertex v;
        v.color = color_from(vj.at("color").get<std::string>());
        for (auto& hj : vj.at("ccw")) v.ccw.push_back({hj.at("edge").get<int>(), hj.at("end").get<std::string>() == "dst"});
        g.verts.push_back(v);
    }
    for (auto& ej : j.at("edges")) {
        NetEdge e;
        e.src = ej.at("src").get<int>();
        e.dst = ej.at("dst").get<int>();
        e.cut = ej.at("cut").get<int>();
        e.sym = ej.at("sym").get<int>();
        e.label = ej.at("label").get<std::string>();
        g.edges.push_back(e);
    }
    g.sources = j.at("sources").get<std::vector<int>>();
    g.sinks = j.at("sinks").get<std::vector<int>>();
    return g;
}

} // namespace penta
