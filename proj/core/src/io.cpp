#include "oforge/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace oforge {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// Round to 9 significant digits so serialized numbers are stable.
double r9(double v) { return std::stod(fmt9(v)); }

ordered_json vec3_json(const Vec3& v) {
    return ordered_json::array({r9(v.x), r9(v.y), r9(v.z)});
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << content;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

GraphDocument read_graph(const std::filesystem::path& path) {
    std::string text = read_file(path);
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }

    GraphDocument out;
    try {
        if (!doc.contains("vertices"))
            throw Error(ErrorCode::ValidationError, "missing field \"vertices\"");
        int vertex_count = 0;
        if (doc["vertices"].is_number_integer()) {
            vertex_count = doc["vertices"].get<int>();
        } else if (doc["vertices"].is_array()) {
            for (const auto& label : doc["vertices"])
                out.labels.push_back(label.get<std::string>());
            vertex_count = static_cast<int>(out.labels.size());
        } else {
            throw Error(ErrorCode::ValidationError,
                        "\"vertices\" must be a count or a list of labels");
        }

        if (!doc.contains("faces") || !doc["faces"].is_array())
            throw Error(ErrorCode::ValidationError, "missing or non-array field \"faces\"");
        std::vector<std::vector<int>> faces;
        for (const auto& f : doc["faces"]) {
            if (!f.is_array())
                throw Error(ErrorCode::ValidationError, "\"faces\" entries must be arrays");
            faces.push_back(f.get<std::vector<int>>());
        }
        out.graph = validate_graph(vertex_count, std::move(faces));

        if (doc.contains("coords3d")) {
            const auto& coords = doc["coords3d"];
            if (!coords.is_array() || static_cast<int>(coords.size()) != vertex_count)
                throw Error(ErrorCode::ValidationError,
                            "\"coords3d\" must list one [x, y, z] per vertex");
            LiftedPolyhedron solid;
            solid.graph = out.graph;
            for (const auto& c : coords) {
                auto triple = c.get<std::vector<double>>();
                if (triple.size() != 3)
                    throw Error(ErrorCode::ValidationError, "\"coords3d\" entries need 3 numbers");
                solid.coords.push_back({triple[0], triple[1], triple[2]});
            }
            auto rep = verify_convex_polyhedron(solid);
            if (!rep.pass)
                throw Error(ErrorCode::ValidationError,
                            "coords3d is not a convex realization: " + rep.failures.front());
            out.solid = std::move(solid);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ValidationError, path.string() + ": " + e.what());
    }
    return out;
}

void write_graph(const PolyhedralGraph& g, const std::filesystem::path& path) {
    ordered_json doc;
    doc["vertices"] = g.vertex_count;
    doc["faces"] = g.faces;
    write_file(path, doc.dump(2) + "\n");
}

std::string to_obj(const LiftedPolyhedron& p) {
    std::ostringstream os;
    os << "# overlap-forge mesh: " << p.coords.size() << " vertices, "
       << p.graph.face_count() << " faces\n";
    for (const auto& c : p.coords)
        os << "v " << fmt9(c.x) << " " << fmt9(c.y) << " " << fmt9(c.z) << "\n";
    for (const auto& f : p.graph.faces) {
        os << "f";
        for (int v : f) os << " " << v + 1;
        os << "\n";
    }
    return os.str();
}

std::string to_svg(const Unfolding& u, const OverlapReport* report, const CutTree* tree) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& poly : u.placements)
        for (const auto& pt : poly) {
            xmin = std::min(xmin, pt.x);
            xmax = std::max(xmax, pt.x);
            ymin = std::min(ymin, -pt.y);  // y flipped for screen coordinates
            ymax = std::max(ymax, -pt.y);
        }
    double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
    double w = (xmax - xmin) + 2 * margin, h = (ymax - ymin) + 2 * margin;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt9(xmin - margin) << " "
       << fmt9(ymin - margin) << " " << fmt9(w) << " " << fmt9(h) << "\">\n";
    double stroke = 0.004 * std::max(w, h);

    for (size_t f = 0; f < u.placements.size(); ++f) {
        os << "  <polygon points=\"";
        for (size_t i = 0; i < u.placements[f].size(); ++i) {
            const auto& pt = u.placements[f][i];
            os << (i ? " " : "") << fmt9(pt.x) << "," << fmt9(-pt.y);
        }
        os << "\" fill=\"#cfe0f0\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
    }

    // Edge strokes: cut edges stand out, fold edges stay light. Placements
    // are aligned with face cycles, so the primal edge under each placed
    // segment is known when the cut tree is supplied.
    for (size_t f = 0; f < u.placements.size(); ++f) {
        const auto& poly = u.placements[f];
        int k = static_cast<int>(poly.size());
        for (int i = 0; i < k; ++i) {
            bool cut = true;
            if (tree && f < u.face_cycles.size()) {
                const auto& cycle = u.face_cycles[f];
                cut = tree->contains(cycle[i], cycle[(i + 1) % k]);
            }
            os << "  <line x1=\"" << fmt9(poly[i].x) << "\" y1=\"" << fmt9(-poly[i].y)
               << "\" x2=\"" << fmt9(poly[(i + 1) % k].x) << "\" y2=\""
               << fmt9(-poly[(i + 1) % k].y) << "\""
               << (cut ? " stroke=\"#b03030\" stroke-width=\"" + fmt9(stroke) + "\""
                       : " stroke=\"#888888\" stroke-width=\"" + fmt9(0.5 * stroke) + "\"")
               << "/>\n";
        }
    }

    if (report) {
        for (const auto& wtn : report->witnesses) {
            // shade the actual intersection region
            auto inter = clip_convex(u.placements[wtn.face_a], u.placements[wtn.face_b]);
            if (inter.size() < 3) continue;
            os << "  <polygon points=\"";
            for (size_t i = 0; i < inter.size(); ++i)
                os << (i ? " " : "") << fmt9(inter[i].x) << "," << fmt9(-inter[i].y);
            os << "\" fill=\"#d03030\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string overlap_report_to_json(const OverlapReport& r) {
    ordered_json doc;
    doc["overlapping"] = r.overlapping;
    doc["is_net"] = r.is_net;
    doc["eps_area"] = r9(r.eps_area);
    doc["witnesses"] = ordered_json::array();
    for (const auto& w : r.witnesses) {
        ordered_json jw;
        jw["faces"] = {w.face_a, w.face_b};
        jw["area"] = r9(w.area);
        jw["depth"] = r9(w.depth);
        jw["point"] = {r9(w.point.x), r9(w.point.y)};
        doc["witnesses"].push_back(jw);
    }
    return doc.dump(2) + "\n";
}

std::string certificate_to_json(const OverlapCertificate& c) {
    ordered_json doc;
    doc["format"] = "overlap-forge-certificate/1";
    doc["graph"] = {{"hash", c.graph_hash},
                    {"vertices", c.graph.vertex_count},
                    {"faces", c.graph.faces}};
    doc["route"] = route_name(c.route);
    doc["base_face"] = c.base_face;
    doc["root_face"] = c.root_face;
    doc["coordinates"] = ordered_json::array();
    for (const auto& v : c.coords) doc["coordinates"].push_back(vec3_json(v));

    doc["scale_history"] = ordered_json::array();
    for (const auto& s : c.scale_history) {
        ordered_json js;
        js["kind"] = s.kind == ScaleParams::Kind::Vertical ? "vertical" : "horizontal";
        if (s.kind == ScaleParams::Kind::Horizontal)
            js["axis"] = {r9(s.direction.x), r9(s.direction.y)};
        js["factor"] = r9(s.factor);
        doc["scale_history"].push_back(js);
    }

    doc["cut_tree"] = ordered_json::array();
    for (auto [u, v] : c.tree.edges) doc["cut_tree"].push_back({u, v});
    doc["z_path"] = {c.z.a1, c.z.a2, c.z.a3, c.z.a4};
    doc["z_metrics"] = {{"alpha_deg", r9(rad2deg(c.z.alpha))},
                        {"omega1_deg", r9(rad2deg(c.z.omega1))},
                        {"omega2_deg", r9(rad2deg(c.z.omega2))},
                        {"len12", r9(c.z.len12)},
                        {"len23", r9(c.z.len23)},
                        {"host_face", c.z.host_face},
                        {"delta_prime_face", c.z.delta_prime_face}};

    ordered_json overlap;
    overlap["overlapping"] = c.overlap.overlapping;
    overlap["eps_area"] = r9(c.overlap.eps_area);
    overlap["witnesses"] = ordered_json::array();
    for (const auto& w : c.overlap.witnesses) {
        ordered_json jw;
        jw["faces"] = {w.face_a, w.face_b};
        jw["area"] = r9(w.area);
        jw["depth"] = r9(w.depth);
        jw["point"] = {r9(w.point.x), r9(w.point.y)};
        overlap["witnesses"].push_back(jw);
    }
    doc["overlap"] = overlap;

    doc["residuals"] = {{"equilibrium", r9(c.residuals.equilibrium)},
                        {"closure", r9(c.residuals.closure)},
                        {"base_planarity", r9(c.residuals.base_planarity)},
                        {"gauss_bonnet", r9(c.residuals.gauss_bonnet)},
                        {"unfolding_isometry", r9(c.residuals.unfolding_isometry)}};
    return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_artifacts(const OverlapCertificate& c,
                                                   const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    LiftedPolyhedron p;
    p.graph = c.graph;
    p.coords = c.coords;
    p.base_face = c.base_face;
    Unfolding u = unfold(p, c.tree, c.root_face);

    std::vector<std::filesystem::path> files;
    auto cert_path = out_dir / "certificate.json";
    write_file(cert_path, certificate_to_json(c));
    files.push_back(cert_path);
    auto obj_path = out_dir / "polyhedron.obj";
    write_file(obj_path, to_obj(p));
    files.push_back(obj_path);
    auto svg_path = out_dir / "unfolding.svg";
    write_file(svg_path, to_svg(u, &c.overlap, &c.tree));
    files.push_back(svg_path);
    return files;
}

std::vector<std::filesystem::path> write_artifacts(const Unfolding& u, const OverlapReport& r,
                                                   const std::filesystem::path& out_dir,
                                                   const CutTree* tree) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> files;
    auto svg_path = out_dir / "unfolding.svg";
    write_file(svg_path, to_svg(u, &r, tree));
    files.push_back(svg_path);
    auto json_path = out_dir / "overlap.json";
    write_file(json_path, overlap_report_to_json(r));
    files.push_back(json_path);
    return files;
}

std::vector<std::filesystem::path> write_artifacts(const LiftedPolyhedron& p,
                                                   const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    auto obj_path = out_dir / "polyhedron.obj";
    write_file(obj_path, to_obj(p));
    return {obj_path};
}

}  // namespace oforge
