// overlap-forge: realize a combinatorial polyhedron as a convex solid and
// cut it so the unfolding overlaps, with machine-checkable artifacts.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "oforge/io.hpp"

namespace {

using namespace oforge;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitPipeline = 2;
constexpr int kExitIo = 3;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::ValidationError:
        case ErrorCode::EulerViolation:
        case ErrorCode::NonCoherentOrientation:
        case ErrorCode::NotThreeConnected:
        case ErrorCode::DegenerateFace:
        case ErrorCode::NotAnEdge:
        case ErrorCode::NonConvexBase:
        case ErrorCode::CollinearBase:
        case ErrorCode::VertexNotOnFace:
            return kExitValidation;
        case ErrorCode::IoError:
            return kExitIo;
        default:
            return kExitPipeline;
    }
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-', 1);  // allow a leading sign to fail int parsing below
        if (dash == std::string::npos)
            throw Error(ErrorCode::ValidationError, "edge \"" + tok + "\" is not of form u-v");
        try {
            edges.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
        } catch (const std::exception&) {
            throw Error(ErrorCode::ValidationError, "edge \"" + tok + "\" is not of form u-v");
        }
    }
    return edges;
}

// JSON array of [u, v, w] triples; unlisted edges keep weight 1.
std::vector<double> load_weights(const PolyhedralGraph& g, const std::string& path,
                                 int base_face) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    if (!doc.is_array())
        throw Error(ErrorCode::ValidationError, "weights file must be an array of [u, v, w]");
    auto stress = uniform_stress(g, base_face);
    for (const auto& entry : doc) {
        if (!entry.is_array() || entry.size() != 3)
            throw Error(ErrorCode::ValidationError, "weight entries must be [u, v, w]");
        int idx = g.edge_index(entry[0].get<int>(), entry[1].get<int>());
        if (idx < 0) throw Error(ErrorCode::ValidationError, "weight entry names a non-edge");
        stress[idx] = entry[2].get<double>();
    }
    return stress;
}

int cmd_validate(const std::string& input) {
    GraphDocument doc = read_graph(input);
    const auto& g = doc.graph;
    std::cout << "valid polyhedral graph: V=" << g.vertex_count << " E=" << g.edge_count()
              << " F=" << g.face_count() << " (V-E+F=2, coherent orientation, 3-connected)\n";
    if (doc.solid) std::cout << "coords3d: convex realization verified\n";
    return kExitOk;
}

int cmd_realize(const std::string& input, const std::string& out_dir,
                const std::string& weights, int base_face) {
    GraphDocument doc = read_graph(input);
    const auto& g = doc.graph;
    if (base_face < 0 || base_face >= g.face_count())
        throw Error(ErrorCode::ValidationError, "base face index out of range");

    std::vector<double> stress = weights == "uniform" ? uniform_stress(g, base_face)
                                                      : load_weights(g, weights, base_face);

    auto base_coords = embed_base_polygon(g.faces[base_face], BaseShape::regular(1.0));
    PlanarEmbedding emb = tutte_embed(g, base_face, base_coords, stress);
    auto emb_rep = verify_embedding(emb);
    LiftedPolyhedron p = maxwell_cremona_lift(emb);
    auto files = write_artifacts(p, out_dir);

    std::cout << "tutte embedding: equilibrium residual " << emb_rep.max_equilibrium_residual
              << "\n";
    std::cout << "lifting: closure residual " << p.closure_residual << ", base planarity "
              << p.base_planarity_error << "\n";
    for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
    return kExitOk;
}

int cmd_unfold(const std::string& input, const std::string& tree_text, int root,
               const std::string& out_dir) {
    GraphDocument doc = read_graph(input);
    if (!doc.solid)
        throw Error(ErrorCode::ValidationError, "unfold needs \"coords3d\" in the input");
    CutTree t;
    for (auto [u, v] : parse_edge_list(tree_text)) {
        if (doc.graph.edge_index(u, v) < 0)
            throw Error(ErrorCode::NotAnEdge,
                        std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
        t.edges.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(t.edges.begin(), t.edges.end());

    Unfolding u = unfold(*doc.solid, t, root);
    OverlapReport rep = detect_overlap(u);
    auto files = write_artifacts(u, rep, out_dir, &t);
    std::cout << (rep.overlapping ? "overlap detected" : "net (no overlap)") << ", "
              << rep.witnesses.size() << " witness(es)\n";
    for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
    return kExitOk;
}

int cmd_pipeline(const std::string& input, const std::string& out_dir,
                 const PipelineConfig& config) {
    GraphDocument doc = read_graph(input);
    OverlapCertificate cert = realize_with_overlap(doc.graph, config);
    if (!replay_certificate(cert))
        throw Error(ErrorCode::InternalInvariantViolation, "certificate failed to replay");
    auto files = write_artifacts(cert, out_dir);

    std::cout << "route: " << route_name(cert.route) << "\n";
    std::cout << "z path: " << cert.z.a1 << "-" << cert.z.a2 << "-" << cert.z.a3 << "-"
              << cert.z.a4 << "  alpha=" << rad2deg(cert.z.alpha)
              << " deg, omega1=" << rad2deg(cert.z.omega1)
              << " deg, omega2=" << rad2deg(cert.z.omega2) << " deg\n";
    std::cout << "overlap witnesses: " << cert.overlap.witnesses.size() << " (largest area "
              << (cert.overlap.witnesses.empty() ? 0.0 : cert.overlap.witnesses[0].area)
              << ")\n";
    for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
    std::cout << "certified: unfolding overlaps\n";
    return kExitOk;
}

int cmd_trees(const std::string& input, bool count_only, long long limit, bool census) {
    GraphDocument doc = read_graph(input);
    const auto& g = doc.graph;

    if (count_only) {
        std::cout << count_spanning_trees(g) << "\n";
        return kExitOk;
    }
    if (census) {
        if (!doc.solid)
            throw Error(ErrorCode::ValidationError, "--census needs \"coords3d\" in the input");
        long long nets = 0, overlaps = 0, total = 0;
        bool exceeded = false;
        for_each_spanning_tree(g, [&](const CutTree& t) {
            if (limit > 0 && total >= limit) {
                exceeded = true;
                return false;
            }
            ++total;
            Unfolding u = unfold(*doc.solid, t);
            (detect_overlap(u).overlapping ? overlaps : nets)++;
            return true;
        });
        if (exceeded) throw Error(ErrorCode::LimitExceeded, "tree limit exceeded");
        std::cout << "trees: " << total << "\n";
        std::cout << "nets: " << nets << "\n";
        std::cout << "overlapping: " << overlaps << "\n";
        if (overlaps == 0)
            std::cout << "congruence classes: " << count_incongruent_unfoldings(*doc.solid)
                      << "\n";
        else
            std::cout << "congruence classes: n/a (overlap present)\n";
        return kExitOk;
    }

    long long total = 0;
    bool exceeded = false;
    for_each_spanning_tree(g, [&](const CutTree& t) {
        if (limit > 0 && total >= limit) {
            exceeded = true;
            return false;
        }
        ++total;
        for (size_t i = 0; i < t.edges.size(); ++i)
            std::cout << (i ? "," : "") << t.edges[i].first << "-" << t.edges[i].second;
        std::cout << "\n";
        return true;
    });
    if (exceeded) throw Error(ErrorCode::LimitExceeded, "tree limit exceeded");
    std::cout << "total: " << total << "\n";
    return kExitOk;
}

int cmd_critical_omega(double alpha_deg, double len12, double len23) {
    double omega = critical_omega(deg2rad(alpha_deg), len12, len23);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", rad2deg(omega));
    std::cout << buf << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"overlap-forge: convex realizations whose edge unfoldings overlap"};
    app.require_subcommand(1);

    std::string input, out_dir = ".", weights = "uniform", tree_text;
    int base_face = 0, root = 0;
    long long limit = 0;
    bool count_only = false, census = false;
    double alpha_deg = 60.0, len12 = 1.0, len23 = 1.0;
    PipelineConfig config;

    auto* validate = app.add_subcommand("validate", "check a graph document");
    validate->add_option("--input", input, "graph JSON")->required();

    auto* realize = app.add_subcommand("realize", "Tutte embed, lift, export OBJ");
    realize->add_option("--input", input, "graph JSON")->required();
    realize->add_option("--out", out_dir, "output directory")->required();
    realize->add_option("--weights", weights, "uniform | path to [u,v,w] triples");
    realize->add_option("--base-face", base_face, "base face index (default 0)");

    auto* unfold_cmd = app.add_subcommand("unfold", "unfold along a cut tree, export SVG");
    unfold_cmd->add_option("--input", input, "polyhedron JSON with coords3d")->required();
    unfold_cmd->add_option("--tree", tree_text, "cut edges, e.g. \"0-1,1-2,...\"")->required();
    unfold_cmd->add_option("--root", root, "root face index");
    unfold_cmd->add_option("--out", out_dir, "output directory")->required();

    auto* pipeline = app.add_subcommand("pipeline", "full overlap certificate");
    pipeline->add_option("--input", input, "graph JSON")->required();
    pipeline->add_option("--out", out_dir, "output directory")->required();
    pipeline->add_option("--omega-target", config.omega_target_deg,
                         "curvature target at a1, a2 in degrees (default 15)");
    pipeline->add_option("--max-iters", config.max_iters, "retry cap (default 40)");
    pipeline->add_option("--eps", config.eps, "geometry tolerance (default 1e-9)");
    pipeline->add_option("--seed", config.seed, "cut-tree completion seed");

    auto* trees = app.add_subcommand("trees", "count or enumerate spanning trees");
    trees->add_option("--input", input, "graph JSON")->required();
    trees->add_flag("--count-only", count_only, "print the matrix-tree count only");
    trees->add_option("--limit", limit, "enumeration cap");
    trees->add_flag("--census", census, "unfold every tree (needs coords3d)");

    auto* comega = app.add_subcommand("critical-omega", "curvature threshold of the Z model");
    comega->add_option("--alpha", alpha_deg, "corner angle in degrees")->required();
    comega->add_option("--len12", len12, "length |a1 a2|");
    comega->add_option("--len23", len23, "length |a2 a3|");

    CLI11_PARSE(app, argc, argv);

    if (const char* env_seed = std::getenv("OVERLAP_FORGE_SEED"))
        config.seed = std::strtoull(env_seed, nullptr, 10);

    try {
        if (validate->parsed()) return cmd_validate(input);
        if (realize->parsed()) return cmd_realize(input, out_dir, weights, base_face);
        if (unfold_cmd->parsed()) return cmd_unfold(input, tree_text, root, out_dir);
        if (pipeline->parsed()) return cmd_pipeline(input, out_dir, config);
        if (trees->parsed()) return cmd_trees(input, count_only, limit, census);
        if (comega->parsed()) return cmd_critical_omega(alpha_deg, len12, len23);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPipeline;
    }
    return kExitOk;
}
