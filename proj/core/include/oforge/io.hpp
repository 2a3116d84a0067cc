#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "oforge/pipeline.hpp"

namespace oforge {

/// Parsed graph document: combinatorics always, plus a convexity-checked
/// solid when the file carries "coords3d".
struct GraphDocument {
    PolyhedralGraph graph;
    std::optional<LiftedPolyhedron> solid;
    std::vector<std::string> labels;  // optional vertex labels
};

/// Reads { "vertices": N | [labels...], "faces": [[...], ...],
/// "coords3d": [[x,y,z], ...] }. Throws ParseError with position context and
/// ValidationError with field context.
GraphDocument read_graph(const std::filesystem::path& path);

void write_graph(const PolyhedralGraph& g, const std::filesystem::path& path);

// Deterministic text formats: stable ordering, 9-significant-digit numbers.
std::string to_obj(const LiftedPolyhedron& p);
std::string to_svg(const Unfolding& u, const OverlapReport* report = nullptr,
                   const CutTree* tree = nullptr);
std::string certificate_to_json(const OverlapCertificate& c);
std::string overlap_report_to_json(const OverlapReport& r);

std::vector<std::filesystem::path> write_artifacts(const OverlapCertificate& c,
                                                   const std::filesystem::path& out_dir);
std::vector<std::filesystem::path> write_artifacts(const Unfolding& u, const OverlapReport& r,
                                                   const std::filesystem::path& out_dir,
                                                   const CutTree* tree = nullptr);
std::vector<std::filesystem::path> write_artifacts(const LiftedPolyhedron& p,
                                                   const std::filesystem::path& out_dir);

}  // namespace oforge
