#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "jinsig/mesh.hpp"
#include "jinsig/signature.hpp"

namespace jinsig::io {

/// One "x,y" pair per line; blank lines and '#' comments are skipped, an
/// optional first non-comment header line is allowed, and the comments
/// "# closed=true" and "# label=..." set the mesh flags.
Mesh2d parse_mesh_csv(const std::string& text, const std::string& source = "<csv>");

/// {"points": [[x, y], ...], "closed": bool, "label": string}; only "points" is required.
Mesh2d parse_mesh_json(const std::string& text, const std::string& source = "<json>");

/// Chooses the JSON reader for *.json files and the CSV reader otherwise.
Mesh2d read_mesh(const std::string& path);

void write_mesh_csv(std::ostream& out, const Mesh2d& m);
void write_mesh_json(std::ostream& out, const Mesh2d& m);

/// Ordered key=value pairs written as '#' comment lines above the header.
using Provenance = std::map<std::string, std::string>;

/// Header "index,kappa,kappa_s,scheme,m1,m2"; reals at 17 significant digits.
void write_signature_csv(std::ostream& out, const Signature<double>& sig, const Provenance& provenance = {});
Signature<double> parse_signature_csv(const std::string& text, const std::string& source = "<csv>");

std::string read_file(const std::string& path);

/// Shortest round-tripping decimal form with 17 significant digits.
std::string format_real(double v);

}  // namespace jinsig::io
