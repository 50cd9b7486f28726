#pragma once

// JSON net files, Christoffel-symbol files and OBJ export.

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "isonet/koenigs.hpp"
#include "isonet/quadnet.hpp"
#include "isonet/spaceform.hpp"

namespace isonet {

inline constexpr const char* kFormatVersion = "1.0";
inline constexpr const char* kSignature = "++++-";

/// A net with its space-form datum. Vertices are stored m-major: the vertex
/// (m, n) has index m (N + 1) + n.
struct NetFile {
  QuadNet net;
  MVec q;
  std::optional<MVec> origin;
  std::map<std::string, std::string> metadata;

  SpaceForm space_form() const { return SpaceForm(q, origin); }
};

NetFile make_net_file(QuadNet net, const SpaceForm& sf,
                      std::map<std::string, std::string> metadata = {});

/// Throws InvalidInput naming the offending field or vertex. A "kappa"
/// metadata entry must agree with -(q,q).
NetFile parse_net(const std::string& text);
std::string serialize_net(const NetFile& file);

NetFile read_net(const std::filesystem::path& path);
void write_net(const std::filesystem::path& path, const NetFile& file);

NuField parse_nu(const std::string& text);
std::string serialize_nu(const NuField& nu);
NuField read_nu(const std::filesystem::path& path);
void write_nu(const std::filesystem::path& path, const NuField& nu);

enum class ObjChart { Euclidean, Orthographic4 };

/// Quad-face OBJ, vertices m-major with 1-based face indices. Euclidean
/// writes the chart coordinates of chart_project (kappa = 0, (s,q) != 0);
/// Orthographic4 writes x1, x2, x3.
std::string export_obj(const QuadNet& net, const SpaceForm& sf, ObjChart chart);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace isonet
