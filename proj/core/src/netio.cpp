#include "isonet/netio.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "isonet/errors.hpp"

namespace isonet {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw GeometryError(ErrorKind::InvalidInput, what);
}

json to_json(const MVec& v) {
  json a = json::array();
  for (double x : v.components()) a.push_back(x);
  return a;
}

MVec mvec_from(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != kAmbientDim) {
    bad(field + " must be an array of 5 numbers");
  }
  std::array<double, kAmbientDim> c{};
  for (std::size_t i = 0; i < kAmbientDim; ++i) {
    if (!j[i].is_number()) bad(field + " must contain numbers only");
    c[i] = j[i].get<double>();
    if (!std::isfinite(c[i])) bad(field + " must be finite");
  }
  return MVec(c);
}

std::pair<int, int> dims_from(const json& doc) {
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].size() != 2 ||
      !doc["dims"][0].is_number_integer() || !doc["dims"][1].is_number_integer()) {
    bad("dims must be [M, N]");
  }
  const int M = doc["dims"][0].get<int>();
  const int N = doc["dims"][1].get<int>();
  if (M < 1 || N < 1) bad("dims must be positive");
  return {M, N};
}

json parse_doc(const std::string& text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) bad("expected a JSON object");
    if (!doc.contains("format_version") || doc["format_version"] != kFormatVersion) {
      bad(std::string("format_version must be \"") + kFormatVersion + "\"");
    }
    return doc;
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

NetFile make_net_file(QuadNet net, const SpaceForm& sf,
                      std::map<std::string, std::string> metadata) {
  return {std::move(net), sf.q(), sf.origin(), std::move(metadata)};
}

NetFile parse_net(const std::string& text) {
  const json doc = parse_doc(text);
  const auto [M, N] = dims_from(doc);
  if (!doc.contains("signature") || doc["signature"] != kSignature) {
    bad(std::string("signature must be \"") + kSignature + "\"");
  }
  if (!doc.contains("q")) bad("missing q");
  const MVec q = mvec_from(doc["q"], "q");
  std::optional<MVec> origin;
  if (doc.contains("o") && !doc["o"].is_null()) origin = mvec_from(doc["o"], "o");

  if (!doc.contains("vertices") || !doc["vertices"].is_array()) bad("missing vertices");
  const json& verts = doc["vertices"];
  const auto expected = static_cast<std::size_t>(M + 1) * static_cast<std::size_t>(N + 1);
  if (verts.size() != expected) {
    bad("expected (M+1)(N+1) = " + std::to_string(expected) + " vertices, got " +
        std::to_string(verts.size()));
  }
  QuadNet net(M, N);
  for (int m = 0; m <= M; ++m) {
    for (int n = 0; n <= N; ++n) {
      const auto idx = static_cast<std::size_t>(m) * static_cast<std::size_t>(N + 1) +
                       static_cast<std::size_t>(n);
      net(m, n) = mvec_from(verts[idx], to_string(VertexIndex{m, n}));
    }
  }

  std::map<std::string, std::string> metadata;
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) bad("metadata must be an object of strings");
    for (const auto& [key, value] : doc["metadata"].items()) {
      if (!value.is_string()) bad("metadata value for \"" + key + "\" must be a string");
      metadata[key] = value.get<std::string>();
    }
  }
  NetFile file{std::move(net), q, origin, std::move(metadata)};
  if (auto it = file.metadata.find("kappa"); it != file.metadata.end()) {
    double kappa = 0.0;
    try {
      kappa = std::stod(it->second);
    } catch (const std::exception&) {
      bad("metadata kappa is not a number");
    }
    const double derived = -inner(q, q);
    if (std::abs(kappa - derived) > 1e-12 * std::max(1.0, std::abs(derived))) {
      bad("metadata kappa = " + it->second + " disagrees with -(q,q) = " +
          json(derived).dump());
    }
  }
  (void)file.space_form();  // validates q and o
  return file;
}

std::string serialize_net(const NetFile& file) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["dims"] = {file.net.m_faces(), file.net.n_faces()};
  doc["signature"] = kSignature;
  doc["q"] = to_json(file.q);
  if (file.origin) doc["o"] = to_json(*file.origin);
  json verts = json::array();
  for (const MVec& v : file.net.vertices().flat()) verts.push_back(to_json(v));
  doc["vertices"] = std::move(verts);
  doc["metadata"] = json::object();
  for (const auto& [key, value] : file.metadata) doc["metadata"][key] = value;
  return doc.dump(1) + "\n";
}

NetFile read_net(const std::filesystem::path& path) {
  try {
    return parse_net(read_text(path));
  } catch (const GeometryError& e) {
    throw GeometryError(e.kind(), path.string() + ": " + e.what(), e.location(),
                        e.residual());
  }
}

void write_net(const std::filesystem::path& path, const NetFile& file) {
  write_text(path, serialize_net(file));
}

NuField parse_nu(const std::string& text) {
  const json doc = parse_doc(text);
  const auto [M, N] = dims_from(doc);
  if (!doc.contains("nu") || !doc["nu"].is_array()) bad("missing nu");
  const json& values = doc["nu"];
  const auto expected = static_cast<std::size_t>(M + 1) * static_cast<std::size_t>(N + 1);
  if (values.size() != expected) {
    bad("expected " + std::to_string(expected) + " nu values, got " +
        std::to_string(values.size()));
  }
  NuField nu{Grid<double>(M + 1, N + 1), 0.0};
  for (std::size_t i = 0; i < expected; ++i) {
    if (!values[i].is_number()) bad("nu values must be numbers");
    const double x = values[i].get<double>();
    if (!std::isfinite(x) || x == 0.0) bad("nu values must be finite and nonzero");
    nu.values.flat()[i] = x;
  }
  if (doc.contains("residual") && doc["residual"].is_number()) {
    nu.residual = doc["residual"].get<double>();
  }
  return nu;
}

std::string serialize_nu(const NuField& nu) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["dims"] = {nu.values.rows() - 1, nu.values.cols() - 1};
  doc["nu"] = nu.values.flat();
  doc["residual"] = nu.residual;
  return doc.dump(1) + "\n";
}

NuField read_nu(const std::filesystem::path& path) { return parse_nu(read_text(path)); }

void write_nu(const std::filesystem::path& path, const NuField& nu) {
  write_text(path, serialize_nu(nu));
}

std::string export_obj(const QuadNet& net, const SpaceForm& sf, ObjChart chart) {
  // nlohmann's number formatting is shortest round-trip and locale independent.
  const auto num = [](double x) { return json(x).dump(); };
  std::string out = "# isonet quad mesh\n";
  for (int m = 0; m <= net.m_faces(); ++m) {
    for (int n = 0; n <= net.n_faces(); ++n) {
      const MVec& v = net(m, n);
      Vec3 x{v[0], v[1], v[2]};
      if (chart == ObjChart::Euclidean) {
        try {
          x = chart_project(v, sf);
        } catch (const GeometryError& e) {
          throw GeometryError(e.kind(), e.what(), to_string(VertexIndex{m, n}));
        }
      }
      out += "v " + num(x[0]) + " " + num(x[1]) + " " + num(x[2]) + "\n";
    }
  }
  const int cols = net.n_faces() + 1;
  const auto id = [cols](VertexIndex v) { return std::to_string(v.m * cols + v.n + 1); };
  for (FaceIndex f : net.faces()) {
    out += "f " + id(f.i()) + " " + id(f.j()) + " " + id(f.k()) + " " + id(f.l()) + "\n";
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path.string());
  out << text;
  if (!out) bad("write failed: " + path.string());
}

}  // namespace isonet
