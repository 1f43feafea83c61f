#include "sgw/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sgw/error.hpp"

namespace sgw {
namespace {

using nlohmann::json;

static_assert(std::endian::native == std::endian::little, "sidecar I/O assumes a little-endian host");

std::string list(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(values[i]);
  }
  return out + "]";
}

std::string quoted(const std::string& s) { return json(s).dump(); }

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw Error(ErrorCode::ParseError, std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

std::vector<double> numbers(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(ErrorCode::ParseError, std::string("missing array field '") + key + "'");
  std::vector<double> out;
  for (const json& v : j.at(key)) {
    if (!v.is_number()) throw Error(ErrorCode::ParseError, std::string("non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

DomainSpec domain_from(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(ErrorCode::ParseError, "domain needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  DomainSpec d;
  if (kind == "rectangle") {
    d.shape = Rectangle{number(j, "a"), number(j, "b")};
  } else if (kind == "box") {
    d.shape = Box{number(j, "a"), number(j, "b"), number(j, "c")};
  } else if (kind == "disk") {
    d.shape = Disk{number(j, "radius")};
  } else if (kind == "l_shape") {
    d.shape = LShape{number(j, "length"), number(j, "width")};
  } else if (kind == "polygon") {
    if (!j.contains("vertices") || !j.at("vertices").is_array())
      throw Error(ErrorCode::ParseError, "polygon needs 'vertices'");
    Polygon p;
    for (const json& v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw Error(ErrorCode::ParseError, "polygon vertices are [x, y] pairs");
      p.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    d.shape = std::move(p);
  } else if (kind == "hyperbolic_rect") {
    d.shape = HyperbolicRect{number(j, "x0"), number(j, "x1"), number(j, "y0"), number(j, "y1")};
  } else {
    throw Error(ErrorCode::ParseError, "unknown domain kind '" + kind + "'");
  }
  return d;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  if (s == "nan" || s == "-nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string domain_to_json(const DomainSpec& domain) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rectangle>) {
          return "{\"kind\": \"rectangle\", \"a\": " + format_double(s.a) + ", \"b\": " + format_double(s.b) + "}";
        } else if constexpr (std::is_same_v<T, Box>) {
          return "{\"kind\": \"box\", \"a\": " + format_double(s.a) + ", \"b\": " + format_double(s.b) +
                 ", \"c\": " + format_double(s.c) + "}";
        } else if constexpr (std::is_same_v<T, Disk>) {
          return "{\"kind\": \"disk\", \"radius\": " + format_double(s.radius) + "}";
        } else if constexpr (std::is_same_v<T, LShape>) {
          return "{\"kind\": \"l_shape\", \"length\": " + format_double(s.length) +
                 ", \"width\": " + format_double(s.width) + "}";
        } else if constexpr (std::is_same_v<T, Polygon>) {
          std::string out = "{\"kind\": \"polygon\", \"vertices\": [";
          for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            if (i > 0) out += ", ";
            out += "[" + format_double(s.vertices[i].x) + ", " + format_double(s.vertices[i].y) + "]";
          }
          return out + "]}";
        } else {
          return "{\"kind\": \"hyperbolic_rect\", \"x0\": " + format_double(s.x0) + ", \"x1\": " +
                 format_double(s.x1) + ", \"y0\": " + format_double(s.y0) + ", \"y1\": " + format_double(s.y1) + "}";
        }
      },
      domain.shape);
}

DomainSpec domain_from_json(const std::string& text) { return domain_from(parse(text)); }

std::string spectrum_to_json(const Spectrum& s, const std::string& vectors_file) {
  std::string out = "{\n";
  out += "  \"format_version\": " + std::to_string(kSpectrumFormatVersion) + ",\n";
  out += "  \"domain\": " + (s.meta.domain ? domain_to_json(*s.meta.domain) : std::string("null")) + ",\n";
  out += "  \"n\": " + std::to_string(s.meta.n) + ",\n";
  out += "  \"h\": " + format_double(s.meta.h) + ",\n";
  out += "  \"tol\": " + format_double(s.meta.tol) + ",\n";
  out += "  \"seed\": " + std::to_string(s.meta.seed) + ",\n";
  out += "  \"provenance\": " + quoted(s.meta.provenance) + ",\n";
  out += "  \"exact\": " + std::string(s.meta.exact ? "true" : "false") + ",\n";
  out += "  \"eigenvalues\": " + list(s.eigenvalues) + ",\n";
  out += "  \"residuals\": " + list(s.residual_norms) + ",\n";
  out += "  \"has_vectors\": " + std::string(s.has_vectors() ? "true" : "false");
  if (!vectors_file.empty()) out += ",\n  \"vectors_file\": " + quoted(vectors_file);
  return out + "\n}\n";
}

Spectrum spectrum_from_json(const std::string& text, std::string* vectors_file) {
  const json j = parse(text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "spectrum document must be an object");
  if (!j.contains("format_version") || j.at("format_version") != kSpectrumFormatVersion)
    throw Error(ErrorCode::ParseError, "unsupported spectrum format_version");
  Spectrum s;
  if (j.contains("domain") && !j.at("domain").is_null()) s.meta.domain = domain_from(j.at("domain"));
  s.meta.n = static_cast<int>(number(j, "n"));
  s.meta.h = number(j, "h");
  s.meta.tol = number(j, "tol");
  if (!j.contains("seed") || !j.at("seed").is_number_integer())
    throw Error(ErrorCode::ParseError, "missing integer field 'seed'");
  s.meta.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("provenance") && j.at("provenance").is_string()) s.meta.provenance = j.at("provenance");
  if (j.contains("exact") && j.at("exact").is_boolean()) s.meta.exact = j.at("exact");
  s.eigenvalues = numbers(j, "eigenvalues");
  s.residual_norms = numbers(j, "residuals");
  if (s.residual_norms.size() != s.eigenvalues.size())
    throw Error(ErrorCode::ParseError, "eigenvalues and residuals differ in length");
  for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues[i] < s.eigenvalues[i - 1]) throw Error(ErrorCode::ParseError, "eigenvalues are not ascending");
  }
  if (vectors_file) {
    vectors_file->clear();
    if (j.contains("vectors_file") && j.at("vectors_file").is_string()) *vectors_file = j.at("vectors_file");
  }
  return s;
}

void write_spectrum(const std::filesystem::path& path, const Spectrum& spectrum) {
  std::string sidecar;
  if (spectrum.has_vectors()) {
    sidecar = path.filename().string() + ".vec";
    write_vectors(path.parent_path() / sidecar, spectrum.eigenvectors, spectrum.vector_rows, spectrum.size());
  }
  write_text(path, spectrum_to_json(spectrum, sidecar));
}

Spectrum read_spectrum(const std::filesystem::path& path) {
  std::string sidecar;
  Spectrum s = spectrum_from_json(read_text(path), &sidecar);
  if (!sidecar.empty()) {
    int rows = 0;
    int cols = 0;
    s.eigenvectors = read_vectors(path.parent_path() / sidecar, rows, cols);
    if (cols != s.size()) throw Error(ErrorCode::ParseError, "sidecar column count does not match the spectrum");
    s.vector_rows = rows;
  }
  return s;
}

void write_vectors(const std::filesystem::path& path, const std::vector<double>& data, int rows, int cols) {
  if (static_cast<std::size_t>(rows) * cols != data.size())
    throw Error(ErrorCode::SizeMismatch, "vector block does not match rows x cols");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  const std::uint64_t dims[2] = {static_cast<std::uint64_t>(rows), static_cast<std::uint64_t>(cols)};
  out.write(kVectorMagic, 8);
  out.write(reinterpret_cast<const char*>(dims), sizeof dims);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size() * sizeof(double)));
  if (!out) throw Error(ErrorCode::IoError, "short write to " + path.string());
}

std::vector<double> read_vectors(const std::filesystem::path& path, int& rows, int& cols) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  char magic[8];
  std::uint64_t dims[2];
  in.read(magic, 8);
  in.read(reinterpret_cast<char*>(dims), sizeof dims);
  if (!in || std::memcmp(magic, kVectorMagic, 8) != 0)
    throw Error(ErrorCode::ParseError, path.string() + " is not a vector sidecar");
  if (dims[0] > (1u << 30) || dims[1] > (1u << 20)) throw Error(ErrorCode::ParseError, "implausible sidecar size");
  rows = static_cast<int>(dims[0]);
  cols = static_cast<int>(dims[1]);
  std::vector<double> data(static_cast<std::size_t>(dims[0] * dims[1]));
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size() * sizeof(double)));
  if (!in) throw Error(ErrorCode::ParseError, "truncated sidecar " + path.string());
  return data;
}

std::string checks_to_csv(const std::vector<BoundCheck>& checks) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const BoundCheck& c : checks) {
    std::string notes = c.notes;
    if (c.status != CheckStatus::Satisfied && c.status != CheckStatus::Violated) {
      notes = "status=" + std::string(to_string(c.status)) + (notes.empty() ? "" : ";" + notes);
    }
    for (char& ch : notes) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    out += std::string(to_string(c.id)) + "," + std::to_string(c.k) + "," + format_double(c.lhs) + "," +
           format_double(c.rhs) + "," + format_double(c.slack) + "," + (c.satisfied ? "true" : "false") + "," +
           notes + "\n";
  }
  return out;
}

std::vector<BoundCheck> checks_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error(ErrorCode::ParseError, "missing CSV header");
  std::vector<BoundCheck> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw Error(ErrorCode::ParseError, "CSV row needs 7 fields: " + line);
    BoundCheck c;
    const auto id = inequality_from_string(f[0]);
    if (!id) throw Error(ErrorCode::ParseError, "unknown inequality '" + f[0] + "'");
    c.id = *id;
    c.k = static_cast<int>(parse_double(f[1]));
    c.lhs = parse_double(f[2]);
    c.rhs = parse_double(f[3]);
    c.slack = parse_double(f[4]);
    if (f[5] != "true" && f[5] != "false") throw Error(ErrorCode::ParseError, "satisfied must be true or false");
    c.satisfied = f[5] == "true";
    c.status = c.satisfied ? CheckStatus::Satisfied : CheckStatus::Violated;
    c.notes = f[6];
    if (c.notes.rfind("status=", 0) == 0) {
      const std::string tag = c.notes.substr(7, c.notes.find(';') == std::string::npos ? std::string::npos
                                                                                       : c.notes.find(';') - 7);
      for (CheckStatus s : {CheckStatus::Degenerate, CheckStatus::Infeasible, CheckStatus::Skipped}) {
        if (tag == to_string(s)) c.status = s;
      }
      const auto cut = c.notes.find(';');
      c.notes = cut == std::string::npos ? std::string() : c.notes.substr(cut + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string operator_to_triplets(const SparseOperator& op) {
  std::string out;
  for (int r = 0; r < op.n; ++r) {
    for (int p = op.row_offsets[r]; p < op.row_offsets[r + 1]; ++p)
      out += std::to_string(r) + " " + std::to_string(op.column_indices[p]) + " " + format_double(op.values[p]) + "\n";
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "short write to " + path.string());
}

}  // namespace sgw
