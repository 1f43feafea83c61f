#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sgw/bounds.hpp"
#include "sgw/eigensolve.hpp"
#include "sgw/geometry.hpp"

namespace sgw {

inline constexpr int kSpectrumFormatVersion = 1;
inline constexpr char kVectorMagic[9] = "SGWVEC01";

/// Shortest text that is still lossless: 17 significant digits.
std::string format_double(double v);

std::string domain_to_json(const DomainSpec& domain);
/// Accepts {"kind": ..., parameters}; throws ParseError on unknown kinds or missing fields.
DomainSpec domain_from_json(const std::string& text);

/// Spectrum document with a fixed key order, so equal spectra give equal bytes.
/// `vectors_file` names the sidecar (relative to the document) or is empty.
std::string spectrum_to_json(const Spectrum& spectrum, const std::string& vectors_file = {});
/// Parses a spectrum document; vectors are not loaded. Returns the sidecar name through the
/// optional pointer.
Spectrum spectrum_from_json(const std::string& text, std::string* vectors_file = nullptr);

/// Writes the document and, when the spectrum carries vectors, the sidecar `<path>.vec`.
void write_spectrum(const std::filesystem::path& path, const Spectrum& spectrum);
/// Reads the document and its sidecar if one is referenced.
Spectrum read_spectrum(const std::filesystem::path& path);

/// Sidecar layout: magic "SGWVEC01", uint64 rows, uint64 columns, then little-endian doubles
/// column by column.
void write_vectors(const std::filesystem::path& path, const std::vector<double>& data, int rows, int cols);
std::vector<double> read_vectors(const std::filesystem::path& path, int& rows, int& cols);

inline constexpr char kCsvHeader[] = "inequality_id,k,lhs,rhs,slack,satisfied,notes";

std::string checks_to_csv(const std::vector<BoundCheck>& checks);
/// Inverse of checks_to_csv; statuses come back from the satisfied flag and the notes.
std::vector<BoundCheck> checks_from_csv(const std::string& text);

/// Plain "row col value" lines for each stored entry.
std::string operator_to_triplets(const SparseOperator& op);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace sgw
