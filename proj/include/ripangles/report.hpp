#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ripangles/envelope.hpp"

namespace ripangles {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Numeric serialization used in every CSV body: 9 significant digits.
std::string fmt_num(double value);

inline double to_degrees(double radians) { return radians * 180.0 / kPi; }
inline double to_radians(double degrees) { return degrees * kPi / 180.0; }

/// Assembles a CSV body: header row plus data rows, comma separated,
/// "\n" line endings. Identical inputs produce identical bytes.
class CsvBuilder {
 public:
  explicit CsvBuilder(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  const std::string& body() const { return body_; }

 private:
  std::size_t columns_;
  std::string body_;
};

/// Sidecar manifest describing one command invocation. Every value except
/// the timestamp is reproducible.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;  // includes the seed
  std::string output_path;

  /// key=value lines; timestamp comes last so reproducible content leads.
  std::string render(const std::string& timestamp) const;
};

/// Writes content to path, throwing on failure.
void write_file(const std::string& path, const std::string& content);

/// Writes the CSV body to `path` and its manifest to `path + ".manifest"`.
void write_csv_with_manifest(const std::string& path, const std::string& body,
                             const RunManifest& manifest);

}  // namespace ripangles
