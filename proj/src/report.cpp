#include "ripangles/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ripangles {

std::string fmt_num(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

CsvBuilder::CsvBuilder(std::vector<std::string> header)
    : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i != 0) body_ += ',';
    body_ += header[i];
  }
  body_ += '\n';
}

void CsvBuilder::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_) {
    throw std::logic_error("csv row width mismatch");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != 0) body_ += ',';
    body_ += cells[i];
  }
  body_ += '\n';
}

std::string RunManifest::render(const std::string& timestamp) const {
  std::string out;
  out += "command=" + command + "\n";
  for (const auto& [key, value] : parameters) {
    out += key + "=" + value + "\n";
  }
  out += "artifact_version=" + std::string(kArtifactVersion) + "\n";
  out += "output=" + output_path + "\n";
  out += "timestamp=" + timestamp + "\n";
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_csv_with_manifest(const std::string& path, const std::string& body,
                             const RunManifest& manifest) {
  write_file(path, body);
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  write_file(path + ".manifest", manifest.render(stamp));
}

}  // namespace ripangles
