#include "run_dir.hpp"

#include <algorithm>
#include <filesystem>

#include "hydro/error.hpp"
#include "hydro/version.hpp"

namespace hydro::cli {

RunDir::RunDir(std::string path) : path_(std::move(path)) {
  std::error_code ec;
  std::filesystem::create_directories(path_, ec);
  if (ec) fail(ErrorKind::Io, "cannot create output directory " + path_ + ": " + ec.message());
}

std::string RunDir::file(const std::string& name) const { return (std::filesystem::path(path_) / name).string(); }

void RunDir::write_text(const std::string& name, const std::string& contents) {
  const auto parent = std::filesystem::path(file(name)).parent_path();
  std::error_code ec;
  std::filesystem::create_directories(parent, ec);
  if (ec) fail(ErrorKind::Io, "cannot create " + parent.string());
  write_file_atomic(file(name), contents);
  if (std::find(artifacts_.begin(), artifacts_.end(), name) == artifacts_.end()) artifacts_.push_back(name);
}

void RunDir::write_json(const std::string& name, const nlohmann::json& j) { write_text(name, j.dump(2) + "\n"); }

void RunDir::write_field(const std::string& name, const ScalarField& f, const FieldMeta& meta) {
  const auto parent = std::filesystem::path(file(name)).parent_path();
  std::filesystem::create_directories(parent);
  write_hsf1(file(name), f, meta);
  artifacts_.push_back(name);
  artifacts_.push_back(name + ".json");
}

void RunDir::write_manifest(const std::string& command, const std::string& config_text) {
  nlohmann::json m{{"command", command},
                   {"tool_version", kVersion},
                   {"field_format", kFieldFormat},
                   {"config", config_text},
                   {"artifacts", artifacts_}};
  write_file_atomic(file("manifest.json"), m.dump(2) + "\n");
  write_file_atomic(file("config.ini"), config_text);
}

}  // namespace hydro::cli
