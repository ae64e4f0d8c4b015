#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hydro/field_io.hpp"
#include "hydro/grid.hpp"

namespace hydro::cli {

/// One output directory per run. Every file is written atomically and listed in the manifest.
class RunDir {
 public:
  explicit RunDir(std::string path);

  const std::string& path() const { return path_; }
  std::string file(const std::string& name) const;

  void write_text(const std::string& name, const std::string& contents);
  void write_json(const std::string& name, const nlohmann::json& j);
  void write_field(const std::string& name, const ScalarField& f, const FieldMeta& meta);

  /// manifest.json: command, resolved configuration, tool and format versions, artifact list.
  void write_manifest(const std::string& command, const std::string& config_text);

 private:
  std::string path_;
  std::vector<std::string> artifacts_;
};

}  // namespace hydro::cli
