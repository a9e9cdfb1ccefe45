#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "gammalab/complex.hpp"
#include "gammalab/module.hpp"
#include "gammalab/semiring.hpp"

namespace gammalab {

using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes);

/// Structural then semantic validation (monoid laws for add). `where` prefixes
/// every error message. Throws InputError.
Semiring semiring_from_json(const Json& doc, const std::string& where);
Json semiring_to_json(const Semiring& T);

GammaModule module_from_json(const Json& doc, std::shared_ptr<const Semiring> over, const std::string& where);
Json module_to_json(const GammaModule& m, const std::string& over_ref);

/// Loads documents, resolving "over", "module", "source" and "target"
/// references relative to the referring file. Each file is read once; every
/// file touched is recorded with its digest.
class Workspace {
 public:
  struct Input {
    std::string path;
    std::string sha256;
  };

  std::shared_ptr<const Semiring> structure(const std::filesystem::path& path);
  /// When `expected` is given, the module's own "over" must describe an equal structure.
  GammaModule module(const std::filesystem::path& path, std::shared_ptr<const Semiring> expected = nullptr);
  ChainComplex complex(const std::filesystem::path& path, std::shared_ptr<const Semiring> expected = nullptr);
  ChainMap chain_map(const std::filesystem::path& path, std::shared_ptr<const Semiring> expected = nullptr);

  /// Raw parsed document; throws InputError on unreadable or malformed files.
  const Json& document(const std::filesystem::path& path);
  const std::vector<Input>& inputs() const { return inputs_; }

 private:
  std::shared_ptr<const Semiring> base_for(const Json& doc, const std::filesystem::path& from,
                                           std::shared_ptr<const Semiring> expected);
  std::map<std::string, Json> docs_;
  std::map<std::string, std::shared_ptr<const Semiring>> structures_;
  std::vector<Input> inputs_;
};

}  // namespace gammalab
