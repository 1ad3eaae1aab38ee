#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermat/arith.hpp"

namespace fermat::cli {

using Json = nlohmann::ordered_json;

/// Bad flag values detected after parsing; maps to the usage exit code.
class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
std::string sha256_hex(const std::string& bytes);

/// Facts collected while a command runs, written out by --manifest.
struct RunRecord
{
    std::vector<std::string> argv;
    std::string command;
    Json params = Json::object();
    std::vector<std::pair<std::string, std::string>> inputs; ///< (path, sha256)
};

void write_manifest(const std::filesystem::path& path, const RunRecord& run);

/// Plain-text index of cached elimination reports. Each line is
/// "<key> <file>", where the file (beside the index) holds the report JSON.
class VerdictCache
{
  public:
    explicit VerdictCache(std::filesystem::path dir);

    /// FERMAT_PP3_CACHE_DIR, else .fermat-pp3-cache in the working directory.
    static std::filesystem::path default_dir();

    static std::string key(const std::string& content_hash, long d, const Integer& bk,
                           std::uint64_t norm_bound);

    std::optional<Json> lookup(const std::string& key) const;
    void store(const std::string& key, const Json& report) const;

  private:
    std::filesystem::path dir_;
};

} // namespace fermat::cli
