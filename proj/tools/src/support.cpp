#include "support.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "fermat/errors.hpp"

namespace fermat::cli {

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

void write_manifest(const std::filesystem::path& path, const RunRecord& run)
{
    Json m;
    m["tool"] = "fermat-pp3";
    m["version"] = FERMAT_VERSION;
    m["command"] = run.command;
    m["argv"] = run.argv;
    m["parameters"] = run.params;
    Json inputs = Json::array();
    for (const auto& [p, h] : run.inputs)
        inputs.push_back({{"path", p}, {"sha256", h}});
    m["inputs"] = inputs;
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::ostringstream ts;
    ts << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
    m["timestamp"] = ts.str();

    std::ofstream out(path);
    if (!out)
        throw DataError("cannot write manifest to " + path.string());
    out << m.dump(2) << '\n';
}

VerdictCache::VerdictCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path VerdictCache::default_dir()
{
    if (const char* env = std::getenv("FERMAT_PP3_CACHE_DIR"); env && *env)
        return env;
    return ".fermat-pp3-cache";
}

std::string VerdictCache::key(const std::string& content_hash, long d, const Integer& bk,
                              std::uint64_t norm_bound)
{
    return content_hash + ":d=" + std::to_string(d) + ":bk=" + bk.get_str() +
           ":norm=" + std::to_string(norm_bound);
}

std::optional<Json> VerdictCache::lookup(const std::string& key) const
{
    std::ifstream index(dir_ / "index.txt");
    std::string k, file;
    while (index >> k >> file) {
        if (k != key)
            continue;
        std::ifstream entry(dir_ / file);
        if (!entry)
            return std::nullopt;
        try {
            return Json::parse(entry);
        } catch (const Json::parse_error&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

void VerdictCache::store(const std::string& key, const Json& report) const
{
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        return; // caching is best-effort
    const std::string file = sha256_hex(key).substr(0, 32) + ".json";
    std::ofstream(dir_ / file) << report.dump() << '\n';
    std::ofstream(dir_ / "index.txt", std::ios::app) << key << ' ' << file << '\n';
}

} // namespace fermat::cli
