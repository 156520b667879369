#include "stylo/data_paths.hpp"

#include "stylo/errors.hpp"

#include <cstdlib>

#ifndef STYLO_DEFAULT_DATA_DIR
#define STYLO_DEFAULT_DATA_DIR ""
#endif

namespace stylo {

std::filesystem::path& DataPaths::override_root() {
    static std::filesystem::path p;
    return p;
}

void DataPaths::set_root(std::filesystem::path p) {
    override_root() = std::move(p);
}

std::filesystem::path DataPaths::root() {
    if (!override_root().empty()) return override_root();
    if (const char* env = std::getenv("STYLO_DATA_DIR"); env && *env) {
        return std::filesystem::path(env);
    }
    std::filesystem::path def(STYLO_DEFAULT_DATA_DIR);
    if (!def.empty() && std::filesystem::exists(def)) return def;
    // Last resort: data/ next to the working directory.
    return std::filesystem::path("data");
}

std::filesystem::path DataPaths::file(const std::string& relative) {
    auto p = root() / relative;
    if (!std::filesystem::exists(p)) {
        throw ConfigError("bundled data file not found: " + p.string() +
                          " (set STYLO_DATA_DIR or --data-dir)");
    }
    return p;
}

} // namespace stylo
