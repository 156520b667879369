#pragma once

#include <filesystem>
#include <string>

namespace stylo {

// Resolves the bundled data directory (tagger lexicon, rule table, word
// lists). Resolution order: explicit override, STYLO_DATA_DIR environment
// variable, compile-time default (the source tree's data/ directory).
class DataPaths {
public:
    static std::filesystem::path root();
    static void set_root(std::filesystem::path p);

    static std::filesystem::path file(const std::string& relative);

private:
    static std::filesystem::path& override_root();
};

} // namespace stylo
