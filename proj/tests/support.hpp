#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace testsupport {

inline std::filesystem::path golden_dir() { return ALGOART_GOLDEN_DIR; }
inline std::filesystem::path data_dir() { return ALGOART_TEST_DATA_DIR; }

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spill(const std::filesystem::path& p, const std::string& bytes) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << bytes;
}

// Compares `actual` with tests/golden/<name>. ALGOART_UPDATE_GOLDEN=1 rewrites it.
inline void expect_golden(const std::string& name, const std::string& actual) {
    const auto path = golden_dir() / name;
    const char* update = std::getenv("ALGOART_UPDATE_GOLDEN");
    if (update != nullptr && std::string(update) == "1") {
        spill(path, actual);
        return;
    }
    ASSERT_TRUE(std::filesystem::exists(path)) << "missing golden " << path << " (set ALGOART_UPDATE_GOLDEN=1)";
    const auto expected = slurp(path);
    EXPECT_EQ(expected.size(), actual.size()) << name;
    EXPECT_TRUE(expected == actual) << "golden mismatch: " << name;
}

inline std::string spectrum_text() { return slurp(data_dir() / "pierres_noires_2014_02_synthetic.spec"); }

}  // namespace testsupport
