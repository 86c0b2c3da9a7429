#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <qwalk/qwalk.hpp>

namespace tst {

inline qwalk::coin_params balanced_coin() { return {0.0, 45.0, 0.0}; }

// Fixed-seed angle source for property-style checks.
struct angle_stream {
    std::mt19937_64 gen{0x51D2C4B96A7E83FULL};

    double next(double lo, double hi) {
        double u = double(gen() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }
};

// Fresh empty directory under the system temp root.
inline std::filesystem::path fresh_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("qwalk_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

inline void spit(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
}

inline double max_amp_deviation(const qwalk::pure_state<>& a, const qwalk::pure_state<>& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.amp.size(); ++i)
        worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
    return worst;
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            out.push_back(text.substr(pos));
            break;
        }
        out.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return out;
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t c = line.find(',', pos);
        if (c == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, c - pos));
        pos = c + 1;
    }
}

}  // namespace tst
