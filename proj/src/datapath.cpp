#include "datapath.hpp"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>

#ifndef GFV_DATA_DIR
#define GFV_DATA_DIR "data"
#endif

namespace gfv {

std::string data_file(const std::string& name) {
    namespace fs = std::filesystem;
    if (const char* env = std::getenv("GFV_DATA_DIR")) {
        fs::path p = fs::path(env) / name;
        if (fs::exists(p)) return p.string();
    }
    fs::path compiled = fs::path(GFV_DATA_DIR) / name;
    if (fs::exists(compiled)) return compiled.string();
    fs::path local = fs::path("data") / name;
    if (fs::exists(local)) return local.string();
    throw std::runtime_error("data file not found: " + name);
}

}  // namespace gfv
