#include "sawp/paths.hpp"

#include <cstdlib>

#ifndef SAWP_DATA_DIR
#define SAWP_DATA_DIR "."
#endif

namespace sawp {

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("SAWP_DATA_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(SAWP_DATA_DIR);
}

} // namespace sawp
