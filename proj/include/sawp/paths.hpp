#pragma once

#include <filesystem>

namespace sawp {

// Root of the bundled data tree (benchmark/, prompts/, transcripts/).
// SAWP_DATA_DIR in the environment overrides the compiled-in default.
std::filesystem::path default_data_dir();

} // namespace sawp
