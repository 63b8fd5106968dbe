#pragma once

#include <string>

namespace gfv {

// Resolve a file in the data directory.  Looks at $GFV_DATA_DIR first, then
// the compiled-in source-tree location, then ./data relative to the cwd.
std::string data_file(const std::string& name);

}  // namespace gfv
