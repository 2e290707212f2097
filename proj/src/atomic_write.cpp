#include <atomic>
#include <fstream>
#include <random>

#include "kelly/errors.hpp"
#include "kelly/io.hpp"

namespace kelly {

void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path dir =
        path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::error_code ec;
    fs::create_directories(dir, ec);

    // Unique sibling temp name keeps the final rename within one filesystem.
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    const fs::path tmp = dir / (path.filename().string() + ".tmp." +
                                std::to_string(rd()) + "." +
                                std::to_string(counter.fetch_add(1)));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open temporary file '" + tmp.string() +
                          "' for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp, ec);
            throw IoError("write failure on '" + tmp.string() + "'");
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code cleanup;
        fs::remove(tmp, cleanup);
        throw IoError("cannot rename '" + tmp.string() + "' to '" +
                      path.string() + "': " + ec.message());
    }
}

}  // namespace kelly
