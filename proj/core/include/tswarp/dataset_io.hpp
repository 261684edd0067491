#pragma once

#include <filesystem>

#include "tswarp/types.hpp"

namespace tswarp {

/**
 * Dataset file format: one UTF-8 JSON document,
 *
 *   {"dim": k,
 *    "meta": {"key": "value", ...},
 *    "series": [{"label": "A", "points": [[x11, ..., x1k], ...]}, ...]}
 *
 * The "label" key is omitted for unlabeled series. Numbers are written
 * with round-trip precision, so save followed by load reproduces the
 * dataset bit-exactly.
 */
[[nodiscard]] Dataset load_dataset(const std::filesystem::path& path);

void save_dataset(const Dataset& ds, const std::filesystem::path& path);

}  // namespace tswarp
