#pragma once

#include <string>

#include "sphconf/geometry.hpp"

namespace sphconf {

// JSON: {"dim": d, "points": [[...], ...], "label": "..."} (label optional).
// CSV: header x1,...,xd, one point per row, full round-trip precision.
// Readers reject rows whose norm deviates more than unit_tol and only
// renormalize rows that are off by more than the internal 1e-12 invariant,
// so freshly written files read back bitwise identical.

std::string config_to_json(const Config& config);
Config config_from_json(const std::string& text, double unit_tol = 1e-9);

std::string config_to_csv(const Config& config);
Config config_from_csv(const std::string& text, double unit_tol = 1e-9);

void save_config(const Config& config, const std::string& path);
// Dispatches on extension (.json/.csv), sniffing the content otherwise.
Config load_config(const std::string& path, double unit_tol = 1e-9);

}  // namespace sphconf
