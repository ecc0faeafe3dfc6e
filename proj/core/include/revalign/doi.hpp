// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace revalign {

/// Finds the first DOI-shaped substring (`10.<registrant>/<suffix>`) and
/// returns it lowercased with trailing `.,;)` removed. Resolver prefixes such
/// as `https://doi.org/` or `doi:` never become part of the result.
std::optional<std::string> extract_doi(std::string_view text);

/// True when `doi` is already in the form extract_doi produces.
bool is_normalized_doi(std::string_view doi);

}  // namespace revalign
