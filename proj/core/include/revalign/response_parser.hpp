// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <string_view>

#include "revalign/score_vector.hpp"

namespace revalign {

/// The single gate between raw scorer output and ScoreVector.
///
/// Scans `raw` for balanced `{...}` spans and takes the first one that parses
/// as a JSON object carrying at least one criterion key, so prose around the
/// object is tolerated. In that object every key K0..K5 must be present; null
/// or the string "NA" means missing, numbers must be finite and within [0, 1].
///
/// Throws MalformedResponse (no usable object, or a value of the wrong type),
/// MissingKey, or OutOfRangeScore.
ScoreVector parse_score_response(std::string_view raw);

}  // namespace revalign
