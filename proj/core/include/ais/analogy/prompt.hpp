#pragma once

#include <string>
#include <string_view>

namespace ais::analogy {

/// The training prompt with a `[styvec]` placeholder; panel labels are kept
/// literally and subjects are never named.
extern const std::string_view kPromptTemplate;

/// kPromptTemplate with `[styvec]` replaced by `styvec`. Throws InvalidInput
/// when the token is empty or contains a line break.
std::string render_prompt(std::string_view styvec);

}  // namespace ais::analogy
