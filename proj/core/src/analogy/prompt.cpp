#include "ais/analogy/prompt.hpp"

#include "ais/common/error.hpp"

namespace ais::analogy {

const std::string_view kPromptTemplate =
    "This is a four-panel image on a uniform solid-color background, hand-drawn in style, "
    "with the subjects highlighted and kept as simple as possible:\n"
    "\n"
    "[TOP-LEFT]: Image of the structure of a subject.\n"
    "[TOP-RIGHT]: An edited version of the [TOP-LEFT] image, transformed to [styvec] style.\n"
    "[BOTTOM-LEFT]: Skeleton or structural image of another subject.\n"
    "[BOTTOM-RIGHT]: An edited version of the [BOTTOM-LEFT] image, applying the same style "
    "transformation as used in [TOP-RIGHT].";

std::string render_prompt(std::string_view styvec) {
  if (styvec.empty()) throw InvalidInput("render_prompt: styvec must not be empty");
  if (styvec.find_first_of("\r\n") != std::string_view::npos) {
    throw InvalidInput("render_prompt: styvec must be a single line");
  }
  static constexpr std::string_view kSlot = "[styvec]";
  std::string out(kPromptTemplate);
  const auto at = out.find(kSlot);
  out.replace(at, kSlot.size(), styvec);
  return out;
}

}  // namespace ais::analogy
