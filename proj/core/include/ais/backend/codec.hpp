#pragma once

#include <string>
#include <string_view>

#include "ais/backend/protocol.hpp"

namespace ais::backend::wire {

// JSON bodies of the v1 HTTP protocol. Images travel as base64 PNG. Masks
// are 8-bit gray PNGs where 255 marks pixels to generate and 0 pixels to keep.
// Decoders throw PermanentError on schema violations.

std::string encode_train_request(const TrainJob& job);
TrainJob decode_train_request(std::string_view body);

/// Adapter document, used by POST /v1/train and GET /v1/adapters/{id}.
std::string encode_adapter(const AdapterRef& ref);
AdapterRef decode_adapter(std::string_view body);

std::string encode_inpaint_request(const InpaintJob& job);
InpaintJob decode_inpaint_request(std::string_view body);

std::string encode_inpaint_response(const InpaintResult& result, std::string_view adapter_id);
InpaintResult decode_inpaint_response(std::string_view body);

std::string encode_health(const Health& health);
Health decode_health(std::string_view body);

std::string encode_error(std::string_view message);
/// The "error" member of an error body, or the raw body if it is not JSON.
std::string decode_error(std::string_view body);

std::string encode_mask_png(const BinaryImage& mask);
BinaryImage decode_mask_png(std::string_view b64);

}  // namespace ais::backend::wire
