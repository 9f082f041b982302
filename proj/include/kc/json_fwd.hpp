#pragma once

#include "json.hpp"

namespace kc {
using Json = nlohmann::ordered_json;
}
