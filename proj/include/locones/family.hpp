#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locones {

enum class Family { I, II, III };

inline std::string to_string(Family f)
{
    switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    }
    return "?";
}

inline Family parse_family(std::string_view s)
{
    if (s == "I" || s == "1") return Family::I;
    if (s == "II" || s == "2") return Family::II;
    if (s == "III" || s == "3") return Family::III;
    throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

}  // namespace locones
