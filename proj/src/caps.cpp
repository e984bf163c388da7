#include "supercount/caps.hpp"

#include <cstdlib>
#include <sstream>

namespace supercount {

Caps parse_caps(const char* text) {
    Caps out{Natural(1000000), Natural(200000)};
    if (!text || !*text) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("SUPERCOUNT_CAPS wants oracle=<n>,direct=<n>");
        std::string key = item.substr(0, eq);
        Natural value = from_decimal(item.substr(eq + 1));
        if (value < 2) throw ParseError("cap must be at least 2");
        if (key == "oracle")
            out.oracle = value;
        else if (key == "direct")
            out.direct = value;
        else
            throw ParseError("unknown cap '" + key + "'");
    }
    return out;
}

const Caps& caps() {
    static Caps instance = parse_caps(std::getenv("SUPERCOUNT_CAPS"));
    return instance;
}

}  // namespace supercount
