#include "dcl/stirling.hpp"

namespace dcl {

StirlingTable& stirling_first() {
    static StirlingTable table(StirlingTable::Kind::First);
    return table;
}

StirlingTable& stirling_second() {
    static StirlingTable table(StirlingTable::Kind::Second);
    return table;
}

}  // namespace dcl
