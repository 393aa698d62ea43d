#include "noether/limits.hpp"

namespace noether {

Limits& limits() {
    static Limits instance;
    return instance;
}

}  // namespace noether
