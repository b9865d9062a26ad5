#include "resolvedim/threading.hpp"

#include <cstdlib>
#include <string>

namespace resolvedim {

int resolve_thread_count(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("RESOLVEDIM_THREADS")) {
        try {
            int parsed = std::stoi(env);
            if (parsed > 0)
                return parsed;
        } catch (...) {
        }
    }
    return 1;
}

} // namespace resolvedim
