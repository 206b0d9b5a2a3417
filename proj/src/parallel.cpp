#include "comaj/parallel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace comaj {

unsigned resolve_jobs(std::optional<unsigned> requested)
{
    if (requested && *requested > 0)
        return *requested;
    if (const char* env = std::getenv("COMAJ_JOBS"); env && *env) {
        try {
            const unsigned long v = std::stoul(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("COMAJ_JOBS is not a positive integer: ") + env);
        }
    }
    return 1;
}

}  // namespace comaj
