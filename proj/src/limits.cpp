#include <hsinteg/limits.hpp>

#include <hsinteg/errors.hpp>

namespace hsinteg
{

Limits &limits()
{
    static Limits instance;
    return instance;
}

void check_deadline()
{
    const auto &d = limits().deadline;
    if (d && std::chrono::steady_clock::now() > *d) {
        throw ResourceError("time limit exceeded");
    }
}

} // namespace hsinteg
