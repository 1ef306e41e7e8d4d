#include "braidchar/graded_character.hpp"

#include <stdexcept>
#include <string>

namespace braidchar {

std::string_view algebra_name(Algebra a)
{
    return a == Algebra::PvbDual ? "pvb-dual" : "pfb-dual";
}

Algebra parse_algebra(std::string_view text)
{
    if (text == "pvb-dual" || text == "pvb_dual" || text == "pvb")
        return Algebra::PvbDual;
    if (text == "pfb-dual" || text == "pfb_dual" || text == "pfb")
        return Algebra::PfbDual;
    throw std::invalid_argument("unknown algebra '" + std::string(text) + "' (expected pvb-dual or pfb-dual)");
}

std::vector<BigInt> poly_multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<BigInt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace braidchar
