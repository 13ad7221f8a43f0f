#include "hcube/bounds.hpp"

#include <sstream>
#include <stdexcept>

namespace hcube {

bool BoundsReport::chain_holds() const noexcept
{
    return sigma <= trivial_upper && trivial_upper <= trivial_lower &&
           trivial_lower <= arboricity && arboricity <= tau;
}

BoundsReport bounds_for(unsigned n)
{
    if (n == 0 || n > 48) {
        throw std::invalid_argument("bounds_for: n must be in [1, 48]");
    }
    BoundsReport b;
    b.n = n;
    b.vertices = std::uint64_t{1} << n;
    b.edges = std::uint64_t{n} << (n - 1);
    const std::uint64_t k = n / 2;
    b.sigma = k;
    b.arboricity = k + 1;
    b.tau = (n + 2) / 2;  // ceil((n+1)/2)
    b.leftover = n % 2 == 0 ? k : (std::uint64_t{1} << (2 * k)) + k;
    const std::uint64_t forest_max = b.vertices - 1;
    b.trivial_upper = b.edges / forest_max;
    b.trivial_lower = (b.edges + forest_max - 1) / forest_max;
    return b;
}

bool inequality_chain(std::uint64_t edges, std::uint64_t vertices, std::uint64_t sigma_witness)
{
    if (vertices < 2) {
        throw std::invalid_argument("inequality_chain: need at least two vertices");
    }
    return sigma_witness <= edges / (vertices - 1);
}

std::string render_text(const BoundsReport& b)
{
    std::ostringstream os;
    os << "n=" << b.n << '\n'
       << "vertices=" << b.vertices << '\n'
       << "edges=" << b.edges << '\n'
       << "sigma=" << b.sigma << '\n'
       << "arboricity=" << b.arboricity << '\n'
       << "tau=" << b.tau << '\n'
       << "leftover=" << b.leftover << '\n'
       << "trivial_upper=" << b.trivial_upper << '\n'
       << "trivial_lower=" << b.trivial_lower << '\n'
       << "chain: sigma(" << b.sigma << ") <= floor(E/(V-1))(" << b.trivial_upper
       << ") <= ceil(E/(V-1))(" << b.trivial_lower << ") <= arb(" << b.arboricity << ") <= tau("
       << b.tau << ") : " << (b.chain_holds() ? "holds" : "VIOLATED") << '\n';
    return os.str();
}

} // namespace hcube
