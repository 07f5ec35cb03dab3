#include "coloc/rng.hpp"

namespace coloc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream) {
    return splitmix64(master_seed ^ splitmix64(stream));
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v > limit);
    return v % n;
}

Point2D uniform_in_box(std::mt19937_64& rng, const BBox& box) {
    double x = uniform_in(rng, box.min_x, box.max_x);
    double y = uniform_in(rng, box.min_y, box.max_y);
    return Point2D{x, y};
}

Point2D uniform_in_disk(std::mt19937_64& rng, Point2D center, double radius) {
    for (;;) {
        double x = uniform_in(rng, -1.0, 1.0);
        double y = uniform_in(rng, -1.0, 1.0);
        if (x * x + y * y <= 1.0) {
            return Point2D{center.x + radius * x, center.y + radius * y};
        }
    }
}

}  // namespace coloc
