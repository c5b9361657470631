#ifndef SSPT_GENERATE_HPP
#define SSPT_GENERATE_HPP

#include "sspt/set_cover.hpp"
#include "sspt/steiner.hpp"

namespace sspt {

// Seeded instance generators. All randomness comes from std::mt19937_64
// driven only through modulo / fixed-point helpers, so a given spec produces
// the identical instance on every platform.
enum class Family { Layered, RandomGnp, ShallowRandom, Gadget, Grid };

struct GeneratorSpec {
    Family family = Family::RandomGnp;
    std::uint64_t seed = 1;

    std::uint32_t n = 0;                       // random-gnp, shallow-random
    double p = 0.2;                            // edge/chord probability, gadget density
    std::vector<std::uint32_t> layer_widths;   // layered (first layer is {s})
    std::uint32_t radius = 0;                  // shallow-random target hop radius
    double terminal_fraction = 0.25;
    std::uint32_t subsets = 0, universe = 0;   // gadget
    std::uint32_t rows = 0, cols = 0;          // grid
    Weight max_weight = 10;                    // edge weights drawn in 0..max_weight
    bool vertex_weighted = false;
    Weight max_vertex_weight = 8;              // drawn in 1..max_vertex_weight
};

Instance generate(const GeneratorSpec& spec);

SetCoverInstance random_set_cover(std::uint32_t subsets, std::uint32_t universe, double density,
                                  std::uint64_t seed);

const char* family_name(Family f);
Family family_from_name(const std::string& name);

}  // namespace sspt

#endif
