#ifndef PIERCING_INSTANCE_GEN_HPP
#define PIERCING_INSTANCE_GEN_HPP

#include <cstdint>
#include <string>

#include "piercing/family.hpp"

namespace piercing {

enum class ClassMode { general, theorem2 };
enum class RepairMode { reject, translate_repair };

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t n = 3;
    std::size_t members = 4;
    Rational spread = Rational(1);
    ClassMode class_mode = ClassMode::general;
    RepairMode repair = RepairMode::reject;
    /// Largest |a|, |b| of generated normals.
    int max_component = 9;
    int retry_limit = 64;
    /// Perturbation denominators are drawn from [1, max_denominator].
    int max_denominator = 64;
};

/// Throws InvalidInput when a field is out of range.
void validate_config(const GenConfig& cfg);

ClassMode parse_class_mode(const std::string& s);
std::string to_string(ClassMode m);

/// Valid template with cfg.n directions, sorted by angle, each reference
/// line at distance between 1 and 2 from the origin (so the unit disk lies
/// inside K). theorem2 mode yields normals
/// (1,0), (0,-1) and n-2 normals (-a, b) with pairwise distinct slopes.
Template random_template(const GenConfig& cfg);

/// Pairwise-intersecting family of cfg.members related polygons. Each member
/// is a translate of the reference polygon by a vector in
/// [-spread, spread]^2 with per-offset jitter in [-spread/4, spread/4]; about
/// one member in four drops a nonempty proper subset of its directions.
/// Throws GenerationExhausted when retries run out.
Family random_family(const Template& t, const GenConfig& cfg);

} // namespace piercing

#endif
