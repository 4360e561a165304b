#pragma once

// Glue between the oracles and library types, plus memoized lift tables.

#include <map>
#include <random>

#include "oracles.hpp"
#include "siegelkit/siegel.hpp"

namespace support {

using siegelkit::Int;

inline siegelkit::bqf::QuadForm to_form(const oracle::Form& f) { return {f.a, f.b, f.c}; }

inline siegelkit::bqf::SL2Transform random_transform(std::mt19937_64& rng, int max_len) {
    const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    auto [p, q, r, s] = oracle::random_word(rng, len);
    return {p, q, r, s};
}

/// Saito-Kurokawa lift of the first Jacobi cusp basis vector of weight k.
inline const siegelkit::siegel::SiegelTable& lift(int k, Int bound) {
    static std::map<std::pair<int, Int>, siegelkit::siegel::SiegelTable> cache;
    auto it = cache.find({k, bound});
    if (it == cache.end())
        it = cache.emplace(std::pair{k, bound}, siegelkit::siegel::sk_lift(siegelkit::jacobi::cusp_basis(k, bound)[0], bound)).first;
    return it->second;
}

}  // namespace support
