#ifndef FZIP_ORACLE_HPP
#define FZIP_ORACLE_HPP

#include "fzip/classify.hpp"

namespace fzip {

// Hard guards so exhaustive runs stay at desk scale.
struct OracleLimits {
    unsigned long long max_subspaces = 200000;
    unsigned long long max_fzips = 20000;
    unsigned long long max_group = 20000;
};

// All d-dimensional subspaces of F^n, enumerated directly in RREF form.
std::vector<Subspace> enumerate_subspaces(unsigned n, unsigned d, const FieldRef& f,
                                          const OracleLimits& limits = {});

unsigned long long gaussian_binomial(unsigned n, unsigned d, unsigned q);
unsigned long long gl_order(unsigned n, unsigned q);

// All chains 0 < V_1 < ... < full with the given intermediate dimensions.
std::vector<Chain> enumerate_chains(unsigned n, const std::vector<unsigned>& dims,
                                    const FieldRef& f, const OracleLimits& limits = {});

std::vector<Matrix> enumerate_invertible(unsigned n, const FieldRef& f,
                                         const OracleLimits& limits = {});

// Every F-zip of the given type over the field, each exactly once.
std::vector<FZip> enumerate_fzips(const TypeFunction& tau, const FieldRef& f,
                                  const OracleLimits& limits = {});

struct OrbitEntry {
    FZip representative;
    unsigned long long size = 0;
    WeylElement invariant;
};

struct OrbitReport {
    TypeFunction type;
    FieldRef field;
    unsigned long long total_count = 0;
    std::vector<OrbitEntry> orbits;
    unsigned invariant_class_count = 0;
    unsigned expected_class_count = 0;  // |^JW|
    bool invariant_constant_on_orbits = false;
    bool sizes_sum_to_total = false;
    bool all_classes_realized = false;
    bool consistent() const {
        return invariant_constant_on_orbits && sizes_sum_to_total && all_classes_realized;
    }
};

// Explicit GL_n(F_q)-orbit partition of a full enumeration, with the
// classification invariant attached per orbit.
OrbitReport gl_orbits(const std::vector<FZip>& items, const FieldRef& f,
                      const OracleLimits& limits = {});

struct PointCount {
    unsigned long long count = 0;
    double dim_g_ratio = 0.0;  // count / q^{n^2}
};

PointCount count_points(const TypeFunction& tau, const FieldRef& f,
                        const OracleLimits& limits = {});

}  // namespace fzip

#endif
