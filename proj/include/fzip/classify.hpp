#ifndef FZIP_CLASSIFY_HPP
#define FZIP_CLASSIFY_HPP

#include <optional>
#include <utility>

#include "fzip/fzip.hpp"

namespace fzip {

// Parabolic type of a chain: excluded generators are the proper member
// dimensions.
SimpleSubset chain_type(const Chain& c);

// Relative position of two chains; the returned element is the minimal
// representative in ^JW^K for J = chain_type(a), K = chain_type(b).
WeylElement flag_relpos(const Chain& a, const Chain& b);
WeylElement flag_relpos(const Flag& gamma, const Flag& delta);

// Brute-force oracle: match the rank profile of (a, b) against model pairs
// built from every element of ^JW^K.  Test use only.
WeylElement flag_relpos_bruteforce(const Chain& a, const Chain& b);

// One refinement step: the chain {(A_{a+1} ∩ B_b) + A_a}; refines a.
Chain refine_chain(const Chain& a, const Chain& b);

// Image chain {g . sigma(member)} of the semilinear operator with matrix g.
Chain twist_chain(const Matrix& g, const Chain& c);

// Splittings for build_g: for each support index, a matrix whose columns
// span a complement of sigma(C^{i+1}) in sigma(C^i) (resp. of D_{i-1} in
// D_i).
struct Splittings {
    std::map<int, Matrix> A;  // of the twisted C-filtration
    std::map<int, Matrix> B;  // of the D-filtration
};

// The semilinear group element v -> g sigma(v) assembled from phi and the
// splittings; g sigma(C.) is in opposition with D.
Matrix build_g(const FZip& z, const std::optional<Splittings>& splittings = std::nullopt);

// Deterministically perturbed random valid splittings (for invariance tests).
Splittings random_splittings(const FZip& z, uint64_t seed);

struct TraceStep {
    SimpleSubset J;
    SimpleSubset K;
    Chain gamma;
    Chain delta;
    WeylElement u;
};

struct ClassificationTrace {
    Matrix g;
    std::vector<TraceStep> steps;
    WeylElement u_infinity;
    unsigned iterations = 0;
};

struct ClassifyResult {
    WeylElement u;
    ClassificationTrace trace;
};

ClassifyResult classify(const FZip& z,
                        const std::optional<Splittings>& splittings = std::nullopt);

// The T(J) sequence machinery of the coset iteration.  A sequence is stored
// up to (and including) its first stable entry.
struct TSequence {
    std::vector<WeylElement> entries;
    const WeylElement& limit() const { return entries.back(); }
};

TSequence t_sequence(const TypeFunction& tau, const WeylElement& u);
WeylElement u_from_sequence(const TypeFunction& tau, const TSequence& seq);

unsigned codim(const WeylElement& u, const SimpleSubset& J);
bool is_ordinary(const WeylElement& u, const SimpleSubset& J);

// dim(C^1 ∩ D_0) for Dieudonne-type zips (support within {0,1}).
unsigned a_number(const FZip& z);

struct EoStratum {
    WeylElement u;
    unsigned codim = 0;
    bool ordinary = false;
    std::vector<std::string> labels;
};

std::vector<EoStratum> eo_partition(const std::vector<std::pair<std::string, FZip>>& family);

}  // namespace fzip

#endif
