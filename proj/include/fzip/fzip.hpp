#ifndef FZIP_FZIP_HPP
#define FZIP_FZIP_HPP

#include <map>
#include <string>
#include <vector>

#include "fzip/linalg.hpp"
#include "fzip/weyl.hpp"

namespace fzip {

// Ascending chain of canonical subspaces 0 = V_0 < V_1 < ... < V_s = F^n.
using Chain = std::vector<Subspace>;

// The dimension function i -> dim gr^i; finitely supported with positive
// values.
class TypeFunction {
public:
    TypeFunction() = default;
    explicit TypeFunction(std::map<int, unsigned> support);
    TypeFunction(std::initializer_list<std::pair<const int, unsigned>> items)
        : TypeFunction(std::map<int, unsigned>(items)) {}

    const std::map<int, unsigned>& support() const { return support_; }
    unsigned height() const { return height_; }
    unsigned at(int i) const {
        auto it = support_.find(i);
        return it == support_.end() ? 0 : it->second;
    }
    std::vector<int> indices() const;           // ascending support
    unsigned dim_desc(int i) const;             // sum over i' >= i
    unsigned dim_asc(int i) const;              // sum over i' <= i
    TypeFunction dual() const;                  // i -> at(-i)
    TypeFunction convolve(const TypeFunction& o) const;

    // Composition (n_r,...,n_1) and the parabolic subset J of S_n.
    TypeComposition parabolic_type() const;
    // The opposite subset K = ^{w0} J, i.e. the composition (n_1,...,n_r).
    TypeComposition opposite_type() const;

    bool operator==(const TypeFunction& o) const { return support_ == o.support_; }

private:
    std::map<int, unsigned> support_;
    unsigned height_ = 0;
};

enum class FlagDirection { descending, ascending };

// Z-indexed filtration with finite support; members are stored at the
// support indices of its type, queries elsewhere return the tails.
class Flag {
public:
    Flag() = default;
    Flag(FlagDirection dir, unsigned n, FieldRef field, std::map<int, Subspace> members);

    FlagDirection direction() const { return dir_; }
    unsigned ambient_dim() const { return n_; }
    const FieldRef& field() const { return field_; }
    const std::map<int, Subspace>& members() const { return members_; }

    Subspace at(int i) const;
    Chain chain() const;  // ascending by dimension, with 0 and full included
    TypeFunction type() const;

    bool operator==(const Flag& o) const {
        return dir_ == o.dir_ && n_ == o.n_ && members_ == o.members_;
    }

private:
    FlagDirection dir_ = FlagDirection::descending;
    unsigned n_ = 0;
    FieldRef field_;
    std::map<int, Subspace> members_;
};

// The central object: (M, C., D., phi.).  phi[i] is the matrix of the
// sigma-semilinear isomorphism gr^i_C -> gr_i^D in the canonical graded
// bases, acting as v -> phi[i] . sigma(v) with sigma the coordinatewise
// q-power.
struct FZip {
    FieldRef field;
    unsigned n = 0;
    TypeFunction type;
    Flag C;  // descending
    Flag D;  // ascending
    std::map<int, Matrix> phi;

    bool operator==(const FZip& o) const {
        return n == o.n && type == o.type && C == o.C && D == o.D && phi == o.phi;
    }
};

struct ValidationReport {
    std::vector<std::string> problems;
    TypeFunction type;
    bool ok() const { return problems.empty(); }
};

ValidationReport validate(const FZip& z);

// Canonical graded basis of W/W': lifts of the RREF rows of W whose pivot is
// new relative to W', reduced modulo W'.  Rows of the returned matrix.
Matrix graded_lifts(const Subspace& w, const Subspace& wsub);
// Coordinates of v (an element of W) in that canonical graded basis.
std::vector<unsigned> graded_coords(const Subspace& w, const Subspace& wsub,
                                    const std::vector<unsigned>& v);

// The standard F-zip M^u_tau over GF(p) for u in ^JW.
FZip standard_fzip(const TypeFunction& tau, const WeylElement& u, unsigned p = 2);

// BT_1 Dieudonne module: F acts as v -> F_mat sigma(v), V as
// v -> V_mat sigma^{-1}(v).
struct DieudonneModule {
    FieldRef field;
    unsigned n = 0;
    Matrix F_mat;
    Matrix V_mat;
};

std::vector<std::string> validate_dieudonne(const DieudonneModule& d);
FZip from_dieudonne(const DieudonneModule& d);
DieudonneModule to_dieudonne(const FZip& z);

FZip dual(const FZip& z);
FZip tensor(const FZip& a, const FZip& b);
FZip base_change(const FZip& z, const FieldRef& target);
FZip apply_gl(const Matrix& g, const FZip& z);
FZip random_fzip(const TypeFunction& tau, const FieldRef& field, uint64_t seed);

// Uniform-ish deterministic helpers shared with the oracle and tests.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    uint64_t next();
    unsigned below(unsigned bound);  // uniform in [0, bound)
private:
    uint64_t state_;
};

Matrix random_invertible(const FieldRef& f, unsigned n, Rng& rng);

}  // namespace fzip

#endif
