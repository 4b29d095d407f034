#ifndef FZIP_WEYL_HPP
#define FZIP_WEYL_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace fzip {

enum class WeylKind { A, BC };

// One-line notation.  Kind A: window is a permutation of {1..n} acting on
// positions 1..n.  Kind BC: a signed permutation of {1..m}; w(-i) = -w(i).
// Generators follow Bourbaki Planche II for B/C: s_i = (i i+1)(-i -(i+1))
// for i < m, and s_m the sign change on the last coordinate.
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(WeylKind kind, std::vector<int> window);

    static WeylElement identity(WeylKind kind, unsigned rank);
    static WeylElement generator(WeylKind kind, unsigned rank, unsigned i);  // s_i, 1-based

    WeylKind kind() const { return kind_; }
    unsigned rank() const { return static_cast<unsigned>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    int apply(int v) const;             // image of a signed value
    WeylElement compose(const WeylElement& o) const;  // this ∘ o
    WeylElement inverse() const;
    bool is_identity() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.kind_ == b.kind_ && a.window_ == b.window_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
    bool operator<(const WeylElement& o) const { return window_ < o.window_; }

    std::string str() const;

private:
    WeylKind kind_ = WeylKind::A;
    std::vector<int> window_;
};

// A subset of the simple reflections {s_1..s_{rank-1}} (A) or {s_1..s_m} (BC).
struct SimpleSubset {
    WeylKind kind = WeylKind::A;
    unsigned rank = 0;  // n for A (so indices run to n-1), m for BC
    std::set<unsigned> included;

    static SimpleSubset full(WeylKind kind, unsigned rank);
    static SimpleSubset empty(WeylKind kind, unsigned rank);
    unsigned generator_count() const { return kind == WeylKind::A ? rank - 1 : rank; }
    bool operator==(const SimpleSubset& o) const {
        return kind == o.kind && rank == o.rank && included == o.included;
    }
    bool is_subset_of(const SimpleSubset& o) const;
};

unsigned length(const WeylElement& w);

bool has_left_descent(const WeylElement& w, unsigned i);   // l(s_i w) < l(w)
bool has_right_descent(const WeylElement& w, unsigned i);  // l(w s_i) < l(w)
bool is_min_coset_rep(const SimpleSubset& J, const WeylElement& w, const SimpleSubset& K);

WeylElement longest_element(WeylKind kind, unsigned rank);
WeylElement longest_element(const SimpleSubset& J);

// Minimal-length representative of the double coset W_J w W_K.
WeylElement min_double_coset_rep(const SimpleSubset& J, const WeylElement& w,
                                 const SimpleSubset& K);

// All of ^J W ^K, ordered by (length, lexicographic window).  K empty gives
// ^J W.  Type A runs in output-size time; type BC enumerates W (guarded)
// except for J = I \ {s_1}, which is generated directly from cosets.
std::vector<WeylElement> min_coset_reps(const SimpleSubset& J, const SimpleSubset& K);
std::vector<WeylElement> min_coset_reps(const SimpleSubset& J);

// The minimal-length element x of W_K w0 W_J (= min of w0 W_J); requires
// K = ^{w0}J.  Satisfies ^x J = K.
WeylElement double_coset_x(const SimpleSubset& J, const SimpleSubset& K);

// ^w K; throws if some conjugate leaves the set of simple reflections.
SimpleSubset conjugate_subset(const WeylElement& w, const SimpleSubset& K);

bool bruhat_leq(const WeylElement& v, const WeylElement& w);

// dim Par_J = #positive roots of W minus #positive roots of the Levi W_J.
unsigned dim_par(const SimpleSubset& J);
unsigned positive_root_count(WeylKind kind, unsigned rank);

enum class IotaTarget { Sp, SOodd };  // S_{2m} resp. S_{2m+1}

// Centrally symmetric permutation induced by a signed permutation:
// rho(j) + rho(N+1-j) = N+1, with the middle point fixed when N is odd.
WeylElement iota_embed(const WeylElement& w, IotaTarget target);

// Full enumeration of W, guarded by size.
std::vector<WeylElement> enumerate_weyl(WeylKind kind, unsigned rank);

// Type function support -> (composition (n_r,...,n_1), subset J).
struct TypeComposition {
    std::vector<unsigned> parts;  // (n_r,...,n_1), also the position-block sizes
    SimpleSubset subset;
};
TypeComposition composition_to_subset(const std::vector<unsigned>& parts);

}  // namespace fzip

#endif
