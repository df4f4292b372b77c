#pragma once

#include <optional>
#include <vector>

#include "blockreg/sheaf.hpp"

namespace blockreg {

// One block: finitely many line bundles, pairwise orthogonal in all Ext
// degrees, listed in lexicographic degree order.
struct Block {
    std::vector<MultiDegree> members;
};

std::string to_string(const Block& b);

// An ordered list of blocks of line bundles. base_index records the helix
// position of blocks.front(). The container itself enforces nothing; use
// verify_exceptional_structure to check it is what it claims to be.
struct BlockCollection {
    Space space;
    std::vector<Block> blocks;
    int base_index = 0;

    int total_members() const;
    std::vector<MultiDegree> flatten() const;
    // block index (relative to blocks, not base_index) of the u-th flattened member
    int block_of(int u) const;
};

// The d-block collection (E_0, ..., E_d) on P^{n_1} x ... x P^{n_r}:
// E_j = all O(a) with sum a_i = j - d and -n_i <= a_i <= 0.
BlockCollection fundamental_collection(const Space& space);

// Helix extension: E_{j + k(d+1)} = E_j twisted by k(n_i+1) per coordinate.
Block helix_block(const Space& space, int i);

// Blocks (E_base, ..., E_{base+d}).
BlockCollection helix_window(const Space& space, int base);

// A block of the left dual collection; members are box products of twisted
// wedge-tangent sheaves kept in normal form.
struct DualBlock {
    std::vector<BoxProduct> members;
};

// Left dual collection of the window with base k(d+1): entry j holds the
// duals of block E_{k(d+1)+d-j}, member O(a + k*(n+1)) dualizing to
// box_i Lambda^{-a_i}T(a_i + k(n_i+1)).
std::vector<DualBlock> aligned_window_dual(const Space& space, int k);

// On a single P^n every window has closed-form duals: for the window of line
// bundles (O(top-n), ..., O(top)) the j-th dual (j = 0 at the top) is
// Lambda^j T(top - j).
std::vector<FactorSheaf> projective_window_dual(int n, int top_degree);

struct ExceptionalViolation {
    MultiDegree from;
    MultiDegree to;
    int q;
    Int dim;
    std::string rule;
};

struct ExceptionalReport {
    bool pass = true;
    Int pairs_checked = 0;
    std::optional<ExceptionalViolation> first;
};

// Checks that every member is exceptional, members within a block are fully
// orthogonal both ways, and across blocks there is no backward Ext in any
// degree and no forward Ext in positive degrees.
ExceptionalReport verify_exceptional_structure(const Space& space, const BlockCollection& c);

struct GramMatrix {
    std::vector<std::vector<Int>> g;

    int size() const { return static_cast<int>(g.size()); }
    bool unitriangular() const;
};

// G[u][v] = chi(M_u, M_v) over the flattened members of the collection.
GramMatrix gram_matrix(const Space& space, const BlockCollection& c);

// Coordinates in the ordered basis given by the flattened fundamental
// collection.
struct K0Class {
    std::vector<Int> coords;

    bool operator==(const K0Class&) const = default;

    K0Class& operator+=(const K0Class& o);
    K0Class& operator-=(const K0Class& o);
    K0Class operator*(Int c) const;
    K0Class operator-() const;

    // Sum of coordinates; every basis element is a line bundle, so this is
    // the rank of the class.
    Int rank() const;
};

std::string to_string(const K0Class& x);

K0Class k0_class(const Space& space, const BoxProduct& box);
K0Class k0_class(const Space& space, const SplitSheaf& sheaf);
K0Class k0_class(const Space& space, const MultiDegree& line_bundle);

// Euler bilinear form chi(x, y) on K0 classes.
Int k0_pairing(const Space& space, const K0Class& x, const K0Class& y);

enum class MutationSide { Left, Right };

// [L_A B] = chi(A,B)[A] - [B]; [R_B A] = chi(A,B)[B] - [A]. chi defaults to
// the Euler pairing of the two classes.
K0Class mutation_class(const Space& space, MutationSide side, const K0Class& a,
                       const K0Class& b, std::optional<Int> chi_ab = std::nullopt);

// Class of the right mutation of c through a fully orthogonal block:
// sum_i chi(c, f_i)[f_i] - [c].
K0Class mutate_through_block(const Space& space, const K0Class& c, const Block& block);

// K0 classes of the left dual collection of the window (E_base, ..., E_{base+d}),
// solved from the orthogonality conditions chi(h_j, E) = (-1)^j delta. Works
// for every base, aligned or not. Output order: dual blocks j = 0..d (block
// E_{base+d-j}), members in the block's lexicographic order.
std::vector<K0Class> left_dual_classes_k0(const Space& space, int window_base);

} // namespace blockreg
