#pragma once

#include "spincount/induce.hpp"
#include "spincount/orbits.hpp"

#include <optional>
#include <set>
#include <vector>

namespace spincount {

// Engine cutoffs on the rank of a character computation.
inline constexpr int kDefaultEngineCutoff = 5;
inline constexpr int kHardEngineCutoff = 7;

enum class BlockStar { B, D, Dstar };

// The block factor of the coherent continuation module built from eta and
// trivial twists: eta x 1 x 1 over pair/full-block splits (star B), eta x 1
// over pair/symmetric splits (star D), the single pure-pair induction into
// the index-2 subgroup (star Dstar, even rank; the zero module for odd rank).
InducedSum classical_block_module(BlockStar star, int n);

// The (p,q)-dependent block factor: mixed-parity branch for p+q odd, exact
// branch for p+q even. Zero module when p or q is negative.
InducedSum genuine_block_module(int p, int q);

// Genuine quaternionic block factor on the index-2 subgroup: terms eta x sgn
// over pair/symmetric splits.
InducedSum genuine_block_module_dstar(int n);

// Primitive pairs as the indices i of the adjacent positions (2i, 2i+1) of
// the padded r'' sequence; rendered as pairs of positions for output.
std::vector<int> primitive_pairs(const RowSplit& split);

struct CellMember {
    std::set<int> subset;           // chosen primitive-pair indices
    std::vector<int> left_columns;  // column lengths before normalization
    std::vector<int> right_columns;
    BiPartition tau;                // ordered representative (left, right)
};

struct Cell {
    RowSplit split;
    Partition anchor_shape;             // col[r'] (even) / paired with the +1 shift (odd)
    BiPartition anchor;                 // ordered representative of tau_b
    std::optional<Label> anchor_label;  // even case: the orbit's label when present
    std::vector<int> pp;
    std::vector<CellMember> members;    // 2^|pp| entries, subsets in mask order
};

Cell build_cell(const RowSplit& split, std::optional<Label> orbit_label);

// The closed multiplicity statements backing the counting theorems.
enum class LemmaId {
    OddAnchor,      // 1 iff |p-q| = 1
    OddMember,      // 1 iff empty subset and all rows pair up
    EvenAnchor,     // 1 iff p = q
    EvenMember,     // 2 iff empty subset and all rows pair up (ng > 0)
    QuatMember,     // 0 whenever ng != 0
    QuatAnchor      // product formula for label I, 0 for label II (ng = 0)
};

long long closed_form_multiplicity(LemmaId which, const RowSplit& split,
                                   const std::set<int>& subset, int p, int q,
                                   std::optional<Label> label);

// [rep : sum] with rep an ordered bipartition, computed through realized
// class functions; exact non-negative integer.
long long engine_multiplicity(const BiPartition& rep, const InducedSum& sum);

// Multiplicity of an unordered-pair irreducible of the index-2 subgroup in
// the restriction of a full-group module (the doubling identity for unequal
// pairs; equal pairs receive the full-group multiplicity on both labels).
long long engine_multiplicity_wprime(const LabeledPair& rep, const InducedSum& wn_module);

// Multiplicities of the two split constituents of chi_{(lam,lam)} in an
// induced module on the index-2 subgroup given by terms whose subgroups lie
// inside it. Returned as (plus, minus) in the fixed intertwiner orientation.
std::pair<long long, long long> split_multiplicities(const Partition& lam,
                                                     const InducedSum& wprime_sum);

// Which split constituent is label I for this shape: the one supported on
// the genuine quaternionic block module. Verifies the other vanishes there.
bool label_I_is_plus(const Partition& lam);

// Multiplicity of one labeled constituent in the genuine quaternionic block
// module of matching rank.
long long labeled_multiplicity_in_dstar(const Partition& lam, Label label);

} // namespace spincount
