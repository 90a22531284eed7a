#pragma once

#include "spincount/partition.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spincount {

// Thrown for unparseable or semantically invalid user input (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when the two counting routes disagree (CLI exit code 3).
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GroupFamily { RealSpin, QuaternionicSpin, ComplexSpin };

struct GroupSpec {
    GroupFamily family = GroupFamily::RealSpin;
    int p = 0; // RealSpin only
    int q = 0;
    int m = 0; // p + q, 2n, or the complex m

    static GroupSpec real_spin(int p, int q);
    static GroupSpec quaternionic(int two_n);
    static GroupSpec complex_spin(int m);

    int rank() const { return m / 2; }
    bool tilde_equals_group() const; // covering group coincides with G
    std::string str() const;

    bool operator==(const GroupSpec&) const = default;
};

GroupSpec parse_group(const std::string& text);

struct DualOrbit {
    Partition shape;
    std::optional<Label> label; // present exactly when m is even and shape very even

    bool operator==(const DualOrbit&) const = default;
    std::string str() const;
};

// Orbit syntax "4,2,2" with optional ":I" / ":II"; complex groups take a
// ";"-separated pair handled by the CLI layer.
DualOrbit parse_orbit(const std::string& text);

struct DualGroupInfo {
    NilpotentType type;      // parity constraint on dual-orbit partitions
    int partition_size;      // m-1 (m odd) or m (m even)
};

DualGroupInfo dual_group(const GroupSpec& g);

// Throws InputError unless the orbit is a valid nilpotent orbit of the dual
// Lie algebra of g, with the label present exactly when required.
void validate_orbit(const GroupSpec& g, const DualOrbit& o);

// All valid dual orbits (with labels expanded), sorted lexicographically by
// partition, label I before II.
std::vector<DualOrbit> enumerate_orbits(const GroupSpec& g);

// Barbasch-Vogan dual: append a box and B-collapse the transpose (m odd), or
// D-collapse the transpose (m even).
Partition bv_dual(const DualOrbit& o, const GroupSpec& g);

// Label convention for very even quaternionic orbits: label I meets the
// purely imaginary form.
bool relevant(const DualOrbit& o, const GroupSpec& g);

// Number of real forms of the dual's dual orbit meeting the quaternionic
// form: prod (r'_i - r'_{i+1} + 1) when relevant, 0 otherwise.
long long count_real_forms(const DualOrbit& o, const GroupSpec& g);

// Row data feeding the cell machinery. In the odd case the row multiset is
// {2r'_i+1 twice} u {2r''_j}; in the even case {2r'_i twice} u {2r''_j+1}.
struct RowSplit {
    bool even_case = false;
    int l = 0;
    int k = 0;
    std::vector<int> r_prime;        // length l
    std::vector<int> r_double_prime; // length 2k, weakly decreasing
    int nb = 0;
    int ng = 0;

    // 1-based access with zero padding past 2k
    int rpp(int j) const {
        return (j >= 1 && j <= static_cast<int>(r_double_prime.size())) ? r_double_prime[j - 1]
                                                                        : 0;
    }
    // r''_{2i-1} = r''_{2i} for all i, i.e. every row length of the orbit has
    // even multiplicity
    bool rows_pair_up() const;
};

RowSplit row_split(const DualOrbit& o, const GroupSpec& g);

// Weakly decreasing non-negative half-integers, stored doubled.
struct InfinitesimalCharacter {
    std::vector<int> twice_entries;

    int half_integer_count() const;
    std::string str() const;
    bool operator==(const InfinitesimalCharacter&) const = default;
};

InfinitesimalCharacter infinitesimal_character(const DualOrbit& o, const GroupSpec& g);

// GL_{r_1}(R) x ... (real) or GL_{r_1/2}(H) x ... (quaternionic), one factor
// per row pair. Requires all rows of even multiplicity.
std::string levi_descriptor(const DualOrbit& o, const GroupSpec& g);

} // namespace spincount
