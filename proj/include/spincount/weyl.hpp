#pragma once

#include "spincount/partition.hpp"
#include "spincount/rational.hpp"

#include <functional>
#include <map>
#include <vector>

namespace spincount {

// Element of the hyperoctahedral group: signed permutation matrix sending
// e_i to sign[i] * e_{perm[i]}.
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign; // entries +1 / -1

    static SignedPerm identity(int n);
    int rank() const { return static_cast<int>(perm.size()); }

    SignedPerm operator*(const SignedPerm& rhs) const; // apply rhs first
    SignedPerm inverse() const;
    bool operator==(const SignedPerm&) const = default;
    bool operator<(const SignedPerm& o) const {
        return perm != o.perm ? perm < o.perm : sign < o.sign;
    }

    int sign_product() const;    // parity of the number of -1 entries
    int underlying_sign() const; // sign of the underlying permutation
};

struct ConjClassLabel {
    Partition positive; // cycles with sign product +1
    Partition negative;
    auto operator<=>(const ConjClassLabel&) const = default;
};

ConjClassLabel class_of(const SignedPerm& w);
void for_each_element(int n, const std::function<void(const SignedPerm&)>& fn);

long long hyperoctahedral_order(int n);            // 2^n n!
long long centralizer_order(const ConjClassLabel&); // in the full group
long long symmetric_centralizer_order(const Partition& cycle_type); // in S_n

// chi^lambda(rho) for the symmetric group, by the Murnaghan-Nakayama rule.
long long sym_char(const Partition& lambda, const Partition& rho);

// Cached per-rank tables: conjugacy classes, sizes, and the full integral
// character table indexed by bipartitions.
struct RankData {
    int n = 0;
    long long order = 1;
    std::vector<ConjClassLabel> classes;
    std::vector<long long> class_sizes;
    std::map<ConjClassLabel, int> class_index;
    std::vector<BiPartition> irreps;
    std::map<BiPartition, int> irrep_index;
    std::vector<std::vector<long long>> irr_values; // [irrep][class]

    int index_of(const ConjClassLabel& c) const;
    long long irr_value(const BiPartition& bp, const ConjClassLabel& c) const;
    long long dimension(const BiPartition& bp) const;
};

const RankData& rank_data(int n);

// Character value chi_{(lam,mu)} at class (alpha,beta), independent of caching.
long long irr_character_value(const BiPartition& bp, const ConjClassLabel& cls);

// Exact class function on the conjugacy classes of a fixed rank.
class ClassFunction {
public:
    explicit ClassFunction(int n);
    ClassFunction(int n, std::vector<Rat> values);

    static ClassFunction irreducible(int n, const BiPartition& bp);

    int rank() const { return n_; }
    const std::vector<Rat>& values() const { return values_; }
    Rat& operator[](int class_idx) { return values_[class_idx]; }
    const Rat& operator[](int class_idx) const { return values_[class_idx]; }
    Rat at(const ConjClassLabel& c) const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction& scale(const Rat& c);

    Rat degree() const; // value at the identity class

    // (1/|W_n|) sum_c |c| f(c) g(c); characters here are rational-valued.
    Rat inner(const ClassFunction& g) const;

    // Multiplicities of all irreducibles; throws unless they are integers.
    std::map<BiPartition, long long> decompose() const;

    bool operator==(const ClassFunction&) const = default;

private:
    int n_;
    std::vector<Rat> values_;
};

} // namespace spincount
