#pragma once

#include "spincount/weyl.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spincount {

// A block factor of a product subgroup of W_n, together with the character
// carried by that factor inside an induction.
//   S(a)      symmetric group on a consecutive coordinates   (one, sgn)
//   W(b)      full hyperoctahedral block                      (one, sgn, sgnbar, eps)
//   Wprime(b) index-2 kernel of the product-of-signs          (one)
//   H(t)      pair group W_t x {+-1}^t on 2t coordinates      (eta)
enum class FactorKind { S, W, Wprime, H };
enum class FactorChar { One, Sgn, SgnBar, Eps, Eta };

struct SubgroupFactor {
    FactorKind kind;
    int size = 0; // a, b, or t
    FactorChar character = FactorChar::One;

    int degree() const { return kind == FactorKind::H ? 2 * size : size; }
};

SubgroupFactor factor_S(int a, FactorChar c = FactorChar::One);
SubgroupFactor factor_W(int b, FactorChar c = FactorChar::One);
SubgroupFactor factor_Wprime(int b);
SubgroupFactor factor_H(int t);

void validate_factor(const SubgroupFactor& f);

struct InducedTerm {
    std::vector<SubgroupFactor> factors;
    long long coefficient = 1;

    int degree() const;
    long long subgroup_order() const;
};

// Formal non-negative combination of inductions to W_n from block subgroups.
struct InducedSum {
    int rank = 0;
    std::vector<InducedTerm> terms;

    bool empty() const { return terms.empty(); }
};

// ---------------------------------------------------------------------------
// eta and the embedding of H_t into W_{2t}

// Candidate embeddings of H_t = W_t x {+-1}^t into W_{2t}:
//   PairSwap:   the W_t sign generator swaps the two coordinates of its pair,
//               the i-th {+-1} flips both coordinates of pair i (lands in W'_{2t});
//   SingleFlip: the W_t sign generator flips the first coordinate of its pair,
//               the i-th {+-1} flips the second coordinate of pair i.
enum class HEmbedding { PairSwap, SingleFlip };

// Quadratic characters on the W_t part of H_t.
enum class HWChar { One, SgnBar, Delta, Sgn };

struct EtaCandidate {
    HEmbedding embedding = HEmbedding::PairSwap;
    HWChar w_part = HWChar::Delta;
    bool pm_product = true; // product character on the {+-1}^t part

    bool operator==(const EtaCandidate&) const = default;
};

std::string to_string(const EtaCandidate& c);

// Elements of H_t inside W_{2t} with their eta values.
const std::vector<std::pair<SignedPerm, int>>& h_elements(int t, const EtaCandidate& c);

struct Calibration {
    EtaCandidate eta;
    int checked_t = 3;
};

// Runs the calibration search over all candidates; throws a diagnostic if the
// constraints do not select exactly one.
Calibration run_calibration(int max_t = 3);

// The active calibration: loaded from the file named by SPINCOUNT_CALIBRATION
// if present, otherwise computed once per process.
const Calibration& calibration();

std::string calibration_to_json(const Calibration& c);
Calibration calibration_from_json(const std::string& text);
void save_calibration(const Calibration& c, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Induction backends

enum class Backend { Fusion, Element };

// All elements of the block-product subgroup, paired with character values.
std::vector<std::pair<SignedPerm, int>> subgroup_elements(std::span<const SubgroupFactor> factors,
                                                          int n);

// Character of Ind_H^{W_n}(phi) as a class function.
ClassFunction realize_term(const InducedTerm& term, int n, Backend backend = Backend::Fusion);
ClassFunction realize(const InducedSum& sum, Backend backend = Backend::Fusion);

// Frobenius multiplicity [chi_bp : Ind_H^{W_n} phi], summed over the subgroup.
long long multiplicity_in_term(const BiPartition& bp, const InducedTerm& term, int n);
long long multiplicity_in_sum(const BiPartition& bp, const InducedSum& sum);

// Restriction of a class function to a block-product subgroup, element by
// element; returns inner product with the factor character (Frobenius check).
Rat restricted_inner(const ClassFunction& f, std::span<const SubgroupFactor> factors);

} // namespace spincount
