#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spincount {

// A Young diagram: weakly decreasing positive parts, trailing zeros dropped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Diagram whose i-th column has the given length (input normalized by sorting).
    static Partition from_columns(std::vector<int> cols);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row length, 0 beyond the diagram.
    int row(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    Partition transpose() const;
    std::map<int, int> row_multiplicities() const;
    bool is_very_even() const;
    bool all_rows_even_multiplicity() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

enum class NilpotentType { B, C, D };

// B/D: every even part has even multiplicity; C: every odd part has even multiplicity.
bool satisfies_parity_constraint(const Partition& p, NilpotentType t);
bool size_parity_matches(int size, NilpotentType t);
bool is_valid_nilpotent(const Partition& p, NilpotentType t);

// Dominance-greatest valid partition below p of the given type.
Partition collapse(const Partition& p, NilpotentType t);

// p >= q in dominance order (requires equal sizes).
bool dominates(const Partition& p, const Partition& q);

std::vector<Partition> partitions_of(int n);

std::string to_string(const Partition& p);
// Accepts "4,2,2", "col[2,1]", and "" / "0" for the empty diagram.
Partition parse_partition(std::string_view text);

struct BiPartition {
    Partition left;
    Partition right;

    int total() const { return left.size() + right.size(); }
    auto operator<=>(const BiPartition&) const = default;
};

std::string to_string(const BiPartition& bp);

enum class Label { I, II };

std::string to_string(Label l);

// Unordered pair of diagrams; a label is attached exactly when the two coincide.
class LabeledPair {
public:
    LabeledPair(Partition a, Partition b);
    LabeledPair(Partition shape, Label label);

    const Partition& first() const { return first_; }
    const Partition& second() const { return second_; }
    bool equal_pair() const { return first_ == second_; }
    std::optional<Label> label() const { return label_; }
    int total() const { return first_.size() + second_.size(); }

    bool operator==(const LabeledPair&) const = default;

private:
    Partition first_;
    Partition second_;
    std::optional<Label> label_;
};

std::string to_string(const LabeledPair& lp);

} // namespace spincount
