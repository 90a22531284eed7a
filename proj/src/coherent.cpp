#include "spincount/coherent.hpp"

#include "spincount/wprime.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace spincount {

InducedSum classical_block_module(BlockStar star, int n) {
    InducedSum sum;
    sum.rank = n;
    switch (star) {
    case BlockStar::B:
        for (int t = 0; 2 * t <= n; ++t)
            for (int c = 0; 2 * t + c <= n; ++c) {
                int d = n - 2 * t - c;
                sum.terms.push_back({{factor_H(t), factor_W(c), factor_W(d)}, 1});
            }
        break;
    case BlockStar::D:
        for (int t = 0; 2 * t <= n; ++t)
            sum.terms.push_back({{factor_H(t), factor_S(n - 2 * t)}, 1});
        break;
    case BlockStar::Dstar:
        if (n % 2 != 0) return sum; // zero module
        sum.terms.push_back({{factor_H(n / 2)}, 1});
        break;
    }
    return sum;
}

InducedSum genuine_block_module(int p, int q) {
    InducedSum sum;
    if (p < 0 || q < 0) {
        sum.rank = 0;
        return sum; // support condition fails: the zero module
    }
    const int n = (p + q) / 2;
    sum.rank = n;
    if ((p + q) % 2 == 1) {
        for (int t = 0; 2 * t <= n; ++t)
            for (int a = 0; 2 * t + a <= n; ++a)
                for (int r = 0; 2 * t + a + r <= n; ++r) {
                    int s = n - 2 * t - a - r;
                    int dp = p - (2 * t + a + 2 * r);
                    int dq = q - (2 * t + a + 2 * s);
                    if (dp < 0 || dp > 1 || dq < 0 || dq > 1) continue;
                    sum.terms.push_back({{factor_H(t), factor_S(a),
                                          factor_W(s, FactorChar::Sgn),
                                          factor_W(r, FactorChar::Sgn)},
                                         1});
                }
    } else {
        for (int t = 0; 2 * t <= n; ++t)
            for (int c = 0; 2 * t + c <= n; ++c)
                for (int d = 0; 2 * t + c + d <= n; ++d) {
                    int pp = p - 2 * t - c - d;
                    int qq = q - 2 * t - c - d;
                    if (pp < 0 || qq < 0 || pp % 2 || qq % 2) continue;
                    int r = pp / 2, s = qq / 2;
                    if (2 * t + c + d + r + s != n) continue;
                    sum.terms.push_back({{factor_H(t), factor_W(s, FactorChar::SgnBar),
                                          factor_W(r, FactorChar::SgnBar), factor_W(c),
                                          factor_W(d)},
                                         1});
                }
    }
    return sum;
}

InducedSum genuine_block_module_dstar(int n) {
    InducedSum sum;
    sum.rank = n;
    for (int t = 0; 2 * t <= n; ++t)
        sum.terms.push_back({{factor_H(t), factor_S(n - 2 * t, FactorChar::Sgn)}, 1});
    return sum;
}

std::vector<int> primitive_pairs(const RowSplit& split) {
    std::vector<int> out;
    for (int i = 1; i < split.k; ++i) {
        if (!split.even_case) {
            if (split.rpp(2 * i) > split.rpp(2 * i + 1)) out.push_back(i);
        } else {
            if (split.rpp(2 * i) > split.rpp(2 * i + 1) && split.rpp(2 * i + 1) > 0)
                out.push_back(i);
        }
    }
    return out;
}

namespace {

CellMember make_member(const RowSplit& split, const std::set<int>& subset) {
    CellMember m;
    m.subset = subset;
    const int k = split.k;
    if (!split.even_case) {
        // slots l_1..l_{k+1}, r_1..r_{k+1}; r_1 = r''_1, l_{k+1} = 0, and the
        // pair (l_i, r_{i+1}) carries {r''_{2i}, r''_{2i+1}}, swapped when the
        // adjacent pair is selected.
        std::vector<int> l(k + 1, 0), r(k + 1, 0);
        r[0] = split.rpp(1);
        for (int i = 1; i <= k; ++i) {
            if (subset.count(i)) {
                l[i - 1] = split.rpp(2 * i + 1);
                r[i] = split.rpp(2 * i);
            } else {
                l[i - 1] = split.rpp(2 * i);
                r[i] = split.rpp(2 * i + 1);
            }
        }
        m.left_columns = l;
        m.right_columns = r;
    } else {
        // slots l_1..l_k, r_1..r_k; l_1 = r''_1 + 1, r_k = r''_{2k}, and the
        // pair (l_{i+1}, r_i) carries {r''_{2i+1}+1, r''_{2i}}, swapped when
        // the adjacent pair is selected.
        std::vector<int> l(k, 0), r(k, 0);
        if (k > 0) {
            l[0] = split.rpp(1) + 1;
            r[k - 1] = split.rpp(2 * k);
            for (int i = 1; i < k; ++i) {
                if (subset.count(i)) {
                    l[i] = split.rpp(2 * i) + 1;
                    r[i - 1] = split.rpp(2 * i + 1);
                } else {
                    l[i] = split.rpp(2 * i + 1) + 1;
                    r[i - 1] = split.rpp(2 * i);
                }
            }
        }
        m.left_columns = l;
        m.right_columns = r;
    }
    for (size_t i = 1; i < m.left_columns.size(); ++i)
        if (m.left_columns[i] > m.left_columns[i - 1])
            throw std::logic_error("cell member has a non-monotone left column sequence");
    for (size_t i = 1; i < m.right_columns.size(); ++i)
        if (m.right_columns[i] > m.right_columns[i - 1])
            throw std::logic_error("cell member has a non-monotone right column sequence");
    m.tau = {Partition::from_columns(m.left_columns), Partition::from_columns(m.right_columns)};
    int expected = split.ng;
    if (m.tau.total() != expected)
        throw std::logic_error("cell member has the wrong total size");
    if (split.even_case) {
        // strict slotwise inequality between the two column sequences
        for (int i = 0; i < k; ++i)
            if (m.left_columns[i] <= m.right_columns[i])
                throw std::logic_error("cell member violates the strict column inequality");
    }
    return m;
}

} // namespace

Cell build_cell(const RowSplit& split, std::optional<Label> orbit_label) {
    Cell cell;
    cell.split = split;
    if (!split.even_case) {
        std::vector<int> shifted = split.r_prime;
        for (int& x : shifted) ++x;
        cell.anchor = {Partition::from_columns(shifted), Partition::from_columns(split.r_prime)};
        cell.anchor_shape = cell.anchor.right;
        if (cell.anchor.total() != split.nb)
            throw std::logic_error("cell anchor has the wrong total size");
    } else {
        Partition lam = Partition::from_columns(split.r_prime);
        cell.anchor = {lam, lam};
        cell.anchor_shape = lam;
        cell.anchor_label = orbit_label;
        if (2 * lam.size() != split.nb)
            throw std::logic_error("cell anchor has the wrong total size");
    }
    cell.pp = primitive_pairs(split);
    const size_t count = size_t{1} << cell.pp.size();
    for (size_t mask = 0; mask < count; ++mask) {
        std::set<int> subset;
        for (size_t b = 0; b < cell.pp.size(); ++b)
            if (mask & (size_t{1} << b)) subset.insert(cell.pp[b]);
        cell.members.push_back(make_member(split, subset));
    }
    return cell;
}

long long closed_form_multiplicity(LemmaId which, const RowSplit& split,
                                   const std::set<int>& subset, int p, int q,
                                   std::optional<Label> label) {
    switch (which) {
    case LemmaId::OddAnchor:
        if (split.even_case) throw std::invalid_argument("OddAnchor needs an odd-case split");
        return std::abs(p - q) == 1 ? 1 : 0;
    case LemmaId::OddMember:
        if (split.even_case) throw std::invalid_argument("OddMember needs an odd-case split");
        return (subset.empty() && split.rows_pair_up()) ? 1 : 0;
    case LemmaId::EvenAnchor:
        if (!split.even_case) throw std::invalid_argument("EvenAnchor needs an even-case split");
        return p == q ? 1 : 0;
    case LemmaId::EvenMember:
        if (!split.even_case) throw std::invalid_argument("EvenMember needs an even-case split");
        if (split.ng == 0) return 1; // empty member against the rank-zero module
        return (subset.empty() && split.rows_pair_up()) ? 2 : 0;
    case LemmaId::QuatMember:
        if (!split.even_case || split.ng == 0)
            throw std::invalid_argument("QuatMember covers even-case splits with ng > 0");
        return 0;
    case LemmaId::QuatAnchor: {
        if (!split.even_case || split.ng != 0)
            throw std::invalid_argument("QuatAnchor covers even-case splits with ng = 0");
        if (label != Label::I) return 0;
        long long prod = 1;
        for (int i = 0; i < split.l; ++i) {
            int next = (i + 1 < split.l) ? split.r_prime[i + 1] : 0;
            prod *= split.r_prime[i] - next + 1;
        }
        return prod;
    }
    }
    throw std::logic_error("unknown lemma id");
}

long long engine_multiplicity(const BiPartition& rep, const InducedSum& sum) {
    if (rep.total() != sum.rank)
        throw std::invalid_argument("engine_multiplicity: rank mismatch");
    if (sum.rank > kHardEngineCutoff)
        throw std::invalid_argument("engine_multiplicity: rank exceeds the hard cutoff");
    if (sum.empty()) return 0;
    long long m = multiplicity_in_sum(rep, sum);
    if (m < 0) throw std::logic_error("negative multiplicity");
    return m;
}

long long engine_multiplicity_wprime(const LabeledPair& rep, const InducedSum& wn_module) {
    if (rep.equal_pair())
        return engine_multiplicity({rep.first(), rep.second()}, wn_module);
    return engine_multiplicity({rep.first(), rep.second()}, wn_module) +
           engine_multiplicity({rep.second(), rep.first()}, wn_module);
}

std::pair<long long, long long> split_multiplicities(const Partition& lam,
                                                     const InducedSum& wprime_sum) {
    const int n = 2 * lam.size();
    if (wprime_sum.rank != n)
        throw std::invalid_argument("split_multiplicities: rank mismatch");
    if (n > kHardEngineCutoff)
        throw std::invalid_argument("split_multiplicities: rank exceeds the hard cutoff");
    Rat mp(0), mm(0);
    for (const auto& term : wprime_sum.terms) {
        Rat tp(0), tm(0);
        auto elements = subgroup_elements(term.factors, n);
        for (const auto& [g, v] : elements) {
            if (g.sign_product() != 1)
                throw std::logic_error("split_multiplicities: subgroup leaves the index-2 group");
            auto [a, b] = split_char_values(lam, g);
            tp += a * Rat(v);
            tm += b * Rat(v);
        }
        Rat order{static_cast<long long>(elements.size())};
        mp += tp / order * Rat(term.coefficient);
        mm += tm / order * Rat(term.coefficient);
    }
    return {mp.as_int64(), mm.as_int64()};
}

namespace {
std::map<Partition, bool> g_orientation;
std::mutex g_orientation_mutex;
} // namespace

bool label_I_is_plus(const Partition& lam) {
    {
        std::lock_guard<std::mutex> lk(g_orientation_mutex);
        auto it = g_orientation.find(lam);
        if (it != g_orientation.end()) return it->second;
    }
    auto [mp, mm] = split_multiplicities(lam, genuine_block_module_dstar(2 * lam.size()));
    if ((mp == 0) == (mm == 0))
        throw VerificationError("split constituents of {" + to_string(lam) + "," +
                                to_string(lam) +
                                "} are not separated by the genuine quaternionic module (" +
                                std::to_string(mp) + ", " + std::to_string(mm) + ")");
    bool plus = mp != 0;
    std::lock_guard<std::mutex> lk(g_orientation_mutex);
    g_orientation[lam] = plus;
    return plus;
}

long long labeled_multiplicity_in_dstar(const Partition& lam, Label label) {
    bool plus = label_I_is_plus(lam);
    auto [mp, mm] = split_multiplicities(lam, genuine_block_module_dstar(2 * lam.size()));
    bool want_plus = (label == Label::I) == plus;
    return want_plus ? mp : mm;
}

} // namespace spincount
