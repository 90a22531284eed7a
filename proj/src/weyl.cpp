#include "spincount/weyl.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace spincount {

SignedPerm SignedPerm::identity(int n) {
    SignedPerm w;
    w.perm.resize(n);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.sign.assign(n, 1);
    return w;
}

SignedPerm SignedPerm::operator*(const SignedPerm& rhs) const {
    const int n = rank();
    SignedPerm r;
    r.perm.resize(n);
    r.sign.resize(n);
    for (int i = 0; i < n; ++i) {
        r.perm[i] = perm[rhs.perm[i]];
        r.sign[i] = rhs.sign[i] * sign[rhs.perm[i]];
    }
    return r;
}

SignedPerm SignedPerm::inverse() const {
    const int n = rank();
    SignedPerm r;
    r.perm.resize(n);
    r.sign.resize(n);
    for (int i = 0; i < n; ++i) {
        r.perm[perm[i]] = i;
        r.sign[perm[i]] = sign[i];
    }
    return r;
}

int SignedPerm::sign_product() const {
    int s = 1;
    for (int x : sign) s *= x;
    return s;
}

int SignedPerm::underlying_sign() const {
    const int n = rank();
    std::vector<bool> seen(n, false);
    int parity = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        parity += len - 1;
    }
    return parity % 2 == 0 ? 1 : -1;
}

ConjClassLabel class_of(const SignedPerm& w) {
    const int n = w.rank();
    std::vector<bool> seen(n, false);
    std::vector<int> pos, neg;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, s = 1;
        for (int j = i; !seen[j]; j = w.perm[j]) {
            seen[j] = true;
            s *= w.sign[j];
            ++len;
        }
        (s == 1 ? pos : neg).push_back(len);
    }
    return {Partition(pos), Partition(neg)};
}

void for_each_element(int n, const std::function<void(const SignedPerm&)>& fn) {
    SignedPerm w = SignedPerm::identity(n);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        w.perm = p;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) w.sign[i] = (mask >> i) & 1 ? -1 : 1;
            fn(w);
        }
    } while (std::next_permutation(p.begin(), p.end()));
}

long long hyperoctahedral_order(int n) {
    long long r = 1;
    for (int i = 1; i <= n; ++i) r *= 2ll * i;
    return r;
}

long long symmetric_centralizer_order(const Partition& cycle_type) {
    long long z = 1;
    for (auto [v, m] : cycle_type.row_multiplicities()) {
        for (int i = 1; i <= m; ++i) z *= v * static_cast<long long>(i);
    }
    return z;
}

static long long half_centralizer(const Partition& p) {
    long long z = 1;
    for (auto [v, m] : p.row_multiplicities())
        for (int i = 1; i <= m; ++i) z *= 2ll * v * i;
    return z;
}

long long centralizer_order(const ConjClassLabel& c) {
    return half_centralizer(c.positive) * half_centralizer(c.negative);
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

std::map<std::pair<Partition, Partition>, long long> g_sym_memo;
std::mutex g_sym_mutex;

long long sym_char_rec(const Partition& lambda, const Partition& rho) {
    if (rho.empty()) return lambda.empty() ? 1 : 0;
    {
        std::lock_guard<std::mutex> lk(g_sym_mutex);
        auto it = g_sym_memo.find({lambda, rho});
        if (it != g_sym_memo.end()) return it->second;
    }
    const int k = rho.parts()[0];
    Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    const int rows = lambda.length();
    std::vector<long long> beta(rows);
    for (int i = 0; i < rows; ++i)
        beta[i] = lambda.parts()[i] + (rows - 1 - i);
    long long total = 0;
    for (int i = 0; i < rows; ++i) {
        long long b = beta[i] - k;
        if (b < 0) continue;
        if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int height = 0;
        std::vector<long long> nb;
        nb.reserve(rows);
        for (int j = 0; j < rows; ++j) {
            if (j == i) continue;
            if (beta[j] > b && beta[j] < beta[i]) ++height;
            nb.push_back(beta[j]);
        }
        nb.push_back(b);
        std::sort(nb.begin(), nb.end(), std::greater<long long>());
        std::vector<int> newparts(nb.size());
        for (size_t j = 0; j < nb.size(); ++j)
            newparts[j] = static_cast<int>(nb[j] - (nb.size() - 1 - j));
        total += (height % 2 ? -1 : 1) * sym_char_rec(Partition(newparts), rest);
    }
    {
        std::lock_guard<std::mutex> lk(g_sym_mutex);
        g_sym_memo.emplace(std::make_pair(lambda, rho), total);
    }
    return total;
}

} // namespace

long long sym_char(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("sym_char: size mismatch");
    return sym_char_rec(lambda, rho);
}

// ---------------------------------------------------------------------------
// Irreducible characters of W_n

namespace {

// all splittings of a multiset partition into two, with binomial weight
struct Split {
    Partition a, b;
    long long weight;
};

std::vector<Split> multiset_splits(const Partition& p) {
    auto mult = p.row_multiplicities();
    std::vector<std::pair<int, int>> vals(mult.begin(), mult.end());
    std::vector<Split> out;
    std::vector<int> pick(vals.size(), 0);
    auto binom = [](int n, int k) {
        long long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    std::function<void(size_t, long long)> rec = [&](size_t idx, long long w) {
        if (idx == vals.size()) {
            std::vector<int> a, b;
            for (size_t i = 0; i < vals.size(); ++i) {
                for (int j = 0; j < pick[i]; ++j) a.push_back(vals[i].first);
                for (int j = 0; j < vals[i].second - pick[i]; ++j) b.push_back(vals[i].first);
            }
            out.push_back({Partition(a), Partition(b), w});
            return;
        }
        for (int k = 0; k <= vals[idx].second; ++k) {
            pick[idx] = k;
            rec(idx + 1, w * binom(vals[idx].second, k));
        }
    };
    rec(0, 1);
    return out;
}

Partition merge(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition(v);
}

} // namespace

long long irr_character_value(const BiPartition& bp, const ConjClassLabel& cls) {
    const int a = bp.left.size();
    long long total = 0;
    for (const Split& sa : multiset_splits(cls.positive)) {
        for (const Split& sb : multiset_splits(cls.negative)) {
            if (sa.a.size() + sb.a.size() != a) continue;
            long long t1 = sym_char(bp.left, merge(sa.a, sb.a));
            if (t1 == 0) continue;
            long long t2 = sym_char(bp.right, merge(sa.b, sb.b));
            if (t2 == 0) continue;
            long long sgn = sb.b.length() % 2 ? -1 : 1;
            total += sa.weight * sb.weight * t1 * t2 * sgn;
        }
    }
    return total;
}

namespace {

std::map<int, RankData> g_rank_cache;
std::mutex g_rank_mutex;

RankData build_rank_data(int n) {
    RankData rd;
    rd.n = n;
    rd.order = hyperoctahedral_order(n);
    for (int a = n; a >= 0; --a) {
        for (const Partition& al : partitions_of(a)) {
            for (const Partition& be : partitions_of(n - a)) {
                ConjClassLabel c{al, be};
                rd.class_index[c] = static_cast<int>(rd.classes.size());
                rd.classes.push_back(c);
                rd.class_sizes.push_back(rd.order / centralizer_order(c));
            }
        }
    }
    for (int a = n; a >= 0; --a)
        for (const Partition& lam : partitions_of(a))
            for (const Partition& mu : partitions_of(n - a)) {
                BiPartition bp{lam, mu};
                rd.irrep_index[bp] = static_cast<int>(rd.irreps.size());
                rd.irreps.push_back(bp);
            }
    rd.irr_values.resize(rd.irreps.size());
    for (size_t i = 0; i < rd.irreps.size(); ++i) {
        rd.irr_values[i].resize(rd.classes.size());
        for (size_t c = 0; c < rd.classes.size(); ++c)
            rd.irr_values[i][c] = irr_character_value(rd.irreps[i], rd.classes[c]);
    }
    return rd;
}

} // namespace

const RankData& rank_data(int n) {
    if (n < 0) throw std::invalid_argument("rank_data: negative rank");
    std::lock_guard<std::mutex> lk(g_rank_mutex);
    auto it = g_rank_cache.find(n);
    if (it == g_rank_cache.end())
        it = g_rank_cache.emplace(n, build_rank_data(n)).first;
    return it->second;
}

int RankData::index_of(const ConjClassLabel& c) const {
    auto it = class_index.find(c);
    if (it == class_index.end())
        throw std::logic_error("RankData: unknown class label");
    return it->second;
}

long long RankData::irr_value(const BiPartition& bp, const ConjClassLabel& c) const {
    auto it = irrep_index.find(bp);
    if (it == irrep_index.end())
        throw std::logic_error("RankData: unknown irreducible " + to_string(bp));
    return irr_values[it->second][index_of(c)];
}

long long RankData::dimension(const BiPartition& bp) const {
    ConjClassLabel id{Partition(std::vector<int>(n, 1)), Partition()};
    return irr_value(bp, id);
}

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(int n)
    : n_(n), values_(rank_data(n).classes.size(), Rat(0)) {}

ClassFunction::ClassFunction(int n, std::vector<Rat> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != rank_data(n).classes.size())
        throw std::invalid_argument("ClassFunction: wrong number of class values");
}

ClassFunction ClassFunction::irreducible(int n, const BiPartition& bp) {
    const RankData& rd = rank_data(n);
    ClassFunction f(n);
    int idx = rd.irrep_index.at(bp);
    for (size_t c = 0; c < rd.classes.size(); ++c)
        f.values_[c] = Rat(rd.irr_values[idx][c]);
    return f;
}

Rat ClassFunction::at(const ConjClassLabel& c) const {
    return values_[rank_data(n_).index_of(c)];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (o.n_ != n_) throw std::invalid_argument("ClassFunction: rank mismatch");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    ClassFunction r = *this;
    r += o;
    return r;
}

ClassFunction& ClassFunction::scale(const Rat& c) {
    for (auto& v : values_) v *= c;
    return *this;
}

Rat ClassFunction::degree() const {
    ConjClassLabel id{Partition(std::vector<int>(n_, 1)), Partition()};
    return at(id);
}

Rat ClassFunction::inner(const ClassFunction& g) const {
    if (g.n_ != n_) throw std::invalid_argument("inner_product: rank mismatch");
    const RankData& rd = rank_data(n_);
    Rat total(0);
    for (size_t c = 0; c < values_.size(); ++c)
        total += Rat(rd.class_sizes[c]) * values_[c] * g.values_[c];
    return total / Rat(rd.order);
}

std::map<BiPartition, long long> ClassFunction::decompose() const {
    const RankData& rd = rank_data(n_);
    std::map<BiPartition, long long> out;
    for (const BiPartition& bp : rd.irreps) {
        Rat m = inner(ClassFunction::irreducible(n_, bp));
        if (!m.is_zero()) out[bp] = m.as_int64();
    }
    return out;
}

} // namespace spincount
