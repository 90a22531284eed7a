#include "spincount/wprime.hpp"

#include <numeric>
#include <stdexcept>

namespace spincount {

namespace {

SignedPerm coset_rep(unsigned mask, int n) {
    // positive permutation sending block {0..t-1} onto the set bits in order
    SignedPerm w = SignedPerm::identity(n);
    int lo = 0, hi = n / 2;
    for (int i = 0; i < n; ++i) {
        if (mask & (1u << i))
            w.perm[lo++] = i;
        else
            w.perm[hi++] = i;
    }
    return w;
}

// split a block-diagonal element of W_t x W_t in W_{2t}
std::pair<SignedPerm, SignedPerm> block_parts(const SignedPerm& w, int t) {
    SignedPerm a = SignedPerm::identity(t), b = SignedPerm::identity(t);
    for (int i = 0; i < t; ++i) {
        if (w.perm[i] >= t) throw std::logic_error("twisted_value: not block diagonal");
        a.perm[i] = w.perm[i];
        a.sign[i] = w.sign[i];
    }
    for (int i = 0; i < t; ++i) {
        if (w.perm[t + i] < t) throw std::logic_error("twisted_value: not block diagonal");
        b.perm[i] = w.perm[t + i] - t;
        b.sign[i] = w.sign[t + i];
    }
    return {a, b};
}

Partition underlying_cycle_type(const SignedPerm& w) {
    ConjClassLabel c = class_of(w);
    std::vector<int> v = c.positive.parts();
    v.insert(v.end(), c.negative.parts().begin(), c.negative.parts().end());
    return Partition(v);
}

} // namespace

long long twisted_value(const Partition& lam, const SignedPerm& x) {
    const int t = lam.size();
    const int n = 2 * t;
    if (x.rank() != n)
        throw std::invalid_argument("twisted_value: rank mismatch");
    if (x.sign_product() != 1)
        throw std::invalid_argument("twisted_value: element outside the index-2 subgroup");
    if (t == 0) return 0;

    SignedPerm u = SignedPerm::identity(n); // block swap
    for (int i = 0; i < t; ++i) {
        u.perm[i] = t + i;
        u.perm[t + i] = i;
    }

    long long total = 0;
    const unsigned full = (1u << n) - 1;
    for (unsigned mask = 0; mask <= full; ++mask) {
        if (__builtin_popcount(mask) != t) continue;
        unsigned img = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) img |= 1u << x.perm[i];
        if (img != (full & ~mask)) continue;
        SignedPerm wS = coset_rep(mask, n);
        SignedPerm wSc = coset_rep(full & ~mask, n);
        SignedPerm h = wSc.inverse() * (x * wS);
        SignedPerm hpp = wS.inverse() * (wSc * u);
        auto [h1, h2] = block_parts(h, t);
        auto [g1, g2] = block_parts(hpp, t);
        if (g1.sign_product() != 1 || g2.sign_product() != 1)
            throw std::logic_error("twisted_value: swap cocycle acquired signs");
        SignedPerm prod = g1 * (h2 * (g2 * h1));
        total += h2.sign_product() * sym_char(lam, underlying_cycle_type(prod));
    }
    return total;
}

std::pair<Rat, Rat> split_char_values(const Partition& lam, const SignedPerm& x) {
    BiPartition bp{lam, lam};
    long long c = irr_character_value(bp, class_of(x));
    long long d = twisted_value(lam, x);
    if ((c + d) % 2 != 0)
        throw std::logic_error("split_char_values: non-integral split");
    return {Rat((c + d) / 2), Rat((c - d) / 2)};
}

} // namespace spincount
