#include "spincount/induce.hpp"

#include "spincount/wprime.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spincount {

namespace {
nlohmann::json parse_json(const std::string& text) { return nlohmann::json::parse(text); }
} // namespace

SubgroupFactor factor_S(int a, FactorChar c) { return {FactorKind::S, a, c}; }
SubgroupFactor factor_W(int b, FactorChar c) { return {FactorKind::W, b, c}; }
SubgroupFactor factor_Wprime(int b) { return {FactorKind::Wprime, b, FactorChar::One}; }
SubgroupFactor factor_H(int t) { return {FactorKind::H, t, FactorChar::Eta}; }

void validate_factor(const SubgroupFactor& f) {
    if (f.size < 0) throw std::invalid_argument("factor with negative size");
    switch (f.kind) {
    case FactorKind::S:
        if (f.character != FactorChar::One && f.character != FactorChar::Sgn)
            throw std::invalid_argument("S-factor carries only the trivial or sign character");
        break;
    case FactorKind::W:
        if (f.character == FactorChar::Eta)
            throw std::invalid_argument("eta lives on H-factors only");
        break;
    case FactorKind::Wprime:
        if (f.character != FactorChar::One)
            throw std::invalid_argument("W'-factor carries only the trivial character here");
        break;
    case FactorKind::H:
        if (f.character != FactorChar::Eta)
            throw std::invalid_argument("H-factor carries eta");
        break;
    }
}

int InducedTerm::degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.degree();
    return d;
}

long long InducedTerm::subgroup_order() const {
    long long o = 1;
    for (const auto& f : factors) {
        switch (f.kind) {
        case FactorKind::S: {
            long long fa = 1;
            for (int i = 2; i <= f.size; ++i) fa *= i;
            o *= fa;
            break;
        }
        case FactorKind::W:
            o *= hyperoctahedral_order(f.size);
            break;
        case FactorKind::Wprime:
            o *= f.size == 0 ? 1 : hyperoctahedral_order(f.size) / 2;
            break;
        case FactorKind::H: {
            long long fa = 1;
            for (int i = 2; i <= f.size; ++i) fa *= i;
            long long pw = 1;
            for (int i = 0; i < f.size; ++i) pw *= 4;
            o *= fa * pw;
            break;
        }
        }
    }
    return o;
}

// ---------------------------------------------------------------------------
// H_t elements

std::string to_string(const EtaCandidate& c) {
    std::string s = c.embedding == HEmbedding::PairSwap ? "pair-swap" : "single-flip";
    s += " / ";
    switch (c.w_part) {
    case HWChar::One: s += "one"; break;
    case HWChar::SgnBar: s += "sgnbar"; break;
    case HWChar::Delta: s += "delta"; break;
    case HWChar::Sgn: s += "sgn"; break;
    }
    s += c.pm_product ? " x product" : " x one";
    return s;
}

namespace {

int w_char_value(HWChar c, const SignedPerm& u) {
    switch (c) {
    case HWChar::One: return 1;
    case HWChar::SgnBar: return u.underlying_sign();
    case HWChar::Delta: return u.sign_product();
    case HWChar::Sgn: return u.underlying_sign() * u.sign_product();
    }
    return 1;
}

SignedPerm embed_h_element(int t, const SignedPerm& u, unsigned flip_mask, HEmbedding emb) {
    const int n = 2 * t;
    SignedPerm w = SignedPerm::identity(n);
    for (int i = 0; i < t; ++i) {
        int j = u.perm[i];
        if (emb == HEmbedding::PairSwap) {
            if (u.sign[i] == 1) {
                w.perm[2 * i] = 2 * j;
                w.perm[2 * i + 1] = 2 * j + 1;
            } else {
                w.perm[2 * i] = 2 * j + 1;
                w.perm[2 * i + 1] = 2 * j;
            }
        } else {
            w.perm[2 * i] = 2 * j;
            w.perm[2 * i + 1] = 2 * j + 1;
            if (u.sign[i] == -1) w.sign[2 * i] = -1;
        }
    }
    SignedPerm flip = SignedPerm::identity(n);
    for (int i = 0; i < t; ++i) {
        if (flip_mask & (1u << i)) {
            if (emb == HEmbedding::PairSwap) {
                flip.sign[2 * i] = -1;
                flip.sign[2 * i + 1] = -1;
            } else {
                flip.sign[2 * i + 1] = -1;
            }
        }
    }
    return w * flip; // flips act first
}

struct EtaKey {
    int t;
    EtaCandidate cand;
    bool operator<(const EtaKey& o) const {
        if (t != o.t) return t < o.t;
        if (cand.embedding != o.cand.embedding) return cand.embedding < o.cand.embedding;
        if (cand.w_part != o.cand.w_part) return cand.w_part < o.cand.w_part;
        return cand.pm_product < o.cand.pm_product;
    }
};

std::map<EtaKey, std::vector<std::pair<SignedPerm, int>>> g_h_cache;
std::mutex g_h_mutex;

std::vector<std::pair<SignedPerm, int>> build_h_elements(int t, const EtaCandidate& c) {
    std::map<SignedPerm, int> seen;
    for_each_element(t, [&](const SignedPerm& u) {
        int wv = w_char_value(c.w_part, u);
        for (unsigned mask = 0; mask < (1u << t); ++mask) {
            int pv = 1;
            if (c.pm_product && (__builtin_popcount(mask) % 2)) pv = -1;
            SignedPerm g = embed_h_element(t, u, mask, c.embedding);
            int val = wv * pv;
            auto [it, inserted] = seen.emplace(g, val);
            if (!inserted && it->second != val)
                throw std::logic_error("eta candidate is not well defined on H_t");
        }
    });
    long long expect = 1;
    for (int i = 1; i <= t; ++i) expect *= 4ll * i;
    if (static_cast<long long>(seen.size()) != expect)
        throw std::logic_error("H_t embedding has the wrong order");
    return {seen.begin(), seen.end()};
}

} // namespace

const std::vector<std::pair<SignedPerm, int>>& h_elements(int t, const EtaCandidate& c) {
    std::lock_guard<std::mutex> lk(g_h_mutex);
    EtaKey key{t, c};
    auto it = g_h_cache.find(key);
    if (it == g_h_cache.end())
        it = g_h_cache.emplace(key, build_h_elements(t, c)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// subgroup enumeration

namespace {

int factor_char_value(const SubgroupFactor& f, const SignedPerm& w) {
    switch (f.character) {
    case FactorChar::One: return 1;
    case FactorChar::Sgn:
        return f.kind == FactorKind::S ? w.underlying_sign()
                                       : w.underlying_sign() * w.sign_product();
    case FactorChar::SgnBar: return w.underlying_sign();
    case FactorChar::Eps: return w.sign_product();
    case FactorChar::Eta: throw std::logic_error("eta evaluated outside H-factor");
    }
    return 1;
}

SignedPerm shift_into(const SignedPerm& w, int offset, int n) {
    SignedPerm r = SignedPerm::identity(n);
    for (int i = 0; i < w.rank(); ++i) {
        r.perm[offset + i] = offset + w.perm[i];
        r.sign[offset + i] = w.sign[i];
    }
    return r;
}

std::vector<std::pair<SignedPerm, int>> factor_elements(const SubgroupFactor& f,
                                                        const EtaCandidate& eta) {
    validate_factor(f);
    std::vector<std::pair<SignedPerm, int>> out;
    switch (f.kind) {
    case FactorKind::S:
        for_each_element(f.size, [&](const SignedPerm& w) {
            bool pure = std::all_of(w.sign.begin(), w.sign.end(), [](int s) { return s == 1; });
            if (pure) out.emplace_back(w, factor_char_value(f, w));
        });
        break;
    case FactorKind::W:
        for_each_element(f.size, [&](const SignedPerm& w) {
            out.emplace_back(w, factor_char_value(f, w));
        });
        break;
    case FactorKind::Wprime:
        for_each_element(f.size, [&](const SignedPerm& w) {
            if (w.sign_product() == 1) out.emplace_back(w, factor_char_value(f, w));
        });
        break;
    case FactorKind::H:
        out = h_elements(f.size, eta);
        break;
    }
    return out;
}

void product_elements(std::span<const SubgroupFactor> factors, int n, const EtaCandidate& eta,
                      const std::function<void(const SignedPerm&, int)>& fn) {
    int total = 0;
    for (const auto& f : factors) total += f.degree();
    if (total != n)
        throw std::invalid_argument("subgroup factors do not fill the rank");
    std::vector<std::vector<std::pair<SignedPerm, int>>> lists;
    std::vector<int> offsets;
    int off = 0;
    for (const auto& f : factors) {
        if (f.degree() > 0) {
            lists.push_back(factor_elements(f, eta));
            offsets.push_back(off);
        }
        off += f.degree();
    }
    SignedPerm acc = SignedPerm::identity(n);
    std::function<void(size_t, const SignedPerm&, int)> rec = [&](size_t idx, const SignedPerm& g,
                                                                  int v) {
        if (idx == lists.size()) {
            fn(g, v);
            return;
        }
        for (const auto& [el, val] : lists[idx])
            rec(idx + 1, g * shift_into(el, offsets[idx], n), v * val);
    };
    rec(0, acc, 1);
}

const EtaCandidate& active_eta();

} // namespace

std::vector<std::pair<SignedPerm, int>> subgroup_elements(std::span<const SubgroupFactor> factors,
                                                          int n) {
    std::vector<std::pair<SignedPerm, int>> out;
    product_elements(factors, n, active_eta(),
                     [&](const SignedPerm& g, int v) { out.emplace_back(g, v); });
    return out;
}

// ---------------------------------------------------------------------------
// fusion backend

namespace {

struct WeightedClass {
    ConjClassLabel label;
    Int weight; // sum of character values over the elements in this bin
};

std::vector<WeightedClass> factor_classes(const SubgroupFactor& f, const EtaCandidate& eta) {
    validate_factor(f);
    std::vector<WeightedClass> out;
    switch (f.kind) {
    case FactorKind::S: {
        for (const Partition& g : partitions_of(f.size)) {
            long long fa = 1;
            for (int i = 2; i <= f.size; ++i) fa *= i;
            long long count = fa / symmetric_centralizer_order(g);
            int phi = f.character == FactorChar::Sgn
                          ? ((f.size - g.length()) % 2 ? -1 : 1)
                          : 1;
            out.push_back({ConjClassLabel{g, Partition()}, Int(count * phi)});
        }
        break;
    }
    case FactorKind::W: {
        const RankData& rd = rank_data(f.size);
        for (size_t c = 0; c < rd.classes.size(); ++c) {
            const ConjClassLabel& cl = rd.classes[c];
            int phi = 1;
            int la = cl.positive.length(), lb = cl.negative.length();
            switch (f.character) {
            case FactorChar::One: break;
            case FactorChar::Sgn: phi = ((f.size - la) % 2) ? -1 : 1; break;
            case FactorChar::SgnBar: phi = ((f.size - la - lb) % 2) ? -1 : 1; break;
            case FactorChar::Eps: phi = (lb % 2) ? -1 : 1; break;
            case FactorChar::Eta: break;
            }
            out.push_back({cl, Int(rd.class_sizes[c] * phi)});
        }
        break;
    }
    case FactorKind::Wprime: {
        const RankData& rd = rank_data(f.size);
        for (size_t c = 0; c < rd.classes.size(); ++c) {
            const ConjClassLabel& cl = rd.classes[c];
            if (cl.negative.length() % 2) continue; // outside the subgroup
            out.push_back({cl, Int(rd.class_sizes[c])});
        }
        break;
    }
    case FactorKind::H: {
        std::map<ConjClassLabel, Int> bins;
        for (const auto& [g, v] : h_elements(f.size, eta)) bins[class_of(g)] += v;
        for (auto& [cl, w] : bins)
            if (w != 0) out.push_back({cl, w});
        break;
    }
    }
    return out;
}

ConjClassLabel merge_labels(const ConjClassLabel& a, const ConjClassLabel& b) {
    std::vector<int> pos = a.positive.parts(), neg = a.negative.parts();
    pos.insert(pos.end(), b.positive.parts().begin(), b.positive.parts().end());
    neg.insert(neg.end(), b.negative.parts().begin(), b.negative.parts().end());
    return {Partition(pos), Partition(neg)};
}

ClassFunction realize_fusion(const InducedTerm& term, int n, const EtaCandidate& eta) {
    if (term.degree() != n)
        throw std::invalid_argument("induced term does not fill the rank");
    std::vector<std::vector<WeightedClass>> lists;
    for (const auto& f : term.factors)
        if (f.degree() > 0) lists.push_back(factor_classes(f, eta));
    std::map<ConjClassLabel, Int> acc;
    std::function<void(size_t, const ConjClassLabel&, const Int&)> rec =
        [&](size_t idx, const ConjClassLabel& label, const Int& w) {
            if (idx == lists.size()) {
                acc[label] += w;
                return;
            }
            for (const auto& wc : lists[idx])
                rec(idx + 1, merge_labels(label, wc.label), w * wc.weight);
        };
    rec(0, ConjClassLabel{}, Int(1));

    const RankData& rd = rank_data(n);
    const Int order_h = term.subgroup_order();
    ClassFunction f(n);
    for (const auto& [label, sum] : acc) {
        if (sum == 0) continue;
        Int num = Int(centralizer_order(label)) * sum;
        Rat value{num, order_h};
        if (!value.is_integer())
            throw std::logic_error("induced character value is not an integer");
        f[rd.index_of(label)] = value;
    }
    return f;
}

ClassFunction realize_element(const InducedTerm& term, int n, const EtaCandidate& eta) {
    std::map<ConjClassLabel, long long> bins;
    product_elements(term.factors, n, eta,
                     [&](const SignedPerm& g, int v) { bins[class_of(g)] += v; });
    const RankData& rd = rank_data(n);
    const Int order_h = term.subgroup_order();
    ClassFunction f(n);
    for (const auto& [label, sum] : bins) {
        if (sum == 0) continue;
        Rat value{Int(centralizer_order(label)) * sum, order_h};
        if (!value.is_integer())
            throw std::logic_error("induced character value is not an integer");
        f[rd.index_of(label)] = value;
    }
    return f;
}

} // namespace

ClassFunction realize_term(const InducedTerm& term, int n, Backend backend) {
    ClassFunction f = backend == Backend::Fusion ? realize_fusion(term, n, active_eta())
                                                 : realize_element(term, n, active_eta());
    if (term.coefficient != 1) f.scale(Rat(term.coefficient));
    return f;
}

ClassFunction realize(const InducedSum& sum, Backend backend) {
    ClassFunction f(sum.rank);
    for (const auto& term : sum.terms) f += realize_term(term, sum.rank, backend);
    return f;
}

long long multiplicity_in_term(const BiPartition& bp, const InducedTerm& term, int n) {
    const RankData& rd = rank_data(n);
    long long total = 0;
    product_elements(term.factors, n, active_eta(), [&](const SignedPerm& g, int v) {
        total += rd.irr_value(bp, class_of(g)) * v;
    });
    long long order = term.subgroup_order();
    if (total % order != 0)
        throw std::logic_error("Frobenius multiplicity is not an integer");
    return term.coefficient * (total / order);
}

long long multiplicity_in_sum(const BiPartition& bp, const InducedSum& sum) {
    ClassFunction chi = ClassFunction::irreducible(sum.rank, bp);
    Rat m = chi.inner(realize(sum, Backend::Fusion));
    return m.as_int64();
}

Rat restricted_inner(const ClassFunction& f, std::span<const SubgroupFactor> factors) {
    int n = f.rank();
    const RankData& rd = rank_data(n);
    InducedTerm term{{factors.begin(), factors.end()}, 1};
    Rat sum(0);
    product_elements(factors, n, active_eta(), [&](const SignedPerm& g, int v) {
        sum += f[rd.index_of(class_of(g))] * Rat(v);
    });
    return sum / Rat(term.subgroup_order());
}

// ---------------------------------------------------------------------------
// calibration

namespace {

bool passes_induction_facts(const EtaCandidate& cand, int max_t, std::string* why) {
    // Ind_{H_1}^{W_2} eta must be exactly the two-dimensional irreducible.
    const RankData& rd2 = rank_data(2);
    BiPartition two_dim{Partition({1}), Partition({1})};
    InducedTerm h1{{factor_H(1)}, 1};
    ClassFunction ind1 = realize_fusion(h1, 2, cand);
    for (const BiPartition& bp : rd2.irreps) {
        Rat m = ClassFunction::irreducible(2, bp).inner(ind1);
        long long expect = bp == two_dim ? 1 : 0;
        if (m != Rat(expect)) {
            if (why) *why = "Ind_{H_1} eta is not the 2-dimensional irreducible";
            return false;
        }
    }
    // every equal-pair bipartition occurs exactly once in Ind_{H_t} eta
    for (int t = 1; t <= max_t; ++t) {
        InducedTerm ht{{factor_H(t)}, 1};
        ClassFunction ind = realize_fusion(ht, 2 * t, cand);
        for (const Partition& lam : partitions_of(t)) {
            Rat m = ClassFunction::irreducible(2 * t, {lam, lam}).inner(ind);
            if (m != Rat(1)) {
                if (why) *why = "equal-pair multiplicity differs from one at t=" + std::to_string(t);
                return false;
            }
        }
    }
    return true;
}

bool lands_in_even_subgroup(const EtaCandidate& cand, std::string* why) {
    for (int t = 1; t <= 2; ++t)
        for (const auto& [g, v] : h_elements(t, cand))
            if (g.sign_product() != 1) {
                if (why) *why = "H_t does not land in the index-2 subgroup";
                return false;
            }
    return true;
}

// The genuine quaternionic module at rank 2 must hit exactly one of the two
// split constituents of the equal-pair character, with multiplicity 2.
bool separates_split_pair(const EtaCandidate& cand, std::string* why) {
    Partition lam({1});
    std::vector<InducedTerm> terms;
    terms.push_back({{factor_H(1)}, 1});
    terms.push_back({{factor_S(2, FactorChar::Sgn)}, 1});
    Rat mp(0), mm(0);
    for (const auto& term : terms) {
        Rat tp(0), tm(0);
        long long order = term.subgroup_order();
        product_elements(term.factors, 2, cand, [&](const SignedPerm& g, int v) {
            if (g.sign_product() != 1)
                throw std::logic_error("genuine module subgroup leaves the index-2 subgroup");
            auto [a, b] = split_char_values(lam, g);
            tp += a * Rat(v);
            tm += b * Rat(v);
        });
        mp += tp / Rat(order);
        mm += tm / Rat(order);
    }
    bool ok = (mp == Rat(2) && mm == Rat(0)) || (mp == Rat(0) && mm == Rat(2));
    if (!ok && why)
        *why = "split multiplicities are {" + mp.str() + "," + mm.str() + "}, not {2,0}";
    return ok;
}

} // namespace

Calibration run_calibration(int max_t) {
    std::vector<EtaCandidate> winners;
    std::ostringstream log;
    for (HEmbedding emb : {HEmbedding::PairSwap, HEmbedding::SingleFlip}) {
        for (HWChar w : {HWChar::One, HWChar::SgnBar, HWChar::Delta, HWChar::Sgn}) {
            for (bool pm : {false, true}) {
                EtaCandidate cand{emb, w, pm};
                std::string why;
                bool ok = false;
                try {
                    ok = passes_induction_facts(cand, max_t, &why) &&
                         lands_in_even_subgroup(cand, &why) && separates_split_pair(cand, &why);
                } catch (const std::exception& e) {
                    why = e.what();
                }
                log << to_string(cand) << ": " << (ok ? "pass" : "fail (" + why + ")") << "\n";
                if (ok) winners.push_back(cand);
            }
        }
    }
    if (winners.size() != 1)
        throw std::runtime_error("calibration did not select a unique eta candidate (" +
                                 std::to_string(winners.size()) + " winners)\n" + log.str());
    return Calibration{winners.front(), max_t};
}

namespace {

std::optional<Calibration> g_calibration;
std::mutex g_calibration_mutex;

const EtaCandidate& active_eta() { return calibration().eta; }

} // namespace

const Calibration& calibration() {
    std::lock_guard<std::mutex> lk(g_calibration_mutex);
    if (!g_calibration) {
        if (const char* path = std::getenv("SPINCOUNT_CALIBRATION")) {
            std::ifstream in(path);
            if (in) {
                std::stringstream ss;
                ss << in.rdbuf();
                g_calibration = calibration_from_json(ss.str());
                return *g_calibration;
            }
        }
        g_calibration = run_calibration();
    }
    return *g_calibration;
}

std::string calibration_to_json(const Calibration& c) {
    nlohmann::json j;
    j["version"] = 1;
    j["embedding"] = c.eta.embedding == HEmbedding::PairSwap ? "pair-swap" : "single-flip";
    j["eta_w_part"] = [&] {
        switch (c.eta.w_part) {
        case HWChar::One: return "one";
        case HWChar::SgnBar: return "sgnbar";
        case HWChar::Delta: return "delta";
        case HWChar::Sgn: return "sgn";
        }
        return "one";
    }();
    j["eta_pm_product"] = c.eta.pm_product;
    j["checked_t"] = c.checked_t;
    return j.dump(2);
}

Calibration calibration_from_json(const std::string& text) {
    nlohmann::json j = parse_json(text);
    if (!j.contains("version") || j["version"].get<int>() != 1)
        throw std::runtime_error("calibration file: unsupported version");
    Calibration c;
    std::string emb = j.at("embedding").get<std::string>();
    if (emb == "pair-swap")
        c.eta.embedding = HEmbedding::PairSwap;
    else if (emb == "single-flip")
        c.eta.embedding = HEmbedding::SingleFlip;
    else
        throw std::runtime_error("calibration file: unknown embedding " + emb);
    std::string w = j.at("eta_w_part").get<std::string>();
    if (w == "one")
        c.eta.w_part = HWChar::One;
    else if (w == "sgnbar")
        c.eta.w_part = HWChar::SgnBar;
    else if (w == "delta")
        c.eta.w_part = HWChar::Delta;
    else if (w == "sgn")
        c.eta.w_part = HWChar::Sgn;
    else
        throw std::runtime_error("calibration file: unknown eta component " + w);
    c.eta.pm_product = j.at("eta_pm_product").get<bool>();
    c.checked_t = j.value("checked_t", 3);
    return c;
}

void save_calibration(const Calibration& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write calibration file " + path.string());
    out << calibration_to_json(c) << "\n";
}

} // namespace spincount
