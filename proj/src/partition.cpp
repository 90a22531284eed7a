#include "spincount/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spincount {

Partition::Partition(std::vector<int> parts) {
    for (int x : parts)
        if (x < 0) throw std::invalid_argument("Partition: negative part");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_columns(std::vector<int> cols) {
    return Partition(std::move(cols)).transpose();
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(parts_[0]);
    for (int j = 0; j < parts_[0]; ++j)
        cols[j] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                 [&](int r) { return r > j; }));
    return Partition(std::move(cols));
}

std::map<int, int> Partition::row_multiplicities() const {
    std::map<int, int> m;
    for (int x : parts_) ++m[x];
    return m;
}

bool Partition::is_very_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x % 2 == 0; });
}

bool Partition::all_rows_even_multiplicity() const {
    for (auto [v, m] : row_multiplicities())
        if (m % 2 != 0) return false;
    return true;
}

bool satisfies_parity_constraint(const Partition& p, NilpotentType t) {
    for (auto [v, m] : p.row_multiplicities()) {
        bool constrained = (t == NilpotentType::C) ? (v % 2 == 1) : (v % 2 == 0);
        if (constrained && m % 2 != 0) return false;
    }
    return true;
}

bool size_parity_matches(int size, NilpotentType t) {
    return (t == NilpotentType::B) ? (size % 2 == 1) : (size % 2 == 0);
}

bool is_valid_nilpotent(const Partition& p, NilpotentType t) {
    return size_parity_matches(p.size(), t) && satisfies_parity_constraint(p, t);
}

Partition collapse(const Partition& p, NilpotentType t) {
    if (!size_parity_matches(p.size(), t))
        throw std::invalid_argument("collapse: size parity does not match type");
    std::vector<int> parts = p.parts();
    auto bad_parity = [&](int v) {
        return (t == NilpotentType::C) ? (v % 2 == 1) : (v % 2 == 0);
    };
    for (;;) {
        std::map<int, int> mult;
        for (int x : parts) ++mult[x];
        int viol = 0;
        for (auto [v, m] : mult)
            if (v > 0 && bad_parity(v) && m % 2 != 0) viol = std::max(viol, v);
        if (viol == 0) break;
        // drop a box from the last row of the largest violating part
        size_t j = 0;
        for (size_t i = 0; i < parts.size(); ++i)
            if (parts[i] == viol) j = i;
        parts[j] -= 1;
        // reattach it at the earliest later slot that keeps weak decrease
        bool placed = false;
        for (size_t j2 = j + 1; j2 < parts.size(); ++j2) {
            if (parts[j2] < parts[j2 - 1]) {
                parts[j2] += 1;
                placed = true;
                break;
            }
        }
        if (!placed) parts.push_back(1);
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }
    return Partition(parts);
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) return false;
    int sp = 0, sq = 0;
    int len = std::max(p.length(), q.length());
    for (int i = 1; i <= len; ++i) {
        sp += p.row(i);
        sq += q.row(i);
        if (sp < sq) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int first = std::min(rest, maxp); first >= 1; --first) {
            cur.push_back(first);
            rec(rest - first, first);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n == 0 ? 1 : n);
    return out;
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    for (int i = 0; i < p.length(); ++i) {
        if (i) os << ',';
        os << p.parts()[i];
    }
    return os.str();
}

Partition parse_partition(std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    std::string_view s = strip(text);
    bool columns = false;
    if (s.rfind("col[", 0) == 0 && !s.empty() && s.back() == ']') {
        columns = true;
        s = s.substr(4, s.size() - 5);
        s = strip(s);
    }
    std::vector<int> parts;
    if (!s.empty() && s != "0") {
        std::string buf(s);
        std::istringstream is(buf);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse partition entry '" + tok + "'");
            }
            while (pos < tok.size() && tok[pos] == ' ') ++pos;
            if (pos != tok.size() || v < 0)
                throw std::invalid_argument("cannot parse partition entry '" + tok + "'");
            parts.push_back(v);
        }
        if (parts.empty())
            throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
    }
    return columns ? Partition::from_columns(parts) : Partition(parts);
}

std::string to_string(const BiPartition& bp) {
    return "(" + to_string(bp.left) + ") x (" + to_string(bp.right) + ")";
}

std::string to_string(Label l) { return l == Label::I ? "I" : "II"; }

LabeledPair::LabeledPair(Partition a, Partition b) {
    if (a == b)
        throw std::invalid_argument("LabeledPair: equal pair requires a label");
    if (b < a) std::swap(a, b);
    first_ = std::move(a);
    second_ = std::move(b);
}

LabeledPair::LabeledPair(Partition shape, Label label)
    : first_(shape), second_(std::move(shape)), label_(label) {}

std::string to_string(const LabeledPair& lp) {
    std::string s = "{" + to_string(lp.first()) + " ; " + to_string(lp.second()) + "}";
    if (lp.label()) s += "_" + to_string(*lp.label());
    return s;
}

} // namespace spincount
