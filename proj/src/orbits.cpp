#include "spincount/orbits.hpp"

#include <algorithm>
#include <sstream>

namespace spincount {

GroupSpec GroupSpec::real_spin(int p, int q) {
    if (p < 0 || q < 0 || p + q < 3)
        throw InputError("Spin(p,q) requires p,q >= 0 and p+q >= 3");
    GroupSpec g;
    g.family = GroupFamily::RealSpin;
    g.p = p;
    g.q = q;
    g.m = p + q;
    return g;
}

GroupSpec GroupSpec::quaternionic(int two_n) {
    if (two_n < 4 || two_n % 2 != 0)
        throw InputError("Spin*(2n) requires an even argument >= 4");
    GroupSpec g;
    g.family = GroupFamily::QuaternionicSpin;
    g.m = two_n;
    return g;
}

GroupSpec GroupSpec::complex_spin(int m) {
    if (m < 3)
        throw InputError("SpinC(m) requires m >= 3");
    GroupSpec g;
    g.family = GroupFamily::ComplexSpin;
    g.m = m;
    return g;
}

bool GroupSpec::tilde_equals_group() const {
    if (family == GroupFamily::QuaternionicSpin) return true;
    if (family == GroupFamily::RealSpin) return p == 0 || q == 0;
    return false;
}

std::string GroupSpec::str() const {
    std::ostringstream os;
    switch (family) {
    case GroupFamily::RealSpin: os << "Spin(" << p << "," << q << ")"; break;
    case GroupFamily::QuaternionicSpin: os << "Spin*(" << m << ")"; break;
    case GroupFamily::ComplexSpin: os << "SpinC(" << m << ")"; break;
    }
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(strip(s), &pos);
        if (pos != strip(s).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw InputError("cannot parse integer '" + s + "'");
    }
}

} // namespace

GroupSpec parse_group(const std::string& text) {
    std::string s = strip(text);
    auto inner = [&](size_t prefix_len) {
        if (s.back() != ')') throw InputError("group syntax: missing ')': " + text);
        return s.substr(prefix_len, s.size() - prefix_len - 1);
    };
    if (s.rfind("Spin*(", 0) == 0) return GroupSpec::quaternionic(parse_int(inner(6)));
    if (s.rfind("SpinC(", 0) == 0) return GroupSpec::complex_spin(parse_int(inner(6)));
    if (s.rfind("Spin(", 0) == 0) {
        std::string body = inner(5);
        size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw InputError("group syntax: Spin(p,q) expects two arguments: " + text);
        return GroupSpec::real_spin(parse_int(body.substr(0, comma)),
                                    parse_int(body.substr(comma + 1)));
    }
    throw InputError("unknown group '" + text + "' (expected Spin(p,q), Spin*(2n), SpinC(m))");
}

std::string DualOrbit::str() const {
    std::string s = to_string(shape);
    if (label) s += ":" + to_string(*label);
    return s;
}

DualOrbit parse_orbit(const std::string& text) {
    std::string s = strip(text);
    DualOrbit o;
    size_t colon = s.rfind(':');
    if (colon != std::string::npos) {
        std::string lab = strip(s.substr(colon + 1));
        if (lab == "I")
            o.label = Label::I;
        else if (lab == "II")
            o.label = Label::II;
        else
            throw InputError("orbit label must be I or II, got '" + lab + "'");
        s = s.substr(0, colon);
    }
    try {
        o.shape = parse_partition(s);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    return o;
}

DualGroupInfo dual_group(const GroupSpec& g) {
    if (g.m % 2 == 1) return {NilpotentType::C, g.m - 1};
    return {NilpotentType::D, g.m};
}

void validate_orbit(const GroupSpec& g, const DualOrbit& o) {
    DualGroupInfo info = dual_group(g);
    if (o.shape.size() != info.partition_size)
        throw InputError("orbit " + o.str() + " has size " + std::to_string(o.shape.size()) +
                         ", expected " + std::to_string(info.partition_size) + " for " + g.str());
    if (!satisfies_parity_constraint(o.shape, info.type))
        throw InputError("orbit " + o.str() + " is not a valid nilpotent orbit for the dual of " +
                         g.str());
    bool needs_label = (g.m % 2 == 0) && o.shape.is_very_even();
    if (needs_label && !o.label)
        throw InputError("very even orbit " + o.str() + " requires a label :I or :II");
    if (!needs_label && o.label)
        throw InputError("orbit " + o.str() + " does not admit a label");
}

std::vector<DualOrbit> enumerate_orbits(const GroupSpec& g) {
    DualGroupInfo info = dual_group(g);
    std::vector<Partition> shapes = partitions_of(info.partition_size);
    std::sort(shapes.begin(), shapes.end());
    std::vector<DualOrbit> out;
    for (const Partition& s : shapes) {
        if (!satisfies_parity_constraint(s, info.type)) continue;
        if (g.m % 2 == 0 && s.is_very_even()) {
            out.push_back({s, Label::I});
            out.push_back({s, Label::II});
        } else {
            out.push_back({s, std::nullopt});
        }
    }
    return out;
}

Partition bv_dual(const DualOrbit& o, const GroupSpec& g) {
    validate_orbit(g, o);
    if (g.m % 2 == 1) {
        std::vector<int> parts = o.shape.parts();
        parts.push_back(1);
        return collapse(Partition(parts).transpose(), NilpotentType::B);
    }
    return collapse(o.shape.transpose(), NilpotentType::D);
}

bool relevant(const DualOrbit& o, const GroupSpec& g) {
    if (g.family != GroupFamily::QuaternionicSpin)
        throw InputError("relevance is defined for quaternionic groups only");
    validate_orbit(g, o);
    if (!o.shape.is_very_even())
        throw InputError("relevance is defined for very even orbits only");
    return o.label == Label::I;
}

long long count_real_forms(const DualOrbit& o, const GroupSpec& g) {
    if (g.family != GroupFamily::QuaternionicSpin)
        throw InputError("count_real_forms is defined for quaternionic groups only");
    validate_orbit(g, o);
    if (!o.shape.is_very_even())
        throw InputError("count_real_forms requires a very even orbit");
    if (!relevant(o, g)) return 0;
    RowSplit sp = row_split(o, g);
    long long prod = 1;
    for (int i = 0; i < sp.l; ++i) {
        int next = (i + 1 < sp.l) ? sp.r_prime[i + 1] : 0;
        prod *= sp.r_prime[i] - next + 1;
    }
    return prod;
}

bool RowSplit::rows_pair_up() const {
    for (size_t i = 0; 2 * i + 1 < r_double_prime.size(); ++i)
        if (r_double_prime[2 * i] != r_double_prime[2 * i + 1]) return false;
    return true;
}

RowSplit row_split(const DualOrbit& o, const GroupSpec& g) {
    validate_orbit(g, o);
    RowSplit sp;
    sp.even_case = g.m % 2 == 0;
    const Partition& shape = o.shape;
    int N = 1;
    if (!sp.even_case) {
        while (shape.row(2 * N) != 0) ++N;
    } else {
        while (shape.row(2 * N + 1) != 0) ++N;
    }
    std::vector<int> rows;
    for (int i = 1; i <= 2 * N; ++i) rows.push_back(shape.row(i));

    std::vector<int> paired, single;
    for (int r : rows) {
        bool is_paired = sp.even_case ? (r % 2 == 0) : (r % 2 == 1);
        (is_paired ? paired : single).push_back(r);
    }
    std::sort(paired.begin(), paired.end(), std::greater<int>());
    std::sort(single.begin(), single.end(), std::greater<int>());
    if (paired.size() % 2 != 0 || single.size() % 2 != 0)
        throw std::logic_error("row_split: unpaired row data");
    for (size_t i = 0; i + 1 < paired.size(); i += 2) {
        if (paired[i] != paired[i + 1])
            throw std::logic_error("row_split: rows of the constrained parity fail to pair");
        sp.r_prime.push_back(sp.even_case ? paired[i] / 2 : (paired[i] - 1) / 2);
    }
    for (int r : single)
        sp.r_double_prime.push_back(sp.even_case ? (r - 1) / 2 : r / 2);
    sp.l = static_cast<int>(sp.r_prime.size());
    sp.k = static_cast<int>(sp.r_double_prime.size()) / 2;
    int sum_rp = 0, sum_rpp = 0;
    for (int x : sp.r_prime) sum_rp += x;
    for (int x : sp.r_double_prime) sum_rpp += x;
    if (!sp.even_case) {
        sp.nb = sp.l + 2 * sum_rp;
        sp.ng = sum_rpp;
    } else {
        sp.nb = 2 * sum_rp;
        sp.ng = sp.k + sum_rpp;
    }
    if (sp.nb + sp.ng != g.rank())
        throw std::logic_error("row_split: block ranks do not add up to the rank");
    return sp;
}

int InfinitesimalCharacter::half_integer_count() const {
    return static_cast<int>(
        std::count_if(twice_entries.begin(), twice_entries.end(), [](int x) { return x % 2; }));
}

std::string InfinitesimalCharacter::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < twice_entries.size(); ++i) {
        if (i) os << ",";
        if (twice_entries[i] % 2 == 0)
            os << twice_entries[i] / 2;
        else
            os << twice_entries[i] << "/2";
    }
    os << ")";
    return os.str();
}

InfinitesimalCharacter infinitesimal_character(const DualOrbit& o, const GroupSpec& g) {
    validate_orbit(g, o);
    std::vector<int> doubled;
    for (int r : o.shape.parts())
        for (int v = r - 1; v >= 0; v -= 2) doubled.push_back(v);
    std::sort(doubled.begin(), doubled.end(), std::greater<int>());
    int n = g.rank();
    if (static_cast<int>(doubled.size()) < n)
        throw std::logic_error("infinitesimal_character: too few non-negative entries");
    doubled.resize(n);
    return {doubled};
}

std::string levi_descriptor(const DualOrbit& o, const GroupSpec& g) {
    if (g.family == GroupFamily::ComplexSpin)
        throw InputError("levi_descriptor covers the real and quaternionic families");
    validate_orbit(g, o);
    if (!o.shape.all_rows_even_multiplicity())
        throw InputError("levi_descriptor requires all row multiplicities to be even");
    std::vector<int> reps;
    const auto& parts = o.shape.parts();
    for (size_t i = 0; i + 1 < parts.size(); i += 2) reps.push_back(parts[i]);
    std::ostringstream os;
    for (size_t i = 0; i < reps.size(); ++i) {
        if (i) os << " x ";
        if (g.family == GroupFamily::RealSpin)
            os << "GL_" << reps[i] << "(R)";
        else
            os << "GL_" << reps[i] / 2 << "(H)";
    }
    return os.str();
}

} // namespace spincount
