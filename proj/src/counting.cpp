#include "spincount/counting.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <sstream>

namespace spincount {

long long count_tilde(const GroupSpec& g, const DualOrbit& o) {
    validate_orbit(g, o);
    if (g.family == GroupFamily::ComplexSpin)
        throw InputError("count_tilde covers the real and quaternionic families");
    if (!o.shape.all_rows_even_multiplicity()) return 0;
    if (g.family == GroupFamily::RealSpin) {
        if (std::abs(g.p - g.q) == 1) return 1;
        if (g.p == g.q) return o.shape.is_very_even() ? 1 : 2;
        return 0;
    }
    // quaternionic
    if (!o.shape.is_very_even()) return 0;
    return count_real_forms(o, g);
}

bool sgn_twist_fixed(const GroupSpec& g, const DualOrbit& o) {
    if (count_tilde(g, o) == 0)
        throw InputError("sign-twist fixedness is undefined for an empty set");
    return !(g.family == GroupFamily::RealSpin && g.p == g.q && g.p % 2 == 1);
}

long long count_spin(const GroupSpec& g, const DualOrbit& o) {
    long long ct = count_tilde(g, o);
    if (ct == 0) return 0;
    if (g.tilde_equals_group()) return ct;
    bool fixed = sgn_twist_fixed(g, o);
    if (!fixed) {
        if (ct % 2 != 0) throw std::logic_error("odd count with a free sign twist");
        return ct / 2;
    }
    return 2 * ct;
}

long long count_complex(const GroupSpec& g, const DualOrbit& left, const DualOrbit& right) {
    if (g.family != GroupFamily::ComplexSpin)
        throw InputError("count_complex expects a complex spin group");
    GroupSpec factor = g; // dual factors carry the same partition data
    factor.family = GroupFamily::RealSpin;
    factor.p = g.m;
    factor.q = 0;
    validate_orbit(factor, left);
    validate_orbit(factor, right);
    return 0;
}

long long count_via_cells(const GroupSpec& g, const DualOrbit& o, int cutoff) {
    validate_orbit(g, o);
    if (g.family == GroupFamily::ComplexSpin)
        throw InputError("the cell route covers the real and quaternionic families");
    RowSplit split = row_split(o, g);
    if (split.nb > cutoff || split.ng > cutoff)
        throw InputError("cell verification at rank " + std::to_string(g.rank()) +
                         " exceeds the engine cutoff " + std::to_string(cutoff));
    Cell cell = build_cell(split, o.label);

    if (g.family == GroupFamily::RealSpin) {
        const int p = g.p, q = g.q;
        if (p < split.ng || q < split.ng) return 0; // support condition
        InducedSum genuine = genuine_block_module(p - split.ng, q - split.ng);
        long long anchor_mult;
        if (!split.even_case) {
            anchor_mult = engine_multiplicity(cell.anchor, genuine);
        } else {
            anchor_mult = engine_multiplicity({cell.anchor_shape, cell.anchor_shape}, genuine);
        }
        if (anchor_mult == 0) return 0;
        long long member_total = 0;
        if (split.ng == 0) {
            member_total = 1;
        } else if (!split.even_case) {
            InducedSum base = classical_block_module(BlockStar::B, split.ng);
            for (const CellMember& m : cell.members)
                member_total += engine_multiplicity(m.tau, base);
        } else {
            InducedSum base = classical_block_module(BlockStar::D, split.ng);
            for (const CellMember& m : cell.members) {
                LabeledPair pair(m.tau.left, m.tau.right);
                member_total += engine_multiplicity_wprime(pair, base);
            }
        }
        return anchor_mult * member_total;
    }

    // quaternionic
    if (split.ng == 0) {
        if (!cell.anchor_label)
            throw std::logic_error("quaternionic anchor without an orbit label");
        return labeled_multiplicity_in_dstar(cell.anchor_shape, *cell.anchor_label);
    }
    if (split.ng % 2 != 0) return 0; // the odd-rank block module vanishes
    long long anchor_mult = 1;
    if (split.nb > 0) {
        // both labels together, i.e. the full-group multiplicity of the
        // doubled genuine module
        anchor_mult = engine_multiplicity({cell.anchor_shape, cell.anchor_shape},
                                          genuine_block_module_dstar(split.nb));
    }
    if (anchor_mult == 0) return 0;
    InducedSum base_w{split.ng, {{{factor_H(split.ng / 2)}, 1}}};
    long long member_total = 0;
    for (const CellMember& m : cell.members)
        member_total += engine_multiplicity({m.tau.left, m.tau.right}, base_w);
    return anchor_mult * member_total;
}

namespace {

Descriptor make_descriptor(const GroupSpec& g, const DualOrbit& o, long long ct, long long cg) {
    Descriptor d;
    if (g.family != GroupFamily::ComplexSpin && o.shape.all_rows_even_multiplicity())
        d.levi = levi_descriptor(o, g);
    if (ct == 0) {
        d.n_characters = 0;
        d.structure = "(empty)";
        return d;
    }
    if (g.family == GroupFamily::QuaternionicSpin) {
        d.n_characters = 1;
        std::ostringstream os;
        os << "I(chi) decomposes as the direct sum of " << ct
           << " irreducible summands pi_o, one per real form o";
        d.structure = os.str();
        return d;
    }
    // real spin
    bool very_even = o.shape.is_very_even();
    if (std::abs(g.p - g.q) == 1) {
        d.n_characters = 1;
        d.structure = "I(chi) irreducible for the covering group; restriction splits as I1 + I2";
    } else if (g.p == g.q && very_even) {
        d.n_characters = 1;
        d.structure = g.p % 2 == 0
                          ? "I(chi) irreducible for the covering group; restriction splits as I1 + I2"
                          : "I(chi) irreducible; restriction to the spin group stays irreducible";
    } else { // p == q, not very even
        d.n_characters = 2;
        d.structure =
            g.p % 2 == 0
                ? "two characters chi1, chi2; each I(chi_i) irreducible and splitting as I1 + I2"
                : "two characters chi1, chi2; I(chi_i) irreducible with irreducible restriction";
    }
    (void)cg;
    return d;
}

void check_clifford(const GroupSpec& g, long long ct, long long cg, std::optional<bool> fixed) {
    if (ct == 0) {
        if (cg != 0) throw std::logic_error("empty covering count with nonempty spin count");
        return;
    }
    if (g.tilde_equals_group()) {
        if (cg != ct) throw std::logic_error("covering count differs for identical groups");
    } else if (fixed.value()) {
        if (cg != 2 * ct) throw std::logic_error("twist-fixed count fails to double");
    } else {
        if (2 * cg != ct) throw std::logic_error("twist-free count fails to halve");
    }
}

} // namespace

CountReport classify(const GroupSpec& g, const DualOrbit& o, VerifyMode mode) {
    auto t0 = std::chrono::steady_clock::now();
    validate_orbit(g, o);
    if (g.family == GroupFamily::ComplexSpin)
        throw InputError("classify for complex groups takes a pair of orbits");
    CountReport r;
    r.group = g;
    r.orbits = {o};
    r.count_tilde = count_tilde(g, o);
    r.count_g = count_spin(g, o);
    if (r.count_tilde > 0) r.sgn_twist_fixed = sgn_twist_fixed(g, o);
    check_clifford(g, r.count_tilde, r.count_g, r.sgn_twist_fixed);
    r.descriptor = make_descriptor(g, o, r.count_tilde, r.count_g);

    bool run_cells = false;
    if (mode == VerifyMode::Force) {
        if (g.rank() > kHardEngineCutoff)
            throw InputError("verification requested above the hard engine cutoff of rank " +
                             std::to_string(kHardEngineCutoff));
        run_cells = true;
    } else if (mode == VerifyMode::Default) {
        run_cells = g.rank() <= kDefaultEngineCutoff;
    }
    if (run_cells) {
        auto c0 = std::chrono::steady_clock::now();
        long long cc = count_via_cells(g, o, kHardEngineCutoff);
        auto c1 = std::chrono::steady_clock::now();
        r.cells_ms = std::chrono::duration<double, std::milli>(c1 - c0).count();
        r.cell_count = cc;
        if (cc != r.count_tilde)
            throw VerificationError("cell count " + std::to_string(cc) +
                                    " disagrees with the closed-form count " +
                                    std::to_string(r.count_tilde) + " for " + g.str() + " / " +
                                    o.str());
        r.verified = true;
    }
    auto t1 = std::chrono::steady_clock::now();
    r.total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

CountReport classify_complex(const GroupSpec& g, const DualOrbit& left, const DualOrbit& right) {
    auto t0 = std::chrono::steady_clock::now();
    CountReport r;
    r.group = g;
    r.orbits = {left, right};
    r.count_tilde = count_complex(g, left, right);
    r.count_g = 0;
    r.descriptor.structure = "(empty)";
    auto t1 = std::chrono::steady_clock::now();
    r.total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

nlohmann::json partition_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

nlohmann::json orbit_json(const DualOrbit& o) {
    nlohmann::json j;
    j["shape"] = partition_json(o.shape);
    if (o.label)
        j["label"] = to_string(*o.label);
    else
        j["label"] = nullptr;
    return j;
}

DualOrbit orbit_from_json(const nlohmann::json& j) {
    DualOrbit o;
    o.shape = Partition(j.at("shape").get<std::vector<int>>());
    if (!j.at("label").is_null()) {
        std::string l = j["label"].get<std::string>();
        o.label = l == "I" ? Label::I : Label::II;
    }
    return o;
}

} // namespace

std::string report_to_json(const CountReport& r) {
    nlohmann::json j;
    j["group"] = r.group.str();
    if (r.orbits.size() == 1) {
        j["orbit"] = orbit_json(r.orbits[0]);
    } else {
        nlohmann::json pair = nlohmann::json::array();
        for (const auto& o : r.orbits) pair.push_back(orbit_json(o));
        j["orbit"] = pair;
    }
    j["count_tilde"] = r.count_tilde;
    j["count_g"] = r.count_g;
    j["sgn_twist_fixed"] = r.sgn_twist_fixed ? nlohmann::json(*r.sgn_twist_fixed)
                                             : nlohmann::json(nullptr);
    if (r.cell_count) j["cell_count"] = *r.cell_count;
    j["verified"] = r.verified;
    j["descriptor"] = {{"levi", r.descriptor.levi},
                       {"n_characters", r.descriptor.n_characters},
                       {"structure", r.descriptor.structure}};
    j["timings"] = {{"total_ms", r.total_ms}, {"cells_ms", r.cells_ms}};
    return j.dump(2);
}

CountReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CountReport r;
    r.group = parse_group(j.at("group").get<std::string>());
    if (j.at("orbit").is_array()) {
        for (const auto& oj : j["orbit"]) r.orbits.push_back(orbit_from_json(oj));
    } else {
        r.orbits.push_back(orbit_from_json(j["orbit"]));
    }
    r.count_tilde = j.at("count_tilde").get<long long>();
    r.count_g = j.at("count_g").get<long long>();
    if (!j.at("sgn_twist_fixed").is_null()) r.sgn_twist_fixed = j["sgn_twist_fixed"].get<bool>();
    if (j.contains("cell_count")) r.cell_count = j["cell_count"].get<long long>();
    r.verified = j.at("verified").get<bool>();
    r.descriptor.levi = j.at("descriptor").at("levi").get<std::string>();
    r.descriptor.n_characters = j["descriptor"].at("n_characters").get<int>();
    r.descriptor.structure = j["descriptor"].at("structure").get<std::string>();
    r.total_ms = j.at("timings").at("total_ms").get<double>();
    r.cells_ms = j["timings"].at("cells_ms").get<double>();
    return r;
}

std::string report_to_text(const CountReport& r) {
    std::ostringstream os;
    os << r.group.str() << "  orbit ";
    for (size_t i = 0; i < r.orbits.size(); ++i) {
        if (i) os << " ; ";
        os << r.orbits[i].str();
    }
    os << "\n";
    os << "  genuine special unipotent count (covering group): " << r.count_tilde << "\n";
    os << "  genuine special unipotent count (spin group):     " << r.count_g << "\n";
    if (r.sgn_twist_fixed)
        os << "  sign twist fixes each member: " << (*r.sgn_twist_fixed ? "yes" : "no") << "\n";
    if (r.cell_count)
        os << "  cell-theoretic count: " << *r.cell_count
           << (r.verified ? "  [verified]" : "") << "\n";
    if (!r.descriptor.levi.empty()) os << "  Levi shape: " << r.descriptor.levi << "\n";
    os << "  genuine finite-order characters (up to conjugacy): " << r.descriptor.n_characters
       << "\n";
    os << "  structure: " << r.descriptor.structure << "\n";
    return os.str();
}

} // namespace spincount
