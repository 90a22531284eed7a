#include "spincount/counting.hpp"
#include "spincount/induce.hpp"
#include "spincount/wprime.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>

namespace {

using namespace spincount;

struct OrbitArg {
    std::vector<DualOrbit> factors; // one, or two for SpinC
};

OrbitArg parse_orbit_arg(const GroupSpec& g, const std::string& text) {
    OrbitArg arg;
    size_t semi = text.find(';');
    if (g.family == GroupFamily::ComplexSpin) {
        if (semi == std::string::npos)
            throw InputError("complex spin groups take an orbit pair 'a,b;c,d'");
        arg.factors.push_back(parse_orbit(text.substr(0, semi)));
        arg.factors.push_back(parse_orbit(text.substr(semi + 1)));
    } else {
        if (semi != std::string::npos)
            throw InputError("orbit pairs are only meaningful for complex spin groups");
        arg.factors.push_back(parse_orbit(text));
    }
    return arg;
}

VerifyMode mode_from_flag(bool verify_flag) {
    return verify_flag ? VerifyMode::Force : VerifyMode::Default;
}

CountReport classify_arg(const GroupSpec& g, const OrbitArg& arg, VerifyMode mode) {
    if (g.family == GroupFamily::ComplexSpin)
        return classify_complex(g, arg.factors[0], arg.factors[1]);
    return classify(g, arg.factors[0], mode);
}

nlohmann::json tau_json(const CellMember& m, bool even_case) {
    nlohmann::json j;
    if (even_case) {
        j["pair"] = {m.tau.left.parts(), m.tau.right.parts()};
    } else {
        j["left"] = m.tau.left.parts();
        j["right"] = m.tau.right.parts();
    }
    return j;
}

int run_count(const std::string& group_text, const std::string& orbit_text, bool verify,
              bool json) {
    GroupSpec g = parse_group(group_text);
    OrbitArg arg = parse_orbit_arg(g, orbit_text);
    CountReport r = classify_arg(g, arg, mode_from_flag(verify));
    if (json)
        std::cout << report_to_json(r) << "\n";
    else
        std::cout << report_to_text(r);
    return 0;
}

int run_enumerate(const std::string& group_text, const std::string& family, int max_n, bool verify,
                  bool json, int threads) {
    std::vector<GroupSpec> groups;
    if (!group_text.empty()) {
        groups.push_back(parse_group(group_text));
    } else if (!family.empty()) {
        if (max_n <= 0) throw InputError("--family sweeps need --max-n");
        if (family == "Spin") {
            for (int m = 3; m / 2 <= max_n; ++m)
                for (int p = 0; p <= m; ++p) groups.push_back(GroupSpec::real_spin(p, m - p));
        } else if (family == "Spin*") {
            for (int n = 2; n <= max_n; ++n) groups.push_back(GroupSpec::quaternionic(2 * n));
        } else {
            throw InputError("--family must be Spin or Spin*");
        }
    } else {
        throw InputError("enumerate needs --group or --family");
    }

    struct Job {
        GroupSpec g;
        DualOrbit o;
    };
    std::vector<Job> jobs;
    for (const GroupSpec& g : groups) {
        if (g.family == GroupFamily::ComplexSpin)
            throw InputError("enumerate covers the real and quaternionic families");
        for (const DualOrbit& o : enumerate_orbits(g)) jobs.push_back({g, o});
    }

    std::vector<CountReport> reports(jobs.size());
    std::vector<std::string> errors(jobs.size());
    unsigned nthreads = threads > 0 ? static_cast<unsigned>(threads) : 1u;
    nthreads = std::min<unsigned>(nthreads, std::max<size_t>(jobs.size(), 1));
    if (nthreads > 1) calibration(); // settle shared state before forking workers
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            try {
                reports[i] =
                    classify(jobs[i].g, jobs[i].o, verify ? VerifyMode::Force : VerifyMode::Default);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (size_t i = 0; i < jobs.size(); ++i)
        if (!errors[i].empty()) throw VerificationError(errors[i]);

    if (json) {
        std::cout << "[\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            std::cout << report_to_json(reports[i]);
            std::cout << (i + 1 < reports.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
    } else {
        std::cout << "group\torbit\tcount_tilde\tcount_g\ttwist_fixed\tcell_count\tverified\n";
        for (const CountReport& r : reports) {
            std::cout << r.group.str() << "\t" << r.orbits[0].str() << "\t" << r.count_tilde
                      << "\t" << r.count_g << "\t";
            std::cout << (r.sgn_twist_fixed ? (*r.sgn_twist_fixed ? "yes" : "no") : "-") << "\t";
            if (r.cell_count)
                std::cout << *r.cell_count;
            else
                std::cout << "-";
            std::cout << "\t" << (r.verified ? "yes" : "no") << "\n";
        }
    }
    return 0;
}

int run_cells(const std::string& group_text, const std::string& orbit_text, bool json) {
    GroupSpec g = parse_group(group_text);
    if (g.family == GroupFamily::ComplexSpin)
        throw InputError("cells covers the real and quaternionic families");
    DualOrbit o = parse_orbit(orbit_text);
    validate_orbit(g, o);
    RowSplit split = row_split(o, g);
    Cell cell = build_cell(split, o.label);
    InfinitesimalCharacter infl = infinitesimal_character(o, g);

    nlohmann::json j;
    j["group"] = g.str();
    j["orbit"] = {{"shape", o.shape.parts()},
                  {"label", o.label ? nlohmann::json(to_string(*o.label)) : nlohmann::json()}};
    j["case"] = split.even_case ? "even" : "odd";
    j["nb"] = split.nb;
    j["ng"] = split.ng;
    j["r_prime"] = split.r_prime;
    j["r_double_prime"] = split.r_double_prime;
    j["infinitesimal_character"] = infl.str();
    nlohmann::json pp = nlohmann::json::array();
    for (int i : cell.pp) pp.push_back({2 * i, 2 * i + 1});
    j["primitive_pairs"] = pp;
    if (split.even_case) {
        nlohmann::json tb;
        tb["pair"] = {cell.anchor_shape.parts(), cell.anchor_shape.parts()};
        tb["label"] =
            cell.anchor_label ? nlohmann::json(to_string(*cell.anchor_label)) : nlohmann::json();
        j["tau_b"] = tb;
    } else {
        j["tau_b"] = {{"left", cell.anchor.left.parts()}, {"right", cell.anchor.right.parts()}};
    }
    nlohmann::json members = nlohmann::json::array();
    for (const CellMember& m : cell.members) {
        nlohmann::json mj;
        nlohmann::json subset = nlohmann::json::array();
        for (int i : m.subset) subset.push_back({2 * i, 2 * i + 1});
        mj["subset"] = subset;
        mj["tau"] = tau_json(m, split.even_case);
        members.push_back(mj);
    }
    j["members"] = members;

    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << g.str() << "  orbit " << o.str() << "  ["
                  << (split.even_case ? "even" : "odd") << " case, nb=" << split.nb
                  << ", ng=" << split.ng << "]\n";
        std::cout << "  infinitesimal character: " << infl.str() << "\n";
        std::cout << "  primitive pairs:";
        if (cell.pp.empty()) std::cout << " none";
        for (int i : cell.pp) std::cout << " (" << 2 * i << "," << 2 * i + 1 << ")";
        std::cout << "\n";
        if (split.even_case) {
            std::cout << "  tau_b = {" << to_string(cell.anchor_shape) << " ; "
                      << to_string(cell.anchor_shape) << "}";
            if (cell.anchor_label) std::cout << "_" << to_string(*cell.anchor_label);
            std::cout << "\n";
        } else {
            std::cout << "  tau_b = " << to_string(cell.anchor) << "\n";
        }
        for (const CellMember& m : cell.members) {
            std::cout << "  tau{";
            bool first = true;
            for (int i : m.subset) {
                if (!first) std::cout << ",";
                std::cout << "(" << 2 * i << "," << 2 * i + 1 << ")";
                first = false;
            }
            std::cout << "} = ";
            if (split.even_case)
                std::cout << "{" << to_string(m.tau.left) << " ; " << to_string(m.tau.right)
                          << "}";
            else
                std::cout << to_string(m.tau);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_chartable(int n) {
    if (n < 0 || n > kHardEngineCutoff)
        throw InputError("chartable supports ranks 0.." + std::to_string(kHardEngineCutoff));
    const RankData& rd = rank_data(n);
    nlohmann::json j;
    j["n"] = n;
    j["order"] = rd.order;
    nlohmann::json classes = nlohmann::json::array();
    for (size_t c = 0; c < rd.classes.size(); ++c)
        classes.push_back({{"positive", rd.classes[c].positive.parts()},
                           {"negative", rd.classes[c].negative.parts()},
                           {"size", rd.class_sizes[c]}});
    j["classes"] = classes;
    nlohmann::json irr = nlohmann::json::array();
    for (size_t i = 0; i < rd.irreps.size(); ++i)
        irr.push_back({{"left", rd.irreps[i].left.parts()},
                       {"right", rd.irreps[i].right.parts()},
                       {"values", rd.irr_values[i]}});
    j["irreducibles"] = irr;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_calibrate(const std::string& out_path) {
    Calibration c = run_calibration();
    std::cout << "calibration selected: " << to_string(c.eta) << " (stable for t <= "
              << c.checked_t << ")\n";
    if (!out_path.empty()) {
        save_calibration(c, out_path);
        std::cout << "written to " << out_path << "\n";
    } else if (const char* env = std::getenv("SPINCOUNT_CALIBRATION")) {
        save_calibration(c, env);
        std::cout << "written to " << env << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts genuine special unipotent representations of spin groups, with an "
                 "exact character-theoretic cross-check"};
    app.require_subcommand(1);

    std::string group_text, orbit_text, family, out_path;
    bool verify = false, json = false;
    int max_n = 0, threads = 1, table_n = 2;

    auto* count = app.add_subcommand("count", "count for one group and dual orbit");
    count->add_option("--group", group_text, "Spin(p,q), Spin*(2n), or SpinC(m)")->required();
    count->add_option("--orbit", orbit_text, "partition '4,2,2' or 'col[2,1]', ':I/:II' label, "
                                             "';'-separated pair for SpinC")
        ->required();
    count->add_flag("--verify", verify, "force the cell-theoretic cross-check");
    count->add_flag("--json", json, "machine-readable output");

    auto* enumerate = app.add_subcommand("enumerate", "sweep all valid dual orbits");
    enumerate->add_option("--group", group_text, "a concrete group to sweep");
    enumerate->add_option("--family", family, "Spin or Spin* (with --max-n)");
    enumerate->add_option("--max-n", max_n, "rank bound for family sweeps");
    enumerate->add_flag("--verify", verify, "force the cell-theoretic cross-check");
    enumerate->add_flag("--json", json, "machine-readable output");
    enumerate->add_option("--threads", threads, "worker pool size");

    auto* cells = app.add_subcommand("cells", "print the attached cell data");
    cells->add_option("--group", group_text)->required();
    cells->add_option("--orbit", orbit_text)->required();
    cells->add_flag("--json", json, "machine-readable output");

    auto* chartable = app.add_subcommand("chartable", "character table of the rank-n group");
    chartable->add_option("--n", table_n, "rank")->required();

    auto* calibrate = app.add_subcommand("calibrate", "select the pair character and embedding");
    calibrate->add_option("--out", out_path, "write the selection to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return run_count(group_text, orbit_text, verify, json);
        if (enumerate->parsed())
            return run_enumerate(group_text, family, max_n, verify, json, threads);
        if (cells->parsed()) return run_cells(group_text, orbit_text, json);
        if (chartable->parsed()) return run_chartable(table_n);
        if (calibrate->parsed()) return run_calibrate(out_path);
    } catch (const spincount::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const spincount::VerificationError& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
