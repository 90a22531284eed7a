#pragma once

#include "spincount/coherent.hpp"
#include "spincount/orbits.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spincount {

struct Descriptor {
    std::string levi;        // empty when the Levi shape is undefined
    int n_characters = 0;    // orbit classes of genuine finite-order characters
    std::string structure;   // constituent structure of the induced module

    bool operator==(const Descriptor&) const = default;
};

struct CountReport {
    GroupSpec group;
    std::vector<DualOrbit> orbits; // one entry; two for the complex family
    long long count_tilde = 0;
    long long count_g = 0;
    std::optional<bool> sgn_twist_fixed; // absent when the sets are empty
    std::optional<long long> cell_count; // present when verification ran
    bool verified = false;
    Descriptor descriptor;
    double total_ms = 0.0;
    double cells_ms = 0.0;

    bool operator==(const CountReport&) const = default;
};

// Count of genuine special unipotent representations of the covering group.
long long count_tilde(const GroupSpec& g, const DualOrbit& o);

// Count for the spin group itself (Clifford theory applied to count_tilde).
long long count_spin(const GroupSpec& g, const DualOrbit& o);

// Complex spin groups carry none.
long long count_complex(const GroupSpec& g, const DualOrbit& left, const DualOrbit& right);

// Whether the sign twist fixes every member; throws InputError when the sets
// are empty.
bool sgn_twist_fixed(const GroupSpec& g, const DualOrbit& o);

// The cell-theoretic count: total multiplicity of the attached cell in the
// coherent continuation module, evaluated by the exact character engine.
long long count_via_cells(const GroupSpec& g, const DualOrbit& o,
                          int cutoff = kHardEngineCutoff);

// Full report; verify = run the cell route and reconcile (throws
// VerificationError on mismatch). verify_default picks n <= 5 automatically.
enum class VerifyMode { Default, Force, Off };
CountReport classify(const GroupSpec& g, const DualOrbit& o, VerifyMode mode = VerifyMode::Default);
CountReport classify_complex(const GroupSpec& g, const DualOrbit& left, const DualOrbit& right);

std::string report_to_json(const CountReport& r);
CountReport report_from_json(const std::string& text);
std::string report_to_text(const CountReport& r);

} // namespace spincount
