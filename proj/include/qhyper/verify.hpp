#pragma once

#include <optional>
#include <string>

#include "qhyper/ncalg.hpp"

namespace qhyper {

enum class Verdict { member_exact, member_specialized, nonmember, inconclusive };

std::string verdict_name(Verdict v);

enum class MembershipMode { exact, specialize };

struct MembershipLimits {
    size_t max_basis_words = 200000;
    size_t max_rows = 1000000;
};

struct MembershipOptions {
    MembershipMode mode = MembershipMode::exact;
    int samples = 3;
    uint64_t seed = 12345;
    MembershipLimits limits;
};

struct MembershipReport {
    Verdict verdict = Verdict::inconclusive;
    std::string mode;  // "exact", "specialize", "exact-zero", "structural", "numeric"
    size_t basis_words = 0;
    size_t rows = 0;
    std::vector<Rat> sampled_q0;
    std::optional<Rat> witness_q0;
    uint64_t seed = 0;
    long millis = 0;
    std::string note;

    bool verified() const {
        return verdict == Verdict::member_exact || verdict == Verdict::member_specialized;
    }
};

// Decide whether a homogeneous element lies in the two-sided ideal generated
// by homogeneous degree-2 relations, each confined to one tensor component.
// Exact mode works over the rational-function field; specialize mode repeats
// the reduction at sampled rational points q0 = r^2.  The span is restricted
// to rows connected to the element's support, which loses nothing: rows
// outside the connected component project away coordinate-wise.
MembershipReport ideal_membership(const NCPoly& element, const std::vector<NCPoly>& relations,
                                  const MembershipOptions& opt = {});

// All elements must be members; dimensions aggregate by maximum.
MembershipReport ideal_membership_all(const std::vector<NCPoly>& elements,
                                      const std::vector<NCPoly>& relations,
                                      const MembershipOptions& opt = {});

// Serialization helper shared with the CLI: {id, params, verdict, mode,
// dims, seed, millis} plus optional extras.
std::string report_to_json(const std::string& id, const std::string& params,
                           const MembershipReport& report, bool include_millis = true);

} // namespace qhyper
