#ifndef CWKIT_VERIFY_HPP
#define CWKIT_VERIFY_HPP

#include <string>
#include <vector>

#include "cwkit/solver.hpp"

namespace cwkit {

enum class ClaimStatus { Verified, Refuted, Unknown, OutOfDeskScale };

struct ClaimCheck {
    std::string id;
    std::string params;
    ClaimStatus status = ClaimStatus::Unknown;
    double seconds = 0.0;
    std::string evidence;  // directory or "-"
    std::vector<std::string> notes;
};

enum class VerifyLevel { Smoke, Desk, Stretch };

struct VerifyOptions {
    std::vector<int> ks;           // restricts k where a claim is k-indexed
    std::string out_dir;           // evidence root; empty writes nothing
    Budget solver_budget{};        // per solver call
    Budget stretch_budget{3600.0, 200'000'000};
};

std::vector<std::string> known_claims();
std::string claim_description(const std::string& id);
ClaimCheck run_check(const std::string& id, const VerifyOptions& opt = {});
std::vector<ClaimCheck> run_all(VerifyLevel level, const VerifyOptions& opt = {});

std::string status_name(ClaimStatus s);
std::string summary_line(const ClaimCheck& c);  // tab-separated one-liner

}  // namespace cwkit

#endif
