#pragma once

#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "vcflow/engine.hpp"

namespace vcflow {

struct FaultEvent {
    enum class Kind { NodeCrash, NodeRecover, Straggle, FileCorrupt, LicenseRevoke };
    Kind kind = Kind::NodeCrash;
    double at = 0.0;       // sim-time (Straggle applies from t=0)
    NodeId node;           // NodeCrash / NodeRecover
    TaskId task;           // Straggle
    double factor = 1.0;   // Straggle, >= 1
    LabelId label;         // FileCorrupt
    std::string license;   // LicenseRevoke
};

struct FaultScript {
    std::vector<FaultEvent> events;

    void validate() const;  // times nonnegative and ordered, factors >= 1
    static FaultScript from_json_text(const std::string& text);
};

// Deterministic event queue: pops ordered by (time, insertion sequence).
class SimClock {
public:
    double now() const { return now_; }

    void schedule(double at, std::function<void()> fn);
    bool step();  // pops and runs the next event; false when queue empty
    bool empty() const { return queue_.empty(); }

private:
    struct Entry {
        double at;
        std::uint64_t seq;
        std::function<void()> fn;
        bool operator>(const Entry& o) const {
            return at > o.at || (at == o.at && seq > o.seq);
        }
    };
    double now_ = 0.0;
    std::uint64_t seq_ = 0;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue_;
};

struct SavingsReport {
    double spend_s = 0.0;   // total sim compute-seconds consumed
    double waste_s = 0.0;   // compute-seconds rendered useless by the first violation
    double saved_s = 0.0;   // counterfactual spend avoided by static early abort
};

struct SimResult {
    RunResult run;
    SavingsReport savings;
    double counterfactual_spend_s = 0.0;
    bool counterfactual_ran = false;
};

// Engine semantics driven by a logical clock. Every task needs a SimProfile.
// When the run aborts on static checks, a counterfactual run with static VCs
// stripped (dynamic retained) is simulated to price the early abort.
SimResult simulate(const LogicalDaw& daw, const ClusterSpec& cluster,
                   const std::optional<Schedule>& schedule,
                   const std::vector<ValidityConstraint>& static_vcs,
                   const std::vector<ValidityConstraint>& dynamic_vcs, const EngineConfig& config,
                   const FaultScript& faults);

SavingsReport account(const SimResult& result);

}  // namespace vcflow
